#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dgbv/exterior.hpp"
#include "dgbv/form.hpp"
#include "dgbv/model.hpp"

namespace dgbv {

/* Monomial in the formal variables x^0, x^1, ...; factors sorted by variable
 * index, exponents >= 1. Odd variables never carry exponent > 1 (such terms
 * vanish and are never stored). */
struct Monomial {
	std::vector<std::pair<int, int>> factors;  // (variable, exponent)

	int degree() const;
	bool empty() const { return factors.empty(); }
	int exponent(int var) const;
	bool operator==(const Monomial&) const = default;
};

/* Total degree first, then lexicographic on the factor list. */
bool monomial_less(const Monomial& a, const Monomial& b);

int monomial_parity(const Monomial& m, const std::vector<std::uint8_t>& var_parity);

/* Product with Koszul sign (odd-variable inversions); nullopt when an odd
 * variable repeats. */
std::optional<std::pair<Monomial, int>> monomial_mul(const Monomial& a, const Monomial& b,
                                                     const std::vector<std::uint8_t>& var_parity);

struct SeriesKey {
	Monomial mono;
	Subset sub;

	bool operator==(const SeriesKey&) const = default;
};

struct SeriesKeyLess {
	bool operator()(const SeriesKey& a, const SeriesKey& b) const;
};

/* Element of K tensor Omega, K the free supercommutative algebra on the x^i,
 * truncated at a total x-degree. The variable parities travel with the value;
 * binary operations require identical parity tables. Terms pushed above the
 * truncation order are dropped and recorded in truncated(). */
class SeriesForm {
 public:
	SeriesForm() = default;
	SeriesForm(int ngen, std::vector<std::uint8_t> var_parity, int truncation);

	static SeriesForm from_form(const Form& f, std::vector<std::uint8_t> var_parity,
	                            int truncation);

	int ngen() const { return ngen_; }
	int truncation_order() const { return trunc_; }
	bool truncated() const { return truncated_; }
	int var_count() const { return static_cast<int>(var_parity_.size()); }
	const std::vector<std::uint8_t>& var_parity() const { return var_parity_; }
	const std::map<SeriesKey, Rat, SeriesKeyLess>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	void add_term(const Monomial& m, Subset s, const Rat& c);
	Rat coeff(const Monomial& m, Subset s) const;
	void mark_truncated() { truncated_ = true; }

	/* Same terms under a different truncation cap; lowering the cap drops
	 * terms (and flags), raising it never invents data. */
	SeriesForm with_truncation(int truncation) const;
	/* Terms of exact total x-degree n. */
	SeriesForm x_degree_part(int n) const;

	/* Total parity (x-parity + form degree); nullopt when mixed. */
	std::optional<int> parity() const;

	SeriesForm operator+(const SeriesForm&) const;
	SeriesForm operator-(const SeriesForm&) const;
	SeriesForm operator-() const;
	SeriesForm operator*(const Rat&) const;
	bool operator==(const SeriesForm&) const = default;

 private:
	int ngen_ = 0;
	int trunc_ = 0;
	bool truncated_ = false;
	std::vector<std::uint8_t> var_parity_;
	std::map<SeriesKey, Rat, SeriesKeyLess> terms_;

	friend SeriesForm wedge(const SeriesForm&, const SeriesForm&);
};

/* Product with full Koszul bookkeeping: the incoming monomial commutes past
 * the left factor's form part, odd variables anticommute among themselves. */
SeriesForm wedge(const SeriesForm& f, const SeriesForm& g);

/* Coefficientwise operators, with the sign (-1)^{x-parity} for odd operators
 * acting through a monomial. */
SeriesForm d(const Model& model, const SeriesForm& f);
SeriesForm lstar(const Model& model, const SeriesForm& f);
SeriesForm delta(const Model& model, const SeriesForm& f);

/* Same formula as the Form bracket, graded by total parity. */
SeriesForm bracket(const Model& model, const SeriesForm& f, const SeriesForm& g);

/* Left derivative: sign-commute one x^var to the front of the monomial, then
 * strip it. */
SeriesForm deriv(const SeriesForm& f, int var);

/* Specialization x = 0. */
Form at_zero(const SeriesForm& f);

/* Scalar-valued series (terms with empty subset) collecting the integral of
 * each coefficient form. */
SeriesForm integral_series(const Model& model, const SeriesForm& f);

}  // namespace dgbv
