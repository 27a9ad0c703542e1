#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <vector>

#include "dgbv/rational.hpp"

namespace dgbv {

/* Basis monomials e^{i1} ^ ... ^ e^{ik} (i1 < ... < ik, generators 1-based)
 * are stored as bitmasks: bit (i-1) set iff e^i is a factor. */
using Subset = std::uint32_t;

int subset_size(Subset s);
bool subsets_overlap(Subset s, Subset t);
/* Sign of sorting the concatenation (s, t) into ascending order; s, t disjoint. */
int merge_sign(Subset s, Subset t);
/* Position (1-based) of generator a within the ascending factor list of s. */
int subset_position(Subset s, int a);
std::vector<int> subset_indices(Subset s);
Subset subset_from_indices(const std::vector<int>& idx, int ngen);  // throws on dup/oob

/* Degree first, then lexicographic on the ascending index tuple. */
struct SubsetLess {
	bool operator()(Subset a, Subset b) const;
};

/* Element of the exterior algebra on 2m generators, exact rational
 * coefficients. Zero coefficients are never stored. */
class Form {
 public:
	Form() = default;
	explicit Form(int ngen) : ngen_(ngen) {}

	static Form unit(int ngen) { return scalar(ngen, 1); }
	static Form scalar(int ngen, const Rat& c);
	static Form basis(int ngen, std::initializer_list<int> idx);
	static Form basis(int ngen, const std::vector<int>& idx);

	int ngen() const { return ngen_; }
	bool is_zero() const { return terms_.empty(); }
	const std::map<Subset, Rat, SubsetLess>& terms() const { return terms_; }

	void add_term(Subset s, const Rat& c);
	Rat coeff(Subset s) const;

	/* Homogeneous degree / parity; nullopt when mixed. The zero form counts as
	 * homogeneous of degree 0. */
	std::optional<int> degree() const;
	std::optional<int> parity() const;

	Form operator+(const Form&) const;
	Form operator-(const Form&) const;
	Form operator-() const;
	Form operator*(const Rat&) const;
	bool operator==(const Form&) const = default;

 private:
	int ngen_ = 0;
	std::map<Subset, Rat, SubsetLess> terms_;
};

/* Exterior product with the usual sign rules. Throws on generator-count
 * mismatch. */
Form wedge(const Form& f, const Form& g);

/* Contraction (odd derivation) against the a-th dual vector, 1-based:
 * iota_a(e^{i1...ik}) = sum_j (-1)^(j-1) [i_j == a] e^{...î_j...}. */
Form contract(const Form& f, int a);

}  // namespace dgbv
