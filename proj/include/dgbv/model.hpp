#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgbv/form.hpp"
#include "dgbv/linalg.hpp"

namespace dgbv {

/* d e^k = sum of c * e^i ^ e^j entries, i < j. */
struct DiffEntry {
	int k, i, j;
	Rat c;
};

/* omega = sum of c * e^a ^ e^b entries, a < b. */
struct OmegaEntry {
	int a, b;
	Rat c;
};

/* Finite-dimensional model: the exterior algebra on 2m generators with an odd
 * derivation d given by structure constants and a constant symplectic form.
 * Construction caches d on generators and the inverse omega matrix (absent
 * when omega is degenerate; operators needing it then throw). */
class Model {
 public:
	Model(std::string name, int m, std::vector<DiffEntry> diff, std::vector<OmegaEntry> omega);

	const std::string& name() const { return name_; }
	int m() const { return m_; }
	int ngen() const { return 2 * m_; }
	const std::vector<DiffEntry>& diff() const { return diff_; }
	const std::vector<OmegaEntry>& omega() const { return omega_; }

	const Form& d_gen(int k) const { return d_gen_[k - 1]; }  // d e^k
	const Mat& omega_mat() const { return omega_mat_; }
	bool omega_invertible() const { return omega_inv_.has_value(); }
	const Mat& omega_inv() const;  // throws when degenerate

	Form omega_form() const;
	const Form& volume_form() const { return volume_; }  // omega^m / m!
	Subset top_subset() const { return (Subset(1) << ngen()) - 1; }

 private:
	std::string name_;
	int m_;
	std::vector<DiffEntry> diff_;
	std::vector<OmegaEntry> omega_;
	std::vector<Form> d_gen_;
	Mat omega_mat_;
	std::optional<Mat> omega_inv_;
	Form volume_;
};

Model build_torus(int m);
Model build_kodaira_thurston();

struct ValidationCheck {
	std::string name;
	bool pass;
	std::string detail;
};

struct ValidationReport {
	std::vector<ValidationCheck> checks;
	bool all_pass() const;
	std::string first_failure() const;
};

/* The six structural checks, exhaustively on the full form basis:
 * d^2 = 0, d omega = 0, omega invertible, Delta^2 = 0,
 * Delta d + d Delta = 0, integral(d .) = 0 in degree 2m-1. */
ValidationReport validate(const Model& model);

}  // namespace dgbv
