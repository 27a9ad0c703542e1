#pragma once

#include <array>
#include <optional>
#include <vector>

#include "dgbv/cohomology.hpp"
#include "dgbv/linalg.hpp"
#include "dgbv/model.hpp"
#include "dgbv/series.hpp"

namespace dgbv {

/* Maurer-Cartan solution through a fixed x-degree N:
 *   Gamma = Gamma_1 + ... + Gamma_N,   d Gamma + 1/2 [Gamma . Gamma] = 0,
 * with Gamma_1 = sum_i x^i c_i over the harmonic cohomology basis and
 * Gamma_n = Delta(B_n) for n >= 2. One formal variable per class; the
 * variable carries the parity of its class, so Gamma is even. */
struct MCSolution {
	int order = 0;
	SeriesForm gamma;
	SeriesForm corrector;  // B = sum_{n>=2} B_n with Gamma_n = Delta(B_n)
	SeriesForm residual;   // d Gamma + 1/2 [Gamma . Gamma]; zero through order
};

/* Gamma_1 = sum_i x^i c_i at the given truncation. */
SeriesForm init_gamma1(const Model& model, const CohomologyBasis& basis, int order);

/* Order-by-order solve. At order n the obstruction
 *   R_n = (1/2) [Gamma . Gamma] |_{x-degree n}
 * is checked to be x^0-free, d-closed, and Delta-exact; then d Delta tau = r
 * is solved per monomial and B_n = -sum tau, Gamma_n = Delta(B_n), which
 * gives d Gamma_n = -R_n. Throws std::logic_error when an obstruction
 * fails a check or a corrector equation has no solution. */
MCSolution mc_solve(const Model& model, const CohomologyBasis& basis, int order);

/* The corrector equation d Delta tau = r, solved exactly over the whole
 * (degree-mixed) form space; canonical particular solution with zero free
 * variables, nullopt when r is outside Im(d Delta). This is the per-monomial
 * step inside mc_solve. */
std::optional<Form> solve_d_delta(const Model& model, const Form& r);

/* Twisted differential d_Gamma(f) = d f + [Gamma . f]; squares to zero
 * through the truncation order whenever Gamma solves Maurer-Cartan. */
SeriesForm d_gamma(const Model& model, const SeriesForm& gamma, const SeriesForm& f);

/* Potential
 *   Phi = int( 1/6 Gamma^3  -  1/2 d(B) ^ Delta(B) ),
 * evaluated with the truncation cap raised to 3N so that no product of
 * computed terms is dropped. Coefficients are exact through x-degree N+2;
 * callers decide how much of the tail to trust. Exposed on an explicit
 * (gamma, corrector) pair so synthetic inputs can be fed. */
SeriesForm potential(const Model& model, const SeriesForm& gamma, const SeriesForm& corrector);

/* Poincare pairing g_{ij} = int c_i ^ c_j over the cohomology basis. */
Mat metric_matrix(const Model& model, const CohomologyBasis& basis);

/* Structure constants A_{ij}^l(x) = sum_k Phi_{ijk}(x) g^{kl}, where
 * Phi_{ijk} applies the left derivative by x^k first, then x^j, then x^i.
 * Coefficients are trusted through x-degree certified_degree = N - 1. */
struct StructureConstants {
	std::vector<std::vector<std::vector<SeriesForm>>> a;  // a[i][j][l], scalar series
	int certified_degree = 0;
};

StructureConstants structure_constants(const CohomologyBasis& basis, const Mat& metric_inv,
                                       const SeriesForm& phi, int order);

/* A_{ij}^l at x = 0, from the potential. */
std::vector<std::vector<std::vector<Rat>>> sc_at_zero(const StructureConstants& sc);

/* A_{ij}^l at x = 0 computed independently: expand the class of c_i ^ c_j
 * in the representative basis (reduce modulo exact forms, solve). */
std::vector<std::vector<std::vector<Rat>>> sc_cocycle(const Model& model,
                                                      const CohomologyBasis& basis);

/* Associativity of the induced product, with super signs:
 *   sum_l A_{ij}^l A_{lk}^s  ==  sum_l (-1)^{p_i (p_j + p_k + p_l)} A_{jk}^l A_{il}^s
 * for all (i, j, k, s), compared through x-degree through_degree. */
struct WdvvResult {
	bool pass = true;
	int through_degree = 0;
	std::array<int, 4> fail_at{-1, -1, -1, -1};  // first failing (i, j, k, s)
};

WdvvResult wdvv_check(const CohomologyBasis& basis, const StructureConstants& sc,
                      int through_degree);

struct FrobeniusData {
	CohomologyBasis basis;
	MCSolution mc;
	Mat metric;
	Mat metric_inv;
	SeriesForm phi;             // full computed series (cap 3N)
	int certified_degree = 0;   // x-degrees of phi trusted: <= order + 2
	StructureConstants sc;
	std::vector<std::vector<std::vector<Rat>>> at_origin;
	std::vector<std::vector<std::vector<Rat>>> cocycle_at_origin;
	bool product_agree = false;
	WdvvResult wdvv;
};

/* Full construction. Throws std::invalid_argument when the model fails hard
 * Lefschetz (precondition) and std::logic_error on internal inconsistency
 * in the solve itself. Disagreement between the two product computations or
 * a WDVV failure is reported in the returned data, not thrown. */
FrobeniusData frobenius_build(const Model& model, int order);

}  // namespace dgbv
