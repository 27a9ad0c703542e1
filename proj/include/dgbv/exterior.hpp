#pragma once

#include "dgbv/form.hpp"
#include "dgbv/model.hpp"

namespace dgbv {

/* The odd derivation d: extends the structure constants by the graded
 * Leibniz rule; d f = sum_k (d e^k) ^ iota_k(f). */
Form d(const Model& model, const Form& f);

/* lstar = sum over ordered pairs (a,b) of omega^{ab} iota_a iota_b; degree -2.
 * The full double sum is kept as-is (it differs from the classical dual
 * Lefschetz operator by a factor of 2; nothing downstream renormalizes). */
Form lstar(const Model& model, const Form& f);

/* delta = lstar d - d lstar; odd, degree -1, squares to zero on valid models. */
Form delta(const Model& model, const Form& f);

/* Pairing of homogeneous degrees via det(omega^{i_a j_b}); zero across
 * different degrees. */
Rat pairing(const Model& model, const Form& f, const Form& g);

/* Coefficient of the top basis form e^1 ^ ... ^ e^{2m} (so the integral of
 * the top basis form is 1). */
Rat integral(const Model& model, const Form& f);

/* Symplectic star: the unique solution of beta ^ (star f) =
 * <beta, f> omega^m / m! over all beta of matching degree. Requires a
 * degree-homogeneous argument. */
Form star(const Model& model, const Form& f);

/* Odd bracket [f*g] = (-1)^|f| delta(f g) - (-1)^|f| delta(f) g - f delta(g);
 * f must be parity-homogeneous. */
Form bracket(const Model& model, const Form& f, const Form& g);

}  // namespace dgbv
