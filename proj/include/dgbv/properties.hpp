#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dgbv/model.hpp"

namespace dgbv {

struct PropertyOutcome {
	std::string name;
	int samples = 0;
	bool pass = true;
	std::string detail;  // first counterexample, when failing
};

/* Bracket axioms on seeded random parity-homogeneous triples f, g, h:
 *   a) [f.g] = -(-1)^{(f~+1)(g~+1)} [g.f]
 *   b) [f.[g.h]] = [[f.g].h] + (-1)^{(f~+1)(g~+1)} [g.[f.h]]
 *   c) [f.gh] = [f.g] h + (-1)^{g~(f~+1)} g [f.h]
 *   d) D[f.g] = [Df.g] + (-1)^{f~+1} [f.Dg]   for D = Delta and D = d
 * plus the parity law par([f.g]) = f~ + g~ + 1. */
std::vector<PropertyOutcome> bracket_axiom_suite(const Model& model, std::uint64_t seed,
                                                 int trials);

/* Integral identities on seeded random parity-homogeneous pairs:
 *   int(d a ^ b) + (-1)^{a~} int(a ^ d b) = 0
 *   int(Delta a ^ b) - (-1)^{a~} int(a ^ Delta b) = 0 */
std::vector<PropertyOutcome> adjointness_suite(const Model& model, std::uint64_t seed,
                                               int trials);

bool all_pass(const std::vector<PropertyOutcome>& outcomes);

}  // namespace dgbv
