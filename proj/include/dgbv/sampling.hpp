#pragma once

#include <cstdint>
#include <random>

#include "dgbv/form.hpp"
#include "dgbv/model.hpp"

namespace dgbv {

/* Seeded generator for property-based sampling. Identical seeds give
 * identical streams; coefficients stay small so exact arithmetic stays
 * cheap. */
class Sampler {
 public:
	explicit Sampler(std::uint64_t seed) : rng_(seed) {}

	std::uint64_t raw() { return rng_(); }
	int uniform(int lo, int hi);  // inclusive
	Rat coefficient();            // small numerator, denominator in {1, 2, 3}

	/* Random form of the given degree (possibly zero). */
	Form form_of_degree(const Model& model, int degree);
	/* Random nonzero parity-homogeneous form: picks a parity, mixes degrees. */
	Form homogeneous_form(const Model& model);
	Form homogeneous_form(const Model& model, int parity);

	/* A valid model obtained from `base` by a random invertible change of
	 * generators (a product of elementary shears, det = 1): the differential
	 * and symplectic form are transported, so every validation invariant and
	 * every rank-level property is preserved. */
	Model basis_changed_model(const Model& base, int shears);

 private:
	std::mt19937_64 rng_;
};

}  // namespace dgbv
