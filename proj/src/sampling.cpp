#include "dgbv/sampling.hpp"

#include <stdexcept>

#include "dgbv/cohomology.hpp"
#include "dgbv/exterior.hpp"
#include "dgbv/linalg.hpp"

namespace dgbv {

int Sampler::uniform(int lo, int hi) {
	return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Rat Sampler::coefficient() {
	int num = uniform(-3, 3);
	int den = uniform(1, 3);
	return Rat(num, den);
}

Form Sampler::form_of_degree(const Model& model, int degree) {
	Form f(model.ngen());
	for (Subset s : degree_subsets(model.ngen(), degree)) f.add_term(s, coefficient());
	return f;
}

Form Sampler::homogeneous_form(const Model& model) {
	return homogeneous_form(model, uniform(0, 1));
}

Form Sampler::homogeneous_form(const Model& model, int parity) {
	for (int attempt = 0; attempt < 32; ++attempt) {
		Form f(model.ngen());
		for (int k = parity & 1; k <= model.ngen(); k += 2)
			f = f + form_of_degree(model, k);
		if (!f.is_zero()) return f;
	}
	/* All-zero draws 32 times in a row: fall back to a deterministic pick. */
	return parity & 1 ? Form::basis(model.ngen(), {1})
	                  : Form::unit(model.ngen());
}

namespace {

/* Apply the generator substitution e^b -> sum_c M(b-1, c-1) f^c
 * multiplicatively to a form. */
Form substitute(const Mat& sub, const Form& f) {
	int n = static_cast<int>(sub.rows());
	Form out(n);
	for (const auto& [s, c] : f.terms()) {
		Form acc = Form::scalar(n, c);
		for (int idx : subset_indices(s)) {
			Form gen(n);
			for (int t = 1; t <= n; ++t) {
				const Rat& v = sub(idx - 1, t - 1);
				if (v != 0) gen.add_term(Subset(1) << (t - 1), v);
			}
			acc = wedge(acc, gen);
		}
		out = out + acc;
	}
	return out;
}

}  // namespace

Model Sampler::basis_changed_model(const Model& base, int shears) {
	int n = base.ngen();
	Mat u = Mat::identity(n);
	for (int s = 0; s < shears; ++s) {
		int i = uniform(0, n - 1), j = uniform(0, n - 1);
		if (i == j) continue;
		int c = uniform(-2, 2);
		if (c == 0) c = 1;
		for (int t = 0; t < n; ++t) u(i, t) += Rat(c) * u(j, t);
	}
	Mat v = inverse(u);

	/* New generator f^k corresponds to u_k = sum_b U(k,b) e^b; its
	 * differential is d(u_k) rewritten in the f-basis via e^b = V f. */
	std::vector<DiffEntry> diff;
	for (int k = 1; k <= n; ++k) {
		Form uk(n);
		for (int b = 1; b <= n; ++b)
			if (u(k - 1, b - 1) != 0) uk.add_term(Subset(1) << (b - 1), u(k - 1, b - 1));
		Form dk = substitute(v, d(base, uk));
		for (const auto& [s, c] : dk.terms()) {
			auto idx = subset_indices(s);
			diff.push_back({k, idx[0], idx[1], c});
		}
	}
	std::vector<OmegaEntry> omega;
	Form w = substitute(v, base.omega_form());
	for (const auto& [s, c] : w.terms()) {
		auto idx = subset_indices(s);
		omega.push_back({idx[0], idx[1], c});
	}
	return Model(base.name() + "+basis-change", base.m(), std::move(diff), std::move(omega));
}

}  // namespace dgbv
