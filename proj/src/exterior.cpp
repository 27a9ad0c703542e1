#include "dgbv/exterior.hpp"

#include <stdexcept>

namespace dgbv {

Form d(const Model& model, const Form& f) {
	if (f.ngen() != model.ngen()) throw std::invalid_argument("d: model mismatch");
	Form out(model.ngen());
	/* d f = sum_k (d e^k) ^ iota_k(f); only generators with d e^k != 0 matter. */
	for (int k = 1; k <= model.ngen(); ++k) {
		const Form& dk = model.d_gen(k);
		if (dk.is_zero()) continue;
		Form ik = contract(f, k);
		if (ik.is_zero()) continue;
		out = out + wedge(dk, ik);
	}
	return out;
}

Form lstar(const Model& model, const Form& f) {
	if (f.ngen() != model.ngen()) throw std::invalid_argument("lstar: model mismatch");
	const Mat& inv = model.omega_inv();
	Form out(model.ngen());
	for (int a = 1; a <= model.ngen(); ++a) {
		for (int b = 1; b <= model.ngen(); ++b) {
			const Rat& w = inv(a - 1, b - 1);
			if (w == 0) continue;
			Form g = contract(contract(f, b), a);
			if (g.is_zero()) continue;
			out = out + g * w;
		}
	}
	return out;
}

Form delta(const Model& model, const Form& f) {
	return lstar(model, d(model, f)) - d(model, lstar(model, f));
}

Rat pairing(const Model& model, const Form& f, const Form& g) {
	if (f.ngen() != model.ngen() || g.ngen() != model.ngen())
		throw std::invalid_argument("pairing: model mismatch");
	const Mat& inv = model.omega_inv();
	Rat out = 0;
	for (const auto& [s, cs] : f.terms()) {
		for (const auto& [t, ct] : g.terms()) {
			if (subset_size(s) != subset_size(t)) continue;
			auto si = subset_indices(s), ti = subset_indices(t);
			std::size_t k = si.size();
			Mat block(k, k);
			for (std::size_t a = 0; a < k; ++a)
				for (std::size_t b = 0; b < k; ++b) block(a, b) = inv(si[a] - 1, ti[b] - 1);
			out += cs * ct * det(block);
		}
	}
	return out;
}

Rat integral(const Model& model, const Form& f) {
	if (f.ngen() != model.ngen()) throw std::invalid_argument("integral: model mismatch");
	return f.coeff(model.top_subset());
}

Form star(const Model& model, const Form& f) {
	if (f.ngen() != model.ngen()) throw std::invalid_argument("star: model mismatch");
	auto deg = f.degree();
	if (!deg) throw std::invalid_argument("star: degree-inhomogeneous argument");
	if (f.is_zero()) return Form(model.ngen());
	int n = model.ngen(), k = *deg;
	Rat mu = integral(model, model.volume_form());
	if (mu == 0) throw std::logic_error("star: volume form vanishes (degenerate omega)");
	/* beta ^ (star f) = <beta, f> omega^m/m! decouples per complement pair:
	 * for beta = e^S the only contribution is the coefficient on S^c. */
	Form out(n);
	Subset top = model.top_subset();
	for (Subset s = 0; s <= top; ++s) {
		if (subset_size(s) != k) continue;
		Form beta(n);
		beta.add_term(s, 1);
		Rat p = pairing(model, beta, f);
		if (p == 0) continue;
		Subset comp = top & ~s;
		out.add_term(comp, p * mu * merge_sign(s, comp));
	}
	return out;
}

Form bracket(const Model& model, const Form& f, const Form& g) {
	auto pf = f.parity();
	if (!pf) throw std::invalid_argument("bracket: first argument must be parity-homogeneous");
	Rat sign = (*pf & 1) ? -1 : 1;
	Form fg = wedge(f, g);
	return (delta(model, fg) - wedge(delta(model, f), g)) * sign - wedge(f, delta(model, g));
}

}  // namespace dgbv
