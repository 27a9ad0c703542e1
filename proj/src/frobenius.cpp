#include "dgbv/frobenius.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "dgbv/exterior.hpp"

namespace dgbv {

namespace {

/* The whole exterior algebra as one coordinate space, subsets in canonical
 * (degree, tuple-lex) order. Degree-mixed forms live here. */
struct FullSpace {
	std::vector<Subset> list;
	std::map<Subset, std::size_t, SubsetLess> index;

	explicit FullSpace(int ngen) {
		for (int k = 0; k <= ngen; ++k)
			for (Subset s : degree_subsets(ngen, k)) {
				index[s] = list.size();
				list.push_back(s);
			}
	}

	std::vector<Rat> to_vec(const Form& f) const {
		std::vector<Rat> v(list.size());
		for (const auto& [s, c] : f.terms()) v[index.at(s)] = c;
		return v;
	}

	Form to_form(int ngen, const std::vector<Rat>& v) const {
		Form f(ngen);
		for (std::size_t i = 0; i < list.size(); ++i) f.add_term(list[i], v[i]);
		return f;
	}

	template <typename Op>
	Mat op_matrix(int ngen, Op&& op) const {
		Mat m(list.size(), list.size());
		for (std::size_t c = 0; c < list.size(); ++c) {
			Form f(ngen);
			f.add_term(list[c], 1);
			auto v = to_vec(op(f));
			for (std::size_t r = 0; r < list.size(); ++r) m(r, c) = v[r];
		}
		return m;
	}
};

struct MonoLess {
	bool operator()(const Monomial& a, const Monomial& b) const { return monomial_less(a, b); }
};

/* Group a series' terms by monomial into plain forms. */
std::map<Monomial, Form, MonoLess> by_monomial(const SeriesForm& f) {
	std::map<Monomial, Form, MonoLess> out;
	for (const auto& [key, c] : f.terms()) {
		auto it = out.find(key.mono);
		if (it == out.end()) it = out.emplace(key.mono, Form(f.ngen())).first;
		it->second.add_term(key.sub, c);
	}
	return out;
}

std::optional<Form> solve_dd(const FullSpace& space, const Mat& dd_mat, int ngen, const Form& r) {
	auto tau = solve(dd_mat, space.to_vec(r));
	if (!tau) return std::nullopt;
	return space.to_form(ngen, *tau);
}

}  // namespace

std::optional<Form> solve_d_delta(const Model& model, const Form& r) {
	int n = model.ngen();
	FullSpace space(n);
	Mat dd_mat = space.op_matrix(n, [&](const Form& f) { return d(model, delta(model, f)); });
	return solve_dd(space, dd_mat, n, r);
}

SeriesForm init_gamma1(const Model& model, const CohomologyBasis& basis, int order) {
	SeriesForm g(model.ngen(), basis.parities(), order);
	auto flat = basis.flat();
	for (std::size_t i = 0; i < flat.size(); ++i) {
		Monomial x{{{static_cast<int>(i), 1}}};
		for (const auto& [s, c] : flat[i].terms()) g.add_term(x, s, c);
	}
	return g;
}

MCSolution mc_solve(const Model& model, const CohomologyBasis& basis, int order) {
	if (order < 1) throw std::invalid_argument("mc_solve: order must be >= 1");
	if (!basis.all_harmonic)
		throw std::invalid_argument("mc_solve: cohomology basis is not harmonic");
	int n = model.ngen();
	auto vp = basis.parities();

	MCSolution sol;
	sol.order = order;
	SeriesForm gamma = init_gamma1(model, basis, order);
	SeriesForm corr(n, vp, order);

	FullSpace space(n);
	Mat dd_mat = space.op_matrix(n, [&](const Form& f) { return d(model, delta(model, f)); });
	RowSpace im_delta(
	    transpose(space.op_matrix(n, [&](const Form& f) { return delta(model, f); })));
	RowSpace ker_d(kernel(space.op_matrix(n, [&](const Form& f) { return d(model, f); })));

	for (int k = 2; k <= order; ++k) {
		SeriesForm rk = (bracket(model, gamma, gamma) * Rat(1, 2)).x_degree_part(k);
		SeriesForm bk(n, vp, order);
		for (const auto& [mono, r] : by_monomial(rk)) {
			std::string where = "order " + std::to_string(k);
			if (mono.exponent(0) > 0)
				throw std::logic_error("mc_solve: obstruction at " + where + " involves x^0");
			auto rv = space.to_vec(r);
			if (!ker_d.contains(rv))
				throw std::logic_error("mc_solve: obstruction at " + where + " is not d-closed");
			if (!im_delta.contains(rv))
				throw std::logic_error("mc_solve: obstruction at " + where +
				                       " is not Delta-exact");
			auto tau = solve_dd(space, dd_mat, n, r);
			if (!tau)
				throw std::logic_error("mc_solve: corrector equation at " + where +
				                       " has no solution");
			for (const auto& [s, c] : tau->terms()) bk.add_term(mono, s, -c);
		}
		SeriesForm gk = delta(model, bk);
		if (!(d(model, gk) + rk).is_zero())
			throw std::logic_error("mc_solve: order-" + std::to_string(k) +
			                       " correction does not cancel the obstruction");
		gamma = gamma + gk;
		corr = corr + bk;
	}

	sol.gamma = gamma;
	sol.corrector = corr;
	sol.residual = d(model, gamma) + bracket(model, gamma, gamma) * Rat(1, 2);
	return sol;
}

SeriesForm d_gamma(const Model& model, const SeriesForm& gamma, const SeriesForm& f) {
	return d(model, f) + bracket(model, gamma, f);
}

SeriesForm potential(const Model& model, const SeriesForm& gamma, const SeriesForm& corrector) {
	int cap = 3 * gamma.truncation_order();
	SeriesForm g = gamma.with_truncation(cap);
	SeriesForm b = corrector.with_truncation(cap);
	SeriesForm cube = wedge(wedge(g, g), g);
	SeriesForm cross = wedge(d(model, b), delta(model, b));
	return integral_series(model, cube * Rat(1, 6) - cross * Rat(1, 2));
}

Mat metric_matrix(const Model& model, const CohomologyBasis& basis) {
	auto flat = basis.flat();
	Mat g(flat.size(), flat.size());
	for (std::size_t i = 0; i < flat.size(); ++i)
		for (std::size_t j = 0; j < flat.size(); ++j)
			g(i, j) = integral(model, wedge(flat[i], flat[j]));
	return g;
}

StructureConstants structure_constants(const CohomologyBasis& basis, const Mat& metric_inv,
                                       const SeriesForm& phi, int order) {
	std::size_t r = basis.flat().size();
	StructureConstants sc;
	sc.certified_degree = order - 1;
	sc.a.assign(r, std::vector<std::vector<SeriesForm>>(r, std::vector<SeriesForm>(r)));

	/* Phi_{ijk} = deriv_i deriv_j deriv_k Phi (x^k stripped first). */
	std::vector<SeriesForm> dk(r);
	for (std::size_t k = 0; k < r; ++k) dk[k] = deriv(phi, static_cast<int>(k));
	for (std::size_t i = 0; i < r; ++i) {
		for (std::size_t j = 0; j < r; ++j) {
			std::vector<SeriesForm> dji(r);
			for (std::size_t k = 0; k < r; ++k)
				dji[k] = deriv(deriv(dk[k], static_cast<int>(j)), static_cast<int>(i));
			for (std::size_t l = 0; l < r; ++l) {
				SeriesForm acc;
				bool first = true;
				for (std::size_t k = 0; k < r; ++k) {
					if (metric_inv(k, l) == 0) continue;
					SeriesForm term = dji[k] * metric_inv(k, l);
					acc = first ? term : acc + term;
					first = false;
				}
				if (first) acc = dji[0] * Rat(0);
				sc.a[i][j][l] = acc;
			}
		}
	}
	return sc;
}

std::vector<std::vector<std::vector<Rat>>> sc_at_zero(const StructureConstants& sc) {
	std::size_t r = sc.a.size();
	std::vector<std::vector<std::vector<Rat>>> out(
	    r, std::vector<std::vector<Rat>>(r, std::vector<Rat>(r)));
	for (std::size_t i = 0; i < r; ++i)
		for (std::size_t j = 0; j < r; ++j)
			for (std::size_t l = 0; l < r; ++l)
				out[i][j][l] = at_zero(sc.a[i][j][l]).coeff(0);
	return out;
}

std::vector<std::vector<std::vector<Rat>>> sc_cocycle(const Model& model,
                                                      const CohomologyBasis& basis) {
	int n = model.ngen();
	auto flat = basis.flat();
	auto degs = basis.degrees();
	std::size_t r = flat.size();

	/* Per degree: the exact subspace, reduced representatives (as solver
	 * matrix), and the global index of each representative. */
	auto dd = [&](const Form& f) { return d(model, f); };
	std::vector<RowSpace> im_d(n + 1, RowSpace(std::size_t(0)));
	std::vector<Mat> reps(n + 1);
	std::vector<std::vector<std::size_t>> glob(n + 1);
	for (int k = 0; k <= n; ++k) {
		im_d[k] = (k == 0) ? RowSpace(degree_subsets(n, 0).size())
		                   : image_space(model, k - 1, k, dd);
		reps[k] = Mat(0, degree_subsets(n, k).size());
	}
	for (std::size_t i = 0; i < r; ++i) {
		int k = degs[i];
		reps[k].append_row(im_d[k].reduce(form_to_vec(flat[i], k)));
		glob[k].push_back(i);
	}

	std::vector<std::vector<std::vector<Rat>>> out(
	    r, std::vector<std::vector<Rat>>(r, std::vector<Rat>(r)));
	for (std::size_t i = 0; i < r; ++i) {
		for (std::size_t j = 0; j < r; ++j) {
			int k = degs[i] + degs[j];
			if (k > n) continue;
			Form w = wedge(flat[i], flat[j]);
			auto rv = im_d[k].reduce(form_to_vec(w, k));
			auto x = solve(transpose(reps[k]), rv);
			if (!x)
				throw std::logic_error(
				    "sc_cocycle: closed product not expressible in the class basis");
			for (std::size_t t = 0; t < glob[k].size(); ++t) out[i][j][glob[k][t]] = (*x)[t];
		}
	}
	return out;
}

WdvvResult wdvv_check(const CohomologyBasis& basis, const StructureConstants& sc,
                      int through_degree) {
	auto pars = basis.parities();
	std::size_t r = sc.a.size();
	WdvvResult res;
	res.through_degree = through_degree;

	auto equal_through = [&](const SeriesForm& a, const SeriesForm& b) {
		SeriesForm diff = a - b;
		for (int deg = 0; deg <= through_degree; ++deg)
			if (!diff.x_degree_part(deg).is_zero()) return false;
		return true;
	};

	for (std::size_t i = 0; i < r && res.pass; ++i)
		for (std::size_t j = 0; j < r && res.pass; ++j)
			for (std::size_t k = 0; k < r && res.pass; ++k)
				for (std::size_t s = 0; s < r && res.pass; ++s) {
					SeriesForm lhs, rhs;
					bool l_first = true, r_first = true;
					for (std::size_t l = 0; l < r; ++l) {
						if (!sc.a[i][j][l].is_zero() && !sc.a[l][k][s].is_zero()) {
							SeriesForm t = wedge(sc.a[i][j][l], sc.a[l][k][s]);
							lhs = l_first ? t : lhs + t;
							l_first = false;
						}
						if (!sc.a[j][k][l].is_zero() && !sc.a[i][l][s].is_zero()) {
							SeriesForm t = wedge(sc.a[j][k][l], sc.a[i][l][s]);
							int sign = pars[i] & (pars[j] ^ pars[k] ^ pars[l]);
							if (sign) t = -t;
							rhs = r_first ? t : rhs + t;
							r_first = false;
						}
					}
					if (l_first && r_first) continue;
					if (l_first) lhs = rhs * Rat(0);
					if (r_first) rhs = lhs * Rat(0);
					if (!equal_through(lhs, rhs)) {
						res.pass = false;
						res.fail_at = {static_cast<int>(i), static_cast<int>(j),
						               static_cast<int>(k), static_cast<int>(s)};
					}
				}
	return res;
}

FrobeniusData frobenius_build(const Model& model, int order) {
	FrobeniusData out;
	out.basis = cohomology_d(model);
	LefschetzReport lef = hard_lefschetz_check(model, out.basis);
	if (!lef.pass)
		throw std::invalid_argument("frobenius: hard Lefschetz fails at power " +
		                            std::to_string(lef.first_failure) +
		                            "; the construction's precondition does not hold");

	out.mc = mc_solve(model, out.basis, order);
	out.metric = metric_matrix(model, out.basis);
	out.metric_inv = inverse(out.metric);
	out.phi = potential(model, out.mc.gamma, out.mc.corrector);
	out.certified_degree = order + 2;
	out.sc = structure_constants(out.basis, out.metric_inv, out.phi, order);
	out.at_origin = sc_at_zero(out.sc);
	out.cocycle_at_origin = sc_cocycle(model, out.basis);
	out.product_agree = (out.at_origin == out.cocycle_at_origin);
	out.wdvv = wdvv_check(out.basis, out.sc, order - 1);
	return out;
}

}  // namespace dgbv
