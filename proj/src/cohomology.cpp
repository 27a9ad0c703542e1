#include "dgbv/cohomology.hpp"

#include <stdexcept>

namespace dgbv {

std::vector<Subset> degree_subsets(int ngen, int k) {
	std::vector<Subset> out;
	if (k < 0 || k > ngen) return out;
	/* Tuple-lex order: recursive choice of the smallest index first. */
	std::vector<int> pick;
	auto rec = [&](auto&& self, int next, int remaining) -> void {
		if (remaining == 0) {
			out.push_back(subset_from_indices(pick, ngen));
			return;
		}
		for (int i = next; i <= ngen - remaining + 1; ++i) {
			pick.push_back(i);
			self(self, i + 1, remaining - 1);
			pick.pop_back();
		}
	};
	rec(rec, 1, k);
	return out;
}

std::vector<Rat> form_to_vec(const Form& f, int k) {
	auto basis = degree_subsets(f.ngen(), k);
	std::map<Subset, std::size_t, SubsetLess> index;
	for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
	std::vector<Rat> v(basis.size());
	for (const auto& [s, c] : f.terms()) {
		auto it = index.find(s);
		if (it == index.end()) throw std::invalid_argument("form_to_vec: degree mismatch");
		v[it->second] = c;
	}
	return v;
}

Form vec_to_form(int ngen, int k, const std::vector<Rat>& v) {
	auto basis = degree_subsets(ngen, k);
	if (v.size() != basis.size()) throw std::invalid_argument("vec_to_form: size mismatch");
	Form f(ngen);
	for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], v[i]);
	return f;
}

Mat operator_matrix(const Model& model, int k_in, int k_out,
                    const std::function<Form(const Form&)>& op) {
	auto src = degree_subsets(model.ngen(), k_in);
	auto dst = degree_subsets(model.ngen(), k_out);
	Mat m(dst.size(), src.size());
	for (std::size_t c = 0; c < src.size(); ++c) {
		Form f(model.ngen());
		f.add_term(src[c], 1);
		Form g = op(f);
		auto v = form_to_vec(g, k_out);
		for (std::size_t r = 0; r < dst.size(); ++r) m(r, c) = v[r];
	}
	return m;
}

RowSpace kernel_space(const Model& model, int k_in, int k_out,
                      const std::function<Form(const Form&)>& op) {
	return RowSpace(kernel(operator_matrix(model, k_in, k_out, op)));
}

RowSpace image_space(const Model& model, int k_in, int k_out,
                     const std::function<Form(const Form&)>& op) {
	return RowSpace(transpose(operator_matrix(model, k_in, k_out, op)));
}

std::vector<Form> CohomologyBasis::flat() const {
	std::vector<Form> out;
	for (const auto& deg : by_degree)
		for (const auto& c : deg) out.push_back(c.rep);
	return out;
}

std::vector<int> CohomologyBasis::degrees() const {
	std::vector<int> out;
	for (std::size_t k = 0; k < by_degree.size(); ++k)
		for (std::size_t i = 0; i < by_degree[k].size(); ++i) out.push_back(static_cast<int>(k));
	return out;
}

std::vector<std::uint8_t> CohomologyBasis::parities() const {
	std::vector<std::uint8_t> out;
	for (int d : degrees()) out.push_back(static_cast<std::uint8_t>(d & 1));
	return out;
}

int CohomologyBasis::total_rank() const {
	int r = 0;
	for (int b : betti) r += b;
	return r;
}

namespace {

/* Canonical representatives of Z/B: walk the echelon basis of Z, keep the
 * vectors independent from B (and from representatives already taken),
 * reduced against B. */
std::vector<std::vector<Rat>> quotient_reps(const RowSpace& z, const RowSpace& b) {
	std::vector<std::vector<Rat>> reps;
	RowSpace acc = b;
	for (std::size_t r = 0; r < z.basis().rows(); ++r) {
		std::vector<Rat> v = acc.reduce(z.basis().row(r));
		bool zero = true;
		for (const Rat& x : v)
			if (x != 0) {
				zero = false;
				break;
			}
		if (zero) continue;
		/* Pivot-normalize for determinism. */
		for (const Rat& x : v)
			if (x != 0) {
				Rat inv = Rat(1) / x;
				for (Rat& y : v) y *= inv;
				break;
			}
		reps.push_back(v);
		Mat m = acc.basis();
		m.append_row(v);
		acc = RowSpace(m);
	}
	return reps;
}

}  // namespace

CohomologyBasis cohomology_d(const Model& model) {
	int n = model.ngen();
	CohomologyBasis out;
	out.betti.assign(n + 1, 0);
	out.by_degree.assign(n + 1, {});
	auto dd = [&](const Form& f) { return d(model, f); };
	for (int k = 0; k <= n; ++k) {
		RowSpace z = kernel_space(model, k, k + 1, dd);
		RowSpace b = (k == 0) ? RowSpace(degree_subsets(n, 0).size())
		                      : image_space(model, k - 1, k, dd);
		auto reps = quotient_reps(z, b);
		out.betti[k] = static_cast<int>(reps.size());
		/* Matrix of delta d: Omega^{k-1} -> Omega^{k-1}; a class c has a
		 * harmonic representative iff delta d tau = -delta c is solvable. */
		Mat corr(0, 0);
		if (k >= 1)
			corr = operator_matrix(model, k - 1, k - 1,
			                       [&](const Form& f) { return delta(model, d(model, f)); });
		for (auto& v : reps) {
			Form rep = vec_to_form(n, k, v);
			bool harmonic = delta(model, rep).is_zero();
			if (!harmonic && k >= 1) {
				auto rhs = form_to_vec(-delta(model, rep), k - 1);
				if (auto tau = solve(corr, rhs)) {
					rep = rep + d(model, vec_to_form(n, k - 1, *tau));
					harmonic = true;
					if (!delta(model, rep).is_zero() || !d(model, rep).is_zero())
						throw std::logic_error("cohomology_d: harmonic correction failed");
				}
			}
			out.by_degree[k].push_back({rep, harmonic});
			out.all_harmonic = out.all_harmonic && harmonic;
		}
	}
	return out;
}

std::vector<int> cohomology_delta_dims(const Model& model) {
	int n = model.ngen();
	std::vector<int> dims(n + 1, 0);
	auto dl = [&](const Form& f) { return delta(model, f); };
	for (int k = 0; k <= n; ++k) {
		RowSpace z = kernel_space(model, k, k - 1, dl);
		RowSpace b = (k == n) ? RowSpace(degree_subsets(n, k).size())
		                      : image_space(model, k + 1, k, dl);
		dims[k] = static_cast<int>(z.dim() - b.dim());
	}
	return dims;
}

LefschetzReport hard_lefschetz_check(const Model& model, const CohomologyBasis& basis) {
	int n = model.ngen(), m = model.m();
	LefschetzReport rep;
	rep.betti = basis.betti;
	Form w = model.omega_form();
	auto dd = [&](const Form& f) { return d(model, f); };
	rep.pass = true;
	for (int k = 0; k <= m; ++k) {
		Form wk = Form::unit(n);
		for (int i = 0; i < k; ++i) wk = wedge(wk, w);
		RowSpace b_target = image_space(model, m + k - 1, m + k, dd);
		Mat img(0, degree_subsets(n, m + k).size());
		for (const auto& cls : basis.by_degree[m - k]) {
			Form image = wedge(cls.rep, wk);
			if (!d(model, image).is_zero())
				throw std::logic_error("lefschetz: image of closed class not closed");
			img.append_row(b_target.reduce(form_to_vec(image, m + k)));
		}
		int r = static_cast<int>(rank(img));
		bool iso = (r == basis.betti[m - k]) && (basis.betti[m - k] == basis.betti[m + k]);
		rep.ranks.push_back(r);
		rep.iso.push_back(iso);
		if (!iso && rep.first_failure < 0) rep.first_failure = k;
		rep.pass = rep.pass && iso;
	}
	return rep;
}

namespace {

/* Condition (ii): the projection (Omega, delta) -> (Omega / im d, delta)
 * induces an isomorphism in cohomology. The quotient is realized on the
 * canonical echelon complement of im d (non-pivot coordinates). */
bool quotient_map_iso(const Model& model) {
	int n = model.ngen();
	auto dd = [&](const Form& f) { return d(model, f); };
	auto dl = [&](const Form& f) { return delta(model, f); };

	std::vector<RowSpace> im_d(n + 2, RowSpace(std::size_t(0)));
	for (int k = 0; k <= n; ++k)
		im_d[k] = (k == 0) ? RowSpace(degree_subsets(n, 0).size())
		                   : image_space(model, k - 1, k, dd);

	/* Complement coordinates per degree. */
	std::vector<std::vector<std::size_t>> free_cols(n + 1);
	std::vector<std::size_t> qdim(n + 1);
	for (int k = 0; k <= n; ++k) {
		std::size_t dim_k = degree_subsets(n, k).size();
		std::vector<bool> is_piv(dim_k, false);
		for (auto c : im_d[k].pivots()) is_piv[c] = true;
		for (std::size_t c = 0; c < dim_k; ++c)
			if (!is_piv[c]) free_cols[k].push_back(c);
		qdim[k] = free_cols[k].size();
	}

	auto project = [&](int k, const std::vector<Rat>& full) {
		std::vector<Rat> red = im_d[k].reduce(full);
		std::vector<Rat> out(free_cols[k].size());
		for (std::size_t i = 0; i < free_cols[k].size(); ++i) out[i] = red[free_cols[k][i]];
		return out;
	};

	/* Matrix of the induced delta-bar: Q^k -> Q^{k-1}. */
	auto qdelta = [&](int k) {
		Mat m(k >= 1 ? qdim[k - 1] : 0, qdim[k]);
		auto basis_k = degree_subsets(n, k);
		for (std::size_t c = 0; c < qdim[k]; ++c) {
			Form f(n);
			f.add_term(basis_k[free_cols[k][c]], 1);
			if (k >= 1) {
				auto v = project(k - 1, form_to_vec(delta(model, f), k - 1));
				for (std::size_t r = 0; r < v.size(); ++r) m(r, c) = v[r];
			}
		}
		return m;
	};

	std::vector<Mat> qd(n + 1);
	for (int k = 0; k <= n; ++k) qd[k] = qdelta(k);

	for (int k = 0; k <= n; ++k) {
		/* H_delta^k(Omega) with canonical representatives. */
		RowSpace z = kernel_space(model, k, k - 1, dl);
		RowSpace b = (k == n) ? RowSpace(degree_subsets(n, k).size())
		                      : image_space(model, k + 1, k, dl);
		auto reps = quotient_reps(z, b);

		/* H_k of the quotient complex. */
		RowSpace qz = RowSpace(kernel(qd[k]));
		RowSpace qb = (k == n) ? RowSpace(qdim[k]) : RowSpace(transpose(qd[k + 1]));
		long hq = static_cast<long>(qz.dim()) - static_cast<long>(qb.dim());
		if (static_cast<long>(reps.size()) != hq) return false;

		/* Induced map surjective: projected representatives + im delta-bar
		 * span ker delta-bar. */
		Mat span = qb.basis();
		for (auto& v : reps) {
			auto pv = project(k, v);
			if (!qz.contains(pv)) throw std::logic_error("quotient map: image not closed");
			span.append_row(pv);
		}
		if (rank(span) != qz.dim()) return false;
	}
	return true;
}

/* Condition (iii): every de Rham class admits a representative in ker delta. */
bool all_classes_harmonic(const CohomologyBasis& basis) {
	for (const auto& deg : basis.by_degree)
		for (const auto& cls : deg)
			if (!cls.harmonic) return false;
	return true;
}

}  // namespace

MathieuReport mathieu_check(const Model& model) {
	CohomologyBasis basis = cohomology_d(model);
	MathieuReport rep{};
	rep.hard_lefschetz = hard_lefschetz_check(model, basis).pass;
	rep.quotient_iso = quotient_map_iso(model);
	rep.harmonic_reps = all_classes_harmonic(basis);
	return rep;
}

DdDeltaReport dd_delta_check(const Model& model) {
	int n = model.ngen();
	DdDeltaReport rep;
	auto dd = [&](const Form& f) { return d(model, f); };
	auto dl = [&](const Form& f) { return delta(model, f); };
	rep.pass = true;
	for (int k = 0; k <= n; ++k) {
		RowSpace im_ddelta = image_space(model, k, k, [&](const Form& f) {
			return d(model, delta(model, f));
		});
		RowSpace im_d = (k == 0) ? RowSpace(degree_subsets(n, 0).size())
		                         : image_space(model, k - 1, k, dd);
		RowSpace ker_delta = kernel_space(model, k, k - 1, dl);
		RowSpace im_delta = (k == n) ? RowSpace(degree_subsets(n, k).size())
		                             : image_space(model, k + 1, k, dl);
		RowSpace ker_d = kernel_space(model, k, k + 1, dd);

		RowSpace a = im_ddelta;
		RowSpace b = space_intersect(im_d, ker_delta);
		RowSpace c = space_intersect(im_delta, ker_d);
		bool eq = same_space(a, b) && same_space(b, c) && same_space(a, c);
		rep.dim_im_d_delta.push_back(static_cast<int>(a.dim()));
		rep.dim_im_d_cap_ker_delta.push_back(static_cast<int>(b.dim()));
		rep.dim_im_delta_cap_ker_d.push_back(static_cast<int>(c.dim()));
		rep.equal.push_back(eq);
		rep.pass = rep.pass && eq;
	}
	return rep;
}

FormalityReport formality_witness(const Model& model) {
	FormalityReport rep;
	DdDeltaReport pre = dd_delta_check(model);
	if (!pre.pass) {
		rep.refused = true;
		rep.reason = "dd-delta lemma fails; the witness maps are not defined";
		return rep;
	}
	int n = model.ngen();
	auto dd = [&](const Form& f) { return d(model, f); };
	auto dl = [&](const Form& f) { return delta(model, f); };

	std::vector<RowSpace> ker_delta(n + 1, RowSpace(std::size_t(0)));
	for (int k = 0; k <= n; ++k) ker_delta[k] = kernel_space(model, k, k - 1, dl);

	rep.pass = true;
	for (int k = 0; k <= n; ++k) {
		/* (ker delta, d) cohomology at degree k. */
		RowSpace ker_d = kernel_space(model, k, k + 1, dd);
		RowSpace zk = space_intersect(ker_delta[k], ker_d);
		Mat img(0, degree_subsets(n, k).size());
		if (k >= 1) {
			for (std::size_t r = 0; r < ker_delta[k - 1].basis().rows(); ++r) {
				Form f = vec_to_form(n, k - 1, ker_delta[k - 1].basis().row(r));
				img.append_row(form_to_vec(d(model, f), k));
			}
		}
		RowSpace bk(img);
		auto reps = quotient_reps(zk, bk);
		rep.h_ker_delta.push_back(static_cast<int>(reps.size()));

		/* Inclusion into (Omega, d): compare with H^k(Omega, d). */
		RowSpace b_omega = (k == 0) ? RowSpace(degree_subsets(n, 0).size())
		                            : image_space(model, k - 1, k, dd);
		long bk_omega = static_cast<long>(ker_d.dim()) - static_cast<long>(b_omega.dim());
		Mat span_d = b_omega.basis();
		for (auto& v : reps) span_d.append_row(v);
		bool incl = (static_cast<long>(reps.size()) == bk_omega) &&
		            (rank(span_d) == ker_d.dim());
		rep.incl_iso.push_back(incl);

		/* Projection onto H(Omega, delta) with zero differential. */
		RowSpace b_delta = (k == n) ? RowSpace(degree_subsets(n, k).size())
		                            : image_space(model, k + 1, k, dl);
		long h_delta = static_cast<long>(ker_delta[k].dim()) - static_cast<long>(b_delta.dim());
		Mat span_delta = b_delta.basis();
		for (auto& v : reps) span_delta.append_row(v);
		bool proj = (static_cast<long>(reps.size()) == h_delta) &&
		            (rank(span_delta) == ker_delta[k].dim());
		rep.proj_iso.push_back(proj);

		rep.pass = rep.pass && incl && proj;
	}
	return rep;
}

}  // namespace dgbv
