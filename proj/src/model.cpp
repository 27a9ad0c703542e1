#include "dgbv/model.hpp"

#include <set>
#include <stdexcept>

#include "dgbv/exterior.hpp"

namespace dgbv {

Model::Model(std::string name, int m, std::vector<DiffEntry> diff, std::vector<OmegaEntry> omega)
    : name_(std::move(name)), m_(m), diff_(std::move(diff)), omega_(std::move(omega)) {
	if (m_ < 1) throw std::invalid_argument("model: m must be >= 1");
	int n = ngen();
	if (n > 30) throw std::invalid_argument("model: too many generators");

	std::set<std::tuple<int, int, int>> seen_diff;
	d_gen_.assign(n, Form(n));
	for (const auto& e : diff_) {
		if (e.k < 1 || e.k > n || e.i < 1 || e.i > n || e.j < 1 || e.j > n)
			throw std::invalid_argument("model: diff index out of range");
		if (e.i >= e.j) throw std::invalid_argument("model: diff entry needs i < j");
		if (!seen_diff.insert({e.k, e.i, e.j}).second)
			throw std::invalid_argument("model: duplicate diff entry");
		d_gen_[e.k - 1].add_term(subset_from_indices({e.i, e.j}, n), e.c);
	}

	std::set<std::pair<int, int>> seen_omega;
	omega_mat_ = Mat(n, n);
	for (const auto& e : omega_) {
		if (e.a < 1 || e.a > n || e.b < 1 || e.b > n)
			throw std::invalid_argument("model: omega index out of range");
		if (e.a >= e.b) throw std::invalid_argument("model: omega entry needs a < b");
		if (!seen_omega.insert({e.a, e.b}).second)
			throw std::invalid_argument("model: duplicate omega entry");
		omega_mat_(e.a - 1, e.b - 1) = e.c;
		omega_mat_(e.b - 1, e.a - 1) = -e.c;
	}

	try {
		omega_inv_ = inverse(omega_mat_);
	} catch (const std::invalid_argument&) {
		omega_inv_.reset();
	}

	/* omega^m / m! */
	Form pow = Form::unit(n);
	Rat fact = 1;
	Form w = omega_form();
	for (int k = 1; k <= m_; ++k) {
		pow = wedge(pow, w);
		fact *= k;
	}
	volume_ = pow * (Rat(1) / fact);
}

const Mat& Model::omega_inv() const {
	if (!omega_inv_) throw std::invalid_argument("model '" + name_ + "': omega is degenerate");
	return *omega_inv_;
}

Form Model::omega_form() const {
	Form w(ngen());
	for (const auto& e : omega_) w.add_term(subset_from_indices({e.a, e.b}, ngen()), e.c);
	return w;
}

Model build_torus(int m) {
	if (m < 1) throw std::invalid_argument("build_torus: m must be >= 1");
	std::vector<OmegaEntry> omega;
	for (int i = 1; i <= m; ++i) omega.push_back({2 * i - 1, 2 * i, Rat(1)});
	return Model("torus:" + std::to_string(m), m, {}, std::move(omega));
}

Model build_kodaira_thurston() {
	/* d e^4 = e^1 ^ e^2, omega = e^1 ^ e^3 + e^2 ^ e^4. */
	return Model("kodaira-thurston", 2, {{4, 1, 2, Rat(1)}},
	             {{1, 3, Rat(1)}, {2, 4, Rat(1)}});
}

bool ValidationReport::all_pass() const {
	for (const auto& c : checks)
		if (!c.pass) return false;
	return true;
}

std::string ValidationReport::first_failure() const {
	for (const auto& c : checks)
		if (!c.pass) return c.name;
	return {};
}

namespace {

/* First basis form (degree order) on which op is nonzero, or empty. */
template <class Op>
std::string find_violation(const Model& model, Op&& op) {
	int n = model.ngen();
	for (Subset s = 0; s < (Subset(1) << n); ++s) {
		Form f(n);
		f.add_term(s, 1);
		if (!op(f).is_zero()) {
			std::string name = "e^{";
			for (int i : subset_indices(s)) name += std::to_string(i) + ",";
			if (name.back() == ',') name.pop_back();
			return name + "}";
		}
	}
	return {};
}

}  // namespace

ValidationReport validate(const Model& model) {
	ValidationReport rep;
	auto push = [&rep](std::string name, bool pass, std::string detail = "") {
		rep.checks.push_back({std::move(name), pass, std::move(detail)});
	};

	std::string bad = find_violation(model, [&](const Form& f) { return d(model, d(model, f)); });
	push("d_squared_zero", bad.empty(), bad.empty() ? "" : "d^2 != 0 on " + bad);

	Form dw = d(model, model.omega_form());
	push("d_omega_zero", dw.is_zero(), dw.is_zero() ? "" : "d omega != 0");

	bool invertible = model.omega_invertible();
	push("omega_invertible", invertible, invertible ? "" : "omega matrix is singular");

	if (invertible) {
		bad = find_violation(model,
		                     [&](const Form& f) { return delta(model, delta(model, f)); });
		push("delta_squared_zero", bad.empty(), bad.empty() ? "" : "delta^2 != 0 on " + bad);

		bad = find_violation(model, [&](const Form& f) {
			return delta(model, d(model, f)) + d(model, delta(model, f));
		});
		push("delta_d_anticommute", bad.empty(),
		     bad.empty() ? "" : "delta d + d delta != 0 on " + bad);
	} else {
		push("delta_squared_zero", false, "not evaluated (omega degenerate)");
		push("delta_d_anticommute", false, "not evaluated (omega degenerate)");
	}

	/* Unimodularity: integral of d on every form of degree 2m-1. */
	int n = model.ngen();
	bool stokes = true;
	std::string stokes_detail;
	for (Subset s = 0; s < (Subset(1) << n); ++s) {
		if (subset_size(s) != n - 1) continue;
		Form f(n);
		f.add_term(s, 1);
		if (integral(model, d(model, f)) != 0) {
			stokes = false;
			stokes_detail = "integral(d e^{...}) != 0 on a degree-" + std::to_string(n - 1) + " basis form";
			break;
		}
	}
	push("integral_d_zero", stokes, stokes_detail);

	return rep;
}

}  // namespace dgbv
