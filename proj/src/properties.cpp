#include "dgbv/properties.hpp"

#include "dgbv/exterior.hpp"
#include "dgbv/sampling.hpp"

namespace dgbv {

namespace {

int parity_of(const Form& f) {
	auto p = f.parity();
	return p ? *p : 0;
}

void record(PropertyOutcome& o, bool ok, int trial) {
	++o.samples;
	if (!ok && o.pass) {
		o.pass = false;
		o.detail = "first counterexample at sample " + std::to_string(trial);
	}
}

}  // namespace

std::vector<PropertyOutcome> bracket_axiom_suite(const Model& model, std::uint64_t seed,
                                                 int trials) {
	Sampler sampler(seed);
	std::vector<PropertyOutcome> out = {
	    {"bracket_antisymmetry", 0, true, ""}, {"bracket_jacobi", 0, true, ""},
	    {"bracket_leibniz", 0, true, ""},      {"bracket_differentials", 0, true, ""},
	    {"bracket_parity", 0, true, ""},
	};
	for (int t = 0; t < trials; ++t) {
		Form f = sampler.homogeneous_form(model);
		Form g = sampler.homogeneous_form(model);
		Form h = sampler.homogeneous_form(model);
		int pf = parity_of(f), pg = parity_of(g);

		/* a) graded antisymmetry in shifted parity */
		{
			Form lhs = bracket(model, f, g);
			Form rhs = bracket(model, g, f);
			if (((pf + 1) * (pg + 1)) % 2 == 0) rhs = -rhs;
			record(out[0], lhs == rhs, t);
		}
		/* b) shifted Jacobi */
		{
			Form lhs = bracket(model, f, bracket(model, g, h));
			Form rhs = bracket(model, bracket(model, f, g), h);
			Form swap = bracket(model, g, bracket(model, f, h));
			if (((pf + 1) * (pg + 1)) % 2) swap = -swap;
			record(out[1], lhs == rhs + swap, t);
		}
		/* c) odd Poisson compatibility with the product */
		{
			Form lhs = bracket(model, f, wedge(g, h));
			Form rhs = wedge(bracket(model, f, g), h);
			Form tail = wedge(g, bracket(model, f, h));
			if ((pg * (pf + 1)) % 2) tail = -tail;
			record(out[2], lhs == rhs + tail, t);
		}
		/* d) Delta and d are odd derivations of the bracket */
		{
			Form lhs_delta = delta(model, bracket(model, f, g));
			Form rhs_delta = bracket(model, delta(model, f), g);
			Form tail_delta = bracket(model, f, delta(model, g));
			if ((pf + 1) % 2) tail_delta = -tail_delta;
			bool ok = lhs_delta == rhs_delta + tail_delta;

			Form lhs_d = d(model, bracket(model, f, g));
			Form rhs_d = bracket(model, d(model, f), g);
			Form tail_d = bracket(model, f, d(model, g));
			if ((pf + 1) % 2) tail_d = -tail_d;
			ok = ok && (lhs_d == rhs_d + tail_d);
			record(out[3], ok, t);
		}
		/* parity law */
		{
			Form br = bracket(model, f, g);
			auto p = br.parity();
			record(out[4], br.is_zero() || (p && *p == (pf + pg + 1) % 2), t);
		}
	}
	return out;
}

std::vector<PropertyOutcome> adjointness_suite(const Model& model, std::uint64_t seed,
                                               int trials) {
	Sampler sampler(seed);
	std::vector<PropertyOutcome> out = {
	    {"integral_d_adjoint", 0, true, ""},
	    {"integral_delta_adjoint", 0, true, ""},
	};
	for (int t = 0; t < trials; ++t) {
		Form a = sampler.homogeneous_form(model);
		Form b = sampler.homogeneous_form(model);
		int pa = parity_of(a);
		Rat sign = (pa % 2) ? Rat(-1) : Rat(1);
		Rat lhs_d = integral(model, wedge(d(model, a), b));
		Rat rhs_d = integral(model, wedge(a, d(model, b)));
		record(out[0], lhs_d + sign * rhs_d == 0, t);
		Rat lhs_delta = integral(model, wedge(delta(model, a), b));
		Rat rhs_delta = integral(model, wedge(a, delta(model, b)));
		record(out[1], lhs_delta - sign * rhs_delta == 0, t);
	}
	return out;
}

bool all_pass(const std::vector<PropertyOutcome>& outcomes) {
	for (const auto& o : outcomes)
		if (!o.pass) return false;
	return true;
}

}  // namespace dgbv
