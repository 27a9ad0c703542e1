/* Acceptance gate: ten end-to-end criteria, one pass/fail line each.
 * Exits with the number of failed criteria. */

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dgbv/cohomology.hpp"
#include "dgbv/exterior.hpp"
#include "dgbv/frobenius.hpp"
#include "dgbv/json_io.hpp"
#include "dgbv/model.hpp"
#include "dgbv/properties.hpp"
#include "dgbv/sampling.hpp"

using namespace dgbv;

namespace {

struct Criterion {
	int number;
	std::string label;
	double limit_seconds;  // 0 = no explicit budget
	std::function<void(std::ostringstream&)> body;
};

int g_failures = 0;

void expect(std::ostringstream& err, bool ok, const std::string& what) {
	if (!ok) err << "    " << what << "\n";
}

Model sol4() { return load_model(std::string(TESTS_DATA_DIR) + "/sol4.json"); }

std::vector<Model> operator_models() {
	return {build_torus(1), build_torus(2), build_torus(3), build_kodaira_thurston()};
}

Form basis_form(int ngen, Subset s) {
	Form f(ngen);
	f.add_term(s, 1);
	return f;
}

/* ---- criterion bodies ------------------------------------------------- */

void criterion_operators(std::ostringstream& err) {
	for (const Model& m : operator_models()) {
		int n = m.ngen();
		for (int k = 0; k <= n; ++k) {
			for (Subset s : degree_subsets(n, k)) {
				Form f = basis_form(n, s);
				expect(err, delta(m, delta(m, f)).is_zero(),
				       m.name() + ": Delta^2 != 0 on a degree-" + std::to_string(k) + " form");
				expect(err, (delta(m, d(m, f)) + d(m, delta(m, f))).is_zero(),
				       m.name() + ": Delta d + d Delta != 0");
				expect(err, star(m, star(m, f)) == f, m.name() + ": star is not an involution");
				/* The double-sum lstar is twice the classical dual Lefschetz
				 * operator and delta flips the classical commutator order, so
				 * star-conjugation gives delta = 2(-1)^k *d*; equivalently the
				 * textbook d Lambda - Lambda d = (-1)^{k+1} *d* with
				 * Lambda = lstar/2.  Both are required exactly. */
				Form sds = star(m, d(m, star(m, f)));
				Rat two = (k % 2 == 0) ? Rat(2) : Rat(-2);
				expect(err, delta(m, f) == sds * two,
				       m.name() + ": Delta != 2(-1)^k star d star");
				Rat sign = (k % 2 == 0) ? Rat(-1) : Rat(1);
				expect(err,
				       d(m, lstar(m, f) * Rat(1, 2)) - lstar(m, d(m, f)) * Rat(1, 2) == sds * sign,
				       m.name() + ": d Lambda - Lambda d != (-1)^{k+1} star d star");
			}
			auto subs = degree_subsets(n, k);
			for (Subset a : subs)
				for (Subset b : subs) {
					Form fa = basis_form(n, a), fb = basis_form(n, b);
					expect(err, wedge(fb, star(m, fa)) == wedge(star(m, fb), fa),
					       m.name() + ": pairing symmetry fails in degree " + std::to_string(k));
				}
		}
	}
}

void criterion_bracket(std::ostringstream& err) {
	std::uint64_t seed = 2026;
	for (const Model& m : operator_models()) {
		auto outcomes = bracket_axiom_suite(m, seed++, 200);
		for (const auto& o : outcomes) {
			expect(err, o.samples >= 200, m.name() + ": " + o.name + " sampled < 200 triples");
			expect(err, o.pass, m.name() + ": " + o.name + " failed (" + o.detail + ")");
		}
	}
}

void criterion_adjointness(std::ostringstream& err) {
	std::uint64_t seed = 4096;
	for (const Model& m : operator_models()) {
		auto outcomes = adjointness_suite(m, seed++, 200);
		for (const auto& o : outcomes) {
			expect(err, o.samples >= 200, m.name() + ": " + o.name + " sampled < 200 pairs");
			expect(err, o.pass, m.name() + ": " + o.name + " failed (" + o.detail + ")");
		}
	}
}

void criterion_mathieu(std::ostringstream& err) {
	for (int m = 1; m <= 3; ++m) {
		auto rep = mathieu_check(build_torus(m));
		expect(err, rep.consistent(), "torus:" + std::to_string(m) + ": verdicts disagree");
		expect(err, rep.hard_lefschetz && rep.quotient_iso && rep.harmonic_reps,
		       "torus:" + std::to_string(m) + ": expected all-true verdicts");
	}
	Model kt = build_kodaira_thurston();
	auto rep = mathieu_check(kt);
	expect(err, rep.consistent(), "kodaira-thurston: verdicts disagree");
	expect(err, !rep.hard_lefschetz && !rep.quotient_iso && !rep.harmonic_reps,
	       "kodaira-thurston: expected (false,false,false)");
	expect(err, cohomology_d(kt).betti[1] == 3, "kodaira-thurston: b_1 != 3");

	auto sol = mathieu_check(sol4());
	expect(err, sol.consistent(), "sol4: verdicts disagree");

	Sampler sampler(20260816);
	int made = 0;
	for (const Model& base : {build_kodaira_thurston(), build_torus(2), sol4()}) {
		Model rand = sampler.basis_changed_model(base, 6);
		expect(err, validate(rand).all_pass(), rand.name() + ": randomized model invalid");
		auto rrep = mathieu_check(rand);
		expect(err, rrep.consistent(), rand.name() + ": verdicts disagree");
		auto brep = mathieu_check(base);
		expect(err, rrep.hard_lefschetz == brep.hard_lefschetz,
		       rand.name() + ": basis change altered the verdict");
		++made;
	}
	expect(err, made >= 3, "fewer than 3 randomized models");
}

void criterion_dd_formality(std::ostringstream& err) {
	for (int m = 1; m <= 3; ++m) {
		std::string name = "torus:" + std::to_string(m);
		auto dd = dd_delta_check(build_torus(m));
		expect(err, dd.pass, name + ": dd-delta subspaces differ");
		for (std::size_t k = 0; k < dd.equal.size(); ++k)
			expect(err, dd.equal[k],
			       name + ": inclusion fails in degree " + std::to_string(k));
		auto wit = formality_witness(build_torus(m));
		expect(err, !wit.refused, name + ": witness refused unexpectedly");
		expect(err, wit.pass, name + ": witness maps are not quasi-isomorphisms");
		for (std::size_t k = 0; k < wit.incl_iso.size(); ++k) {
			expect(err, wit.incl_iso[k], name + ": inclusion not iso in degree " +
			                                 std::to_string(k));
			expect(err, wit.proj_iso[k], name + ": projection not iso in degree " +
			                                 std::to_string(k));
		}
	}
}

void criterion_frobenius_torus(std::ostringstream& err) {
	Model t1 = build_torus(1);
	auto basis = cohomology_d(t1);
	MCSolution mc = mc_solve(t1, basis, 4);
	expect(err, (mc.gamma - init_gamma1(t1, basis, 4)).is_zero(),
	       "torus:1: Gamma != Gamma_1 at N=4");
	expect(err, mc.residual.is_zero(), "torus:1: Maurer-Cartan residual nonzero");
	expect(err, mc.corrector.is_zero(), "torus:1: corrector B != 0");

	FrobeniusData d1 = frobenius_build(t1, 4);
	Monomial sq;
	sq.factors = {{0, 2}, {3, 1}};
	Monomial tri;
	tri.factors = {{0, 1}, {1, 1}, {2, 1}};
	expect(err, d1.phi.coeff(sq, 0) == Rat(1, 2), "torus:1: phi misses 1/2 (x0)^2 x3");
	expect(err, d1.phi.coeff(tri, 0) == Rat(-1), "torus:1: phi misses -x0 x1 x2");
	expect(err, d1.phi.terms().size() == 2, "torus:1: phi has extra terms");
	expect(err, d1.product_agree, "torus:1: cup-product oracle disagrees");

	/* m = 2: the origin table must match the wedge products of the canonical
	 * representatives, computed directly. */
	Model t2 = build_torus(2);
	FrobeniusData d2 = frobenius_build(t2, 3);
	auto flat = cohomology_d(t2).flat();
	for (const Form& c : flat)
		expect(err,
		       c.terms().size() == 1 && c.terms().begin()->second == Rat(1),
		       "torus:2: representatives are not unit basis forms");
	for (std::size_t i = 0; i < flat.size(); ++i)
		for (std::size_t j = 0; j < flat.size(); ++j) {
			Form w = wedge(flat[i], flat[j]);
			for (std::size_t l = 0; l < flat.size(); ++l) {
				Subset s = flat[l].terms().begin()->first;
				expect(err, d2.at_origin[i][j][l] == w.coeff(s),
				       "torus:2: table entry (" + std::to_string(i) + "," + std::to_string(j) +
				           ")^" + std::to_string(l) + " differs from the wedge oracle");
			}
		}
}

void criterion_product_agreement(std::ostringstream& err) {
	Sampler sampler(77);
	Model randomized = sampler.basis_changed_model(sol4(), 4);
	struct Job {
		Model model;
		int order;
	};
	for (const Job& job : {Job{build_torus(1), 4}, Job{build_torus(2), 3}, Job{sol4(), 3},
	                       Job{randomized, 2}}) {
		FrobeniusData data = frobenius_build(job.model, job.order);
		expect(err, data.product_agree,
		       job.model.name() + ": potential-route and cocycle-route products differ");
	}
}

void criterion_wdvv(std::ostringstream& err) {
	struct Job {
		Model model;
		int order;
	};
	for (const Job& job : {Job{build_torus(1), 4}, Job{build_torus(2), 3}, Job{sol4(), 3}}) {
		FrobeniusData data = frobenius_build(job.model, job.order);
		expect(err, data.wdvv.pass,
		       job.model.name() + ": WDVV fails at (" + std::to_string(data.wdvv.fail_at[0]) +
		           "," + std::to_string(data.wdvv.fail_at[1]) + "," +
		           std::to_string(data.wdvv.fail_at[2]) + ")");
		expect(err, data.wdvv.through_degree == job.order - 1,
		       job.model.name() + ": wrong certified WDVV degree");
	}
}

void criterion_stability(std::ostringstream& err) {
	for (const Model& m : {build_torus(1), build_torus(2), sol4()}) {
		auto basis = cohomology_d(m);
		MCSolution hi = mc_solve(m, basis, 4);
		MCSolution lo = mc_solve(m, basis, 2);
		expect(err, (hi.gamma.with_truncation(2) - lo.gamma).is_zero(),
		       m.name() + ": Gamma coefficients change when the order is raised");
		expect(err, (hi.corrector.with_truncation(2) - lo.corrector).is_zero(),
		       m.name() + ": corrector coefficients change when the order is raised");
	}
}

void criterion_gating(std::ostringstream& err) {
	bool threw = false;
	try {
		frobenius_build(build_kodaira_thurston(), 2);
	} catch (const std::invalid_argument& e) {
		threw = true;
		expect(err, std::string(e.what()).find("hard Lefschetz") != std::string::npos,
		       "refusal does not name the hard Lefschetz failure");
	}
	expect(err, threw, "frobenius_build accepted the nilmanifold");

	std::string cmd = std::string(DGBV_CLI_PATH) +
	                  " frobenius --builtin kodaira-thurston --order 2 --output json 2>/dev/null";
	FILE* pipe = popen(cmd.c_str(), "r");
	if (!pipe) {
		expect(err, false, "could not launch the CLI");
		return;
	}
	std::string out;
	char buf[4096];
	std::size_t n;
	while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
	int status = pclose(pipe);
	int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	expect(err, code == 2, "CLI exit code is " + std::to_string(code) + ", expected 2");
	expect(err, out.find("hard Lefschetz") != std::string::npos,
	       "CLI refusal does not name the hard Lefschetz failure");
	expect(err, out.find("phi") == std::string::npos, "a partial potential was emitted");
}

}  // namespace

int main() {
	std::vector<Criterion> criteria = {
	    {1, "operator identities on every basis form (tori m=1,2,3; nilmanifold)", 10.0,
	     criterion_operators},
	    {2, "bracket axioms a-d, 200 seeded triples per model", 30.0, criterion_bracket},
	    {3, "integral adjointness, 200 seeded pairs per model", 0.0, criterion_adjointness},
	    {4, "Mathieu verdicts agree on built-ins and 3 randomized models", 0.0,
	     criterion_mathieu},
	    {5, "dd-delta double inclusion and formality witnesses on tori", 0.0,
	     criterion_dd_formality},
	    {6, "torus Frobenius data matches the closed-form oracles", 60.0,
	     criterion_frobenius_torus},
	    {7, "cocycle and potential products agree at the origin", 0.0,
	     criterion_product_agreement},
	    {8, "WDVV associativity through the certified degree", 0.0, criterion_wdvv},
	    {9, "solver coefficients are stable under order changes", 0.0, criterion_stability},
	    {10, "hard Lefschetz gate refuses the nilmanifold, no partial output", 0.0,
	     criterion_gating},
	};

	for (const auto& c : criteria) {
		std::ostringstream err;
		auto t0 = std::chrono::steady_clock::now();
		c.body(err);
		double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
		if (c.limit_seconds > 0 && secs > c.limit_seconds) {
			std::ostringstream over;
			over << "    runtime " << secs << "s exceeds the " << c.limit_seconds << "s budget\n";
			err << over.str();
		}
		bool ok = err.str().empty();
		if (!ok) ++g_failures;
		std::printf("%s  %2d  %s  [%.2fs]\n", ok ? "PASS" : "FAIL", c.number, c.label.c_str(),
		            secs);
		if (!ok) std::fputs(err.str().c_str(), stderr);
	}
	if (g_failures) std::fprintf(stderr, "%d criteria failed\n", g_failures);
	return g_failures;
}
