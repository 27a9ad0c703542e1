#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "dgbv/exterior.hpp"
#include "dgbv/json_io.hpp"
#include "dgbv/model.hpp"
#include "dgbv/properties.hpp"
#include "dgbv/sampling.hpp"

using namespace dgbv;

namespace {

Model sol4() { return load_model(std::string(TESTS_DATA_DIR) + "/sol4.json"); }

}  // namespace

TEST_CASE("bracket axioms hold on seeded samples for every built-in model") {
	for (const Model& m :
	     {build_torus(1), build_torus(2), build_kodaira_thurston(), sol4()}) {
		auto outcomes = bracket_axiom_suite(m, 97, 40);
		CHECK(all_pass(outcomes));
		std::set<std::string> names;
		for (const auto& o : outcomes) {
			names.insert(o.name);
			CHECK(o.samples == 40);
			CHECK(o.detail.empty());
		}
		CHECK(names == std::set<std::string>{"bracket_antisymmetry", "bracket_jacobi",
		                                     "bracket_leibniz", "bracket_differentials",
		                                     "bracket_parity"});
	}
}

TEST_CASE("integral adjointness holds on seeded samples") {
	for (const Model& m :
	     {build_torus(1), build_torus(2), build_torus(3), build_kodaira_thurston(), sol4()}) {
		auto outcomes = adjointness_suite(m, 131, 40);
		CHECK(all_pass(outcomes));
		std::set<std::string> names;
		for (const auto& o : outcomes) names.insert(o.name);
		CHECK(names == std::set<std::string>{"integral_d_adjoint", "integral_delta_adjoint"});
	}
}

TEST_CASE("axioms survive a random symplectomorphism-free basis change") {
	Sampler s(7001);
	Model m = s.basis_changed_model(build_kodaira_thurston(), 5);
	REQUIRE(validate(m).all_pass());
	CHECK(all_pass(bracket_axiom_suite(m, 55, 25)));
	CHECK(all_pass(adjointness_suite(m, 56, 25)));
}

TEST_CASE("different seeds give identical verdicts, not identical samples") {
	Model kt = build_kodaira_thurston();
	auto a = bracket_axiom_suite(kt, 1, 10);
	auto b = bracket_axiom_suite(kt, 2, 10);
	CHECK(all_pass(a));
	CHECK(all_pass(b));
}

TEST_CASE("sampler determinism") {
	Sampler a(42), b(42);
	Model kt = build_kodaira_thurston();
	for (int i = 0; i < 10; ++i) {
		CHECK(a.uniform(0, 100) == b.uniform(0, 100));
		CHECK(a.coefficient() == b.coefficient());
	}
	Form fa = a.homogeneous_form(kt);
	Form fb = b.homogeneous_form(kt);
	CHECK(fa == fb);
}

TEST_CASE("sampled homogeneous forms have a definite parity") {
	Sampler s(9);
	Model t = build_torus(2);
	for (int i = 0; i < 20; ++i) {
		Form f = s.homogeneous_form(t, i % 2);
		REQUIRE(f.parity().has_value());
		if (!f.is_zero()) CHECK(*f.parity() == i % 2);
	}
}

TEST_CASE("basis-changed models keep the structural invariants") {
	Sampler s(321);
	for (int trial = 0; trial < 3; ++trial) {
		Model m = s.basis_changed_model(sol4(), 4);
		auto rep = validate(m);
		CHECK(rep.all_pass());
		CHECK(m.name().find("basis-change") != std::string::npos);
	}
}
