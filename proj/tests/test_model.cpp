#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dgbv/exterior.hpp"
#include "dgbv/json_io.hpp"
#include "dgbv/model.hpp"

using namespace dgbv;

namespace {

std::string data(const std::string& name) { return std::string(TESTS_DATA_DIR) + "/" + name; }

bool check_named(const ValidationReport& rep, const std::string& name) {
	for (const auto& c : rep.checks)
		if (c.name == name) return c.pass;
	FAIL("no check named ", name);
	return false;
}

}  // namespace

TEST_CASE("torus builder") {
	Model t = build_torus(2);
	CHECK(t.name() == "torus:2");
	CHECK(t.m() == 2);
	CHECK(t.ngen() == 4);
	CHECK(t.diff().empty());
	REQUIRE(t.omega().size() == 2);
	CHECK(t.omega()[0].a == 1);
	CHECK(t.omega()[0].b == 2);
	for (int k = 1; k <= 4; ++k) CHECK(t.d_gen(k).is_zero());
}

TEST_CASE("nilmanifold builder") {
	Model kt = build_kodaira_thurston();
	CHECK(kt.m() == 2);
	CHECK(kt.ngen() == 4);
	REQUIRE(kt.diff().size() == 1);
	CHECK(kt.diff()[0].k == 4);
	CHECK(kt.diff()[0].i == 1);
	CHECK(kt.diff()[0].j == 2);
	CHECK(kt.diff()[0].c == Rat(1));
	CHECK(kt.d_gen(4) == Form::basis(4, {1, 2}));
	CHECK(kt.d_gen(1).is_zero());
}

TEST_CASE("built-in models validate") {
	for (int m = 1; m <= 3; ++m) {
		ValidationReport rep = validate(build_torus(m));
		CHECK(rep.all_pass());
		CHECK(rep.checks.size() == 6);
	}
	CHECK(validate(build_kodaira_thurston()).all_pass());
	CHECK(validate(load_model(data("sol4.json"))).all_pass());
}

TEST_CASE("validation reports six named checks") {
	ValidationReport rep = validate(build_torus(1));
	std::vector<std::string> names;
	for (const auto& c : rep.checks) names.push_back(c.name);
	for (const char* expect :
	     {"d_squared_zero", "d_omega_zero", "omega_invertible", "delta_squared_zero",
	      "delta_d_anticommute", "integral_d_zero"}) {
		CHECK(std::count(names.begin(), names.end(), expect) == 1);
	}
}

TEST_CASE("non-unimodular structure fails exactly the integral check") {
	ValidationReport rep = validate(load_model(data("invalid_nonunimodular.json")));
	CHECK_FALSE(rep.all_pass());
	CHECK_FALSE(check_named(rep, "integral_d_zero"));
	for (const char* ok : {"d_squared_zero", "d_omega_zero", "omega_invertible",
	                       "delta_squared_zero", "delta_d_anticommute"}) {
		CHECK(check_named(rep, ok));
	}
	CHECK(rep.first_failure() == "integral_d_zero");
}

TEST_CASE("non-closed symplectic form is caught") {
	ValidationReport rep = validate(load_model(data("invalid_domega.json")));
	CHECK_FALSE(rep.all_pass());
	CHECK_FALSE(check_named(rep, "d_omega_zero"));
	CHECK(check_named(rep, "d_squared_zero"));
	CHECK(check_named(rep, "omega_invertible"));
}

TEST_CASE("broken differential is caught") {
	ValidationReport rep = validate(load_model(data("invalid_dsquared.json")));
	CHECK_FALSE(check_named(rep, "d_squared_zero"));
}

TEST_CASE("degenerate pairing is caught without crashing the Delta checks") {
	ValidationReport rep = validate(load_model(data("invalid_singular_omega.json")));
	CHECK_FALSE(rep.all_pass());
	CHECK_FALSE(check_named(rep, "omega_invertible"));
	CHECK(check_named(rep, "d_squared_zero"));
	CHECK(check_named(rep, "integral_d_zero"));
}

TEST_CASE("a model can fail several checks at once") {
	ValidationReport rep = validate(load_model(data("invalid_two_failures.json")));
	CHECK_FALSE(check_named(rep, "d_omega_zero"));
	CHECK_FALSE(check_named(rep, "omega_invertible"));
}

TEST_CASE("model JSON round-trip") {
	Model m = load_model(data("sol4.json"));
	Model back = model_from_json(model_to_json(m));
	CHECK(back.name() == m.name());
	CHECK(back.m() == m.m());
	REQUIRE(back.diff().size() == m.diff().size());
	for (std::size_t i = 0; i < m.diff().size(); ++i) {
		CHECK(back.diff()[i].k == m.diff()[i].k);
		CHECK(back.diff()[i].i == m.diff()[i].i);
		CHECK(back.diff()[i].j == m.diff()[i].j);
		CHECK(back.diff()[i].c == m.diff()[i].c);
	}
	CHECK(back.omega().size() == m.omega().size());
}

TEST_CASE("schema violations carry messages") {
	CHECK_THROWS_WITH_AS(model_from_json(nlohmann::ordered_json::parse(R"({"name":"x"})")),
	                     doctest::Contains("'m'"), std::invalid_argument);
	auto bad_diff = nlohmann::ordered_json::parse(
	    R"({"name":"x","m":1,"diff":[[1,2]],"omega":[[1,2,"1"]]})");
	CHECK_THROWS_AS(model_from_json(bad_diff), std::invalid_argument);
	auto bad_rat = nlohmann::ordered_json::parse(
	    R"({"name":"x","m":1,"diff":[],"omega":[[1,2,"1/0"]]})");
	CHECK_THROWS_AS(model_from_json(bad_rat), std::invalid_argument);
	auto bad_index = nlohmann::ordered_json::parse(
	    R"({"name":"x","m":1,"diff":[[5,1,2,"1"]],"omega":[[1,2,"1"]]})");
	CHECK_THROWS_AS(model_from_json(bad_index), std::invalid_argument);
}

TEST_CASE("file errors are reported as validation failures") {
	CHECK_THROWS_WITH_AS(load_model(data("no_such_file.json")),
	                     doctest::Contains("cannot open"), std::invalid_argument);
	CHECK_THROWS_WITH_AS(load_model(data("malformed.json")), doctest::Contains("parse error"),
	                     std::invalid_argument);
	CHECK_THROWS_AS(load_model(data("wrong_shape.json")), std::invalid_argument);
}

TEST_CASE("model accessors") {
	Model t = build_torus(1);
	CHECK(t.omega_invertible());
	CHECK(t.omega_mat()(0, 1) == Rat(1));   // omega_{12} = 1
	CHECK(t.omega_mat()(1, 0) == Rat(-1));  // antisymmetry
	CHECK(t.omega_inv()(0, 1) == Rat(-1));  // omega^{12} = -1
	Form vol = t.volume_form();
	CHECK(vol.degree() == 2);
	CHECK(integral(t, vol) == Rat(1));
	Model kt = build_kodaira_thurston();
	CHECK(kt.omega_form() == Form::basis(4, {1, 3}) + Form::basis(4, {2, 4}));
}

TEST_CASE("validation detail names the first failure") {
	ValidationReport rep = validate(load_model(data("invalid_domega.json")));
	CHECK(rep.first_failure() == "d_omega_zero");
}
