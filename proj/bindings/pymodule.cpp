#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "dgbv/cohomology.hpp"
#include "dgbv/frobenius.hpp"
#include "dgbv/json_io.hpp"
#include "dgbv/model.hpp"
#include "dgbv/pipeline.hpp"
#include "dgbv/rational.hpp"

namespace py = pybind11;
using namespace dgbv;

PYBIND11_MODULE(_core, m) {
	m.doc() = "exact symplectic dGBV checks and Frobenius data on finite models";

	py::class_<Model>(m, "Model")
	    .def_property_readonly("name", &Model::name)
	    .def_property_readonly("m", &Model::m)
	    .def_property_readonly("ngen", &Model::ngen)
	    .def("__repr__", [](const Model& mod) {
		    return "<Model '" + mod.name() + "' on " + std::to_string(mod.ngen()) +
		           " generators>";
	    });

	m.def("build_torus", &build_torus, py::arg("m"), "symplectic torus model on 2m generators");
	m.def("build_kodaira_thurston", &build_kodaira_thurston,
	      "the Kodaira-Thurston nilmanifold model");
	m.def("load_model", &load_model, py::arg("path"), "load a model from a JSON file");

	m.def(
	    "validate_ok", [](const Model& mod) { return validate(mod).all_pass(); },
	    py::arg("model"), "run the six structural checks");
	m.def(
	    "first_failure",
	    [](const Model& mod) {
		    auto rep = validate(mod);
		    return rep.all_pass() ? std::string() : rep.first_failure();
	    },
	    py::arg("model"), "name of the first failing structural check, or ''");

	m.def(
	    "betti", [](const Model& mod) { return cohomology_d(mod).betti; }, py::arg("model"),
	    "Betti numbers of (Omega, d)");
	m.def("delta_betti", &cohomology_delta_dims, py::arg("model"),
	      "dimensions of the canonical (Delta) cohomology");
	m.def(
	    "all_harmonic", [](const Model& mod) { return cohomology_d(mod).all_harmonic; },
	    py::arg("model"), "whether every class has a d- and Delta-closed representative");
	m.def(
	    "mathieu",
	    [](const Model& mod) {
		    auto rep = mathieu_check(mod);
		    return py::make_tuple(rep.hard_lefschetz, rep.quotient_iso, rep.harmonic_reps);
	    },
	    py::arg("model"), "the three equivalent verdicts (i), (ii), (iii)");
	m.def(
	    "hard_lefschetz",
	    [](const Model& mod) {
		    auto basis = cohomology_d(mod);
		    return hard_lefschetz_check(mod, basis).pass;
	    },
	    py::arg("model"));

	m.def(
	    "potential_terms",
	    [](const Model& mod, int order) {
		    FrobeniusData data = frobenius_build(mod, order);
		    py::list out;
		    /* Materialize the trimmed series: terms() references its owner, and a
		     * temporary range initializer would dangle in the loop body. */
		    SeriesForm trimmed = data.phi.with_truncation(data.certified_degree);
		    for (const auto& [key, c] : trimmed.terms()) {
			    py::dict mono;
			    for (const auto& [var, exp] : key.mono.factors) mono[py::int_(var)] = exp;
			    out.append(py::make_tuple(mono, rat_to_string(c)));
		    }
		    return out;
	    },
	    py::arg("model"), py::arg("order") = 2,
	    "certified potential terms as (monomial, coefficient) pairs; raises ValueError when "
	    "the hard Lefschetz gate refuses the model");

	m.def(
	    "wdvv_ok",
	    [](const Model& mod, int order) { return frobenius_build(mod, order).wdvv.pass; },
	    py::arg("model"), py::arg("order") = 2);

	m.def(
	    "run",
	    [](const std::string& command, const std::string& builtin, const std::string& model,
	       int order, const std::string& output, std::uint64_t seed) {
		    RunConfig cfg;
		    cfg.command = command;
		    cfg.builtin = builtin;
		    cfg.model_path = model;
		    cfg.order = order;
		    cfg.output = output;
		    cfg.seed = seed;
		    RunResult res = run(cfg);
		    return py::make_tuple(res.exit_code, res.text);
	    },
	    py::arg("command"), py::arg("builtin") = "", py::arg("model") = "",
	    py::arg("order") = 2, py::arg("output") = "json", py::arg("seed") = 0,
	    "run a full pipeline command; returns (exit_code, report_text)");
}
