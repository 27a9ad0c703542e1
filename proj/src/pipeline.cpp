#include "dgbv/pipeline.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include "dgbv/cohomology.hpp"
#include "dgbv/frobenius.hpp"
#include "dgbv/json_io.hpp"
#include "dgbv/properties.hpp"

namespace dgbv {

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInconsistency = 3;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

Model resolve_model(const RunConfig& config) {
	if (!config.builtin.empty()) {
		if (config.builtin == "kodaira-thurston") return build_kodaira_thurston();
		if (config.builtin.rfind("torus:", 0) == 0) {
			int m = 0;
			try {
				std::size_t used = 0;
				m = std::stoi(config.builtin.substr(6), &used);
				if (used != config.builtin.size() - 6) m = 0;
			} catch (const std::exception&) {
				m = 0;
			}
			if (m >= 1) return build_torus(m);
		}
		throw UsageError("unknown builtin '" + config.builtin +
		                 "' (expected torus:<m> or kodaira-thurston)");
	}
	if (config.model_path.empty()) throw UsageError("no model given (--builtin or --model)");
	return load_model(config.model_path);
}

std::string render(const RunConfig& config, const ojson& report, const std::string& text) {
	if (config.output == "json") return report.dump(2) + "\n";
	return text;
}

RunResult fail(const RunConfig& config, int code, const std::string& message) {
	ojson j;
	j["error"] = message;
	return {code, render(config, j, "error: " + message + "\n")};
}

ojson report_head(const RunConfig& config, const Model& model) {
	ojson j;
	j["model"] = model.name();
	j["seed"] = config.seed;
	return j;
}

std::string verdict(bool b) { return b ? "pass" : "FAIL"; }

void join_ints(std::ostream& os, const std::vector<int>& v) {
	for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
}

RunResult run_validate(const RunConfig& config, const Model& model,
                       const ValidationReport& vr) {
	auto bracket_props = bracket_axiom_suite(model, config.seed, 32);
	auto adjoint_props = adjointness_suite(model, config.seed + 1, 32);

	ojson j = report_head(config, model);
	ojson checks = validation_to_json(vr);
	j["checks"] = checks["checks"];
	j["property_checks"] = ojson::array();
	for (const auto* suite : {&bracket_props, &adjoint_props})
		for (const auto& p : *suite) {
			ojson e;
			e["name"] = p.name;
			e["samples"] = p.samples;
			e["pass"] = p.pass;
			if (!p.detail.empty()) e["detail"] = p.detail;
			j["property_checks"].push_back(std::move(e));
		}
	bool props_ok = all_pass(bracket_props) && all_pass(adjoint_props);
	j["pass"] = vr.all_pass() && props_ok;

	std::ostringstream t;
	t << "model: " << model.name() << "\n";
	for (const auto& c : vr.checks) {
		t << "  " << c.name << ": " << verdict(c.pass);
		if (!c.detail.empty()) t << " (" << c.detail << ")";
		t << "\n";
	}
	for (const auto* suite : {&bracket_props, &adjoint_props})
		for (const auto& p : *suite)
			t << "  " << p.name << ": " << verdict(p.pass) << " (" << p.samples
			  << " samples)\n";
	t << "result: " << (j["pass"].get<bool>() ? "pass" : "FAIL") << "\n";

	int code = 0;
	if (!vr.all_pass()) code = kExitValidation;
	else if (!props_ok) code = kExitInconsistency;
	return {code, render(config, j, t.str())};
}

RunResult run_cohomology(const RunConfig& config, const Model& model) {
	CohomologyBasis basis = cohomology_d(model);
	auto delta_dims = cohomology_delta_dims(model);

	ojson j = report_head(config, model);
	ojson body = cohomology_to_json(model, basis, delta_dims);
	for (auto& [k, v] : body.items()) j[k] = std::move(v);

	std::ostringstream t;
	t << "model: " << model.name() << "\nbetti:";
	for (int b : basis.betti) t << " " << b;
	t << "\ndelta betti:";
	for (int b : delta_dims) t << " " << b;
	int harmonic = 0;
	for (const auto& deg : basis.by_degree)
		for (const auto& c : deg) harmonic += c.harmonic ? 1 : 0;
	t << "\nharmonic representatives: " << harmonic << "/" << basis.total_rank() << "\n";
	return {0, render(config, j, t.str())};
}

RunResult run_lefschetz(const RunConfig& config, const Model& model) {
	CohomologyBasis basis = cohomology_d(model);
	LefschetzReport rep = hard_lefschetz_check(model, basis);

	ojson j = report_head(config, model);
	ojson body = lefschetz_to_json(rep);
	for (auto& [k, v] : body.items()) j[k] = std::move(v);

	std::ostringstream t;
	t << "model: " << model.name() << "\nbetti:";
	for (int b : rep.betti) t << " " << b;
	t << "\n";
	int m = (static_cast<int>(rep.betti.size()) - 1) / 2;
	for (std::size_t k = 0; k < rep.ranks.size(); ++k)
		t << "rank of [omega^" << k << "]: H^" << (m - static_cast<int>(k)) << " -> H^"
		  << (m + static_cast<int>(k)) << ": " << rep.ranks[k] << " of "
		  << rep.betti[m - static_cast<int>(k)] << " (" << verdict(rep.iso[k]) << ")\n";
	if (rep.pass) t << "verdict: pass\n";
	else t << "verdict: fail at k=" << rep.first_failure << "\n";
	return {0, render(config, j, t.str())};
}

RunResult run_formality(const RunConfig& config, const Model& model) {
	MathieuReport mathieu = mathieu_check(model);
	if (config.fault == "mathieu-disagree") mathieu.quotient_iso = !mathieu.quotient_iso;
	DdDeltaReport dd = dd_delta_check(model);
	FormalityReport wit = formality_witness(model);

	ojson j = report_head(config, model);
	ojson mj = mathieu_to_json(mathieu);
	for (auto& [k, v] : mj.items()) j[k] = std::move(v);
	j["dd_delta"] = dd_delta_to_json(dd);
	j["formality"] = formality_to_json(wit);

	std::ostringstream t;
	t << "model: " << model.name() << "\n";
	t << "mathieu: hard_lefschetz=" << (mathieu.hard_lefschetz ? "true" : "false")
	  << " quotient_iso=" << (mathieu.quotient_iso ? "true" : "false")
	  << " harmonic_reps=" << (mathieu.harmonic_reps ? "true" : "false")
	  << " (consistent: " << (mathieu.consistent() ? "yes" : "NO") << ")\n";
	t << "dd-delta dims (im dDelta | im d ^ ker Delta | im Delta ^ ker d):\n";
	for (std::size_t k = 0; k < dd.equal.size(); ++k)
		t << "  degree " << k << ": " << dd.dim_im_d_delta[k] << " | "
		  << dd.dim_im_d_cap_ker_delta[k] << " | " << dd.dim_im_delta_cap_ker_d[k] << " ("
		  << verdict(dd.equal[k]) << ")\n";
	if (wit.refused) t << "formality witness: refused (" << wit.reason << ")\n";
	else {
		t << "formality witness: h(ker Delta, d):";
		join_ints(t, wit.h_ker_delta);
		t << "; inclusion and projection " << (wit.pass ? "are" : "are NOT")
		  << " quasi-isomorphisms\n";
	}

	if (!mathieu.consistent())
		return {kExitInconsistency, render(config, j, t.str())};
	if (wit.refused) return {kExitPrecondition, render(config, j, t.str())};
	if (!wit.pass || !dd.pass) return {kExitInconsistency, render(config, j, t.str())};
	return {0, render(config, j, t.str())};
}

ojson phi_to_json(const SeriesForm& phi) {
	ojson terms = ojson::array();
	for (const auto& [key, c] : phi.terms()) {
		ojson exps = ojson::object();
		for (const auto& [var, exp] : key.mono.factors) exps[std::to_string(var)] = exp;
		terms.push_back(ojson::array({std::move(exps), rat_to_string(c)}));
	}
	return terms;
}

ojson euler_diagnostic(const SeriesForm& phi, const std::vector<int>& class_degrees) {
	ojson rows = ojson::array();
	for (const auto& [key, c] : phi.terms()) {
		ojson exps = ojson::object();
		int coh = 0;
		for (const auto& [var, exp] : key.mono.factors) {
			exps[std::to_string(var)] = exp;
			coh += exp * class_degrees[var];
		}
		rows.push_back(ojson::array({std::move(exps), key.mono.degree(), coh}));
	}
	return rows;
}

RunResult run_frobenius(const RunConfig& config, const Model& model) {
	FrobeniusData data;
	try {
		data = frobenius_build(model, config.order);
	} catch (const std::invalid_argument& e) {
		return fail(config, kExitPrecondition, e.what());
	} catch (const std::logic_error& e) {
		return fail(config, kExitInconsistency, e.what());
	}

	SeriesForm phi_out =
	    config.unsafe ? data.phi : data.phi.with_truncation(data.certified_degree);

	ojson j = report_head(config, model);
	j["order"] = config.order;
	j["certified_degree"] = data.certified_degree;
	j["metric"] = mat_to_json(data.metric);
	j["phi"] = phi_to_json(phi_out);
	j["euler_diagnostic"] = euler_diagnostic(phi_out, data.basis.degrees());
	ojson sc;
	sc["certified_degree"] = data.sc.certified_degree;
	sc["at_origin"] = rank3_to_json(data.at_origin);
	sc["cocycle_at_origin"] = rank3_to_json(data.cocycle_at_origin);
	sc["agree"] = data.product_agree;
	std::size_t r = data.sc.a.size();
	ojson poly = ojson::array();
	for (std::size_t i = 0; i < r; ++i) {
		ojson pi = ojson::array();
		for (std::size_t jj = 0; jj < r; ++jj) {
			ojson pj = ojson::array();
			for (std::size_t l = 0; l < r; ++l) {
				SeriesForm a = config.unsafe
				                   ? data.sc.a[i][jj][l]
				                   : data.sc.a[i][jj][l].with_truncation(
				                         data.sc.certified_degree);
				pj.push_back(series_to_json(a));
			}
			pi.push_back(std::move(pj));
		}
		poly.push_back(std::move(pi));
	}
	sc["polynomial"] = std::move(poly);
	j["structure_constants"] = std::move(sc);
	if (data.wdvv.pass) j["wdvv"] = "pass";
	else {
		ojson w;
		w["fail_at"] = ojson::array(
		    {data.wdvv.fail_at[0], data.wdvv.fail_at[1], data.wdvv.fail_at[2]});
		j["wdvv"] = std::move(w);
	}

	std::ostringstream t;
	t << "model: " << model.name() << "\norder: " << config.order
	  << "\ncertified degree (phi): " << data.certified_degree
	  << "\nclasses: " << data.basis.total_rank() << "\nbetti:";
	for (int b : data.basis.betti) t << " " << b;
	t << "\nphi terms (printed): " << phi_out.terms().size()
	  << "\nproduct agreement at x=0: " << verdict(data.product_agree)
	  << "\nwdvv through degree " << data.wdvv.through_degree << ": "
	  << (data.wdvv.pass ? "pass" : "FAIL") << "\n";

	if (!data.product_agree)
		return {kExitInconsistency, render(config, j, t.str())};
	if (!data.wdvv.pass) return {kExitInconsistency, render(config, j, t.str())};
	return {0, render(config, j, t.str())};
}

}  // namespace

RunResult run(const RunConfig& config) {
	try {
		if (config.output != "text" && config.output != "json")
			throw UsageError("unknown output format '" + config.output + "'");
		if (config.order < 1) throw UsageError("order must be >= 1");
		Model model = resolve_model(config);

		ValidationReport vr = validate(model);
		if (config.command == "validate") return run_validate(config, model, vr);
		if (!vr.all_pass())
			return fail(config, kExitValidation,
			            "model fails validation: " + vr.first_failure());

		if (config.command == "cohomology") return run_cohomology(config, model);
		if (config.command == "lefschetz") return run_lefschetz(config, model);
		if (config.command == "formality") return run_formality(config, model);
		if (config.command == "frobenius") return run_frobenius(config, model);
		throw UsageError("unknown command '" + config.command + "'");
	} catch (const UsageError& e) {
		return fail(config, kExitUsage, e.what());
	} catch (const std::invalid_argument& e) {
		return fail(config, kExitValidation, e.what());
	} catch (const std::logic_error& e) {
		return fail(config, kExitInconsistency, e.what());
	}
}

}  // namespace dgbv
