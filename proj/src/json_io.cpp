#include "dgbv/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace dgbv {

namespace {

int require_int(const nlohmann::json& j, const char* what) {
	if (!j.is_number_integer())
		throw std::invalid_argument(std::string("model: ") + what + " must be an integer");
	return j.get<int>();
}

Rat require_scalar(const nlohmann::json& j, const char* what) {
	if (!j.is_string())
		throw std::invalid_argument(std::string("model: ") + what +
		                            " coefficient must be a fraction string");
	return rat_from_string(j.get<std::string>());
}

}  // namespace

Model model_from_json(const nlohmann::json& j) {
	if (!j.is_object()) throw std::invalid_argument("model: top level must be an object");
	if (!j.contains("name") || !j.at("name").is_string())
		throw std::invalid_argument("model: missing string field 'name'");
	if (!j.contains("m")) throw std::invalid_argument("model: missing field 'm'");
	int m = require_int(j.at("m"), "'m'");
	if (m < 1) throw std::invalid_argument("model: 'm' must be positive");

	std::vector<DiffEntry> diff;
	if (j.contains("diff")) {
		if (!j.at("diff").is_array())
			throw std::invalid_argument("model: 'diff' must be an array");
		for (const auto& e : j.at("diff")) {
			if (!e.is_array() || e.size() != 4)
				throw std::invalid_argument("model: each diff entry is [k, i, j, \"p/q\"]");
			diff.push_back({require_int(e[0], "diff k"), require_int(e[1], "diff i"),
			                require_int(e[2], "diff j"), require_scalar(e[3], "diff")});
		}
	}
	std::vector<OmegaEntry> omega;
	if (!j.contains("omega") || !j.at("omega").is_array())
		throw std::invalid_argument("model: missing array field 'omega'");
	for (const auto& e : j.at("omega")) {
		if (!e.is_array() || e.size() != 3)
			throw std::invalid_argument("model: each omega entry is [a, b, \"p/q\"]");
		omega.push_back({require_int(e[0], "omega a"), require_int(e[1], "omega b"),
		                 require_scalar(e[2], "omega")});
	}
	return Model(j.at("name").get<std::string>(), m, std::move(diff), std::move(omega));
}

ojson model_to_json(const Model& model) {
	ojson j;
	j["name"] = model.name();
	j["m"] = model.m();
	j["diff"] = ojson::array();
	for (const auto& e : model.diff())
		j["diff"].push_back(ojson::array({e.k, e.i, e.j, rat_to_string(e.c)}));
	j["omega"] = ojson::array();
	for (const auto& e : model.omega())
		j["omega"].push_back(ojson::array({e.a, e.b, rat_to_string(e.c)}));
	return j;
}

Model load_model(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw std::invalid_argument("cannot open model file: " + path);
	nlohmann::json j;
	try {
		j = nlohmann::json::parse(in);
	} catch (const nlohmann::json::parse_error& e) {
		throw std::invalid_argument("parse error in " + path + ": " + e.what());
	}
	return model_from_json(j);
}

namespace {

ojson exps_to_json(const Monomial& m) {
	ojson e = ojson::object();
	for (const auto& [var, exp] : m.factors) e[std::to_string(var)] = exp;
	return e;
}

ojson term_to_json(const Rat& c, Subset s, const Monomial& m) {
	ojson idx = ojson::array();
	for (int i : subset_indices(s)) idx.push_back(i);
	return ojson::array({rat_to_string(c), std::move(idx), exps_to_json(m)});
}

}  // namespace

ojson form_to_json(const Form& f) {
	ojson terms = ojson::array();
	for (const auto& [s, c] : f.terms()) terms.push_back(term_to_json(c, s, Monomial{}));
	return terms;
}

ojson series_to_json(const SeriesForm& f) {
	ojson terms = ojson::array();
	for (const auto& [key, c] : f.terms()) terms.push_back(term_to_json(c, key.sub, key.mono));
	return terms;
}

ojson mat_to_json(const Mat& m) {
	ojson rows = ojson::array();
	for (std::size_t i = 0; i < m.rows(); ++i) {
		ojson row = ojson::array();
		for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
		rows.push_back(std::move(row));
	}
	return rows;
}

ojson rank3_to_json(const std::vector<std::vector<std::vector<Rat>>>& t) {
	ojson a = ojson::array();
	for (const auto& plane : t) {
		ojson p = ojson::array();
		for (const auto& row : plane) {
			ojson r = ojson::array();
			for (const auto& c : row) r.push_back(rat_to_string(c));
			p.push_back(std::move(r));
		}
		a.push_back(std::move(p));
	}
	return a;
}

ojson validation_to_json(const ValidationReport& rep) {
	ojson j;
	j["checks"] = ojson::array();
	for (const auto& c : rep.checks) {
		ojson e;
		e["name"] = c.name;
		e["pass"] = c.pass;
		if (!c.detail.empty()) e["detail"] = c.detail;
		j["checks"].push_back(std::move(e));
	}
	j["pass"] = rep.all_pass();
	return j;
}

ojson cohomology_to_json(const Model& model, const CohomologyBasis& basis,
                         const std::vector<int>& delta_dims) {
	(void)model;
	ojson j;
	j["betti"] = basis.betti;
	j["delta_betti"] = delta_dims;
	j["all_harmonic"] = basis.all_harmonic;
	j["classes"] = ojson::array();
	for (std::size_t k = 0; k < basis.by_degree.size(); ++k)
		for (const auto& cls : basis.by_degree[k]) {
			ojson e;
			e["degree"] = static_cast<int>(k);
			e["harmonic"] = cls.harmonic;
			e["rep"] = form_to_json(cls.rep);
			j["classes"].push_back(std::move(e));
		}
	return j;
}

ojson lefschetz_to_json(const LefschetzReport& rep) {
	ojson j;
	j["betti"] = rep.betti;
	j["lefschetz_ranks"] = rep.ranks;
	j["iso"] = rep.iso;
	j["pass"] = rep.pass;
	if (rep.first_failure >= 0) j["first_failure"] = rep.first_failure;
	return j;
}

ojson mathieu_to_json(const MathieuReport& rep) {
	ojson j;
	j["mathieu"] = ojson::array({rep.hard_lefschetz, rep.quotient_iso, rep.harmonic_reps});
	j["consistent"] = rep.consistent();
	return j;
}

ojson dd_delta_to_json(const DdDeltaReport& rep) {
	ojson j;
	j["dim_im_d_delta"] = rep.dim_im_d_delta;
	j["dim_im_d_cap_ker_delta"] = rep.dim_im_d_cap_ker_delta;
	j["dim_im_delta_cap_ker_d"] = rep.dim_im_delta_cap_ker_d;
	j["equal"] = rep.equal;
	j["pass"] = rep.pass;
	return j;
}

ojson formality_to_json(const FormalityReport& rep) {
	ojson j;
	if (rep.refused) {
		j["refused"] = true;
		j["reason"] = rep.reason;
		return j;
	}
	j["refused"] = false;
	j["h_ker_delta"] = rep.h_ker_delta;
	j["inclusion_iso"] = rep.incl_iso;
	j["projection_iso"] = rep.proj_iso;
	j["pass"] = rep.pass;
	return j;
}

}  // namespace dgbv
