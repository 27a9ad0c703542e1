#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dgbv/cohomology.hpp"
#include "dgbv/form.hpp"
#include "dgbv/frobenius.hpp"
#include "dgbv/linalg.hpp"
#include "dgbv/model.hpp"
#include "dgbv/series.hpp"

namespace dgbv {

using ojson = nlohmann::ordered_json;

/* Model file schema:
 *   { "name": str, "m": int,
 *     "diff":  [[k, i, j, "p/q"], ...],   d e^k gets coefficient on e^i ^ e^j
 *     "omega": [[a, b, "p/q"], ...] }     a < b, upper-triangle entries
 * Scalars are exact fraction strings. Throws std::invalid_argument with a
 * message naming the offending field. */
Model model_from_json(const nlohmann::json& j);
ojson model_to_json(const Model& model);

/* Reads and parses a model file; wraps parse errors with the path. */
Model load_model(const std::string& path);

/* A form serializes as a list of terms ["p/q", [i1 < i2 < ...], {exps}],
 * where {exps} maps variable index (as a string) to exponent; plain forms
 * use {}. Terms appear in canonical order: x-degree, monomial, then subset
 * size and subset — byte-stable for golden files. */
ojson form_to_json(const Form& f);
ojson series_to_json(const SeriesForm& f);

ojson mat_to_json(const Mat& m);
ojson rank3_to_json(const std::vector<std::vector<std::vector<Rat>>>& t);

ojson validation_to_json(const ValidationReport& rep);
ojson cohomology_to_json(const Model& model, const CohomologyBasis& basis,
                         const std::vector<int>& delta_dims);
ojson lefschetz_to_json(const LefschetzReport& rep);
ojson mathieu_to_json(const MathieuReport& rep);
ojson dd_delta_to_json(const DdDeltaReport& rep);
ojson formality_to_json(const FormalityReport& rep);

}  // namespace dgbv
