#pragma once

#include <cstdint>
#include <string>

namespace dgbv {

/* One resolved CLI invocation. */
struct RunConfig {
	std::string command;     // validate | cohomology | lefschetz | formality | frobenius
	std::string builtin;     // "torus:<m>" or "kodaira-thurston" (empty when model_path set)
	std::string model_path;  // user model file (empty when builtin set)
	int order = 2;           // frobenius truncation
	std::string output = "text";  // text | json
	std::uint64_t seed = 0;       // property-sample seed, recorded in reports
	bool unsafe = false;          // also print uncertified potential coefficients
	std::string fault;            // test-only fault injection ("mathieu-disagree")
};

struct RunResult {
	int exit_code = 0;
	std::string text;  // full report body, newline-terminated
};

/* Exit codes: 0 success; 1 validation failure (model invalid or structural
 * check fails); 2 precondition failure (hard Lefschetz gate, dd-delta gate);
 * 3 internal inconsistency (theorem-level cross-checks disagree — a bug);
 * 64 usage error (unknown command/builtin, bad order). */
RunResult run(const RunConfig& config);

}  // namespace dgbv
