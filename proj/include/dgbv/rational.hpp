#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace dgbv {

/* Exact rational scalar. All core arithmetic is exact; no floating point
 * anywhere in the engine. */
using Rat = boost::multiprecision::cpp_rational;

/* Parse "p/q" or "p" (optional leading '-'). Throws std::invalid_argument on
 * malformed input or zero denominator. */
Rat rat_from_string(std::string_view s);

/* Canonical form: lowest terms, denominator > 0, "p/q" with the "/q" part
 * omitted when q == 1. Round-trips through rat_from_string. */
std::string rat_to_string(const Rat& r);

}  // namespace dgbv
