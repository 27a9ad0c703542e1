#include "dgbv/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dgbv {

namespace {

bool is_integer_token(std::string_view s) {
	if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
	if (s.empty()) return false;
	for (char c : s)
		if (!std::isdigit(static_cast<unsigned char>(c))) return false;
	return true;
}

}  // namespace

Rat rat_from_string(std::string_view s) {
	auto bad = [&] { throw std::invalid_argument("not a rational: '" + std::string(s) + "'"); };
	std::string_view num = s, den;
	if (auto slash = s.find('/'); slash != std::string_view::npos) {
		num = s.substr(0, slash);
		den = s.substr(slash + 1);
		if (!is_integer_token(den)) bad();
	}
	if (!is_integer_token(num)) bad();
	/* cpp_int's string constructor rejects a leading '+'. */
	if (num.front() == '+') num.remove_prefix(1);
	if (!den.empty() && den.front() == '+') den.remove_prefix(1);
	boost::multiprecision::cpp_int p{std::string(num)};
	boost::multiprecision::cpp_int q = 1;
	if (!den.empty()) q = boost::multiprecision::cpp_int{std::string(den)};
	if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(s) + "'");
	return Rat(p, q);
}

std::string rat_to_string(const Rat& r) {
	std::string s = numerator(r).str();
	if (denominator(r) != 1) s += "/" + denominator(r).str();
	return s;
}

}  // namespace dgbv
