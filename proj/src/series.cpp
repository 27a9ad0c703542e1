#include "dgbv/series.hpp"

#include <stdexcept>

namespace dgbv {

int Monomial::degree() const {
	int d = 0;
	for (auto& [v, e] : factors) d += e;
	return d;
}

int Monomial::exponent(int var) const {
	for (auto& [v, e] : factors)
		if (v == var) return e;
	return 0;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
	int da = a.degree(), db = b.degree();
	if (da != db) return da < db;
	return a.factors < b.factors;
}

int monomial_parity(const Monomial& m, const std::vector<std::uint8_t>& var_parity) {
	int p = 0;
	for (auto& [v, e] : m.factors)
		if (var_parity.at(v)) p ^= (e & 1);
	return p;
}

std::optional<std::pair<Monomial, int>> monomial_mul(const Monomial& a, const Monomial& b,
                                                     const std::vector<std::uint8_t>& var_parity) {
	/* Merge sorted factor lists. Koszul sign: each odd variable of b passes
	 * the odd a-variables that remain to its right. */
	Monomial out;
	int sign = 0;
	std::size_t ia = 0, ib = 0;
	int odd_tail_a = 0;  // odd a-variables not yet emitted
	for (auto& [v, e] : a.factors)
		if (var_parity.at(v)) ++odd_tail_a;
	while (ia < a.factors.size() || ib < b.factors.size()) {
		bool take_a;
		if (ia == a.factors.size())
			take_a = false;
		else if (ib == b.factors.size())
			take_a = true;
		else if (a.factors[ia].first == b.factors[ib].first) {
			int v = a.factors[ia].first;
			if (var_parity.at(v)) return std::nullopt;  // odd variable squared
			out.factors.emplace_back(v, a.factors[ia].second + b.factors[ib].second);
			++ia;
			++ib;
			continue;
		} else
			take_a = a.factors[ia].first < b.factors[ib].first;
		if (take_a) {
			if (var_parity.at(a.factors[ia].first)) --odd_tail_a;
			out.factors.push_back(a.factors[ia++]);
		} else {
			if (var_parity.at(b.factors[ib].first)) sign ^= (odd_tail_a & 1);
			out.factors.push_back(b.factors[ib++]);
		}
	}
	return std::make_pair(out, sign ? -1 : 1);
}

bool SeriesKeyLess::operator()(const SeriesKey& a, const SeriesKey& b) const {
	if (monomial_less(a.mono, b.mono)) return true;
	if (monomial_less(b.mono, a.mono)) return false;
	return SubsetLess{}(a.sub, b.sub);
}

SeriesForm::SeriesForm(int ngen, std::vector<std::uint8_t> var_parity, int truncation)
    : ngen_(ngen), trunc_(truncation), var_parity_(std::move(var_parity)) {
	if (truncation < 0) throw std::invalid_argument("series: negative truncation order");
}

SeriesForm SeriesForm::from_form(const Form& f, std::vector<std::uint8_t> var_parity,
                                 int truncation) {
	SeriesForm out(f.ngen(), std::move(var_parity), truncation);
	for (const auto& [s, c] : f.terms()) out.add_term(Monomial{}, s, c);
	return out;
}

void SeriesForm::add_term(const Monomial& m, Subset s, const Rat& c) {
	if (c == 0) return;
	if (m.degree() > trunc_) {
		truncated_ = true;
		return;
	}
	SeriesKey key{m, s};
	auto [it, inserted] = terms_.try_emplace(key, c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0) terms_.erase(it);
	}
}

Rat SeriesForm::coeff(const Monomial& m, Subset s) const {
	auto it = terms_.find(SeriesKey{m, s});
	return it == terms_.end() ? Rat(0) : it->second;
}

SeriesForm SeriesForm::with_truncation(int truncation) const {
	SeriesForm out(ngen_, var_parity_, truncation);
	out.truncated_ = truncated_;
	for (const auto& [k, c] : terms_) out.add_term(k.mono, k.sub, c);
	return out;
}

SeriesForm SeriesForm::x_degree_part(int n) const {
	SeriesForm out(ngen_, var_parity_, trunc_);
	for (const auto& [k, c] : terms_)
		if (k.mono.degree() == n) out.add_term(k.mono, k.sub, c);
	return out;
}

std::optional<int> SeriesForm::parity() const {
	if (terms_.empty()) return 0;
	std::optional<int> p;
	for (const auto& [k, c] : terms_) {
		int tp = (monomial_parity(k.mono, var_parity_) + subset_size(k.sub)) & 1;
		if (!p)
			p = tp;
		else if (*p != tp)
			return std::nullopt;
	}
	return p;
}

namespace {

void require_compatible(const SeriesForm& f, const SeriesForm& g) {
	if (f.ngen() != g.ngen()) throw std::invalid_argument("series arithmetic: model mismatch");
	if (f.var_parity() != g.var_parity())
		throw std::invalid_argument("series arithmetic: variable table mismatch");
}

}  // namespace

SeriesForm SeriesForm::operator+(const SeriesForm& g) const {
	require_compatible(*this, g);
	SeriesForm out(ngen_, var_parity_, std::min(trunc_, g.trunc_));
	out.truncated_ = truncated_ || g.truncated_;
	for (const auto& [k, c] : terms_) out.add_term(k.mono, k.sub, c);
	for (const auto& [k, c] : g.terms_) out.add_term(k.mono, k.sub, c);
	return out;
}

SeriesForm SeriesForm::operator-(const SeriesForm& g) const { return *this + (-g); }

SeriesForm SeriesForm::operator-() const { return *this * Rat(-1); }

SeriesForm SeriesForm::operator*(const Rat& c) const {
	SeriesForm out(ngen_, var_parity_, trunc_);
	out.truncated_ = truncated_;
	if (c == 0) return out;
	for (const auto& [k, q] : terms_) out.add_term(k.mono, k.sub, q * c);
	return out;
}

SeriesForm wedge(const SeriesForm& f, const SeriesForm& g) {
	require_compatible(f, g);
	SeriesForm out(f.ngen(), f.var_parity(), std::min(f.truncation_order(), g.truncation_order()));
	out.truncated_ = f.truncated() || g.truncated();
	for (const auto& [ka, ca] : f.terms()) {
		int deg_a = subset_size(ka.sub);
		for (const auto& [kb, cb] : g.terms()) {
			if (subsets_overlap(ka.sub, kb.sub)) continue;
			auto mm = monomial_mul(ka.mono, kb.mono, f.var_parity());
			if (!mm) continue;
			auto [mono, msign] = *mm;
			/* g's monomial commutes past f's form part. */
			int s = msign * merge_sign(ka.sub, kb.sub);
			if ((monomial_parity(kb.mono, f.var_parity()) & 1) && (deg_a & 1)) s = -s;
			out.add_term(mono, ka.sub | kb.sub, ca * cb * s);
		}
	}
	return out;
}

namespace {

/* Lift a Form operator coefficientwise; odd operators pick up (-1)^{parity of
 * the passed monomial}. */
template <class Op>
SeriesForm lift(const SeriesForm& f, bool odd_op, Op&& op) {
	std::map<Monomial, Form, decltype(&monomial_less)> grouped(&monomial_less);
	for (const auto& [k, c] : f.terms()) {
		auto [it, ins] = grouped.try_emplace(k.mono, Form(f.ngen()));
		it->second.add_term(k.sub, c);
	}
	SeriesForm result(f.ngen(), f.var_parity(), f.truncation_order());
	if (f.truncated()) result.mark_truncated();
	for (const auto& [mono, form] : grouped) {
		Form g = op(form);
		if (g.is_zero()) continue;
		int sign = 1;
		if (odd_op && (monomial_parity(mono, f.var_parity()) & 1)) sign = -1;
		for (const auto& [s, c] : g.terms()) result.add_term(mono, s, c * sign);
	}
	return result;
}

}  // namespace

SeriesForm d(const Model& model, const SeriesForm& f) {
	return lift(f, true, [&](const Form& h) { return d(model, h); });
}

SeriesForm lstar(const Model& model, const SeriesForm& f) {
	return lift(f, false, [&](const Form& h) { return lstar(model, h); });
}

SeriesForm delta(const Model& model, const SeriesForm& f) {
	return lift(f, true, [&](const Form& h) { return delta(model, h); });
}

SeriesForm bracket(const Model& model, const SeriesForm& f, const SeriesForm& g) {
	auto pf = f.parity();
	if (!pf) throw std::invalid_argument("bracket: first argument must be parity-homogeneous");
	Rat sign = (*pf & 1) ? -1 : 1;
	SeriesForm fg = wedge(f, g);
	return (delta(model, fg) - wedge(delta(model, f), g)) * sign - wedge(f, delta(model, g));
}

SeriesForm deriv(const SeriesForm& f, int var) {
	if (var < 0 || var >= f.var_count())
		throw std::invalid_argument("deriv: variable index out of range");
	SeriesForm out(f.ngen(), f.var_parity(), f.truncation_order());
	bool odd = f.var_parity()[var] & 1;
	for (const auto& [k, c] : f.terms()) {
		int e = k.mono.exponent(var);
		if (e == 0) continue;
		int sign = 1;
		if (odd) {
			/* Commute x^var to the front: past every odd variable before it. */
			int before = 0;
			for (auto& [v, ex] : k.mono.factors) {
				if (v >= var) break;
				if (f.var_parity()[v]) before += ex;
			}
			if (before & 1) sign = -1;
		}
		Monomial m;
		for (auto& [v, ex] : k.mono.factors) {
			if (v == var) {
				if (ex > 1) m.factors.emplace_back(v, ex - 1);
			} else
				m.factors.emplace_back(v, ex);
		}
		out.add_term(m, k.sub, c * e * sign);
	}
	if (f.truncated()) out.mark_truncated();
	return out;
}

Form at_zero(const SeriesForm& f) {
	Form out(f.ngen());
	for (const auto& [k, c] : f.terms())
		if (k.mono.empty()) out.add_term(k.sub, c);
	return out;
}

SeriesForm integral_series(const Model& model, const SeriesForm& f) {
	SeriesForm out(f.ngen(), f.var_parity(), f.truncation_order());
	Subset top = model.top_subset();
	for (const auto& [k, c] : f.terms())
		if (k.sub == top) out.add_term(k.mono, 0, c);
	if (f.truncated()) out.mark_truncated();
	return out;
}

}  // namespace dgbv
