#include "dgbv/form.hpp"

#include <bit>
#include <stdexcept>

namespace dgbv {

int subset_size(Subset s) { return std::popcount(s); }

bool subsets_overlap(Subset s, Subset t) { return (s & t) != 0; }

int merge_sign(Subset s, Subset t) {
	/* Count inversions: pairs (a in s, b in t) with a > b. */
	int inv = 0;
	for (Subset rest = t; rest; rest &= rest - 1) {
		int bit = std::countr_zero(rest);
		inv += std::popcount(s >> (bit + 1));
	}
	return (inv & 1) ? -1 : 1;
}

int subset_position(Subset s, int a) {
	Subset below = s & ((Subset(1) << (a - 1)) - 1);
	return std::popcount(below) + 1;
}

std::vector<int> subset_indices(Subset s) {
	std::vector<int> idx;
	for (; s; s &= s - 1) idx.push_back(std::countr_zero(s) + 1);
	return idx;
}

Subset subset_from_indices(const std::vector<int>& idx, int ngen) {
	Subset s = 0;
	for (int i : idx) {
		if (i < 1 || i > ngen) throw std::invalid_argument("generator index out of range");
		Subset bit = Subset(1) << (i - 1);
		if (s & bit) throw std::invalid_argument("repeated generator index");
		s |= bit;
	}
	return s;
}

bool SubsetLess::operator()(Subset a, Subset b) const {
	int pa = std::popcount(a), pb = std::popcount(b);
	if (pa != pb) return pa < pb;
	while (a && b) {
		int ia = std::countr_zero(a), ib = std::countr_zero(b);
		if (ia != ib) return ia < ib;
		a &= a - 1;
		b &= b - 1;
	}
	return false;
}

Form Form::scalar(int ngen, const Rat& c) {
	Form f(ngen);
	f.add_term(0, c);
	return f;
}

Form Form::basis(int ngen, std::initializer_list<int> idx) {
	return basis(ngen, std::vector<int>(idx));
}

Form Form::basis(int ngen, const std::vector<int>& idx) {
	Form f(ngen);
	f.add_term(subset_from_indices(idx, ngen), 1);
	return f;
}

void Form::add_term(Subset s, const Rat& c) {
	if (c == 0) return;
	auto [it, inserted] = terms_.try_emplace(s, c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0) terms_.erase(it);
	}
}

Rat Form::coeff(Subset s) const {
	auto it = terms_.find(s);
	return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<int> Form::degree() const {
	if (terms_.empty()) return 0;
	int d = subset_size(terms_.begin()->first);
	for (const auto& [s, c] : terms_)
		if (subset_size(s) != d) return std::nullopt;
	return d;
}

std::optional<int> Form::parity() const {
	if (terms_.empty()) return 0;
	int p = subset_size(terms_.begin()->first) & 1;
	for (const auto& [s, c] : terms_)
		if ((subset_size(s) & 1) != p) return std::nullopt;
	return p;
}

Form Form::operator+(const Form& g) const {
	if (ngen_ != g.ngen_) throw std::invalid_argument("form arithmetic: model mismatch");
	Form out = *this;
	for (const auto& [s, c] : g.terms_) out.add_term(s, c);
	return out;
}

Form Form::operator-(const Form& g) const { return *this + (-g); }

Form Form::operator-() const {
	Form out(ngen_);
	for (const auto& [s, c] : terms_) out.add_term(s, -c);
	return out;
}

Form Form::operator*(const Rat& c) const {
	Form out(ngen_);
	if (c == 0) return out;
	for (const auto& [s, k] : terms_) out.add_term(s, k * c);
	return out;
}

Form wedge(const Form& f, const Form& g) {
	if (f.ngen() != g.ngen()) throw std::invalid_argument("wedge: model mismatch");
	Form out(f.ngen());
	for (const auto& [s, cs] : f.terms()) {
		for (const auto& [t, ct] : g.terms()) {
			if (subsets_overlap(s, t)) continue;
			out.add_term(s | t, cs * ct * merge_sign(s, t));
		}
	}
	return out;
}

Form contract(const Form& f, int a) {
	if (a < 1 || a > f.ngen()) throw std::invalid_argument("contract: index out of range");
	Form out(f.ngen());
	Subset bit = Subset(1) << (a - 1);
	for (const auto& [s, c] : f.terms()) {
		if (!(s & bit)) continue;
		int sign = (subset_position(s, a) & 1) ? 1 : -1;  // (-1)^(pos-1)
		out.add_term(s & ~bit, c * sign);
	}
	return out;
}

}  // namespace dgbv
