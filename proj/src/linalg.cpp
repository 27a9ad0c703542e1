#include "dgbv/linalg.hpp"

#include <stdexcept>

namespace dgbv {

Mat Mat::identity(std::size_t n) {
	Mat m(n, n);
	for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
	return m;
}

std::vector<Rat> Mat::row(std::size_t i) const {
	std::vector<Rat> r(nc_);
	for (std::size_t j = 0; j < nc_; ++j) r[j] = (*this)(i, j);
	return r;
}

void Mat::append_row(const std::vector<Rat>& r) {
	if (nc_ == 0 && nr_ == 0) nc_ = r.size();
	if (r.size() != nc_) throw std::invalid_argument("append_row: width mismatch");
	a_.insert(a_.end(), r.begin(), r.end());
	++nr_;
}

std::vector<std::size_t> rref(Mat& m) {
	std::vector<std::size_t> pivots;
	std::size_t r = 0;
	for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
		std::size_t p = r;
		while (p < m.rows() && m(p, c) == 0) ++p;
		if (p == m.rows()) continue;
		if (p != r)
			for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
		Rat inv = Rat(1) / m(r, c);
		for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
		for (std::size_t i = 0; i < m.rows(); ++i) {
			if (i == r || m(i, c) == 0) continue;
			Rat f = m(i, c);
			for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
		}
		pivots.push_back(c);
		++r;
	}
	return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

Rat det(Mat m) {
	if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
	Rat d = 1;
	std::size_t n = m.rows();
	for (std::size_t c = 0; c < n; ++c) {
		std::size_t p = c;
		while (p < n && m(p, c) == 0) ++p;
		if (p == n) return 0;
		if (p != c) {
			for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
			d = -d;
		}
		d *= m(c, c);
		Rat inv = Rat(1) / m(c, c);
		for (std::size_t i = c + 1; i < n; ++i) {
			if (m(i, c) == 0) continue;
			Rat f = m(i, c) * inv;
			for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
		}
	}
	return d;
}

Mat inverse(const Mat& m) {
	if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
	std::size_t n = m.rows();
	Mat aug(n, 2 * n);
	for (std::size_t i = 0; i < n; ++i) {
		for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
		aug(i, n + i) = 1;
	}
	auto piv = rref(aug);
	if (piv.size() != n || piv.back() != n - 1)
		throw std::invalid_argument("inverse: singular matrix");
	Mat out(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
	return out;
}

std::optional<std::vector<Rat>> solve(const Mat& a, const std::vector<Rat>& b) {
	if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
	Mat aug(a.rows(), a.cols() + 1);
	for (std::size_t i = 0; i < a.rows(); ++i) {
		for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
		aug(i, a.cols()) = b[i];
	}
	auto piv = rref(aug);
	if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;  // 0 = 1 row
	std::vector<Rat> x(a.cols());
	for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols());
	return x;
}

Mat kernel(const Mat& a) {
	Mat m = a;
	auto piv = rref(m);
	std::vector<bool> is_piv(a.cols(), false);
	for (auto c : piv) is_piv[c] = true;
	Mat out(0, a.cols());
	for (std::size_t c = 0; c < a.cols(); ++c) {
		if (is_piv[c]) continue;
		std::vector<Rat> v(a.cols());
		v[c] = 1;
		for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, c);
		out.append_row(v);
	}
	rref(out);  // canonical orientation (already echelon up to scaling)
	return out;
}

Mat transpose(const Mat& m) {
	Mat t(m.cols(), m.rows());
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
	return t;
}

std::vector<Rat> mat_vec(const Mat& a, const std::vector<Rat>& x) {
	if (x.size() != a.cols()) throw std::invalid_argument("mat_vec: size mismatch");
	std::vector<Rat> y(a.rows());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t j = 0; j < a.cols(); ++j)
			if (a(i, j) != 0 && x[j] != 0) y[i] += a(i, j) * x[j];
	return y;
}

RowSpace::RowSpace(Mat m) {
	pivots_ = rref(m);
	basis_ = Mat(0, m.cols());
	for (std::size_t r = 0; r < pivots_.size(); ++r) basis_.append_row(m.row(r));
}

RowSpace::RowSpace(std::size_t ambient) : basis_(0, ambient) {}

std::vector<Rat> RowSpace::reduce(std::vector<Rat> v) const {
	if (v.size() != ambient()) throw std::invalid_argument("reduce: size mismatch");
	for (std::size_t r = 0; r < basis_.rows(); ++r) {
		Rat f = v[pivots_[r]];
		if (f == 0) continue;
		for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis_(r, j);
	}
	return v;
}

bool RowSpace::contains(const std::vector<Rat>& v) const {
	for (const Rat& x : reduce(v))
		if (x != 0) return false;
	return true;
}

bool RowSpace::contains_all(const RowSpace& other) const {
	for (std::size_t r = 0; r < other.basis().rows(); ++r)
		if (!contains(other.basis().row(r))) return false;
	return true;
}

RowSpace space_sum(const RowSpace& a, const RowSpace& b) {
	Mat m = a.basis();
	for (std::size_t r = 0; r < b.basis().rows(); ++r) m.append_row(b.basis().row(r));
	return RowSpace(m);
}

/* x in A cap B iff x = u A = v B; kernel of [A^T | -B^T] yields (u, v). */
RowSpace space_intersect(const RowSpace& a, const RowSpace& b) {
	if (a.ambient() != b.ambient()) throw std::invalid_argument("intersect: ambient mismatch");
	std::size_t n = a.ambient(), da = a.dim(), db = b.dim();
	if (da == 0 || db == 0) return RowSpace(n);
	Mat sys(n, da + db);
	for (std::size_t j = 0; j < n; ++j) {
		for (std::size_t r = 0; r < da; ++r) sys(j, r) = a.basis()(r, j);
		for (std::size_t r = 0; r < db; ++r) sys(j, da + r) = -b.basis()(r, j);
	}
	Mat ker = kernel(sys);
	Mat out(0, n);
	for (std::size_t r = 0; r < ker.rows(); ++r) {
		std::vector<Rat> v(n);
		for (std::size_t k = 0; k < da; ++k)
			if (ker(r, k) != 0)
				for (std::size_t j = 0; j < n; ++j) v[j] += ker(r, k) * a.basis()(k, j);
		out.append_row(v);
	}
	return RowSpace(out);
}

bool same_space(const RowSpace& a, const RowSpace& b) {
	return a.contains_all(b) && b.contains_all(a);
}

}  // namespace dgbv
