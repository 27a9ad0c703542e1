#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dgbv/rational.hpp"

namespace dgbv {

/* Dense matrix over exact rationals. Row-major. */
class Mat {
 public:
	Mat() = default;
	Mat(std::size_t rows, std::size_t cols) : nr_(rows), nc_(cols), a_(rows * cols) {}

	static Mat identity(std::size_t n);

	std::size_t rows() const { return nr_; }
	std::size_t cols() const { return nc_; }
	Rat& operator()(std::size_t i, std::size_t j) { return a_[i * nc_ + j]; }
	const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * nc_ + j]; }

	std::vector<Rat> row(std::size_t i) const;
	void append_row(const std::vector<Rat>& r);

	bool operator==(const Mat&) const = default;

 private:
	std::size_t nr_ = 0, nc_ = 0;
	std::vector<Rat> a_;
};

/* In-place reduced row echelon form; pivots chosen left-to-right, first
 * nonzero row (deterministic). Returns pivot column indices. */
std::vector<std::size_t> rref(Mat& m);

std::size_t rank(Mat m);
Rat det(Mat m);
Mat inverse(const Mat& m);  // throws std::invalid_argument if singular

/* Particular solution of A x = b with every free variable set to zero;
 * nullopt when inconsistent. */
std::optional<std::vector<Rat>> solve(const Mat& a, const std::vector<Rat>& b);

/* Basis of the right null space, one vector per free column, rref'd rows. */
Mat kernel(const Mat& a);

Mat transpose(const Mat& m);
std::vector<Rat> mat_vec(const Mat& a, const std::vector<Rat>& x);

/* Subspace of Q^n as a reduced-echelon row space. Canonical: two equal
 * subspaces have identical basis matrices. */
class RowSpace {
 public:
	RowSpace() = default;
	explicit RowSpace(Mat m);           // rref + drop zero rows
	RowSpace(std::size_t ambient);      // zero subspace

	std::size_t dim() const { return basis_.rows(); }
	std::size_t ambient() const { return basis_.cols(); }
	const Mat& basis() const { return basis_; }
	const std::vector<std::size_t>& pivots() const { return pivots_; }

	/* Normal form of v modulo this subspace (pivot coordinates eliminated). */
	std::vector<Rat> reduce(std::vector<Rat> v) const;
	bool contains(const std::vector<Rat>& v) const;
	bool contains_all(const RowSpace& other) const;

 private:
	Mat basis_;
	std::vector<std::size_t> pivots_;
};

RowSpace space_sum(const RowSpace& a, const RowSpace& b);
RowSpace space_intersect(const RowSpace& a, const RowSpace& b);
bool same_space(const RowSpace& a, const RowSpace& b);  // double inclusion

}  // namespace dgbv
