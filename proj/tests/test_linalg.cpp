#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "dgbv/linalg.hpp"

using namespace dgbv;

namespace {

Mat from_rows(std::initializer_list<std::initializer_list<int>> rows) {
	Mat m(0, rows.begin()->size());
	for (const auto& r : rows) {
		std::vector<Rat> v;
		for (int x : r) v.emplace_back(x);
		m.append_row(v);
	}
	return m;
}

}  // namespace

TEST_CASE("rank and rref pivots") {
	Mat a = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
	CHECK(rank(a) == 2);
	Mat id = Mat::identity(3);
	CHECK(rank(id) == 3);
	Mat z(3, 3);
	CHECK(rank(z) == 0);
}

TEST_CASE("determinant") {
	CHECK(det(from_rows({{2, 1}, {1, 1}})) == Rat(1));
	CHECK(det(from_rows({{1, 2}, {2, 4}})) == Rat(0));
	CHECK(det(from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})) == Rat(-1));
	CHECK(det(from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})) == Rat(30));
}

TEST_CASE("inverse round-trips and rejects singular") {
	Mat a = from_rows({{2, 1, 0}, {1, 1, 1}, {0, 1, 3}});
	Mat b = inverse(a);
	Mat prod(3, 3);
	for (std::size_t i = 0; i < 3; ++i)
		for (std::size_t j = 0; j < 3; ++j) {
			Rat s = 0;
			for (std::size_t k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
			prod(i, j) = s;
		}
	CHECK(prod == Mat::identity(3));
	CHECK_THROWS_AS(inverse(from_rows({{1, 2}, {2, 4}})), std::invalid_argument);
}

TEST_CASE("solve returns the particular solution with zero free variables") {
	// x + y = 1 with y free: canonical solution (1, 0).
	Mat a = from_rows({{1, 1}});
	auto x = solve(a, {Rat(1)});
	REQUIRE(x.has_value());
	CHECK((*x)[0] == Rat(1));
	CHECK((*x)[1] == Rat(0));
}

TEST_CASE("solve detects inconsistency") {
	Mat a = from_rows({{1, 1}, {2, 2}});
	CHECK_FALSE(solve(a, {Rat(1), Rat(3)}).has_value());
	CHECK(solve(a, {Rat(1), Rat(2)}).has_value());
}

TEST_CASE("solve on a full-rank square system") {
	Mat a = from_rows({{2, 1}, {1, -1}});
	auto x = solve(a, {Rat(4), Rat(-1)});
	REQUIRE(x.has_value());
	CHECK((*x)[0] == Rat(1));
	CHECK((*x)[1] == Rat(2));
}

TEST_CASE("kernel vectors annihilate the matrix") {
	Mat a = from_rows({{1, 2, 3}, {2, 4, 6}});
	Mat k = kernel(a);
	CHECK(k.rows() == 2);  // rank 1 in a 3-dim domain
	for (std::size_t r = 0; r < k.rows(); ++r) {
		std::vector<Rat> v(k.cols());
		for (std::size_t c = 0; c < k.cols(); ++c) v[c] = k(r, c);
		auto av = mat_vec(a, v);
		for (const auto& e : av) CHECK(e == Rat(0));
	}
	CHECK(kernel(Mat::identity(3)).rows() == 0);
}

TEST_CASE("row spaces: membership, reduction, dimension") {
	RowSpace s(from_rows({{1, 0, 1}, {0, 1, 1}}));
	CHECK(s.dim() == 2);
	CHECK(s.ambient() == 3);
	CHECK(s.contains({Rat(1), Rat(1), Rat(2)}));
	CHECK_FALSE(s.contains({Rat(0), Rat(0), Rat(1)}));
	// Reduction eliminates pivot coordinates; members reduce to zero.
	auto r = s.reduce({Rat(3), Rat(-2), Rat(1)});
	for (const auto& e : r) CHECK(e == Rat(0));
	auto nr = s.reduce({Rat(0), Rat(0), Rat(5)});
	CHECK(nr[2] == Rat(5));
}

TEST_CASE("zero subspace") {
	RowSpace z(std::size_t(4));
	CHECK(z.dim() == 0);
	CHECK(z.ambient() == 4);
	CHECK(z.contains({Rat(0), Rat(0), Rat(0), Rat(0)}));
	CHECK_FALSE(z.contains({Rat(1), Rat(0), Rat(0), Rat(0)}));
}

TEST_CASE("sum and intersection of subspaces") {
	// Two planes in R^3 meeting in a line.
	RowSpace p1(from_rows({{1, 0, 0}, {0, 1, 0}}));
	RowSpace p2(from_rows({{0, 1, 0}, {0, 0, 1}}));
	CHECK(space_sum(p1, p2).dim() == 3);
	RowSpace cap = space_intersect(p1, p2);
	CHECK(cap.dim() == 1);
	CHECK(cap.contains({Rat(0), Rat(7), Rat(0)}));
}

TEST_CASE("same_space ignores the presentation") {
	RowSpace a(from_rows({{1, 1, 0}, {0, 2, 2}}));
	RowSpace b(from_rows({{1, 3, 2}, {2, 2, 0}}));
	CHECK(same_space(a, b));
	RowSpace c(from_rows({{1, 0, 0}}));
	CHECK_FALSE(same_space(a, c));
}

TEST_CASE("transpose and mat_vec") {
	Mat a = from_rows({{1, 2, 3}, {4, 5, 6}});
	Mat t = transpose(a);
	CHECK(t.rows() == 3);
	CHECK(t.cols() == 2);
	CHECK(t(2, 1) == Rat(6));
	auto v = mat_vec(a, {Rat(1), Rat(0), Rat(-1)});
	CHECK(v[0] == Rat(-2));
	CHECK(v[1] == Rat(-2));
}
