#include <catch2/catch_amalgamated.hpp>

#include "regalg/cpoly.hpp"

using namespace regalg;

namespace {
CommPoly v(const char* name) { return CommPoly::variable(name); }
} // namespace

TEST_CASE("ring operations") {
	CommPoly a = v("a"), b = v("b");
	CHECK(a * b == b * a);
	CHECK((a + b) * (a - b) == a * a - b * b);
	CHECK((a + b).pow(2) == a * a + CycScalar(2L) * (a * b) + b * b);
	CHECK((a - a).is_zero());
	CHECK(CommPoly(0L).is_zero());
	CHECK(CommPoly(5L).is_constant());
	CHECK(CommPoly(5L).constant_value() == CycScalar(5L));
	CHECK_FALSE(a.is_constant());

	CommPoly p = a * a * b + b;
	CHECK(p.total_degree() == 3);
	CHECK(p.degree_in(var_id("a")) == 2);
	CHECK(p.degree_in(var_id("b")) == 1);
	CHECK(p.vars_used() == std::vector<int>{var_id("a"), var_id("b")});
}

TEST_CASE("substitution and evaluation") {
	CommPoly a = v("a"), b = v("b");
	CommPoly p = a * a + b;
	CHECK(p.substitute(var_id("a"), CycScalar(3L)) == CommPoly(9L) + b);
	CHECK(p.substitute(var_id("a"), b) == b * b + b);

	std::map<int, CycScalar> pt{{var_id("a"), CycScalar(2L)}, {var_id("b"), CycScalar(-1L)}};
	CHECK(p.evaluate(pt) == CycScalar(3L));
	CHECK_THROWS_AS(p.evaluate({}), std::invalid_argument);
}

TEST_CASE("exact division") {
	CommPoly a = v("a"), b = v("b");
	CommPoly prod = (a + b) * (a - b);
	auto q = exact_divide(prod, a + b);
	REQUIRE(q.has_value());
	CHECK(*q == a - b);
	CHECK_FALSE(exact_divide(prod + CommPoly(1L), a + b).has_value());
	CHECK_THROWS_AS(exact_divide(prod, CommPoly()), std::invalid_argument);
}

TEST_CASE("deterministic nonvanishing point") {
	CommPoly a = v("a"), b = v("b");
	// a*(a-1)*(a-2) forces the search past several small values
	CommPoly p = a * (a - CommPoly(1L)) * (a - CommPoly(2L)) * b;
	auto pt = find_nonvanishing(p);
	REQUIRE(pt.has_value());
	CHECK(p.evaluate(*pt) != CycScalar(0L));
	CHECK_FALSE(find_nonvanishing(CommPoly()).has_value());
}

TEST_CASE("cofactor determinant") {
	Mat<CommPoly> m(2, 2);
	m.at(0, 0) = v("a");
	m.at(0, 1) = v("b");
	m.at(1, 0) = v("c");
	m.at(1, 1) = v("d");
	CHECK(det_cofactor(m) == v("a") * v("d") - v("b") * v("c"));

	Mat<CommPoly> num(3, 3);
	num.at(0, 0) = CommPoly(2L);
	num.at(1, 1) = CommPoly(3L);
	num.at(2, 2) = CommPoly(4L);
	num.at(0, 1) = CommPoly(1L);
	CHECK(det_cofactor(num).constant_value() == CycScalar(24L));
}

TEST_CASE("characteristic polynomial discriminant") {
	// diagonal case agrees with the root form
	Mat<CommPoly> d(3, 3);
	d.at(0, 0) = v("a");
	d.at(1, 1) = v("b");
	d.at(2, 2) = v("c");
	CHECK(charpoly_disc3(d) == discriminant3_from_roots(v("a"), v("b"), v("c")));

	// pinned value for eigenvalues 0, 1, 2
	Mat<CommPoly> n(3, 3);
	n.at(1, 1) = CommPoly(1L);
	n.at(2, 2) = CommPoly(2L);
	CHECK(charpoly_disc3(n).constant_value() == CycScalar(4L));

	// similarity invariance on a concrete conjugate of diag(0,1,2):
	// V = [[1,1,0],[0,1,1],[0,0,1]], V^-1 = [[1,-1,1],[0,1,-1],[0,0,1]]
	Mat<CommPoly> conj(3, 3);
	long V[3][3] = {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
	long Vi[3][3] = {{1, -1, 1}, {0, 1, -1}, {0, 0, 1}};
	long D[3] = {0, 1, 2};
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j) {
			long acc = 0;
			for (int k = 0; k < 3; ++k) acc += V[i][k] * D[k] * Vi[k][j];
			conj.at((size_t)i, (size_t)j) = CommPoly(acc);
		}
	CHECK(charpoly_disc3(conj).constant_value() == CycScalar(4L));

	CHECK_THROWS_AS(charpoly_disc3(Mat<CommPoly>(2, 2)), std::invalid_argument);
}

TEST_CASE("weight polynomial") {
	int z1 = var_id("z1"), z2 = var_id("z2"), z3 = var_id("z3"), z4 = var_id("z4");
	CommPoly L = weight_poly_L(z1, z2, z3, z4);
	CHECK(L.total_degree() == 6);
	// L(3,0,1,2) = (3-0)(3-1)(2-0)(2-1)(0-1)^2 = 12
	std::map<int, CycScalar> pt{{z1, CycScalar(3L)}, {z2, CycScalar(0L)},
	                            {z3, CycScalar(1L)}, {z4, CycScalar(2L)}};
	CHECK(L.evaluate(pt) == CycScalar(12L));
	// vanishes whenever z1 collides with z2 or z3
	pt[z1] = CycScalar(0L);
	CHECK(L.evaluate(pt) == CycScalar(0L));
}

TEST_CASE("printing") {
	CommPoly a = v("a"), b = v("b");
	CHECK((a * a + CycScalar(2L) * b - CommPoly(1L)).to_string() == "a^2 + 2*b - 1");
	CHECK(CommPoly().to_string() == "0");
	CHECK(((CycScalar::zeta(4) + CycScalar(1L)) * a).to_string() == "(zeta(4) + 1)*a");
}
