#include <catch2/catch_amalgamated.hpp>

#include "regalg/galg.hpp"

using namespace regalg;

TEST_CASE("elementary grading of M2") {
	AbGroup z2{{2}};
	GradedAlgebra a = elementary_grading(2, z2, {GroupElement(z2, {0}), GroupElement(z2, {1})});
	REQUIRE(a.dim() == 4);
	CHECK(a.label(0) == "e11");
	CHECK(a.label(3) == "e22");
	CHECK(a.degree(0).is_zero());        // e11
	CHECK(a.degree(1).r[0] == 1);        // e12: g2 - g1
	CHECK(a.degree(2).r[0] == 1);        // e21: g1 - g2 = 1 in Z2
	CHECK(a.has_unit());

	AlgElement e12 = basis_element(a, 1), e21 = basis_element(a, 2);
	CHECK(e12 * e21 == basis_element(a, 0));
	CHECK((e12 * e12).is_zero());
	CHECK(unit_of(a) * e12 == e12);

	CHECK(a.component(GroupElement(z2, {0})) == std::vector<size_t>{0, 3});
	CHECK(a.component(GroupElement(z2, {1})) == std::vector<size_t>{1, 2});
}

TEST_CASE("Grassmann algebra") {
	GradedAlgebra e3 = grassmann(3);
	REQUIRE(e3.dim() == 8);
	CHECK(e3.label(0) == "1");
	CHECK(e3.label(3) == "e1e2"); // mask 0b011
	CHECK(e3.label(7) == "e1e2e3");
	CHECK(e3.degree(3).is_zero());
	CHECK(e3.degree(7).r[0] == 1);

	AlgElement e1 = basis_element(e3, 1), e2 = basis_element(e3, 2);
	CHECK(e1 * e2 == basis_element(e3, 3));
	CHECK(e2 * e1 == CycScalar(-1L) * basis_element(e3, 3));
	CHECK((e1 * e1).is_zero());
	CHECK((e1 * e2 + e2 * e1).is_zero());

	AlgElement x = CycScalar(1L) * basis_element(e3, 0) - CycScalar(2L) * basis_element(e3, 3);
	CHECK(x.to_string() == "1 - 2*e1e2");
	CHECK(x.is_homogeneous_of(GroupElement(e3.group(), {0})));
	CHECK_FALSE((e1 + basis_element(e3, 3)).homogeneous_degree().has_value());

	CHECK_THROWS_AS(grassmann(11), std::invalid_argument);
}

TEST_CASE("Pauli grading") {
	GradedAlgebra p = pauli_grading(2);
	REQUIRE(p.dim() == 4);
	CHECK(p.label(0) == "I");
	CHECK(p.label(1) == "S");
	CHECK(p.label(2) == "C");
	CHECK(p.label(3) == "CS");
	AlgElement c = basis_element(p, 2), s = basis_element(p, 1);
	CHECK(c * s == basis_element(p, 3));
	CHECK(s * c == CycScalar(-1L) * basis_element(p, 3));
	CHECK(c * c == basis_element(p, 0));
	CHECK(s * s == basis_element(p, 0));

	GradedAlgebra p3 = pauli_grading(3);
	CHECK(p3.dim() == 9);
	// C S = zeta3 S C
	AlgElement c3 = basis_element(p3, 3), s3 = basis_element(p3, 1);
	CHECK(c3 * s3 == CycScalar::zeta(3) * (s3 * c3));
}

TEST_CASE("twisted group algebras") {
	AbGroup q{{2, 2}};
	GradedAlgebra t = twisted_group_algebra(q, z2z2_standard_cocycle());
	REQUIRE(t.dim() == 4);
	CHECK(t.label(1) == "X(0,1)");
	AlgElement x01 = basis_element(t, 1), x10 = basis_element(t, 2);
	CHECK(x01 * x10 == CycScalar(-1L) * (x10 * x01)); // anticommuting generators
	CHECK(x01 * x01 == unit_of(t));

	// group algebra: trivial cocycle, everything commutes
	GradedAlgebra kz2 = group_algebra(AbGroup{{2}});
	CHECK(kz2.dim() == 2);
	AlgElement g = basis_element(kz2, 1);
	CHECK(g * g == unit_of(kz2));

	// cocycle validation
	AbGroup z2{{2}};
	Mat<CycScalar> bad(2, 2);
	for (size_t i = 0; i < 2; ++i)
		for (size_t j = 0; j < 2; ++j) bad.at(i, j) = cyc_one();
	bad.at(0, 1) = CycScalar(2L); // breaks alpha(0,0)alpha(0,1) = alpha(0,1)alpha(0,1)
	CHECK_THROWS_AS(twisted_group_algebra(z2, bad), std::invalid_argument);
	bad.at(0, 1) = CycScalar(0L);
	CHECK_THROWS_AS(twisted_group_algebra(z2, bad), std::invalid_argument);
}

TEST_CASE("tensor products") {
	GradedAlgebra e1 = grassmann(1);
	GradedAlgebra kz2 = group_algebra(AbGroup{{2}});

	SECTION("componentwise: degrees pair up over the product group") {
		GradedAlgebra t = tensor_componentwise(e1, kz2);
		REQUIRE(t.dim() == 4);
		CHECK(t.group() == AbGroup{{2, 2}});
		CHECK(t.label(0) == "1.X0");
		CHECK(t.label(3) == "e1.X1");
		CHECK(t.degree(3) == GroupElement(t.group(), {1, 1}));
		CHECK(t.has_unit());
	}

	SECTION("same-group tensor with the sum rule") {
		GradedAlgebra t = tensor_graded(grassmann(1), grassmann(1));
		REQUIRE(t.dim() == 4);
		CHECK(t.group() == AbGroup{{2}});
		CHECK(t.degree(3).is_zero()); // odd (x) odd lands in degree 0
		// mismatched groups rejected
		CHECK_THROWS_AS(tensor_graded(e1, tensor_componentwise(e1, kz2)), std::invalid_argument);
	}

	SECTION("subtraction rule") {
		AbGroup z2{{2}};
		GradedAlgebra m2 = elementary_grading(2, z2, {GroupElement(z2, {0}), GroupElement(z2, {1})});
		GradedAlgebra t = tensor_graded(kz2, m2, tensor_sub_degrees());
		CHECK(t.degree(1) == GroupElement(z2, {1})); // X0 . e12 : 0 - 1
		CHECK(t.degree(4) == GroupElement(z2, {1})); // X1 . e11 : 1 - 0
		CHECK(t.degree(5) == GroupElement(z2, {0})); // X1 . e12 : 1 - 1
	}
}

TEST_CASE("inverses and the center") {
	AbGroup z2{{2}};
	GradedAlgebra m2 = elementary_grading(2, z2, {GroupElement(z2, {0}), GroupElement(z2, {1})});

	AlgElement s(m2); // [[1,1],[0,2]]
	s.set(0, cyc_one());
	s.set(1, cyc_one());
	s.set(3, CycScalar(2L));
	auto inv = try_inverse(s);
	REQUIRE(inv.has_value());
	CHECK(s * *inv == unit_of(m2));
	CHECK(*inv * s == unit_of(m2));

	CHECK_FALSE(try_inverse(basis_element(m2, 0)).has_value()); // e11 is singular

	CHECK(center_membership(unit_of(m2)));
	CHECK_FALSE(center_membership(basis_element(m2, 0)));
	auto cb = center_basis(m2);
	REQUIRE(cb.size() == 1);
	CHECK(center_membership(cb[0]));
}

TEST_CASE("subalgebra closure") {
	GradedAlgebra e2 = grassmann(2);
	AlgElement e1 = basis_element(e2, 1), ee2 = basis_element(e2, 2);

	SubalgebraClosure plain = subalgebra_closure(e2, {e1, ee2}, false);
	CHECK(plain.sub.dim() == 3); // e1, e2, e1e2
	CHECK_FALSE(plain.sub.has_unit());

	SubalgebraClosure unital = subalgebra_closure(e2, {e1, ee2}, true);
	CHECK(unital.sub.dim() == 4);
	CHECK(unital.sub.has_unit());

	// products in the closure mirror products of the embedded elements
	for (size_t i = 0; i < plain.sub.dim(); ++i)
		for (size_t j = 0; j < plain.sub.dim(); ++j) {
			AlgElement inside = basis_element(plain.sub, i) * basis_element(plain.sub, j);
			AlgElement outside = plain.embed[i] * plain.embed[j];
			AlgElement mapped(e2);
			for (auto& [k, v] : inside.c)
				mapped = mapped + v * plain.embed[k];
			CHECK(mapped == outside);
		}

	CHECK_THROWS_AS(subalgebra_closure(e2, {e1 + basis_element(e2, 0)}, false),
	                std::invalid_argument); // non-homogeneous generator
}

TEST_CASE("M11 of the Grassmann algebra") {
	GradedAlgebra a = m11_grassmann(2);
	CHECK(a.dim() == 8);
	CHECK(a.group() == AbGroup{{2, 2}});
	CHECK(a.has_unit());
	CHECK(a.label(0) == "I");
	CHECK_THROWS_AS(m11_grassmann(3), std::invalid_argument);
	CHECK_THROWS_AS(m11_grassmann(10), std::invalid_argument);
}

TEST_CASE("construction-time validation") {
	AbGroup z2{{2}};

	// grading incompatibility: deg b = 1 but b*b = b
	GradedAlgebra::Data d;
	d.name = "broken";
	d.group = z2;
	d.labels = {"a", "b"};
	d.degree = {zero_element(z2), GroupElement(z2, {1})};
	d.sc.assign(4, {});
	d.sc[0] = {{0, cyc_one()}};
	d.sc[1] = {{1, cyc_one()}};
	d.sc[2] = {{1, cyc_one()}};
	d.sc[3] = {{1, cyc_one()}}; // b*b should land in degree 0
	CHECK_THROWS_AS(make_graded_algebra(std::move(d)), std::logic_error);

	// unit law failure
	GradedAlgebra::Data u;
	u.name = "broken unit";
	u.group = z2;
	u.labels = {"a", "b"};
	u.degree = {zero_element(z2), GroupElement(z2, {1})};
	u.sc.assign(4, {});
	u.sc[0] = {{0, cyc_one()}}; // a*a = a
	u.sc[1] = {{1, cyc_one()}}; // a*b = b
	u.sc[2] = {{1, cyc_one()}}; // b*a = b
	u.sc[3] = {{0, cyc_one()}}; // b*b = a  (the Z2 group algebra)
	u.unit = {{0, CycScalar(2L)}}; // 2a acts as doubling, not as a unit
	u.has_unit = true;
	CHECK_THROWS_AS(make_graded_algebra(std::move(u)), std::logic_error);
}
