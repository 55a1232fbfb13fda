#include <catch2/catch_amalgamated.hpp>

#include "regalg/parse.hpp"

using namespace regalg;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("group literals") {
	CHECK(parse_group("Z2xZ4") == AbGroup{{2, 4}});
	CHECK(parse_group("Z6") == AbGroup{{6}});
	CHECK(parse_group("trivial").order() == 1);

	CHECK_THROWS_AS(parse_group("Q8"), std::invalid_argument);
	CHECK_THROWS_AS(parse_group("Z2x"), std::invalid_argument);
	CHECK_THROWS_AS(parse_group("Z0"), std::invalid_argument);
	CHECK_THROWS_WITH(parse_group("Z2 junk"), ContainsSubstring("parse error at offset"));
}

TEST_CASE("group element literals") {
	AbGroup z24{{2, 4}}, z4{{4}}, triv{{}};
	CHECK(parse_element(z24, "(0,1)") == GroupElement(z24, {0, 1}));
	CHECK(parse_element(z24, "(1,3)") == GroupElement(z24, {1, 3}));
	CHECK(parse_element(z4, "3") == GroupElement(z4, {3}));
	CHECK(parse_element(z4, "7") == GroupElement(z4, {3})); // residues normalize
	CHECK(parse_element(triv, "0").is_zero());

	CHECK_THROWS_AS(parse_element(triv, "1"), std::invalid_argument);
	CHECK_THROWS_AS(parse_element(z24, "(0,1,0)"), std::invalid_argument);
	CHECK_THROWS_AS(parse_element(z24, "3"), std::invalid_argument);
	CHECK_THROWS_AS(parse_element(z4, "3 tail"), std::invalid_argument);
}

TEST_CASE("scalar expressions") {
	CHECK(parse_scalar("3/2") == CycScalar(Rational(3, 2)));
	CHECK(parse_scalar("1+2*3") == CycScalar(7L));
	CHECK(parse_scalar("2-3-4") == CycScalar(-5L));
	CHECK(parse_scalar("-(1+zeta(4))^2") == CycScalar(-2L) * CycScalar::zeta(4));
	CHECK(parse_scalar("(1+zeta(4))*(1-zeta(4))") == CycScalar(2L));
	CHECK(parse_scalar("zeta(3)^-1") == CycScalar::zeta(3).pow(2));

	// printing round-trips through the parser
	for (const CycScalar& s : {CycScalar(0L), CycScalar(Rational(3, 2)), -CycScalar::zeta(3),
	                           CycScalar::zeta(4) + CycScalar(1L),
	                           CycScalar(2L) * CycScalar::zeta_pow(12, 7) - CycScalar(1L)})
		CHECK(parse_scalar(s.to_string()) == s);

	CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
	CHECK_THROWS_WITH(parse_scalar("foo"), ContainsSubstring("unknown name"));
	CHECK_THROWS_AS(parse_scalar("zeta(0)"), std::invalid_argument);
	CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
}

TEST_CASE("commutative polynomial expressions") {
	CommPoly z1 = CommPoly::variable("z1"), z2 = CommPoly::variable("z2");
	CommPoly z3 = CommPoly::variable("z3");

	CommPoly p = parse_cpoly("(z1-z2)^2*(z3+1)");
	CHECK(p == (z1 - z2).pow(2) * (z3 + CommPoly(1L)));
	CHECK(p.total_degree() == 3);
	CHECK(p.degree_in(var_id("z1")) == 2);

	CHECK(parse_cpoly("z1/2") == CycScalar(Rational(1, 2)) * z1);
	CHECK_THROWS_AS(parse_cpoly("z1/z2"), std::invalid_argument);
	CHECK_THROWS_AS(parse_cpoly("z1^-1"), std::invalid_argument);
}

TEST_CASE("graded polynomial expressions") {
	AbGroup z2{{2}}, z22{{2, 2}};

	GradedPoly f = parse_graded_poly(z2, "x1{1}*x2{1}");
	CHECK(f == GradedPoly::variable(z2, 1, GroupElement(z2, {1})) *
	               GradedPoly::variable(z2, 2, GroupElement(z2, {1})));
	CHECK(f.degree_of_var(1) == GroupElement(z2, {1}));

	GradedPoly a = GradedPoly::variable(z22, 1, GroupElement(z22, {0, 1}));
	GradedPoly b = GradedPoly::variable(z22, 2, GroupElement(z22, {1, 0}));
	CHECK(parse_graded_poly(z22, "[x1{(0,1)},x2{(1,0)}]") == gp_comm(a, b));

	GradedPoly c = parse_graded_poly(z2, "x1{1} - 2");
	CHECK(c.terms().count({}) == 1);
	CHECK(c.terms().at({}) == CycScalar(-2L));

	CHECK(parse_graded_poly(z2, "x1{1}^2") ==
	      GradedPoly::variable(z2, 1, GroupElement(z2, {1})) *
	          GradedPoly::variable(z2, 1, GroupElement(z2, {1})));
	CHECK(parse_graded_poly(z2, "x1{3}").degree_of_var(1) == GroupElement(z2, {1}));
	CHECK(parse_graded_poly(z2, "x1{1}/2") ==
	      CycScalar(Rational(1, 2)) * GradedPoly::variable(z2, 1, GroupElement(z2, {1})));

	CHECK_THROWS_WITH(parse_graded_poly(z2, "x1{"), ContainsSubstring("unterminated"));
	CHECK_THROWS_WITH(parse_graded_poly(z2, "y1{1}"), ContainsSubstring("unknown name"));
	CHECK_THROWS_AS(parse_graded_poly(z2, "x1"), std::invalid_argument);
	CHECK_THROWS_AS(parse_graded_poly(z2, "x1{1}^-1"), std::invalid_argument);
	CHECK_THROWS_AS(parse_graded_poly(z2, "x1{1}/x2{1}"), std::invalid_argument);
	CHECK_THROWS_AS(parse_graded_poly(z2, "x1{(0,1)}"), std::invalid_argument);
}
