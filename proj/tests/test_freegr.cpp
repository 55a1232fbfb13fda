#include <catch2/catch_amalgamated.hpp>

#include "regalg/freegr.hpp"

using namespace regalg;

namespace {

const AbGroup z2{{2}};

GradedPoly x(int id, long deg) { return GradedPoly::variable(z2, id, GroupElement(z2, {deg})); }

} // namespace

TEST_CASE("graded polynomial bookkeeping") {
	GradedPoly f = x(1, 1) * x(2, 1) + CycScalar(2L) * x(3, 0);
	CHECK(f.vars().size() == 3);
	CHECK(f.degree_of_var(1) == GroupElement(z2, {1}));
	CHECK(f.degree_of_var(3) == GroupElement(z2, {0}));
	CHECK_THROWS_AS(f.degree_of_var(9), std::invalid_argument);

	GradedPoly g = f;
	g.declare(1, GroupElement(z2, {1})); // same degree: fine
	CHECK_THROWS_AS(g.declare(1, GroupElement(z2, {0})), std::invalid_argument);
	CHECK_THROWS_AS(g.add_term({1, 7}, cyc_one()), std::invalid_argument);

	// mixing groups
	GradedPoly other = GradedPoly::variable(AbGroup{{3}}, 1, GroupElement(AbGroup{{3}}, {1}));
	CHECK_THROWS_AS(f + other, std::invalid_argument);

	CHECK(x(1, 1).to_string() == "x1{1}");
	CHECK((f - f).is_zero());
}

TEST_CASE("multilinearity and homogeneity") {
	GradedPoly f = x(1, 1) * x(2, 1) - x(2, 1) * x(1, 1);
	CHECK(f.is_multilinear());
	REQUIRE(f.homogeneous_degree().has_value());
	CHECK(f.homogeneous_degree()->is_zero()); // 1 + 1 = 0 in Z2

	CHECK_FALSE((x(1, 1) * x(1, 1)).is_multilinear()); // repeated variable
	CHECK_FALSE((x(1, 1) + x(1, 1) * x(2, 0)).is_multilinear());
	CHECK_FALSE((x(1, 1) + x(2, 0)).homogeneous_degree().has_value());

	CHECK(f.word_degree({1, 2, 1}) == GroupElement(z2, {1}));
}

TEST_CASE("commutators and standard polynomials") {
	GradedPoly a = x(1, 0), b = x(2, 0);
	CHECK(gp_comm(a, b) == CycScalar(-1L) * gp_comm(b, a));
	CHECK(gp_comm(a, a).is_zero());

	GVar v1{1, GroupElement(z2, {0})}, v2{2, GroupElement(z2, {0})};
	GVar v3{3, GroupElement(z2, {0})}, v4{4, GroupElement(z2, {0})};
	CHECK(commutator_product(z2, {v1, v2, v3, v4}) ==
	      gp_comm(x(1, 0), x(2, 0)) * gp_comm(x(3, 0), x(4, 0)));
	CHECK_THROWS_AS(commutator_product(z2, {v1, v2, v3}), std::invalid_argument);

	GradedPoly s3 = standard_poly(z2, 3);
	CHECK(s3.terms().size() == 6);
	CHECK(s3.is_multilinear());
	CHECK(standard_poly(z2, 2) == gp_comm(x(1, 0), x(2, 0)));
}

TEST_CASE("exact evaluation on an algebra") {
	GradedAlgebra e2 = grassmann(2);
	AlgElement e1 = basis_element(e2, 1), ee2 = basis_element(e2, 2);

	GradedPoly f = x(1, 1) * x(2, 1);
	CHECK(evaluate(f, e2, {{1, e1}, {2, ee2}}) == basis_element(e2, 3));
	CHECK(evaluate(f + x(1, 1) * x(2, 1), e2, {{1, e1}, {2, ee2}}) ==
	      CycScalar(2L) * basis_element(e2, 3));

	// anticommutation makes the symmetrized product vanish
	GradedPoly sym = x(1, 1) * x(2, 1) + x(2, 1) * x(1, 1);
	CHECK(evaluate(sym, e2, {{1, e1}, {2, ee2}}).is_zero());

	// constant terms use the unit
	CHECK(evaluate(f - CycScalar(1L) * GradedPoly::constant(z2, cyc_one()), e2,
	               {{1, e1}, {2, ee2}}) == basis_element(e2, 3) - unit_of(e2));

	CHECK_THROWS_AS(evaluate(f, e2, {{1, e1}}), std::invalid_argument);          // x2 unassigned
	CHECK_THROWS_AS(evaluate(f, e2, {{1, unit_of(e2)}, {2, ee2}}), std::invalid_argument); // wrong degree
	CHECK_THROWS_AS(evaluate(f, e2, {{1, e1 + unit_of(e2)}, {2, ee2}}), std::invalid_argument);

	// constant term on a non-unital subalgebra
	GradedAlgebra sub = subalgebra_closure(e2, {e1}, false).sub;
	REQUIRE_FALSE(sub.has_unit());
	CHECK_THROWS_AS(evaluate(GradedPoly::constant(z2, cyc_one()), sub, {}), std::invalid_argument);
}

TEST_CASE("generic evaluation") {
	GradedAlgebra e2 = grassmann(2);

	// identity detection: s2 on the commutative even component
	GenEval comm = evaluate_generic(standard_poly(z2, 2), e2);
	CHECK(comm.value.is_zero());

	// a non-identity has a nonzero generic value that specializes correctly
	GradedPoly f = x(1, 1) * x(2, 1);
	GenEval r = evaluate_generic(f, e2);
	REQUIRE_FALSE(r.value.is_zero());
	REQUIRE(r.assignment.coord_vars.at(1).size() == 2); // odd component is 2-dim

	std::map<int, CycScalar> point;
	point[r.assignment.coord_vars.at(1)[0]] = cyc_one();     // x1 -> e1
	point[r.assignment.coord_vars.at(1)[1]] = CycScalar(0L);
	point[r.assignment.coord_vars.at(2)[0]] = CycScalar(0L); // x2 -> e2
	point[r.assignment.coord_vars.at(2)[1]] = cyc_one();
	AlgElement at = specialize(r.value, point);
	CHECK(at == evaluate(f, e2, {{1, basis_element(e2, 1)}, {2, basis_element(e2, 2)}}));
}

TEST_CASE("fiber substitution along an epimorphism") {
	AbGroup z4{{4}};
	GroupHom pi(z4, z2, {GroupElement(z2, {1})}); // reduction mod 2

	GradedPoly t = x(1, 1);
	NuSubstitution ns = nu_substitute(t, pi);
	CHECK(ns.poly.group() == z4);
	CHECK(ns.poly.terms().size() == 2); // one fresh variable per fiber element
	CHECK(ns.poly.vars().size() == 2);
	CHECK(ns.poly.degree_of_var(ns.var_of.at({1, {1}})) == GroupElement(z4, {1}));
	CHECK(ns.poly.degree_of_var(ns.var_of.at({1, {3}})) == GroupElement(z4, {3}));

	// products expand distributively over the fibers
	NuSubstitution np = nu_substitute(x(1, 1) * x(2, 0), pi);
	CHECK(np.poly.terms().size() == 4);
	CHECK(np.poly.vars().size() == 4);

	// not an epimorphism: Z2 -> Z4 sending 1 to 2
	GroupHom up(z2, z4, {GroupElement(z4, {2})});
	CHECK_THROWS_AS(nu_substitute(t, up), std::invalid_argument);
	// polynomial over the wrong group
	CHECK_THROWS_AS(nu_substitute(ns.poly, pi), std::invalid_argument);
}

TEST_CASE("pushing variable degrees through a homomorphism") {
	AbGroup z22{{2, 2}};
	GroupHom pr(z22, z2, {GroupElement(z2, {1}), GroupElement(z2, {0})}); // first projection

	GradedPoly d = GradedPoly::variable(z22, 1, GroupElement(z22, {1, 0})) *
	               GradedPoly::variable(z22, 2, GroupElement(z22, {0, 1}));
	GradedPoly out = relabel_by(d, pr);
	CHECK(out.group() == z2);
	CHECK(out.degree_of_var(1) == GroupElement(z2, {1}));
	CHECK(out.degree_of_var(2) == GroupElement(z2, {0}));
	CHECK(out.terms() == d.terms());

	CHECK_THROWS_AS(relabel_by(out, pr), std::invalid_argument); // wrong source group
}
