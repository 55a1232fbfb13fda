#include <catch2/catch_amalgamated.hpp>

#include "regalg/primeness.hpp"

using namespace regalg;

namespace {

const AbGroup z2{{2}};
const AbGroup z3{{3}};

GradedAlgebra m3_standard() {
	return elementary_grading(3, z3, {GroupElement(z3, {0}), GroupElement(z3, {0}), GroupElement(z3, {1})});
}

GradedPoly x(int id, long deg) { return GradedPoly::variable(z2, id, GroupElement(z2, {deg})); }

} // namespace

TEST_CASE("primeness witnesses") {
	GradedAlgebra e3 = grassmann(3);

	PrimenessWitness w = primeness_witness(x(1, 1), x(2, 1), e3);
	CHECK_FALSE(w.vf.is_central);
	CHECK_FALSE(w.vg.is_central);
	CHECK(w.vfg.is_proper_central);
	CHECK(w.conclusion == PrimenessConclusion::RefutesPrimeness);
	CHECK(std::string(to_string(w.conclusion)) == "refutes-primeness");

	// an instance that never exercises the implication
	PrimenessWitness dull = primeness_witness(x(1, 1), x(2, 0), e3);
	CHECK(dull.conclusion == PrimenessConclusion::Inconclusive);

	CHECK_THROWS_AS(primeness_witness(x(1, 1), x(1, 1), e3), std::invalid_argument);
}

TEST_CASE("counterexample schema on regular minimal gradings") {
	// E3 satisfies the nonzero-products condition only up to its generator count
	GradedAlgebra e3 = grassmann(3);
	PrimenessWitness w = regular_counterexample(e3, analyze_regularity(e3, 3));
	CHECK(w.conclusion == PrimenessConclusion::RefutesPrimeness);
	CHECK(w.note.find("degree g = 1") != std::string::npos);

	// not regular: no certificate to build on
	AbGroup g2{{2}};
	GradedAlgebra m2 = elementary_grading(2, g2, {GroupElement(g2, {0}), GroupElement(g2, {1})});
	CHECK_THROWS_AS(regular_counterexample(m2, analyze_regularity(m2)), std::invalid_argument);

	// regular (up to 2) but not minimal: caller must coarsen first
	GradedAlgebra fat = tensor_componentwise(grassmann(2), group_algebra(g2));
	RegularityCertificate fat_cert = analyze_regularity(fat, 2);
	REQUIRE(fat_cert.regular());
	CHECK_THROWS_AS(regular_counterexample(fat, fat_cert), std::invalid_argument);

	// trivial grading group: nothing to work with
	AbGroup triv{{}};
	GradedAlgebra m2t = elementary_grading(2, triv, {zero_element(triv), zero_element(triv)});
	PrimenessWitness t = regular_counterexample(m2t, analyze_regularity(m2t));
	CHECK(t.conclusion == PrimenessConclusion::Inconclusive);
	CHECK(t.note.find("trivial grading group") != std::string::npos);
}

TEST_CASE("twisted group algebra counterexample") {
	AbGroup q{{2, 2}};
	TwistedReport rep =
	    twisted_counterexample(q, z2z2_standard_cocycle(), 1, {zero_element(q)});
	CHECK(rep.q == GroupElement(q, {0, 1}));
	CHECK(rep.c == cyc_one());
	CHECK(rep.displayed_evaluation_ok);
	CHECK(rep.xq_noncentral);
	CHECK(rep.on_tensored.conclusion == PrimenessConclusion::RefutesPrimeness);
	CHECK(rep.on_twisted.conclusion == PrimenessConclusion::RefutesPrimeness);
	CHECK(rep.tensored.dim() == 4);

	// a symmetric cocycle induces the trivial bicharacter
	Mat<CycScalar> flat(2, 2);
	for (size_t i = 0; i < 2; ++i)
		for (size_t j = 0; j < 2; ++j) flat.at(i, j) = cyc_one();
	CHECK_THROWS_AS(twisted_counterexample(z2, flat, 1, {zero_element(z2)}),
	                std::invalid_argument);
}

TEST_CASE("weighted central polynomial construction") {
	GradedAlgebra r = m3_standard();
	FormanekP f = build_formanek_p(r);

	REQUIRE(f.P.homogeneous_degree().has_value());
	CHECK(f.P.homogeneous_degree()->is_zero());
	CHECK(f.U[0].vars().size() == 4);
	CHECK(f.h1 == GroupElement(z3, {1}));
	CHECK(f.h2 == GroupElement(z3, {2}));

	// the primed copy uses disjoint variables
	for (auto& [id, deg] : f.P.vars()) CHECK(f.Pprime.vars().count(id) == 0);

	// grading tuple must have the (g, g, g3) shape
	GradedAlgebra skew = elementary_grading(
	    3, z3, {GroupElement(z3, {0}), GroupElement(z3, {1}), GroupElement(z3, {2})});
	CHECK_THROWS_AS(build_formanek_p(skew), std::invalid_argument);
	CHECK_THROWS_AS(build_formanek_p(grassmann(3)), std::invalid_argument);
}

TEST_CASE("numeric instance of the weighted central polynomial") {
	FormanekInstance inst = formanek_numeric_instance(build_formanek_p(m3_standard()));
	CHECK(inst.ok);
	CHECK(inst.disc == CycScalar(4L));
	CHECK(inst.value.to_string() == "4*e11 + 4*e22 - 4*e33");
}

TEST_CASE("diagonalizing conjugation inside the identity component") {
	GradedAlgebra r = m3_standard();

	SECTION("pinned rational case") {
		AlgElement s(r); // e11 + e12 + 2 e22 + 3 e33
		s.set(0, cyc_one());
		s.set(1, cyc_one());
		s.set(4, CycScalar(2L));
		s.set(8, CycScalar(3L));
		ConjugationResult c = conjugator_in_r0(r, s);
		REQUIRE(c.ok);
		CHECK(c.D.to_string() == "2*e11 + e22 + 3*e33");
		CHECK(c.E * s * c.Einv == c.D);
		CHECK(c.E * c.Einv == unit_of(r));
	}

	SECTION("already diagonal") {
		AlgElement s(r);
		s.set(0, CycScalar(5L));
		s.set(4, CycScalar(5L));
		ConjugationResult c = conjugator_in_r0(r, s);
		REQUIRE(c.ok);
		CHECK(c.E == unit_of(r));
		CHECK(c.D == s);
	}

	SECTION("obstructions are reported") {
		ConjugationResult nil = conjugator_in_r0(r, basis_element(r, 1)); // e12
		CHECK_FALSE(nil.ok);
		CHECK(nil.note.find("repeated eigenvalue") != std::string::npos);

		AlgElement irr(r); // [[0,1],[2,0]] block: eigenvalues +-sqrt(2)
		irr.set(1, cyc_one());
		irr.set(3, CycScalar(2L));
		ConjugationResult ir = conjugator_in_r0(r, irr);
		CHECK_FALSE(ir.ok);
		CHECK(ir.note.find("irrational") != std::string::npos);

		ConjugationResult off = conjugator_in_r0(r, basis_element(r, 2)); // e13, degree 1
		CHECK_FALSE(off.ok);
		CHECK(off.note.find("identity component") != std::string::npos);
	}

	SECTION("random diagonalizable matrices all succeed") {
		ConjugationSuite suite = conjugation_random_suite(r, 5, 0x5eed);
		CHECK(suite.total == 5);
		CHECK(suite.passed == 5);
		CHECK(suite.first_failure.empty());
	}
}

TEST_CASE("degree-3 product structure") {
	Degree3Report rep = degree3_exhaustive(m3_standard(), false);
	CHECK(rep.triples.empty()); // sweep skipped
	CHECK(rep.table_ok);
	REQUIRE(rep.table_rows.size() == 6);
	CHECK(rep.table_rows[0] == "Mid = e(t,t)");
	CHECK(rep.zero_products_ok);
	CHECK(rep.monomial_pattern_ok);

	// g3 - g of order 2 collapses the two off-diagonal degrees
	GradedAlgebra bad = elementary_grading(
	    3, z2, {GroupElement(z2, {0}), GroupElement(z2, {0}), GroupElement(z2, {1})});
	CHECK_THROWS_AS(degree3_exhaustive(bad, false), std::invalid_argument);
}

TEST_CASE("odd-generator subalgebras and their central polynomial") {
	GradedAlgebra e2 = grassmann(2);
	BnReport rep = bn_construction(e2, {basis_element(e2, 1), basis_element(e2, 2)});
	CHECK(rep.l == 2);
	CHECK(rep.k == 1);
	CHECK(rep.bn.dim() == 3);
	CHECK(rep.unital.dim() == 4);
	CHECK(rep.unital.has_unit());
	CHECK(rep.identity_ok);
	CHECK(rep.coefficient_ok);
	CHECK(rep.f_verdict.is_proper_central);
	CHECK_FALSE(rep.x_verdict.is_central);
	CHECK(rep.conclusion == PrimenessConclusion::RefutesPrimeness);

	CHECK_THROWS_AS(bn_construction(e2, {basis_element(e2, 1)}), std::invalid_argument);
	CHECK_THROWS_AS(bn_construction(e2, {basis_element(e2, 1), basis_element(e2, 3)}),
	                std::invalid_argument); // e1e2 is even
	CHECK_THROWS_AS(bn_construction(pauli_grading(2), {}), std::invalid_argument);
}

TEST_CASE("crossed product predicate") {
	CrossedPredicate full = crossed_product_predicate(
	    z2, {GroupElement(z2, {0}), GroupElement(z2, {1})});
	CHECK(full.is_crossed);
	CHECK(full.has_char);
	CHECK_FALSE(full.expected_primeness);

	AbGroup triv{{}};
	CrossedPredicate tr = crossed_product_predicate(triv, {zero_element(triv)});
	CHECK(tr.is_crossed);
	CHECK_FALSE(tr.has_char);
	CHECK(tr.expected_primeness);

	CrossedPredicate rep = crossed_product_predicate(
	    z2, {GroupElement(z2, {0}), GroupElement(z2, {0})});
	CHECK_FALSE(rep.is_crossed);

	CHECK_THROWS_AS(crossed_product_predicate(z2, {zero_element(triv)}), std::invalid_argument);
}
