#include <catch2/catch_amalgamated.hpp>

#include "regalg/central.hpp"

using namespace regalg;

namespace {

const AbGroup z2{{2}};
const AbGroup triv{{}};

GradedPoly x(int id, long deg) { return GradedPoly::variable(z2, id, GroupElement(z2, {deg})); }

} // namespace

TEST_CASE("exhaustive multilinear centrality") {
	GradedAlgebra e3 = grassmann(3);

	SECTION("product of two odd variables is proper central") {
		CentralityVerdict v = test_multilinear(x(1, 1) * x(2, 1), e3);
		CHECK_FALSE(v.is_identity);
		CHECK(v.is_central);
		CHECK(v.is_proper_central);
		REQUIRE(v.witness.has_value());
		CHECK(v.witness->non_commuting.empty()); // non-identity witness only
		CHECK(v.witness->assignment.size() == 2);
	}

	SECTION("a single odd variable is not central") {
		CentralityVerdict v = test_multilinear(x(1, 1), e3);
		CHECK_FALSE(v.is_identity);
		CHECK_FALSE(v.is_central);
		REQUIRE(v.witness.has_value());
		CHECK_FALSE(v.witness->non_commuting.empty());
	}

	SECTION("symmetrized odd product is an identity") {
		CentralityVerdict v = test_multilinear(x(1, 1) * x(2, 1) + x(2, 1) * x(1, 1), e3);
		CHECK(v.is_identity);
		CHECK(v.is_central);
		CHECK_FALSE(v.is_proper_central);
	}

	SECTION("empty component makes everything vacuously central") {
		AbGroup z4{{4}};
		GradedAlgebra a = elementary_grading(2, z4, {GroupElement(z4, {0}), GroupElement(z4, {1})});
		GradedPoly f = GradedPoly::variable(z4, 1, GroupElement(z4, {2}));
		CentralityVerdict v = test_multilinear(f, a);
		CHECK(v.is_identity);
		CHECK(v.is_central);
		CHECK_FALSE(v.is_proper_central);
	}

	CHECK_THROWS_AS(test_multilinear(x(1, 1) * x(1, 1), e3), std::invalid_argument);
}

TEST_CASE("standard polynomials on full matrix algebras") {
	GradedAlgebra m2 = elementary_grading(2, triv, {zero_element(triv), zero_element(triv)});

	CentralityVerdict s4 = test_multilinear(standard_poly(triv, 4), m2);
	CHECK(s4.is_identity);

	CentralityVerdict s3 = test_multilinear(standard_poly(triv, 3), m2);
	CHECK_FALSE(s3.is_identity);
	CHECK(s3.witness.has_value());
}

TEST_CASE("generic evaluation agrees with the exhaustive test") {
	GradedAlgebra e2 = grassmann(2);
	GradedAlgebra p2 = pauli_grading(2);
	AbGroup z22{{2, 2}};
	GradedPoly px = GradedPoly::variable(z22, 1, GroupElement(z22, {1, 0}));

	struct Case {
		GradedPoly f;
		const GradedAlgebra& a;
	} cases[] = {
	    {x(1, 1) * x(2, 1), e2},
	    {x(1, 1) * x(2, 1) + x(2, 1) * x(1, 1), e2},
	    {px, p2},
	};
	for (auto& c : cases) {
		CentralityVerdict ex = test_multilinear(c.f, c.a);
		CentralityVerdict gen = test_generic(c.f, c.a);
		CHECK(ex.is_identity == gen.is_identity);
		CHECK(ex.is_central == gen.is_central);
		CHECK(ex.is_proper_central == gen.is_proper_central);
	}

	// test_generic also handles non-multilinear input
	CentralityVerdict sq = test_generic(x(1, 1) * x(1, 1), e2);
	CHECK(sq.is_identity); // squares of odd elements vanish
}

TEST_CASE("fast multilinear identity decision") {
	GradedAlgebra e3 = grassmann(3);

	auto yes = is_identity_multilinear_fast(x(1, 1) * x(2, 1) + x(2, 1) * x(1, 1), e3);
	REQUIRE(yes.has_value());
	CHECK(*yes);

	auto no = is_identity_multilinear_fast(x(1, 1) * x(2, 1), e3);
	REQUIRE(no.has_value());
	CHECK_FALSE(*no);

	// multi-term structure constants disable the fast path
	GradedAlgebra::Data d;
	d.name = "golden";
	d.group = triv;
	d.labels = {"u", "b"};
	d.degree = {zero_element(triv), zero_element(triv)};
	d.sc.assign(4, {});
	d.sc[0] = {{0, cyc_one()}};
	d.sc[1] = {{1, cyc_one()}};
	d.sc[2] = {{1, cyc_one()}};
	d.sc[3] = {{0, cyc_one()}, {1, cyc_one()}}; // b*b = u + b
	d.unit = {{0, cyc_one()}};
	d.has_unit = true;
	GradedAlgebra g = make_graded_algebra(std::move(d));
	GradedPoly f = GradedPoly::variable(triv, 1, zero_element(triv)) *
	               GradedPoly::variable(triv, 2, zero_element(triv));
	CHECK_FALSE(is_identity_multilinear_fast(f, g).has_value());
	CHECK_FALSE(test_multilinear(f, g).is_identity); // the slow path still decides

	CHECK_THROWS_AS(is_identity_multilinear_fast(x(1, 1) + x(1, 1) * x(2, 1), e3),
	                std::invalid_argument);
}

TEST_CASE("spaces of multilinear central polynomials") {
	GradedAlgebra e4 = grassmann(4);
	GroupElement odd(z2, {1});

	CentralSpaceResult r = multilinear_central_space(e4, {odd, odd});
	CHECK(r.central_dim == 2);  // odd values are always even, hence central
	CHECK(r.identity_dim == 1); // gamma_12 = gamma_21
	CHECK(r.proper_exists);
	CHECK(r.perms.size() == 2);
	REQUIRE(r.identity_basis.size() == 1);
	CHECK(r.identity_basis[0][0] == r.identity_basis[0][1]);

	// Pauli: the product lands on a non-central basis element
	GradedAlgebra p2 = pauli_grading(2);
	AbGroup z22{{2, 2}};
	CentralSpaceResult q = multilinear_central_space(
	    p2, {GroupElement(z22, {1, 0}), GroupElement(z22, {0, 1})});
	CHECK(q.central_dim == 1);
	CHECK(q.identity_dim == 1);
	CHECK_FALSE(q.proper_exists);

	CHECK_THROWS_AS(multilinear_central_space(e4, std::vector<GroupElement>(5, odd)),
	                std::invalid_argument);
}

TEST_CASE("annihilator of the odd component") {
	GradedAlgebra e3 = grassmann(3);
	AnnihilatorIdeal t = annihilator_ideal(e3);
	REQUIRE(t.basis.size() == 1);
	CHECK(t.basis[0] == basis_element(e3, 7)); // the top monomial e1e2e3

	// even k: the top monomial is even, T vanishes
	CHECK(annihilator_ideal(grassmann(2)).basis.empty());

	CHECK_THROWS_AS(annihilator_ideal(pauli_grading(2)), std::invalid_argument);
}

TEST_CASE("quotient by the annihilator") {
	GradedAlgebra e3 = grassmann(3);
	AnnihilatorIdeal t = annihilator_ideal(e3);
	QuotientAlgebra q = quotient_by(e3, t);

	CHECK(q.quotient.dim() == 7);
	CHECK(q.project(basis_element(e3, 7)).is_zero());
	CHECK(q.project(unit_of(e3)) == unit_of(q.quotient));

	// projection is multiplicative
	AlgElement a = basis_element(e3, 1) + basis_element(e3, 6); // e1 + e2e3
	AlgElement b = basis_element(e3, 2);                        // e2
	CHECK(q.project(a * b) == q.project(a) * q.project(b));
}

TEST_CASE("Grassmann identity oracle") {
	CHECK(grassmann_multilinear_oracle(x(1, 1) * x(2, 1) + x(2, 1) * x(1, 1)));
	CHECK_FALSE(grassmann_multilinear_oracle(x(1, 1) * x(2, 1) - x(2, 1) * x(1, 1)));
	CHECK_FALSE(grassmann_multilinear_oracle(x(1, 1) * x(2, 0)));

	// ungraded: the double commutator is the classical identity of E
	GradedPoly u1 = GradedPoly::variable(triv, 1, zero_element(triv));
	GradedPoly u2 = GradedPoly::variable(triv, 2, zero_element(triv));
	GradedPoly u3 = GradedPoly::variable(triv, 3, zero_element(triv));
	CHECK(grassmann_multilinear_oracle(gp_comm(gp_comm(u1, u2), u3)));
	CHECK_FALSE(grassmann_multilinear_oracle(gp_comm(u1, u2)));

	CHECK_THROWS_AS(grassmann_multilinear_oracle(x(1, 1) * x(1, 1)), std::invalid_argument);
	GradedPoly z4v = GradedPoly::variable(AbGroup{{4}}, 1, GroupElement(AbGroup{{4}}, {1}));
	CHECK_THROWS_AS(grassmann_multilinear_oracle(z4v), std::invalid_argument);
}
