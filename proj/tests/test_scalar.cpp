#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "regalg/scalar.hpp"

using namespace regalg;

TEST_CASE("cyclotomic polynomials, pinned") {
	auto coeffs = [](long n) { return cyclotomic_polynomial(n); };
	CHECK(coeffs(1) == std::vector<Rational>{-1, 1});
	CHECK(coeffs(2) == std::vector<Rational>{1, 1});
	CHECK(coeffs(3) == std::vector<Rational>{1, 1, 1});
	CHECK(coeffs(4) == std::vector<Rational>{1, 0, 1});
	CHECK(coeffs(6) == std::vector<Rational>{1, -1, 1});
	CHECK(coeffs(12) == std::vector<Rational>{1, 0, -1, 0, 1});
	for (long n : {1L, 2L, 3L, 4L, 6L, 8L, 9L, 12L})
		CHECK((long)coeffs(n).size() == euler_phi(n) + 1);
}

TEST_CASE("roots of unity") {
	for (long n = 1; n <= 12; ++n) {
		CycScalar z = CycScalar::zeta(n);
		CHECK(z.pow(n) == CycScalar(1));
		for (long k = 1; k < n; ++k) CHECK(z.pow(k) != CycScalar(1));
	}
	// defining relations at small conductors
	CycScalar z3 = CycScalar::zeta(3);
	CHECK((z3 * z3 + z3 + CycScalar(1)).is_zero());
	CHECK(CycScalar::zeta(4).pow(2) == CycScalar(-1));
	CHECK(CycScalar::zeta(6) == -(z3 * z3));
	// conductors mix via lcm lifting
	CHECK(CycScalar::zeta(4) * CycScalar::zeta(6) == CycScalar::zeta_pow(12, 5));
	CHECK(CycScalar::zeta(5).pow(5) == CycScalar(1)); // equality across conductors 5 and 1
}

TEST_CASE("field axioms at mixed conductors") {
	std::vector<CycScalar> samples = {
	    CycScalar(0),
	    CycScalar(1),
	    CycScalar(-3),
	    CycScalar(Rational(3, 2)),
	    CycScalar::zeta(3),
	    CycScalar::zeta(4) - CycScalar(1),
	    CycScalar(2) * CycScalar::zeta_pow(12, 7) + CycScalar(Rational(1, 3)),
	    CycScalar::zeta(6) + CycScalar::zeta(4),
	};
	for (const auto& a : samples)
		for (const auto& b : samples) {
			CHECK(a + b == b + a);
			CHECK(a * b == b * a);
			CHECK(a - b == -(b - a));
			for (const auto& c : samples) {
				CHECK((a + b) + c == a + (b + c));
				CHECK((a * b) * c == a * (b * c));
				CHECK(a * (b + c) == a * b + a * c);
			}
		}
	for (const auto& a : samples) {
		CHECK(a + CycScalar(0) == a);
		CHECK(a * CycScalar(1) == a);
		CHECK((a - a).is_zero());
		if (!a.is_zero()) {
			CHECK(a * a.inverse() == CycScalar(1));
			CHECK(a / a == CycScalar(1));
			CHECK(a.pow(-3) * a.pow(3) == CycScalar(1));
		}
	}
	CHECK_THROWS_AS(CycScalar(0).inverse(), std::domain_error);
}

TEST_CASE("printing") {
	CHECK(CycScalar(0).to_string() == "0");
	CHECK(CycScalar(Rational(3, 2)).to_string() == "3/2");
	CHECK(CycScalar::zeta(4).to_string() == "zeta(4)");
	CHECK((-CycScalar::zeta(3)).to_string() == "-zeta(3)");
	// zeta(12)^7 = -zeta(12), so printing reduces to the canonical basis
	CHECK((CycScalar(2) * CycScalar::zeta_pow(12, 7) - CycScalar(1)).to_string() ==
	      "-2*zeta(12) - 1");
}

TEST_CASE("rational detection") {
	CHECK(CycScalar(Rational(5, 7)).is_rational());
	CHECK(CycScalar(Rational(5, 7)).rational_value() == Rational(5, 7));
	CHECK_FALSE(CycScalar::zeta(4).is_rational());
	CHECK_THROWS_AS(CycScalar::zeta(4).rational_value(), std::domain_error);
	// zeta(2) = -1 reduces to a rational immediately
	CHECK(CycScalar::zeta(2).is_rational());
	CHECK(CycScalar::zeta(2).rational_value() == -1);

	long out = 0;
	CHECK(cyc_small_int(CycScalar(-4), 5, out));
	CHECK(out == -4);
	CHECK_FALSE(cyc_small_int(CycScalar(7), 5, out));
	CHECK_FALSE(cyc_small_int(CycScalar(Rational(1, 2)), 5, out));
	CHECK_FALSE(cyc_small_int(CycScalar::zeta(3), 5, out));
}
