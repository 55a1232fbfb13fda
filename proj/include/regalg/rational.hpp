#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace regalg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational rat_pow(const Rational& q, long e) {
	if (e == 0) return Rational(1);
	if (q == 0 && e < 0) throw std::domain_error("rat_pow: zero to negative power");
	Rational base = e > 0 ? q : Rational(1) / q;
	unsigned long n = e > 0 ? (unsigned long)e : (unsigned long)(-e);
	Rational acc(1);
	while (n) {
		if (n & 1) acc *= base;
		base *= base;
		n >>= 1;
	}
	return acc;
}

// "7", "-3/4"; denominator sign is normalised by cpp_rational itself.
inline std::string rat_str(const Rational& q) { return q.str(); }

inline bool rat_is_int(const Rational& q) { return rat_den(q) == 1; }

// Exact integer square root test: returns true and sets r when v = r*r, v >= 0.
inline bool int_sqrt_exact(const Int& v, Int& r) {
	if (v < 0) return false;
	r = boost::multiprecision::sqrt(v);
	return r * r == v;
}

// Exact rational square root: q = s*s with s >= 0.
inline bool rat_sqrt_exact(const Rational& q, Rational& s) {
	Int rn, rd;
	if (!int_sqrt_exact(rat_num(q), rn)) return false;
	if (!int_sqrt_exact(rat_den(q), rd)) return false;
	s = Rational(rn, rd);
	return true;
}

} // namespace regalg
