#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N), represented on the power
// basis 1, zeta, ..., zeta^{phi(N)-1} of Q[x]/Phi_N(x). No floating point:
// coefficients are arbitrary-precision rationals, inverses come from the
// extended Euclidean algorithm against Phi_N, and mixed-conductor operands
// are lifted to the lcm conductor (results keep that conductor).

#include "regalg/rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <vector>

namespace regalg {

inline long euler_phi(long n) {
	long result = n, p = 2, m = n;
	while (p * p <= m) {
		if (m % p == 0) {
			result -= result / p;
			while (m % p == 0) m /= p;
		}
		++p;
	}
	if (m > 1) result -= result / m;
	return result;
}

namespace detail {

using UPoly = std::vector<Rational>; // dense, ascending degree, no trailing zeros

inline void up_trim(UPoly& p) {
	while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly up_mul(const UPoly& a, const UPoly& b) {
	if (a.empty() || b.empty()) return {};
	UPoly r(a.size() + b.size() - 1, Rational(0));
	for (size_t i = 0; i < a.size(); ++i)
		for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
	up_trim(r);
	return r;
}

inline UPoly up_sub(UPoly a, const UPoly& b) {
	if (a.size() < b.size()) a.resize(b.size(), Rational(0));
	for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
	up_trim(a);
	return a;
}

inline UPoly up_scale(UPoly a, const Rational& s) {
	for (auto& c : a) c *= s;
	up_trim(a);
	return a;
}

// Division with remainder over Q; divisor must be nonzero.
inline void up_divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
	if (b.empty()) throw std::domain_error("up_divmod: division by zero polynomial");
	r = a;
	q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
	while (r.size() >= b.size() && !r.empty()) {
		Rational c = r.back() / b.back();
		size_t shift = r.size() - b.size();
		q[shift] = c;
		for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
		up_trim(r);
	}
	up_trim(q);
}

// Extended gcd: returns g (monic) with u*a + v*b = g.
inline UPoly up_ext_gcd(UPoly a, UPoly b, UPoly& u, UPoly& v) {
	UPoly u0{Rational(1)}, v0{}, u1{}, v1{Rational(1)};
	while (!b.empty()) {
		UPoly q, r;
		up_divmod(a, b, q, r);
		UPoly u2 = up_sub(u0, up_mul(q, u1));
		UPoly v2 = up_sub(v0, up_mul(q, v1));
		a = b;
		b = r;
		u0 = u1;
		v0 = v1;
		u1 = u2;
		v1 = v2;
	}
	if (a.empty()) throw std::domain_error("up_ext_gcd: gcd of zero polynomials");
	Rational lead = a.back();
	u = up_scale(u0, Rational(1) / lead);
	v = up_scale(v0, Rational(1) / lead);
	return up_scale(a, Rational(1) / lead);
}

// Phi_N via exact division: (x^N - 1) / prod_{d | N, d < N} Phi_d.
inline std::shared_ptr<const UPoly> cyclotomic_poly_ptr(long n) {
	static std::map<long, std::shared_ptr<const UPoly>> cache;
	static std::mutex mx;
	std::lock_guard<std::mutex> lock(mx);
	auto it = cache.find(n);
	if (it != cache.end()) return it->second;
	std::vector<long> pending{n};
	while (!pending.empty()) {
		long m = pending.back();
		if (cache.count(m)) {
			pending.pop_back();
			continue;
		}
		bool ready = true;
		for (long d = 1; d < m; ++d)
			if (m % d == 0 && !cache.count(d)) {
				pending.push_back(d);
				ready = false;
			}
		if (!ready) continue;
		pending.pop_back();
		UPoly xn(m + 1, Rational(0));
		xn[0] = -1;
		xn[m] = 1;
		UPoly denom{Rational(1)};
		for (long d = 1; d < m; ++d)
			if (m % d == 0) denom = up_mul(denom, *cache.at(d));
		UPoly q, r;
		up_divmod(xn, denom, q, r);
		if (!r.empty()) throw std::logic_error("cyclotomic_poly: division not exact");
		cache[m] = std::make_shared<const UPoly>(std::move(q));
	}
	return cache.at(n);
}

} // namespace detail

// Returns Phi_N as ascending coefficients (all integers, degree phi(N)).
inline std::vector<Rational> cyclotomic_polynomial(long n) {
	if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
	return *detail::cyclotomic_poly_ptr(n);
}

/// One element of Q(zeta_N): `c[k]` is the coefficient of zeta_N^k, k < phi(N).
class CycScalar {
  public:
	CycScalar() : n_(1), c_{Rational(0)} {}
	CycScalar(const Rational& q) : n_(1), c_{q} {} // NOLINT: implicit by design
	CycScalar(long v) : n_(1), c_{Rational(v)} {}
	CycScalar(int v) : n_(1), c_{Rational(v)} {}

	static CycScalar zeta(long n) { return zeta_pow(n, 1); }

	static CycScalar zeta_pow(long n, long k) {
		if (n < 1) throw std::invalid_argument("zeta_pow: conductor must be >= 1");
		k %= n;
		if (k < 0) k += n;
		detail::UPoly p(k + 1, Rational(0));
		p[k] = 1;
		return from_poly(n, std::move(p));
	}

	long conductor() const { return n_; }
	const std::vector<Rational>& coeffs() const { return c_; }

	bool is_zero() const {
		return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
	}

	bool is_rational() const {
		for (size_t i = 1; i < c_.size(); ++i)
			if (c_[i] != 0) return false;
		return true;
	}

	// Valid only when is_rational().
	Rational rational_value() const {
		if (!is_rational()) throw std::domain_error("rational_value: not rational");
		return c_[0];
	}

	CycScalar lifted(long m) const {
		if (m % n_ != 0) throw std::invalid_argument("lifted: conductor not a multiple");
		if (m == n_) return *this;
		long step = m / n_;
		detail::UPoly p(((long)c_.size() - 1) * step + 1, Rational(0));
		for (size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
		return from_poly(m, std::move(p));
	}

	friend CycScalar operator+(const CycScalar& a, const CycScalar& b) {
		long m = std::lcm(a.n_, b.n_);
		CycScalar x = a.lifted(m), y = b.lifted(m);
		for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
		return x;
	}

	friend CycScalar operator-(const CycScalar& a, const CycScalar& b) {
		long m = std::lcm(a.n_, b.n_);
		CycScalar x = a.lifted(m), y = b.lifted(m);
		for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
		return x;
	}

	friend CycScalar operator-(const CycScalar& a) {
		CycScalar x = a;
		for (auto& q : x.c_) q = -q;
		return x;
	}

	friend CycScalar operator*(const CycScalar& a, const CycScalar& b) {
		long m = std::lcm(a.n_, b.n_);
		CycScalar x = a.lifted(m), y = b.lifted(m);
		detail::UPoly p = detail::up_mul(to_poly(x), to_poly(y));
		return from_poly(m, std::move(p));
	}

	CycScalar inverse() const {
		if (is_zero()) throw std::domain_error("CycScalar::inverse: zero");
		detail::UPoly u, v;
		detail::UPoly g = detail::up_ext_gcd(to_poly(*this), *detail::cyclotomic_poly_ptr(n_), u, v);
		if (g.size() != 1) throw std::logic_error("CycScalar::inverse: gcd not constant");
		return from_poly(n_, std::move(u));
	}

	friend CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inverse(); }

	CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
	CycScalar& operator-=(const CycScalar& o) { return *this = *this - o; }
	CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }

	CycScalar pow(long e) const {
		if (e < 0) return inverse().pow(-e);
		CycScalar acc(Rational(1)), base = *this;
		unsigned long k = (unsigned long)e;
		while (k) {
			if (k & 1) acc = acc * base;
			base = base * base;
			k >>= 1;
		}
		return acc;
	}

	friend bool operator==(const CycScalar& a, const CycScalar& b) {
		long m = std::lcm(a.n_, b.n_);
		return a.lifted(m).c_ == b.lifted(m).c_;
	}
	friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

	// "0", "3/2", "zeta(4)", "2*zeta(12)^7 - 1" (descending powers).
	std::string to_string() const {
		if (is_zero()) return "0";
		std::ostringstream os;
		bool first = true;
		for (size_t k = c_.size(); k-- > 0;) {
			const Rational& q = c_[k];
			if (q == 0) continue;
			Rational mag = q < 0 ? Rational(-q) : q;
			if (first) {
				if (q < 0) os << "-";
				first = false;
			} else {
				os << (q < 0 ? " - " : " + ");
			}
			if (k == 0) {
				os << rat_str(mag);
			} else {
				if (mag != 1) os << rat_str(mag) << "*";
				os << "zeta(" << n_ << ")";
				if (k > 1) os << "^" << k;
			}
		}
		return os.str();
	}

	// Deterministic key for hashing and set membership (conductor-sensitive).
	std::string key() const {
		std::ostringstream os;
		os << n_;
		for (const auto& q : c_) os << "," << rat_str(q);
		return os.str();
	}

  private:
	static detail::UPoly to_poly(const CycScalar& s) {
		detail::UPoly p = s.c_;
		detail::up_trim(p);
		return p;
	}

	static CycScalar from_poly(long n, detail::UPoly p) {
		auto phi_n = detail::cyclotomic_poly_ptr(n);
		if ((long)p.size() >= (long)phi_n->size()) {
			detail::UPoly q, r;
			detail::up_divmod(p, *phi_n, q, r);
			p = std::move(r);
		}
		CycScalar s;
		s.n_ = n;
		s.c_ = std::move(p);
		s.c_.resize(phi_n->size() - 1, Rational(0));
		return s;
	}

	long n_;
	std::vector<Rational> c_;
};

inline bool is_zero(const CycScalar& s) { return s.is_zero(); }
inline CycScalar cyc_one() { return CycScalar(Rational(1)); }

// True when s is a rational with denominator 1 and |numerator| <= bound.
inline bool cyc_small_int(const CycScalar& s, long bound, long& out) {
	if (!s.is_rational()) return false;
	Rational q = s.rational_value();
	if (rat_den(q) != 1) return false;
	Int n = rat_num(q);
	if (n > bound || n < -bound) return false;
	out = (long)n.convert_to<long long>();
	return true;
}

} // namespace regalg
