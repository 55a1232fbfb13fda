#pragma once

// Commutative multivariate polynomials with exact cyclotomic coefficients.
// Monomials are kept in graded lexicographic order; variable names live in
// a process-wide registry so polynomials print with their original names.

#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "linalg.hpp"
#include "scalar.hpp"

namespace regalg {

class VarRegistry {
public:
	static VarRegistry& instance() {
		static VarRegistry reg;
		return reg;
	}

	int id_of(const std::string& name) {
		std::lock_guard<std::mutex> lock(mu_);
		auto it = ids_.find(name);
		if (it != ids_.end()) return it->second;
		int id = (int)names_.size();
		names_.push_back(name);
		ids_.emplace(name, id);
		return id;
	}

	std::string name_of(int id) {
		std::lock_guard<std::mutex> lock(mu_);
		if (id < 0 || (size_t)id >= names_.size()) throw std::out_of_range("VarRegistry: bad id");
		return names_[(size_t)id];
	}

	int fresh(const std::string& prefix) {
		std::lock_guard<std::mutex> lock(mu_);
		while (true) {
			std::string name = prefix + "#" + std::to_string(counter_++);
			if (ids_.count(name)) continue;
			int id = (int)names_.size();
			names_.push_back(name);
			ids_.emplace(name, id);
			return id;
		}
	}

private:
	std::mutex mu_;
	std::vector<std::string> names_;
	std::unordered_map<std::string, int> ids_;
	unsigned long counter_ = 0;
};

inline int var_id(const std::string& name) { return VarRegistry::instance().id_of(name); }
inline std::string var_name(int id) { return VarRegistry::instance().name_of(id); }
inline int fresh_var(const std::string& prefix) { return VarRegistry::instance().fresh(prefix); }

// Sparse monomial: sorted (var, exponent>0) pairs.
struct Mono {
	std::vector<std::pair<int, long>> e;

	long total_degree() const {
		long d = 0;
		for (auto& [v, k] : e) d += k;
		return d;
	}

	long degree_in(int var) const {
		for (auto& [v, k] : e)
			if (v == var) return k;
		return 0;
	}

	bool operator==(const Mono& o) const { return e == o.e; }

	// Graded lex: first by total degree, then by exponent sequence on
	// ascending variable ids (higher exponent on the smallest id wins).
	bool operator<(const Mono& o) const {
		long da = total_degree(), db = o.total_degree();
		if (da != db) return da < db;
		size_t i = 0, j = 0;
		while (i < e.size() && j < o.e.size()) {
			if (e[i].first != o.e[j].first) return e[i].first > o.e[j].first;
			if (e[i].second != o.e[j].second) return e[i].second < o.e[j].second;
			++i, ++j;
		}
		return i == e.size() && j < o.e.size() ? false : i < e.size();
	}
};

inline Mono mono_mul(const Mono& a, const Mono& b) {
	Mono m;
	size_t i = 0, j = 0;
	while (i < a.e.size() || j < b.e.size()) {
		if (j == b.e.size() || (i < a.e.size() && a.e[i].first < b.e[j].first))
			m.e.push_back(a.e[i++]);
		else if (i == a.e.size() || b.e[j].first < a.e[i].first)
			m.e.push_back(b.e[j++]);
		else {
			m.e.emplace_back(a.e[i].first, a.e[i].second + b.e[j].second);
			++i, ++j;
		}
	}
	return m;
}

// a / b when b divides a componentwise.
inline std::optional<Mono> mono_div(const Mono& a, const Mono& b) {
	Mono m;
	size_t i = 0;
	for (auto& [v, k] : b.e) {
		while (i < a.e.size() && a.e[i].first < v) m.e.push_back(a.e[i++]);
		if (i == a.e.size() || a.e[i].first != v || a.e[i].second < k) return std::nullopt;
		if (a.e[i].second > k) m.e.emplace_back(v, a.e[i].second - k);
		++i;
	}
	while (i < a.e.size()) m.e.push_back(a.e[i++]);
	return m;
}

class CommPoly {
public:
	CommPoly() = default;
	CommPoly(const CycScalar& c) {
		if (!regalg::is_zero(c)) terms_.emplace(Mono{}, c);
	}
	CommPoly(const Rational& q) : CommPoly(CycScalar(q)) {}
	CommPoly(long v) : CommPoly(CycScalar(v)) {}
	CommPoly(int v) : CommPoly(CycScalar((long)v)) {}

	static CommPoly variable(int id) {
		CommPoly p;
		Mono m;
		m.e.emplace_back(id, 1L);
		p.terms_.emplace(std::move(m), cyc_one());
		return p;
	}

	static CommPoly variable(const std::string& name) { return variable(var_id(name)); }

	const std::map<Mono, CycScalar>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	bool is_constant() const {
		return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.e.empty());
	}

	CycScalar constant_value() const {
		if (terms_.empty()) return CycScalar(0L);
		if (!is_constant()) throw std::logic_error("CommPoly: not a constant");
		return terms_.begin()->second;
	}

	long total_degree() const {
		long d = -1;
		for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
		return d;
	}

	long degree_in(int var) const {
		long d = 0;
		for (auto& [m, c] : terms_) d = std::max(d, m.degree_in(var));
		return d;
	}

	std::vector<int> vars_used() const {
		std::vector<int> out;
		for (auto& [m, c] : terms_)
			for (auto& [v, k] : m.e) out.push_back(v);
		std::sort(out.begin(), out.end());
		out.erase(std::unique(out.begin(), out.end()), out.end());
		return out;
	}

	CommPoly& operator+=(const CommPoly& o) {
		for (auto& [m, c] : o.terms_) add_term(m, c);
		return *this;
	}

	CommPoly& operator-=(const CommPoly& o) {
		for (auto& [m, c] : o.terms_) add_term(m, -c);
		return *this;
	}

	friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
	friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }

	friend CommPoly operator-(const CommPoly& a) {
		CommPoly r;
		for (auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
		return r;
	}

	friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
		CommPoly r;
		for (auto& [ma, ca] : a.terms_)
			for (auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
		return r;
	}

	CommPoly& operator*=(const CommPoly& o) { return *this = *this * o; }

	friend CommPoly operator*(const CycScalar& c, const CommPoly& p) { return CommPoly(c) * p; }

	CommPoly pow(long k) const {
		if (k < 0) throw std::invalid_argument("CommPoly::pow: negative exponent");
		CommPoly r(1L), base = *this;
		while (k) {
			if (k & 1) r *= base;
			base = k > 1 ? base * base : base;
			k >>= 1;
		}
		return r;
	}

	bool operator==(const CommPoly& o) const {
		if (terms_.size() != o.terms_.size()) return false;
		auto i = terms_.begin();
		auto j = o.terms_.begin();
		for (; i != terms_.end(); ++i, ++j)
			if (!(i->first == j->first) || i->second != j->second) return false;
		return true;
	}
	bool operator!=(const CommPoly& o) const { return !(*this == o); }

	CommPoly substitute(int var, const CycScalar& value) const {
		CommPoly r;
		for (auto& [m, c] : terms_) {
			Mono rest;
			long k = 0;
			for (auto& [v, ex] : m.e) {
				if (v == var)
					k = ex;
				else
					rest.e.emplace_back(v, ex);
			}
			r.add_term(rest, c * value.pow(k));
		}
		return r;
	}

	CommPoly substitute(int var, const CommPoly& value) const {
		CommPoly r;
		for (auto& [m, c] : terms_) {
			Mono rest;
			long k = 0;
			for (auto& [v, ex] : m.e) {
				if (v == var)
					k = ex;
				else
					rest.e.emplace_back(v, ex);
			}
			CommPoly t;
			t.terms_.emplace(std::move(rest), c);
			r += t * value.pow(k);
		}
		return r;
	}

	CycScalar evaluate(const std::map<int, CycScalar>& point) const {
		CycScalar acc(0L);
		for (auto& [m, c] : terms_) {
			CycScalar t = c;
			for (auto& [v, ex] : m.e) {
				auto it = point.find(v);
				if (it == point.end()) throw std::invalid_argument("CommPoly::evaluate: unassigned variable " + var_name(v));
				t = t * it->second.pow(ex);
			}
			acc = acc + t;
		}
		return acc;
	}

	std::string to_string() const {
		if (terms_.empty()) return "0";
		std::ostringstream os;
		bool first = true;
		for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
			const Mono& m = it->first;
			const CycScalar& c = it->second;
			std::string cs = c.to_string();
			bool neg = !cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos;
			if (first)
				os << (neg ? "-" : "");
			else
				os << (neg ? " - " : " + ");
			if (neg) cs = cs.substr(1);
			bool needs_paren = cs.find(' ') != std::string::npos;
			bool unit_coeff = cs == "1" && !m.e.empty();
			if (!unit_coeff) os << (needs_paren ? "(" + cs + ")" : cs);
			bool first_factor = unit_coeff;
			for (auto& [v, ex] : m.e) {
				if (!first_factor || !unit_coeff) os << "*";
				os << var_name(v);
				if (ex > 1) os << "^" << ex;
				first_factor = false;
			}
			first = false;
		}
		return os.str();
	}

private:
	std::map<Mono, CycScalar> terms_;

	void add_term(const Mono& m, const CycScalar& c) {
		if (regalg::is_zero(c)) return;
		auto it = terms_.find(m);
		if (it == terms_.end()) {
			terms_.emplace(m, c);
			return;
		}
		it->second = it->second + c;
		if (regalg::is_zero(it->second)) terms_.erase(it);
	}

	friend std::optional<CommPoly> exact_divide(const CommPoly&, const CommPoly&);
};

inline bool is_zero(const CommPoly& p) { return p.is_zero(); }

// Quotient p/d when d divides p exactly in the polynomial ring; under a
// monomial order the leading term of an exact multiple is always reducible,
// so single-divisor division either succeeds completely or proves non-divisibility.
inline std::optional<CommPoly> exact_divide(const CommPoly& p, const CommPoly& d) {
	if (d.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
	CommPoly r = p, q;
	const Mono& dlead = d.terms_.rbegin()->first;
	const CycScalar dc = d.terms_.rbegin()->second;
	while (!r.is_zero()) {
		const Mono& rlead = r.terms_.rbegin()->first;
		auto mq = mono_div(rlead, dlead);
		if (!mq) return std::nullopt;
		CommPoly t;
		t.terms_.emplace(*mq, r.terms_.rbegin()->second / dc);
		q += t;
		r -= t * d;
	}
	return q;
}

// Deterministic non-vanishing point: eliminate variables one at a time,
// trying degree_in(v)+1 small integer values for each; at least one keeps
// the partially evaluated polynomial nonzero.
inline std::optional<std::map<int, CycScalar>> find_nonvanishing(const CommPoly& p) {
	if (p.is_zero()) return std::nullopt;
	std::map<int, CycScalar> point;
	CommPoly cur = p;
	std::vector<int> vars = cur.vars_used();
	for (int v : vars) {
		long dv = cur.degree_in(v);
		bool placed = false;
		for (long val = 0; val <= dv; ++val) {
			CommPoly next = cur.substitute(v, CycScalar(val));
			if (!next.is_zero()) {
				point.emplace(v, CycScalar(val));
				cur = std::move(next);
				placed = true;
				break;
			}
		}
		if (!placed) throw std::logic_error("find_nonvanishing: no value kept polynomial alive");
	}
	return point;
}

// det of a matrix over CommPoly by cofactor expansion (small sizes only).
inline CommPoly det_cofactor(const Mat<CommPoly>& m) {
	if (m.rows != m.cols) throw std::invalid_argument("det_cofactor: not square");
	if (m.rows == 0) return CommPoly(1L);
	if (m.rows == 1) return m.at(0, 0);
	CommPoly acc;
	for (size_t j = 0; j < m.cols; ++j) {
		Mat<CommPoly> sub(m.rows - 1, m.cols - 1);
		for (size_t r = 1; r < m.rows; ++r) {
			size_t cc = 0;
			for (size_t c = 0; c < m.cols; ++c) {
				if (c == j) continue;
				sub.at(r - 1, cc++) = m.at(r, c);
			}
		}
		CommPoly term = m.at(0, j) * det_cofactor(sub);
		if (j % 2)
			acc -= term;
		else
			acc += term;
	}
	return acc;
}

// Discriminant of (x-a)(x-b)(x-c) expressed through the roots.
inline CommPoly discriminant3_from_roots(const CommPoly& a, const CommPoly& b, const CommPoly& c) {
	CommPoly ab = a - b, ac = a - c, bc = b - c;
	return ab * ab * ac * ac * bc * bc;
}

// Discriminant of the characteristic polynomial of a 3x3 matrix, from the
// monic cubic x^3 + B x^2 + C x + D: 18BCD - 4B^3D + B^2C^2 - 4C^3 - 27D^2.
inline CommPoly charpoly_disc3(const Mat<CommPoly>& m) {
	if (m.rows != 3 || m.cols != 3) throw std::invalid_argument("charpoly_disc3: need a 3x3 matrix");
	CommPoly tr = m.at(0, 0) + m.at(1, 1) + m.at(2, 2);
	CommPoly minors;
	minors += m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
	minors += m.at(0, 0) * m.at(2, 2) - m.at(0, 2) * m.at(2, 0);
	minors += m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1);
	CommPoly det = det_cofactor(m);
	CommPoly B = -tr, C = minors, D = -det;
	return CycScalar(18L) * (B * C * D) - CycScalar(4L) * (B.pow(3) * D) + B * B * C * C -
	       CycScalar(4L) * C.pow(3) - CycScalar(27L) * (D * D);
}

// (z1-z2)(z1-z3)(z4-z2)(z4-z3)(z2-z3)^2 on the given variable ids.
inline CommPoly weight_poly_L(int z1, int z2, int z3, int z4) {
	CommPoly p1 = CommPoly::variable(z1), p2 = CommPoly::variable(z2);
	CommPoly p3 = CommPoly::variable(z3), p4 = CommPoly::variable(z4);
	CommPoly d23 = p2 - p3;
	return (p1 - p2) * (p1 - p3) * (p4 - p2) * (p4 - p3) * d23 * d23;
}

} // namespace regalg
