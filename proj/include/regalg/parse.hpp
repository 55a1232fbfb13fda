#pragma once

// Text-to-value parsers for the literal grammars used in config files,
// reports, and the CLI: scalars ("3/2", "2*zeta(3)^2 - 1"), groups ("Z2xZ4",
// "trivial"), group elements ("(0,1)", "3"), commutative polynomials
// ("(z1-z2)^2*(z3+1)"), and graded polynomials ("x1{(0,1)}*x2{(1,0)} - 2",
// with [a,b] commutator sugar). All parsers throw std::invalid_argument with
// an offset on malformed input.

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "regalg/freegr.hpp"

namespace regalg {

namespace detail {

struct Lexer {
	const std::string& s;
	size_t pos = 0;

	explicit Lexer(const std::string& text) : s(text) {}

	void skip_ws() {
		while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
	}
	bool eof() {
		skip_ws();
		return pos >= s.size();
	}
	char peek() {
		skip_ws();
		return pos < s.size() ? s[pos] : '\0';
	}
	bool accept(char c) {
		if (peek() != c) return false;
		++pos;
		return true;
	}
	void expect(char c, const char* what) {
		if (!accept(c)) fail(std::string("expected '") + c + "' (" + what + ")");
	}
	[[noreturn]] void fail(const std::string& msg) const {
		throw std::invalid_argument("parse error at offset " + std::to_string(pos) + ": " + msg + " in \"" + s + "\"");
	}
	long integer() {
		skip_ws();
		size_t start = pos;
		if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
		size_t digits = pos;
		while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
		if (pos == digits) fail("expected an integer");
		return std::stol(s.substr(start, pos - start));
	}
	std::optional<std::string> ident() {
		skip_ws();
		if (pos >= s.size() || !(std::isalpha((unsigned char)s[pos]) || s[pos] == '_')) return std::nullopt;
		size_t start = pos;
		while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
		return s.substr(start, pos - start);
	}
};

} // namespace detail

inline AbGroup parse_group(const std::string& text) {
	detail::Lexer lx(text);
	lx.skip_ws();
	if (auto id = lx.ident(); id && *id == "trivial") {
		if (!lx.eof()) lx.fail("trailing input after 'trivial'");
		return AbGroup{};
	}
	lx.pos = 0;
	std::vector<long> orders;
	while (true) {
		lx.skip_ws();
		if (!lx.accept('Z')) lx.fail("expected 'Z<order>' or 'trivial'");
		long n = lx.integer();
		if (n < 1) lx.fail("cyclic factor order must be >= 1");
		orders.push_back(n);
		if (!lx.accept('x')) break;
	}
	if (!lx.eof()) lx.fail("trailing input after group");
	return AbGroup{orders};
}

inline GroupElement parse_element(const AbGroup& g, const std::string& text) {
	detail::Lexer lx(text);
	std::vector<long> r;
	if (lx.accept('(')) {
		if (!lx.accept(')')) {
			r.push_back(lx.integer());
			while (lx.accept(',')) r.push_back(lx.integer());
			lx.expect(')', "element tuple");
		}
	} else {
		long v = lx.integer();
		if (g.orders.empty()) {
			if (v != 0) lx.fail("the trivial group has only the element 0");
		} else {
			r.push_back(v);
		}
	}
	if (!lx.eof()) lx.fail("trailing input after element");
	if (r.size() != g.orders.size())
		lx.fail("element has " + std::to_string(r.size()) + " coordinates but " + g.to_string() + " has " +
		        std::to_string(g.orders.size()));
	return GroupElement(g, r);
}

// ---------------------------------------------------------------------------
// One expression grammar, three value domains. The Alg parameter supplies the
// domain operations; + - * / ^ and parentheses behave identically everywhere.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('-'|'+')* primary ('^' integer)?
//   primary:= integer | zeta(N) | <domain atom> | '(' expr ')'
//
// Division requires a constant (invertible scalar) divisor in the polynomial
// domains; exponents must be nonnegative there as well.

namespace detail {

template <class Alg>
typename Alg::Value parse_expr(Lexer& lx, Alg& alg);

template <class Alg>
typename Alg::Value parse_primary(Lexer& lx, Alg& alg) {
	if (lx.accept('(')) {
		auto v = parse_expr(lx, alg);
		lx.expect(')', "parenthesized expression");
		return v;
	}
	char c = lx.peek();
	if (std::isdigit((unsigned char)c)) return alg.from_scalar(CycScalar(lx.integer()));
	size_t at = lx.pos;
	if (auto id = lx.ident()) {
		if (*id == "zeta") {
			lx.expect('(', "zeta conductor");
			long n = lx.integer();
			lx.expect(')', "zeta conductor");
			if (n < 1) lx.fail("zeta conductor must be >= 1");
			return alg.from_scalar(CycScalar::zeta(n));
		}
		return alg.atom(lx, *id, at);
	}
	return alg.bracket(lx); // domain-specific bracket form, or fail
}

template <class Alg>
typename Alg::Value parse_factor(Lexer& lx, Alg& alg) {
	bool negate = false;
	while (true) {
		if (lx.accept('-'))
			negate = !negate;
		else if (!lx.accept('+'))
			break;
	}
	auto v = parse_primary(lx, alg);
	if (lx.accept('^')) {
		long e = lx.integer();
		v = alg.power(v, e, lx);
	}
	return negate ? alg.negate(v) : v;
}

template <class Alg>
typename Alg::Value parse_term(Lexer& lx, Alg& alg) {
	auto v = parse_factor(lx, alg);
	while (true) {
		if (lx.accept('*'))
			v = alg.mul(v, parse_factor(lx, alg));
		else if (lx.accept('/'))
			v = alg.div(v, parse_factor(lx, alg), lx);
		else
			break;
	}
	return v;
}

template <class Alg>
typename Alg::Value parse_expr(Lexer& lx, Alg& alg) {
	auto v = parse_term(lx, alg);
	while (true) {
		char c = lx.peek();
		if (c == '+') {
			lx.accept('+');
			v = alg.add(v, parse_term(lx, alg));
		} else if (c == '-') {
			lx.accept('-');
			v = alg.add(v, alg.negate(parse_term(lx, alg)));
		} else {
			break;
		}
	}
	return v;
}

struct ScalarDomain {
	using Value = CycScalar;
	Value from_scalar(const CycScalar& c) { return c; }
	Value add(const Value& a, const Value& b) { return a + b; }
	Value mul(const Value& a, const Value& b) { return a * b; }
	Value negate(const Value& a) { return -a; }
	Value div(const Value& a, const Value& b, Lexer& lx) {
		if (b.is_zero()) lx.fail("division by zero");
		return a / b;
	}
	Value power(const Value& a, long e, Lexer& lx) {
		if (e < 0 && a.is_zero()) lx.fail("zero to a negative power");
		return a.pow(e);
	}
	Value atom(Lexer& lx, const std::string& id, size_t at) {
		lx.pos = at;
		lx.fail("unknown name '" + id + "' in a scalar literal");
	}
	[[noreturn]] Value bracket(Lexer& lx) { lx.fail("expected a scalar"); }
};

struct CPolyDomain {
	using Value = CommPoly;
	Value from_scalar(const CycScalar& c) { return CommPoly(c); }
	Value add(const Value& a, const Value& b) { return a + b; }
	Value mul(const Value& a, const Value& b) { return a * b; }
	Value negate(const Value& a) { return CycScalar(-1L) * a; }
	Value div(const Value& a, const Value& b, Lexer& lx) {
		if (!b.is_constant() || b.is_zero()) lx.fail("polynomial division requires a nonzero constant divisor");
		return b.constant_value().inverse() * a;
	}
	Value power(const Value& a, long e, Lexer& lx) {
		if (e < 0) lx.fail("negative exponent on a polynomial");
		return a.pow(e);
	}
	Value atom(Lexer&, const std::string& id, size_t) { return CommPoly::variable(var_id(id)); }
	[[noreturn]] Value bracket(Lexer& lx) { lx.fail("expected a polynomial term"); }
};

struct GPolyDomain {
	using Value = GradedPoly;
	AbGroup group;
	Value from_scalar(const CycScalar& c) { return GradedPoly::constant(group, c); }
	Value add(const Value& a, const Value& b) { return a + b; }
	Value mul(const Value& a, const Value& b) { return a * b; }
	Value negate(const Value& a) { return CycScalar(-1L) * a; }
	Value div(const Value& a, const Value& b, Lexer& lx) {
		auto c = constant_of(b);
		if (!c || c->is_zero()) lx.fail("division requires a nonzero scalar divisor");
		return c->inverse() * a;
	}
	Value power(const Value& a, long e, Lexer& lx) {
		if (e < 0) lx.fail("negative exponent on a polynomial");
		Value r = GradedPoly::constant(group, cyc_one());
		for (long i = 0; i < e; ++i) r = r * a;
		return r;
	}
	// x<id>{<element>}: the free graded variable with its declared degree
	Value atom(Lexer& lx, const std::string& id, size_t at) {
		if (id.size() < 2 || id[0] != 'x') {
			lx.pos = at;
			lx.fail("unknown name '" + id + "' (graded variables look like x1{deg})");
		}
		for (size_t i = 1; i < id.size(); ++i)
			if (!std::isdigit((unsigned char)id[i])) {
				lx.pos = at;
				lx.fail("graded variable index must be numeric in '" + id + "'");
			}
		int vid = std::stoi(id.substr(1));
		lx.expect('{', "variable degree");
		size_t close = lx.s.find('}', lx.pos);
		if (close == std::string::npos) lx.fail("unterminated degree braces");
		GroupElement deg = parse_element(group, lx.s.substr(lx.pos, close - lx.pos));
		lx.pos = close + 1;
		return GradedPoly::variable(group, vid, deg);
	}
	// [a,b] = a*b - b*a
	Value bracket(Lexer& lx) {
		if (!lx.accept('[')) lx.fail("expected a term");
		Value a = parse_expr(lx, *this);
		lx.expect(',', "commutator");
		Value b = parse_expr(lx, *this);
		lx.expect(']', "commutator");
		return a * b + negate(b * a);
	}
	static std::optional<CycScalar> constant_of(const GradedPoly& p) {
		CycScalar c;
		for (auto& [w, v] : p.terms()) {
			if (!w.empty()) return std::nullopt;
			c = v;
		}
		return c;
	}
};

template <class Alg>
typename Alg::Value parse_with(Alg alg, const std::string& text, const char* what) {
	Lexer lx(text);
	if (lx.eof()) lx.fail(std::string("empty ") + what);
	auto v = parse_expr(lx, alg);
	if (!lx.eof()) lx.fail(std::string("trailing input after ") + what);
	return v;
}

} // namespace detail

inline CycScalar parse_scalar(const std::string& text) {
	return detail::parse_with(detail::ScalarDomain{}, text, "scalar");
}

inline CommPoly parse_cpoly(const std::string& text) {
	return detail::parse_with(detail::CPolyDomain{}, text, "polynomial");
}

inline GradedPoly parse_graded_poly(const AbGroup& g, const std::string& text) {
	return detail::parse_with(detail::GPolyDomain{g}, text, "graded polynomial");
}

} // namespace regalg
