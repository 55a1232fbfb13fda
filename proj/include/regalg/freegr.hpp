#pragma once

// Free G-graded associative algebra: graded polynomials in variables
// carrying group degrees, exact evaluation on graded algebras (admissible
// substitutions only), generic evaluation with commuting indeterminates,
// and the two substitution maps used when passing between a grading and a
// coarsening (fiber-sum substitution and degree relabeling).

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "abgroup.hpp"
#include "galg.hpp"

namespace regalg {

struct GVar {
	int id;
	GroupElement degree;
};

class GradedPoly {
public:
	GradedPoly() = default;
	explicit GradedPoly(AbGroup g) : group_(std::move(g)) {}

	static GradedPoly variable(const AbGroup& g, int id, const GroupElement& deg) {
		GradedPoly p(g);
		p.declare(id, deg);
		p.terms_.emplace(std::vector<int>{id}, cyc_one());
		return p;
	}

	static GradedPoly constant(const AbGroup& g, const CycScalar& c) {
		GradedPoly p(g);
		if (!c.is_zero()) p.terms_.emplace(std::vector<int>{}, c);
		return p;
	}

	const AbGroup& group() const { return group_; }
	const std::map<int, GroupElement>& vars() const { return vars_; }
	const std::map<std::vector<int>, CycScalar>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	GroupElement degree_of_var(int id) const {
		auto it = vars_.find(id);
		if (it == vars_.end()) throw std::invalid_argument("GradedPoly: unknown variable x" + std::to_string(id));
		return it->second;
	}

	void declare(int id, const GroupElement& deg) {
		if (deg.group != group_) throw std::invalid_argument("GradedPoly: degree outside group");
		auto it = vars_.find(id);
		if (it == vars_.end())
			vars_.emplace(id, deg);
		else if (!(it->second == deg))
			throw std::invalid_argument("GradedPoly: variable x" + std::to_string(id) + " redeclared with a new degree");
	}

	void add_term(const std::vector<int>& word, const CycScalar& c) {
		for (int id : word)
			if (!vars_.count(id)) throw std::invalid_argument("GradedPoly: word uses undeclared variable");
		if (regalg::is_zero(c)) return;
		auto it = terms_.find(word);
		if (it == terms_.end()) {
			terms_.emplace(word, c);
			return;
		}
		it->second = it->second + c;
		if (regalg::is_zero(it->second)) terms_.erase(it);
	}

	GradedPoly& operator+=(const GradedPoly& o) {
		merge_vars(o);
		for (auto& [w, c] : o.terms_) add_term(w, c);
		return *this;
	}

	GradedPoly& operator-=(const GradedPoly& o) {
		merge_vars(o);
		for (auto& [w, c] : o.terms_) add_term(w, -c);
		return *this;
	}

	friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
	friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }

	friend GradedPoly operator*(const CycScalar& s, const GradedPoly& p) {
		GradedPoly r(p.group_);
		r.vars_ = p.vars_;
		for (auto& [w, c] : p.terms_) {
			CycScalar v = s * c;
			if (!regalg::is_zero(v)) r.terms_.emplace(w, v);
		}
		return r;
	}

	friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
		GradedPoly r(a.group_);
		r.vars_ = a.vars_;
		r.merge_vars(b);
		for (auto& [wa, ca] : a.terms_)
			for (auto& [wb, cb] : b.terms_) {
				std::vector<int> w = wa;
				w.insert(w.end(), wb.begin(), wb.end());
				r.add_term(w, ca * cb);
			}
		return r;
	}

	bool operator==(const GradedPoly& o) const { return terms_ == o.terms_; }
	bool operator!=(const GradedPoly& o) const { return !(*this == o); }

	bool is_multilinear() const {
		if (terms_.empty()) return false;
		for (auto& [w, c] : terms_) {
			if (w.size() != vars_.size()) return false;
			std::set<int> seen(w.begin(), w.end());
			if (seen.size() != w.size()) return false;
		}
		return true;
	}

	GroupElement word_degree(const std::vector<int>& w) const {
		GroupElement d = zero_element(group_);
		for (int id : w) d = add(d, degree_of_var(id));
		return d;
	}

	// All words share one total degree (the polynomial is G-homogeneous).
	std::optional<GroupElement> homogeneous_degree() const {
		std::optional<GroupElement> d;
		for (auto& [w, c] : terms_) {
			GroupElement wd = word_degree(w);
			if (!d)
				d = wd;
			else if (!(*d == wd))
				return std::nullopt;
		}
		return d;
	}

	std::string to_string() const {
		if (terms_.empty()) return "0";
		std::ostringstream os;
		bool first = true;
		for (auto& [w, c] : terms_) {
			std::string cs = c.to_string();
			bool neg = !cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos;
			if (first)
				os << (neg ? "-" : "");
			else
				os << (neg ? " - " : " + ");
			if (neg) cs = cs.substr(1);
			bool unit_coeff = cs == "1" && !w.empty();
			if (!unit_coeff) os << (cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs);
			bool need_star = !unit_coeff;
			for (int id : w) {
				if (need_star) os << "*";
				os << "x" << id << "{" << degree_of_var(id).to_string() << "}";
				need_star = true;
			}
			first = false;
		}
		return os.str();
	}

private:
	AbGroup group_;
	std::map<int, GroupElement> vars_;
	std::map<std::vector<int>, CycScalar> terms_;

	void merge_vars(const GradedPoly& o) {
		if (group_ != o.group_) {
			if (terms_.empty() && vars_.empty())
				group_ = o.group_;
			else
				throw std::invalid_argument("GradedPoly: mixing polynomials over different groups");
		}
		for (auto& [id, d] : o.vars_) declare(id, d);
	}
};

inline GradedPoly gp_comm(const GradedPoly& a, const GradedPoly& b) { return a * b - b * a; }

// [x1,x2][x3,x4]...[x_{2k-1},x_{2k}] on the given variables.
inline GradedPoly commutator_product(const AbGroup& g, const std::vector<GVar>& xs) {
	if (xs.empty() || xs.size() % 2) throw std::invalid_argument("commutator_product: need 2k variables");
	GradedPoly acc = GradedPoly::constant(g, cyc_one());
	for (size_t i = 0; i + 1 < xs.size(); i += 2) {
		GradedPoly a = GradedPoly::variable(g, xs[i].id, xs[i].degree);
		GradedPoly b = GradedPoly::variable(g, xs[i + 1].id, xs[i + 1].degree);
		acc = acc * gp_comm(a, b);
	}
	return acc;
}

// Standard polynomial: sum over permutations with sign, all variables degree 0.
inline GradedPoly standard_poly(const AbGroup& g, int arity) {
	GradedPoly p(g);
	for (int i = 0; i < arity; ++i) p.declare(i + 1, zero_element(g));
	std::vector<int> perm(arity);
	for (int i = 0; i < arity; ++i) perm[i] = i + 1;
	do {
		int inv = 0;
		for (int i = 0; i < arity; ++i)
			for (int j = i + 1; j < arity; ++j)
				if (perm[i] > perm[j]) ++inv;
		p.add_term(perm, CycScalar(inv % 2 ? -1L : 1L));
	} while (std::next_permutation(perm.begin(), perm.end()));
	return p;
}

// Exact evaluation; every assigned element must be homogeneous of its
// variable's declared degree.
inline AlgElement evaluate(const GradedPoly& f, const GradedAlgebra& a,
                           const std::map<int, AlgElement>& assignment) {
	if (f.group() != a.group())
		throw std::invalid_argument("evaluate: polynomial and algebra graded by different groups");
	for (auto& [id, deg] : f.vars()) {
		auto it = assignment.find(id);
		if (it == assignment.end())
			throw std::invalid_argument("evaluate: no value for x" + std::to_string(id));
		if (!it->second.alg.same_as(a)) throw std::invalid_argument("evaluate: value from another algebra");
		if (!it->second.is_homogeneous_of(deg))
			throw std::invalid_argument("evaluate: value for x" + std::to_string(id) +
			                            " not homogeneous of degree " + deg.to_string());
	}
	AlgElement acc(a);
	for (auto& [w, c] : f.terms()) {
		AlgElement t(a);
		if (w.empty()) {
			// constant term: needs the unit to live in the algebra
			if (!a.has_unit()) throw std::invalid_argument("evaluate: constant term on an algebra without unit");
			t = c * unit_of(a);
		} else {
			t = assignment.at(w[0]);
			for (size_t i = 1; i < w.size(); ++i) t = t * assignment.at(w[i]);
			t = c * t;
		}
		acc = acc + t;
	}
	return acc;
}

struct GenAssignment {
	std::map<int, GenElement> values;
	std::map<int, std::vector<int>> coord_vars; // poly var id -> indeterminate ids, basis order
};

// x^{(g)} |-> sum of fresh indeterminates times a basis of A_g.
inline GenElement generic_element(const GradedAlgebra& a, const GroupElement& g, const std::string& prefix,
                                  std::vector<int>* created = nullptr) {
	GenElement x(a);
	for (size_t i : a.component(g)) {
		int v = fresh_var(prefix);
		if (created) created->push_back(v);
		x.set(i, CommPoly::variable(v));
	}
	return x;
}

inline GenAssignment generic_assignment(const GradedPoly& f, const GradedAlgebra& a) {
	GenAssignment out;
	for (auto& [id, deg] : f.vars()) {
		std::vector<int> created;
		out.values.emplace(id, generic_element(a, deg, "c" + std::to_string(id) + "_", &created));
		out.coord_vars.emplace(id, std::move(created));
	}
	return out;
}

inline GenElement evaluate_gen(const GradedPoly& f, const GradedAlgebra& a,
                               const std::map<int, GenElement>& assignment) {
	if (f.group() != a.group())
		throw std::invalid_argument("evaluate_gen: polynomial and algebra graded by different groups");
	GenElement acc(a);
	for (auto& [w, c] : f.terms()) {
		GenElement t(a);
		if (w.empty()) {
			if (!a.has_unit()) throw std::invalid_argument("evaluate_gen: constant term on an algebra without unit");
			t = gen_from(c * unit_of(a));
		} else {
			for (size_t i = 0; i < w.size(); ++i) {
				auto it = assignment.find(w[i]);
				if (it == assignment.end())
					throw std::invalid_argument("evaluate_gen: no value for x" + std::to_string(w[i]));
				t = i == 0 ? it->second : t * it->second;
			}
			t = CommPoly(c) * t;
		}
		acc = acc + t;
	}
	return acc;
}

struct GenEval {
	GenElement value;
	GenAssignment assignment;
};

// Fully generic evaluation: the polynomial is a graded identity of A iff the
// resulting coordinates all vanish (exact over characteristic-0 scalars).
inline GenEval evaluate_generic(const GradedPoly& f, const GradedAlgebra& a) {
	GenEval r{GenElement(a), generic_assignment(f, a)};
	r.value = evaluate_gen(f, a, r.assignment.values);
	return r;
}

struct NuSubstitution {
	GradedPoly poly;                                       // over the source group G
	std::map<std::pair<int, std::vector<long>>, int> var_of; // (orig var, fiber residues) -> new var
};

// Replace each variable x^{(h)} of t (over H) by the sum of fresh variables,
// one per element of the fiber of the epimorphism pi: G ->> H over h;
// fully expanded. Fresh ids are allocated in canonical (orig id, fiber) order
// starting after the largest id used by t.
inline NuSubstitution nu_substitute(const GradedPoly& t, const GroupHom& pi) {
	if (t.group() != pi.target) throw std::invalid_argument("nu_substitute: polynomial not over the target group");
	if (!pi.is_surjective()) throw std::invalid_argument("nu_substitute: epimorphism required");
	NuSubstitution out;
	out.poly = GradedPoly(pi.source);
	int next = 1;
	for (auto& [id, deg] : t.vars()) next = std::max(next, id + 1);
	std::map<int, std::vector<std::pair<GroupElement, int>>> expansion; // orig id -> (fiber elem, new id)
	for (auto& [id, deg] : t.vars()) {
		std::vector<std::pair<GroupElement, int>> fib;
		for (const GroupElement& g : preimage(pi, deg)) {
			int nid = next++;
			out.poly.declare(nid, g);
			out.var_of[{id, g.r}] = nid;
			fib.emplace_back(g, nid);
		}
		expansion.emplace(id, std::move(fib));
	}
	for (auto& [w, c] : t.terms()) {
		std::vector<int> choice(w.size(), 0);
		while (true) {
			std::vector<int> word;
			word.reserve(w.size());
			for (size_t p = 0; p < w.size(); ++p) word.push_back(expansion.at(w[p])[(size_t)choice[p]].second);
			out.poly.add_term(word, c);
			size_t p = 0;
			for (; p < w.size(); ++p) {
				if (++choice[p] < (int)expansion.at(w[p]).size()) break;
				choice[p] = 0;
			}
			if (p == w.size()) break;
		}
	}
	return out;
}

// Push every variable degree of D (over G) through pi, keeping words and
// coefficients; the result is a polynomial over the target group.
inline GradedPoly relabel_by(const GradedPoly& d, const GroupHom& pi) {
	if (d.group() != pi.source) throw std::invalid_argument("relabel_by: polynomial not over the source group");
	GradedPoly out(pi.target);
	for (auto& [id, deg] : d.vars()) out.declare(id, pi.apply(deg));
	for (auto& [w, c] : d.terms()) out.add_term(w, c);
	return out;
}

} // namespace regalg
