#pragma once

// Regularity analysis of a graded algebra: the commutation bicharacter
// (when it exists), bounded and certified checks of the nonzero-products
// condition, the |G| x |G| matrix M^A with the three equivalent minimality
// tests, and the minimal coarsening along G/G0.

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "abgroup.hpp"
#include "galg.hpp"
#include "linalg.hpp"

namespace regalg {

struct Bicharacter {
	AbGroup group;
	Mat<CycScalar> values; // indexed by canonical element order

	CycScalar at(const GroupElement& g, const GroupElement& h) const {
		return values.at(index_of(g), index_of(h));
	}

	// beta(g,h)=beta(h,g)^{-1}, multiplicativity in both slots, beta(0,h)=1.
	std::optional<std::string> check_identities() const {
		size_t n = (size_t)group.order();
		for (size_t i = 0; i < n; ++i)
			for (size_t j = 0; j < n; ++j) {
				if (is_zero(values.at(i, j))) return "zero value at (" + std::to_string(i) + "," + std::to_string(j) + ")";
				GroupElement g = element_at(group, i), h = element_at(group, j);
				if (values.at(i, j) * values.at(j, i) != cyc_one())
					return "beta(g,h)*beta(h,g) != 1 at g=" + g.to_string() + ", h=" + h.to_string();
				for (size_t k = 0; k < n; ++k) {
					GroupElement s = element_at(group, k);
					if (values.at(index_of(add(g, s)), j) != values.at(i, j) * values.at(k, j))
						return "not multiplicative in the first slot at (" + g.to_string() + "+" + s.to_string() + "," + h.to_string() + ")";
					if (values.at(i, index_of(add(h, s))) != values.at(i, j) * values.at(i, k))
						return "not multiplicative in the second slot at (" + g.to_string() + "," + h.to_string() + "+" + s.to_string() + ")";
				}
			}
		GroupElement z = zero_element(group);
		for (size_t j = 0; j < n; ++j)
			if (values.at(index_of(z), j) != cyc_one()) return "beta(0,h) != 1";
		return std::nullopt;
	}
};

struct BicharExtraction {
	bool ok = false;
	std::optional<Bicharacter> beta;
	std::string witness;                     // description when not ok
	std::vector<std::pair<GroupElement, GroupElement>> unconstrained; // (g,h) with A_g A_h = 0
};

// Scan all basis pairs per degree pair: every nonzero product b_i b_j must be
// a common scalar multiple of b_j b_i; multilinearity extends the basis-level
// relation to arbitrary homogeneous elements. Degree pairs with all products
// zero leave beta(g,h) unconstrained (recorded; the value defaults to 1).
inline BicharExtraction extract_bicharacter(const GradedAlgebra& a) {
	const AbGroup& g = a.group();
	size_t n = (size_t)g.order();
	BicharExtraction out;
	Mat<CycScalar> vals(n, n);
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j) vals.at(i, j) = cyc_one();
	for (size_t gi = 0; gi < n; ++gi)
		for (size_t hj = 0; hj < n; ++hj) {
			GroupElement ge = element_at(g, gi), he = element_at(g, hj);
			std::optional<CycScalar> beta;
			bool any = false;
			for (size_t i : a.component(ge))
				for (size_t j : a.component(he)) {
					AlgElement ab = basis_element(a, i) * basis_element(a, j);
					AlgElement ba = basis_element(a, j) * basis_element(a, i);
					if (ab.is_zero() != ba.is_zero()) {
						out.witness = "one-sided zero product: " + a.label(i) + "," + a.label(j) +
						              " at degrees (" + ge.to_string() + "," + he.to_string() + ")";
						return out;
					}
					if (ab.is_zero()) continue;
					any = true;
					CycScalar ratio = ab.c.begin()->second * ba.coeff(ab.c.begin()->first).inverse();
					if (is_zero(ba.coeff(ab.c.begin()->first)) || !(ab == ratio * ba)) {
						out.witness = "products not proportional: " + a.label(i) + "," + a.label(j) +
						              " at degrees (" + ge.to_string() + "," + he.to_string() + ")";
						return out;
					}
					if (!beta)
						beta = ratio;
					else if (*beta != ratio) {
						out.witness = "inconsistent commutation scalar at degrees (" + ge.to_string() + "," +
						              he.to_string() + "): " + beta->to_string() + " vs " + ratio.to_string();
						return out;
					}
				}
			if (!any)
				out.unconstrained.emplace_back(ge, he);
			else
				vals.at(gi, hj) = *beta;
		}
	Bicharacter b{g, std::move(vals)};
	if (auto bad = b.check_identities()) {
		out.witness = "commutation scalars are not a bicharacter: " + *bad;
		return out;
	}
	out.ok = true;
	out.beta = std::move(b);
	return out;
}

enum class RegVerdict { RegularCertified, RegularUpTo, NotRegular };

struct ConditionIResult {
	RegVerdict verdict;
	long n_max = 0;                          // meaningful for RegularUpTo
	std::vector<GroupElement> failing_tuple; // meaningful for NotRegular
	std::string note;
};

namespace detail {

inline std::string projective_key(const AlgElement& x) {
	CycScalar inv = x.c.begin()->second.inverse();
	std::string s;
	for (auto& [i, v] : x.c) {
		s += std::to_string(i);
		s += ':';
		s += (v * inv).key();
		s += ';';
	}
	return s;
}

} // namespace detail

// Nonzero-products condition for every degree tuple of length <= n_max, by
// depth-first search over tuples carrying the set of achievable nonzero
// products (deduplicated projectively). If every degree has an invertible
// basis representative the condition holds for all lengths (products of
// units are units) and the verdict is certified.
inline ConditionIResult check_condition_i(const GradedAlgebra& a, long n_max) {
	const AbGroup& g = a.group();
	size_t n = (size_t)g.order();
	for (size_t gi = 0; gi < n; ++gi) {
		if (a.component(element_at(g, gi)).empty()) {
			ConditionIResult r{RegVerdict::NotRegular, 0, {element_at(g, gi)}, "empty homogeneous component"};
			return r;
		}
	}
	// When every structure constant has at most one term, products of basis
	// elements stay scalar multiples of basis elements, so the achievable set
	// is exactly a set of basis indices and the scan runs on bit vectors; the
	// same structure makes basis invertibility a bijectivity check on indices.
	bool monomial = true;
	for (size_t i = 0; i < a.dim() && monomial; ++i)
		for (size_t j = 0; j < a.dim() && monomial; ++j)
			if (a.sc(i, j).size() > 1) monomial = false;
	if (a.has_unit()) {
		auto invertible = [&](size_t i) -> bool {
			if (monomial) {
				// left multiplication permutes basis indices iff total and injective
				std::vector<char> hit(a.dim(), 0);
				for (size_t j = 0; j < a.dim(); ++j) {
					const auto& e = a.sc(i, j);
					if (e.empty() || hit[e[0].first]) return false;
					hit[e[0].first] = 1;
				}
				return true;
			}
			return try_inverse(basis_element(a, i)).has_value();
		};
		bool all_invertible = true;
		for (size_t gi = 0; gi < n && all_invertible; ++gi) {
			bool found = false;
			for (size_t i : a.component(element_at(g, gi)))
				if (invertible(i)) {
					found = true;
					break;
				}
			all_invertible = found;
		}
		if (all_invertible)
			return {RegVerdict::RegularCertified, n_max, {}, "every component has an invertible basis representative"};
	}
	std::vector<GroupElement> tuple;
	std::vector<GroupElement> bad;
	if (monomial) {
		std::map<std::string, long> verified;
		auto dfs = [&](auto&& self, const std::vector<char>& frontier, long depth) -> bool {
			long remaining = n_max - depth;
			if (remaining <= 0) return true;
			std::string state(frontier.begin(), frontier.end());
			auto it = verified.find(state);
			if (it != verified.end() && it->second >= remaining) return true;
			for (size_t gi = 0; gi < n; ++gi) {
				GroupElement ge = element_at(g, gi);
				tuple.push_back(ge);
				std::vector<char> next(a.dim(), 0);
				bool any = false;
				for (size_t i = 0; i < a.dim(); ++i)
					if (frontier[i])
						for (size_t j : a.component(ge)) {
							const auto& e = a.sc(i, j);
							if (!e.empty()) {
								next[e[0].first] = 1;
								any = true;
							}
						}
				if (!any) {
					bad = tuple;
					return false;
				}
				if (!self(self, next, depth + 1)) return false;
				tuple.pop_back();
			}
			long& best = verified[state];
			if (remaining > best) best = remaining;
			return true;
		};
		// length-1 products are the nonzero basis elements themselves, so
		// every scan starts from the full component (unital or not)
		bool ok = true;
		for (size_t gi = 0; gi < n && ok; ++gi) {
			GroupElement ge = element_at(g, gi);
			tuple = {ge};
			std::vector<char> first(a.dim(), 0);
			for (size_t j : a.component(ge)) first[j] = 1;
			ok = dfs(dfs, first, 1);
		}
		if (!ok) return {RegVerdict::NotRegular, 0, bad, "no nonzero product for this degree tuple"};
		return {RegVerdict::RegularUpTo, n_max, {},
		        "all degree tuples of length <= " + std::to_string(n_max) + " admit nonzero products"};
	}
	// Depth-first over degree tuples; products is the achievable set so far.
	// The subtree outcome depends only on the frontier set and the remaining
	// depth, so verified frontiers are memoized by their sorted key set:
	// revisiting one with no more levels left to check is an immediate pass.
	std::map<std::string, long> verified; // frontier key -> levels verified below it
	auto frontier_key = [](const std::set<std::string>& keys) {
		std::string s;
		for (const std::string& k : keys) {
			s += k;
			s += '|';
		}
		return s;
	};
	auto dfs = [&](auto&& self, const std::vector<AlgElement>& products, const std::string& state,
	               long depth) -> bool {
		long remaining = n_max - depth;
		if (remaining <= 0) return true;
		auto it = verified.find(state);
		if (it != verified.end() && it->second >= remaining) return true;
		for (size_t gi = 0; gi < n; ++gi) {
			GroupElement ge = element_at(g, gi);
			tuple.push_back(ge);
			std::vector<AlgElement> next;
			std::set<std::string> seen;
			for (const AlgElement& p : products)
				for (size_t j : a.component(ge)) {
					AlgElement q = p * basis_element(a, j);
					if (q.is_zero()) continue;
					if (seen.insert(detail::projective_key(q)).second) next.push_back(std::move(q));
				}
			if (next.empty()) {
				bad = tuple;
				return false;
			}
			if (!self(self, next, frontier_key(seen), depth + 1)) return false;
			tuple.pop_back();
		}
		long& best = verified[state];
		if (remaining > best) best = remaining;
		return true;
	};
	bool ok;
	if (a.has_unit()) {
		std::vector<AlgElement> start{unit_of(a)};
		ok = dfs(dfs, start, frontier_key({detail::projective_key(start[0])}), 0);
	} else {
		ok = true;
		for (size_t gi = 0; gi < n && ok; ++gi) {
			GroupElement ge = element_at(g, gi);
			tuple = {ge};
			std::vector<AlgElement> first;
			std::set<std::string> seen;
			for (size_t j : a.component(ge)) {
				AlgElement b = basis_element(a, j);
				if (seen.insert(detail::projective_key(b)).second) first.push_back(std::move(b));
			}
			if (first.empty()) {
				bad = tuple;
				ok = false;
				break;
			}
			ok = dfs(dfs, first, frontier_key(seen), 1);
		}
	}
	if (!ok) return {RegVerdict::NotRegular, 0, bad, "no nonzero product for this degree tuple"};
	return {RegVerdict::RegularUpTo, n_max, {}, "all degree tuples of length <= " + std::to_string(n_max) + " admit nonzero products"};
}

struct MinimalityResult {
	bool minimal = false;
	CycScalar detMA;
	Subgroup G0;
};

// Three equivalent tests, all computed, required to agree:
// det M^A != 0, columns pairwise distinct, G0(beta) trivial.
inline MinimalityResult minimality(const Bicharacter& beta) {
	const AbGroup& g = beta.group;
	size_t n = (size_t)g.order();
	CycScalar det = det_exact(beta.values);
	bool by_det = !is_zero(det);
	bool by_columns = true;
	for (size_t i = 0; i < n && by_columns; ++i)
		for (size_t j = i + 1; j < n && by_columns; ++j) {
			bool equal = true;
			for (size_t r = 0; r < n; ++r)
				if (beta.values.at(r, i) != beta.values.at(r, j)) {
					equal = false;
					break;
				}
			if (equal) by_columns = false;
		}
	std::vector<GroupElement> g0;
	for (size_t i = 0; i < n; ++i) {
		bool all_one = true;
		for (size_t j = 0; j < n; ++j)
			if (beta.values.at(i, j) != cyc_one()) {
				all_one = false;
				break;
			}
		if (all_one) g0.push_back(element_at(g, i));
	}
	Subgroup G0(g, g0);
	bool by_g0 = G0.order() == 1;
	if (by_det != by_columns || by_det != by_g0)
		throw std::logic_error("minimality: the three criteria disagree (arithmetic bug)");
	return {by_det, det, G0};
}

// Regrade along an epimorphism: same basis and products, coarser degrees.
inline GradedAlgebra coarsen_by(const GradedAlgebra& a, const GroupHom& alpha) {
	if (alpha.source != a.group()) throw std::invalid_argument("coarsen_by: map source mismatch");
	GradedAlgebra::Data d;
	d.name = a.name() + " coarsened to " + alpha.target.to_string();
	d.group = alpha.target;
	for (size_t i = 0; i < a.dim(); ++i) {
		d.labels.push_back(a.label(i));
		d.degree.push_back(alpha.apply(a.degree(i)));
	}
	d.sc.reserve(a.dim() * a.dim());
	for (size_t i = 0; i < a.dim(); ++i)
		for (size_t j = 0; j < a.dim(); ++j) d.sc.push_back(a.sc(i, j));
	d.unit = a.unit_coords();
	d.has_unit = a.has_unit();
	return make_graded_algebra(std::move(d));
}

struct MinimalCoarsening {
	GradedAlgebra coarsened;
	Bicharacter theta;
	GroupHom pi;
	Subgroup G0;
};

// Quotient the grading group by G0(beta); theta(gbar, hbar) = beta(g, h),
// well-definedness checked over all fiber representatives; the result's
// bicharacter is re-extracted and must be minimal.
inline MinimalCoarsening minimal_coarsening(const GradedAlgebra& a, const Bicharacter& beta) {
	MinimalityResult m = minimality(beta);
	Quotient q = quotient(a.group(), m.G0);
	size_t nt = (size_t)q.group.order();
	Mat<CycScalar> theta_vals(nt, nt);
	for (size_t i = 0; i < nt; ++i)
		for (size_t j = 0; j < nt; ++j) {
			GroupElement ti = element_at(q.group, i), tj = element_at(q.group, j);
			std::optional<CycScalar> val;
			for (const GroupElement& g1 : preimage(q.pi, ti))
				for (const GroupElement& g2 : preimage(q.pi, tj)) {
					CycScalar v = beta.at(g1, g2);
					if (!val)
						val = v;
					else if (*val != v)
						throw std::logic_error("minimal_coarsening: theta ill-defined (beta not constant on fibers)");
				}
			theta_vals.at(i, j) = *val;
		}
	Bicharacter theta{q.group, std::move(theta_vals)};
	if (auto bad = theta.check_identities())
		throw std::logic_error("minimal_coarsening: theta not a bicharacter: " + *bad);
	GradedAlgebra coarse = coarsen_by(a, q.pi);
	BicharExtraction re = extract_bicharacter(coarse);
	if (!re.ok) throw std::logic_error("minimal_coarsening: coarsened algebra lost its bicharacter: " + re.witness);
	for (size_t i = 0; i < nt; ++i)
		for (size_t j = 0; j < nt; ++j)
			if (re.beta->values.at(i, j) != theta.values.at(i, j))
				throw std::logic_error("minimal_coarsening: extracted bicharacter disagrees with theta");
	MinimalityResult mt = minimality(theta);
	if (!mt.minimal) throw std::logic_error("minimal_coarsening: quotient bicharacter not minimal");
	return {coarse, std::move(theta), q.pi, m.G0};
}

struct RegularityCertificate {
	GradedAlgebra algebra;
	ConditionIResult cond_i;
	BicharExtraction bichar;
	std::optional<MinimalityResult> min;
	bool regular() const {
		return cond_i.verdict != RegVerdict::NotRegular && bichar.ok;
	}
};

inline RegularityCertificate analyze_regularity(const GradedAlgebra& a, long n_max = 6) {
	RegularityCertificate cert{a, check_condition_i(a, n_max), extract_bicharacter(a), std::nullopt};
	if (cert.bichar.ok) cert.min = minimality(*cert.bichar.beta);
	return cert;
}

} // namespace regalg
