#pragma once

// Exact graded-identity and graded-centrality testing: exhaustive basis-tuple
// evaluation for multilinear polynomials, generic-indeterminate evaluation for
// arbitrary polynomials (sound and complete over characteristic-0 scalars),
// the linear-algebra solver for multilinear central/identity spaces, the
// odd-part annihilator ideal with its quotient, and an independent sign-sum
// oracle for multilinear identities of the Grassmann algebra.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "freegr.hpp"
#include "galg.hpp"
#include "linalg.hpp"

namespace regalg {

struct CentralityWitness {
	std::vector<std::pair<int, std::string>> assignment; // var id -> element
	std::string value;                                   // the evaluated element
	std::string non_commuting;                           // basis label (empty for non-identity witnesses)
};

struct CentralityVerdict {
	bool is_identity = false;
	bool is_central = false;
	bool is_proper_central = false;
	std::optional<CentralityWitness> witness; // shows non-identity or non-centrality
};

namespace detail {

inline std::vector<std::vector<int>> permutations_of(int d) {
	std::vector<int> p(d);
	for (int i = 0; i < d; ++i) p[i] = i;
	std::vector<std::vector<int>> out;
	do out.push_back(p);
	while (std::next_permutation(p.begin(), p.end()));
	return out;
}

} // namespace detail

// Exhaustive decision on all admissible basis tuples; multilinearity makes
// this complete for both the identity and the centrality question (values
// are multilinear in each slot, commutators linear in the value).
inline CentralityVerdict test_multilinear(const GradedPoly& f, const GradedAlgebra& a) {
	if (!f.is_multilinear()) throw std::invalid_argument("test_multilinear: polynomial not multilinear");
	std::vector<int> ids;
	std::vector<std::vector<size_t>> comps;
	for (auto& [id, deg] : f.vars()) {
		ids.push_back(id);
		comps.push_back(a.component(deg));
	}
	size_t d = ids.size();
	CentralityVerdict v;
	v.is_identity = true;
	v.is_central = true;
	for (auto& c : comps)
		if (c.empty()) { // no admissible substitution: vacuously identity and central
			v.is_proper_central = false;
			return v;
		}
	std::vector<size_t> pick(d, 0);
	while (true) {
		std::map<int, AlgElement> asg;
		for (size_t i = 0; i < d; ++i) asg.emplace(ids[i], basis_element(a, comps[i][pick[i]]));
		AlgElement val = evaluate(f, a, asg);
		auto record = [&](const std::string& label) {
			CentralityWitness w;
			for (size_t i = 0; i < d; ++i) w.assignment.emplace_back(ids[i], a.label(comps[i][pick[i]]));
			w.value = val.to_string();
			w.non_commuting = label;
			return w;
		};
		if (!val.is_zero() && v.is_identity) {
			v.is_identity = false;
			if (!v.witness) v.witness = record("");
		}
		if (v.is_central) {
			for (size_t j = 0; j < a.dim(); ++j)
				if (!commutator(val, basis_element(a, j)).is_zero()) {
					v.is_central = false;
					v.witness = record(a.label(j)); // non-centrality witness wins
					break;
				}
		}
		if (!v.is_identity && !v.is_central) break;
		size_t i = 0;
		for (; i < d; ++i) {
			if (++pick[i] < comps[i].size()) break;
			pick[i] = 0;
		}
		if (i == d) break;
	}
	v.is_proper_central = v.is_central && !v.is_identity;
	return v;
}

// Identity-only decision with machine-integer arithmetic, for large monomial
// algebras (every structure constant a single term with small integer
// coefficient). Returns nullopt when the preconditions do not hold.
inline std::optional<bool> is_identity_multilinear_fast(const GradedPoly& f, const GradedAlgebra& a) {
	if (!f.is_multilinear()) throw std::invalid_argument("is_identity_multilinear_fast: not multilinear");
	constexpr long kBound = 1 << 20;
	size_t n = a.dim();
	std::vector<int32_t> pk(n * n, -1);
	std::vector<int64_t> pc(n * n, 0);
	long max_sc = 1;
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j) {
			const SparseVec& s = a.sc(i, j);
			if (s.empty()) continue;
			if (s.size() > 1) return std::nullopt;
			long c;
			if (!cyc_small_int(s[0].second, kBound, c)) return std::nullopt;
			pk[i * n + j] = (int32_t)s[0].first;
			pc[i * n + j] = c;
			max_sc = std::max(max_sc, std::abs(c));
		}
	std::vector<int> ids;
	std::vector<std::vector<size_t>> comps;
	for (auto& [id, deg] : f.vars()) {
		ids.push_back(id);
		comps.push_back(a.component(deg));
		if (comps.back().empty()) return true;
	}
	size_t d = ids.size();
	std::vector<std::pair<std::vector<size_t>, int64_t>> words; // ordinal positions + coefficient
	long max_f = 1;
	for (auto& [w, c] : f.terms()) {
		long ci;
		if (!cyc_small_int(c, kBound, ci)) return std::nullopt;
		max_f = std::max(max_f, std::abs(ci));
		std::vector<size_t> ord;
		for (int id : w) ord.push_back((size_t)(std::find(ids.begin(), ids.end(), id) - ids.begin()));
		words.emplace_back(std::move(ord), ci);
	}
	// overflow bound: each word value is a product of d-1 structure constants
	// times an f coefficient; the tuple sum has at most |words| summands
	long double bound = (long double)max_f * (long double)words.size();
	for (size_t s = 0; s + 1 < d; ++s) bound *= (long double)max_sc;
	if (bound > 4.0e18L) return std::nullopt;

	std::vector<size_t> pick(d, 0);
	std::vector<std::pair<int32_t, int64_t>> acc;
	while (true) {
		acc.clear();
		for (auto& [ord, c] : words) {
			int32_t cur = (int32_t)comps[ord[0]][pick[ord[0]]];
			int64_t coef = c;
			for (size_t p = 1; p < ord.size() && cur >= 0; ++p) {
				size_t t = comps[ord[p]][pick[ord[p]]];
				coef *= pc[(size_t)cur * n + t];
				cur = pk[(size_t)cur * n + t];
			}
			if (cur < 0) continue;
			bool found = false;
			for (auto& [k, s] : acc)
				if (k == cur) {
					s += coef;
					found = true;
					break;
				}
			if (!found) acc.emplace_back(cur, coef);
		}
		for (auto& [k, s] : acc)
			if (s != 0) return false;
		size_t i = 0;
		for (; i < d; ++i) {
			if (++pick[i] < comps[i].size()) break;
			pick[i] = 0;
		}
		if (i == d) break;
	}
	return true;
}

// Generic evaluation decides identity and centrality for arbitrary (not
// necessarily multilinear) polynomials; witnesses are extracted from a
// deterministic non-vanishing rational point of the offending coordinate.
inline CentralityVerdict test_generic(const GradedPoly& f, const GradedAlgebra& a) {
	GenEval ev = evaluate_generic(f, a);
	CentralityVerdict v;
	v.is_identity = ev.value.is_zero();
	v.is_central = true;
	CommPoly offending;
	std::string non_comm;
	if (!v.is_identity) offending = ev.value.c.begin()->second;
	for (size_t j = 0; j < a.dim() && v.is_central; ++j) {
		GenElement c = commutator(ev.value, gen_from(basis_element(a, j)));
		if (!c.is_zero()) {
			v.is_central = false;
			offending = c.c.begin()->second;
			non_comm = a.label(j);
		}
	}
	v.is_proper_central = v.is_central && !v.is_identity;
	if (!v.is_central || !v.is_identity) {
		auto point = find_nonvanishing(offending);
		std::map<int, CycScalar> full = *point;
		for (auto& [id, gens] : ev.assignment.coord_vars)
			for (int g : gens) full.emplace(g, CycScalar(0L)); // unmentioned coordinates default to 0
		CentralityWitness w;
		for (auto& [id, ge] : ev.assignment.values) w.assignment.emplace_back(id, specialize(ge, full).to_string());
		std::map<int, GenElement> conc;
		for (auto& [id, ge] : ev.assignment.values) conc.emplace(id, gen_from(specialize(ge, full)));
		AlgElement val(a);
		{
			GenElement gv = evaluate_gen(f, a, conc);
			for (auto& [i, p] : gv.c) val.set(i, p.constant_value());
		}
		w.value = val.to_string();
		w.non_commuting = non_comm;
		v.witness = std::move(w);
	}
	return v;
}

struct CentralSpaceResult {
	long central_dim = 0;
	long identity_dim = 0;
	bool proper_exists = false;
	std::vector<std::vector<int>> perms;                 // S_d in lexicographic order
	std::vector<std::vector<CycScalar>> central_basis;   // gamma vectors
	std::vector<std::vector<CycScalar>> identity_basis;  // gamma vectors
};

// All multilinear polynomials sum_{sigma} gamma_sigma x_{sigma(1)}...x_{sigma(d)}
// with the given variable degrees: solve the exact linear systems for the
// central ones ([value, basis] = 0 on every admissible basis tuple) and the
// identities (value = 0); proper central ones exist iff the dims differ.
inline CentralSpaceResult multilinear_central_space(const GradedAlgebra& a,
                                                    const std::vector<GroupElement>& degrees,
                                                    int arity_guard = 4) {
	int d = (int)degrees.size();
	if (d < 1 || d > arity_guard) throw std::invalid_argument("multilinear_central_space: arity guard exceeded");
	CentralSpaceResult res;
	res.perms = detail::permutations_of(d);
	size_t np = res.perms.size();
	std::vector<std::vector<size_t>> comps;
	for (auto& g : degrees) comps.push_back(a.component(g));
	RowEchelon<CycScalar> central_rows(np), identity_rows(np);
	for (auto& c : comps)
		if (c.empty()) { // vacuous: everything is an identity
			res.central_dim = res.identity_dim = (long)np;
			res.proper_exists = false;
			for (size_t i = 0; i < np; ++i) {
				std::vector<CycScalar> e(np, CycScalar(0L));
				e[i] = cyc_one();
				res.central_basis.push_back(e);
				res.identity_basis.push_back(std::move(e));
			}
			return res;
		}
	std::vector<size_t> pick((size_t)d, 0);
	while (true) {
		// per-permutation product values on this tuple
		std::vector<AlgElement> vals;
		vals.reserve(np);
		for (auto& p : res.perms) {
			AlgElement v = basis_element(a, comps[(size_t)p[0]][pick[(size_t)p[0]]]);
			for (int s = 1; s < d; ++s) v = v * basis_element(a, comps[(size_t)p[s]][pick[(size_t)p[s]]]);
			vals.push_back(std::move(v));
		}
		std::set<size_t> coords;
		for (auto& v : vals)
			for (auto& [k, c] : v.c) coords.insert(k);
		for (size_t k : coords) {
			std::vector<CycScalar> row(np, CycScalar(0L));
			for (size_t s = 0; s < np; ++s) row[s] = vals[s].coeff(k);
			identity_rows.add_row(row);
		}
		for (size_t j = 0; j < a.dim(); ++j) {
			AlgElement bj = basis_element(a, j);
			std::vector<AlgElement> comm;
			comm.reserve(np);
			for (auto& v : vals) comm.push_back(commutator(v, bj));
			std::set<size_t> ccoords;
			for (auto& c : comm)
				for (auto& [k, s] : c.c) ccoords.insert(k);
			for (size_t k : ccoords) {
				std::vector<CycScalar> row(np, CycScalar(0L));
				for (size_t s = 0; s < np; ++s) row[s] = comm[s].coeff(k);
				central_rows.add_row(row);
			}
		}
		size_t i = 0;
		for (; i < (size_t)d; ++i) {
			if (++pick[i] < comps[i].size()) break;
			pick[i] = 0;
		}
		if (i == (size_t)d) break;
	}
	res.central_basis = central_rows.nullspace_basis();
	res.identity_basis = identity_rows.nullspace_basis();
	res.central_dim = (long)res.central_basis.size();
	res.identity_dim = (long)res.identity_basis.size();
	res.proper_exists = res.central_dim > res.identity_dim;
	return res;
}

struct AnnihilatorIdeal {
	GradedAlgebra alg;
	std::vector<AlgElement> basis; // of T = {a in A_1 : a A_1 = 0}
};

// Left annihilator of the odd part inside the odd part, over a Z_2-grading;
// all ideal invariants (two-sided graded ideal, T_0 = 0, T^2 = 0) verified.
inline AnnihilatorIdeal annihilator_ideal(const GradedAlgebra& a) {
	if (!(a.group() == AbGroup{{2}})) throw std::invalid_argument("annihilator_ideal: algebra must be Z2-graded");
	GroupElement one(a.group(), {1});
	std::vector<size_t> odd = a.component(one);
	size_t m = odd.size();
	RowEchelon<CycScalar> rows(m);
	for (size_t j : odd) {
		// coords of (sum_i x_i b_{odd[i]}) * b_j must vanish
		std::map<size_t, std::vector<CycScalar>> eq; // output coord -> row
		for (size_t i = 0; i < m; ++i)
			for (auto& [k, s] : a.sc(odd[i], j)) {
				auto it = eq.find(k);
				if (it == eq.end()) it = eq.emplace(k, std::vector<CycScalar>(m, CycScalar(0L))).first;
				it->second[i] = it->second[i] + s;
			}
		for (auto& [k, row] : eq) rows.add_row(row);
	}
	AnnihilatorIdeal t{a, {}};
	for (auto& v : rows.nullspace_basis()) {
		AlgElement x(a);
		for (size_t i = 0; i < m; ++i) x.set(odd[i], v[i]);
		t.basis.push_back(std::move(x));
	}
	// invariants
	RowEchelon<CycScalar> span(a.dim());
	for (auto& x : t.basis) {
		std::vector<CycScalar> row(a.dim(), CycScalar(0L));
		for (auto& [i, v] : x.c) row[i] = v;
		span.add_row(row);
	}
	auto in_t = [&](const AlgElement& x) {
		std::vector<CycScalar> row(a.dim(), CycScalar(0L));
		for (auto& [i, v] : x.c) row[i] = v;
		return span.contains(row);
	};
	for (auto& x : t.basis) {
		if (!x.is_homogeneous_of(one)) throw std::logic_error("annihilator_ideal: T not inside A_1");
		for (size_t j = 0; j < a.dim(); ++j) {
			if (!in_t(x * basis_element(a, j))) throw std::logic_error("annihilator_ideal: T not a right ideal");
			if (!in_t(basis_element(a, j) * x)) throw std::logic_error("annihilator_ideal: T not a left ideal");
		}
		for (auto& y : t.basis)
			if (!(x * y).is_zero()) throw std::logic_error("annihilator_ideal: T^2 != 0");
	}
	return t;
}

struct QuotientAlgebra {
	GradedAlgebra quotient;
	std::vector<size_t> complement;  // indices of parent basis vectors used as the quotient basis
	Mat<CycScalar> reducer;          // (dim B) x (dim A): coordinates of the projection
	GradedAlgebra parent;

	AlgElement project(const AlgElement& x) const {
		AlgElement r(quotient);
		for (size_t bi = 0; bi < complement.size(); ++bi) {
			CycScalar acc(0L);
			for (auto& [k, v] : x.c) acc = acc + reducer.at(bi, k) * v;
			r.set(bi, acc);
		}
		return r;
	}
};

// A / T on a homogeneous complement chosen greedily from the original basis;
// the projection is verified to be an algebra morphism on all basis products.
inline QuotientAlgebra quotient_by(const GradedAlgebra& a, const AnnihilatorIdeal& t) {
	if (!t.alg.same_as(a)) throw std::invalid_argument("quotient_by: ideal of a different algebra");
	size_t n = a.dim(), nt = t.basis.size();
	std::vector<size_t> complement;
	{
		RowEchelon<CycScalar> grow(n);
		for (auto& x : t.basis) {
			std::vector<CycScalar> row(n, CycScalar(0L));
			for (auto& [i, v] : x.c) row[i] = v;
			grow.add_row(row);
		}
		for (size_t i = 0; i < n; ++i) {
			std::vector<CycScalar> row(n, CycScalar(0L));
			row[i] = cyc_one();
			if (grow.add_row(row)) complement.push_back(i);
		}
	}
	size_t nb = complement.size();
	if (nb + nt != n) throw std::logic_error("quotient_by: complement dimension mismatch");
	// change of basis: columns = complement unit vectors then T basis vectors
	Mat<CycScalar> m(n, n);
	for (size_t c = 0; c < nb; ++c) m.at(complement[c], c) = cyc_one();
	for (size_t c = 0; c < nt; ++c)
		for (auto& [i, v] : t.basis[c].c) m.at(i, nb + c) = v;
	auto minv = mat_inverse(m);
	if (!minv) throw std::logic_error("quotient_by: basis change not invertible");
	QuotientAlgebra q;
	q.parent = a;
	q.complement = complement;
	q.reducer = Mat<CycScalar>(nb, n);
	for (size_t r = 0; r < nb; ++r)
		for (size_t c = 0; c < n; ++c) q.reducer.at(r, c) = minv->at(r, c);
	GradedAlgebra::Data d;
	d.name = a.name() + " / T";
	d.group = a.group();
	for (size_t c : complement) {
		d.labels.push_back("[" + a.label(c) + "]");
		d.degree.push_back(a.degree(c));
	}
	d.sc.assign(nb * nb, {});
	for (size_t i = 0; i < nb; ++i)
		for (size_t j = 0; j < nb; ++j) {
			AlgElement prod = basis_element(a, complement[i]) * basis_element(a, complement[j]);
			SparseVec out;
			for (size_t bi = 0; bi < nb; ++bi) {
				CycScalar acc(0L);
				for (auto& [k, v] : prod.c) acc = acc + q.reducer.at(bi, k) * v;
				if (!is_zero(acc)) out.emplace_back(bi, acc);
			}
			d.sc[i * nb + j] = std::move(out);
		}
	if (a.has_unit()) {
		for (size_t bi = 0; bi < nb; ++bi) {
			CycScalar acc(0L);
			for (auto& [k, v] : a.unit_coords()) acc = acc + q.reducer.at(bi, k) * v;
			if (!is_zero(acc)) d.unit.emplace_back(bi, acc);
		}
		d.has_unit = true;
	}
	q.quotient = make_graded_algebra(std::move(d));
	// projection must be multiplicative on all basis pairs of A
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j) {
			AlgElement lhs = q.project(basis_element(a, i) * basis_element(a, j));
			AlgElement rhs = q.project(basis_element(a, i)) * q.project(basis_element(a, j));
			if (!(lhs == rhs)) throw std::logic_error("quotient_by: projection not multiplicative");
		}
	return q;
}

// Membership of a multilinear polynomial in the identities of the full
// (infinite) Grassmann algebra, by the disjoint-support sign criterion: for
// each admissible parity vector p, the signed coefficient sum over the words
// must vanish, where a word's sign counts the inversions it induces among
// its odd-parity variables. Even-parity variables are realized by length-2
// monomials, odd-parity by single generators; overlapping-support
// substitutions vanish term-by-term and impose no further condition.
inline bool grassmann_multilinear_oracle(const GradedPoly& f) {
	if (!f.is_multilinear()) throw std::invalid_argument("grassmann_multilinear_oracle: not multilinear");
	bool graded = f.group() == AbGroup{{2}};
	if (!graded && !(f.group() == AbGroup{}))
		throw std::invalid_argument("grassmann_multilinear_oracle: group must be Z2 or trivial");
	std::vector<int> ids;
	for (auto& [id, deg] : f.vars()) ids.push_back(id);
	size_t d = ids.size();
	auto check_parity = [&](const std::vector<int>& p) {
		CycScalar sum(0L);
		for (auto& [w, c] : f.terms()) {
			int inv = 0;
			for (size_t i = 0; i < d; ++i)
				for (size_t j = i + 1; j < d; ++j) {
					size_t pi = (size_t)(std::find(ids.begin(), ids.end(), w[i]) - ids.begin());
					size_t pj = (size_t)(std::find(ids.begin(), ids.end(), w[j]) - ids.begin());
					if (pi > pj && p[pi] == 1 && p[pj] == 1) ++inv;
				}
			sum = sum + (inv % 2 ? -c : c);
		}
		return is_zero(sum);
	};
	if (graded) {
		std::vector<int> p;
		for (int id : ids) p.push_back((int)f.degree_of_var(id).r[0]);
		return check_parity(p);
	}
	for (uint32_t mask = 0; mask < (1u << d); ++mask) {
		std::vector<int> p;
		for (size_t i = 0; i < d; ++i) p.push_back((mask >> i) & 1);
		if (!check_parity(p)) return false;
	}
	return true;
}

} // namespace regalg
