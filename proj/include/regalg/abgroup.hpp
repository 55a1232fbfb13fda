#pragma once

// Finite abelian groups in cyclic-factor form Z_{n1} x ... x Z_{nk},
// their elements (residue vectors), homomorphisms, subgroups, and
// quotients. The canonical element order is lexicographic on residue
// vectors (first coordinate most significant).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace regalg {

struct AbGroup {
	std::vector<long> orders; // each >= 1; empty = trivial group

	long order() const {
		long n = 1;
		for (long k : orders) n *= k;
		return n;
	}

	long exponent() const {
		long e = 1;
		for (long k : orders) e = std::lcm(e, k);
		return e;
	}

	size_t factors() const { return orders.size(); }

	bool operator==(const AbGroup& o) const { return orders == o.orders; }
	bool operator!=(const AbGroup& o) const { return !(*this == o); }

	std::string to_string() const {
		if (orders.empty()) return "trivial";
		std::ostringstream os;
		for (size_t i = 0; i < orders.size(); ++i) {
			if (i) os << "x";
			os << "Z" << orders[i];
		}
		return os.str();
	}
};

struct GroupElement {
	AbGroup group;
	std::vector<long> r;

	GroupElement() = default;
	GroupElement(AbGroup g, std::vector<long> residues) : group(std::move(g)), r(std::move(residues)) {
		if (r.size() != group.orders.size())
			throw std::invalid_argument("GroupElement: residue count mismatch");
		for (size_t i = 0; i < r.size(); ++i) {
			r[i] %= group.orders[i];
			if (r[i] < 0) r[i] += group.orders[i];
		}
	}

	bool is_zero() const {
		return std::all_of(r.begin(), r.end(), [](long v) { return v == 0; });
	}

	bool operator==(const GroupElement& o) const { return group == o.group && r == o.r; }
	bool operator!=(const GroupElement& o) const { return !(*this == o); }
	bool operator<(const GroupElement& o) const { return r < o.r; } // canonical (lex) order

	std::string to_string() const {
		if (r.empty()) return "0";
		if (r.size() == 1) return std::to_string(r[0]);
		std::ostringstream os;
		os << "(";
		for (size_t i = 0; i < r.size(); ++i) {
			if (i) os << ",";
			os << r[i];
		}
		os << ")";
		return os.str();
	}
};

inline GroupElement zero_element(const AbGroup& g) {
	return GroupElement(g, std::vector<long>(g.orders.size(), 0));
}

inline void check_same_group(const GroupElement& a, const GroupElement& b, const char* op) {
	if (a.group != b.group) throw std::invalid_argument(std::string(op) + ": mismatched parent groups");
}

inline GroupElement add(const GroupElement& a, const GroupElement& b) {
	check_same_group(a, b, "add");
	std::vector<long> r(a.r.size());
	for (size_t i = 0; i < r.size(); ++i) r[i] = (a.r[i] + b.r[i]) % a.group.orders[i];
	return GroupElement(a.group, std::move(r));
}

inline GroupElement neg(const GroupElement& a) {
	std::vector<long> r(a.r.size());
	for (size_t i = 0; i < r.size(); ++i) r[i] = (a.group.orders[i] - a.r[i]) % a.group.orders[i];
	return GroupElement(a.group, std::move(r));
}

inline GroupElement sub(const GroupElement& a, const GroupElement& b) { return add(a, neg(b)); }

inline GroupElement scalar_mul(long k, const GroupElement& a) {
	std::vector<long> r(a.r.size());
	for (size_t i = 0; i < r.size(); ++i) {
		long m = a.group.orders[i];
		long v = (k % m) * (a.r[i] % m) % m;
		r[i] = v < 0 ? v + m : v;
	}
	return GroupElement(a.group, std::move(r));
}

inline long element_order(const GroupElement& a) {
	long o = 1;
	for (size_t i = 0; i < a.r.size(); ++i) {
		long m = a.group.orders[i];
		o = std::lcm(o, m / std::gcd(m, a.r[i]));
	}
	return o;
}

// Canonical index: mixed radix, first coordinate most significant.
inline size_t index_of(const GroupElement& a) {
	size_t idx = 0;
	for (size_t i = 0; i < a.r.size(); ++i) idx = idx * (size_t)a.group.orders[i] + (size_t)a.r[i];
	return idx;
}

inline GroupElement element_at(const AbGroup& g, size_t idx) {
	std::vector<long> r(g.orders.size());
	for (size_t i = g.orders.size(); i-- > 0;) {
		r[i] = (long)(idx % (size_t)g.orders[i]);
		idx /= (size_t)g.orders[i];
	}
	return GroupElement(g, std::move(r));
}

inline std::vector<GroupElement> all_elements(const AbGroup& g) {
	std::vector<GroupElement> v;
	v.reserve((size_t)g.order());
	for (size_t i = 0; i < (size_t)g.order(); ++i) v.push_back(element_at(g, i));
	return v;
}

struct GroupHom {
	AbGroup source, target;
	std::vector<GroupElement> images; // image of each canonical generator of source

	GroupHom() = default;
	GroupHom(AbGroup s, AbGroup t, std::vector<GroupElement> im)
	    : source(std::move(s)), target(std::move(t)), images(std::move(im)) {
		if (images.size() != source.orders.size())
			throw std::invalid_argument("GroupHom: one image per source factor required");
		for (size_t i = 0; i < images.size(); ++i) {
			if (images[i].group != target) throw std::invalid_argument("GroupHom: image not in target");
			if (!scalar_mul(source.orders[i], images[i]).is_zero())
				throw std::invalid_argument("GroupHom: not well defined (image order)");
		}
	}

	GroupElement apply(const GroupElement& x) const {
		if (x.group != source) throw std::invalid_argument("GroupHom::apply: element not in source");
		GroupElement y = zero_element(target);
		for (size_t i = 0; i < images.size(); ++i) y = add(y, scalar_mul(x.r[i], images[i]));
		return y;
	}

	bool is_surjective() const {
		std::vector<bool> hit((size_t)target.order(), false);
		size_t count = 0;
		for (size_t i = 0; i < (size_t)source.order(); ++i) {
			size_t j = index_of(apply(element_at(source, i)));
			if (!hit[j]) {
				hit[j] = true;
				++count;
			}
		}
		return count == (size_t)target.order();
	}
};

struct Subgroup {
	AbGroup parent;
	std::vector<GroupElement> members; // canonical ascending order, closed, contains 0

	Subgroup() = default;
	Subgroup(AbGroup p, std::vector<GroupElement> m) : parent(std::move(p)), members(std::move(m)) {
		for (auto& x : members)
			if (x.group != parent) throw std::invalid_argument("Subgroup: member not in parent");
		std::sort(members.begin(), members.end());
		members.erase(std::unique(members.begin(), members.end()), members.end());
		if (members.empty() || !members.front().is_zero())
			throw std::invalid_argument("Subgroup: must contain the identity");
		for (const auto& x : members)
			for (const auto& y : members) {
				GroupElement s = add(x, y);
				if (!std::binary_search(members.begin(), members.end(), s))
					throw std::invalid_argument("Subgroup: not closed under addition");
			}
	}

	size_t order() const { return members.size(); }

	bool contains(const GroupElement& x) const {
		return std::binary_search(members.begin(), members.end(), x);
	}
};

inline Subgroup subgroup_generated(const AbGroup& g, const std::vector<GroupElement>& gens) {
	std::vector<bool> seen((size_t)g.order(), false);
	std::vector<GroupElement> frontier{zero_element(g)}, out;
	seen[index_of(frontier[0])] = true;
	while (!frontier.empty()) {
		GroupElement x = frontier.back();
		frontier.pop_back();
		out.push_back(x);
		for (const auto& s : gens) {
			GroupElement y = add(x, s);
			if (!seen[index_of(y)]) {
				seen[index_of(y)] = true;
				frontier.push_back(y);
			}
		}
	}
	return Subgroup(g, std::move(out));
}

inline Subgroup trivial_subgroup(const AbGroup& g) { return subgroup_generated(g, {}); }

namespace detail {

// Abstract finite abelian group on indices 0..n-1 used while decomposing quotients.
struct AbsGroup {
	std::vector<std::vector<int>> add; // add[i][j]
	int n() const { return (int)add.size(); }

	int mul(int k, int x) const {
		int acc = 0;
		for (int i = 0; i < k; ++i) acc = add[acc][x];
		return acc;
	}

	int order_of(int x) const {
		int acc = x, o = 1;
		while (acc != 0) {
			acc = add[acc][x];
			++o;
		}
		return o;
	}
};

struct AbsBasis {
	std::vector<int> gens;
	std::vector<long> orders;
};

// Invariant-style basis: pick a maximal-order element, recurse on the quotient,
// then adjust lifted generators so they have the exact quotient order.
inline AbsBasis abs_decompose(const AbsGroup& g) {
	AbsBasis out;
	if (g.n() == 1) return out;
	int t1 = 0, best = 1;
	for (int x = 0; x < g.n(); ++x) {
		int o = g.order_of(x);
		if (o > best) {
			best = o;
			t1 = x;
		}
	}
	long n1 = best;
	// cosets of <t1>
	std::vector<int> coset(g.n(), -1);
	std::vector<int> reps;
	for (int x = 0; x < g.n(); ++x) {
		if (coset[x] != -1) continue;
		int id = (int)reps.size();
		int acc = x;
		for (long k = 0; k < n1; ++k) {
			coset[acc] = id;
			acc = g.add[acc][t1];
		}
		reps.push_back(x);
	}
	// rep 0 must be the identity's coset; reorder so coset of 0 is index 0
	if (coset[0] != 0) {
		std::swap(reps[0], reps[coset[0]]);
		int z = coset[0];
		for (auto& c : coset) c = c == 0 ? z : (c == z ? 0 : c);
	}
	AbsGroup q;
	q.add.assign(reps.size(), std::vector<int>(reps.size(), 0));
	for (size_t i = 0; i < reps.size(); ++i)
		for (size_t j = 0; j < reps.size(); ++j) q.add[i][j] = coset[g.add[reps[i]][reps[j]]];
	AbsBasis sub = abs_decompose(q);
	out.gens.push_back(t1);
	out.orders.push_back(n1);
	for (size_t i = 0; i < sub.gens.size(); ++i) {
		int b = reps[sub.gens[i]];
		long m = sub.orders[i];
		// m*b lies in <t1>: m*b = c*t1 with m | c; replace b by b - (c/m)*t1.
		int mb = g.mul((int)m, b);
		long c = 0;
		int acc = 0;
		while (acc != mb) {
			acc = g.add[acc][t1];
			++c;
		}
		if (c % m != 0) throw std::logic_error("abs_decompose: adjustment failed");
		long shift = (n1 - (c / m) % n1) % n1;
		int adj = g.add[b][g.mul((int)shift, t1)];
		out.gens.push_back(adj);
		out.orders.push_back(m);
	}
	return out;
}

} // namespace detail

struct Quotient {
	AbGroup group;  // the quotient T in cyclic-factor form
	GroupHom pi;    // canonical projection G -> T
};

// Quotient of G by subgroup H via coset enumeration (guard: |G| <= 10^4).
inline Quotient quotient(const AbGroup& g, const Subgroup& h) {
	if (h.parent != g) throw std::invalid_argument("quotient: subgroup of a different group");
	if (g.order() > 10000) throw std::invalid_argument("quotient: group order exceeds 10^4 guard");
	size_t n = (size_t)g.order();
	std::vector<int> coset(n, -1);
	std::vector<GroupElement> reps;
	for (size_t i = 0; i < n; ++i) {
		if (coset[i] != -1) continue;
		GroupElement x = element_at(g, i);
		int id = (int)reps.size();
		for (const auto& t : h.members) coset[index_of(add(x, t))] = id;
		reps.push_back(x);
	}
	size_t m = reps.size();
	detail::AbsGroup q;
	q.add.assign(m, std::vector<int>(m, 0));
	for (size_t i = 0; i < m; ++i)
		for (size_t j = 0; j < m; ++j) q.add[i][j] = coset[index_of(add(reps[i], reps[j]))];
	if (coset[index_of(zero_element(g))] != 0) throw std::logic_error("quotient: identity coset not 0");

	detail::AbsBasis basis = detail::abs_decompose(q);
	AbGroup t{basis.orders};
	// Map every coset to its T-coordinates by enumerating T.
	std::vector<int> coords_of((size_t)t.order() ? m : m, -1);
	std::vector<size_t> t_index_of_coset(m, SIZE_MAX);
	for (size_t ti = 0; ti < (size_t)t.order(); ++ti) {
		GroupElement te = element_at(t, ti);
		int acc = 0;
		for (size_t f = 0; f < basis.gens.size(); ++f) acc = q.add[acc][q.mul((int)te.r[f], basis.gens[f])];
		if (t_index_of_coset[(size_t)acc] != SIZE_MAX)
			throw std::logic_error("quotient: decomposition not bijective");
		t_index_of_coset[(size_t)acc] = ti;
	}
	for (size_t c = 0; c < m; ++c)
		if (t_index_of_coset[c] == SIZE_MAX) throw std::logic_error("quotient: decomposition not onto");

	std::vector<GroupElement> images;
	for (size_t i = 0; i < g.orders.size(); ++i) {
		std::vector<long> r(g.orders.size(), 0);
		r[i] = 1;
		GroupElement gen(g, std::move(r));
		images.push_back(element_at(t, t_index_of_coset[(size_t)coset[index_of(gen)]]));
	}
	Quotient result{t, GroupHom(g, t, images)};
	// sanity: pi must kill exactly H
	for (size_t i = 0; i < n; ++i) {
		GroupElement x = element_at(g, i);
		bool killed = result.pi.apply(x).is_zero();
		if (killed != h.contains(x)) throw std::logic_error("quotient: kernel mismatch");
	}
	return result;
}

// All source elements mapping to y, in canonical order.
inline std::vector<GroupElement> preimage(const GroupHom& f, const GroupElement& y) {
	if (y.group != f.target) throw std::invalid_argument("preimage: element not in target");
	std::vector<GroupElement> out;
	for (size_t i = 0; i < (size_t)f.source.order(); ++i) {
		GroupElement x = element_at(f.source, i);
		if (f.apply(x) == y) out.push_back(x);
	}
	return out;
}

inline Subgroup kernel(const GroupHom& f) {
	return Subgroup(f.source, preimage(f, zero_element(f.target)));
}

} // namespace regalg
