#pragma once

// Graded-algebra kernel: finite-dimensional algebras presented by a
// homogeneous basis, a degree map into a finite abelian group, and exact
// structure constants, plus the standard constructions (elementary matrix
// gradings, Pauli clock/shift gradings, twisted group algebras, tensor
// products, Grassmann algebras and M_{1,1}(E)).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "abgroup.hpp"
#include "cpoly.hpp"
#include "linalg.hpp"
#include "scalar.hpp"

namespace regalg {

using SparseVec = std::vector<std::pair<size_t, CycScalar>>; // sorted by index, no zeros

inline SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
	SparseVec r;
	size_t i = 0, j = 0;
	while (i < a.size() || j < b.size()) {
		if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
			r.push_back(a[i++]);
		else if (i == a.size() || b[j].first < a[i].first)
			r.push_back(b[j++]);
		else {
			CycScalar s = a[i].second + b[j].second;
			if (!is_zero(s)) r.emplace_back(a[i].first, s);
			++i, ++j;
		}
	}
	return r;
}

inline SparseVec sparse_scale(const CycScalar& c, const SparseVec& a) {
	SparseVec r;
	if (is_zero(c)) return r;
	for (auto& [k, v] : a) {
		CycScalar s = c * v;
		if (!is_zero(s)) r.emplace_back(k, s);
	}
	return r;
}

class GradedAlgebra {
public:
	struct Data {
		std::string name;
		AbGroup group;
		std::vector<std::string> labels;
		std::vector<GroupElement> degree;
		std::vector<SparseVec> sc; // sc[i*dim+j] = coordinates of b_i * b_j
		SparseVec unit;            // coordinates of 1 (empty if no unit)
		bool has_unit = false;
	};

	GradedAlgebra() = default;
	explicit GradedAlgebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

	bool valid() const { return (bool)d_; }
	const std::string& name() const { return d_->name; }
	const AbGroup& group() const { return d_->group; }
	size_t dim() const { return d_->labels.size(); }
	const std::string& label(size_t i) const { return d_->labels[i]; }
	const GroupElement& degree(size_t i) const { return d_->degree[i]; }
	const SparseVec& sc(size_t i, size_t j) const { return d_->sc[i * dim() + j]; }
	bool has_unit() const { return d_->has_unit; }
	const SparseVec& unit_coords() const { return d_->unit; }
	const Data& data() const { return *d_; }

	bool same_as(const GradedAlgebra& o) const { return d_ == o.d_; }

	std::vector<size_t> component(const GroupElement& g) const {
		std::vector<size_t> out;
		for (size_t i = 0; i < dim(); ++i)
			if (d_->degree[i] == g) out.push_back(i);
		return out;
	}

	std::vector<GroupElement> support() const {
		std::set<GroupElement> s(d_->degree.begin(), d_->degree.end());
		return std::vector<GroupElement>(s.begin(), s.end());
	}

private:
	std::shared_ptr<const Data> d_;
};

struct AlgElement {
	GradedAlgebra alg;
	std::map<size_t, CycScalar> c;

	AlgElement() = default;
	explicit AlgElement(GradedAlgebra a) : alg(std::move(a)) {}

	bool is_zero() const { return c.empty(); }

	void set(size_t i, const CycScalar& v) {
		if (regalg::is_zero(v))
			c.erase(i);
		else
			c[i] = v;
	}

	CycScalar coeff(size_t i) const {
		auto it = c.find(i);
		return it == c.end() ? CycScalar(0L) : it->second;
	}

	bool operator==(const AlgElement& o) const { return c == o.c; }
	bool operator!=(const AlgElement& o) const { return !(*this == o); }

	// Homogeneous of a single degree (zero counts as homogeneous of any degree).
	bool is_homogeneous_of(const GroupElement& g) const {
		for (auto& [i, v] : c)
			if (!(alg.degree(i) == g)) return false;
		return true;
	}

	std::optional<GroupElement> homogeneous_degree() const {
		std::optional<GroupElement> g;
		for (auto& [i, v] : c) {
			if (!g)
				g = alg.degree(i);
			else if (!(*g == alg.degree(i)))
				return std::nullopt;
		}
		return g;
	}

	std::string to_string() const {
		if (c.empty()) return "0";
		std::ostringstream os;
		bool first = true;
		for (auto& [i, v] : c) {
			std::string cs = v.to_string();
			bool neg = !cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos;
			if (first)
				os << (neg ? "-" : "");
			else
				os << (neg ? " - " : " + ");
			if (neg) cs = cs.substr(1);
			if (cs == "1")
				os << alg.label(i);
			else if (cs.find(' ') != std::string::npos)
				os << "(" << cs << ")*" << alg.label(i);
			else
				os << cs << "*" << alg.label(i);
			first = false;
		}
		return os.str();
	}
};

inline AlgElement basis_element(const GradedAlgebra& a, size_t i) {
	AlgElement x(a);
	x.set(i, cyc_one());
	return x;
}

inline AlgElement zero_of(const GradedAlgebra& a) { return AlgElement(a); }

inline AlgElement unit_of(const GradedAlgebra& a) {
	if (!a.has_unit()) throw std::logic_error("unit_of: algebra has no unit");
	AlgElement x(a);
	for (auto& [k, v] : a.unit_coords()) x.set(k, v);
	return x;
}

inline AlgElement from_sparse(const GradedAlgebra& a, const SparseVec& s) {
	AlgElement x(a);
	for (auto& [k, v] : s) x.set(k, v);
	return x;
}

inline void check_same_algebra(const AlgElement& a, const AlgElement& b, const char* op) {
	if (!a.alg.same_as(b.alg)) throw std::invalid_argument(std::string(op) + ": elements of different algebras");
}

inline AlgElement operator+(const AlgElement& a, const AlgElement& b) {
	check_same_algebra(a, b, "add");
	AlgElement r = a;
	for (auto& [i, v] : b.c) r.set(i, r.coeff(i) + v);
	return r;
}

inline AlgElement operator-(const AlgElement& a, const AlgElement& b) {
	check_same_algebra(a, b, "sub");
	AlgElement r = a;
	for (auto& [i, v] : b.c) r.set(i, r.coeff(i) - v);
	return r;
}

inline AlgElement operator*(const CycScalar& s, const AlgElement& a) {
	AlgElement r(a.alg);
	for (auto& [i, v] : a.c) r.set(i, s * v);
	return r;
}

inline AlgElement operator*(const AlgElement& a, const AlgElement& b) {
	check_same_algebra(a, b, "mul");
	AlgElement r(a.alg);
	for (auto& [i, vi] : a.c)
		for (auto& [j, vj] : b.c) {
			CycScalar f = vi * vj;
			for (auto& [k, s] : a.alg.sc(i, j)) r.set(k, r.coeff(k) + f * s);
		}
	return r;
}

inline AlgElement commutator(const AlgElement& a, const AlgElement& b) { return a * b - b * a; }

inline bool center_membership(const AlgElement& a) {
	for (size_t j = 0; j < a.alg.dim(); ++j)
		if (!commutator(a, basis_element(a.alg, j)).is_zero()) return false;
	return true;
}

// Basis of the full center (small algebras only: builds dim^2 x dim system).
inline std::vector<AlgElement> center_basis(const GradedAlgebra& a) {
	size_t n = a.dim();
	RowEchelon<CycScalar> ech(n);
	for (size_t j = 0; j < n; ++j) {
		// constraint rows of [x, b_j] = 0, one per output coordinate
		std::vector<std::vector<CycScalar>> rows(n, std::vector<CycScalar>(n, CycScalar(0L)));
		for (size_t i = 0; i < n; ++i) {
			for (auto& [k, s] : a.sc(i, j)) rows[k][i] = rows[k][i] + s;
			for (auto& [k, s] : a.sc(j, i)) rows[k][i] = rows[k][i] - s;
		}
		for (auto& row : rows) ech.add_row(row);
	}
	std::vector<AlgElement> out;
	for (auto& v : ech.nullspace_basis()) {
		AlgElement x(a);
		for (size_t i = 0; i < n; ++i) x.set(i, v[i]);
		out.push_back(std::move(x));
	}
	return out;
}

// Two-sided inverse via the left-multiplication matrix; verified both ways.
inline std::optional<AlgElement> try_inverse(const AlgElement& a) {
	if (!a.alg.has_unit()) return std::nullopt;
	size_t n = a.alg.dim();
	Mat<CycScalar> L(n, n);
	for (size_t j = 0; j < n; ++j) {
		AlgElement col = a * basis_element(a.alg, j);
		for (auto& [k, v] : col.c) L.at(k, j) = v;
	}
	std::vector<CycScalar> rhs(n, CycScalar(0L));
	for (auto& [k, v] : a.alg.unit_coords()) rhs[k] = v;
	auto x = solve_linear(L, rhs);
	if (!x) return std::nullopt;
	AlgElement inv(a.alg);
	for (size_t i = 0; i < n; ++i) inv.set(i, (*x)[i]);
	if (!(a * inv == unit_of(a.alg)) || !(inv * a == unit_of(a.alg))) return std::nullopt;
	return inv;
}

// Elements with polynomial coordinates, for generic (indeterminate) evaluation.
struct GenElement {
	GradedAlgebra alg;
	std::map<size_t, CommPoly> c;

	GenElement() = default;
	explicit GenElement(GradedAlgebra a) : alg(std::move(a)) {}

	bool is_zero() const { return c.empty(); }

	void set(size_t i, const CommPoly& v) {
		if (v.is_zero())
			c.erase(i);
		else
			c[i] = v;
	}

	CommPoly coeff(size_t i) const {
		auto it = c.find(i);
		return it == c.end() ? CommPoly() : it->second;
	}
};

inline GenElement gen_from(const AlgElement& a) {
	GenElement r(a.alg);
	for (auto& [i, v] : a.c) r.set(i, CommPoly(v));
	return r;
}

inline GenElement operator+(const GenElement& a, const GenElement& b) {
	GenElement r = a;
	for (auto& [i, v] : b.c) r.set(i, r.coeff(i) + v);
	return r;
}

inline GenElement operator-(const GenElement& a, const GenElement& b) {
	GenElement r = a;
	for (auto& [i, v] : b.c) r.set(i, r.coeff(i) - v);
	return r;
}

inline GenElement operator*(const CommPoly& s, const GenElement& a) {
	GenElement r(a.alg);
	for (auto& [i, v] : a.c) r.set(i, s * v);
	return r;
}

inline GenElement operator*(const GenElement& a, const GenElement& b) {
	GenElement r(a.alg);
	for (auto& [i, vi] : a.c)
		for (auto& [j, vj] : b.c) {
			CommPoly f = vi * vj;
			for (auto& [k, s] : a.alg.sc(i, j)) r.set(k, r.coeff(k) + CommPoly(s) * f);
		}
	return r;
}

inline GenElement commutator(const GenElement& a, const GenElement& b) { return a * b - b * a; }

// Evaluate polynomial coordinates at a rational point, landing back in the algebra.
inline AlgElement specialize(const GenElement& a, const std::map<int, CycScalar>& point) {
	AlgElement r(a.alg);
	for (auto& [i, p] : a.c) r.set(i, p.evaluate(point));
	return r;
}

namespace detail {

inline uint64_t mix64(uint64_t x) {
	x += 0x9e3779b97f4a7c15ULL;
	x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
	x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
	return x ^ (x >> 31);
}

} // namespace detail

// Construction-time validation: grading compatibility always exhaustive;
// associativity exhaustive for dim <= 64, else 10^4 deterministic samples;
// unit laws when a unit is declared.
inline GradedAlgebra make_graded_algebra(GradedAlgebra::Data data, bool verify = true) {
	size_t n = data.labels.size();
	if (data.degree.size() != n || data.sc.size() != n * n)
		throw std::invalid_argument("make_graded_algebra: inconsistent sizes");
	for (auto& g : data.degree)
		if (g.group != data.group) throw std::invalid_argument("make_graded_algebra: degree outside group");
	GradedAlgebra a(std::make_shared<const GradedAlgebra::Data>(std::move(data)));
	if (!verify) return a;
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j) {
			GroupElement want = add(a.degree(i), a.degree(j));
			for (auto& [k, s] : a.sc(i, j)) {
				if (is_zero(s)) throw std::logic_error("make_graded_algebra: stored zero structure constant");
				if (!(a.degree(k) == want))
					throw std::logic_error("make_graded_algebra: grading incompatibility at " + a.label(i) + "*" + a.label(j));
			}
		}
	auto check_assoc = [&](size_t i, size_t j, size_t k) {
		// raw structure-constant convolution; avoids AlgElement allocation
		std::vector<std::pair<size_t, CycScalar>> lhs, rhs;
		auto acc = [](std::vector<std::pair<size_t, CycScalar>>& v, size_t idx, const CycScalar& s) {
			for (auto& [x, c] : v)
				if (x == idx) {
					c = c + s;
					return;
				}
			v.emplace_back(idx, s);
		};
		for (auto& [m, s1] : a.sc(i, j))
			for (auto& [l, s2] : a.sc(m, k)) acc(lhs, l, s1 * s2);
		for (auto& [m, s1] : a.sc(j, k))
			for (auto& [l, s2] : a.sc(i, m)) acc(rhs, l, s1 * s2);
		auto norm = [](std::vector<std::pair<size_t, CycScalar>>& v) {
			v.erase(std::remove_if(v.begin(), v.end(), [](auto& p) { return p.second.is_zero(); }), v.end());
			std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.first < y.first; });
		};
		norm(lhs);
		norm(rhs);
		bool same = lhs.size() == rhs.size();
		for (size_t t = 0; same && t < lhs.size(); ++t)
			same = lhs[t].first == rhs[t].first && lhs[t].second == rhs[t].second;
		if (!same)
			throw std::logic_error("make_graded_algebra: associativity fails at (" + a.label(i) + "," + a.label(j) + "," + a.label(k) + ")");
	};
	if (n <= 64) {
		for (size_t i = 0; i < n; ++i)
			for (size_t j = 0; j < n; ++j)
				for (size_t k = 0; k < n; ++k) check_assoc(i, j, k);
	} else {
		for (uint64_t t = 0; t < 10000; ++t) {
			uint64_t h = detail::mix64(t);
			check_assoc((size_t)(h % n), (size_t)((h >> 20) % n), (size_t)((h >> 40) % n));
		}
	}
	if (a.has_unit()) {
		AlgElement one = unit_of(a);
		for (size_t i = 0; i < n; ++i) {
			AlgElement b = basis_element(a, i);
			if (!(one * b == b) || !(b * one == b))
				throw std::logic_error("make_graded_algebra: unit law fails at " + a.label(i));
		}
	}
	return a;
}

// M_n with deg e_{i,j} = g_j - g_i for a chosen n-tuple of group elements.
inline GradedAlgebra elementary_grading(size_t n, const AbGroup& g, const std::vector<GroupElement>& tuple) {
	if (n < 1 || tuple.size() != n) throw std::invalid_argument("elementary_grading: need an n-tuple");
	GradedAlgebra::Data d;
	d.name = "M" + std::to_string(n) + " elementary over " + g.to_string();
	d.group = g;
	auto idx = [n](size_t i, size_t j) { return i * n + j; };
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j) {
			d.labels.push_back("e" + (n <= 9 ? std::to_string(i + 1) + std::to_string(j + 1)
			                                 : "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"));
			d.degree.push_back(sub(tuple[j], tuple[i]));
		}
	size_t dim = n * n;
	d.sc.assign(dim * dim, {});
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j)
			for (size_t k = 0; k < n; ++k)
				for (size_t l = 0; l < n; ++l)
					if (j == k) d.sc[idx(i, j) * dim + idx(k, l)] = {{idx(i, l), cyc_one()}};
	for (size_t i = 0; i < n; ++i) d.unit.emplace_back(idx(i, i), cyc_one());
	d.has_unit = true;
	return make_graded_algebra(std::move(d));
}

// Fine Z_n x Z_n grading of M_n by clock/shift monomials C^a S^b:
// C = diag(1, z, ..., z^{n-1}) with z = zeta_n, S the cyclic shift with
// S e_j = e_{j+1} (indices mod n), so that C S = z S C and
// (C^a S^b)(C^c S^d) = z^{-bc} C^{a+c} S^{b+d}.
inline GradedAlgebra pauli_grading(long n) {
	if (n < 2) throw std::invalid_argument("pauli_grading: need n >= 2");
	AbGroup g{{n, n}};
	GradedAlgebra::Data d;
	d.name = "M" + std::to_string(n) + " Pauli";
	d.group = g;
	size_t dim = (size_t)(n * n);
	auto idx = [n](long a, long b) { return (size_t)(a * n + b); };
	for (long a = 0; a < n; ++a)
		for (long b = 0; b < n; ++b) {
			std::string lab;
			if (a == 0 && b == 0)
				lab = "I";
			else {
				if (a > 0) lab += "C" + (a > 1 ? std::to_string(a) : "");
				if (b > 0) lab += "S" + (b > 1 ? std::to_string(b) : "");
			}
			d.labels.push_back(lab);
			d.degree.push_back(GroupElement(g, {a, b}));
		}
	d.sc.assign(dim * dim, {});
	for (long a = 0; a < n; ++a)
		for (long b = 0; b < n; ++b)
			for (long c = 0; c < n; ++c)
				for (long e = 0; e < n; ++e)
					d.sc[idx(a, b) * dim + idx(c, e)] = {
					    {idx((a + c) % n, (b + e) % n), CycScalar::zeta_pow(n, -b * c)}};
	d.unit = {{idx(0, 0), cyc_one()}};
	d.has_unit = true;
	return make_graded_algebra(std::move(d));
}

// K^alpha Q: basis X_q, X_q X_{q'} = alpha(q,q') X_{q+q'}; alpha checked to be
// a 2-cocycle with nonzero values. Works for non-normalized cocycles: the unit
// is alpha(0,0)^{-1} X_0 (the cocycle identities force alpha(q,0) = alpha(0,q') = alpha(0,0)).
inline GradedAlgebra twisted_group_algebra(const AbGroup& q, const Mat<CycScalar>& alpha) {
	size_t m = (size_t)q.order();
	if (alpha.rows != m || alpha.cols != m)
		throw std::invalid_argument("twisted_group_algebra: cocycle table must be |Q| x |Q|");
	for (size_t i = 0; i < m; ++i)
		for (size_t j = 0; j < m; ++j)
			if (is_zero(alpha.at(i, j))) throw std::invalid_argument("twisted_group_algebra: cocycle value 0");
	for (size_t i = 0; i < m; ++i)
		for (size_t j = 0; j < m; ++j)
			for (size_t k = 0; k < m; ++k) {
				GroupElement a = element_at(q, i), b = element_at(q, j), c = element_at(q, k);
				CycScalar lhs = alpha.at(i, j) * alpha.at(index_of(add(a, b)), k);
				CycScalar rhs = alpha.at(j, k) * alpha.at(i, index_of(add(b, c)));
				if (lhs != rhs)
					throw std::invalid_argument("twisted_group_algebra: cocycle condition fails at (" +
					                            a.to_string() + "," + b.to_string() + "," + c.to_string() + ")");
			}
	GradedAlgebra::Data d;
	d.name = "twisted group algebra over " + q.to_string();
	d.group = q;
	for (size_t i = 0; i < m; ++i) {
		d.labels.push_back("X" + element_at(q, i).to_string());
		d.degree.push_back(element_at(q, i));
	}
	d.sc.assign(m * m, {});
	for (size_t i = 0; i < m; ++i)
		for (size_t j = 0; j < m; ++j)
			d.sc[i * m + j] = {{index_of(add(element_at(q, i), element_at(q, j))), alpha.at(i, j)}};
	d.unit = {{index_of(zero_element(q)), alpha.at(0, 0).inverse()}};
	d.has_unit = true;
	return make_graded_algebra(std::move(d));
}

// alpha((a,b),(c,d)) = (-1)^{bc} on Z2 x Z2: the bilinear 2-cocycle whose
// twisted group algebra is M2(K) with anticommuting X_{(0,1)}, X_{(1,0)}.
inline Mat<CycScalar> z2z2_standard_cocycle() {
	AbGroup q{{2, 2}};
	size_t n = (size_t)q.order();
	Mat<CycScalar> alpha(n, n);
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j) {
			GroupElement x = element_at(q, i), y = element_at(q, j);
			alpha.at(i, j) = CycScalar((x.r[1] * y.r[0]) % 2 ? -1L : 1L);
		}
	return alpha;
}

using DegMap = std::function<GroupElement(const GroupElement&, const GroupElement&)>;

inline DegMap tensor_sum_degrees() {
	return [](const GroupElement& a, const GroupElement& b) { return add(a, b); };
}

// deg(X_h (x) e_{i,j}) = h - (g_j - g_i): the crossed-product tensor rule.
inline DegMap tensor_sub_degrees() {
	return [](const GroupElement& a, const GroupElement& b) { return sub(a, b); };
}

// Tensor product graded by an arbitrary target group; degmap sends the pair of
// factor degrees to the degree of the product basis element.
inline GradedAlgebra tensor_graded_over(const GradedAlgebra& a, const GradedAlgebra& b, const AbGroup& target,
                                        const DegMap& degmap) {
	GradedAlgebra::Data d;
	d.name = a.name() + " (x) " + b.name();
	d.group = target;
	size_t na = a.dim(), nb = b.dim(), dim = na * nb;
	auto idx = [nb](size_t i, size_t j) { return i * nb + j; };
	for (size_t i = 0; i < na; ++i)
		for (size_t j = 0; j < nb; ++j) {
			d.labels.push_back(a.label(i) + "." + b.label(j));
			d.degree.push_back(degmap(a.degree(i), b.degree(j)));
		}
	d.sc.assign(dim * dim, {});
	for (size_t i = 0; i < na; ++i)
		for (size_t j = 0; j < nb; ++j)
			for (size_t k = 0; k < na; ++k)
				for (size_t l = 0; l < nb; ++l) {
					SparseVec out;
					for (auto& [p, s] : a.sc(i, k))
						for (auto& [r, t] : b.sc(j, l)) out.emplace_back(idx(p, r), s * t);
					std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.first < y.first; });
					d.sc[idx(i, j) * dim + idx(k, l)] = std::move(out);
				}
	if (a.has_unit() && b.has_unit()) {
		for (auto& [p, s] : a.unit_coords())
			for (auto& [r, t] : b.unit_coords()) d.unit.emplace_back(idx(p, r), s * t);
		std::sort(d.unit.begin(), d.unit.end(), [](auto& x, auto& y) { return x.first < y.first; });
		d.has_unit = true;
	}
	return make_graded_algebra(std::move(d));
}

inline GradedAlgebra tensor_graded(const GradedAlgebra& a, const GradedAlgebra& b, DegMap degmap = {}) {
	if (a.group() != b.group())
		throw std::invalid_argument("tensor_graded: factors must be graded by the same group");
	if (!degmap) degmap = tensor_sum_degrees();
	return tensor_graded_over(a, b, a.group(), degmap);
}

// Componentwise grading over the direct product of the factors' groups:
// deg(x (x) y) = (deg x, deg y).
inline GradedAlgebra tensor_componentwise(const GradedAlgebra& a, const GradedAlgebra& b) {
	std::vector<long> orders = a.group().orders;
	orders.insert(orders.end(), b.group().orders.begin(), b.group().orders.end());
	AbGroup prod{orders};
	DegMap pair = [prod](const GroupElement& x, const GroupElement& y) {
		std::vector<long> r = x.r;
		r.insert(r.end(), y.r.begin(), y.r.end());
		return GroupElement{prod, r};
	};
	return tensor_graded_over(a, b, prod, pair);
}

// 1-dimensional algebra K graded by G in degree 0 (tensor unit).
inline GradedAlgebra scalar_algebra(const AbGroup& g, const std::string& name = "K") {
	GradedAlgebra::Data d;
	d.name = name;
	d.group = g;
	d.labels = {"1"};
	d.degree = {zero_element(g)};
	d.sc = {{{0, cyc_one()}}};
	d.unit = {{0, cyc_one()}};
	d.has_unit = true;
	return make_graded_algebra(std::move(d));
}

// Group algebra KG graded by G (trivial cocycle).
inline GradedAlgebra group_algebra(const AbGroup& g) {
	size_t m = (size_t)g.order();
	Mat<CycScalar> alpha(m, m);
	for (size_t i = 0; i < m; ++i)
		for (size_t j = 0; j < m; ++j) alpha.at(i, j) = cyc_one();
	return twisted_group_algebra(g, alpha);
}

namespace detail {

// Sign from moving the generators of mask b past those of mask a into sorted
// position: (-1)^{# pairs (i in a, j in b) with j < i}.
inline int interleave_sign(uint32_t a, uint32_t b) {
	int inversions = 0;
	for (uint32_t t = a; t; t &= t - 1) {
		uint32_t bit = t & ~(t - 1);
		inversions += __builtin_popcount(b & (bit - 1));
	}
	return inversions % 2 ? -1 : 1;
}

} // namespace detail

inline std::string grassmann_label(uint32_t mask) {
	if (mask == 0) return "1";
	std::string s;
	for (int i = 0; i < 32; ++i)
		if (mask & (1u << i)) s += "e" + std::to_string(i + 1);
	return s;
}

// Exterior algebra E_k on anticommuting generators e_1..e_k, Z_2-graded by
// monomial length parity; basis indexed by subsets of {1..k} as bitmasks.
inline GradedAlgebra grassmann(int k) {
	if (k < 0 || k > 10) throw std::invalid_argument("grassmann: need 0 <= k <= 10 (table is 4^k entries)");
	AbGroup z2{{2}};
	GradedAlgebra::Data d;
	d.name = "E" + std::to_string(k);
	d.group = z2;
	size_t dim = (size_t)1 << k;
	for (uint32_t m = 0; m < dim; ++m) {
		d.labels.push_back(grassmann_label(m));
		d.degree.push_back(GroupElement(z2, {__builtin_popcount(m) % 2}));
	}
	d.sc.assign(dim * dim, {});
	for (uint32_t a = 0; a < dim; ++a)
		for (uint32_t b = 0; b < dim; ++b) {
			if (a & b) continue;
			int s = detail::interleave_sign(a, b);
			d.sc[a * dim + b] = {{(size_t)(a | b), CycScalar((long)s)}};
		}
	d.unit = {{0, cyc_one()}};
	d.has_unit = true;
	return make_graded_algebra(std::move(d));
}

// M_{1,1}(E_k) = E_0 I + E_0 Ya + E_1 Yb + E_1 YaYb, graded by Z_2 x Z_2 with
// component degrees (0,0), (0,1), (1,0), (1,1). Products multiply the
// Grassmann parts and the 2x2 matrices independently (matrix entries are
// scalars, so no extra sign appears).
inline GradedAlgebra m11_grassmann(int k) {
	if (k < 2 || k % 2 || k > 8) throw std::invalid_argument("m11_grassmann: need even k with 2 <= k <= 8");
	// W-matrices: I, Ya = diag(-1,1), Yb = [[0,-1],[1,0]], YaYb = [[0,1],[1,0]]
	static const int W[4][2][2] = {{{1, 0}, {0, 1}}, {{-1, 0}, {0, 1}}, {{0, -1}, {1, 0}}, {{0, 1}, {1, 0}}};
	static const char* wlab[4] = {"I", "Ya", "Yb", "YaYb"};
	auto wmul = [&](int x, int y, int& sign) -> int {
		int p[2][2];
		for (int i = 0; i < 2; ++i)
			for (int j = 0; j < 2; ++j) p[i][j] = W[x][i][0] * W[y][0][j] + W[x][i][1] * W[y][1][j];
		for (int w = 0; w < 4; ++w)
			for (int s = 1; s >= -1; s -= 2) {
				bool ok = true;
				for (int i = 0; i < 2; ++i)
					for (int j = 0; j < 2; ++j)
						if (p[i][j] != s * W[w][i][j]) ok = false;
				if (ok) {
					sign = s;
					return w;
				}
			}
		throw std::logic_error("m11_grassmann: W table not closed");
	};
	AbGroup g{{2, 2}};
	static const std::vector<std::vector<long>> wdeg = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
	GradedAlgebra::Data d;
	d.name = "M11(E" + std::to_string(k) + ")";
	d.group = g;
	size_t nmono = (size_t)1 << k;
	std::vector<std::pair<uint32_t, int>> basis; // (grassmann mask, w)
	for (uint32_t m = 0; m < nmono; ++m) {
		int parity = __builtin_popcount(m) % 2;
		for (int w = parity ? 2 : 0; w < (parity ? 4 : 2); ++w) basis.emplace_back(m, w);
	}
	size_t dim = basis.size();
	std::map<std::pair<uint32_t, int>, size_t> pos;
	for (size_t i = 0; i < dim; ++i) pos[basis[i]] = i;
	for (auto& [m, w] : basis) {
		d.labels.push_back((m ? grassmann_label(m) + "." : std::string()) + wlab[w]);
		d.degree.push_back(GroupElement(g, wdeg[(size_t)w]));
	}
	d.sc.assign(dim * dim, {});
	for (size_t i = 0; i < dim; ++i)
		for (size_t j = 0; j < dim; ++j) {
			auto [ma, wa] = basis[i];
			auto [mb, wb] = basis[j];
			if (ma & mb) continue;
			int msign = detail::interleave_sign(ma, mb);
			int wsign = 1;
			int wc = wmul(wa, wb, wsign);
			d.sc[i * dim + j] = {{pos.at({ma | mb, wc}), CycScalar((long)(msign * wsign))}};
		}
	d.unit = {{pos.at({0u, 0}), cyc_one()}};
	d.has_unit = true;
	return make_graded_algebra(std::move(d));
}

struct SubalgebraClosure {
	GradedAlgebra sub;
	std::vector<AlgElement> embed; // basis element i of sub, as an element of the parent
};

// Smallest subalgebra of the parent containing the given homogeneous elements
// (optionally with the parent's unit adjoined), materialized with its own
// structure constants. Every closure step and every structure constant is an
// exact linear solve against the chosen basis, so the embedding is a graded
// algebra morphism by construction; make_graded_algebra re-verifies the axioms.
inline SubalgebraClosure subalgebra_closure(const GradedAlgebra& a, const std::vector<AlgElement>& gens,
                                            bool adjoin_unit, const std::string& name = "subalgebra") {
	size_t n = a.dim();
	RowEchelon<CycScalar> span(n);
	std::vector<AlgElement> basis;
	std::vector<std::string> labels;
	auto coords = [n](const AlgElement& x) {
		std::vector<CycScalar> v(n, CycScalar(0L));
		for (auto& [i, c] : x.c) v[i] = c;
		return v;
	};
	auto push = [&](const AlgElement& x, const std::string& lab) {
		if (x.is_zero()) return false;
		if (!span.add_row(coords(x))) return false;
		basis.push_back(x);
		labels.push_back(lab);
		return true;
	};
	if (adjoin_unit) push(unit_of(a), "1");
	for (size_t i = 0; i < gens.size(); ++i) {
		if (!gens[i].alg.same_as(a)) throw std::invalid_argument("subalgebra_closure: generator from another algebra");
		if (!gens[i].homogeneous_degree() && !gens[i].is_zero())
			throw std::invalid_argument("subalgebra_closure: generators must be homogeneous");
		push(gens[i], "g" + std::to_string(i + 1));
	}
	// fixpoint: rescan all pairs until no product escapes the span
	for (bool grew = true; grew;) {
		grew = false;
		size_t end = basis.size();
		for (size_t i = 0; i < end; ++i)
			for (size_t j = 0; j < end; ++j)
				if (push(basis[i] * basis[j], "(" + labels[i] + labels[j] + ")")) grew = true;
	}
	size_t nb = basis.size();
	if (nb == 0) throw std::invalid_argument("subalgebra_closure: zero algebra (all generators zero)");
	Mat<CycScalar> m(n, nb);
	for (size_t j = 0; j < nb; ++j) {
		auto v = coords(basis[j]);
		for (size_t i = 0; i < n; ++i) m.at(i, j) = v[i];
	}
	auto solve = [&](const AlgElement& x) {
		auto s = solve_linear(m, coords(x));
		if (!s) throw std::logic_error("subalgebra_closure: span not closed under products");
		return *s;
	};
	GradedAlgebra::Data d;
	d.name = name;
	d.group = a.group();
	for (size_t i = 0; i < nb; ++i) {
		d.labels.push_back(labels[i]);
		d.degree.push_back(*basis[i].homogeneous_degree());
	}
	d.sc.assign(nb * nb, {});
	for (size_t i = 0; i < nb; ++i)
		for (size_t j = 0; j < nb; ++j) {
			SparseVec out;
			auto s = solve(basis[i] * basis[j]);
			for (size_t k = 0; k < nb; ++k)
				if (!is_zero(s[k])) out.emplace_back(k, s[k]);
			d.sc[i * nb + j] = std::move(out);
		}
	if (a.has_unit() && span.contains(coords(unit_of(a)))) {
		auto s = solve(unit_of(a));
		for (size_t k = 0; k < nb; ++k)
			if (!is_zero(s[k])) d.unit.emplace_back(k, s[k]);
		d.has_unit = true;
	}
	return {make_graded_algebra(std::move(d)), std::move(basis)};
}

} // namespace regalg
