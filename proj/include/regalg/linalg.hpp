#pragma once

// Exact dense linear algebra over a field (CycScalar or Rational).
// Determinants use fraction-free Bareiss elimination with row pivoting;
// rank/kernel/inverse questions use exact Gauss-Jordan.

#include "regalg/scalar.hpp"

#include <optional>
#include <vector>

namespace regalg {

inline bool is_zero(const Rational& q) { return q == 0; }

template <class T>
struct Mat {
	size_t rows = 0, cols = 0;
	std::vector<T> a;

	Mat() = default;
	Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c, T()) {}

	T& at(size_t i, size_t j) { return a[i * cols + j]; }
	const T& at(size_t i, size_t j) const { return a[i * cols + j]; }

	static Mat identity(size_t n) {
		Mat m(n, n);
		for (size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
		return m;
	}
};

template <class T>
Mat<T> mat_mul(const Mat<T>& x, const Mat<T>& y) {
	if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
	Mat<T> r(x.rows, y.cols);
	for (size_t i = 0; i < x.rows; ++i)
		for (size_t k = 0; k < x.cols; ++k) {
			if (is_zero(x.at(i, k))) continue;
			for (size_t j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
		}
	return r;
}

// Fraction-free (Bareiss) determinant; every division is exact.
template <class T>
T det_exact(Mat<T> m) {
	if (m.rows != m.cols) throw std::invalid_argument("det_exact: matrix not square");
	size_t n = m.rows;
	if (n == 0) return T(1);
	int sign = 1;
	T prev(1);
	for (size_t k = 0; k + 1 < n; ++k) {
		size_t p = k;
		while (p < n && is_zero(m.at(p, k))) ++p;
		if (p == n) return T(0);
		if (p != k) {
			for (size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(k, j));
			sign = -sign;
		}
		for (size_t i = k + 1; i < n; ++i) {
			for (size_t j = k + 1; j < n; ++j)
				m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
			m.at(i, k) = T(0);
		}
		prev = m.at(k, k);
	}
	T d = m.at(n - 1, n - 1);
	return sign < 0 ? T(0) - d : d;
}

/// Incremental reduced row echelon form; rows are fully reduced on insert.
template <class T>
class RowEchelon {
  public:
	explicit RowEchelon(size_t cols) : cols_(cols) {}

	// Returns true when the row was independent (rank grew).
	bool add_row(std::vector<T> row) {
		if (row.size() != cols_) throw std::invalid_argument("RowEchelon: bad row width");
		for (size_t r = 0; r < rows_.size(); ++r) {
			const T& c = row[pivot_[r]];
			if (!is_zero(c)) {
				T f = c;
				for (size_t j = 0; j < cols_; ++j) row[j] = row[j] - f * rows_[r][j];
			}
		}
		size_t lead = cols_;
		for (size_t j = 0; j < cols_; ++j)
			if (!is_zero(row[j])) {
				lead = j;
				break;
			}
		if (lead == cols_) return false;
		T inv = T(1) / row[lead];
		for (size_t j = 0; j < cols_; ++j) row[j] = row[j] * inv;
		for (size_t r = 0; r < rows_.size(); ++r) {
			const T& c = rows_[r][lead];
			if (!is_zero(c)) {
				T f = c;
				for (size_t j = 0; j < cols_; ++j) rows_[r][j] = rows_[r][j] - f * row[j];
			}
		}
		rows_.push_back(std::move(row));
		pivot_.push_back(lead);
		return true;
	}

	size_t rank() const { return rows_.size(); }
	size_t cols() const { return cols_; }

	// True when v lies in the row space.
	bool contains(std::vector<T> v) const {
		for (size_t r = 0; r < rows_.size(); ++r) {
			const T& c = v[pivot_[r]];
			if (!is_zero(c)) {
				T f = c;
				for (size_t j = 0; j < cols_; ++j) v[j] = v[j] - f * rows_[r][j];
			}
		}
		for (const T& x : v)
			if (!is_zero(x)) return false;
		return true;
	}

	// Basis of the null space of the matrix whose rows were inserted.
	std::vector<std::vector<T>> nullspace_basis() const {
		std::vector<bool> is_pivot(cols_, false);
		for (size_t p : pivot_) is_pivot[p] = true;
		std::vector<std::vector<T>> basis;
		for (size_t f = 0; f < cols_; ++f) {
			if (is_pivot[f]) continue;
			std::vector<T> v(cols_, T(0));
			v[f] = T(1);
			for (size_t r = 0; r < rows_.size(); ++r) v[pivot_[r]] = T(0) - rows_[r][f];
			basis.push_back(std::move(v));
		}
		return basis;
	}

  private:
	size_t cols_;
	std::vector<std::vector<T>> rows_;
	std::vector<size_t> pivot_;
};

template <class T>
size_t rank_of(const Mat<T>& m) {
	RowEchelon<T> e(m.cols);
	for (size_t i = 0; i < m.rows; ++i)
		e.add_row(std::vector<T>(m.a.begin() + i * m.cols, m.a.begin() + (i + 1) * m.cols));
	return e.rank();
}

template <class T>
std::optional<Mat<T>> mat_inverse(const Mat<T>& m) {
	if (m.rows != m.cols) throw std::invalid_argument("mat_inverse: matrix not square");
	size_t n = m.rows;
	Mat<T> w(n, 2 * n);
	for (size_t i = 0; i < n; ++i) {
		for (size_t j = 0; j < n; ++j) w.at(i, j) = m.at(i, j);
		w.at(i, n + i) = T(1);
	}
	for (size_t k = 0; k < n; ++k) {
		size_t p = k;
		while (p < n && is_zero(w.at(p, k))) ++p;
		if (p == n) return std::nullopt;
		if (p != k)
			for (size_t j = 0; j < 2 * n; ++j) std::swap(w.at(p, j), w.at(k, j));
		T inv = T(1) / w.at(k, k);
		for (size_t j = 0; j < 2 * n; ++j) w.at(k, j) = w.at(k, j) * inv;
		for (size_t i = 0; i < n; ++i) {
			if (i == k || is_zero(w.at(i, k))) continue;
			T f = w.at(i, k);
			for (size_t j = 0; j < 2 * n; ++j) w.at(i, j) = w.at(i, j) - f * w.at(k, j);
		}
	}
	Mat<T> r(n, n);
	for (size_t i = 0; i < n; ++i)
		for (size_t j = 0; j < n; ++j) r.at(i, j) = w.at(i, n + j);
	return r;
}

// Solves m * x = rhs (m square and invertible not required; returns one solution).
template <class T>
std::optional<std::vector<T>> solve_linear(const Mat<T>& m, const std::vector<T>& rhs) {
	if (rhs.size() != m.rows) throw std::invalid_argument("solve_linear: rhs size mismatch");
	size_t n = m.rows, c = m.cols;
	Mat<T> w(n, c + 1);
	for (size_t i = 0; i < n; ++i) {
		for (size_t j = 0; j < c; ++j) w.at(i, j) = m.at(i, j);
		w.at(i, c) = rhs[i];
	}
	std::vector<size_t> pivot_col;
	size_t row = 0;
	for (size_t k = 0; k < c && row < n; ++k) {
		size_t p = row;
		while (p < n && is_zero(w.at(p, k))) ++p;
		if (p == n) continue;
		if (p != row)
			for (size_t j = 0; j <= c; ++j) std::swap(w.at(p, j), w.at(row, j));
		T inv = T(1) / w.at(row, k);
		for (size_t j = 0; j <= c; ++j) w.at(row, j) = w.at(row, j) * inv;
		for (size_t i = 0; i < n; ++i) {
			if (i == row || is_zero(w.at(i, k))) continue;
			T f = w.at(i, k);
			for (size_t j = 0; j <= c; ++j) w.at(i, j) = w.at(i, j) - f * w.at(row, j);
		}
		pivot_col.push_back(k);
		++row;
	}
	for (size_t i = row; i < n; ++i)
		if (!is_zero(w.at(i, c))) return std::nullopt;
	std::vector<T> x(c, T(0));
	for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = w.at(r, c);
	return x;
}

} // namespace regalg
