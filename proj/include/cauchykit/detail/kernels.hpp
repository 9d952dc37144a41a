#pragma once

// Element-generic kernels. T is mpq_class or ModP in the library; tests also
// instantiate them with an operation-counting wrapper. T needs + - * /,
// is_zero(T), one_like(T) and zero_like(T).

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cauchykit/field.hpp"

namespace cauchykit::detail {

// A_i = prod_k (a_i - b_k) / prod_{k != i} (a_i - a_k)
template <class T>
std::vector<T> unit_sum_solution(const std::vector<T>& a, const std::vector<T>& b) {
  const std::size_t n = a.size();
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    T num = one_like(a[i]);
    T den = one_like(a[i]);
    for (std::size_t k = 0; k < n; ++k) {
      num *= a[i] - b[k];
      if (k != i) den *= a[i] - a[k];
    }
    out.push_back(num / den);
  }
  return out;
}

// Rational specialization (kernels_q.cpp). Exact, and equal to the generic
// template, but organized to keep the gcd work down.
std::vector<mpq_class> unit_sum_solution(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b);

// Row-major C^{-1}: entry (i, j) = at_i * a_j / (xt_i - x_j).
template <class T>
std::vector<T> cauchy_inverse(const std::vector<T>& x, const std::vector<T>& xt,
                              const std::vector<T>& alpha, const std::vector<T>& alpha_t) {
  const std::size_t n = x.size();
  std::vector<T> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.push_back(alpha_t[i] * alpha[j] / (xt[i] - x[j]));
  return out;
}

// y = At (Ct (A rhs)), Ct_{ij} = 1 / (xt_i - x_j).
template <class T>
std::vector<T> cauchy_solve(const std::vector<T>& x, const std::vector<T>& xt,
                            const std::vector<T>& alpha, const std::vector<T>& alpha_t,
                            const std::vector<T>& rhs) {
  const std::size_t n = x.size();
  std::vector<T> u;
  u.reserve(n);
  for (std::size_t j = 0; j < n; ++j) u.push_back(alpha[j] * rhs[j]);
  std::vector<T> y;
  y.reserve(n);
  T diff = zero_like(x[0]);
  for (std::size_t i = 0; i < n; ++i) {
    T s = zero_like(x[0]);
    for (std::size_t j = 0; j < n; ++j) {
      diff = xt[i] - x[j];
      s += u[j] / diff;
    }
    y.push_back(alpha_t[i] * s);
  }
  return y;
}

// Rational specialization: one common denominator for the data and one for
// A rhs, then a balanced tree of unreduced integer fractions per row.
std::vector<mpq_class> cauchy_solve(const std::vector<mpq_class>& x, const std::vector<mpq_class>& xt,
                                    const std::vector<mpq_class>& alpha, const std::vector<mpq_class>& alpha_t,
                                    const std::vector<mpq_class>& rhs);

// Forward elimination on a row-major r x c block, pivoting on the first
// nonzero entry of each column. Returns the pivot columns.
template <class T>
std::vector<std::size_t> row_echelon(std::vector<T>& m, std::size_t rows, std::size_t cols,
                                     std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  T f = zero_like(m[0]);
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p * cols + c])) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m[p * cols + k], m[r * cols + k]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (is_zero(m[i * cols + c])) continue;
      f = m[i * cols + c] / m[r * cols + c];
      for (std::size_t k = c; k < cols; ++k) m[i * cols + k] -= f * m[r * cols + k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(std::vector<T> m, std::size_t rows, std::size_t cols) {
  if (m.empty()) return 0;
  return row_echelon(m, rows, cols, cols).size();
}

// Solves the square system m y = rhs (k right-hand sides, row-major n x k).
// Returns the rank instead when m is singular.
template <class T>
std::pair<std::optional<std::vector<T>>, std::size_t> gaussian_solve(const std::vector<T>& m,
                                                                    const std::vector<T>& rhs,
                                                                    std::size_t n, std::size_t k) {
  const std::size_t cols = n + k;
  std::vector<T> aug;
  aug.reserve(n * cols);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.push_back(m[i * n + j]);
    for (std::size_t j = 0; j < k; ++j) aug.push_back(rhs[i * k + j]);
  }
  auto pivots = row_echelon(aug, n, cols, n);
  if (pivots.size() < n) return {std::nullopt, pivots.size()};
  std::vector<T> y(n * k, zero_like(m[0]));
  T s = zero_like(m[0]);
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t c = 0; c < k; ++c) {
      s = aug[i * cols + n + c];
      for (std::size_t j = i + 1; j < n; ++j) s -= aug[i * cols + j] * y[j * k + c];
      y[i * k + c] = s / aug[i * cols + i];
    }
  }
  return {std::move(y), n};
}

template <class T>
std::pair<std::optional<std::vector<T>>, std::size_t> gaussian_inverse(const std::vector<T>& m,
                                                                      std::size_t n) {
  std::vector<T> id(n * n, zero_like(m[0]));
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = one_like(m[0]);
  return gaussian_solve(m, id, n, n);
}

}  // namespace cauchykit::detail
