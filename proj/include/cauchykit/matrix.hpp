#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "cauchykit/field.hpp"

namespace cauchykit {

/// Explicit row-major matrix over one field.
class DenseMatrix {
 public:
  DenseMatrix(Field field, std::size_t n_rows, std::size_t n_cols, std::vector<Scalar> entries);

  static DenseMatrix zeros(const Field& field, std::size_t n_rows, std::size_t n_cols);
  static DenseMatrix identity(const Field& field, std::size_t n);
  static DenseMatrix diagonal(const Field& field, const std::vector<Scalar>& diag);
  static DenseMatrix column(const Field& field, const std::vector<Scalar>& values);

  const Field& field() const noexcept { return field_; }
  std::size_t n_rows() const noexcept { return rows_; }
  std::size_t n_cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  /// Bounds-checked access; throws InvalidArgument.
  const Scalar& at(std::size_t i, std::size_t j) const;

  std::vector<Scalar> row(std::size_t i) const;
  std::vector<Scalar> col(std::size_t j) const;

  DenseMatrix transpose() const;
  DenseMatrix operator-() const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  std::size_t rank() const;
  Scalar trace() const;

  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(const Scalar& c, const DenseMatrix& a);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

struct Singular {
  std::size_t rank;
};

/// Exact Gauss-Jordan inverse, pivoting on the first nonzero entry.
/// Independent of the structured Cauchy formulas; used as an oracle.
std::variant<DenseMatrix, Singular> gaussian_inverse_oracle(const DenseMatrix& m);

/// Exact solve of m y = rhs by elimination.
std::variant<std::vector<Scalar>, Singular> gaussian_solve_oracle(const DenseMatrix& m,
                                                                  const std::vector<Scalar>& rhs);

/// Basis of the right kernel {v : m v = 0}, from the reduced row echelon form.
std::vector<std::vector<Scalar>> nullspace(const DenseMatrix& m);

}  // namespace cauchykit
