#include "cauchykit/matrix.hpp"

#include "cauchykit/detail/convert.hpp"
#include "cauchykit/detail/kernels.hpp"

namespace cauchykit {

namespace {

std::string shape(const DenseMatrix& m) {
  return std::to_string(m.n_rows()) + "x" + std::to_string(m.n_cols());
}

void same_shape(const DenseMatrix& a, const DenseMatrix& b, const char* op) {
  if (!(a.field() == b.field()))
    raise(ErrorCode::FieldMismatch, std::string(op) + ": " + a.field().to_string() + " vs " + b.field().to_string());
  if (a.n_rows() != b.n_rows() || a.n_cols() != b.n_cols())
    raise(ErrorCode::DimensionMismatch, std::string(op) + ": " + shape(a) + " vs " + shape(b));
}

}  // namespace

DenseMatrix::DenseMatrix(Field field, std::size_t n_rows, std::size_t n_cols, std::vector<Scalar> entries)
    : field_(field), rows_(n_rows), cols_(n_cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) raise(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
  if (entries_.size() != rows_ * cols_)
    raise(ErrorCode::DimensionMismatch, "matrix " + std::to_string(rows_) + "x" + std::to_string(cols_) + " given " +
                                            std::to_string(entries_.size()) + " entries");
  for (const auto& e : entries_)
    if (!(e.field() == field_))
      raise(ErrorCode::FieldMismatch, "entry " + e.to_string() + " is not in " + field_.to_string());
}

DenseMatrix DenseMatrix::zeros(const Field& field, std::size_t n_rows, std::size_t n_cols) {
  return DenseMatrix(field, n_rows, n_cols, std::vector<Scalar>(n_rows * n_cols, field.zero()));
}

DenseMatrix DenseMatrix::identity(const Field& field, std::size_t n) {
  auto m = zeros(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

DenseMatrix DenseMatrix::diagonal(const Field& field, const std::vector<Scalar>& diag) {
  auto m = zeros(field, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

DenseMatrix DenseMatrix::column(const Field& field, const std::vector<Scalar>& values) {
  return DenseMatrix(field, values.size(), 1, values);
}

const Scalar& DenseMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    raise(ErrorCode::InvalidArgument, "index (" + std::to_string(i) + ", " + std::to_string(j) +
                                          ") out of range for " + shape(*this));
  return (*this)(i, j);
}

std::vector<Scalar> DenseMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Scalar> DenseMatrix::col(std::size_t j) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  auto t = zeros(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix DenseMatrix::operator-() const {
  DenseMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

std::vector<Scalar> DenseMatrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_)
    raise(ErrorCode::DimensionMismatch, "vector of length " + std::to_string(v.size()) + " against " + shape(*this));
  std::vector<Scalar> out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

std::size_t DenseMatrix::rank() const {
  return detail::visit_element(field_, [&](auto tag) {
    using T = typename decltype(tag)::type;
    return detail::rank(detail::unwrap<T>(entries_), rows_, cols_);
  });
}

Scalar DenseMatrix::trace() const {
  if (!is_square()) raise(ErrorCode::DimensionMismatch, "trace of non-square " + shape(*this));
  Scalar s = field_.zero();
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  same_shape(a, b, "matrix sum");
  DenseMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  same_shape(a, b, "matrix difference");
  DenseMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
  return out;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (!(a.field_ == b.field_))
    raise(ErrorCode::FieldMismatch, "matrix product: " + a.field_.to_string() + " vs " + b.field_.to_string());
  if (a.cols_ != b.rows_) raise(ErrorCode::DimensionMismatch, "matrix product: " + shape(a) + " * " + shape(b));
  auto out = DenseMatrix::zeros(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

DenseMatrix operator*(const Scalar& c, const DenseMatrix& a) {
  DenseMatrix out = a;
  for (auto& e : out.entries_) e = c * e;
  return out;
}

std::variant<DenseMatrix, Singular> gaussian_inverse_oracle(const DenseMatrix& m) {
  if (!m.is_square()) raise(ErrorCode::DimensionMismatch, "inverse of non-square " + shape(m));
  const std::size_t n = m.n_rows();
  return detail::visit_element(m.field(), [&](auto tag) -> std::variant<DenseMatrix, Singular> {
    using T = typename decltype(tag)::type;
    auto [inv, rank] = detail::gaussian_inverse(detail::unwrap<T>(m.entries()), n);
    if (!inv) return Singular{rank};
    return DenseMatrix(m.field(), n, n, detail::wrap(std::move(*inv)));
  });
}

std::variant<std::vector<Scalar>, Singular> gaussian_solve_oracle(const DenseMatrix& m,
                                                                  const std::vector<Scalar>& rhs) {
  if (!m.is_square()) raise(ErrorCode::DimensionMismatch, "solve with non-square " + shape(m));
  const std::size_t n = m.n_rows();
  if (rhs.size() != n)
    raise(ErrorCode::DimensionMismatch, "right-hand side of length " + std::to_string(rhs.size()) + " for " + shape(m));
  if (!(common_field(rhs) == m.field())) raise(ErrorCode::FieldMismatch, "right-hand side field differs from matrix");
  return detail::visit_element(m.field(), [&](auto tag) -> std::variant<std::vector<Scalar>, Singular> {
    using T = typename decltype(tag)::type;
    auto [y, rank] = detail::gaussian_solve(detail::unwrap<T>(m.entries()), detail::unwrap<T>(rhs), n, 1);
    if (!y) return Singular{rank};
    return detail::wrap(std::move(*y));
  });
}

std::vector<std::vector<Scalar>> nullspace(const DenseMatrix& m) {
  const std::size_t rows = m.n_rows(), cols = m.n_cols();
  const Field& f = m.field();
  std::vector<Scalar> a = m.entries();
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(cols, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c].is_zero()) ++p;
    if (p == rows) continue;
    for (std::size_t k = 0; k < cols; ++k) std::swap(a[p * cols + k], a[r * cols + k]);
    Scalar inv = a[r * cols + c].inv();
    for (std::size_t k = 0; k < cols; ++k) a[r * cols + k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i * cols + c].is_zero()) continue;
      Scalar factor = a[i * cols + c];
      for (std::size_t k = 0; k < cols; ++k) a[i * cols + k] -= factor * a[r * cols + k];
    }
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
    ++r;
  }
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols, f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivot_of_row.size(); ++i) v[pivot_of_row[i]] = -a[i * cols + free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cauchykit
