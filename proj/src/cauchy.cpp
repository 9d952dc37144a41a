#include "cauchykit/cauchy.hpp"

#include <algorithm>
#include <numeric>

#include "cauchykit/detail/convert.hpp"
#include "cauchykit/detail/kernels.hpp"

namespace cauchykit {

namespace {

std::string label(std::size_t pos, std::size_t n) {
  return pos < n ? "x[" + std::to_string(pos) + "]" : "x_tilde[" + std::to_string(pos - n) + "]";
}

// First colliding pair of positions in x ++ x̃, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_duplicate(const std::vector<Scalar>& x,
                                                                  const std::vector<Scalar>& xt) {
  std::vector<Scalar> all = x;
  all.insert(all.end(), xt.begin(), xt.end());
  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scalar_less(all[a], all[b]); });
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (!(all[order[k - 1]] == all[order[k]])) continue;
    std::pair<std::size_t, std::size_t> hit{std::min(order[k - 1], order[k]), std::max(order[k - 1], order[k])};
    if (!best || hit < *best) best = hit;
  }
  return best;
}

std::vector<Scalar> sorted(std::vector<Scalar> v) {
  std::sort(v.begin(), v.end(), scalar_less);
  return v;
}

std::vector<Scalar> shifted(const std::vector<Scalar>& v, const Scalar& zeta) {
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s + zeta);
  return out;
}

}  // namespace

CauchyData::CauchyData(std::vector<Scalar> x, std::vector<Scalar> x_tilde)
    : x_(std::move(x)), x_tilde_(std::move(x_tilde)) {
  if (x_.empty()) raise(ErrorCode::InvalidData, "cauchy data needs n >= 1");
  if (x_.size() != x_tilde_.size())
    raise(ErrorCode::InvalidData, "x has " + std::to_string(x_.size()) + " entries but x_tilde has " +
                                      std::to_string(x_tilde_.size()));
  std::vector<Scalar> all = x_;
  all.insert(all.end(), x_tilde_.begin(), x_tilde_.end());
  field_ = common_field(all);
  if (auto dup = find_duplicate(x_, x_tilde_)) {
    const std::size_t n = x_.size();
    raise(ErrorCode::InvalidData, "duplicate scalar " + all[dup->first].to_string() + " at " +
                                      label(dup->first, n) + " and " + label(dup->second, n));
  }
}

// ---- StructuredCauchy -----------------------------------------------------

StructuredCauchy::StructuredCauchy(CauchyData data)
    : data_(std::move(data)), cache_(std::make_shared<Cache>()) {}

const StructuredCauchy::Cache& StructuredCauchy::cache() const {
  std::call_once(cache_->once, [this] {
    detail::visit_element(data_.field(), [this](auto tag) {
      using T = typename decltype(tag)::type;
      auto x = detail::unwrap<T>(data_.x());
      auto xt = detail::unwrap<T>(data_.x_tilde());
      cache_->alpha = detail::wrap(detail::unit_sum_solution(x, xt));
      cache_->alpha_tilde = detail::wrap(detail::unit_sum_solution(xt, x));
    });
  });
  return *cache_;
}

const std::vector<Scalar>& StructuredCauchy::alpha() const { return cache().alpha; }
const std::vector<Scalar>& StructuredCauchy::alpha_tilde() const { return cache().alpha_tilde; }

Scalar StructuredCauchy::entry(std::size_t i, std::size_t j) const {
  if (i >= n() || j >= n())
    raise(ErrorCode::InvalidArgument, "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                          ") out of range for n = " + std::to_string(n()));
  return (data_.x()[i] - data_.x_tilde()[j]).inv();
}

DenseMatrix StructuredCauchy::build() const {
  const std::size_t n = this->n();
  std::vector<Scalar> e;
  e.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e.push_back((data_.x()[i] - data_.x_tilde()[j]).inv());
  return DenseMatrix(data_.field(), n, n, std::move(e));
}

DenseMatrix StructuredCauchy::invert() const {
  const auto& c = cache();
  return detail::visit_element(data_.field(), [&](auto tag) {
    using T = typename decltype(tag)::type;
    auto inv = detail::cauchy_inverse(detail::unwrap<T>(data_.x()), detail::unwrap<T>(data_.x_tilde()),
                                      detail::unwrap<T>(c.alpha), detail::unwrap<T>(c.alpha_tilde));
    return DenseMatrix(data_.field(), n(), n(), detail::wrap(std::move(inv)));
  });
}

std::vector<Scalar> StructuredCauchy::solve(const std::vector<Scalar>& rhs) const {
  if (rhs.size() != n())
    raise(ErrorCode::DimensionMismatch, "right-hand side has length " + std::to_string(rhs.size()) +
                                            ", expected " + std::to_string(n()));
  if (!(common_field(rhs) == data_.field()))
    raise(ErrorCode::FieldMismatch, "right-hand side is not over " + data_.field().to_string());
  const auto& c = cache();
  return detail::visit_element(data_.field(), [&](auto tag) {
    using T = typename decltype(tag)::type;
    return detail::wrap(detail::cauchy_solve(detail::unwrap<T>(data_.x()), detail::unwrap<T>(data_.x_tilde()),
                                             detail::unwrap<T>(c.alpha), detail::unwrap<T>(c.alpha_tilde),
                                             detail::unwrap<T>(rhs)));
  });
}

// ---- free functions -------------------------------------------------------

DenseMatrix build(const CauchyData& data) { return StructuredCauchy(data).build(); }

Scalar entry(const CauchyData& data, std::size_t i, std::size_t j) { return StructuredCauchy(data).entry(i, j); }

std::pair<std::vector<Scalar>, std::vector<Scalar>> alphas(const CauchyData& data) {
  StructuredCauchy c(data);
  return {c.alpha(), c.alpha_tilde()};
}

DenseMatrix invert(const CauchyData& data) { return StructuredCauchy(data).invert(); }

std::vector<Scalar> solve(const CauchyData& data, const std::vector<Scalar>& rhs) {
  return StructuredCauchy(data).solve(rhs);
}

const char* kind_name(NotCauchy::Kind kind) {
  switch (kind) {
    case NotCauchy::Kind::ZeroEntry: return "zero_entry";
    case NotCauchy::Kind::EntryMismatch: return "entry_mismatch";
    case NotCauchy::Kind::DuplicateScalar: return "duplicate_scalar";
  }
  return "unknown";
}

std::variant<CauchyData, NotCauchy> recognize(const DenseMatrix& m) {
  if (!m.is_square())
    raise(ErrorCode::DimensionMismatch,
          "recognize needs a square matrix, got " + std::to_string(m.n_rows()) + "x" + std::to_string(m.n_cols()));
  const std::size_t n = m.n_rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j).is_zero())
        return NotCauchy{NotCauchy::Kind::ZeroEntry, i, j,
                         "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is zero"};

  std::vector<Scalar> x, xt;
  for (std::size_t i = 0; i < n; ++i) x.push_back(m(i, 0).inv());
  for (std::size_t j = 0; j < n; ++j) xt.push_back(x[0] - m(0, j).inv());

  if (auto dup = find_duplicate(x, xt)) {
    auto [a, b] = *dup;
    Scalar v = a < n ? x[a] : xt[a - n];
    return NotCauchy{NotCauchy::Kind::DuplicateScalar, a, b,
                     "recovered " + label(a, n) + " and " + label(b, n) + " both equal " + v.to_string()};
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar expected = (x[i] - xt[j]).inv();
      if (!(m(i, j) == expected))
        return NotCauchy{NotCauchy::Kind::EntryMismatch, i, j,
                         "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is " + m(i, j).to_string() +
                             " but the recovered data give " + expected.to_string()};
    }
  return CauchyData(std::move(x), std::move(xt));
}

CauchyData shift_data(const CauchyData& data, const Scalar& zeta) {
  return CauchyData(shifted(data.x(), zeta), shifted(data.x_tilde(), zeta));
}

std::optional<Scalar> perm_equivalent(const CauchyData& a, const CauchyData& b) {
  if (a.n() != b.n())
    raise(ErrorCode::DimensionMismatch,
          "data sizes differ: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
  if (!(a.field() == b.field()))
    raise(ErrorCode::FieldMismatch, "data fields differ: " + a.field().to_string() + " vs " + b.field().to_string());
  const Field& f = a.field();
  const auto bx = sorted(b.x());
  const auto bxt = sorted(b.x_tilde());
  auto works = [&](const Scalar& zeta) {
    return sorted(shifted(a.x(), zeta)) == bx && sorted(shifted(a.x_tilde(), zeta)) == bxt;
  };
  const std::size_t n = a.n();
  if (!f.char_divides(n)) {
    Scalar zeta = (sum(b.x(), f) - sum(a.x(), f)) / f.from_int(static_cast<std::int64_t>(n));
    if (works(zeta)) return zeta;
    return std::nullopt;
  }
  for (std::size_t k = 0; k < n; ++k) {
    Scalar zeta = b.x()[0] - a.x()[k];
    if (works(zeta)) return zeta;
  }
  return std::nullopt;
}

DenseMatrix displacement_residual(const CauchyData& data) {
  DenseMatrix c = build(data);
  const std::size_t n = data.n();
  auto out = DenseMatrix::zeros(data.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = data.x()[i] * c(i, j) - c(i, j) * data.x_tilde()[j];
  return out;
}

std::vector<IdentityCheck> check_identities(const CauchyData& data) {
  const Field& f = data.field();
  const std::size_t n = data.n();
  const auto& x = data.x();
  const auto& xt = data.x_tilde();
  StructuredCauchy sc(data);
  const auto& a = sc.alpha();
  const auto& at = sc.alpha_tilde();
  std::vector<IdentityCheck> out;

  auto first_bad = [&](const std::vector<Scalar>& values, const Scalar& target, const char* what) {
    for (std::size_t k = 0; k < values.size(); ++k)
      if (!(values[k] == target))
        return std::string(what) + " " + std::to_string(k) + " gives " + values[k].to_string() + ", expected " +
               target.to_string();
    return std::string();
  };
  auto record = [&](std::string name, std::string failure) {
    bool ok = failure.empty();
    out.push_back({std::move(name), ok, ok ? "ok" : std::move(failure)});
  };

  std::vector<Scalar> s1(n, f.zero()), s2(n, f.zero()), s3(n, f.zero());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      s1[j] += a[i] / (x[i] - xt[j]);
      s2[j] += at[i] / (xt[i] - x[j]);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar d = x[i] - xt[j];
      s3[i] += a[i] * at[j] / (d * d);
    }
  record("alpha_unit_sums", first_bad(s1, f.one(), "column"));
  record("alpha_tilde_unit_sums", first_bad(s2, f.one(), "column"));
  record("squared_kernel_sums", first_bad(s3, -f.one(), "row"));

  Scalar trace = f.zero();
  for (std::size_t i = 0; i < n; ++i) trace += x[i] - xt[i];
  Scalar asum = sum(a, f);
  record("alpha_sum", asum == trace ? "" : "sum of alpha is " + asum.to_string() + ", expected " + trace.to_string());

  DenseMatrix c = sc.build();
  DenseMatrix ones(f, n, n, std::vector<Scalar>(n * n, f.one()));
  record("displacement", displacement_residual(data) == ones ? "" : "D C - C D_tilde differs from J");
  record("transpose_swap", c.transpose() == -build(data.swapped()) ? "" : "C^T differs from -C_tilde");

  auto oracle = gaussian_inverse_oracle(c);
  if (auto* inv = std::get_if<DenseMatrix>(&oracle)) {
    std::vector<Scalar> cols(n, f.zero()), rows(n, f.zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        cols[j] += (*inv)(i, j);
        rows[i] += (*inv)(i, j);
      }
    std::string col_fail, row_fail;
    for (std::size_t k = 0; k < n && col_fail.empty(); ++k)
      if (!(cols[k] == a[k])) col_fail = "column " + std::to_string(k) + " sums to " + cols[k].to_string();
    for (std::size_t k = 0; k < n && row_fail.empty(); ++k)
      if (!(rows[k] == -at[k])) row_fail = "row " + std::to_string(k) + " sums to " + rows[k].to_string();
    record("inverse_column_sums", col_fail);
    record("inverse_row_sums", row_fail);
    record("inverse_matches_oracle", sc.invert() == *inv ? "" : "structured inverse differs from elimination");
  } else {
    record("inverse_matches_oracle", "elimination reports a singular matrix");
  }
  return out;
}

}  // namespace cauchykit
