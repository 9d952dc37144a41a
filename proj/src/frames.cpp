#include "cauchykit/frames.hpp"

#include <functional>

namespace cauchykit {

namespace {

using Entry = std::function<Scalar(std::size_t, std::size_t)>;

DenseMatrix tabulate(const Field& f, std::size_t n, const Entry& e) {
  auto m = DenseMatrix::zeros(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = e(i, j);
  return m;
}

DenseMatrix diag(const Field& f, std::size_t n, const std::function<Scalar(std::size_t)>& d) {
  auto m = DenseMatrix::zeros(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = d(i);
  return m;
}

}  // namespace

const char* basis_name(BasisTag tag) {
  switch (tag) {
    case BasisTag::Eps: return "eps";
    case BasisTag::EpsTilde: return "eps-tilde";
    case BasisTag::EpsStar: return "eps-star";
    case BasisTag::EpsTildeStar: return "eps-tilde-star";
  }
  return "?";
}

BasisTag parse_basis(std::string_view text) {
  for (auto tag : {BasisTag::Eps, BasisTag::EpsTilde, BasisTag::EpsStar, BasisTag::EpsTildeStar})
    if (text == basis_name(tag)) return tag;
  raise(ErrorCode::Parse, "unknown basis '" + std::string(text) + "'");
}

Frame::Frame(CauchyData data, Scalar gamma, Scalar rho)
    : data_(std::move(data)), gamma_(std::move(gamma)), rho_(std::move(rho)) {
  if (!(gamma_.field() == data_.field()) || !(rho_.field() == data_.field()))
    raise(ErrorCode::FieldMismatch, "gamma and rho must lie in " + data_.field().to_string());
  if (gamma_.is_zero()) raise(ErrorCode::InvalidArgument, "gamma must be nonzero");
  if (rho_.is_zero()) raise(ErrorCode::InvalidArgument, "rho must be nonzero");
  std::tie(alpha_, alpha_tilde_) = alphas(data_);
}

DenseMatrix Frame::rep_X() const { return DenseMatrix::diagonal(data_.field(), data_.x()); }

DenseMatrix Frame::rep_Delta() const {
  return tabulate(data_.field(), n(), [&](std::size_t, std::size_t j) { return alpha_[j]; });
}

DenseMatrix Frame::rep_X_tilde() const { return rep_X() - rep_Delta(); }

DenseMatrix Frame::transition(BasisTag from, BasisTag to) const {
  const Field& f = data_.field();
  const std::size_t n = this->n();
  const auto& x = data_.x();
  const auto& xt = data_.x_tilde();
  const auto& a = alpha_;
  const auto& at = alpha_tilde_;
  const Scalar& g = gamma_;
  const Scalar& r = rho_;
  using B = BasisTag;
  if (from == to) return DenseMatrix::identity(f, n);
  switch (from) {
    case B::Eps:
      switch (to) {
        case B::EpsTilde:
          return tabulate(f, n, [&](auto i, auto j) { return -g * at[j] / (x[i] - xt[j]); });
        case B::EpsStar:
          return diag(f, n, [&](auto i) { return (r * a[i]).inv(); });
        case B::EpsTildeStar:
          return tabulate(f, n, [&](auto i, auto j) { return (r * g * (x[i] - xt[j])).inv(); });
        default: break;
      }
      break;
    case B::EpsTilde:
      switch (to) {
        case B::Eps:
          return tabulate(f, n, [&](auto i, auto j) { return -a[j] / (g * (xt[i] - x[j])); });
        case B::EpsTildeStar:
          return diag(f, n, [&](auto i) { return -(r * g * g * at[i]).inv(); });
        case B::EpsStar:
          return tabulate(f, n, [&](auto i, auto j) { return -(r * g * (xt[i] - x[j])).inv(); });
        default: break;
      }
      break;
    case B::EpsStar:
      switch (to) {
        case B::Eps:
          return diag(f, n, [&](auto i) { return r * a[i]; });
        case B::EpsTilde:
          return tabulate(f, n, [&](auto i, auto j) { return -r * g * a[i] * at[j] / (x[i] - xt[j]); });
        case B::EpsTildeStar:
          return tabulate(f, n, [&](auto i, auto j) { return a[i] / (g * (x[i] - xt[j])); });
        default: break;
      }
      break;
    case B::EpsTildeStar:
      switch (to) {
        case B::Eps:
          return tabulate(f, n, [&](auto i, auto j) { return r * g * at[i] * a[j] / (xt[i] - x[j]); });
        case B::EpsTilde:
          return diag(f, n, [&](auto i) { return -r * g * g * at[i]; });
        case B::EpsStar:
          return tabulate(f, n, [&](auto i, auto j) { return g * at[i] / (xt[i] - x[j]); });
        default: break;
      }
      break;
  }
  raise(ErrorCode::InvalidArgument, "unsupported transition");
}

DenseMatrix Frame::gram(BasisTag left, BasisTag right) const {
  const Field& f = data_.field();
  const std::size_t n = this->n();
  const auto& x = data_.x();
  const auto& xt = data_.x_tilde();
  const auto& a = alpha_;
  const auto& at = alpha_tilde_;
  const Scalar& g = gamma_;
  const Scalar& r = rho_;
  using B = BasisTag;
  // Each basis is paired with its own dual to the identity.
  auto dual = [](B t) {
    switch (t) {
      case B::Eps: return B::EpsStar;
      case B::EpsStar: return B::Eps;
      case B::EpsTilde: return B::EpsTildeStar;
      case B::EpsTildeStar: return B::EpsTilde;
    }
    return t;
  };
  if (dual(left) == right) return DenseMatrix::identity(f, n);
  switch (left) {
    case B::Eps:
      switch (right) {
        case B::Eps:
          return diag(f, n, [&](auto i) { return r * a[i]; });
        case B::EpsTilde:
          return tabulate(f, n, [&](auto i, auto j) { return -r * g * a[i] * at[j] / (x[i] - xt[j]); });
        case B::EpsTildeStar:
          return tabulate(f, n, [&](auto i, auto j) { return a[i] / (g * (x[i] - xt[j])); });
        default: break;
      }
      break;
    case B::EpsTilde:
      switch (right) {
        case B::EpsTilde:
          return diag(f, n, [&](auto i) { return -r * g * g * at[i]; });
        case B::Eps:
          return tabulate(f, n, [&](auto i, auto j) { return r * g * at[i] * a[j] / (xt[i] - x[j]); });
        case B::EpsStar:
          return tabulate(f, n, [&](auto i, auto j) { return g * at[i] / (xt[i] - x[j]); });
        default: break;
      }
      break;
    case B::EpsStar:
      switch (right) {
        case B::EpsStar:
          return diag(f, n, [&](auto i) { return (r * a[i]).inv(); });
        case B::EpsTilde:
          return tabulate(f, n, [&](auto i, auto j) { return -g * at[j] / (x[i] - xt[j]); });
        case B::EpsTildeStar:
          return tabulate(f, n, [&](auto i, auto j) { return (r * g * (x[i] - xt[j])).inv(); });
        default: break;
      }
      break;
    case B::EpsTildeStar:
      switch (right) {
        case B::EpsTildeStar:
          return diag(f, n, [&](auto i) { return -(r * g * g * at[i]).inv(); });
        case B::Eps:
          return tabulate(f, n, [&](auto i, auto j) { return -a[j] / (g * (xt[i] - x[j])); });
        case B::EpsStar:
          return tabulate(f, n, [&](auto i, auto j) { return -(r * g * (xt[i] - x[j])).inv(); });
        default: break;
      }
      break;
  }
  raise(ErrorCode::InvalidArgument, "unsupported basis pair");
}

Scalar Frame::form_evaluate(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const {
  if (u.size() != n() || v.size() != n())
    raise(ErrorCode::DimensionMismatch, "form arguments must have length " + std::to_string(n()));
  Scalar s = data_.field().zero();
  for (std::size_t i = 0; i < n(); ++i) s += u[i] * alpha_[i] * v[i];
  return rho_ * s;
}

DenseMatrix Frame::standard_basis_for_index(const Scalar& gamma_prime) const {
  if (gamma_prime.is_zero()) raise(ErrorCode::InvalidArgument, "index must be nonzero");
  return Frame(data_, gamma_prime, rho_).transition(BasisTag::Eps, BasisTag::EpsTilde);
}

}  // namespace cauchykit
