#include "cauchykit/polynomial.hpp"

namespace cauchykit {

Polynomial::Polynomial(Field field, std::vector<Scalar> coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_)
    if (!(c.field() == field_))
      raise(ErrorCode::FieldMismatch, "coefficient " + c.to_string() + " is not in " + field_.to_string());
  strip();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::linear(const Scalar& root) {
  Field f = root.field();
  return Polynomial(f, {-root, f.one()});
}

void Polynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Scalar Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : field_.zero();
}

Scalar Polynomial::leading() const {
  return coeffs_.empty() ? field_.zero() : coeffs_.back();
}

Scalar Polynomial::operator()(const Scalar& at) const {
  Scalar acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d.push_back(coeffs_[k] * field_.from_int(static_cast<std::int64_t>(k)));
  return Polynomial(field_, std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inv();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  strip();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  strip();
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  for (auto& a : coeffs_) a *= c;
  strip();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(a.field_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Scalar> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() <= dd) return {Polynomial(field_), *this};
  std::vector<Scalar> quot(rem.size() - dd, field_.zero());
  Scalar lead_inv = divisor.leading().inv();
  for (std::size_t k = rem.size(); k-- > dd;) {
    Scalar q = rem[k] * lead_inv;
    if (q.is_zero()) continue;
    quot[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.coeffs_[j];
  }
  rem.resize(dd);
  return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[k].to_string();
    if (k >= 1) out += "*L";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace cauchykit
