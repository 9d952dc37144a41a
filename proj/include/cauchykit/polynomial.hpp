#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cauchykit/field.hpp"

namespace cauchykit {

// Dense univariate polynomial; coefficient k multiplies λ^k. Trailing zeros
// are always stripped, so the zero polynomial has no coefficients and no
// degree.
class Polynomial {
 public:
  explicit Polynomial(Field field) : field_(field) {}
  Polynomial(Field field, std::vector<Scalar> coefficients);

  static Polynomial constant(const Scalar& c);
  /// λ − root
  static Polynomial linear(const Scalar& root);

  const Field& field() const noexcept { return field_; }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  std::optional<std::size_t> degree() const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of λ^k (zero beyond the degree).
  Scalar coefficient(std::size_t k) const;
  Scalar leading() const;
  Scalar operator()(const Scalar& at) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  std::string to_string() const;

 private:
  void strip();

  Field field_;
  std::vector<Scalar> coeffs_;
};

}  // namespace cauchykit
