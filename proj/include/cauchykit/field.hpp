#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cauchykit/error.hpp"

namespace cauchykit {

class Scalar;

/// Residue class modulo a prime p < 2^62.
class ModP {
 public:
  ModP() = default;
  ModP(std::uint64_t residue, std::uint64_t modulus)
      : value_(residue % modulus), modulus_(modulus) {}

  static ModP from_int(std::int64_t v, std::uint64_t modulus);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  ModP inverse() const;

  ModP& operator+=(const ModP& o) {
    check(o);
    value_ += o.value_;
    if (value_ >= modulus_) value_ -= modulus_;
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    check(o);
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + modulus_ - o.value_;
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    check(o);
    value_ = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(value_) * o.value_ % modulus_);
    return *this;
  }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  ModP operator-() const { return ModP(value_ == 0 ? 0 : modulus_ - value_, modulus_); }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend bool operator==(const ModP& a, const ModP& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

 private:
  void check(const ModP& o) const {
    if (o.modulus_ != modulus_)
      raise(ErrorCode::FieldMismatch, "modulus mismatch: GF(" + std::to_string(modulus_) +
                                          ") vs GF(" + std::to_string(o.modulus_) + ")");
  }

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 2;
};

// Uniform helpers so the structured kernels can be written once for both
// element types.
inline bool is_zero(const mpq_class& a) { return sgn(a) == 0; }
inline bool is_zero(const ModP& a) { return a.value() == 0; }
inline mpq_class one_like(const mpq_class&) { return mpq_class(1); }
inline ModP one_like(const ModP& a) { return ModP(1, a.modulus()); }
inline mpq_class zero_like(const mpq_class&) { return mpq_class(0); }
inline ModP zero_like(const ModP& a) { return ModP(0, a.modulus()); }
mpq_class inverse(const mpq_class& a);
inline ModP inverse(const ModP& a) { return a.inverse(); }

/// The field a dataset lives in: the rationals or a prime field GF(p).
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws InvalidArgument unless p is a prime below 2^62.
  static Field prime(std::uint64_t p);
  /// Accepts "Q", "GF(p)" and "gf:p".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return modulus_ == 0; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t characteristic() const noexcept { return modulus_; }

  /// True iff the characteristic divides k (never for Q).
  bool char_divides(std::uint64_t k) const noexcept {
    return modulus_ != 0 && k % modulus_ == 0;
  }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// Parses "p/q", "p" (and for GF(p) any integer, reduced).
  Scalar parse_scalar(std::string_view text) const;

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_ = 0;
};

/// An exact field element. Immutable from the caller's point of view; all
/// arithmetic returns normalized values.
class Scalar {
 public:
  using Value = std::variant<mpq_class, ModP>;

  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) { std::get<0>(value_).canonicalize(); }
  explicit Scalar(ModP m) : value_(m) {}

  Field field() const;
  bool is_rational() const noexcept { return value_.index() == 0; }
  const mpq_class& rational() const { return std::get<0>(value_); }
  const ModP& mod_p() const { return std::get<1>(value_); }
  const Value& value() const noexcept { return value_; }

  bool is_zero() const;
  bool is_one() const;
  Scalar inv() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Exact equality; values from different fields are never equal.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Total order used for sorting multisets: numeric for rationals, by
  /// residue for GF(p). Throws FieldMismatch across fields.
  static int compare(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void check_same_field(const Scalar& o) const;
  Value value_;
};

inline bool scalar_less(const Scalar& a, const Scalar& b) { return Scalar::compare(a, b) < 0; }

/// Common field of a non-empty list; throws FieldMismatch when mixed.
Field common_field(const std::vector<Scalar>& values);

Scalar sum(const std::vector<Scalar>& values, const Field& field);

}  // namespace cauchykit
