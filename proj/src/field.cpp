#include "cauchykit/field.hpp"

#include <cctype>

namespace cauchykit {

namespace {

std::string field_name(const Scalar::Value& v) {
  if (v.index() == 0) return "Q";
  return "GF(" + std::to_string(std::get<1>(v).modulus()) + ")";
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_class mod;
  mpz_import(mod.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), mod.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

}  // namespace

ModP ModP::from_int(std::int64_t v, std::uint64_t modulus) {
  if (v >= 0) return ModP(static_cast<std::uint64_t>(v), modulus);
  // -v may overflow for INT64_MIN; go through unsigned arithmetic.
  std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
  return -ModP(mag, modulus);
}

ModP ModP::inverse() const {
  if (value_ == 0) raise(ErrorCode::DivisionByZero, "division by zero in GF(" + std::to_string(modulus_) + ")");
  __int128 r0 = modulus_, r1 = value_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  __int128 m = modulus_;
  __int128 inv = s0 % m;
  if (inv < 0) inv += m;
  return ModP(static_cast<std::uint64_t>(inv), modulus_);
}

mpq_class inverse(const mpq_class& a) {
  if (sgn(a) == 0) raise(ErrorCode::DivisionByZero, "division by zero in Q");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), a.get_mpq_t());
  return r;
}

// ---- Field ----------------------------------------------------------------

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 62))
    raise(ErrorCode::InvalidArgument, "field modulus out of range: " + std::to_string(p));
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    raise(ErrorCode::InvalidArgument, "field modulus is not prime: " + std::to_string(p));
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "q") return rationals();
  std::string_view digits;
  if (text.size() > 4 && (text.substr(0, 3) == "GF(" || text.substr(0, 3) == "gf(") && text.back() == ')')
    digits = text.substr(3, text.size() - 4);
  else if (text.size() > 3 && (text.substr(0, 3) == "gf:" || text.substr(0, 3) == "GF:"))
    digits = text.substr(3);
  if (!all_digits(digits) || digits.size() > 19)
    raise(ErrorCode::Parse, "unrecognized field '" + std::string(text) + "'");
  return prime(std::stoull(std::string(digits)));
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (is_rational()) return Scalar(mpq_class(mpz_class(static_cast<long>(v))));
  return Scalar(ModP::from_int(v, modulus_));
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (is_rational()) return Scalar(q);
  ModP num(reduce_mpz(q.get_num(), modulus_), modulus_);
  ModP den(reduce_mpz(q.get_den(), modulus_), modulus_);
  if (den.value() == 0)
    raise(ErrorCode::DivisionByZero, "denominator vanishes in GF(" + std::to_string(modulus_) + ")");
  return Scalar(num / den);
}

Scalar Field::parse_scalar(std::string_view text) const {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  } else if (s.size() > 3 && s.substr(0, 3) == "\xE2\x88\x92") {  // U+2212 minus sign
    negative = true;
    s.remove_prefix(3);
  }
  auto slash = s.find('/');
  std::string_view num_text = s.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text))
    raise(ErrorCode::Parse, "malformed scalar '" + std::string(text) + "'");
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) raise(ErrorCode::Parse, "zero denominator in scalar '" + std::string(text) + "'");
  if (negative) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  try {
    return from_rational(q);
  } catch (const Error&) {
    raise(ErrorCode::Parse, "scalar '" + std::string(text) + "' is undefined in " + to_string());
  }
}

std::string Field::to_string() const {
  if (is_rational()) return "Q";
  return "GF(" + std::to_string(modulus_) + ")";
}

// ---- Scalar ---------------------------------------------------------------

Field Scalar::field() const {
  if (is_rational()) return Field::rationals();
  return Field(mod_p().modulus());
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& v) { return cauchykit::is_zero(v); }, value_);
}

bool Scalar::is_one() const {
  if (is_rational()) return rational() == 1;
  return mod_p().value() == 1;
}

Scalar Scalar::inv() const {
  if (is_rational()) return Scalar(inverse(rational()));
  return Scalar(mod_p().inverse());
}

void Scalar::check_same_field(const Scalar& o) const {
  if (value_.index() != o.value_.index())
    raise(ErrorCode::FieldMismatch, "variant mismatch: " + field_name(value_) + " vs " + field_name(o.value_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (is_rational())
    std::get<0>(value_) += o.rational();
  else
    std::get<1>(value_) += o.mod_p();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (is_rational())
    std::get<0>(value_) -= o.rational();
  else
    std::get<1>(value_) -= o.mod_p();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (is_rational())
    std::get<0>(value_) *= o.rational();
  else
    std::get<1>(value_) *= o.mod_p();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  if (is_rational()) {
    if (sgn(o.rational()) == 0) raise(ErrorCode::DivisionByZero, "division by zero in Q");
    std::get<0>(value_) /= o.rational();
  } else {
    std::get<1>(value_) /= o.mod_p();
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(mpq_class(-rational()));
  return Scalar(-mod_p());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (a.is_rational()) return a.rational() == b.rational();
  return a.mod_p() == b.mod_p();
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.is_rational()) return cmp(a.rational(), b.rational());
  if (a.mod_p().modulus() != b.mod_p().modulus()) a.mod_p() + b.mod_p();  // raises
  auto x = a.mod_p().value(), y = b.mod_p().value();
  return x < y ? -1 : (x > y ? 1 : 0);
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational().get_str();
  return std::to_string(mod_p().value());
}

Field common_field(const std::vector<Scalar>& values) {
  if (values.empty()) raise(ErrorCode::InvalidArgument, "empty scalar list has no field");
  Field f = values.front().field();
  for (const auto& v : values)
    if (!(v.field() == f))
      raise(ErrorCode::FieldMismatch, "mixed fields: " + f.to_string() + " and " + v.field().to_string());
  return f;
}

Scalar sum(const std::vector<Scalar>& values, const Field& field) {
  Scalar acc = field.zero();
  for (const auto& v : values) acc += v;
  return acc;
}

}  // namespace cauchykit
