#include "cauchykit/rng.hpp"

#include <algorithm>

namespace cauchykit {

std::uint64_t Lcg::below(std::uint64_t bound) {
  if (bound == 0) raise(ErrorCode::InvalidArgument, "empty range");
  if (bound <= (std::uint64_t{1} << 32)) return next_u32() % bound;
  std::uint64_t hi = next_u32();
  std::uint64_t lo = next_u32();
  return ((hi << 32) | lo) % bound;
}

std::int64_t Lcg::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) raise(ErrorCode::InvalidArgument, "empty range");
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Scalar random_scalar(Lcg& rng, const Field& field, std::int64_t radius) {
  if (field.is_rational()) return field.from_int(rng.between(-radius, radius));
  return Scalar(ModP(rng.below(field.modulus()), field.modulus()));
}

Scalar random_nonzero(Lcg& rng, const Field& field, std::int64_t radius) {
  while (true) {
    Scalar s = random_scalar(rng, field, radius);
    if (!s.is_zero()) return s;
  }
}

CauchyData generate_data(std::size_t n, std::uint64_t seed, const Field& field, std::int64_t radius) {
  if (n == 0) raise(ErrorCode::InvalidArgument, "n must be at least 1");
  if (!field.is_rational() && 2 * n > field.modulus())
    raise(ErrorCode::InvalidArgument, "GF(" + std::to_string(field.modulus()) + ") has fewer than 2n = " +
                                          std::to_string(2 * n) + " elements");
  if (radius <= 0) radius = static_cast<std::int64_t>(4 * n);
  if (field.is_rational() && static_cast<std::uint64_t>(2 * radius + 1) < 2 * n)
    raise(ErrorCode::InvalidArgument, "radius " + std::to_string(radius) + " is too small for n = " + std::to_string(n));
  Lcg rng(seed);
  std::vector<Scalar> drawn;
  std::vector<Scalar> seen;
  while (drawn.size() < 2 * n) {
    Scalar s = random_scalar(rng, field, radius);
    auto it = std::lower_bound(seen.begin(), seen.end(), s, scalar_less);
    if (it != seen.end() && *it == s) continue;
    seen.insert(it, s);
    drawn.push_back(std::move(s));
  }
  std::vector<Scalar> x(drawn.begin(), drawn.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<Scalar> xt(drawn.begin() + static_cast<std::ptrdiff_t>(n), drawn.end());
  return CauchyData(std::move(x), std::move(xt));
}

}  // namespace cauchykit
