#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cauchykit/cauchy.hpp"
#include "cauchykit/matrix.hpp"
#include "cauchykit/rng.hpp"

namespace testing_support {

using namespace cauchykit;

inline Scalar q(const char* text) { return Field::rationals().parse_scalar(text); }
inline Scalar q(int v) { return Field::rationals().from_int(v); }
inline Scalar q(long v) { return Field::rationals().from_int(v); }
inline Scalar gf(std::uint64_t p, long v) { return Field::prime(p).from_int(v); }

inline std::vector<Scalar> qs(std::initializer_list<long> v) {
  std::vector<Scalar> out;
  for (long x : v) out.push_back(q(x));
  return out;
}

inline DenseMatrix qmat(std::size_t r, std::size_t c, std::initializer_list<const char*> entries) {
  std::vector<Scalar> e;
  for (const char* s : entries) e.push_back(q(s));
  return DenseMatrix(Field::rationals(), r, c, std::move(e));
}

inline CauchyData example() { return CauchyData(qs({0, 1}), qs({2, 3})); }

// Random rational scalar a/b with |a| <= radius, 1 <= b <= max_den.
inline Scalar random_fraction(Lcg& rng, long radius, long max_den) {
  mpq_class v(rng.between(-radius, radius), rng.between(1, max_den));
  return Scalar(v);
}

// 2n distinct scalars; fractions over Q, uniform residues over GF(p).
inline CauchyData random_cauchy(Lcg& rng, std::size_t n, const Field& f) {
  std::vector<Scalar> all;
  while (all.size() < 2 * n) {
    Scalar s = f.is_rational() ? random_fraction(rng, 30, 6) : random_scalar(rng, f, 0);
    if (std::find(all.begin(), all.end(), s) == all.end()) all.push_back(s);
  }
  std::vector<Scalar> x(all.begin(), all.begin() + n), xt(all.begin() + n, all.end());
  return CauchyData(std::move(x), std::move(xt));
}

inline std::vector<Scalar> random_vector(Lcg& rng, std::size_t n, const Field& f) {
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(f.is_rational() ? random_fraction(rng, 9, 4) : random_scalar(rng, f, 0));
  return v;
}

// Random invertible matrix with small entries.
inline DenseMatrix random_invertible(Lcg& rng, std::size_t n, const Field& f) {
  while (true) {
    std::vector<Scalar> e;
    for (std::size_t k = 0; k < n * n; ++k) e.push_back(random_scalar(rng, f, 3));
    DenseMatrix m(f, n, n, std::move(e));
    if (m.rank() == n) return m;
  }
}

inline DenseMatrix inverse_of(const DenseMatrix& m) { return std::get<DenseMatrix>(gaussian_inverse_oracle(m)); }

inline std::vector<Scalar> sorted(std::vector<Scalar> v) {
  std::sort(v.begin(), v.end(), scalar_less);
  return v;
}

}  // namespace testing_support
