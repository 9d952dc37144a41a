#include <cstdint>

#include "cauchykit/bench.hpp"

namespace cauchykit {

namespace {

using u64 = std::uint64_t;

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// In-place LU of an n x n matrix mod p (p < 2^31) with row pivoting.
// Returns false when singular mod p.
bool lu_mod_p(std::vector<u64>& a, std::vector<std::size_t>& perm, std::size_t n, u64 p) {
  perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return false;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
      std::swap(perm[piv], perm[k]);
    }
    const u64 inv = powmod(a[k * n + k], p - 2, p);
    const u64* rk = &a[k * n];
    for (std::size_t i = k + 1; i < n; ++i) {
      u64* ri = &a[i * n];
      if (ri[k] == 0) continue;
      const u64 f = ri[k] * inv % p;
      ri[k] = f;
      const u64 nf = p - f;
      for (std::size_t j = k + 1; j < n; ++j) ri[j] = (ri[j] + nf * rk[j]) % p;
    }
  }
  return true;
}

void lu_solve(const std::vector<u64>& lu, const std::vector<std::size_t>& perm, const std::vector<u64>& inv_diag,
              std::vector<u64>& b, std::size_t n, u64 p) {
  std::vector<u64> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    u64 s = b[perm[i]];
    const u64* ri = &lu[i * n];
    for (std::size_t j = 0; j < i; ++j) s = (s + (p - ri[j]) * y[j]) % p;
    y[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    u64 s = y[i];
    const u64* ri = &lu[i * n];
    for (std::size_t j = i + 1; j < n; ++j) s = (s + (p - ri[j]) * b[j]) % p;
    b[i] = s * inv_diag[i] % p;
  }
}

// c/d ≡ u (mod m) with |c| <= bound, 0 < d <= bound.
bool rat_recon(const mpz_class& u, const mpz_class& m, const mpz_class& bound, mpz_class& c, mpz_class& d) {
  mpz_class r0 = m, r1 = u, t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  c = r1;
  d = t1;
  return true;
}

}  // namespace

std::vector<Scalar> dixon_solve(const DenseMatrix& m, const std::vector<Scalar>& rhs) {
  if (!m.field().is_rational()) raise(ErrorCode::InvalidArgument, "dixon_solve works over Q only");
  if (!m.is_square()) raise(ErrorCode::DimensionMismatch, "dixon_solve needs a square matrix");
  const std::size_t n = m.n_rows();
  if (rhs.size() != n) raise(ErrorCode::DimensionMismatch, "right-hand side length differs from matrix size");

  // Integer system a y = b: row i scaled by the lcm of its denominators.
  std::vector<mpz_class> a(n * n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = rhs[i].rational().get_den();
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& q = m(i, j).rational();
      mpz_divexact(a[i * n + j].get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
      a[i * n + j] *= q.get_num();
    }
    mpz_divexact(b[i].get_mpz_t(), l.get_mpz_t(), rhs[i].rational().get_den_mpz_t());
    b[i] *= rhs[i].rational().get_num();
  }

  mpz_class prime = (mpz_class(1) << 31) - 1;
  std::vector<u64> lu(n * n);
  std::vector<std::size_t> perm;
  u64 p = 0;
  for (int attempt = 0;; ++attempt) {
    if (attempt == 8) raise(ErrorCode::Singular, "matrix is singular (no good prime found)");
    do prime -= 2;
    while (mpz_probab_prime_p(prime.get_mpz_t(), 30) == 0);
    p = prime.get_ui();
    for (std::size_t k = 0; k < n * n; ++k) lu[k] = mpz_fdiv_ui(a[k].get_mpz_t(), p);
    if (lu_mod_p(lu, perm, n, p)) break;
  }
  std::vector<u64> inv_diag(n);
  for (std::size_t i = 0; i < n; ++i) inv_diag[i] = powmod(lu[i * n + i], p - 2, p);

  std::vector<mpz_class> residual = b, acc(n, 0);
  mpz_class modulus = 1;
  std::vector<u64> digit(n);
  std::size_t next_check = 4;
  for (std::size_t iter = 1;; ++iter) {
    for (std::size_t i = 0; i < n; ++i) digit[i] = mpz_fdiv_ui(residual[i].get_mpz_t(), p);
    lu_solve(lu, perm, inv_diag, digit, n, p);
    for (std::size_t i = 0; i < n; ++i) {
      mpz_class& r = residual[i];
      const mpz_class* row = &a[i * n];
      for (std::size_t j = 0; j < n; ++j)
        if (digit[j]) mpz_submul_ui(r.get_mpz_t(), row[j].get_mpz_t(), digit[j]);
      mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
      mpz_addmul_ui(acc[i].get_mpz_t(), modulus.get_mpz_t(), digit[i]);
    }
    modulus *= p;
    if (iter < next_check) continue;
    next_check = iter + iter / 4 + 1;

    // Common-denominator reconstruction: most entries become integers once
    // multiplied by the denominator found so far.
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), mpz_class(modulus / 2).get_mpz_t());
    mpz_class half = modulus / 2;
    mpz_class denom = 1;
    std::vector<mpz_class> num(n);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      mpz_class z = (acc[i] * denom) % modulus;
      if (z > half) z -= modulus;
      if (abs(z) <= bound) {
        num[i] = z;
        continue;
      }
      if (z < 0) z += modulus;
      mpz_class c, d;
      if (!rat_recon(z, modulus, bound, c, d)) {
        ok = false;
        break;
      }
      for (std::size_t k = 0; k < i; ++k) num[k] *= d;
      denom *= d;
      num[i] = c;
      if (denom > bound) ok = false;
    }
    if (!ok) continue;
    // Exact check of a · num = denom · b.
    bool exact = true;
    mpz_class s;
    for (std::size_t i = 0; i < n && exact; ++i) {
      s = 0;
      for (std::size_t j = 0; j < n; ++j) mpz_addmul(s.get_mpz_t(), a[i * n + j].get_mpz_t(), num[j].get_mpz_t());
      exact = s == denom * b[i];
    }
    if (!exact) continue;
    std::vector<Scalar> y;
    y.reserve(n);
    for (std::size_t i = 0; i < n; ++i) y.emplace_back(mpq_class(num[i], denom));
    return y;
  }
}

}  // namespace cauchykit
