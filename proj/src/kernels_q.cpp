#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <cstdlib>

#include "cauchykit/detail/kernels.hpp"

namespace cauchykit::detail {

namespace {

// Above this spread of the integerized data the factor tables get too big
// and α falls back to product-then-gcd.
constexpr long kSieveLimit = 1L << 20;

mpz_class common_denominator(std::initializer_list<const std::vector<mpq_class>*> lists) {
  mpz_class d = 1;
  for (const auto* list : lists)
    for (const auto& v : *list) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
  return d;
}

// v * d entrywise; d is a multiple of every denominator.
std::vector<mpz_class> scaled(const std::vector<mpq_class>& v, const mpz_class& d) {
  std::vector<mpz_class> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    mpz_divexact(out[k].get_mpz_t(), d.get_mpz_t(), v[k].get_den_mpz_t());
    out[k] *= v[k].get_num();
  }
  return out;
}

// Product of all entries, balanced so the operands stay of similar size.
// Consumes the vector.
mpz_class product(std::vector<mpz_class>& v) {
  if (v.empty()) return 1;
  for (std::size_t step = 1; step < v.size(); step *= 2)
    for (std::size_t j = 0; j + step < v.size(); j += 2 * step) v[j] *= v[j + step];
  return v[0];
}

std::vector<mpq_class> alphas_by_gcd(const std::vector<mpz_class>& ia, const std::vector<mpz_class>& ib,
                                     const mpz_class& d) {
  const std::size_t n = ia.size();
  std::vector<mpq_class> out(n);
  std::vector<mpz_class> nf(n), df(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t m = 0;
    for (std::size_t k = 0; k < n; ++k) {
      nf[k] = ia[i] - ib[k];
      if (k != i) df[m++] = ia[i] - ia[k];
    }
    df[m] = d;
    mpq_class& q = out[i];
    q.get_num() = product(nf);
    q.get_den() = product(df);
    q.canonicalize();
  }
  return out;
}

// Smallest prime factor table up to `limit`, and the index of each prime.
struct Sieve {
  std::vector<std::uint32_t> spf;
  std::vector<std::uint32_t> slot;
  std::vector<unsigned long> primes;

  explicit Sieve(unsigned long limit) : spf(limit + 1, 0), slot(limit + 1, 0) {
    for (unsigned long v = 2; v <= limit; ++v) {
      if (spf[v] != 0) continue;
      slot[v] = static_cast<std::uint32_t>(primes.size());
      primes.push_back(v);
      for (unsigned long m = v; m <= limit; m += v)
        if (spf[m] == 0) spf[m] = static_cast<std::uint32_t>(v);
    }
  }

  // Adds `by` to the exponent of every prime dividing v > 0.
  void accumulate(unsigned long v, int by, std::vector<int>& exps) const {
    while (v > 1) {
      const unsigned long p = spf[v];
      exps[slot[p]] += by;
      v /= p;
    }
  }
};

// Small integer data: each α_i is a product of primes below the spread of the
// data, so its numerator and denominator are read off an exponent count and
// come out coprime without any gcd.
std::vector<mpq_class> alphas_by_sieve(const std::vector<long>& a, const std::vector<long>& b, unsigned long spread,
                                       const mpz_class& d) {
  const std::size_t n = a.size();
  const Sieve sieve(spread);
  std::vector<int> exps(sieve.primes.size());
  std::vector<mpq_class> out(n);
  std::vector<mpz_class> up, down;
  mpz_class power;
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(exps.begin(), exps.end(), 0);
    bool negative = false;
    for (std::size_t k = 0; k < n; ++k) {
      long v = a[i] - b[k];
      negative ^= v < 0;
      sieve.accumulate(static_cast<unsigned long>(v < 0 ? -v : v), 1, exps);
      if (k == i) continue;
      v = a[i] - a[k];
      negative ^= v < 0;
      sieve.accumulate(static_cast<unsigned long>(v < 0 ? -v : v), -1, exps);
    }
    up.clear();
    down.clear();
    for (std::size_t s = 0; s < exps.size(); ++s) {
      if (exps[s] == 0) continue;
      mpz_ui_pow_ui(power.get_mpz_t(), sieve.primes[s], static_cast<unsigned long>(std::abs(exps[s])));
      (exps[s] > 0 ? up : down).push_back(power);
    }
    mpq_class& q = out[i];
    q.get_num() = product(up);
    q.get_den() = product(down);
    if (negative) q.get_num() = -q.get_num();
    if (d != 1) {
      q.get_den() *= d;
      q.canonicalize();
    }
  }
  return out;
}

}  // namespace

std::vector<mpq_class> unit_sum_solution(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  const std::size_t n = a.size();
  if (n == 0) return {};
  const mpz_class d = common_denominator({&a, &b});
  const auto ia = scaled(a, d);
  const auto ib = scaled(b, d);

  auto [lo, hi] = std::minmax_element(ia.begin(), ia.end());
  mpz_class low = *lo, high = *hi;
  for (const auto& v : ib) {
    if (v < low) low = v;
    if (v > high) high = v;
  }
  const mpz_class spread = high - low;
  if (low.fits_slong_p() && high.fits_slong_p() && spread <= kSieveLimit) {
    std::vector<long> sa(n), sb(n);
    for (std::size_t k = 0; k < n; ++k) {
      sa[k] = ia[k].get_si();
      sb[k] = ib[k].get_si();
    }
    return alphas_by_sieve(sa, sb, spread.get_ui(), d);
  }
  return alphas_by_gcd(ia, ib, d);
}

// With x = X / D, xt = Xt / D and u = A rhs = U / L over the integers,
//   y_i = at_i * (D / L) * sum_j U_j / (Xt_i - X_j).
std::vector<mpq_class> cauchy_solve(const std::vector<mpq_class>& x, const std::vector<mpq_class>& xt,
                                    const std::vector<mpq_class>& alpha, const std::vector<mpq_class>& alpha_t,
                                    const std::vector<mpq_class>& rhs) {
  const std::size_t n = x.size();
  std::vector<mpq_class> u(n);
  for (std::size_t j = 0; j < n; ++j) u[j] = alpha[j] * rhs[j];
  const mpz_class d = common_denominator({&x, &xt});
  const mpz_class l = common_denominator({&u});
  const auto ix = scaled(x, d);
  const auto ixt = scaled(xt, d);
  const auto iu = scaled(u, l);

  std::vector<mpq_class> y(n);
  const std::size_t half = (n + 1) / 2;
  std::vector<mpz_class> num(half), den(half);
  mpz_class e0, e1, t;
  for (std::size_t i = 0; i < n; ++i) {
    // First level straight from the leaves U_j / e_j.
    for (std::size_t j = 0; j < n; j += 2) {
      mpz_sub(e0.get_mpz_t(), ixt[i].get_mpz_t(), ix[j].get_mpz_t());
      if (j + 1 == n) {
        num[j / 2] = iu[j];
        den[j / 2] = e0;
        break;
      }
      mpz_sub(e1.get_mpz_t(), ixt[i].get_mpz_t(), ix[j + 1].get_mpz_t());
      mpz_mul(num[j / 2].get_mpz_t(), iu[j].get_mpz_t(), e1.get_mpz_t());
      mpz_addmul(num[j / 2].get_mpz_t(), iu[j + 1].get_mpz_t(), e0.get_mpz_t());
      mpz_mul(den[j / 2].get_mpz_t(), e0.get_mpz_t(), e1.get_mpz_t());
    }
    for (std::size_t step = 1; step < half; step *= 2) {
      for (std::size_t j = 0; j + step < half; j += 2 * step) {
        mpz_mul(t.get_mpz_t(), num[j + step].get_mpz_t(), den[j].get_mpz_t());
        mpz_mul(num[j].get_mpz_t(), num[j].get_mpz_t(), den[j + step].get_mpz_t());
        mpz_add(num[j].get_mpz_t(), num[j].get_mpz_t(), t.get_mpz_t());
        mpz_mul(den[j].get_mpz_t(), den[j].get_mpz_t(), den[j + step].get_mpz_t());
      }
    }
    mpq_class& q = y[i];
    mpz_mul(q.get_num_mpz_t(), num[0].get_mpz_t(), d.get_mpz_t());
    mpz_mul(q.get_num_mpz_t(), q.get_num_mpz_t(), alpha_t[i].get_num_mpz_t());
    mpz_mul(q.get_den_mpz_t(), den[0].get_mpz_t(), l.get_mpz_t());
    mpz_mul(q.get_den_mpz_t(), q.get_den_mpz_t(), alpha_t[i].get_den_mpz_t());
    q.canonicalize();
  }
  return y;
}

}  // namespace cauchykit::detail
