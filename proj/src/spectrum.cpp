#include "spectrum.hpp"

#include <algorithm>

namespace cauchykit::detail {

namespace {

// Residue fields this small are searched exhaustively.
constexpr std::uint64_t kEnumerationLimit = 4096;

Polynomial x_poly(const Field& f) { return Polynomial(f, {f.zero(), f.one()}); }

Polynomial mod(const Polynomial& a, const Polynomial& m) { return a.divmod(m).second; }

Polynomial powmod(Polynomial base, std::uint64_t e, const Polynomial& m) {
  Polynomial acc = Polynomial::constant(m.field().one());
  base = mod(base, m);
  while (e > 0) {
    if (e & 1) acc = mod(acc * base, m);
    e >>= 1;
    if (e) base = mod(base * base, m);
  }
  return acc;
}

// Roots of a monic polynomial over GF(p) known to be a product of distinct
// linear factors.
void split_linear(const Polynomial& g, std::vector<Scalar>& out) {
  const Field& f = g.field();
  const std::size_t d = g.degree().value_or(0);
  if (d == 0) return;
  if (d == 1) {
    out.push_back(-g.coefficient(0) / g.coefficient(1));
    return;
  }
  const std::uint64_t p = f.modulus();
  for (std::int64_t a = 0;; ++a) {
    Polynomial shifted = x_poly(f) + Polynomial::constant(f.from_int(a));
    Polynomial h = powmod(shifted, (p - 1) / 2, g) - Polynomial::constant(f.one());
    h = poly_gcd(g, h);
    const std::size_t dh = h.degree().value_or(0);
    if (dh > 0 && dh < d) {
      split_linear(h, out);
      split_linear(g.divmod(h).first.monic(), out);
      return;
    }
  }
}

std::vector<Scalar> distinct_roots_mod_p(const Polynomial& f) {
  const Field& field = f.field();
  std::vector<Scalar> roots;
  if (!f.degree() || *f.degree() == 0) return roots;
  const std::uint64_t p = field.modulus();
  if (p <= kEnumerationLimit) {
    for (std::uint64_t r = 0; r < p; ++r) {
      Scalar s = field.from_int(static_cast<std::int64_t>(r));
      if (f(s).is_zero()) roots.push_back(s);
    }
    return roots;
  }
  Polynomial fm = f.monic();
  Polynomial g = poly_gcd(fm, powmod(x_poly(field), p, fm) - x_poly(field));
  split_linear(g, roots);
  return roots;
}

mpz_class eval_z(const std::vector<mpz_class>& h, const mpz_class& at) {
  mpz_class acc = 0;
  for (auto it = h.rbegin(); it != h.rend(); ++it) acc = acc * at + *it;
  return acc;
}

mpz_class eval_dz(const std::vector<mpz_class>& h, const mpz_class& at) {
  mpz_class acc = 0;
  for (std::size_t k = h.size(); k-- > 1;) acc = acc * at + h[k] * static_cast<unsigned long>(k);
  return acc;
}

// Integer roots of a monic squarefree integer polynomial (coefficients low to
// high): roots mod a prime p for which h stays squarefree, lifted p-adically
// past twice the Cauchy bound and then checked exactly.
std::vector<mpz_class> integer_roots(const std::vector<mpz_class>& h) {
  const std::size_t d = h.size() - 1;
  mpz_class bound = 0;
  for (std::size_t k = 0; k < d; ++k) bound = std::max<mpz_class>(bound, abs(h[k]));
  bound += 1;
  mpz_class limit = 2 * bound + 1;

  mpz_class prime = mpz_class(1) << 30;
  for (int attempt = 0; attempt < 200; ++attempt) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    const std::uint64_t p = prime.get_ui();
    Field gf = Field::prime(p);
    std::vector<Scalar> coeffs;
    for (const auto& c : h) coeffs.push_back(gf.from_rational(mpq_class(c)));
    Polynomial hp(gf, coeffs);
    if (poly_gcd(hp, hp.derivative()).degree().value_or(0) != 0) continue;

    std::vector<mpz_class> out;
    for (const auto& r0 : distinct_roots_mod_p(hp)) {
      mpz_class m = prime;
      mpz_class r = r0.mod_p().value();
      while (m < limit) {
        mpz_class m2 = m * m;
        mpz_class deriv = eval_dz(h, r) % m2;
        if (deriv < 0) deriv += m2;
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), m2.get_mpz_t());
        r = (r - eval_z(h, r) * inv) % m2;
        if (r < 0) r += m2;
        m = m2;
      }
      if (2 * r > m) r -= m;
      if (eval_z(h, r) == 0) out.push_back(r);
    }
    return out;
  }
  raise(ErrorCode::InvalidArgument, "no good reduction prime found for root isolation");
}

std::vector<Scalar> distinct_roots_rational(const Polynomial& f) {
  const Field& field = f.field();
  if (!f.degree() || *f.degree() == 0) return {};
  Polynomial g = f.divmod(poly_gcd(f, f.derivative())).first.monic();
  const std::size_t d = *g.degree();
  // h(μ) = s^d g(μ / s) is monic with integer coefficients.
  mpz_class s = 1;
  for (const auto& c : g.coefficients()) mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> h(d + 1);
  mpz_class power = 1;
  for (std::size_t k = d + 1; k-- > 0;) {
    mpq_class v = g.coefficient(k).rational() * power;
    h[k] = v.get_num();
    power *= s;
  }
  std::vector<Scalar> roots;
  for (const auto& r : integer_roots(h)) roots.push_back(field.from_rational(mpq_class(r, s)));
  return roots;
}

}  // namespace

Polynomial charpoly(const DenseMatrix& m) {
  if (!m.is_square()) raise(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.n_rows();
  DenseMatrix h = m;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t k = 0; k < n; ++k) std::swap(h(piv, k), h(j + 1, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(h(k, piv), h(k, j + 1));
    }
    Scalar inv = h(j + 1, j).inv();
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h(i, j).is_zero()) continue;
      Scalar u = h(i, j) * inv;
      for (std::size_t k = 0; k < n; ++k) h(i, k) -= u * h(j + 1, k);
      for (std::size_t k = 0; k < n; ++k) h(k, j + 1) += u * h(k, i);
    }
  }
  // p[k] = characteristic polynomial of the leading k x k block.
  std::vector<Polynomial> p;
  p.push_back(Polynomial::constant(f.one()));
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial next = Polynomial::linear(h(k, k)) * p[k];
    Scalar sub = f.one();
    for (std::size_t i = k; i-- > 0;) {
      sub *= h(i + 1, i);
      next -= p[i] * (h(i, k) * sub);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<Root> roots_in_field(const Polynomial& f) {
  std::vector<Scalar> distinct = f.field().is_rational() ? distinct_roots_rational(f) : distinct_roots_mod_p(f);
  std::sort(distinct.begin(), distinct.end(), scalar_less);
  std::vector<Root> out;
  for (auto& r : distinct) {
    std::size_t mult = 0;
    Polynomial rest = f;
    const Polynomial lin = Polynomial::linear(r);
    while (true) {
      auto [q, rem] = rest.divmod(lin);
      if (!rem.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    out.push_back({std::move(r), mult});
  }
  return out;
}

}  // namespace cauchykit::detail
