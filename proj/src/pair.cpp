#include "cauchykit/pair.hpp"

#include <algorithm>
#include <map>

#include "spectrum.hpp"

namespace cauchykit {

namespace {

std::string join(const std::vector<Scalar>& v) {
  std::string out = "{";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].to_string();
  return out + "}";
}

DenseMatrix shifted(const DenseMatrix& m, const Scalar& r) {
  return m - r * DenseMatrix::identity(m.field(), m.n_rows());
}

struct Spectrum {
  std::vector<detail::Root> roots;
  bool in_field = false;
  bool multiplicity_free = false;
  bool diagonalizable = false;
  // One eigenvector per root when every eigenspace is a line spanning V
  // together; empty otherwise.
  std::vector<std::vector<Scalar>> eigenvectors;
};

Spectrum analyze(const DenseMatrix& m) {
  Spectrum s;
  const std::size_t n = m.n_rows();
  s.roots = detail::roots_in_field(detail::charpoly(m));
  std::size_t total = 0, nullities = 0;
  bool lines = true;
  s.multiplicity_free = true;
  std::vector<std::vector<Scalar>> vecs;
  for (const auto& r : s.roots) {
    total += r.multiplicity;
    if (r.multiplicity != 1) s.multiplicity_free = false;
    auto basis = nullspace(shifted(m, r.value));
    nullities += basis.size();
    if (basis.size() != 1) lines = false;
    if (!basis.empty()) vecs.push_back(std::move(basis.front()));
  }
  s.in_field = total == n;
  s.multiplicity_free = s.multiplicity_free && s.in_field;
  s.diagonalizable = nullities == n;
  if (s.diagonalizable && lines) s.eigenvectors = std::move(vecs);
  return s;
}

std::vector<Scalar> values(const Spectrum& s) {
  std::vector<Scalar> out;
  for (const auto& r : s.roots) out.push_back(r.value);
  return out;
}

DenseMatrix from_columns(const Field& f, const std::vector<std::vector<Scalar>>& cols) {
  const std::size_t n = cols.size();
  auto m = DenseMatrix::zeros(f, n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  return m;
}

// η spanning ΔV, scaled so its first nonzero coordinate is 1.
std::vector<Scalar> eta_of(const DenseMatrix& delta) {
  for (std::size_t j = 0; j < delta.n_cols(); ++j) {
    auto c = delta.col(j);
    auto it = std::find_if(c.begin(), c.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (it == c.end()) continue;
    Scalar inv = it->inv();
    for (auto& e : c) e *= inv;
    return c;
  }
  return {};
}

// Coordinates of η in the eigenbasis; nullopt when there is no eigenbasis of
// lines.
std::optional<std::vector<Scalar>> eigen_coordinates(const Spectrum& s, const std::vector<Scalar>& eta,
                                                     const Field& f) {
  if (s.eigenvectors.empty() || eta.empty()) return std::nullopt;
  auto solved = gaussian_solve_oracle(from_columns(f, s.eigenvectors), eta);
  if (auto* c = std::get_if<std::vector<Scalar>>(&solved)) return *c;
  return std::nullopt;
}

bool all_nonzero(const std::vector<Scalar>& v) {
  return std::none_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// Columns E_i η for the sorted eigenvalues of X; the X-standard basis fixed
// by the normalized η.
DenseMatrix standard_basis(const CauchyPair& p) {
  Spectrum s = analyze(p.X);
  auto eta = eta_of(p.X - p.X_tilde);
  auto c = eigen_coordinates(s, eta, p.field());
  if (!c) raise(ErrorCode::NotVerified, "pair has no X-standard basis");
  std::vector<std::vector<Scalar>> cols = s.eigenvectors;
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (auto& e : cols[i]) e *= (*c)[i];
  return from_columns(p.field(), cols);
}

}  // namespace

CauchyPair::CauchyPair(DenseMatrix x, DenseMatrix x_tilde, std::string note)
    : X(std::move(x)), X_tilde(std::move(x_tilde)), note(std::move(note)) {
  if (!X.is_square() || !X_tilde.is_square() || X.n_rows() != X_tilde.n_rows())
    raise(ErrorCode::DimensionMismatch, "pair matrices must be square of equal size");
  if (!(X.field() == X_tilde.field())) raise(ErrorCode::FieldMismatch, "pair matrices lie in different fields");
}

VerificationReport verify(const CauchyPair& p) {
  VerificationReport r;
  const Field& f = p.field();
  Spectrum sx = analyze(p.X);
  Spectrum st = analyze(p.X_tilde);
  r.spectrum_X = values(sx);
  r.spectrum_Xt = values(st);
  r.diagonalizable_X = sx.diagonalizable;
  r.diagonalizable_Xt = st.diagonalizable;
  r.spectra_in_field = sx.in_field && st.in_field;
  r.multiplicity_free = sx.multiplicity_free && st.multiplicity_free;

  std::vector<Scalar> common;
  std::set_intersection(r.spectrum_X.begin(), r.spectrum_X.end(), r.spectrum_Xt.begin(), r.spectrum_Xt.end(),
                        std::back_inserter(common), scalar_less);
  r.spectra_disjoint = common.empty();

  DenseMatrix delta = p.X - p.X_tilde;
  r.rank_delta = delta.rank();

  if (r.rank_delta == 1) {
    auto eta = eta_of(delta);
    if (auto c = eigen_coordinates(sx, eta, f)) r.irreducible = all_nonzero(*c);
    if (auto c = eigen_coordinates(st, eta, f)) r.irreducible_cross_check = all_nonzero(*c);
  }

  auto fail = [&](std::string why) {
    if (!r.witness) r.witness = std::move(why);
  };
  if (!sx.in_field) fail("characteristic polynomial of X does not split over " + f.to_string());
  if (!st.in_field) fail("characteristic polynomial of X_tilde does not split over " + f.to_string());
  if (!sx.multiplicity_free) fail("X has a repeated eigenvalue");
  if (!st.multiplicity_free) fail("X_tilde has a repeated eigenvalue");
  if (!sx.diagonalizable) fail("X is not diagonalizable");
  if (!st.diagonalizable) fail("X_tilde is not diagonalizable");
  if (!r.spectra_disjoint) fail("eigenvalue " + common.front().to_string() + " is shared by X and X_tilde");
  if (r.rank_delta != 1) fail("rank(X - X_tilde) = " + std::to_string(r.rank_delta));
  if (!r.irreducible) fail("eta has a zero component in the X eigenbasis");
  if (!r.irreducible_cross_check) fail("eta has a zero component in the X_tilde eigenbasis");
  r.verdict = !r.witness;
  return r;
}

CauchyData eigenvalue_data(const CauchyPair& p) {
  auto r = verify(p);
  if (!r.verdict) raise(ErrorCode::NotVerified, "not a Cauchy pair: " + r.witness.value_or("?"));
  return CauchyData(r.spectrum_X, r.spectrum_Xt);
}

CauchyData associated_matrix(const CauchyPair& p) { return eigenvalue_data(p); }

CauchyPair pair_from_data(const CauchyData& data) {
  const Field& f = data.field();
  const std::size_t n = data.n();
  auto [alpha, alpha_tilde] = alphas(data);
  DenseMatrix x = DenseMatrix::diagonal(f, data.x());
  DenseMatrix xt = x;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) xt(i, j) -= alpha[j];
  return CauchyPair(std::move(x), std::move(xt), "X-standard coordinates");
}

CauchyPair affine_transform(const CauchyPair& p, const Scalar& xi, const Scalar& zeta) {
  if (xi.is_zero()) raise(ErrorCode::InvalidArgument, "affine transform needs xi != 0");
  auto id = DenseMatrix::identity(p.field(), p.n());
  return CauchyPair(xi * p.X + zeta * id, xi * p.X_tilde + zeta * id, p.note);
}

std::optional<DenseMatrix> is_isomorphic(const CauchyPair& p, const CauchyPair& q) {
  if (p.n() != q.n())
    raise(ErrorCode::DimensionMismatch, "pair sizes differ: " + std::to_string(p.n()) + " vs " + std::to_string(q.n()));
  if (!(p.field() == q.field())) raise(ErrorCode::FieldMismatch, "pairs lie in different fields");
  auto dp = eigenvalue_data(p);
  auto dq = eigenvalue_data(q);
  if (!(dp == dq)) return std::nullopt;
  DenseMatrix sp = standard_basis(p);
  DenseMatrix sq = standard_basis(q);
  auto inv = gaussian_inverse_oracle(sp);
  if (!std::holds_alternative<DenseMatrix>(inv)) return std::nullopt;
  DenseMatrix phi = sq * std::get<DenseMatrix>(inv);
  if (phi * p.X == q.X * phi && phi * p.X_tilde == q.X_tilde * phi) return phi;
  return std::nullopt;
}

std::optional<Equivalence> is_equivalent(const CauchyPair& p, const CauchyPair& q) {
  auto dp = eigenvalue_data(p);
  auto dq = eigenvalue_data(q);
  auto shift = perm_equivalent(dp, dq);
  if (!shift) return std::nullopt;
  // dq = dp + ζ, so q − ζI is isomorphic to p.
  Scalar zeta = -*shift;
  auto phi = is_isomorphic(affine_transform(q, q.field().one(), zeta), p);
  if (!phi) raise(ErrorCode::NotVerified, "shifted pair failed the isomorphism check");
  return Equivalence{zeta, std::move(*phi)};
}

std::vector<EquivalenceClass> classify(const std::vector<CauchyPair>& pairs) {
  std::vector<EquivalenceClass> classes;
  if (pairs.empty()) return classes;
  const std::size_t n = pairs.front().n();
  const Field f = pairs.front().field();
  std::vector<CauchyData> data;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (pairs[k].n() != n) raise(ErrorCode::DimensionMismatch, "pair " + std::to_string(k) + " has a different size");
    if (!(pairs[k].field() == f)) raise(ErrorCode::FieldMismatch, "pair " + std::to_string(k) + " has a different field");
    data.push_back(eigenvalue_data(pairs[k]));
  }

  if (!f.char_divides(2 * n)) {
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < data.size(); ++k) {
      const auto& d = data[k];
      Scalar centre = (sum(d.x(), f) + sum(d.x_tilde(), f)) / f.from_int(static_cast<std::int64_t>(2 * n));
      CauchyData c = shift_data(d, -centre);
      auto x = c.x();
      auto xt = c.x_tilde();
      std::sort(x.begin(), x.end(), scalar_less);
      std::sort(xt.begin(), xt.end(), scalar_less);
      std::string key = join(x) + join(xt);
      auto [it, fresh] = index.emplace(key, classes.size());
      if (fresh) classes.push_back({CauchyData(x, xt), true, {}});
      classes[it->second].members.push_back(k);
    }
    return classes;
  }

  std::vector<std::size_t> rep;
  for (std::size_t k = 0; k < data.size(); ++k) {
    auto hit = std::find_if(rep.begin(), rep.end(),
                            [&](std::size_t r) { return perm_equivalent(data[r], data[k]).has_value(); });
    if (hit != rep.end()) {
      classes[static_cast<std::size_t>(hit - rep.begin())].members.push_back(k);
      continue;
    }
    rep.push_back(k);
    classes.push_back({data[k], false, {k}});
  }
  return classes;
}

}  // namespace cauchykit
