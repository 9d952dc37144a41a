#include <gtest/gtest.h>

#include "cauchykit/frames.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

const BasisTag kAll[] = {BasisTag::Eps, BasisTag::EpsTilde, BasisTag::EpsStar, BasisTag::EpsTildeStar};

// Bases as coordinate columns in the eps basis, built from eigenvectors and
// the form directly rather than from the closed forms.
struct Oracle {
  DenseMatrix gram_eps;
  std::vector<DenseMatrix> basis;  // indexed like kAll

  explicit Oracle(const Frame& fr) : gram_eps(DenseMatrix::zeros(fr.data().field(), 1, 1)) {
    const Field f = fr.data().field();
    const std::size_t n = fr.n();
    auto [alpha, alpha_t] = alphas(fr.data());
    gram_eps = fr.rho() * DenseMatrix::diagonal(f, alpha);

    // X̃ in eps coordinates: diag(x) minus rows of α.
    std::vector<Scalar> e;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e.push_back((i == j ? fr.data().x()[i] : f.zero()) - alpha[j]);
    DenseMatrix xt(f, n, n, e);
    std::vector<std::vector<Scalar>> vecs;
    for (const auto& lam : fr.data().x_tilde()) {
      auto ns = nullspace(xt - lam * DenseMatrix::identity(f, n));
      EXPECT_EQ(ns.size(), 1u);
      vecs.push_back(ns.at(0));
    }
    // Scale so the vectors add up to γ times the sum of the eps basis.
    std::vector<Scalar> m;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.push_back(vecs[j][i]);
    auto c = std::get<std::vector<Scalar>>(gaussian_solve_oracle(DenseMatrix(f, n, n, m), std::vector<Scalar>(n, fr.gamma())));
    std::vector<Scalar> cols;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cols.push_back(c[j] * vecs[j][i]);
    DenseMatrix tilde(f, n, n, cols);

    basis.push_back(DenseMatrix::identity(f, n));
    basis.push_back(tilde);
    basis.push_back(inverse_of(gram_eps));
    basis.push_back(inverse_of(tilde.transpose() * gram_eps));
  }

  const DenseMatrix& of(BasisTag t) const { return basis.at(static_cast<std::size_t>(t)); }
  DenseMatrix transition(BasisTag a, BasisTag b) const { return inverse_of(of(a)) * of(b); }
  DenseMatrix gram(BasisTag a, BasisTag b) const { return of(a).transpose() * gram_eps * of(b); }
};

Frame example_frame(long gamma = 1, long rho = 1) { return Frame(example(), q(gamma), q(rho)); }

}  // namespace

TEST(Frames, Representations) {
  Frame fr = example_frame();
  EXPECT_EQ(fr.rep_X(), DenseMatrix::diagonal(Field::rationals(), qs({0, 1})));
  EXPECT_EQ(fr.rep_Delta(), qmat(2, 2, {"-6", "2", "-6", "2"}));
  EXPECT_EQ(fr.rep_X_tilde(), qmat(2, 2, {"6", "-2", "6", "-1"}));
  EXPECT_EQ(fr.rep_Delta().rank(), 1u);
  EXPECT_EQ(fr.rho_tilde(), q(-1));
  EXPECT_EQ(example_frame(2, 3).rho_tilde(), q(-12));
  EXPECT_EQ(example_frame(2, 3).gamma_tilde(), q("1/2"));
}

TEST(Frames, TransitionExamples) {
  Frame fr = example_frame();
  DenseMatrix t = fr.transition(BasisTag::Eps, BasisTag::EpsTilde);
  DenseMatrix tt = fr.transition(BasisTag::EpsTilde, BasisTag::Eps);
  EXPECT_EQ(t, qmat(2, 2, {"-1", "2", "-2", "3"}));
  EXPECT_EQ(tt, qmat(2, 2, {"3", "-2", "2", "-1"}));
  EXPECT_EQ(t * tt, DenseMatrix::identity(Field::rationals(), 2));
  for (auto a : kAll) EXPECT_EQ(fr.transition(a, a), DenseMatrix::identity(Field::rationals(), 2));
}

TEST(Frames, GramExamples) {
  Frame fr = example_frame();
  EXPECT_EQ(fr.gram(BasisTag::Eps, BasisTag::Eps), DenseMatrix::diagonal(Field::rationals(), qs({-6, 2})));
  EXPECT_EQ(fr.gram(BasisTag::Eps, BasisTag::EpsStar), DenseMatrix::identity(Field::rationals(), 2));
  EXPECT_EQ(fr.gram(BasisTag::EpsTilde, BasisTag::EpsTilde), DenseMatrix::diagonal(Field::rationals(), qs({2, -6})));
}

TEST(Frames, FormExamples) {
  Frame fr = example_frame();
  EXPECT_EQ(fr.form_evaluate(qs({1, 0}), qs({0, 1})), q(0));
  EXPECT_EQ(fr.form_evaluate(qs({1, 0}), qs({1, 0})), q(-6));
  EXPECT_THROW(fr.form_evaluate(qs({1}), qs({1, 0})), Error);
}

TEST(Frames, StandardBasisForIndex) {
  Frame fr = example_frame();
  DenseMatrix b = fr.standard_basis_for_index(q(1));
  EXPECT_EQ(b, qmat(2, 2, {"-1", "2", "-2", "3"}));
  EXPECT_EQ(b.apply(qs({1, 1})), qs({1, 1}));
  EXPECT_EQ(fr.standard_basis_for_index(q(2)), q(2) * b);
  Frame one(CauchyData(qs({0}), qs({3})), q(1), q(1));
  EXPECT_EQ(one.standard_basis_for_index(q(7)), qmat(1, 1, {"7"}));
  EXPECT_THROW(fr.standard_basis_for_index(q(0)), Error);
}

TEST(Frames, Validation) {
  EXPECT_THROW(Frame(example(), q(0), q(1)), Error);
  EXPECT_THROW(Frame(example(), q(1), q(0)), Error);
  EXPECT_THROW(Frame(example(), gf(7, 1), q(1)), Error);
  EXPECT_EQ(parse_basis("eps-tilde-star"), BasisTag::EpsTildeStar);
  for (auto a : kAll) EXPECT_EQ(parse_basis(basis_name(a)), a);
  try {
    parse_basis("delta");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
  }
}

class FramesRandom : public ::testing::TestWithParam<std::uint64_t> {
 protected:
  Field field() const { return GetParam() == 0 ? Field::rationals() : Field::prime(GetParam()); }
};

TEST_P(FramesRandom, MatchIndependentOracle) {
  const Field f = field();
  Lcg rng(700 + GetParam());
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 1 + rng.below(6);
    Frame fr(random_cauchy(rng, n, f), random_nonzero(rng, f, 9), random_nonzero(rng, f, 9));
    Oracle o(fr);
    for (auto a : kAll)
      for (auto b : kAll) {
        EXPECT_EQ(fr.transition(a, b), o.transition(a, b)) << basis_name(a) << " -> " << basis_name(b);
        EXPECT_EQ(fr.gram(a, b), o.gram(a, b)) << basis_name(a) << ", " << basis_name(b);
      }
  }
}

TEST_P(FramesRandom, CoherenceLaws) {
  const Field f = field();
  Lcg rng(800 + GetParam());
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 1 + rng.below(8);
    const CauchyData d = random_cauchy(rng, n, f);
    Frame fr(d, random_nonzero(rng, f, 9), random_nonzero(rng, f, 9));
    const DenseMatrix id = DenseMatrix::identity(f, n);
    for (auto a : kAll)
      for (auto b : kAll) {
        EXPECT_EQ(fr.transition(a, b) * fr.transition(b, a), id);
        EXPECT_EQ(fr.gram(a, b), fr.gram(b, a).transpose());
        EXPECT_EQ(fr.gram(a, b), fr.gram(a, a) * fr.transition(a, b));
        for (auto c : kAll) EXPECT_EQ(fr.transition(a, c), fr.transition(a, b) * fr.transition(b, c));
      }
    for (auto a : kAll) {
      DenseMatrix g = fr.gram(a, a);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(g(i, j).is_zero(), i != j);
    }
    const DenseMatrix g = fr.gram(BasisTag::Eps, BasisTag::Eps);
    EXPECT_EQ(fr.rep_X().transpose() * g, g * fr.rep_X());
    EXPECT_EQ(fr.rep_X_tilde().transpose() * g, g * fr.rep_X_tilde());

    const DenseMatrix gt = fr.gram(BasisTag::EpsTilde, BasisTag::EpsTilde);
    const DenseMatrix mixed = fr.gram(BasisTag::Eps, BasisTag::EpsTilde);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(g(i, i) / fr.alpha()[i], fr.rho());
      EXPECT_EQ(gt(i, i) / fr.alpha_tilde()[i], -fr.rho() * fr.gamma() * fr.gamma());
      for (std::size_t j = 0; j < n; ++j) {
        Scalar lhs = mixed(i, j) * mixed(i, j) / (g(i, i) * gt(j, j));
        Scalar diff = d.x()[i] - d.x_tilde()[j];
        EXPECT_EQ(lhs, -fr.alpha()[i] * fr.alpha_tilde()[j] / (diff * diff));
      }
    }

    auto u = random_vector(rng, n, f), v = random_vector(rng, n, f);
    EXPECT_EQ(fr.form_evaluate(fr.rep_X_tilde().apply(u), v), fr.form_evaluate(u, fr.rep_X_tilde().apply(v)));
    EXPECT_EQ(fr.form_evaluate(fr.rep_X().apply(u), v), fr.form_evaluate(u, fr.rep_X().apply(v)));
    EXPECT_EQ(fr.form_evaluate(u, v), fr.form_evaluate(v, u));
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FramesRandom, ::testing::Values(0, 101, 65537));
