#include <gtest/gtest.h>

#include <algorithm>

#include "cauchykit/bench.hpp"
#include "support.hpp"

using namespace testing_support;

TEST(Dixon, MatchesEliminationOracle) {
  Lcg rng(21);
  const Field f = Field::rationals();
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng.below(14);
    std::vector<Scalar> e;
    for (std::size_t k = 0; k < n * n; ++k) e.push_back(random_fraction(rng, 20, t % 3 == 0 ? 1 : 7));
    DenseMatrix m(f, n, n, e);
    auto rhs = random_vector(rng, n, f);
    auto ref = gaussian_solve_oracle(m, rhs);
    if (std::holds_alternative<Singular>(ref)) {
      EXPECT_THROW(dixon_solve(m, rhs), Error);
      continue;
    }
    EXPECT_EQ(dixon_solve(m, rhs), std::get<std::vector<Scalar>>(ref));
  }
}

TEST(Dixon, CauchySystems) {
  Lcg rng(22);
  for (std::size_t n : {1, 5, 30, 64}) {
    auto d = random_cauchy(rng, n, Field::rationals());
    auto rhs = random_vector(rng, n, Field::rationals());
    EXPECT_EQ(dixon_solve(build(d), rhs), solve(d, rhs));
  }
}

TEST(Dixon, Errors) {
  try {
    dixon_solve(qmat(2, 2, {"1", "2", "2", "4"}), qs({1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Singular);
  }
  const Field f = Field::prime(7);
  EXPECT_THROW(dixon_solve(DenseMatrix::identity(f, 2), {gf(7, 1), gf(7, 1)}), Error);
  EXPECT_THROW(dixon_solve(qmat(1, 2, {"1", "2"}), qs({1})), Error);
  EXPECT_THROW(dixon_solve(DenseMatrix::identity(Field::rationals(), 2), qs({1})), Error);
}

TEST(Bench, Data) {
  auto d = bench_data(6, 3);
  EXPECT_EQ(d, bench_data(6, 3));
  auto x = sorted(d.x()), xt = sorted(d.x_tilde());
  for (long i = 0; i < 6; ++i) {
    EXPECT_EQ(x[i], q(2 * i));
    EXPECT_EQ(xt[i], q(2 * i + 1));
  }
  for (const auto& b : bench_rhs(50, 3)) {
    EXPECT_LE(b.rational(), 9);
    EXPECT_GE(b.rational(), -9);
  }
}

TEST(Bench, SmallRun) {
  BenchOptions o;
  o.sizes = {2, 16};
  o.trials = 2;
  auto rows = run_bench(o);
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& r : rows) {
    ASSERT_TRUE(r.match.has_value());
    EXPECT_TRUE(*r.match);
  }
  // Size 2 against the hand inverse.
  auto d = bench_data(2, 1);
  auto rhs = bench_rhs(2, 1);
  EXPECT_EQ(solve(d, rhs), invert(d).apply(rhs));

  std::string csv = bench_csv(rows);
  EXPECT_EQ(csv.rfind("n,structured_us,oracle_us,match\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  EXPECT_NE(csv.find(",true\n"), std::string::npos);
}

TEST(Bench, OracleSkippedAboveLimit) {
  BenchOptions o;
  o.sizes = {8};
  o.oracle_max_n = 4;
  auto rows = run_bench(o);
  EXPECT_FALSE(rows[0].oracle_us.has_value());
  const std::string csv = bench_csv(rows);
  const std::string row = csv.substr(csv.find('\n') + 1);
  EXPECT_EQ(row.substr(row.size() - 3), ",,\n");
}

TEST(Bench, InputErrors) {
  BenchOptions o;
  o.sizes = {4};
  o.trials = 0;
  EXPECT_THROW(run_bench(o), Error);
  o.trials = 1;
  o.sizes = {};
  EXPECT_THROW(run_bench(o), Error);
  o.sizes = {1};
  EXPECT_THROW(run_bench(o), Error);
}
