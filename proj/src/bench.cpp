#include "cauchykit/bench.hpp"

#include <chrono>
#include <numeric>
#include <sstream>

#include "cauchykit/rng.hpp"

namespace cauchykit {

namespace {

double micros_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::int64_t> permutation(Lcg& rng, std::size_t n) {
  std::vector<std::int64_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  rng.shuffle(v);
  return v;
}

}  // namespace

CauchyData bench_data(std::size_t n, std::uint64_t seed) {
  if (n == 0) raise(ErrorCode::InvalidArgument, "bench size must be positive");
  const Field q = Field::rationals();
  Lcg rng(seed);
  auto p = permutation(rng, n);
  auto s = permutation(rng, n);
  std::vector<Scalar> x, xt;
  for (std::size_t i = 0; i < n; ++i) {
    x.push_back(q.from_int(2 * p[i]));
    xt.push_back(q.from_int(2 * s[i] + 1));
  }
  return CauchyData(std::move(x), std::move(xt));
}

std::vector<Scalar> bench_rhs(std::size_t n, std::uint64_t seed) {
  const Field q = Field::rationals();
  // Separate stream from the data so both can be regenerated independently.
  Lcg rng(~seed);
  std::vector<Scalar> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(q.from_int(rng.between(-9, 9)));
  return b;
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  if (options.trials == 0) raise(ErrorCode::InvalidArgument, "bench needs at least one trial");
  if (options.sizes.empty()) raise(ErrorCode::InvalidArgument, "bench needs at least one size");
  for (auto n : options.sizes)
    if (n < 2) raise(ErrorCode::InvalidArgument, "bench sizes must be at least 2, got " + std::to_string(n));

  std::vector<BenchRow> rows;
  for (auto n : options.sizes) {
    // All structured trials for a size run before any oracle trial, so the
    // oracle's working set does not leak into the structured timings.
    const std::size_t first = rows.size();
    std::vector<std::vector<Scalar>> solutions;
    for (std::size_t t = 0; t < options.trials; ++t) {
      const std::uint64_t seed = options.seed + t;
      CauchyData data = bench_data(n, seed);
      std::vector<Scalar> rhs = bench_rhs(n, seed);
      auto start = std::chrono::steady_clock::now();
      solutions.push_back(solve(data, rhs));
      rows.push_back(BenchRow{n, t, micros_since(start), std::nullopt, std::nullopt});
    }
    if (n > options.oracle_max_n) continue;
    for (std::size_t t = 0; t < options.trials; ++t) {
      const std::uint64_t seed = options.seed + t;
      DenseMatrix c = build(bench_data(n, seed));
      std::vector<Scalar> rhs = bench_rhs(n, seed);
      auto start = std::chrono::steady_clock::now();
      std::vector<Scalar> z = dixon_solve(c, rhs);
      BenchRow& row = rows[first + t];
      row.oracle_us = micros_since(start);
      row.match = solutions[t] == z;
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "n,structured_us,oracle_us,match\n";
  out.setf(std::ios::fixed);
  out.precision(0);
  for (const auto& r : rows) {
    out << r.n << ',' << r.structured_us << ',';
    if (r.oracle_us) out << *r.oracle_us;
    out << ',';
    if (r.match) out << (*r.match ? "true" : "false");
    out << '\n';
  }
  return out.str();
}

}  // namespace cauchykit
