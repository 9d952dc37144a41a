#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cauchykit/cauchy.hpp"
#include "cauchykit/matrix.hpp"

namespace cauchykit {

/// Dense exact solver over Q by p-adic lifting (Dixon): rows are scaled to
/// integers, the matrix is factored once modulo a word-sized prime, the
/// solution is lifted digit by digit and recovered by rational
/// reconstruction, then checked exactly against the scaled system. O(n^3)
/// for the factorization; knows nothing about Cauchy structure.
/// Throws InvalidArgument off Q and Singular for singular input.
std::vector<Scalar> dixon_solve(const DenseMatrix& m, const std::vector<Scalar>& rhs);

/// Benchmark instance of size n: x = 2·π(0..n-1), x̃ = 2·σ(0..n-1) + 1 for
/// LCG-drawn permutations π, σ, and rhs entries in [-9, 9].
CauchyData bench_data(std::size_t n, std::uint64_t seed);
std::vector<Scalar> bench_rhs(std::size_t n, std::uint64_t seed);

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  // The dense oracle is skipped above this size.
  std::size_t oracle_max_n = 512;
};

struct BenchRow {
  std::size_t n;
  std::size_t trial;
  double structured_us;
  std::optional<double> oracle_us;
  std::optional<bool> match;
};

/// Throws InvalidArgument for zero trials, no sizes, or a size below 2.
std::vector<BenchRow> run_bench(const BenchOptions& options);

/// Header `n,structured_us,oracle_us,match`; skipped oracle cells are empty.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace cauchykit
