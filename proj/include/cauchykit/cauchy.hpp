#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cauchykit/field.hpp"
#include "cauchykit/matrix.hpp"

namespace cauchykit {

/// Ordered scalar lists (x, x̃) of equal length n >= 1 whose 2n entries are
/// pairwise distinct. The constructor enforces this (InvalidData).
class CauchyData {
 public:
  CauchyData(std::vector<Scalar> x, std::vector<Scalar> x_tilde);

  const Field& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return x_.size(); }
  const std::vector<Scalar>& x() const noexcept { return x_; }
  const std::vector<Scalar>& x_tilde() const noexcept { return x_tilde_; }

  /// (x̃, x): the data of C̃.
  CauchyData swapped() const { return CauchyData(x_tilde_, x_); }

  friend bool operator==(const CauchyData&, const CauchyData&) = default;

 private:
  Field field_;
  std::vector<Scalar> x_;
  std::vector<Scalar> x_tilde_;
};

/// A Cauchy matrix held by its data. The scalings α, α̃ are computed once on
/// first use; copies share the cache, which is safe across threads.
class StructuredCauchy {
 public:
  explicit StructuredCauchy(CauchyData data);

  const CauchyData& data() const noexcept { return data_; }
  std::size_t n() const noexcept { return data_.n(); }

  Scalar entry(std::size_t i, std::size_t j) const;
  const std::vector<Scalar>& alpha() const;
  const std::vector<Scalar>& alpha_tilde() const;

  DenseMatrix build() const;
  DenseMatrix invert() const;
  std::vector<Scalar> solve(const std::vector<Scalar>& rhs) const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Scalar> alpha;
    std::vector<Scalar> alpha_tilde;
  };
  const Cache& cache() const;

  CauchyData data_;
  std::shared_ptr<Cache> cache_;
};

DenseMatrix build(const CauchyData& data);
Scalar entry(const CauchyData& data, std::size_t i, std::size_t j);
/// (α, α̃) by the product formulas.
std::pair<std::vector<Scalar>, std::vector<Scalar>> alphas(const CauchyData& data);
/// C⁻¹ with (i, j) entry α̃_i α_j / (x̃_i − x_j), in O(n²).
DenseMatrix invert(const CauchyData& data);
/// y with C y = rhs, as Ã (C̃ (A rhs)); C⁻¹ is never formed.
std::vector<Scalar> solve(const CauchyData& data, const std::vector<Scalar>& rhs);

struct NotCauchy {
  enum class Kind { ZeroEntry, EntryMismatch, DuplicateScalar };
  Kind kind;
  // Offending entry for ZeroEntry / EntryMismatch. For DuplicateScalar, the two
  // colliding positions in the list x_0..x_{n-1}, x̃_0..x̃_{n-1}.
  std::size_t row;
  std::size_t col;
  std::string description;
};

const char* kind_name(NotCauchy::Kind kind);

/// Recovers data with x̃_0 = 0 or reports the first failure.
/// Throws DimensionMismatch for non-square input.
std::variant<CauchyData, NotCauchy> recognize(const DenseMatrix& m);

CauchyData shift_data(const CauchyData& data, const Scalar& zeta);

/// The shift ζ with {b.x} = {a.x + ζ} and {b.x̃} = {a.x̃ + ζ} as multisets,
/// if one exists.
std::optional<Scalar> perm_equivalent(const CauchyData& a, const CauchyData& b);

/// D C − C D̃ with D = diag(x), D̃ = diag(x̃). Always the all-ones matrix.
DenseMatrix displacement_residual(const CauchyData& data);

struct IdentityCheck {
  std::string name;
  bool passed;
  std::string detail;
};

/// Exact checks of the closed-form identities satisfied by every Cauchy
/// matrix. Inverse row/column sums are taken from the elimination oracle.
std::vector<IdentityCheck> check_identities(const CauchyData& data);

}  // namespace cauchykit
