#pragma once

#include <string_view>
#include <vector>

#include "cauchykit/cauchy.hpp"
#include "cauchykit/matrix.hpp"

namespace cauchykit {

/// The four bases: the X-standard basis ε, the X̃-standard basis ε̃ of index
/// γ, and their duals ε*, ε̃* under the invariant form.
enum class BasisTag { Eps, EpsTilde, EpsStar, EpsTildeStar };

const char* basis_name(BasisTag tag);
/// Accepts "eps", "eps-tilde", "eps-star", "eps-tilde-star".
BasisTag parse_basis(std::string_view text);

/// Coordinates fixed by eigenvalue data, the index γ and the form scale ρ.
/// Every matrix below is written in ε-coordinates (ε_i = e_i).
class Frame {
 public:
  /// Throws InvalidArgument when γ or ρ is zero, FieldMismatch when they are
  /// not in the data's field.
  Frame(CauchyData data, Scalar gamma, Scalar rho);

  const CauchyData& data() const noexcept { return data_; }
  const Scalar& gamma() const noexcept { return gamma_; }
  const Scalar& rho() const noexcept { return rho_; }
  Scalar rho_tilde() const { return -rho_ * gamma_ * gamma_; }
  Scalar gamma_tilde() const { return gamma_.inv(); }
  const std::vector<Scalar>& alpha() const noexcept { return alpha_; }
  const std::vector<Scalar>& alpha_tilde() const noexcept { return alpha_tilde_; }
  std::size_t n() const noexcept { return data_.n(); }

  DenseMatrix rep_X() const;
  DenseMatrix rep_Delta() const;
  DenseMatrix rep_X_tilde() const;

  /// B with v_j = sum_i B_ij u_i, u the `from` basis and v the `to` basis.
  DenseMatrix transition(BasisTag from, BasisTag to) const;
  /// B_ij = <u_i, v_j>.
  DenseMatrix gram(BasisTag left, BasisTag right) const;
  /// u^T (ρA) v for ε-coordinate vectors.
  Scalar form_evaluate(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const;
  /// Columns: the X̃-standard basis of index γ' in ε-coordinates.
  DenseMatrix standard_basis_for_index(const Scalar& gamma_prime) const;

 private:
  CauchyData data_;
  Scalar gamma_;
  Scalar rho_;
  std::vector<Scalar> alpha_;
  std::vector<Scalar> alpha_tilde_;
};

}  // namespace cauchykit
