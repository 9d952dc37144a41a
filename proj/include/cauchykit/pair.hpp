#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cauchykit/cauchy.hpp"
#include "cauchykit/matrix.hpp"

namespace cauchykit {

/// Two n x n matrices over one field. Nothing beyond shape is assumed until
/// verify() says so.
struct CauchyPair {
  DenseMatrix X;
  DenseMatrix X_tilde;
  std::string note;

  CauchyPair(DenseMatrix x, DenseMatrix x_tilde, std::string note = {});
  std::size_t n() const noexcept { return X.n_rows(); }
  const Field& field() const noexcept { return X.field(); }
};

struct VerificationReport {
  bool diagonalizable_X = false;
  bool diagonalizable_Xt = false;
  std::size_t rank_delta = 0;
  bool spectra_in_field = false;
  bool spectra_disjoint = false;
  bool multiplicity_free = false;
  bool irreducible = false;
  // Same eigencomponent test against the X̃ eigenbasis; implied by the others.
  bool irreducible_cross_check = false;
  bool verdict = false;
  std::optional<std::string> witness;
  // Distinct eigenvalues found in the field, sorted.
  std::vector<Scalar> spectrum_X;
  std::vector<Scalar> spectrum_Xt;
};

VerificationReport verify(const CauchyPair& p);

/// Sorted spectra of a verified pair. Throws NotVerified with the witness
/// otherwise.
CauchyData eigenvalue_data(const CauchyPair& p);
CauchyData associated_matrix(const CauchyPair& p);

/// X = diag(x), X̃_ij = x_i δ_ij − α_j.
CauchyPair pair_from_data(const CauchyData& data);

/// (ξX + ζI, ξX̃ + ζI). Throws InvalidArgument for ξ = 0.
CauchyPair affine_transform(const CauchyPair& p, const Scalar& xi, const Scalar& zeta);

/// Invertible φ with φ X_p = X_q φ and φ X̃_p = X̃_q φ, if any.
std::optional<DenseMatrix> is_isomorphic(const CauchyPair& p, const CauchyPair& q);

struct Equivalence {
  Scalar zeta;      // q + ζI is isomorphic to p
  DenseMatrix phi;  // φ (X_q + ζI) = X_p φ, same for X̃
};
std::optional<Equivalence> is_equivalent(const CauchyPair& p, const CauchyPair& q);

struct EquivalenceClass {
  CauchyData label;
  // False when the characteristic divides 2n and the label is only the
  // sorted data of the first member.
  bool canonical;
  std::vector<std::size_t> members;
};

/// Partition by equivalence. Classes are ordered by their first member.
std::vector<EquivalenceClass> classify(const std::vector<CauchyPair>& pairs);

}  // namespace cauchykit
