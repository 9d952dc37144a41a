#pragma once

// Exact eigenvalue machinery used by pair verification.

#include <vector>

#include "cauchykit/matrix.hpp"
#include "cauchykit/polynomial.hpp"

namespace cauchykit::detail {

/// det(λI − m), via similarity reduction to upper Hessenberg form.
Polynomial charpoly(const DenseMatrix& m);

Polynomial poly_gcd(Polynomial a, Polynomial b);

/// Roots of f lying in its field, each with its multiplicity, sorted by the
/// scalar order. Roots outside the field are simply absent.
struct Root {
  Scalar value;
  std::size_t multiplicity;
};
std::vector<Root> roots_in_field(const Polynomial& f);

}  // namespace cauchykit::detail
