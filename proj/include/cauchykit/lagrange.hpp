#pragma once

#include <vector>

#include "cauchykit/polynomial.hpp"

namespace cauchykit {

/// The unique polynomial of degree < n taking values[i] at nodes[i].
/// Throws InvalidData on repeated nodes, DimensionMismatch on unequal lengths.
Polynomial lagrange_interpolate(const std::vector<Scalar>& nodes, const std::vector<Scalar>& values);

/// Coefficient of λ^{n-1} of the interpolant: sum_i d_i / prod_{k != i}(c_i - c_k).
Scalar leading_coefficient(const std::vector<Scalar>& nodes, const std::vector<Scalar>& values);

/// Unique solution of sum_i λ_i / (a_i - b_j) = 1 (j = 0..n-1):
/// λ_i = prod_k (a_i - b_k) / prod_{k != i} (a_i - a_k).
std::vector<Scalar> solve_unit_sum_system(const std::vector<Scalar>& a, const std::vector<Scalar>& b);

/// Throws InvalidData naming the first repeated scalar. `what` labels the list.
void require_distinct(const std::vector<Scalar>& values, const char* what);

}  // namespace cauchykit
