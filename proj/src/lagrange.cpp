#include "cauchykit/lagrange.hpp"

#include <algorithm>

#include "cauchykit/detail/convert.hpp"
#include "cauchykit/detail/kernels.hpp"

namespace cauchykit {

namespace {

void check_lengths(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const char* what) {
  if (a.empty()) raise(ErrorCode::InvalidArgument, std::string(what) + ": need at least one node");
  if (a.size() != b.size())
    raise(ErrorCode::DimensionMismatch, std::string(what) + ": length mismatch (" + std::to_string(a.size()) +
                                            " vs " + std::to_string(b.size()) + ")");
}

// w_i = 1 / prod_{k != i} (c_i - c_k)
std::vector<Scalar> barycentric_weights(const std::vector<Scalar>& c) {
  std::vector<Scalar> w;
  w.reserve(c.size());
  const Field f = c.front().field();
  for (std::size_t i = 0; i < c.size(); ++i) {
    Scalar den = f.one();
    for (std::size_t k = 0; k < c.size(); ++k)
      if (k != i) den *= c[i] - c[k];
    w.push_back(den.inv());
  }
  return w;
}

}  // namespace

void require_distinct(const std::vector<Scalar>& values, const char* what) {
  std::vector<Scalar> sorted = values;
  std::sort(sorted.begin(), sorted.end(), scalar_less);
  auto it = std::adjacent_find(sorted.begin(), sorted.end());
  if (it != sorted.end())
    raise(ErrorCode::InvalidData, std::string(what) + ": scalar " + it->to_string() + " is repeated");
}

Polynomial lagrange_interpolate(const std::vector<Scalar>& nodes, const std::vector<Scalar>& values) {
  check_lengths(nodes, values, "lagrange_interpolate");
  const Field f = common_field(nodes);
  if (!(common_field(values) == f)) raise(ErrorCode::FieldMismatch, "nodes and values lie in different fields");
  require_distinct(nodes, "lagrange_interpolate nodes");
  const std::size_t n = nodes.size();

  // W(λ) = prod (λ - c_k), then W / (λ - c_i) by synthetic division.
  Polynomial w = Polynomial::constant(f.one());
  for (const auto& c : nodes) w = w * Polynomial::linear(c);
  const auto& wc = w.coefficients();
  auto weights = barycentric_weights(nodes);

  std::vector<Scalar> acc(n, f.zero());
  std::vector<Scalar> q(n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    Scalar scale = values[i] * weights[i];
    if (scale.is_zero()) continue;
    q[n - 1] = wc[n];
    for (std::size_t k = n - 1; k-- > 0;) q[k] = wc[k + 1] + nodes[i] * q[k + 1];
    for (std::size_t k = 0; k < n; ++k) acc[k] += scale * q[k];
  }
  return Polynomial(f, std::move(acc));
}

Scalar leading_coefficient(const std::vector<Scalar>& nodes, const std::vector<Scalar>& values) {
  check_lengths(nodes, values, "leading_coefficient");
  const Field f = common_field(nodes);
  if (!(common_field(values) == f)) raise(ErrorCode::FieldMismatch, "nodes and values lie in different fields");
  require_distinct(nodes, "leading_coefficient nodes");
  auto weights = barycentric_weights(nodes);
  Scalar s = f.zero();
  for (std::size_t i = 0; i < nodes.size(); ++i) s += values[i] * weights[i];
  return s;
}

std::vector<Scalar> solve_unit_sum_system(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  check_lengths(a, b, "solve_unit_sum_system");
  std::vector<Scalar> all = a;
  all.insert(all.end(), b.begin(), b.end());
  const Field f = common_field(all);
  require_distinct(all, "solve_unit_sum_system");
  return detail::visit_element(f, [&](auto tag) {
    using T = typename decltype(tag)::type;
    return detail::wrap(detail::unit_sum_solution(detail::unwrap<T>(a), detail::unwrap<T>(b)));
  });
}

}  // namespace cauchykit
