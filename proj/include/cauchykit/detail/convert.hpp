#pragma once

#include <type_traits>
#include <vector>

#include "cauchykit/field.hpp"

namespace cauchykit::detail {

template <class T>
std::vector<T> unwrap(const std::vector<Scalar>& v) {
  std::vector<T> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(std::get<T>(s.value()));
  return out;
}

template <class T>
std::vector<Scalar> wrap(std::vector<T>&& v) {
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (auto& e : v) out.emplace_back(std::move(e));
  return out;
}

// Calls fn(std::type_identity<T>{}) with T the native element type of `field`.
template <class F>
decltype(auto) visit_element(const Field& field, F&& fn) {
  if (field.is_rational()) return fn(std::type_identity<mpq_class>{});
  return fn(std::type_identity<ModP>{});
}

}  // namespace cauchykit::detail
