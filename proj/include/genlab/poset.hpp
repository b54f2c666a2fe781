#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "genlab/polynomial.hpp"

namespace genlab {

using LeqFn = std::function<bool(std::size_t, std::size_t)>;

/// mu(0^, x) for every element of a finite ranked poset.
///
/// Elements must be listed by nondecreasing rank with the minimum at index 0.
/// Computed by the defining recursion mu(0^,x) = -sum_{y < x} mu(0^,y).
std::vector<std::int64_t> mobius_from_bottom(const std::vector<int>& ranks, const LeqFn& leq);

/// sum_x mu(0^,x) t^(length - rk x), length = max rank.
Polynomial characteristic_polynomial(const std::vector<int>& ranks, const std::vector<std::int64_t>& mobius);

/// True when `map` (a bijection index -> index) satisfies
/// leq_a(i,j) <=> leq_b(map[i],map[j]) for all pairs.
bool is_order_isomorphism(std::size_t size, const LeqFn& leq_a, const LeqFn& leq_b,
                          const std::vector<std::size_t>& map);

}  // namespace genlab
