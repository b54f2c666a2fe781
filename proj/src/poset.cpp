#include "genlab/poset.hpp"

#include <algorithm>

#include "genlab/errors.hpp"

namespace genlab {

std::vector<std::int64_t> mobius_from_bottom(const std::vector<int>& ranks, const LeqFn& leq) {
  const std::size_t n = ranks.size();
  std::vector<std::int64_t> mu(n, 0);
  if (n == 0) return mu;
  if (!std::is_sorted(ranks.begin(), ranks.end()) || ranks[0] != 0)
    throw InvalidArgument("poset elements must be sorted by rank with the minimum first");
  mu[0] = 1;
  for (std::size_t x = 1; x < n; ++x) {
    std::int64_t sum = 0;
    for (std::size_t y = 0; y < x && ranks[y] < ranks[x]; ++y)
      if (mu[y] != 0 && leq(y, x)) sum += mu[y];
    mu[x] = -sum;
  }
  return mu;
}

Polynomial characteristic_polynomial(const std::vector<int>& ranks, const std::vector<std::int64_t>& mobius) {
  if (ranks.empty()) return Polynomial();
  int length = *std::max_element(ranks.begin(), ranks.end());
  std::vector<Rational> c(static_cast<std::size_t>(length + 1), Rational(0));
  for (std::size_t i = 0; i < ranks.size(); ++i)
    c[static_cast<std::size_t>(length - ranks[i])] += Rational(static_cast<long>(mobius[i]));
  return Polynomial(std::move(c));
}

bool is_order_isomorphism(std::size_t size, const LeqFn& leq_a, const LeqFn& leq_b,
                          const std::vector<std::size_t>& map) {
  if (map.size() != size) return false;
  std::vector<char> hit(size, 0);
  for (std::size_t m : map) {
    if (m >= size || hit[m]) return false;
    hit[m] = 1;
  }
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (leq_a(i, j) != leq_b(map[i], map[j])) return false;
  return true;
}

}  // namespace genlab
