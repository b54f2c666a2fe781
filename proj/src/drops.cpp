#include "genlab/drops.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <iomanip>
#include <sstream>

#include "genlab/bond_lattice.hpp"
#include "genlab/dperms.hpp"
#include "genlab/errors.hpp"
#include "genlab/genfun.hpp"

namespace genlab {

FinitePoset FinitePoset::make(std::vector<int> ground, const std::function<bool(int, int)>& leq) {
  FinitePoset p;
  p.ground_ = std::move(ground);
  const std::size_t n = p.ground_.size();
  p.le_.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.le_[i][j] = leq(p.ground_[i], p.ground_[j]) ? 1 : 0;
  return p;
}

FinitePoset FinitePoset::antichain(int size) {
  return make(interval(size), [](int x, int y) { return x == y; });
}

FinitePoset FinitePoset::chain(int size) {
  return make(interval(size), [](int x, int y) { return x <= y; });
}

bool FinitePoset::is_partial_order() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!le_[i][i]) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && le_[i][j] && le_[j][i]) return false;
      for (std::size_t k = 0; k < n; ++k)
        if (le_[i][j] && le_[j][k] && !le_[i][k]) return false;
    }
  }
  return true;
}

SimpleGraph FinitePoset::incomparability_graph() const {
  SimpleGraph g;
  g.n = static_cast<int>(size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (!le_[i][j] && !le_[j][i]) g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return g;
}

FinitePoset parity_poset(int m) {
  if (m < 0) throw InvalidArgument("size must be nonnegative");
  return FinitePoset::make(interval(m), [](int x, int y) {
    if (x % 2 == y % 2) return x <= y;
    return x < y && x % 2 == 0;
  });
}

bool parity_poset_matches_ferrers(int n) {
  FinitePoset p = parity_poset(2 * n);
  if (!p.is_partial_order()) return false;
  std::vector<std::pair<int, int>> inc;
  for (auto [a, b] : p.incomparability_graph().edges) inc.emplace_back(p.ground()[a], p.ground()[b]);
  std::vector<std::pair<int, int>> fer;
  FerrersGraph graph = FerrersGraph::build(interval(2 * n));
  for (const auto& e : graph.edges())
    fer.emplace_back(std::min(e.odd, e.even), std::max(e.odd, e.even));
  std::sort(inc.begin(), inc.end());
  std::sort(fer.begin(), fer.end());
  return inc == fer;
}

namespace {

// dp over the set of images already used; element i = popcount(mask) is
// assigned next.
std::vector<std::uint64_t> drop_dp(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& is_drop) {
  if (n > static_cast<std::size_t>(kMaxDropGround))
    throw SizeLimit("drop tables are capped at " + std::to_string(kMaxDropGround) + " elements");
  const std::size_t full = std::size_t{1} << n;
  std::vector<std::vector<std::uint64_t>> dp(full, std::vector<std::uint64_t>(n + 1, 0));
  dp[0][0] = 1;
  for (std::size_t mask = 0; mask < full; ++mask) {
    const std::size_t i = static_cast<std::size_t>(std::popcount(mask));
    if (i == n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      const std::size_t add = is_drop(i, j) ? 1 : 0;
      auto& dst = dp[mask | (std::size_t{1} << j)];
      for (std::size_t k = 0; k + add <= n; ++k) dst[k + add] += dp[mask][k];
    }
  }
  std::vector<std::uint64_t> out = dp[full - 1];
  out.resize(n == 0 ? 1 : n);
  return out;
}

}  // namespace

std::vector<std::uint64_t> p_drop_table(const FinitePoset& p) {
  return drop_dp(p.size(), [&p](std::size_t i, std::size_t j) { return p.less(j, i); });
}

std::vector<std::uint64_t> d_table(int m) {
  if (m < 0) throw InvalidArgument("size must be nonnegative");
  return drop_dp(static_cast<std::size_t>(m), [](std::size_t i, std::size_t j) {
    const std::size_t x = i + 1, y = j + 1;
    return x > y && !(x % 2 == 0 && y % 2 == 1);
  });
}

Polynomial chi_from_drops(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  const int m = 2 * n;
  std::vector<std::uint64_t> d = d_table(m);
  Polynomial sum;
  const Polynomial t = Polynomial::t();
  for (int k = 0; k <= m - 1; ++k) {
    if (d[static_cast<std::size_t>(k)] == 0) continue;
    sum += Rational(Integer(std::to_string(d[static_cast<std::size_t>(k)]))) *
           rising_factorial(t + Polynomial{1}, static_cast<unsigned>(k)) *
           falling_factorial(t - Polynomial{1}, static_cast<unsigned>(m - 1 - k));
  }
  sum *= Rational(1) / Rational(factorial(static_cast<unsigned>(m)));
  sum.require_integral("drop expansion of the characteristic polynomial");
  return sum;
}

Integer genocchi_from_drops(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  const int m = 2 * n;
  std::vector<std::uint64_t> d = d_table(m);
  Integer sum(0);
  for (int k = 0; k <= m - 1; ++k) {
    Integer term = Integer(std::to_string(d[static_cast<std::size_t>(k)])) * factorial(static_cast<unsigned>(k)) *
                   factorial(static_cast<unsigned>(m - 1 - k));
    sum += (k % 2 == 0) ? term : Integer(-term);
  }
  Integer f = factorial(static_cast<unsigned>(m));
  if (sum % f != 0) throw IntegralityFailure("drop formula for g_n is not integral");
  return sum / f;
}

CheckOutcome chung_graham_check(const FinitePoset& p) {
  if (p.size() == 0) throw InvalidArgument("poset must be nonempty");
  if (p.size() > 8) throw SizeLimit("chung-graham check is capped at 8 elements");
  CheckOutcome o{true, {{"size", p.size()}}};
  if (!p.is_partial_order()) {
    o.ok = false;
    o.witness["error"] = "relation is not a partial order";
    return o;
  }
  Polynomial lhs = chromatic_polynomial(p.incomparability_graph());
  std::vector<std::uint64_t> d = p_drop_table(p);
  Polynomial rhs;
  for (std::size_t k = 0; k < d.size(); ++k)
    rhs += Rational(Integer(std::to_string(d[k]))) *
           binomial(Polynomial::t() + Polynomial::constant(Rational(static_cast<long>(k))),
                    static_cast<unsigned>(p.size()));
  o.witness["d"] = d;
  o.witness["chromatic"] = lhs.to_string();
  o.witness["expansion"] = rhs.to_string();
  o.ok = lhs == rhs;
  return o;
}

bool has_only_eo_drops(const Permutation& p) {
  const auto drops = p.drops();
  return std::all_of(drops.begin(), drops.end(), [](const auto& d) { return d.first % 2 == 0 && d.second % 2 != 0; });
}

bool has_only_eo_descents(const std::vector<int>& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1] && !(w[i] % 2 == 0 && w[i + 1] % 2 != 0)) return false;
  return true;
}

namespace {

bool eo_step(int x, int y) { return y >= x || (x % 2 == 0 && y % 2 != 0); }

// Index-image backtracking; `first` pins the image of index 0 (the next
// element of the cycle in cycle mode).
void eo_search(const std::vector<int>& g, bool cycles_only, std::optional<std::size_t> first,
               const std::function<void(const std::vector<int>&)>& visit) {
  const std::size_t m = g.size();
  std::vector<int> img(m, -1);
  if (m == 0) {
    if (!cycles_only) visit(img);
    return;
  }
  std::vector<char> used(m, 0);
  if (cycles_only) {
    std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t cur, std::size_t placed) {
      if (placed == m) {
        if (eo_step(g[cur], g[0])) {
          img[cur] = 0;
          visit(img);
          img[cur] = -1;
        }
        return;
      }
      for (std::size_t j = 1; j < m; ++j) {
        if (used[j] || !eo_step(g[cur], g[j])) continue;
        if (cur == 0 && first && *first != j) continue;
        used[j] = 1;
        img[cur] = static_cast<int>(j);
        grow(j, placed + 1);
        img[cur] = -1;
        used[j] = 0;
      }
    };
    if (m == 1) {
      if (!first || *first == 0) {
        img[0] = 0;
        visit(img);
      }
      return;
    }
    used[0] = 1;
    grow(0, 1);
    return;
  }
  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == m) {
      visit(img);
      return;
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j] || !eo_step(g[i], g[j])) continue;
      if (i == 0 && first && *first != j) continue;
      used[j] = 1;
      img[i] = static_cast<int>(j);
      place(i + 1);
      used[j] = 0;
    }
    img[i] = -1;
  };
  place(0);
}

std::vector<int> checked_ground(const std::vector<int>& ground) {
  std::vector<int> g = ground;
  std::sort(g.begin(), g.end());
  if (std::adjacent_find(g.begin(), g.end()) != g.end()) throw InvalidArgument("ground set has duplicates");
  if (!g.empty() && g.front() <= 0) throw InvalidArgument("ground set must be positive integers");
  if (g.size() > static_cast<std::size_t>(kMaxDropGround))
    throw SizeLimit("even-odd drop search is capped at " + std::to_string(kMaxDropGround) + " elements");
  return g;
}

std::size_t index_cycles(const std::vector<int>& img) {
  std::vector<char> seen(img.size(), 0);
  std::size_t c = 0;
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img[j])) seen[j] = 1;
  }
  return c;
}

// Runs one search per image of the first element and merges the results.
template <class T>
T split_on_first(const std::vector<int>& g, bool cycles_only, T zero,
                 const std::function<void(T&, const std::vector<int>&)>& add,
                 const std::function<void(T&, const T&)>& merge) {
  if (g.size() <= 1) {
    T acc = zero;
    eo_search(g, cycles_only, std::nullopt, [&](const std::vector<int>& img) { add(acc, img); });
    return acc;
  }
  std::vector<std::future<T>> parts;
  for (std::size_t j = 0; j < g.size(); ++j) {
    parts.push_back(std::async(std::launch::async, [&, j] {
      T acc = zero;
      eo_search(g, cycles_only, j, [&](const std::vector<int>& img) { add(acc, img); });
      return acc;
    }));
  }
  T total = zero;
  for (auto& f : parts) merge(total, f.get());
  return total;
}

}  // namespace

void for_each_eo_drop_permutation(const std::vector<int>& ground, bool cycles_only,
                                  const std::function<void(const Permutation&)>& visit) {
  std::vector<int> g = checked_ground(ground);
  eo_search(g, cycles_only, std::nullopt, [&](const std::vector<int>& img) {
    std::vector<int> image(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) image[i] = g[static_cast<std::size_t>(img[i])];
    visit(Permutation(g, image));
  });
}

std::uint64_t count_eo_drop(const std::vector<int>& ground, bool cycles_only) {
  std::vector<int> g = checked_ground(ground);
  return split_on_first<std::uint64_t>(
      g, cycles_only, 0, [](std::uint64_t& acc, const std::vector<int>&) { ++acc; },
      [](std::uint64_t& a, const std::uint64_t& b) { a += b; });
}

std::map<std::size_t, std::uint64_t> eo_drop_by_cycles(const std::vector<int>& ground) {
  using Dist = std::map<std::size_t, std::uint64_t>;
  std::vector<int> g = checked_ground(ground);
  return split_on_first<Dist>(
      g, false, Dist{}, [](Dist& acc, const std::vector<int>& img) { ++acc[index_cycles(img)]; },
      [](Dist& a, const Dist& b) {
        for (const auto& [k, v] : b) a[k] += v;
      });
}

std::uint64_t count_eo_descent(int m) {
  if (m < 0) throw InvalidArgument("size must be nonnegative");
  if (m > kMaxDropGround) throw SizeLimit("descent search is capped at " + std::to_string(kMaxDropGround));
  std::vector<char> used(static_cast<std::size_t>(m) + 1, 0);
  std::uint64_t count = 0;
  std::function<void(int, int)> place = [&](int pos, int prev) {
    if (pos == m) {
      ++count;
      return;
    }
    for (int v = 1; v <= m; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      if (prev > v && !(prev % 2 == 0 && v % 2 != 0)) continue;
      used[static_cast<std::size_t>(v)] = 1;
      place(pos + 1, v);
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  place(0, 0);
  return count;
}

namespace {

std::string padded(const std::string& prefix, int n) {
  std::ostringstream os;
  os << prefix << std::setw(2) << std::setfill('0') << n;
  return os.str();
}

nlohmann::json dist_json(const std::map<std::size_t, std::uint64_t>& d) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : d) j[std::to_string(k)] = v;
  return j;
}

const char* kSingletonConvention = "a fixed point on a one-element set counts as a cycle on both sides";

CheckOutcome verdict(CheckOutcome o, bool holds) {
  o.ok = holds;
  o.witness["verdict"] = holds ? "holds" : "CONJECTURE-FALSIFIED";
  if (!holds) o.witness["falsified"] = true;
  return o;
}

CheckOutcome cycles_on_interval(int n) {
  std::vector<int> a = interval(2 * n);
  std::uint64_t lhs = count_eo_drop(a, true);
  std::uint64_t rhs = count_class(a, DClass::DCycle);
  Integer g = genocchi_g(n);
  CheckOutcome o{false, {{"n", n}, {"lhs", lhs}, {"rhs", rhs}, {"g_n", to_json(g)}}};
  return verdict(o, lhs == rhs && Integer(std::to_string(lhs)) == g);
}

CheckOutcome cycles_on_subsets(int universe) {
  CheckOutcome o{false, {{"universe", universe}, {"convention", kSingletonConvention}}};
  std::uint64_t tested = 0, largest = 0;
  for (std::uint32_t mask = 1; mask < (1u << universe); ++mask) {
    std::vector<int> a;
    for (int i = 0; i < universe; ++i)
      if (mask & (1u << i)) a.push_back(i + 1);
    std::uint64_t lhs = count_eo_drop(a, true);
    std::uint64_t rhs = count_class(a, DClass::DCycle);
    ++tested;
    largest = std::max(largest, lhs);
    if (lhs != rhs) {
      o.witness["A"] = a;
      o.witness["lhs"] = lhs;
      o.witness["rhs"] = rhs;
      o.witness["subsets_tested"] = tested;
      return verdict(o, false);
    }
  }
  o.witness["subsets_tested"] = tested;
  o.witness["largest_count"] = largest;
  return verdict(o, true);
}

CheckOutcome cycle_distribution(int n) {
  std::vector<int> a = interval(2 * n);
  auto lhs = eo_drop_by_cycles(a);
  auto rhs = count_by_cycles(a, DClass::D);
  std::uint64_t total = 0;
  for (const auto& [k, v] : lhs) total += v;
  Integer h = genocchi_h(n);
  CheckOutcome o{false, {{"n", n}, {"lhs", dist_json(lhs)}, {"rhs", dist_json(rhs)}, {"total", total}, {"h_n", to_json(h)}}};
  return verdict(o, lhs == rhs && Integer(std::to_string(total)) == h);
}

CheckOutcome mobius_by_support(int n) {
  BondLattice bl = build_bond_lattice(2 * n);
  std::map<SetPartition, std::uint64_t> by_support;
  for_each_eo_drop_permutation(interval(2 * n), false,
                               [&](const Permutation& p) { ++by_support[p.cycle_support()]; });
  CheckOutcome o{false, {{"n", n}, {"lattice_size", bl.poset.size()}, {"supports", by_support.size()}}};
  for (const auto& [support, count] : by_support) {
    if (!bl.poset.contains(support)) {
      o.witness["support_outside_lattice"] = support.to_string();
      return verdict(o, false);
    }
  }
  for (std::size_t i = 0; i < bl.poset.size(); ++i) {
    const SetPartition& x = bl.poset.elements()[i];
    std::int64_t mu = bl.poset.mobius_values()[i];
    std::uint64_t lhs = by_support.count(x) ? by_support.at(x) : 0;
    if (static_cast<std::uint64_t>(mu < 0 ? -mu : mu) != lhs) {
      o.witness["partition"] = x.to_string();
      o.witness["lhs"] = lhs;
      o.witness["rhs"] = mu;
      return verdict(o, false);
    }
  }
  return verdict(o, true);
}

}  // namespace

VerificationReport conjecture_checks(const ConjectureOptions& opts) {
  if (opts.max_n < 1) throw InvalidArgument("max_n must be positive");
  if (opts.max_n > 6) throw SizeLimit("conjecture checks are capped at n = 6");
  if (opts.subset_universe > 10) throw SizeLimit("subset universe is capped at 10");
  std::vector<PendingCheck> checks;
  if (opts.include_cycles) {
    for (int n = 1; n <= opts.max_n; ++n)
      checks.push_back({padded("eo-cycles/n=", n), "cycles on [2n] with only even-odd drops vs g_n",
                        [n] { return cycles_on_interval(n); }});
    if (opts.subset_universe > 0) {
      int u = opts.subset_universe;
      checks.push_back({"eo-cycles/subsets", "cycles with only even-odd drops vs D-cycles on every A",
                        [u] { return cycles_on_subsets(u); }});
    }
  }
  if (opts.include_full) {
    for (int n = 1; n <= std::min(opts.max_n, opts.by_cycles_max_n); ++n)
      checks.push_back({padded("eo-perms-by-cycles/n=", n),
                        "permutations with only even-odd drops vs D-permutations, by cycle count",
                        [n] { return cycle_distribution(n); }});
    for (int n = 1; n <= std::min(opts.max_n, opts.mobius_max_n); ++n)
      checks.push_back({padded("eo-perms-by-support/n=", n),
                        "permutations with only even-odd drops by cycle support vs |mu|",
                        [n] { return mobius_by_support(n); }});
  }
  return run_checks("conjectures", std::move(checks));
}

}  // namespace genlab
