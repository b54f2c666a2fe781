#include "genlab/dperms.hpp"

#include <algorithm>
#include <tuple>

#include "genlab/errors.hpp"

namespace genlab {

std::string to_string(DClass c) {
  switch (c) {
    case DClass::D:
      return "dperm";
    case DClass::DCycle:
      return "dcycle";
    case DClass::Dumont:
      return "dumont";
    case DClass::DumontDerangement:
      return "dumont-derangement";
  }
  return "?";
}

DClass dclass_from_string(const std::string& s) {
  if (s == "dperm") return DClass::D;
  if (s == "dcycle") return DClass::DCycle;
  if (s == "dumont") return DClass::Dumont;
  if (s == "dumont-derangement") return DClass::DumontDerangement;
  throw InvalidArgument("unknown permutation class: " + s);
}

namespace {

// Whether x -> y is allowed.
bool step_ok(int x, int y, bool strict_odd, bool strict_even) {
  if (x % 2 == 1) return strict_odd ? x < y : x <= y;
  return strict_even ? x > y : x >= y;
}

bool all_steps(const Permutation& p, bool strict_odd, bool strict_even) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!step_ok(p.ground()[i], p.image()[i], strict_odd, strict_even)) return false;
  return true;
}

std::size_t cycle_count(const std::vector<int>& img) {
  // img holds indices into the ground set.
  std::vector<char> seen(img.size(), 0);
  std::size_t c = 0;
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img[j])) seen[j] = 1;
  }
  return c;
}

// Calls visit(image-as-indices) for each member of the class.
void enumerate_raw(const std::vector<int>& ground, DClass c, const std::function<void(const std::vector<int>&)>& visit) {
  if (ground.size() > kMaxDPermGround)
    throw SizeLimit("permutation enumeration is capped at " + std::to_string(kMaxDPermGround) + " elements");
  const std::size_t m = ground.size();
  std::vector<int> img(m, -1);
  if (m == 0) {
    if (c != DClass::DCycle) visit(img);
    return;
  }
  const bool strict_odd = c == DClass::DumontDerangement;
  const bool strict_even = c == DClass::Dumont || c == DClass::DumontDerangement;
  std::vector<char> used(m, 0);

  if (c == DClass::DCycle) {
    // Grow the cycle 0 -> a -> b -> ... -> 0.
    std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t cur, std::size_t placed) {
      if (placed == m) {
        if (step_ok(ground[cur], ground[0], false, false)) {
          img[cur] = 0;
          visit(img);
          img[cur] = -1;
        }
        return;
      }
      for (std::size_t j = 1; j < m; ++j) {
        if (used[j] || !step_ok(ground[cur], ground[j], false, false)) continue;
        used[j] = 1;
        img[cur] = static_cast<int>(j);
        grow(j, placed + 1);
        img[cur] = -1;
        used[j] = 0;
      }
    };
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
      if (used[j] || !step_ok(ground[i], ground[j], strict_odd, strict_even)) continue;
      used[j] = 1;
      img[i] = static_cast<int>(j);
      place(i + 1);
      used[j] = 0;
    }
  };
  place(0);
}

Permutation from_raw(const std::vector<int>& ground, const std::vector<int>& img) {
  std::vector<int> image(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) image[i] = ground[static_cast<std::size_t>(img[i])];
  return Permutation(ground, std::move(image));
}

std::vector<int> sorted_ground(std::vector<int> g) {
  std::sort(g.begin(), g.end());
  if (std::adjacent_find(g.begin(), g.end()) != g.end()) throw InvalidArgument("ground set has repeats");
  if (!g.empty() && g.front() <= 0) throw InvalidArgument("ground set must be positive");
  return g;
}

}  // namespace

bool is_d_permutation(const Permutation& p) { return all_steps(p, false, false); }
bool is_d_cycle(const Permutation& p) { return p.size() > 0 && p.num_cycles() == 1 && is_d_permutation(p); }
bool is_dumont(const Permutation& p) { return all_steps(p, false, true); }
bool is_dumont_derangement(const Permutation& p) { return all_steps(p, true, true); }

bool in_class(const Permutation& p, DClass c) {
  switch (c) {
    case DClass::D:
      return is_d_permutation(p);
    case DClass::DCycle:
      return is_d_cycle(p);
    case DClass::Dumont:
      return is_dumont(p);
    case DClass::DumontDerangement:
      return is_dumont_derangement(p);
  }
  return false;
}

void for_each_d_permutation(const std::vector<int>& ground, DClass c,
                            const std::function<void(const Permutation&)>& visit) {
  std::vector<int> g = sorted_ground(ground);
  enumerate_raw(g, c, [&](const std::vector<int>& img) { visit(from_raw(g, img)); });
}

std::vector<Permutation> d_permutations(const std::vector<int>& ground, DClass c) {
  std::vector<Permutation> out;
  for_each_d_permutation(ground, c, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_class(const std::vector<int>& ground, DClass c) {
  std::uint64_t n = 0;
  enumerate_raw(sorted_ground(ground), c, [&](const std::vector<int>&) { ++n; });
  return n;
}

std::map<std::size_t, std::uint64_t> count_by_cycles(const std::vector<int>& ground, DClass c) {
  std::map<std::size_t, std::uint64_t> out;
  enumerate_raw(sorted_ground(ground), c, [&](const std::vector<int>& img) { ++out[cycle_count(img)]; });
  return out;
}

std::vector<int> interval(int m) {
  std::vector<int> v;
  for (int i = 1; i <= m; ++i) v.push_back(i);
  return v;
}

std::map<std::size_t, Integer> s_d_table(int n) {
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  if (2 * static_cast<std::size_t>(n) > kMaxDPermGround) throw SizeLimit("s_D table is capped at n = 6");
  std::map<std::size_t, Integer> out;
  for (auto [k, cnt] : count_by_cycles(interval(2 * n), DClass::D)) {
    Integer v(static_cast<unsigned long>(cnt));
    out[k] = ((2 * static_cast<std::size_t>(n) - k) % 2 == 0) ? v : Integer(-v);
  }
  return out;
}

Polynomial char_poly_from_sd(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  std::vector<Rational> c;
  for (const auto& [k, v] : s_d_table(n)) {
    if (c.size() < k) c.resize(k, Rational(0));
    c[k - 1] = Rational(v);
  }
  return Polynomial(std::move(c));
}

namespace {

// sum over D on [m] of a^(even fixed points) b^(odd fixed points) c^(other cycles)
Polynomial weighted_d_sum(int m, const Polynomial& even_fp, const Polynomial& odd_fp, const Polynomial& other) {
  std::map<std::tuple<int, int, int>, std::uint64_t> stats;
  std::vector<int> g = interval(m);
  enumerate_raw(g, DClass::D, [&](const std::vector<int>& img) {
    int ef = 0;
    int of = 0;
    for (std::size_t i = 0; i < img.size(); ++i)
      if (img[i] == static_cast<int>(i)) (g[i] % 2 == 0 ? ef : of)++;
    int cyc = static_cast<int>(cycle_count(img));
    ++stats[{ef, of, cyc - ef - of}];
  });
  Polynomial sum;
  for (const auto& [key, cnt] : stats) {
    auto [ef, of, rest] = key;
    sum += pow(even_fp, static_cast<unsigned>(ef)) * pow(odd_fp, static_cast<unsigned>(of)) *
           pow(other, static_cast<unsigned>(rest)) * Rational(static_cast<unsigned long>(cnt));
  }
  return sum;
}

}  // namespace

Polynomial char_poly_even_fp(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  const Polynomial one_minus_t{1, -1};
  return Polynomial{-1, 1} * weighted_d_sum(2 * n - 2, Polynomial{0, -1}, one_minus_t, one_minus_t);
}

Polynomial reduced_sum(int n) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
  const Polynomial one_minus_t{1, -1};
  return weighted_d_sum(2 * n - 4, one_minus_t, one_minus_t, Polynomial{2, -1});
}

Polynomial char_poly_reduced_form(int n) { return pow(Polynomial{-1, 1}, 3) * reduced_sum(n); }

PowerOfTwoDecomposition power_of_two_decompositions(int n) {
  if (n < 2 || n > 7) throw SizeLimit("power-of-two decompositions need 2 <= n <= 7");
  PowerOfTwoDecomposition d;
  d.n = n;
  std::vector<int> g = interval(2 * n - 2);
  enumerate_raw(g, DClass::D, [&](const std::vector<int>& img) {
    std::size_t fp_even = 0;
    std::size_t fp = 0;
    for (std::size_t i = 0; i < img.size(); ++i) {
      if (img[i] != static_cast<int>(i)) continue;
      ++fp;
      if (g[i] % 2 == 0) ++fp_even;
    }
    std::size_t cyc = cycle_count(img);
    ++d.h_parts[cyc - fp_even];
    ++d.g_parts[cyc - fp];
  });
  d.h_total = 0;
  d.g_total = 0;
  for (auto [j, cnt] : d.h_parts) d.h_total += Integer(static_cast<unsigned long>(cnt)) << static_cast<mp_bitcnt_t>(j + 1);
  for (auto [j, cnt] : d.g_parts) d.g_total += Integer(static_cast<unsigned long>(cnt)) << static_cast<mp_bitcnt_t>(j);
  return d;
}

}  // namespace genlab
