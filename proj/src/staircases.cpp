#include "genlab/staircases.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "genlab/dperms.hpp"
#include "genlab/errors.hpp"

namespace genlab {

ExcedentFunction::ExcedentFunction(std::vector<int> values) : values_(std::move(values)) {
  const int m = static_cast<int>(values_.size());
  for (int j = 1; j <= m; ++j) {
    int v = values_[static_cast<std::size_t>(j - 1)];
    if (v < j || v > m)
      throw InvalidArgument("f(" + std::to_string(j) + ") = " + std::to_string(v) + " violates j <= f(j) <= m");
  }
}

int ExcedentFunction::preimage_size(int i) const {
  return static_cast<int>(std::count(values_.begin(), values_.end(), i));
}

nlohmann::json ExcedentFunction::to_json() const { return {{"m", m()}, {"f", values_}}; }

ExcedentFunction ExcedentFunction::from_json(const nlohmann::json& j) {
  ExcedentFunction f(j.at("f").get<std::vector<int>>());
  if (j.contains("m") && j.at("m").get<int>() != f.m()) throw InvalidArgument("staircase m does not match f");
  return f;
}

bool is_surjective_staircase(const ExcedentFunction& f) {
  if (f.m() % 2 != 0 || f.m() == 0) return false;
  std::vector<char> hit(static_cast<std::size_t>(f.m() + 1), 0);
  for (int v : f.values()) {
    if (v % 2 != 0) return false;
    hit[static_cast<std::size_t>(v)] = 1;
  }
  for (int v = 2; v <= f.m(); v += 2)
    if (!hit[static_cast<std::size_t>(v)]) return false;
  return true;
}

namespace {

void check_size(int m) {
  if (m < 0) throw InvalidArgument("ground size must be nonnegative");
  if (m > kMaxStaircaseSize)
    throw SizeLimit("staircase enumeration is capped at m = " + std::to_string(kMaxStaircaseSize));
}

// Fill f(1..m) from `choices(j)`, requiring every even value up to m to be
// hit. An even value v can only be hit by some j <= v, so once j passes v
// unhit the branch dies.
void fill_hitting_evens(int m, const std::function<std::vector<int>(int, const std::vector<int>&)>& choices,
                        const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> f(static_cast<std::size_t>(m), 0);
  std::vector<int> hits(static_cast<std::size_t>(m + 2), 0);
  std::function<void(int)> rec = [&](int j) {
    if (j > 1 && (j - 1) % 2 == 0 && hits[static_cast<std::size_t>(j - 1)] == 0) return;
    if (j > m) {
      visit(f);
      return;
    }
    for (int v : choices(j, f)) {
      f[static_cast<std::size_t>(j - 1)] = v;
      ++hits[static_cast<std::size_t>(v)];
      rec(j + 1);
      --hits[static_cast<std::size_t>(v)];
    }
  };
  rec(1);
}

}  // namespace

std::vector<int> maxima(const ExcedentFunction& f) {
  std::vector<int> out;
  for (int j = 1; j <= f.m() - 2; ++j)
    if (f(j) == f.m()) out.push_back(j);
  return out;
}

SixStatistics six_statistics(const ExcedentFunction& f) {
  if (f.m() % 2 != 0) throw InvalidArgument("six statistics need an even ground set");
  SixStatistics s;
  for (int j = 1; j <= f.m() - 2; ++j) {
    int v = f(j);
    if (v == j) (f.preimage_size(j) > 1 ? s.fd : s.fi)++;
    if (v == j + 1) (f.preimage_size(j + 1) > 1 ? s.sd : s.si)++;
    if (v == f.m()) (j % 2 == 1 ? s.mo : s.me)++;
  }
  return s;
}

void for_each_staircase(int m, bool no_even_maxima, const std::function<void(const ExcedentFunction&)>& visit) {
  check_size(m);
  if (m <= 0 || m % 2 != 0) return;
  auto choices = [m, no_even_maxima](int j, const std::vector<int>&) {
    std::vector<int> c;
    for (int v = j + (j % 2); v <= m; v += 2) {
      if (no_even_maxima && v == m && j % 2 == 0 && j <= m - 2) continue;
      c.push_back(v);
    }
    return c;
  };
  fill_hitting_evens(m, choices, [&](const std::vector<int>& f) { visit(ExcedentFunction(f)); });
}

std::vector<ExcedentFunction> staircases(int m, bool no_even_maxima) {
  std::vector<ExcedentFunction> out;
  for_each_staircase(m, no_even_maxima, [&](const ExcedentFunction& f) { out.push_back(f); });
  return out;
}

std::map<SixStatistics, std::uint64_t> six_statistics_distribution(int m) {
  std::map<SixStatistics, std::uint64_t> dist;
  for_each_staircase(m, false, [&](const ExcedentFunction& f) { ++dist[six_statistics(f)]; });
  return dist;
}

Polynomial lambda_specialized(int m, const LambdaArgs& a) {
  Polynomial sum;
  for (const auto& [s, cnt] : six_statistics_distribution(m)) {
    Polynomial term = pow(a[0], static_cast<unsigned>(s.mo)) * pow(a[1], static_cast<unsigned>(s.fd)) *
                      pow(a[2], static_cast<unsigned>(s.si)) * pow(a[3], static_cast<unsigned>(s.me)) *
                      pow(a[4], static_cast<unsigned>(s.fi)) * pow(a[5], static_cast<unsigned>(s.sd));
    sum += term * Rational(static_cast<unsigned long>(cnt));
  }
  return sum;
}

Rational lambda_at(int m, const std::array<Rational, 6>& a) {
  LambdaArgs p;
  for (std::size_t i = 0; i < 6; ++i) p[i] = Polynomial::constant(a[i]);
  return lambda_specialized(m, p).coeff(0);
}

bool in_g_set(const ExcedentFunction& g) {
  const int m = g.m();
  std::vector<char> hit(static_cast<std::size_t>(m + 1), 0);
  for (int v : g.values()) hit[static_cast<std::size_t>(v)] = 1;
  for (int v = 2; v <= m; v += 2)
    if (!hit[static_cast<std::size_t>(v)]) return false;
  for (int j = 1; j <= m; ++j) {
    bool odd_value = g(j) % 2 == 1;
    bool odd_isolated = j % 2 == 1 && g.is_isolated_fixed_point(j);
    if (odd_value != odd_isolated) return false;
  }
  return true;
}

void for_each_g_set_member(int m, const std::function<void(const ExcedentFunction&)>& visit) {
  check_size(m);
  if (m < 0) return;
  // An odd value v is only possible as g(v) = v; no other column can reach
  // v then, since that column would itself need to be the fixed point v.
  auto choices = [m](int j, const std::vector<int>&) {
    std::vector<int> c;
    if (j % 2 == 1) c.push_back(j);
    for (int v = j + (j % 2); v <= m; v += 2) c.push_back(v);
    return c;
  };
  fill_hitting_evens(m, choices, [&](const std::vector<int>& f) {
    ExcedentFunction g(f);
    if (in_g_set(g)) visit(g);
  });
}

ExcedentFunction gamma_slide(const ExcedentFunction& g) {
  if (!in_g_set(g)) throw NotInGSet("excedent function is not in the G-set");
  const int top = g.m() + 2;
  std::vector<int> f;
  for (int v : g.values()) f.push_back(v % 2 == 0 ? v : top);
  f.push_back(top);
  f.push_back(top);
  return ExcedentFunction(std::move(f));
}

ExcedentFunction gamma_unslide(const ExcedentFunction& f) {
  if (!is_surjective_staircase(f) || f.m() < 2) throw InvalidArgument("not a surjective staircase");
  if (six_statistics(f).me != 0) throw InvalidArgument("staircase has an even maximum");
  const int top = f.m();
  std::vector<int> g;
  for (int j = 1; j <= top - 2; ++j) g.push_back(f(j) == top ? j : f(j));
  return ExcedentFunction(std::move(g));
}

bool slide_properties_hold(const ExcedentFunction& g) {
  ExcedentFunction f = gamma_slide(g);
  std::vector<int> mx = maxima(f);
  for (int j = 1; j <= g.m(); ++j) {
    bool f_fixed = f(j) == j;
    bool f_isolated = f.is_isolated_fixed_point(j);
    bool f_max = std::find(mx.begin(), mx.end(), j) != mx.end();
    if ((j % 2 == 0 && g.is_fixed_point(j)) != f_fixed) return false;
    if ((j % 2 == 0 && g.is_isolated_fixed_point(j)) != f_isolated) return false;
    if ((j % 2 == 1 && g.is_isolated_fixed_point(j)) != f_max) return false;
  }
  return true;
}

PolynomialIdentity cycle_count_identity(int n) {
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  PolynomialIdentity r;
  std::vector<Rational> c;
  for (auto [k, cnt] : count_by_cycles(interval(2 * n), DClass::D)) {
    if (c.size() <= k) c.resize(k + 1, Rational(0));
    c[k] = Rational(static_cast<unsigned long>(cnt));
  }
  r.lhs = Polynomial(std::move(c));
  const Polynomial t = Polynomial::t();
  const Polynomial one = Polynomial::constant(1);
  r.rhs = lambda_specialized(2 * n + 2, {t, t, one, Polynomial(), t, one});
  r.equal = r.lhs == r.rhs;
  return r;
}

bool joint_distribution_matches(int n) {
  using Key = std::tuple<int, int, int>;
  std::map<Key, std::uint64_t> lhs;
  for_each_d_permutation(interval(2 * n), DClass::D, [&](const Permutation& p) {
    int even_max = 0;
    int even_fp = 0;
    int odd_fp = 0;
    for (const auto& cyc : p.cycles()) {
      int mx = *std::max_element(cyc.begin(), cyc.end());
      if (mx % 2 == 0) ++even_max;
      if (cyc.size() == 1) (cyc[0] % 2 == 0 ? even_fp : odd_fp)++;
    }
    ++lhs[{even_max, even_fp, odd_fp}];
  });
  std::map<Key, std::uint64_t> rhs;
  for_each_staircase(2 * n + 2, true, [&](const ExcedentFunction& f) {
    SixStatistics s = six_statistics(f);
    ++rhs[{s.fd + s.fi, s.fi, s.mo}];
  });
  return lhs == rhs;
}

std::string render_tableau(const ExcedentFunction& f, bool even_rows_only) {
  const int m = f.m();
  const int w = static_cast<int>(std::to_string(m).size());
  std::ostringstream os;
  auto pad = [&](const std::string& s) { return std::string(static_cast<std::size_t>(w) - s.size(), ' ') + s; };
  os << pad("") << ' ';
  for (int j = 1; j <= m; ++j) os << ' ' << pad(std::to_string(j));
  os << '\n';
  for (int row = m; row >= 1; --row) {
    if (even_rows_only && row % 2 != 0) continue;
    os << pad(std::to_string(row)) << ' ';
    for (int j = 1; j <= row; ++j) os << ' ' << pad(f(j) == row ? "X" : ".");
    os << '\n';
  }
  return os.str();
}

}  // namespace genlab
