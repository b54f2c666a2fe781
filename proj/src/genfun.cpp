#include "genlab/genfun.hpp"

#include <functional>
#include <random>

#include "genlab/dperms.hpp"
#include "genlab/errors.hpp"
#include "genlab/staircases.hpp"

namespace genlab {

namespace {

void check_order(int order) {
  if (order < 0) throw InvalidArgument("series order must be nonnegative");
  if (order > kMaxSeriesOrder) throw SizeLimit("series order is capped at " + std::to_string(kMaxSeriesOrder));
}

Polynomial poly(const Rational& c) { return Polynomial::constant(c); }
Polynomial poly(const Integer& c) { return Polynomial::constant(Rational(c)); }
template <class T, class U>
Polynomial poly(const __gmp_expr<T, U>& e) { return poly(Integer(e)); }

// sum_{n=start}^{order} numer(n) u^n * prod_{k=k_lo}^{k_hi(n)} 1/(1 - root(k) u)
TruncatedSeries quotient_sum(int order, int start, const std::function<Polynomial(int)>& numer,
                             const std::function<Polynomial(int)>& root, int k_lo,
                             const std::function<int(int)>& k_hi) {
  TruncatedSeries total(order);
  TruncatedSeries denom = TruncatedSeries::one(order);
  int have = k_lo - 1;  // factors k_lo..have are in denom
  for (int n = start; n <= order; ++n) {
    for (int k = have + 1; k <= k_hi(n); ++k) denom *= series_inverse_linear(Rational(1), root(k), order);
    have = std::max(have, k_hi(n));
    Polynomial c = numer(n);
    if (c.is_zero()) continue;
    total += TruncatedSeries::monomial(order, n, c) * denom;
  }
  return total;
}

Rational rpow(const Rational& b, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

nlohmann::json poly_json(const Polynomial& p) { return p.to_string(); }

}  // namespace

std::string to_string(GenocchiSeries which) {
  switch (which) {
    case GenocchiSeries::GFactorials:
      return "g-factorials";
    case GenocchiSeries::HFactorials:
      return "h-factorials";
    case GenocchiSeries::GSquares:
      return "g-squares";
    case GenocchiSeries::HSquares:
      return "h-squares";
  }
  return "?";
}

Integer genocchi_g_enumerated(int n) {
  if (n < 1) throw InvalidArgument("g_n needs n >= 1");
  return Integer(static_cast<unsigned long>(count_class(interval(2 * n - 2), DClass::Dumont)));
}

Integer genocchi_h_enumerated(int n) {
  if (n < 0) throw InvalidArgument("h_n needs n >= 0");
  return Integer(static_cast<unsigned long>(count_class(interval(2 * n + 2), DClass::DumontDerangement)));
}

Integer genocchi_g_series(int n) {
  if (n < 1) throw InvalidArgument("g_n needs n >= 1");
  return integer_coefficient(genocchi_series(GenocchiSeries::GFactorials, n), n);
}

Integer genocchi_h_series(int n) {
  if (n < 0) throw InvalidArgument("h_n needs n >= 0");
  return integer_coefficient(genocchi_series(GenocchiSeries::HFactorials, n), n);
}

Integer genocchi_g(int n) {
  if (2 * n - 2 <= static_cast<int>(kMaxDPermGround)) return genocchi_g_enumerated(n);
  return genocchi_g_series(n);
}

Integer genocchi_h(int n) {
  if (2 * n + 2 <= static_cast<int>(kMaxDPermGround)) return genocchi_h_enumerated(n);
  return genocchi_h_series(n);
}

std::uint64_t alternating_parity_count(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  const int m = 2 * n - 1;
  if (m > 11) throw SizeLimit("parity-descent count is capped at n = 6");
  std::vector<char> used(static_cast<std::size_t>(m + 1), 0);
  std::uint64_t count = 0;
  std::function<void(int, int)> rec = [&](int placed, int last) {
    if (placed == m) {
      ++count;
      return;
    }
    for (int v = 1; v <= m; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      if (placed > 0 && ((last % 2 == 0) != (last > v))) continue;
      used[static_cast<std::size_t>(v)] = 1;
      rec(placed + 1, v);
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(0, 0);
  return count;
}

std::vector<Rational> tangent_coefficients(int order) {
  std::vector<Rational> a(static_cast<std::size_t>(order + 1), Rational(0));
  for (int k = 0; k < order; ++k) {
    Rational s = k == 0 ? Rational(1) : Rational(0);
    for (int i = 0; i <= k; ++i) s += a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(k - i)];
    a[static_cast<std::size_t>(k + 1)] = s / Rational(k + 1);
  }
  return a;
}

Integer genocchi_from_tangent(int n) {
  if (n < 1) throw InvalidArgument("g_n needs n >= 1");
  Rational a = tangent_coefficients(2 * n - 1)[static_cast<std::size_t>(2 * n - 1)];
  Rational v = a * Rational(factorial(static_cast<unsigned>(2 * n)));
  v /= Rational(Integer(1) << static_cast<mp_bitcnt_t>(2 * n - 1));
  if (!is_integer(v)) throw IntegralityFailure("tangent-series Genocchi value is not an integer");
  return v.get_num();
}

TruncatedSeries genocchi_series(GenocchiSeries which, int order) {
  check_order(order);
  auto fact = [](int k) -> Integer { return factorial(static_cast<unsigned>(k)); };
  auto square_root = [](int k) { return poly(Rational(-k * k)); };
  auto oblong_root = [](int k) { return poly(Rational(-k * (k + 1))); };
  auto upto_n = [](int n) { return n; };
  switch (which) {
    case GenocchiSeries::GFactorials:
      return quotient_sum(
          order, 1, [&](int n) { return poly(fact(n - 1) * fact(n)); }, square_root, 1, upto_n);
    case GenocchiSeries::HFactorials:
      return quotient_sum(
          order, 0, [&](int n) { return poly(fact(n) * fact(n + 1)); }, oblong_root, 1, upto_n);
    case GenocchiSeries::GSquares:
      return quotient_sum(
          order, 0, [&](int n) { return poly(fact(n) * fact(n)); }, square_root, 1, upto_n);
    case GenocchiSeries::HSquares:
      return quotient_sum(
          order, 1, [&](int n) { return poly(fact(n) * fact(n)); }, oblong_root, 1, upto_n);
  }
  throw InvalidArgument("unknown series");
}

Integer integer_coefficient(const TruncatedSeries& s, int k) {
  const Polynomial& c = s.coeff(k);
  if (c.degree() > 0 || !c.is_integral())
    throw IntegralityFailure("coefficient " + std::to_string(k) + " is not an integer: " + c.to_string());
  return c.coeff(0).get_num();
}

namespace {

Polynomial t_minus(long a) { return Polynomial::linear(Rational(1), Rational(-a)); }

// k(t-k) = k t - k^2
Polynomial chi_root(int k) { return Polynomial::linear(Rational(k), Rational(-k * k)); }

}  // namespace

TruncatedSeries chi_generating_series(int order) {
  check_order(order);
  return quotient_sum(
      order, 1,
      [](int n) {
        return falling_factorial(t_minus(1), static_cast<unsigned>(n)) *
               falling_factorial(t_minus(1), static_cast<unsigned>(n - 1));
      },
      chi_root, 1, [](int n) { return n; });
}

TruncatedSeries shifted_chi_series(int order) {
  check_order(order);
  return quotient_sum(
      order, 1,
      [](int n) { return t_minus(1) * pow(falling_factorial(t_minus(1), static_cast<unsigned>(n)), 2); },
      chi_root, 1, [](int n) { return n; });
}

TruncatedSeries reduced_chi_series(int order) {
  check_order(order);
  return quotient_sum(
      order, 1, [](int n) { return pow(falling_factorial(t_minus(2), static_cast<unsigned>(n - 1)), 2); },
      chi_root, 1, [](int n) { return n; });
}

TruncatedSeries median_genocchi_closing_series(int order) {
  check_order(order);
  TruncatedSeries s = quotient_sum(
      order, 1,
      [](int n) {
        Integer f = factorial(static_cast<unsigned>(n));
        return poly(Integer(2 * f * f));
      },
      [](int k) { return poly(Rational(-k * (k + 1))); }, 1, [](int n) { return n - 1; });
  s.coeff(0) += Polynomial::constant(1);
  return s;
}

TruncatedSeries six_variable_series(int order, const std::array<Rational, 6>& p) {
  check_order(order);
  const Rational &x = p[0], &y = p[1], &z = p[2], &xb = p[3], &yb = p[4], &zb = p[5];
  auto rising = [](const Rational& a, int n) {
    Rational r(1);
    for (int i = 0; i < n; ++i) r *= a + Rational(i);
    return r;
  };
  return quotient_sum(
      order, 1, [&](int n) { return poly(Rational(rising(x + zb, n - 1) * rising(y + xb, n - 1))); },
      [&](int k) {
        Rational c = (x + k) * (yb - y) - (xb + k) * (zb - z) - (x + k) * (xb + k);
        return poly(c);
      },
      0, [](int n) { return n - 1; });
}

CheckOutcome check_chi_series(int order) {
  TruncatedSeries s = chi_generating_series(order);
  CheckOutcome o{true, nlohmann::json::array()};
  for (int n = 1; n <= order; ++n) {
    Polynomial expect = char_poly_even_fp(n);
    bool ok = s.coeff(n) == expect;
    o.ok = o.ok && ok && s.coeff(n).is_integral();
    o.witness.push_back({{"n", n}, {"series", poly_json(s.coeff(n))}, {"formula", poly_json(expect)}, {"ok", ok}});
  }
  return o;
}

CheckOutcome check_shifted_chi_series(int order) {
  TruncatedSeries s = shifted_chi_series(order);
  CheckOutcome o{true, nlohmann::json::array()};
  for (int n = 1; n <= order; ++n) {
    Polynomial expect = char_poly_even_fp(n + 1);
    bool ok = s.coeff(n) == expect;
    o.ok = o.ok && ok;
    o.witness.push_back({{"n", n}, {"series", poly_json(s.coeff(n))}, {"formula", poly_json(expect)}, {"ok", ok}});
  }
  return o;
}

CheckOutcome check_reduced_chi_series(int order) {
  TruncatedSeries s = reduced_chi_series(order);
  const Polynomial cube = pow(t_minus(1), 3);
  CheckOutcome o{true, nlohmann::json::array()};
  for (int n = 1; n <= order; ++n) {
    Polynomial expect = char_poly_even_fp(n + 1).divide_exact(cube);
    bool ok = s.coeff(n) == expect;
    o.ok = o.ok && ok;
    o.witness.push_back({{"n", n}, {"series", poly_json(s.coeff(n))}, {"quotient", poly_json(expect)}, {"ok", ok}});
  }
  return o;
}

CheckOutcome check_chi_series_specializations(int order) {
  TruncatedSeries chi = chi_generating_series(order);
  TruncatedSeries red = reduced_chi_series(order);
  CheckOutcome o{true, nlohmann::json::array()};
  for (int n = 1; n <= order; ++n) {
    Rational at0 = chi.coeff(n).eval(Rational(0));
    Rational atm1 = chi.coeff(n).eval(Rational(-1));
    Rational red0 = red.coeff(n).eval(Rational(0));
    Rational red1 = red.coeff(n).eval(Rational(1));
    Integer g = genocchi_g(n);
    Integer h = genocchi_h(n);
    Integer g_next = genocchi_g(n + 1);
    Integer h_shift = n >= 2 ? genocchi_h(n - 2) : Integer(1);
    bool ok = at0 == Rational(-g) && atm1 == Rational(-h) && red0 == Rational(g_next) && red1 == Rational(h_shift);
    o.ok = o.ok && ok;
    o.witness.push_back({{"n", n},
                         {"chi(0)", to_json(at0)},
                         {"-g_n", to_json(Integer(-g))},
                         {"chi(-1)", to_json(atm1)},
                         {"-h_n", to_json(Integer(-h))},
                         {"reduced(0)", to_json(red0)},
                         {"g_n+1", to_json(g_next)},
                         {"reduced(1)", to_json(red1)},
                         {"h_n-2", to_json(h_shift)},
                         {"ok", ok}});
  }
  return o;
}

CheckOutcome check_six_variable_identity(int order, int samples, std::uint64_t seed) {
  check_order(order);
  std::vector<std::map<SixStatistics, std::uint64_t>> dists;
  for (int n = 1; n <= order; ++n) dists.push_back(six_statistics_distribution(2 * n));
  std::vector<std::array<Rational, 6>> points;
  points.push_back({Rational(1), Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)});
  points.push_back({Rational(2), Rational(2), Rational(1), Rational(0), Rational(2), Rational(1)});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(-3, 3);
  for (int s = 0; s < samples; ++s) {
    std::array<Rational, 6> p;
    for (auto& v : p) v = Rational(pick(rng));
    points.push_back(p);
  }
  CheckOutcome o{true, {{"points", points.size()}, {"order", order}}};
  for (const auto& p : points) {
    TruncatedSeries rhs = six_variable_series(order, p);
    for (int n = 1; n <= order; ++n) {
      Rational lhs(0);
      for (const auto& [st, cnt] : dists[static_cast<std::size_t>(n - 1)]) {
        lhs += rpow(p[0], st.mo) * rpow(p[1], st.fd) * rpow(p[2], st.si) * rpow(p[3], st.me) * rpow(p[4], st.fi) *
               rpow(p[5], st.sd) * Rational(static_cast<unsigned long>(cnt));
      }
      Rational r = rhs.coeff(n).coeff(0);
      if (lhs != r) {
        o.ok = false;
        nlohmann::json pt = nlohmann::json::array();
        for (const auto& v : p) pt.push_back(to_json(v));
        o.witness["failure"] = {{"point", pt}, {"n", n}, {"enumerated", to_json(lhs)}, {"series", to_json(r)}};
        return o;
      }
    }
  }
  return o;
}

CheckOutcome check_closing_h_formula(int order) {
  TruncatedSeries s = median_genocchi_closing_series(order);
  CheckOutcome o{true, nlohmann::json::array()};
  for (int n = 0; n <= order; ++n) {
    Integer c = integer_coefficient(s, n);
    Integer h = genocchi_h(n);
    o.ok = o.ok && c == h;
    o.witness.push_back({{"n", n}, {"series", to_json(c)}, {"h", to_json(h)}});
  }
  return o;
}

CheckOutcome check_genocchi_series(GenocchiSeries which, int order) {
  TruncatedSeries s = genocchi_series(which, order);
  CheckOutcome o{true, nlohmann::json::array()};
  for (int k = 0; k <= order; ++k) {
    Integer c = integer_coefficient(s, k);
    Integer expect;
    switch (which) {
      case GenocchiSeries::GFactorials:
        expect = k == 0 ? Integer(0) : genocchi_g(k);
        break;
      case GenocchiSeries::HFactorials:
        expect = genocchi_h(k);
        break;
      case GenocchiSeries::GSquares:
        expect = genocchi_g(k + 1);
        break;
      case GenocchiSeries::HSquares:
        expect = k == 0 ? Integer(0) : genocchi_h(k - 1);
        break;
    }
    o.ok = o.ok && c == expect;
    o.witness.push_back({{"k", k}, {"series", to_json(c)}, {"enumerated", to_json(expect)}});
  }
  return o;
}

CheckOutcome check_tangent_and_parity_models(int max_n) {
  CheckOutcome o{true, nlohmann::json::array()};
  for (int n = 1; n <= max_n; ++n) {
    Integer g = genocchi_g(n);
    Integer tan_g = genocchi_from_tangent(n);
    Integer parity = n <= 6 ? Integer(static_cast<unsigned long>(alternating_parity_count(n))) : g;
    bool ok = g == tan_g && g == parity;
    o.ok = o.ok && ok;
    o.witness.push_back(
        {{"n", n}, {"g", to_json(g)}, {"tangent", to_json(tan_g)}, {"parity_descents", to_json(parity)}});
  }
  return o;
}

}  // namespace genlab
