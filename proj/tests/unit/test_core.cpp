#include <doctest.h>

#include "genlab/errors.hpp"
#include "genlab/permutation.hpp"
#include "genlab/polynomial.hpp"
#include "genlab/poset.hpp"
#include "genlab/rational.hpp"
#include "genlab/series.hpp"
#include "genlab/set_partition.hpp"
#include "oracles.hpp"

using namespace genlab;

TEST_CASE("permutation cycles and fixed points") {
  Permutation p = Permutation::from_cycles({{1, 3, 2}});
  CHECK(p(1) == 3);
  CHECK(p(3) == 2);
  CHECK(p(2) == 1);
  CHECK(p.num_cycles() == 1);
  CHECK(p.fixed_points().empty());
  auto d = p.drops();
  CHECK(d == std::vector<std::pair<int, int>>{{2, 1}, {3, 2}});

  Permutation q = Permutation::from_cycles({{1, 2}, {3}, {4}});
  CHECK(q.num_cycles() == 3);
  CHECK(q.fixed_points() == std::vector<int>{3, 4});
  CHECK(q.to_cycle_string() == "(1,2)(3)(4)");
  CHECK(Permutation::from_json(q.to_json()) == q);
}

TEST_CASE("permutation rejects bad input") {
  CHECK_THROWS_AS(Permutation({1, 2}, {1, 1}), InvalidArgument);
  CHECK_THROWS_AS(Permutation::from_cycles({{1, 2}, {2, 3}}), InvalidArgument);
}

TEST_CASE("cycle counts agree with a direct sweep") {
  auto g = oracle::range(5);
  std::map<std::size_t, int> lib, ref;
  oracle::each_permutation(g, [&](const std::vector<int>& img) {
    Permutation p(g, img);
    ++lib[p.num_cycles()];
    ++ref[static_cast<std::size_t>(oracle::num_cycles(g, img))];
    CHECK(p.cycles().size() == p.num_cycles());
  });
  CHECK(lib == ref);
  // unsigned Stirling numbers of the first kind for n = 5
  CHECK(ref == std::map<std::size_t, int>{{1, 24}, {2, 50}, {3, 35}, {4, 10}, {5, 1}});
}

TEST_CASE("set partitions: canonical form and refinement") {
  SetPartition a({{3, 1}, {2}});
  CHECK(a.blocks() == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(a.to_string() == "13|2");
  SetPartition b = SetPartition::one_block({1, 2, 3});
  CHECK(a.refines(b));
  CHECK_FALSE(b.refines(a));
  CHECK(SetPartition::singletons({1, 2, 3}).refines(a));
  CHECK(a.rank() == 1);
  CHECK_THROWS_AS(SetPartition({{1, 2}, {2}}), InvalidArgument);

  int bell = 0;
  for_each_set_partition(oracle::range(5), [&](const SetPartition&) { ++bell; });
  CHECK(bell == 52);
}

TEST_CASE("factorials and rationals") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(make_rational(6, 4) == make_rational(3, 2));
  CHECK(is_integer(make_rational(4, 2)));
  CHECK(to_string(make_rational(-3, 6)) == "-1/2");
  CHECK(rational_from_json(to_json(make_rational(7, 3))) == make_rational(7, 3));
}

TEST_CASE("polynomial ring operations") {
  Polynomial t = Polynomial::t();
  Polynomial a = t - Polynomial{1};
  Polynomial b = t * t + Polynomial{2};
  CHECK((a * b).eval(Rational(3)) == a.eval(Rational(3)) * b.eval(Rational(3)));
  CHECK(a * b == b * a);
  CHECK((a + b) * a == a * a + b * a);
  CHECK(pow(a, 3) == Polynomial{-1, 3, -3, 1});
  CHECK((a * b).divide_exact(a) == b);
  auto [q, r] = b.divmod(a);
  CHECK(q * a + r == b);
  CHECK(r.degree() < a.degree());
  CHECK(Polynomial{-1, 0, 1}.to_string() == "t^2 - 1");
  CHECK(Polynomial::from_json(b.to_json()) == b);
  CHECK(Polynomial{}.is_zero());
  CHECK_THROWS_AS(Polynomial({Rational(1, 2)}).require_integral("x"), IntegralityFailure);
}

TEST_CASE("falling and rising factorials") {
  Polynomial t = Polynomial::t();
  CHECK(falling_factorial(t - Polynomial{1}, 2) == Polynomial{2, -3, 1});
  CHECK(rising_factorial(t + Polynomial{1}, 2) == Polynomial{2, 3, 1});
  CHECK(falling_factorial(t, 0) == Polynomial{1});
  CHECK(binomial(t, 2).eval(Rational(5)) == 10);
}

TEST_CASE("truncated series arithmetic") {
  Polynomial t = Polynomial::t();
  TruncatedSeries s = series_inverse_linear(Rational(1), t - Polynomial{1}, 2);
  CHECK(s.coeff(0) == Polynomial{1});
  CHECK(s.coeff(1) == t - Polynomial{1});
  CHECK(s.coeff(2) == pow(t - Polynomial{1}, 2));

  TruncatedSeries x(4, {Polynomial{1}, t, Polynomial{2}, Polynomial{}, t * t});
  TruncatedSeries prod = x * x.inverse();
  CHECK(prod == TruncatedSeries::one(4));
  CHECK_THROWS_AS(TruncatedSeries::one(3) + TruncatedSeries::one(4), InvalidArgument);
}

TEST_CASE("Mobius function of the Boolean lattice of rank 3") {
  std::vector<int> ranks;
  for (int s = 0; s < 8; ++s) ranks.push_back(__builtin_popcount(static_cast<unsigned>(s)));
  // indices sorted by rank for the routine's ordering assumption
  std::vector<int> order{0, 1, 2, 4, 3, 5, 6, 7};
  std::vector<int> r;
  for (int i : order) r.push_back(ranks[static_cast<std::size_t>(i)]);
  auto leq = [&](std::size_t i, std::size_t j) {
    int a = order[i], b = order[j];
    return (a & b) == a;
  };
  auto mu = mobius_from_bottom(r, leq);
  for (std::size_t i = 0; i < 8; ++i) CHECK(mu[i] == (r[i] % 2 ? -1 : 1));
  CHECK(characteristic_polynomial(r, mu) == pow(Polynomial::t() - Polynomial{1}, 3));
}
