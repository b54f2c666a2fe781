#include <doctest.h>

#include "genlab/dperms.hpp"
#include "genlab/drops.hpp"
#include "genlab/errors.hpp"
#include "oracles.hpp"

using namespace genlab;

namespace {

std::uint64_t eo_oracle(const std::vector<int>& ground, bool cycles_only) {
  std::uint64_t n = 0;
  oracle::each_permutation(ground, [&](const std::vector<int>& img) {
    for (std::size_t i = 0; i < ground.size(); ++i) {
      int x = ground[i], s = img[i];
      if (x > s && !(x % 2 == 0 && s % 2 == 1)) return;
    }
    if (!cycles_only || oracle::num_cycles(ground, img) == 1) ++n;
  });
  return n;
}

std::uint64_t eo_descent_oracle(int m) {
  std::uint64_t n = 0;
  oracle::each_permutation(oracle::range(m), [&](const std::vector<int>& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1] && !(w[i] % 2 == 0 && w[i + 1] % 2 == 1)) return;
    ++n;
  });
  return n;
}

}  // namespace

TEST_CASE("parity poset") {
  for (int m = 1; m <= 10; ++m) CHECK(parity_poset(m).is_partial_order());
  for (int n = 1; n <= 5; ++n) CHECK(parity_poset_matches_ferrers(n));
  FinitePoset p = parity_poset(4);
  // 2 < 3 but 1 and 2 are incomparable
  CHECK(p.less(1, 2));
  CHECK_FALSE(p.leq(0, 1));
  CHECK_FALSE(p.leq(1, 0));
  CHECK(FinitePoset::chain(3).is_partial_order());
  CHECK_FALSE(FinitePoset::make({1, 2}, [](int, int) { return true; }).is_partial_order());
}

TEST_CASE("drop tables against the full sweep") {
  CHECK(d_table(2) == std::vector<std::uint64_t>{2, 0});
  CHECK(d_table(3) == std::vector<std::uint64_t>{2, 4, 0});
  for (int m = 1; m <= 8; ++m) CHECK(d_table(m) == oracle::d_table(m));
  std::uint64_t total = 0;
  for (auto v : d_table(8)) total += v;
  CHECK(total == 40320);
  for (int m = 1; m <= 7; ++m) CHECK(p_drop_table(parity_poset(m)) == d_table(m));
  CHECK_THROWS_AS(d_table(13), SizeLimit);
}

TEST_CASE("drop expansion of the characteristic polynomial") {
  CHECK(chi_from_drops(1) == Polynomial{-1, 1});
  CHECK(chi_from_drops(2) == Polynomial{-1, 3, -3, 1});
  for (int n = 1; n <= 5; ++n) CHECK(chi_from_drops(n) == char_poly_from_sd(n));
  std::vector<long> g{1, 1, 3, 17, 155};
  for (int n = 1; n <= 5; ++n) CHECK(genocchi_from_drops(n) == g[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("Chung-Graham expansion") {
  CHECK(p_drop_table(FinitePoset::antichain(2)) == std::vector<std::uint64_t>{2, 0});
  CHECK(p_drop_table(FinitePoset::chain(2)) == std::vector<std::uint64_t>{1, 1});
  CHECK(chung_graham_check(FinitePoset::antichain(2)).ok);
  CHECK(chung_graham_check(FinitePoset::chain(2)).ok);
  CheckOutcome p4 = chung_graham_check(parity_poset(4));
  CHECK(p4.ok);
  for (int m = 1; m <= 8; ++m) CHECK(chung_graham_check(parity_poset(m)).ok);
  // a V-shaped poset: 1 < 3, 2 < 3
  FinitePoset v = FinitePoset::make({1, 2, 3}, [](int a, int b) { return a == b || b == 3; });
  CHECK(chung_graham_check(v).ok);
}

TEST_CASE("only even-odd drops") {
  CHECK(has_only_eo_drops(Permutation::from_cycles({{1, 2}})));
  CHECK_FALSE(has_only_eo_drops(Permutation::from_cycles({{1, 3, 2}})));
  CHECK(has_only_eo_descents({2, 1, 3}));
  CHECK_FALSE(has_only_eo_descents({3, 1, 2}));
  for (int m = 1; m <= 8; ++m) {
    CHECK(count_eo_drop(interval(m), false) == eo_oracle(interval(m), false));
    CHECK(count_eo_drop(interval(m), true) == eo_oracle(interval(m), true));
  }
  std::vector<int> a{2, 3, 5, 8};
  CHECK(count_eo_drop(a, true) == eo_oracle(a, true));
  CHECK(count_eo_drop(interval(2), false) == 2);
  CHECK(count_eo_drop(interval(4), true) == 1);
  CHECK(count_eo_drop(interval(8), false) == 608);
  for (int m = 1; m <= 8; ++m) CHECK(count_eo_descent(m) == eo_descent_oracle(m));
  for (int n = 1; n <= 4; ++n) CHECK(count_eo_descent(2 * n) == count_eo_drop(interval(2 * n), false));
}

TEST_CASE("cycle distribution of even-odd-drop permutations") {
  CHECK(eo_drop_by_cycles(interval(4)) == std::map<std::size_t, std::uint64_t>{{1, 1}, {2, 3}, {3, 3}, {4, 1}});
  for (int n = 1; n <= 4; ++n) CHECK(eo_drop_by_cycles(interval(2 * n)) == count_by_cycles(interval(2 * n), DClass::D));
}

TEST_CASE("conjecture report") {
  ConjectureOptions o;
  o.max_n = 4;
  o.by_cycles_max_n = 4;
  o.subset_universe = 6;
  o.mobius_max_n = 3;
  VerificationReport r = conjecture_checks(o);
  CHECK(r.passed());
  CHECK_FALSE(r.any_falsified());
  CHECK(r.checks.size() >= 4);
  nlohmann::json j = r.to_json();
  bool saw_verdict = false;
  for (const auto& c : j["checks"])
    if (c["witness"].contains("verdict")) saw_verdict = true;
  CHECK(saw_verdict);
}
