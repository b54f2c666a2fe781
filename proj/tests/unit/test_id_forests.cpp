#include <doctest.h>

#include <set>

#include "genlab/dperms.hpp"
#include "genlab/errors.hpp"
#include "genlab/id_forests.hpp"
#include "oracles.hpp"

using namespace genlab;

namespace {

std::size_t oracle_id_tree_count(const std::vector<int>& v) {
  std::size_t n = 0;
  oracle::each_labeled_tree(v, [&](const std::vector<std::pair<int, int>>& edges) {
    for (auto [a, b] : edges)
      if (!oracle::ferrers_adjacent(a, b)) return;
    if (oracle::id_rooted(edges, v.back())) ++n;
  });
  return n;
}

UnrootedTree example_tree() { return UnrootedTree::from_plane(gamma({4, 2, 1, 5, 6, 3, 7, 8})); }

}  // namespace

TEST_CASE("ID test on small trees") {
  UnrootedTree star({1, 2, 3}, {{2, 1}, {2, 3}});
  CHECK_FALSE(is_id_tree(star));
  CHECK(is_id_tree(UnrootedTree({1, 2}, {{1, 2}})));
  CHECK(is_id_tree(UnrootedTree::single(5)));
  CHECK(is_id_tree(UnrootedTree({1, 2, 3, 4}, {{1, 2}, {1, 4}, {3, 4}})));
}

TEST_CASE("largest-root and smallest-root checks agree on every labeled tree") {
  for (int m = 1; m <= 6; ++m) {
    auto v = oracle::range(m);
    oracle::each_labeled_tree(v, [&](const std::vector<std::pair<int, int>>& edges) {
      UnrootedTree t(v, edges);
      IdCheck c = id_check(t);
      CHECK(c.at_largest == c.at_smallest);
      bool ferrers = true;
      for (auto [a, b] : edges) ferrers = ferrers && oracle::ferrers_adjacent(a, b);
      CHECK(c.at_largest == (ferrers && oracle::id_rooted(edges, m)));
    });
  }
}

TEST_CASE("ID tree counts match the Pruefer oracle") {
  CHECK(id_trees(oracle::range(6)).size() == 3);
  for (int m = 1; m <= 7; ++m) CHECK(id_trees(oracle::range(m)).size() == oracle_id_tree_count(oracle::range(m)));
  std::vector<int> v{1, 2, 4, 5, 7, 8};
  CHECK(id_trees(v).size() == oracle_id_tree_count(v));
  CHECK(id_trees(v, IdForestMethod::SpanningTreeFilter).size() == id_trees(v, IdForestMethod::Nbc).size());
}

TEST_CASE("ID forests by number of trees") {
  std::map<std::size_t, std::size_t> by_k;
  for (std::size_t k = 1; k <= 4; ++k) by_k[k] = id_forests(oracle::range(4), k).size();
  CHECK(by_k == std::map<std::size_t, std::size_t>{{1, 1}, {2, 3}, {3, 3}, {4, 1}});
  std::vector<std::size_t> totals;
  for (int n = 1; n <= 4; ++n) totals.push_back(id_forests(oracle::range(2 * n)).size());
  CHECK(totals == std::vector<std::size_t>{2, 8, 56, 608});
}

TEST_CASE("both enumeration methods yield the same forests") {
  for (int m = 1; m <= 6; ++m) {
    std::set<std::string> a, b;
    for (const auto& f : id_forests(oracle::range(m), std::nullopt, IdForestMethod::SpanningTreeFilter))
      a.insert(forest_key(f));
    for (const auto& f : id_forests(oracle::range(m), std::nullopt, IdForestMethod::Nbc)) b.insert(forest_key(f));
    CHECK(a == b);
  }
}

TEST_CASE("postorder words of the two plane forms") {
  UnrootedTree t = example_tree();
  CHECK(is_id_tree(t));
  CHECK(postorder(hat_form(t)) == std::vector<int>{4, 2, 1, 5, 6, 3, 7, 8});
  CHECK(postorder(tilde_form(t)) == std::vector<int>{5, 6, 3, 7, 8, 4, 2, 1});
  CHECK(word_to_string(postorder(hat_form(t))) == "42156378");
  CHECK(psi(t) == Permutation::from_cycles({{1, 5, 6, 3, 7, 8, 4, 2}}));
  CHECK(psi_tilde(t) == psi(t));
}

TEST_CASE("gamma splits a word into child segments") {
  auto segs = gamma_segments({2, 1, 5, 6, 4, 3, 7, 8});
  CHECK(segs == std::vector<std::vector<int>>{{2, 1}, {5, 6, 4, 3}, {7}});
  CHECK_THROWS_AS(gamma({1, 2, 3}), NotWWord);
  CHECK(is_w_word({4, 2, 1, 5, 6, 3, 7, 8}));
}

TEST_CASE("gamma inverts postorder on both forms") {
  for (int m = 1; m <= 8; ++m)
    for (const auto& t : id_trees(oracle::range(m))) {
      PlaneTree h = hat_form(t), w = tilde_form(t);
      CHECK(gamma(postorder(h)) == h);
      CHECK(gamma(postorder(w)) == w);
      CHECK(is_w_word(postorder(h)));
      CHECK(UnrootedTree::from_plane(h) == t);
      CHECK(psi(t) == psi_tilde(t));
    }
}

TEST_CASE("psi maps ID forests bijectively onto D-permutations, keeping supports") {
  for (int m = 1; m <= 7; ++m) {
    std::set<Permutation> images;
    std::size_t n = 0;
    for_each_id_forest(oracle::range(m), std::nullopt, [&](const IDForest& f) {
      Permutation p = psi_forest(f);
      CHECK(is_d_permutation(p));
      CHECK(p.cycle_support() == forest_support(f));
      CHECK(p.num_cycles() == f.size());
      images.insert(p);
      ++n;
    });
    CHECK(images.size() == n);
    CHECK(n == count_class(oracle::range(m), DClass::D));
  }
}

TEST_CASE("forest JSON and keys") {
  IDForest f = id_forests(oracle::range(4), 2).front();
  CHECK(forest_to_json(f).is_array());
  CHECK_FALSE(forest_key(f).empty());
  CHECK_THROWS_AS(for_each_id_forest(oracle::range(13), std::nullopt, [](const IDForest&) {}), SizeLimit);
}
