#include <doctest.h>

#include "genlab/ferrers.hpp"
#include "genlab/id_forests.hpp"
#include "oracles.hpp"

using namespace genlab;

TEST_CASE("Ferrers graph edges") {
  FerrersGraph g4 = FerrersGraph::build(oracle::range(4));
  CHECK(g4.edges() == std::vector<Edge>{{1, 4}, {1, 2}, {3, 4}});
  FerrersGraph g6 = FerrersGraph::build(oracle::range(6));
  CHECK(g6.edges().size() == 6);
  CHECK(g6.adjacent(1, 6));
  CHECK(g6.adjacent(6, 3));
  CHECK_FALSE(g6.adjacent(2, 3));
  CHECK_FALSE(g6.adjacent(1, 3));
  CHECK(g6.num_components() == 1);

  FerrersGraph sub = FerrersGraph::build({2, 3, 5, 6});
  CHECK(sub.edges() == std::vector<Edge>{{3, 6}, {5, 6}});
  CHECK(sub.num_components() == 2);
}

TEST_CASE("edge order: odd endpoint ascending, then even endpoint descending") {
  CHECK(edge_precedes({1, 4}, {1, 2}));
  CHECK(edge_precedes({1, 4}, {3, 4}));
  CHECK_FALSE(edge_precedes({3, 4}, {1, 4}));
}

TEST_CASE("chromatic polynomial against counted colorings") {
  for (int m = 1; m <= 7; ++m) {
    FerrersGraph g = FerrersGraph::build(oracle::range(m));
    SimpleGraph s = to_simple_graph(g);
    Polynomial p = chromatic_polynomial(g);
    CHECK(p.degree() == m);
    for (int t = 0; t <= 4; ++t)
      CHECK(p.eval(Rational(t)) == Rational(oracle::count_colorings(s.n, s.edges, t)));
  }
  SimpleGraph triangle{3, {{0, 1}, {1, 2}, {0, 2}}};
  CHECK(chromatic_polynomial(triangle) == Polynomial{0, 2, -3, 1});
}

TEST_CASE("NBC sets") {
  FerrersGraph g4 = FerrersGraph::build(oracle::range(4));
  CHECK(nbc_sets(g4).size() == 8);
  FerrersGraph g6 = FerrersGraph::build(oracle::range(6));
  std::size_t total = 0;
  std::map<std::size_t, std::size_t> by_size;
  for_each_nbc_set(g6, [&](const std::vector<Edge>& e) {
    ++total;
    ++by_size[e.size()];
  });
  // |coefficients| of chi of the Ferrers graph on [6] times t
  CHECK(by_size == std::map<std::size_t, std::size_t>{{0, 1}, {1, 6}, {2, 15}, {3, 19}, {4, 12}, {5, 3}});
  CHECK(total == 56);
}

TEST_CASE("NBC sets coincide with ID forests") {
  for (int m = 1; m <= 8; ++m) {
    NbcIdReport r = nbc_equals_id(FerrersGraph::build(oracle::range(m)));
    CHECK(r.equal);
    CHECK(r.nbc_count == r.id_count);
    CHECK(r.only_nbc.empty());
  }
  NbcIdReport r = nbc_equals_id(FerrersGraph::build({1, 4, 5, 6, 8}));
  CHECK(r.equal);
}

TEST_CASE("components partition") {
  SetPartition p = components_partition({1, 2, 3, 4}, {{1, 2}, {3, 4}});
  CHECK(p.to_string() == "12|34");
}
