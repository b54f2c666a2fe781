#include <doctest.h>

#include "genlab/bond_lattice.hpp"
#include "genlab/errors.hpp"
#include "oracles.hpp"

using namespace genlab;

TEST_CASE("bond lattice element sets match the connectivity oracle") {
  for (int m = 1; m <= 8; ++m) {
    BondLattice bl = build_bond_lattice(oracle::range(m));
    CHECK(bl.criterion_mismatches == 0);
    auto ref = oracle::connected_partitions(oracle::range(m));
    REQUIRE(bl.poset.size() == ref.size());
    for (const auto& blocks : ref) CHECK(bl.poset.contains(SetPartition(blocks)));
  }
}

TEST_CASE("bond lattice sizes on [2n]") {
  std::vector<std::size_t> sizes;
  for (int n = 1; n <= 4; ++n) sizes.push_back(build_bond_lattice(2 * n).poset.size());
  CHECK(sizes == std::vector<std::size_t>{2, 8, 48, 392});
}

TEST_CASE("characteristic polynomials of the bond lattices") {
  CHECK(build_bond_lattice(2).poset.characteristic_polynomial() == Polynomial{-1, 1});
  CHECK(build_bond_lattice(4).poset.characteristic_polynomial() == Polynomial{-1, 3, -3, 1});
  CHECK(build_bond_lattice(6).poset.characteristic_polynomial() == Polynomial{-3, 12, -19, 15, -6, 1});
  Polynomial chi4{-17, 81, -162, 177, -115, 45, -10, 1};
  PartitionPoset p8 = build_bond_lattice(8).poset;
  CHECK(p8.characteristic_polynomial() == chi4);
  CHECK(chi4.eval(Rational(-1)) == -608);
  CHECK(p8.length() == 7);
  CHECK(p8.has_maximum());
}

TEST_CASE("Mobius values") {
  PartitionPoset p = build_bond_lattice(4).poset;
  CHECK(p.mobius(SetPartition::singletons({1, 2, 3, 4})) == 1);
  CHECK(p.mobius(SetPartition({{1, 2}, {3}, {4}})) == -1);
  CHECK(p.mobius(SetPartition::one_block({1, 2, 3, 4})) == -1);
  CHECK_THROWS_AS(p.mobius(SetPartition({{1, 3}, {2}, {4}})), ElementNotInLattice);
  // order sanity: 0-hat below everything
  for (std::size_t j = 0; j < p.size(); ++j) CHECK(p.leq(0, j));
}

TEST_CASE("block criterion") {
  CHECK(blocks_odd_min_even_max(SetPartition({{1, 4}, {2}, {3}})));
  CHECK_FALSE(blocks_odd_min_even_max(SetPartition({{2, 3}, {1}, {4}})));
  CHECK(blocks_connected(SetPartition({{1, 2, 3, 4}})));
  CHECK_FALSE(blocks_connected(SetPartition({{1, 3}, {2, 4}})));
}

TEST_CASE("reduced semilattice") {
  CHECK(reduced_ground(3) == std::vector<int>{1, 3, 4, 6});
  PartitionPoset l6 = build_reduced(3);
  CHECK(l6.characteristic_polynomial() == Polynomial{3, -3, 1});
  PartitionPoset l8 = build_reduced(4);
  CHECK(l8.characteristic_polynomial() == Polynomial{17, -30, 21, -7, 1});
  CHECK_FALSE(l8.has_maximum());
}

TEST_CASE("Zaslavsky counts") {
  Polynomial chi2{-1, 3, -3, 1};
  CHECK(zaslavsky_regions(chi2, 3) == 8);
  CHECK(zaslavsky_bounded(Polynomial{3, -3, 1}) == 1);
  CHECK(zaslavsky_bounded(Polynomial{17, -30, 21, -7, 1}) == 2);
}

TEST_CASE("size cap") {
  CHECK_THROWS_AS(build_bond_lattice(12), SizeLimit);
}
