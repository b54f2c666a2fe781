#include <doctest.h>

#include "genlab/bond_lattice.hpp"
#include "genlab/errors.hpp"
#include "genlab/geometry.hpp"

using namespace genlab;

namespace {

RVec vec(std::initializer_list<long> xs) {
  RVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("exact linear algebra") {
  RMatrix m{vec({2, 1}), vec({1, 1})};
  CHECK(determinant(m) == 1);
  RMatrix inv = inverse(m);
  CHECK(inv == RMatrix{vec({1, -1}), vec({-1, 2})});
  CHECK(multiply(m, vec({1, 1})) == vec({3, 2}));
  CHECK(transpose(m) == RMatrix{vec({2, 1}), vec({1, 1})});
  RMatrix r = rref({vec({2, 4, 6}), vec({1, 2, 3})});
  CHECK(r.size() == 1);
  CHECK(r[0] == vec({1, 2, 3}));
  CHECK(determinant({vec({1, 2}), vec({2, 4})}) == 0);
}

TEST_CASE("hyperplanes are normalized") {
  Hyperplane h = Hyperplane::make(vec({-2, 4, 0}), Rational(6));
  CHECK(h.normal == vec({1, -2, 0}));
  CHECK(h.offset == -3);
  Hyperplane q = Hyperplane::make({Rational(1, 2), Rational(1, 3)});
  CHECK(q.normal == vec({3, 2}));
  CHECK_THROWS_AS(Hyperplane::make(vec({0, 0})), InvalidArgument);
}

TEST_CASE("flats: canonical form, intersection, inconsistency") {
  Flat a = Flat::ambient(3);
  CHECK(a.dim() == 3);
  auto f = a.intersect(Hyperplane::make(vec({1, -1, 0})));
  REQUIRE(f);
  auto g = Flat::solve(3, {vec({2, -2, 0, 0})});
  REQUIRE(g);
  CHECK(*f == *g);
  auto x = f->intersect(Hyperplane::make(vec({1, -1, 0}), Rational(1)));
  CHECK_FALSE(x.has_value());
  auto y = f->intersect(Hyperplane::make(vec({0, 1, -1})));
  REQUIRE(y);
  CHECK(y->codim() == 2);
  CHECK(y->subset_of(*f));
  CHECK_FALSE(f->subset_of(*y));
  CHECK(y->implies(vec({1, 0, -1, 0})));
  auto again = Flat::solve(3, y->rows());
  REQUIRE(again);
  CHECK(*again == *y);
}

TEST_CASE("hyperplane counts") {
  CHECK(build_H(1).hyperplanes.size() == 1);
  CHECK(build_H(1).dim == 3);
  CHECK(build_H(2).hyperplanes.size() == 3);
  CHECK(build_H(2).dim == 5);
  CHECK(build_H(4).hyperplanes.size() == 10);
  CHECK(build_H(4).dim == 9);
  CHECK(build_K(2).hyperplanes.size() == 3);
}

TEST_CASE("characteristic polynomials of the arrangements") {
  CHECK(intersection_poset(build_H(1)).characteristic_polynomial() == Polynomial{-1, 1});
  CHECK(intersection_poset(build_H(2)).characteristic_polynomial() == Polynomial{-1, 3, -3, 1});
  IntersectionPoset h3 = intersection_poset(build_H(3));
  CHECK(h3.characteristic_polynomial() == Polynomial{-3, 12, -19, 15, -6, 1});
  CHECK(h3.size() == 48);
  CHECK(h3.length() == 5);
  IntersectionPoset k3 = intersection_poset(build_K(3));
  CHECK(k3.characteristic_polynomial() * Polynomial::t() ==
        build_bond_lattice(6).poset.characteristic_polynomial() * Polynomial::t());
  for (std::size_t j = 0; j < h3.size(); ++j) CHECK(h3.leq(0, j));
}

TEST_CASE("the explicit linear map") {
  for (int n = 1; n <= 4; ++n) {
    RMatrix a = linear_map_matrix(n);
    Rational d = determinant(a);
    CHECK((d == 1 || d == -1));
  }
  for (int n = 1; n <= 3; ++n) {
    CheckOutcome r = verify_linear_isomorphism(n);
    CHECK_MESSAGE(r.ok, r.witness.dump());
  }
}

TEST_CASE("deconed arrangement") {
  CHECK(build_P(3).base.has_value());
  for (int n = 3; n <= 4; ++n) {
    CheckOutcome r = verify_reduced_arrangement(n);
    CHECK_MESSAGE(r.ok, r.witness.dump());
  }
  CHECK(bounded_regions(3) == 1);
  CHECK(bounded_regions(4) == 2);
  CHECK_THROWS_AS(build_P(2), SizeLimit);
}

TEST_CASE("flat partitions") {
  Arrangement k2 = build_K(2);
  IntersectionPoset p = intersection_poset(k2);
  std::size_t singletons = 0;
  for (const auto& f : p.flats())
    if (flat_partition(f, k2.labels).num_blocks() == 5) ++singletons;
  CHECK(singletons == 1);
  CHECK(p.size() == build_bond_lattice(4).poset.size());
}
