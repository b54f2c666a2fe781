#include <doctest.h>

#include "genlab/dperms.hpp"
#include "genlab/errors.hpp"
#include "genlab/genfun.hpp"
#include "genlab/staircases.hpp"
#include "oracles.hpp"

using namespace genlab;

namespace {

const std::vector<long> kG{1, 1, 3, 17, 155, 2073};       // n = 1..6
const std::vector<long> kH{1, 2, 8, 56, 608, 9440, 198272};  // n = 0..6

// Descents exactly after even letters, counted over all of S_m.
std::uint64_t parity_descent_oracle(int m) {
  std::uint64_t n = 0;
  oracle::each_permutation(oracle::range(m), [&](const std::vector<int>& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if ((w[i] > w[i + 1]) != (w[i] % 2 == 0)) return;
    ++n;
  });
  return n;
}

}  // namespace

TEST_CASE("Genocchi numbers by enumeration") {
  for (int n = 1; n <= 6; ++n) CHECK(genocchi_g_enumerated(n) == kG[static_cast<std::size_t>(n - 1)]);
  for (int n = 0; n <= 4; ++n) CHECK(genocchi_h_enumerated(n) == kH[static_cast<std::size_t>(n)]);
  for (int n = 2; n <= 5; ++n) {
    oracle::ClassCounts c = oracle::class_counts(oracle::range(2 * n - 2));
    CHECK(genocchi_g_enumerated(n) == Integer(static_cast<unsigned long>(c.dumont)));
  }
}

TEST_CASE("Genocchi numbers by series") {
  for (int n = 1; n <= 6; ++n) CHECK(genocchi_g_series(n) == kG[static_cast<std::size_t>(n - 1)]);
  for (int n = 0; n <= 6; ++n) CHECK(genocchi_h_series(n) == kH[static_cast<std::size_t>(n)]);
  CHECK(genocchi_g(4) == 17);
  CHECK(genocchi_h(0) == 1);
  CHECK(genocchi_h(6) == 198272);
}

TEST_CASE("classical quotient series") {
  CHECK(integer_coefficient(genocchi_series(GenocchiSeries::HFactorials, 5), 3) == 56);
  CHECK(integer_coefficient(genocchi_series(GenocchiSeries::GFactorials, 5), 1) == 1);
  CHECK(integer_coefficient(genocchi_series(GenocchiSeries::GSquares, 5), 2) == 3);
  TruncatedSeries hsq = genocchi_series(GenocchiSeries::HSquares, 6);
  for (int k = 1; k <= 6; ++k) CHECK(integer_coefficient(hsq, k) == kH[static_cast<std::size_t>(k - 1)]);
  for (auto w : {GenocchiSeries::GFactorials, GenocchiSeries::HFactorials, GenocchiSeries::GSquares,
                 GenocchiSeries::HSquares})
    CHECK(check_genocchi_series(w, 6).ok);
  CHECK_THROWS_AS(genocchi_series(GenocchiSeries::GSquares, 9), SizeLimit);
}

TEST_CASE("tangent and parity models") {
  for (int n = 1; n <= 6; ++n) CHECK(genocchi_from_tangent(n) == kG[static_cast<std::size_t>(n - 1)]);
  auto tan = tangent_coefficients(5);
  CHECK(tan[1] == 1);
  CHECK(tan[3] == make_rational(1, 3));
  CHECK(tan[5] == make_rational(2, 15));
  for (int n = 2; n <= 5; ++n) {
    CHECK(alternating_parity_count(n) == parity_descent_oracle(2 * n - 1));
    CHECK(alternating_parity_count(n) == static_cast<std::uint64_t>(kG[static_cast<std::size_t>(n - 1)]));
  }
  CHECK(check_tangent_and_parity_models(6).ok);
}

TEST_CASE("characteristic polynomial series") {
  TruncatedSeries chi = chi_generating_series(5);
  CHECK(chi.coeff(1) == Polynomial{-1, 1});
  CHECK(chi.coeff(2) == Polynomial{-1, 3, -3, 1});
  for (int n = 1; n <= 5; ++n) {
    CHECK(chi.coeff(n) == char_poly_from_sd(n));
    CHECK(-chi.coeff(n).eval(Rational(-1)) == kH[static_cast<std::size_t>(n)]);
    CHECK(-chi.coeff(n).eval(Rational(0)) == kG[static_cast<std::size_t>(n - 1)]);
  }
  TruncatedSeries shifted = shifted_chi_series(4);
  for (int n = 1; n <= 4; ++n) CHECK(shifted.coeff(n) == char_poly_from_sd(n + 1));
  TruncatedSeries red = reduced_chi_series(5);
  CHECK(red.coeff(1) == Polynomial{1});
  CHECK(red.coeff(2) == Polynomial{3, -3, 1});
  for (int n = 1; n <= 5; ++n) CHECK(red.coeff(n).eval(Rational(0)) == kG[static_cast<std::size_t>(n)]);
  CHECK(check_chi_series(5).ok);
  CHECK(check_shifted_chi_series(5).ok);
  CHECK(check_reduced_chi_series(5).ok);
  CHECK(check_chi_series_specializations(5).ok);
}

TEST_CASE("closing h series") {
  TruncatedSeries s = median_genocchi_closing_series(6);
  for (int k = 0; k <= 6; ++k) CHECK(integer_coefficient(s, k) == kH[static_cast<std::size_t>(k)]);
  CHECK(check_closing_h_formula(6).ok);
}

TEST_CASE("six-variable identity") {
  std::array<Rational, 6> ones{1, 1, 1, 1, 1, 1};
  TruncatedSeries s = six_variable_series(3, ones);
  CHECK(integer_coefficient(s, 1) == 1);
  CHECK(integer_coefficient(s, 2) == 3);
  CHECK(integer_coefficient(s, 3) == 17);
  std::array<Rational, 6> lemma{2, 2, 1, 0, 2, 1};
  TruncatedSeries l = six_variable_series(4, lemma);
  for (int n = 1; n <= 4; ++n) CHECK(l.coeff(n).eval(Rational(0)) == lambda_at(2 * n, lemma));
  std::array<Rational, 6> zeros{0, 0, 0, 0, 0, 0};
  TruncatedSeries z = six_variable_series(4, zeros);
  for (int n = 1; n <= 4; ++n) CHECK(z.coeff(n).eval(Rational(0)) == lambda_at(2 * n, zeros));
  CHECK(check_six_variable_identity(4, 20, 7).ok);
}
