#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "genlab/rational.hpp"
#include "genlab/report.hpp"
#include "genlab/series.hpp"

namespace genlab {

/// g_n by counting Dumont permutations on [2n-2]; n <= 7.
Integer genocchi_g_enumerated(int n);
/// h_n by counting Dumont derangements on [2n+2]; n <= 5.
Integer genocchi_h_enumerated(int n);
/// g_n read off the (n-1)! n! quotient series.
Integer genocchi_g_series(int n);
/// h_n read off the n! (n+1)! quotient series.
Integer genocchi_h_series(int n);
/// Enumeration when in reach, series otherwise.
Integer genocchi_g(int n);
Integer genocchi_h(int n);

/// Permutations of [2n-1] that descend at i exactly when the letter at i is
/// even (i in [2n-2]); counts g_n. n <= 6.
std::uint64_t alternating_parity_count(int n);
/// g_n = (2n)! a_{2n-1} / 2^(2n-1), with tan y = sum a_k y^k from tan' = 1 + tan^2.
Integer genocchi_from_tangent(int n);
/// Exact Taylor coefficients a_0..a_order of tan.
std::vector<Rational> tangent_coefficients(int order);

/// The four classical quotient series for g and h.
enum class GenocchiSeries {
  /// sum_{n>=1} (n-1)! n! z^n / prod_{k=1}^n (1 + k^2 z)      -> g_n
  GFactorials,
  /// sum_{n>=0} n! (n+1)! z^n / prod_{k=1}^n (1 + k(k+1) z)   -> h_n
  HFactorials,
  /// sum_{n>=0} (n!)^2 z^n / prod_{k=1}^n (1 + k^2 z)          -> g_{n+1}
  GSquares,
  /// sum_{n>=1} (n!)^2 z^n / prod_{k=1}^n (1 + k(k+1) z)       -> h_{n-1}
  HSquares,
};

inline constexpr int kMaxSeriesOrder = 8;

/// Throws SizeLimit when order > kMaxSeriesOrder.
TruncatedSeries genocchi_series(GenocchiSeries which, int order);
/// Coefficient k as an integer; throws IntegralityFailure.
Integer integer_coefficient(const TruncatedSeries& s, int k);

/// sum_{n>=1} (t-1)_n (t-1)_{n-1} u^n / prod_{k=1}^n (1 - k(t-k) u)
TruncatedSeries chi_generating_series(int order);
/// (t-1) sum_{n>=1} ((t-1)_n)^2 u^n / prod_{k=1}^n (1 - k(t-k) u)
TruncatedSeries shifted_chi_series(int order);
/// sum_{n>=1} ((t-2)_{n-1})^2 u^n / prod_{k=1}^n (1 - k(t-k) u)
TruncatedSeries reduced_chi_series(int order);
/// 1 + 2 sum_{n>=1} (n!)^2 u^n / prod_{k=1}^{n-1} (1 + k(k+1) u)
TruncatedSeries median_genocchi_closing_series(int order);

/// Right side of the six-variable identity for sum_n Lambda_{2n} u^n at a
/// rational point (x, y, z, xbar, ybar, zbar).
TruncatedSeries six_variable_series(int order, const std::array<Rational, 6>& point);

/// Compares the chi series with the D-permutation formula coefficientwise.
CheckOutcome check_chi_series(int order);
CheckOutcome check_shifted_chi_series(int order);
CheckOutcome check_reduced_chi_series(int order);
/// t = 0 and t = -1 specializations of the chi series against g and h; t = 0
/// and t = 1 specializations of the reduced series against g_{n+1}, h_{n-1}.
CheckOutcome check_chi_series_specializations(int order);
/// `samples` random six-tuples with entries in [-3, 3] drawn from seed, plus
/// the all-ones and the (2,2,1,0,2,1) points.
CheckOutcome check_six_variable_identity(int order, int samples, std::uint64_t seed);
CheckOutcome check_closing_h_formula(int order);
/// Each classical series against enumeration over the overlap, integrality included.
CheckOutcome check_genocchi_series(GenocchiSeries which, int order);
CheckOutcome check_tangent_and_parity_models(int max_n);

std::string to_string(GenocchiSeries which);

}  // namespace genlab
