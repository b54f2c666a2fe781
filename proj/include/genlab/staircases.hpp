#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "genlab/polynomial.hpp"

namespace genlab {

/// f : [m] -> [m] with f(j) >= j.
class ExcedentFunction {
 public:
  ExcedentFunction() = default;
  /// values[j-1] = f(j). Throws InvalidArgument unless j <= f(j) <= m.
  explicit ExcedentFunction(std::vector<int> values);

  int m() const { return static_cast<int>(values_.size()); }
  int operator()(int j) const { return values_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<int>& values() const { return values_; }

  /// |f^{-1}(i)|
  int preimage_size(int i) const;
  bool is_fixed_point(int j) const { return (*this)(j) == j; }
  /// Fixed point whose preimage is only itself.
  bool is_isolated_fixed_point(int j) const { return is_fixed_point(j) && preimage_size(j) == 1; }

  /// {"m":m,"f":[...]}
  nlohmann::json to_json() const;
  static ExcedentFunction from_json(const nlohmann::json& j);

  auto operator<=>(const ExcedentFunction&) const = default;

 private:
  std::vector<int> values_;
};

/// Image is exactly {2, 4, ..., m} (m even).
bool is_surjective_staircase(const ExcedentFunction& f);

inline constexpr int kMaxStaircaseSize = 12;

/// Visit every surjective staircase on [m]; with no_even_maxima, only those
/// with me(f) = 0. Throws SizeLimit when m > kMaxStaircaseSize.
void for_each_staircase(int m, bool no_even_maxima, const std::function<void(const ExcedentFunction&)>& visit);
std::vector<ExcedentFunction> staircases(int m, bool no_even_maxima = false);

/// Statistics over j in [m-2]: fixed points f(j)=j, surfixed points
/// f(j)=j+1, maxima f(j)=m; doubled/isolated by whether another column maps
/// to the same row.
struct SixStatistics {
  int mo = 0;
  int fd = 0;
  int si = 0;
  int me = 0;
  int fi = 0;
  int sd = 0;
  auto operator<=>(const SixStatistics&) const = default;
};

/// Any excedent function on an even ground set is accepted.
SixStatistics six_statistics(const ExcedentFunction& f);
/// j in [m-2] with f(j) = m
std::vector<int> maxima(const ExcedentFunction& f);

/// Arguments of the six-variable polynomial, in the order x, y, z, xbar, ybar, zbar
/// (weights of mo, fd, si, me, fi, sd).
using LambdaArgs = std::array<Polynomial, 6>;

/// Distribution of the six statistics over the staircases on [m].
std::map<SixStatistics, std::uint64_t> six_statistics_distribution(int m);
/// sum over staircases on [m] of x^mo y^fd z^si xbar^me ybar^fi zbar^sd; 0^0 = 1.
Polynomial lambda_specialized(int m, const LambdaArgs& args);
Rational lambda_at(int m, const std::array<Rational, 6>& args);

/// Image contains every even number up to m, and f(j) is odd exactly when
/// j is an odd isolated fixed point.
bool in_g_set(const ExcedentFunction& g);
void for_each_g_set_member(int m, const std::function<void(const ExcedentFunction&)>& visit);

/// g on [m] to the staircase on [m+2] that sends every j with g(j) odd to
/// m+2, as do m+1 and m+2. Throws NotInGSet.
ExcedentFunction gamma_slide(const ExcedentFunction& g);
/// Inverse of gamma_slide. Throws InvalidArgument unless f is a staircase
/// with no even maxima.
ExcedentFunction gamma_unslide(const ExcedentFunction& f);
/// The fixed-point and maxima correspondences between g and gamma_slide(g).
bool slide_properties_hold(const ExcedentFunction& g);

struct PolynomialIdentity {
  bool equal = false;
  Polynomial lhs;
  Polynomial rhs;
};

/// sum over D on [2n] of t^(cycles) against Lambda_{2n+2}(t,t,1,0,t,1).
PolynomialIdentity cycle_count_identity(int n);

/// Multiset of (even cycle maxima, even fixed points, odd fixed points) over
/// D on [2n] against (fixed points, isolated fixed points, odd maxima) over
/// staircases on [2n+2] without even maxima.
bool joint_distribution_matches(int n);

/// Rows m..1 (or only even rows when even_rows_only), X where f(j) = row.
std::string render_tableau(const ExcedentFunction& f, bool even_rows_only);

}  // namespace genlab
