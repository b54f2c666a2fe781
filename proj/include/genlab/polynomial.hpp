#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

#include "genlab/rational.hpp"

namespace genlab {

/// Dense univariate polynomial in t with exact rational coefficients.
///
/// coeffs()[i] is the coefficient of t^i; trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(const Rational& c);
  /// The indeterminate t.
  static Polynomial t();
  /// a*t + b
  static Polynomial linear(const Rational& a, const Rational& b);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int i) const;
  Rational leading() const;
  bool is_integral() const;
  /// Throws IntegralityFailure naming `what` unless is_integral().
  void require_integral(const std::string& what) const;

  Rational eval(const Rational& x) const;
  Polynomial eval(const Polynomial& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient of exact division; throws InvalidArgument if the remainder is
  /// nonzero or the divisor is zero.
  Polynomial divide_exact(const Polynomial& divisor) const;
  /// Quotient and remainder of long division.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  /// "t^3 - 3t^2 + 3t - 1"
  std::string to_string(const std::string& var = "t") const;
  /// {"coeffs":[c0,c1,...]}
  nlohmann::json to_json() const;
  static Polynomial from_json(const nlohmann::json& j);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& p, unsigned k);

/// a(a-1)...(a-n+1); 1 when n = 0.
Polynomial falling_factorial(const Polynomial& a, unsigned n);
/// a(a+1)...(a+n-1); 1 when n = 0.
Polynomial rising_factorial(const Polynomial& a, unsigned n);
/// binomial(a, n) = falling_factorial(a, n) / n!
Polynomial binomial(const Polynomial& a, unsigned n);

}  // namespace genlab
