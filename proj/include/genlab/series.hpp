#pragma once

#include <vector>

#include "genlab/polynomial.hpp"

namespace genlab {

/// Power series in u truncated after u^order, with coefficients in Q[t].
///
/// All arithmetic is closed under truncation: products drop every term of
/// degree greater than order in u.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<Polynomial> terms);

  static TruncatedSeries one(int order);
  /// c * u^k (zero when k > order).
  static TruncatedSeries monomial(int order, int k, const Polynomial& c);

  int order() const { return static_cast<int>(terms_.size()) - 1; }
  const std::vector<Polynomial>& terms() const { return terms_; }
  const Polynomial& coeff(int k) const { return terms_.at(static_cast<std::size_t>(k)); }
  Polynomial& coeff(int k) { return terms_.at(static_cast<std::size_t>(k)); }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Polynomial& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Polynomial& c) { return a *= c; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.terms_ == b.terms_; }

  /// Multiplicative inverse; the u^0 term must be a nonzero constant.
  TruncatedSeries inverse() const;

  /// Substitute t = x in every coefficient.
  TruncatedSeries eval_t(const Rational& x) const;

  bool is_integral() const;

 private:
  void require_same_order(const TruncatedSeries& o) const;
  std::vector<Polynomial> terms_;
};

/// Expansion of 1 / (1 - q r(t) u) up to u^order: term k is (q r)^k.
TruncatedSeries series_inverse_linear(const Rational& q, const Polynomial& r, int order);

}  // namespace genlab
