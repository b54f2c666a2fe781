#include "genlab/series.hpp"

#include <algorithm>

#include "genlab/errors.hpp"

namespace genlab {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw InvalidArgument("series order must be nonnegative");
  terms_.assign(static_cast<std::size_t>(order + 1), Polynomial());
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Polynomial> terms) : TruncatedSeries(order) {
  for (std::size_t k = 0; k < terms.size() && k < terms_.size(); ++k) terms_[k] = std::move(terms[k]);
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.terms_[0] = Polynomial::constant(1);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, int k, const Polynomial& c) {
  TruncatedSeries s(order);
  if (k >= 0 && k <= order) s.terms_[static_cast<std::size_t>(k)] = c;
  return s;
}

void TruncatedSeries::require_same_order(const TruncatedSeries& o) const {
  if (o.order() != order()) throw InvalidArgument("series order mismatch");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_order(o);
  for (std::size_t k = 0; k < terms_.size(); ++k) terms_[k] += o.terms_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_order(o);
  for (std::size_t k = 0; k < terms_.size(); ++k) terms_[k] -= o.terms_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  require_same_order(o);
  std::vector<Polynomial> r(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < terms_.size(); ++j) {
      if (o.terms_[j].is_zero()) continue;
      r[i + j] += terms_[i] * o.terms_[j];
    }
  }
  terms_ = std::move(r);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Polynomial& c) {
  for (auto& p : terms_) p *= c;
  return *this;
}

TruncatedSeries TruncatedSeries::inverse() const {
  const Polynomial& a0 = terms_[0];
  if (a0.degree() != 0) throw InvalidArgument("series inverse needs a nonzero constant u^0 term");
  Rational inv0 = 1 / a0.coeff(0);
  TruncatedSeries b(order());
  b.terms_[0] = Polynomial::constant(inv0);
  for (std::size_t k = 1; k < terms_.size(); ++k) {
    Polynomial acc;
    for (std::size_t i = 1; i <= k; ++i) acc += terms_[i] * b.terms_[k - i];
    b.terms_[k] = acc * Rational(-inv0);
  }
  return b;
}

TruncatedSeries TruncatedSeries::eval_t(const Rational& x) const {
  TruncatedSeries r(order());
  for (std::size_t k = 0; k < terms_.size(); ++k) r.terms_[k] = Polynomial::constant(terms_[k].eval(x));
  return r;
}

bool TruncatedSeries::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Polynomial& p) { return p.is_integral(); });
}

TruncatedSeries series_inverse_linear(const Rational& q, const Polynomial& r, int order) {
  TruncatedSeries s(order);
  Polynomial step = r * q;
  Polynomial acc = Polynomial::constant(1);
  for (int k = 0; k <= order; ++k) {
    s.coeff(k) = acc;
    acc *= step;
  }
  return s;
}

}  // namespace genlab
