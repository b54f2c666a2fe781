#include "genlab/polynomial.hpp"

#include <algorithm>

#include "genlab/errors.hpp"

namespace genlab {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::t() { return Polynomial({0, 1}); }

Polynomial Polynomial::linear(const Rational& a, const Rational& b) {
  return Polynomial(std::vector<Rational>{b, a});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

bool Polynomial::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

void Polynomial::require_integral(const std::string& what) const {
  if (!is_integral()) throw IntegralityFailure(what + " is not integral: " + to_string());
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::eval(const Polynomial& x) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += constant(*it);
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  int dd = divisor.degree();
  int qd = degree() - dd;
  if (qd < 0) return {Polynomial(), *this};
  std::vector<Rational> q(static_cast<std::size_t>(qd + 1), Rational(0));
  const Rational& lead = divisor.coeffs_.back();
  for (int k = qd; k >= 0; --k) {
    Rational c = rem[static_cast<std::size_t>(k + dd)] / lead;
    q[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero())
    throw InvalidArgument("polynomial " + to_string() + " is not divisible by " + divisor.to_string());
  return q;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    bool unit = mag == 1;
    if (!unit || i == 0) s += genlab::to_string(mag);
    if (i >= 1) s += var;
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

nlohmann::json Polynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : coeffs_) arr.push_back(genlab::to_json(c));
  return {{"coeffs", arr}};
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
  std::vector<Rational> c;
  for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
  return Polynomial(std::move(c));
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial r = Polynomial::constant(1);
  Polynomial base = p;
  while (k) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return r;
}

Polynomial falling_factorial(const Polynomial& a, unsigned n) {
  Polynomial r = Polynomial::constant(1);
  for (unsigned i = 0; i < n; ++i) r *= a - Polynomial::constant(i);
  return r;
}

Polynomial rising_factorial(const Polynomial& a, unsigned n) {
  Polynomial r = Polynomial::constant(1);
  for (unsigned i = 0; i < n; ++i) r *= a + Polynomial::constant(i);
  return r;
}

Polynomial binomial(const Polynomial& a, unsigned n) {
  Rational inv(1);
  inv /= Rational(factorial(n));
  return falling_factorial(a, n) * inv;
}

}  // namespace genlab
