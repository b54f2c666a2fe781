#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include <json.hpp>

namespace genlab {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// n! as an exact integer.
Integer factorial(unsigned n);

/// Integers that fit in int64 become JSON numbers; everything else is a
/// decimal string ("p/q" for non-integers).
nlohmann::json to_json(const Integer& z);
nlohmann::json to_json(const Rational& q);

Integer integer_from_json(const nlohmann::json& j);
Rational rational_from_json(const nlohmann::json& j);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

}  // namespace genlab
