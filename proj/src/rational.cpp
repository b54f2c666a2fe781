#include "genlab/rational.hpp"

#include <limits>

#include "genlab/errors.hpp"

namespace genlab {

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

nlohmann::json to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

nlohmann::json to_json(const Rational& q) {
  if (is_integer(q)) return to_json(Integer(q.get_num()));
  return to_string(q);
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw InvalidArgument("not an integer: " + j.dump());
    return z;
  }
  throw InvalidArgument("not an integer: " + j.dump());
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0)
      throw InvalidArgument("not a rational: " + j.dump());
    q.canonicalize();
    return q;
  }
  throw InvalidArgument("not a rational: " + j.dump());
}

}  // namespace genlab
