#include "quartic/algebra/rational.hpp"

#include <cmath>

namespace quartic::algebra {

double log_bigint(const BigInt& n) {
  signed long exp;
  const double d = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(d) + static_cast<double>(exp) * std::log(2.0);
}

double log_rational(const Rational& q) {
  return log_bigint(q.get_num()) - log_bigint(q.get_den());
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace quartic::algebra
