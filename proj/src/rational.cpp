#include "unitri/rational.hpp"

#include <stdexcept>

namespace unitri {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

}  // namespace unitri
