#pragma once

#include <gmpxx.h>

#include <string>

namespace unitri {

using Rational = mpq_class;

/// "3", "-1/2"; always in lowest terms.
std::string to_string(const Rational& q);

Rational make_rational(long numerator, long denominator = 1);

}  // namespace unitri
