#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace elemdiff {

using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "p", "-p" or "p/q"; the result is canonicalized.
Rational parseRational(std::string_view text);
std::string toString(const Rational& q);

}  // namespace elemdiff
