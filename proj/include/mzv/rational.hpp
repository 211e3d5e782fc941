#pragma once

#include <gmpxx.h>

#include <string>

namespace mzv {

using Int = mpz_class;
using Rational = mpq_class;

// "p" or "p/q", canonicalized.
Rational rational_from_string(const std::string& s);

// "p" when q==1, else "p/q".
std::string rational_to_string(const Rational& q);

}  // namespace mzv
