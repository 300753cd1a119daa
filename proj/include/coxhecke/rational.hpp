#pragma once

#include <gmpxx.h>

#include <string>

namespace coxhecke {

using Rational = mpq_class;
using BigInt = mpz_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool isZero(const Rational& r) { return sgn(r) == 0; }

}  // namespace coxhecke
