#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace fibexp {

// Exact integer and rational carriers used throughout. Matrix entries grow
// doubly exponentially with the sequence index, so everything that must be
// exact stays in these types; doubles appear only in diagnostics and slope
// estimates.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::numerator;
using boost::multiprecision::denominator;

// Natural log of |n|, valid far outside double range.
double log_abs(const Int& n);
double log_abs(const Rat& r);

Int pow10(unsigned k);

// Golden ratio and derived endpoints; these bound the exponents studied here.
inline constexpr double kGamma = 1.6180339887498948482;
inline constexpr double kGammaSq = kGamma + 1.0;     // gamma^2
inline constexpr double kInvGammaSq = 2.0 - kGamma;  // 1/gamma^2 = 2 - gamma

// "1.2e-345"-style magnitude string for a nonnegative rational.
std::string magnitude_string(const Rat& r);

}  // namespace fibexp
