#pragma once

#include "fibexp/numeric.hpp"

#include <quadmath.h>

namespace fibexp::detail {

using quad = __float128;

// Top-113-bit conversion; exact for small integers, relative error below
// 2^-112 otherwise.
inline quad to_quad(const Int& n) {
    if (n == 0) return 0;
    const bool neg = n < 0;
    Int a = abs(n);
    const long bits = static_cast<long>(msb(a)) + 1;
    long shift = 0;
    if (bits > 113) {
        shift = bits - 113;
        a >>= shift;
    }
    static const Int kMask64 = (Int(1) << 64) - 1;
    const auto hi = static_cast<unsigned long long>(a >> 64);
    const auto lo = static_cast<unsigned long long>(a & kMask64);
    quad q = ldexpq(static_cast<quad>(hi), 64) + static_cast<quad>(lo);
    q = ldexpq(q, static_cast<int>(shift));
    return neg ? -q : q;
}

inline quad to_quad(const Rat& r) {
    if (r == 0) return 0;
    const Int& n = numerator(r);
    const Int& d = denominator(r);
    // scale the quotient to ~120 significant bits before dividing
    const long bn = static_cast<long>(msb(abs(n)));
    const long bd = static_cast<long>(msb(d));
    long shift = 120 - (bn - bd);
    if (shift < 0) shift = 0;
    const Int q = (n << shift) / d;
    return ldexpq(to_quad(q), static_cast<int>(-shift));
}

}  // namespace fibexp::detail
