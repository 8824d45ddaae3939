#include "fibexp/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace fibexp {

double log_abs(const Int& n) {
    if (n == 0) return -std::numeric_limits<double>::infinity();
    Int a = abs(n);
    const unsigned long bits = msb(a) + 1;
    if (bits <= 62) return std::log(a.convert_to<double>());
    const unsigned long shift = bits - 62;
    const Int top = a >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

double log_abs(const Rat& r) {
    if (r == 0) return -std::numeric_limits<double>::infinity();
    return log_abs(numerator(r)) - log_abs(denominator(r));
}

Int pow10(unsigned k) {
    Int p = 1;
    for (unsigned i = 0; i < k; ++i) p *= 10;
    return p;
}

std::string magnitude_string(const Rat& r) {
    if (r == 0) return "0";
    const double ln = log_abs(r);
    const double l10 = ln / std::numbers::ln10;
    auto e10 = static_cast<long>(std::floor(l10));
    double mant = std::pow(10.0, l10 - static_cast<double>(e10));
    if (mant >= 9.95) {  // keep a single leading digit after rounding
        mant /= 10.0;
        ++e10;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1fe%ld", mant, e10);
    return buf;
}

}  // namespace fibexp
