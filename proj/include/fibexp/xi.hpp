#pragma once

#include "fibexp/sequence.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibexp {

// Real number carried as an exact rational approximant plus a certified
// error bound. All arithmetic on the way here is exact; rounding happens
// only when rendering.
struct BigReal {
    Rat value;
    Rat err;                // nonnegative; zero only for exactly known values
    std::size_t depth = 0;  // deepest sequence index used

    std::string decimal(unsigned decimals) const;  // rounded decimal expansion
    std::string err_string() const { return magnitude_string(err); }
};

class PrecisionError : public std::runtime_error {
  public:
    PrecisionError(const std::string& what, BigReal best)
        : std::runtime_error(what), best_(std::move(best)) {}
    const BigReal& best() const { return best_; }

  private:
    BigReal best_;
};

// delta_i = |det w_i| / ||w_i||^2 for i <= i_max, and the first index from
// which every observed step contracts by at least 4.
struct DeltaSeq {
    std::vector<Rat> deltas;
    std::optional<std::size_t> i0;
};

DeltaSeq delta_seq(FibSequence& seq, std::size_t i_max);

// Ratio approximant of the limit direction: xi ~ y_{i,1} / y_{i,0} at the
// smallest depth whose certified error delivers the requested number of
// decimal digits. The bound is the consecutive-gap tail model (factor 5/3
// once quarter-contraction of the gaps is observed) widened by a 5x safety
// margin; it is validated, not proof-grade, and the recomputation checks in
// the tests back it up.
//
// Extends the sequence as needed, so calls are single-writer like extend();
// pre-extend and share read-only if running several estimates concurrently.
BigReal xi_approx(FibSequence& seq, unsigned digits, std::size_t max_depth = 48);

// (1, xi, xi^2) with first-order error propagation on the square.
std::array<BigReal, 3> y_vector(const BigReal& xi);

struct ResidualPair {
    Rat wedge_norm, wedge_err;  // ||y_i ^ y|| and its error bound
    Rat z_scalar, z_err;        // |<z_i, y>| and its error bound
};

// Residual quantities at index i evaluated against the high-precision y.
// Throws PrecisionError when the bounds cannot certify three decimal orders
// of headroom below the values themselves.
ResidualPair residuals(FibSequence& seq, const std::array<BigReal, 3>& y, std::size_t i);

// A y = (1, xi, xi^2) deep enough that residuals() certifies every index in
// [3, i_max].
std::array<BigReal, 3> y_for_residuals(FibSequence& seq, std::size_t i_max,
                                       std::size_t max_depth = 64);

}  // namespace fibexp
