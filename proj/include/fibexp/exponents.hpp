#pragma once

#include "fibexp/families.hpp"
#include "fibexp/xi.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <vector>

namespace fibexp {

// Best-approximation point: strictly smaller residual than everything of
// height at most `height`.
struct RecordPoint {
    Vec3 point;        // content-reduced, sign-canonical
    Int height;        // max-norm (linear-form side) or x0 (simultaneous side)
    double value;      // residual; can underflow to 0 for candidate points
    double log_value;  // natural log of the residual, always finite here
};

enum class ExponentKind { OmegaHat, LambdaHat };
enum class EstimateMethod { Candidate, BruteForce };

struct SlopeSample {
    double at;     // sequence index (candidate) or log10 of record height (brute force)
    double slope;
};

struct ExponentEstimate {
    ExponentKind kind{};
    EstimateMethod method{};
    std::vector<SlopeSample> samples;
    double estimate = 0;
    // Predicted window when a family target is known; NaN otherwise.
    double target_lo = 0, target_hi = 0;
};

struct BruteOptions {
    unsigned threads = 0;  // 0: hardware concurrency
};

// Minimum of |x0 + x1 xi + x2 xi^2| over nonzero integer triples of
// max-norm <= x_cap: x1, x2 are scanned, x0 is the nearest admissible
// integer (with the neighbours tried at exact ties). Deterministic for any
// thread count. Requires the xi error bound below x_cap^-4.
RecordPoint omega_bruteforce(const std::array<BigReal, 3>& y, long x_cap,
                             BruteOptions opts = {});
std::vector<RecordPoint> omega_records(const std::array<BigReal, 3>& y, long x_cap,
                                       BruteOptions opts = {});

// Minimum of max(|x0 xi - x1|, |x0 xi^2 - x2|) over 1 <= x0 <= x_cap with
// nearest-integer x1, x2; heights are the x0 values.
RecordPoint lambda_bruteforce(const std::array<BigReal, 3>& y, long x_cap,
                              BruteOptions opts = {});
std::vector<RecordPoint> lambda_records(const std::array<BigReal, 3>& y, long x_cap,
                                        BruteOptions opts = {});

// Uniform-exponent samples from consecutive records: the value standing
// just below the next record height. Estimate is the minimum over the last
// quarter of the samples. Needs at least three records.
ExponentEstimate uniform_slope(const std::vector<RecordPoint>& records, ExponentKind kind,
                               EstimateMethod method);

struct CandidateSlopes {
    ExponentEstimate omega;                      // from the reduced z_i points
    std::vector<SlopeSample> lambda_diagnostic;  // y_i-based; reported, not an estimate
    double beta_star = 0;                        // observed det-vs-norm growth exponent
};

// Slope samples from the candidate points z_i (and the y_i diagnostic) for
// i in [i_min, i_max].
CandidateSlopes candidate_slopes(FibSequence& seq, const std::array<BigReal, 3>& y,
                                 std::size_t i_min, std::size_t i_max);

// |lambda - (1 - 1/omega)| <= tol.
bool jarnik_check(double lambda_est, double omega_est, double tol);

struct SweepRow {
    long long k = 0, l = 0;
    FamilyParams family{};
    std::size_t depth = 0;
    double alpha = 0, alpha_rational = 0, beta = 0;  // det-growth envelope exponents
    double target_lo = 0, target_hi = 0;
    double omega_candidate = 0;
    std::optional<double> omega_brute, lambda_brute, jarnik_residual;
    double beta_star = 0;
};

struct SweepOptions {
    std::size_t i_max = 14;
    long x_omega = 1000;     // 0 disables the quadratic scan
    long x_lambda = 100000;  // 0 disables the linear scan
    unsigned threads = 0;
};

std::vector<SweepRow> density_sweep(const std::vector<TargetParams>& grid,
                                    SweepOptions opts = {});

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
nlohmann::json sweep_json(const std::vector<SweepRow>& rows);

}  // namespace fibexp
