#pragma once

#include "fibexp/linalg.hpp"
#include "fibexp/report.hpp"
#include "fibexp/symmetrizer.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fibexp {

// Admissible sequence w_{i+2} = w_{i+1} w_i together with its symmetric
// points y_i and the cleared points zhat_i = det(w2) * z_i, which stay in
// Z^3. The y_i are generated by the three-term recurrence and spot-checked
// against the defining products at regular intervals; traces and
// determinants are kept alongside.
//
// extend() is the only mutator (single writer); the accessors require the
// index to be materialized already and are safe to call concurrently once
// extension is done.
class FibSequence {
  public:
    explicit FibSequence(SeedPair seed);  // throws std::invalid_argument if not admissible

    // Materializes w, y, trace, det through index up_to and zhat through
    // up_to - 1. No-op when already there.
    void extend(std::size_t up_to);

    std::size_t size() const { return ws_.size(); }  // materialized w indices
    const Mat2& w(std::size_t i) const { return ws_.at(i); }
    const Vec3& y(std::size_t i) const { return ys_.at(i); }
    const Vec3& zhat(std::size_t i) const { return zhats_.at(i); }
    const Int& trace(std::size_t i) const { return traces_.at(i); }
    const Int& det(std::size_t i) const { return dets_.at(i); }
    const Int& det_y012() const { return d3_; }
    const Int& det_w2() const { return dets_.at(2); }
    const SeedPair& seed() const { return seed_; }

    // zhat_i divided by its content, sign-canonical. This is the primitive
    // representative of the direction [z_i].
    Vec3 reduced_z(std::size_t i) const;

    // |det w_i| / ||w_i||^2, the quantity controlling projective convergence.
    Rat delta(std::size_t i) const;

  private:
    void push_next();
    const Mat2& n_for(std::size_t i) const;

    SeedPair seed_;
    Mat2 nt_;  // transpose of the symmetrizer
    std::vector<Mat2> ws_;
    std::vector<Vec3> ys_;
    std::vector<Vec3> zhats_;
    std::vector<Int> traces_, dets_;
    Int d3_;
};

// Exact verification of the five recurrence/determinant identities linking
// traces, y points and z points, for 0 <= i <= i_max.
Report verify_recurrences(FibSequence& seq, std::size_t i_max);

// Exact verification of the arithmetic facts (coprimality, primitivity,
// content divisibility, z integrality) under the standard hypotheses; the
// hypotheses themselves are checked first and failures skip the rest.
Report verify_arithmetic(FibSequence& seq, std::size_t i_max);

struct GrowthExponents {
    double alpha;  // (2 ||w_i||)^alpha <= |det w_i|
    double beta;   // |det w_i| <= ||w_i||^beta
};

// Norm growth checks: entry-ordering form preserved, the exact two-sided
// product inequality, a logged band for ||w_{i+1}|| / ||w_i||^gamma, and
// (optionally) the determinant-vs-norm envelope above.
Report verify_growth(FibSequence& seq, std::size_t i_max,
                     std::optional<GrowthExponents> env = std::nullopt);

// Entry ordering under which the two-sided product inequality holds:
// positive entries with 1 <= e11 <= min(e12, e21) and max(e12, e21) <= e22.
bool growth_form(const Mat2& m);

}  // namespace fibexp
