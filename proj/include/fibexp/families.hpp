#pragma once

#include "fibexp/sequence.hpp"

#include <utility>

namespace fibexp {

// Three-parameter seed family
//   w0 = [[1, b], [a, a(b+1)]],  w1 = [[1, c], [a, a(c+1)]]
// with a >= 2 and c >= b >= 1. Both determinants equal a, the symmetrizer
// below has determinant -a, and det(y0,y1,y2) = a^4 (c-b); the family is
// degenerate (triple determinant zero) exactly when b = c.
struct FamilyParams {
    Int a, b, c;
};

FamilyParams make_family(Int a, Int b, Int c);  // validates; throws

Mat2 family_w0(const FamilyParams& p);
Mat2 family_w1(const FamilyParams& p);
Mat2 family_symmetrizer(const FamilyParams& p);  // closed form, already canonical
Int family_det_y012(const FamilyParams& p);      // a^4 (c-b)
bool family_degenerate(const FamilyParams& p);

// Growth envelope exponents for the family: |det w| against the norm,
// alpha = log a / log(2a(c+1)) and beta = log a / log(a(b+1)).
double family_alpha(const FamilyParams& p);
double family_beta(const FamilyParams& p);

// Seed pair with the symmetrizer cross-checked against the linear-system
// solver, plus determinant sanity checks.
SeedPair family_seed(const FamilyParams& p);

// Parameters steering the target exponent: integers 0 < l < k picked so
// that t - eps <= l/(k+2) <= l/k < t, realized by the family with
// a = 2^l, b = 2^{k-l} - 1, c = 2^{k-l} (which makes beta exactly l/k).
struct TargetParams {
    double t = 0, eps = 0;
    long long k = 0, l = 0;
    FamilyParams family{};
    double alpha = 0;           // sharper family value log a / log(2a(c+1))
    double alpha_rational = 0;  // l / (k+2)
    double beta = 0;            // l / k
};

// Smallest k (ties: smallest l) satisfying the three inequalities above.
// Requires 0 < t < 1/gamma^2 and eps > 0.
TargetParams target_params(double t, double eps);

// Same structure from an explicit (k, l) pair, for sweep grids.
TargetParams params_from_kl(long long k, long long l);

// Predicted window for the dual uniform exponent:
// (gamma^2 - gamma*beta, gamma^2 - gamma*alpha).
std::pair<double, double> target_interval(double alpha, double beta);
std::pair<double, double> target_interval(const TargetParams& p);

}  // namespace fibexp
