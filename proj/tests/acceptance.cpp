// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include "fibexp/exponents.hpp"
#include "fibexp/families.hpp"
#include "fibexp/sequence.hpp"
#include "fibexp/xi.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace fibexp;

namespace {

int g_failures = 0;

void run(const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

const std::vector<FamilyParams> kFamilies = {
    make_family(2, 1, 2), make_family(4, 1, 2), make_family(2, 3, 4)};

FibSequence make_seq(const FamilyParams& p) { return FibSequence(family_seed(p)); }

std::string fam_name(const FamilyParams& p) {
    std::ostringstream os;
    os << "(" << p.a << "," << p.b << "," << p.c << ")";
    return os.str();
}

bool c1_identities(std::string& detail) {
    for (const auto& p : kFamilies) {
        FibSequence seq = make_seq(p);
        const Report rec = verify_recurrences(seq, 12);
        const Report ari = verify_arithmetic(seq, 12);
        if (!rec.all_pass() || !ari.all_pass()) {
            const CheckRecord* f = rec.all_pass() ? ari.first_failure() : rec.first_failure();
            detail = fam_name(p) + " " + f->check + "@" + std::to_string(f->index);
            return false;
        }
    }
    return true;
}

bool c2_constants(std::string& detail) {
    for (const auto& p : kFamilies) {
        FibSequence seq = make_seq(p);
        seq.extend(13);
        const Int a = p.a;
        if (seq.det_y012() != family_det_y012(p) ||
            (p.a == 2 && p.b == 1 && p.c == 2 && seq.det_y012() != 16)) {
            detail = fam_name(p) + " det(y0,y1,y2)";
            return false;
        }
        if (seq.seed().n->det() != -a) {
            detail = fam_name(p) + " det N != -a";
            return false;
        }
        // det w_i = a^{F_i} with F_0 = F_1 = 1
        std::vector<unsigned> fib{1, 1};
        while (fib.size() <= 12) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
        for (std::size_t i = 0; i <= 12; ++i) {
            if (seq.det(i) != pow(a, fib[i])) {
                detail = fam_name(p) + " det w_" + std::to_string(i);
                return false;
            }
        }
        // c = b+1 here, so the reduced z points are exactly a^{-1} z_i
        const Int a3 = a * a * a;
        for (std::size_t i = 0; i <= 12; ++i) {
            if (content(seq.zhat(i)) != a3) {
                detail = fam_name(p) + " content(zhat_" + std::to_string(i) + ")";
                return false;
            }
        }
    }
    return true;
}

bool c3_growth(std::string& detail) {
    for (const auto& p : kFamilies) {
        FibSequence seq = make_seq(p);
        const Report rep =
            verify_growth(seq, 18, GrowthExponents{family_alpha(p), family_beta(p)});
        if (!rep.all_pass()) {
            const CheckRecord* f = rep.first_failure();
            detail = fam_name(p) + " " + f->check + "@" + std::to_string(f->index);
            return false;
        }
    }
    return true;
}

bool c4_convergence(std::string& detail) {
    {
        FibSequence seq = make_seq(make_family(2, 3, 4));
        const DeltaSeq ds = delta_seq(seq, 12);
        if (!ds.i0 || *ds.i0 > 6) {
            detail = "delta contraction index";
            return false;
        }
    }
    {
        FibSequence seq = make_seq(make_family(2, 1, 2));
        const BigReal xi = xi_approx(seq, 4);
        if (xi.decimal(4) != "2.8744") {
            detail = "xi(2,1,2) = " + xi.decimal(4);
            return false;
        }
    }
    for (const auto& p : kFamilies) {
        if (family_degenerate(p)) continue;
        FibSequence seq = make_seq(p);
        const BigReal xi = xi_approx(seq, 60);
        seq.extend(xi.depth + 2);
        const Vec3& deeper = seq.y(xi.depth + 2);
        if (deeper.x0 == 0) continue;
        const Rat r(deeper.x1, deeper.x0);
        if (abs(xi.value - r) > xi.err) {
            detail = fam_name(p) + " depth+2 recomputation outside the bound";
            return false;
        }
    }
    return true;
}

bool c5_candidate_targets(std::string& detail) {
    FibSequence seq = make_seq(make_family(2, 3, 4));
    const auto y = y_for_residuals(seq, 14);
    const CandidateSlopes cs = candidate_slopes(seq, y, 3, 14);
    const auto [lo, hi] = target_interval(params_from_kl(3, 1));
    for (const auto& s : cs.omega.samples) {
        if (s.at < 10) continue;
        if (s.slope < lo - 0.05 || s.slope > hi + 0.05) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "sample %.0f = %.4f outside [%.4f, %.4f]",
                          s.at, s.slope, lo - 0.05, hi + 0.05);
            detail = buf;
            return false;
        }
    }
    return true;
}

bool c6_oracle_equivalence(std::string& detail) {
    FibSequence seq = make_seq(make_family(2, 3, 4));
    const auto y = y_for_residuals(seq, 10);
    seq.extend(10);
    int matches = 0, tried = 0;
    std::string misses;
    for (std::size_t i = 0; i <= 9; ++i) {
        const Vec3 u = seq.reduced_z(i);
        const Int h = norm(u);
        if (h > 5000) break;
        ++tried;
        const RecordPoint r = omega_bruteforce(y, h.convert_to<long>());
        if (r.point == u) {
            ++matches;
        } else {
            std::ostringstream os;
            os << " i=" << i << " argmin " << r.point << " vs " << u;
            misses += os.str();
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%d/%d candidate heights matched", matches, tried);
    detail = buf + misses;
    return matches >= 3;
}

bool c7_density_sweep(std::string& detail) {
    std::vector<TargetParams> grid;
    for (const auto& [k, l] : std::vector<std::pair<long long, long long>>{
             {3, 1}, {4, 1}, {5, 1}, {5, 2}, {7, 2}, {8, 3}})
        grid.push_back(params_from_kl(k, l));
    SweepOptions opts;
    opts.i_max = 14;
    opts.x_omega = 0;  // candidate estimates are what this criterion checks
    opts.x_lambda = 0;
    const auto rows = density_sweep(grid, opts);
    if (rows.size() != grid.size()) {
        detail = "row count";
        return false;
    }
    double tmin = 1e9, tmax = -1e9;
    for (const auto& r : rows) {
        tmin = std::min(tmin, r.target_lo);
        tmax = std::max(tmax, r.target_lo);
        if (r.omega_candidate < r.target_lo - 0.05 || r.omega_candidate > r.target_hi + 0.05) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "(%lld,%lld) estimate %.4f outside [%.4f, %.4f]",
                          r.k, r.l, r.omega_candidate, r.target_lo - 0.05,
                          r.target_hi + 0.05);
            detail = buf;
            return false;
        }
    }
    const double span = tmax - tmin;
    char buf[96];
    std::snprintf(buf, sizeof buf, "targets span %.4f of %.4f", span, kGammaSq - 2.0);
    detail = buf;
    return span >= 0.4 * (kGammaSq - 2.0);
}

bool c8_jarnik(std::string& detail) {
    if (!jarnik_check(0.5, 2.0, 1e-9) || !jarnik_check(1.0 / kGamma, kGammaSq, 1e-9)) {
        detail = "anchor identities";
        return false;
    }
    FibSequence seq = make_seq(make_family(2, 3, 4));
    const auto y = y_for_residuals(seq, 14);
    const CandidateSlopes cs = candidate_slopes(seq, y, 3, 14);
    const auto recs = lambda_records(y, 1000000);
    if (recs.size() < 3) {
        detail = "too few simultaneous records";
        return false;
    }
    const ExponentEstimate lam =
        uniform_slope(recs, ExponentKind::LambdaHat, EstimateMethod::BruteForce);
    const double residual = std::abs(lam.estimate - (1.0 - 1.0 / cs.omega.estimate));
    char buf[96];
    std::snprintf(buf, sizeof buf, "lambda %.4f omega %.4f residual %.4f", lam.estimate,
                  cs.omega.estimate, residual);
    detail = buf;
    return jarnik_check(lam.estimate, cs.omega.estimate, 0.1);
}

bool c9_property_suites(std::string& detail) {
    std::mt19937_64 rng(424243u);
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    const Mat2 j{0, 1, -1, 0};
    for (int it = 0; it < 10000; ++it) {
        const Vec3 x{dist(rng), dist(rng), dist(rng)};
        const Vec3 y{dist(rng), dist(rng), dist(rng)};
        const Vec3 z{dist(rng), dist(rng), dist(rng)};

        if (norm(scalar(x, z) * y - scalar(x, y) * z) > 2 * norm(x) * norm(wedge(y, z))) {
            detail = "scalar inequality";
            return false;
        }
        if (norm(y) * norm(wedge(x, z)) >
            norm(z) * norm(wedge(x, y)) + 2 * norm(x) * norm(wedge(y, z))) {
            detail = "wedge inequality";
            return false;
        }
        if (wedge(wedge(x, y), wedge(y, z)) != det3(x, y, z) * y) {
            detail = "triple wedge identity";
            return false;
        }
        const Mat2 xm = x.sym_mat();
        if (!(xm * j * xm == x.det() * j)) {
            detail = "symmetric J conjugation";
            return false;
        }
        if (!x.is_zero() && !y.is_zero() && !z.is_zero() &&
            proj_dist(x, z) > proj_dist(x, y) + 2 * proj_dist(y, z)) {
            detail = "projective near-triangle inequality";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    run("C1 exact identity suite, families (2,1,2),(4,1,2),(2,3,4), i<=12", c1_identities);
    run("C2 family constants: det(y0,y1,y2), det N, det w_i, reduced z content",
        c2_constants);
    run("C3 norm growth: two-sided product inequality i<=18 and det envelope",
        c3_growth);
    run("C4 convergence: delta contraction, xi digits, depth+2 agreement",
        c4_convergence);
    run("C5 candidate slope samples i=10..14 inside the (2,3,4) target window",
        c5_candidate_targets);
    run("C6 scan argmin equals reduced z_i at its own height, >=3 indices",
        c6_oracle_equivalence);
    run("C7 density sweep: six rows inside their windows, spread >= 0.4 of (2, gamma^2)",
        c7_density_sweep);
    run("C8 jarnik relation: brute-force lambda vs candidate omega at tol 0.1",
        c8_jarnik);
    run("C9 exact property suites on 10^4 random triples", c9_property_suites);

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
    } else {
        std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    }
    return g_failures == 0 ? 0 : 1;
}
