#include "fibexp/exponents.hpp"

#include "parallel.hpp"
#include "quad_real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace fibexp {

namespace {

using detail::quad;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_precision(const std::array<BigReal, 3>& y, long x_cap) {
    if (x_cap < 1) throw std::invalid_argument("height cap must be at least 1");
    const Int x(x_cap);
    if (y[1].err * (x * x * x * x) >= 1)
        throw PrecisionError("xi error bound too large for height cap " +
                                 std::to_string(x_cap),
                             y[1]);
}

struct Cell {
    double v = kInf;
    long x0 = 0, x1 = 0, x2 = 0;
};

// Ties resolve to the first point in scan order (x1, then x2, then x0), so
// the outcome does not depend on how rows are split across threads.
bool lex_less(long a0, long a1, long a2, const Cell& c) {
    if (a1 != c.x1) return a1 < c.x1;
    if (a2 != c.x2) return a2 < c.x2;
    return a0 < c.x0;
}

void cell_update(Cell& c, double v, long x0, long x1, long x2) {
    if (v < c.v || (v == c.v && lex_less(x0, x1, x2, c))) {
        c.v = v;
        c.x0 = x0;
        c.x1 = x1;
        c.x2 = x2;
    }
}

double min_last_quartile(const std::vector<double>& s) {
    if (s.empty()) return kNaN;
    const std::size_t tail = std::max<std::size_t>(1, s.size() / 4);
    return *std::min_element(s.end() - static_cast<long>(tail), s.end());
}

RecordPoint make_record(const Vec3& raw, Int height, double v) {
    return {canonical_sign(reduce_content(raw)), std::move(height), v,
            v > 0 ? std::log(v) : -kInf};
}

}  // namespace

std::vector<RecordPoint> omega_records(const std::array<BigReal, 3>& y, long x_cap,
                                       BruteOptions opts) {
    require_precision(y, x_cap);
    const quad xi = detail::to_quad(y[1].value);
    const quad xi2 = detail::to_quad(y[2].value);
    const long x = x_cap;

    const long rows = 2 * x + 1;
    const unsigned chunks = static_cast<unsigned>(
        std::min<long>(static_cast<long>(detail::resolve_threads(opts.threads)), rows));
    std::vector<std::vector<Cell>> bins(chunks,
                                        std::vector<Cell>(static_cast<std::size_t>(x) + 1));

    detail::parallel_chunks(-x, x + 1, opts.threads, [&](long lo, long hi, unsigned ci) {
        auto& b = bins[ci];
        auto consider = [&](long x0, quad t, long x1, long x2) {
            if (x0 < -x || x0 > x) return;
            if (x0 == 0 && x1 == 0 && x2 == 0) return;
            const double v = static_cast<double>(fabsq(static_cast<quad>(x0) + t));
            const long h = std::max({std::labs(x0), std::labs(x1), std::labs(x2)});
            cell_update(b[static_cast<std::size_t>(h)], v, x0, x1, x2);
        };
        for (long x1 = lo; x1 < hi; ++x1) {
            const quad t1 = static_cast<quad>(x1) * xi;
            for (long x2 = -x; x2 <= x; ++x2) {
                const quad t = t1 + static_cast<quad>(x2) * xi2;
                const long x0 = static_cast<long>(roundq(-t));
                if (x0 == 0 && x1 == 0 && x2 == 0) {
                    consider(1, t, x1, x2);
                    consider(-1, t, x1, x2);
                    continue;
                }
                consider(x0, t, x1, x2);
                // exact halfway: the neighbour attains the same value
                if (fabsq(static_cast<quad>(x0) + t) == quad(0.5)) {
                    consider(x0 - 1, t, x1, x2);
                    consider(x0 + 1, t, x1, x2);
                }
            }
        }
    });

    std::vector<RecordPoint> out;
    double run = kInf;
    for (long h = 1; h <= x; ++h) {
        Cell m;
        for (const auto& b : bins) {
            const Cell& c = b[static_cast<std::size_t>(h)];
            if (c.v < kInf) cell_update(m, c.v, c.x0, c.x1, c.x2);
        }
        if (m.v < run) {
            out.push_back(make_record({m.x0, m.x1, m.x2}, Int(h), m.v));
            run = m.v;
        }
    }
    return out;
}

RecordPoint omega_bruteforce(const std::array<BigReal, 3>& y, long x_cap, BruteOptions opts) {
    auto rec = omega_records(y, x_cap, opts);
    if (rec.empty()) throw std::logic_error("empty record list");
    return rec.back();
}

std::vector<RecordPoint> lambda_records(const std::array<BigReal, 3>& y, long x_cap,
                                        BruteOptions opts) {
    require_precision(y, x_cap);
    const quad xi = detail::to_quad(y[1].value);
    const quad xi2 = detail::to_quad(y[2].value);

    struct Candidate {
        long x0;
        double v;
        long x1, x2;
    };
    const unsigned chunks = static_cast<unsigned>(
        std::min<long>(static_cast<long>(detail::resolve_threads(opts.threads)), x_cap));
    std::vector<std::vector<Candidate>> locals(chunks);

    detail::parallel_chunks(1, x_cap + 1, opts.threads, [&](long lo, long hi, unsigned ci) {
        auto& loc = locals[ci];
        double best = kInf;
        for (long x0 = lo; x0 < hi; ++x0) {
            const quad t1 = static_cast<quad>(x0) * xi;
            const quad t2 = static_cast<quad>(x0) * xi2;
            const quad r1 = roundq(t1);
            const quad r2 = roundq(t2);
            const quad v1 = fabsq(t1 - r1);
            const quad v2 = fabsq(t2 - r2);
            const double v = static_cast<double>(v1 > v2 ? v1 : v2);
            if (v < best) {
                loc.push_back({x0, v, static_cast<long>(r1), static_cast<long>(r2)});
                best = v;
            }
        }
    });

    std::vector<RecordPoint> out;
    double run = kInf;
    for (const auto& loc : locals) {
        for (const auto& c : loc) {
            if (c.v < run) {
                out.push_back({Vec3{c.x0, c.x1, c.x2}, Int(c.x0), c.v,
                               c.v > 0 ? std::log(c.v) : -kInf});
                run = c.v;
            }
        }
    }
    return out;
}

RecordPoint lambda_bruteforce(const std::array<BigReal, 3>& y, long x_cap, BruteOptions opts) {
    auto rec = lambda_records(y, x_cap, opts);
    if (rec.empty()) throw std::logic_error("empty record list");
    return rec.back();
}

ExponentEstimate uniform_slope(const std::vector<RecordPoint>& records, ExponentKind kind,
                               EstimateMethod method) {
    if (records.size() < 3)
        throw std::domain_error("need at least 3 record points for a slope estimate");
    ExponentEstimate est;
    est.kind = kind;
    est.method = method;
    est.target_lo = est.target_hi = kNaN;
    std::vector<double> slopes;
    for (std::size_t j = 0; j + 1 < records.size(); ++j) {
        const double ln_h = log_abs(records[j + 1].height);
        if (ln_h <= 0) continue;
        const double s = -records[j].log_value / ln_h;
        est.samples.push_back({ln_h / std::numbers::ln10, s});
        slopes.push_back(s);
    }
    est.estimate = min_last_quartile(slopes);
    return est;
}

CandidateSlopes candidate_slopes(FibSequence& seq, const std::array<BigReal, 3>& y,
                                 std::size_t i_min, std::size_t i_max) {
    if (i_min < 1 || i_min > i_max) throw std::invalid_argument("bad candidate index range");
    seq.extend(i_max + 2);

    CandidateSlopes out;
    out.omega.kind = ExponentKind::OmegaHat;
    out.omega.method = EstimateMethod::Candidate;
    out.omega.target_lo = out.omega.target_hi = kNaN;

    std::vector<double> slopes;
    for (std::size_t i = i_min; i <= i_max; ++i) {
        const ResidualPair r = residuals(seq, y, i);
        // scale |<z_i, y>| to the content-reduced representative
        const Int ct = content(seq.zhat(i));
        const double ln_red =
            log_abs(r.z_scalar) + log_abs(seq.det_w2()) - log_abs(ct);
        const double ln_h = log_abs(norm(seq.reduced_z(i + 1)));
        if (ln_h <= 0) continue;
        const double s = -ln_red / ln_h;
        out.omega.samples.push_back({static_cast<double>(i), s});
        slopes.push_back(s);

        const double ln_y = log_abs(norm(seq.y(i + 1)));
        if (ln_y > 0)
            out.lambda_diagnostic.push_back(
                {static_cast<double>(i), -log_abs(r.wedge_norm) / ln_y});
    }
    out.omega.estimate = min_last_quartile(slopes);

    const double ln_n = log_abs(seq.w(i_max).norm());
    out.beta_star = ln_n > 0 ? log_abs(seq.det(i_max)) / ln_n : 0.0;
    return out;
}

bool jarnik_check(double lambda_est, double omega_est, double tol) {
    return std::abs(lambda_est - (1.0 - 1.0 / omega_est)) <= tol;
}

std::vector<SweepRow> density_sweep(const std::vector<TargetParams>& grid, SweepOptions opts) {
    std::vector<SweepRow> rows;
    for (const TargetParams& p : grid) {
        SweepRow row;
        row.k = p.k;
        row.l = p.l;
        row.family = p.family;
        row.depth = opts.i_max;
        row.alpha = p.alpha;
        row.alpha_rational = p.alpha_rational;
        row.beta = p.beta;
        const auto [lo, hi] = target_interval(p);
        row.target_lo = lo;
        row.target_hi = hi;

        FibSequence seq(family_seed(p.family));
        const auto y = y_for_residuals(seq, opts.i_max);
        const CandidateSlopes cs = candidate_slopes(seq, y, 3, opts.i_max);
        row.omega_candidate = cs.omega.estimate;
        row.beta_star = cs.beta_star;

        if (opts.x_omega > 0) {
            const auto rec = omega_records(y, opts.x_omega, {opts.threads});
            if (rec.size() >= 3)
                row.omega_brute =
                    uniform_slope(rec, ExponentKind::OmegaHat, EstimateMethod::BruteForce)
                        .estimate;
        }
        if (opts.x_lambda > 0) {
            const auto rec = lambda_records(y, opts.x_lambda, {opts.threads});
            if (rec.size() >= 3)
                row.lambda_brute =
                    uniform_slope(rec, ExponentKind::LambdaHat, EstimateMethod::BruteForce)
                        .estimate;
        }
        if (row.lambda_brute)
            row.jarnik_residual =
                std::abs(*row.lambda_brute - (1.0 - 1.0 / row.omega_candidate));
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v) {
    return v ? fmt(*v) : std::string();
}

}  // namespace

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "k,l,a,b,c,depth,target_lo,target_hi,omega_candidate,omega_brute,"
          "lambda_brute,jarnik_residual\n";
    for (const auto& r : rows) {
        os << r.k << ',' << r.l << ',' << r.family.a << ',' << r.family.b << ','
           << r.family.c << ',' << r.depth << ',' << fmt(r.target_lo) << ','
           << fmt(r.target_hi) << ',' << fmt(r.omega_candidate) << ','
           << fmt_opt(r.omega_brute) << ',' << fmt_opt(r.lambda_brute) << ','
           << fmt_opt(r.jarnik_residual) << '\n';
    }
}

nlohmann::json sweep_json(const std::vector<SweepRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j{{"k", r.k},
                         {"l", r.l},
                         {"a", json_int(r.family.a)},
                         {"b", json_int(r.family.b)},
                         {"c", json_int(r.family.c)},
                         {"depth", r.depth},
                         {"alpha", r.alpha},
                         {"alpha_rational", r.alpha_rational},
                         {"beta", r.beta},
                         {"target_lo", r.target_lo},
                         {"target_hi", r.target_hi},
                         {"omega_candidate", r.omega_candidate},
                         {"beta_star", r.beta_star}};
        if (r.omega_brute) j["omega_brute"] = *r.omega_brute;
        if (r.lambda_brute) j["lambda_brute"] = *r.lambda_brute;
        if (r.jarnik_residual) j["jarnik_residual"] = *r.jarnik_residual;
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace fibexp
