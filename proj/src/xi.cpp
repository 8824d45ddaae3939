#include "fibexp/xi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fibexp {

std::string BigReal::decimal(unsigned decimals) const {
    const Int n = abs(numerator(value));
    const Int d = denominator(value);
    const Int scale = pow10(decimals);
    // round half away from zero: floor((2 n scale + d) / (2 d))
    const Int t = (2 * n * scale + d) / (2 * d);
    std::string digits = t.str();
    if (digits.size() <= decimals) digits.insert(0, decimals + 1 - digits.size(), '0');
    std::string out;
    if (value < 0) out += '-';
    out += digits.substr(0, digits.size() - decimals);
    if (decimals > 0) {
        out += '.';
        out += digits.substr(digits.size() - decimals);
    }
    return out;
}

DeltaSeq delta_seq(FibSequence& seq, std::size_t i_max) {
    DeltaSeq ds;
    seq.extend(i_max);
    for (std::size_t i = 0; i <= i_max; ++i) ds.deltas.push_back(seq.delta(i));
    if (i_max == 0) return ds;
    // smallest index from which every observed step contracts by 4
    std::size_t i0 = i_max;
    while (i0 > 0 && 4 * ds.deltas[i0] <= ds.deltas[i0 - 1]) --i0;
    if (i0 < i_max) ds.i0 = i0;
    return ds;
}

namespace {

// y_{i,1} / y_{i,0}; nullopt when the first coordinate vanishes.
std::optional<Rat> ratio_at(const FibSequence& seq, std::size_t i) {
    const Vec3& y = seq.y(i);
    if (y.x0 == 0) return std::nullopt;
    return Rat(y.x1, y.x0);
}

}  // namespace

BigReal xi_approx(FibSequence& seq, unsigned digits, std::size_t max_depth) {
    if (!(seq.det_y012() != 0))
        throw std::domain_error("degenerate seed: det(y0,y1,y2)=0");

    const Rat target = Rat(1, 2 * pow10(digits));
    BigReal best{Rat(0), Rat(0), 0};
    bool have_best = false;

    for (std::size_t top = 8; top <= max_depth + 2; top += 2) {
        seq.extend(top + 1);

        // determinant growth must stay below quadratic in the norm, or the
        // projective sequence has no reason to converge
        {
            const std::size_t i = top;
            const double b = log_abs(seq.det(i)) / log_abs(seq.w(i).norm());
            if (b >= 1.0)
                throw std::domain_error("determinant grows too fast (beta >= 1)");
        }

        const DeltaSeq ds = delta_seq(seq, top);
        if (!ds.i0) continue;

        // consecutive ratio gaps
        std::vector<std::optional<Rat>> ratios(top + 1);
        for (std::size_t i = 0; i <= top; ++i) ratios[i] = ratio_at(seq, i);

        auto gap = [&](std::size_t i) -> std::optional<Rat> {
            if (!ratios[i] || !ratios[i + 1]) return std::nullopt;
            return abs(*ratios[i] - *ratios[i + 1]);
        };

        for (std::size_t i = std::max<std::size_t>(*ds.i0, 2); i + 1 < top; ++i) {
            if (!ratios[i]) continue;
            const auto g = gap(i);
            if (!g) continue;
            // require quarter-contraction of every observed gap from i on
            bool contracting = true;
            Rat prev = *g;
            for (std::size_t k = i + 1; k + 1 < top && contracting; ++k) {
                const auto gk = gap(k);
                if (!gk) { contracting = false; break; }
                contracting = 4 * *gk <= prev;
                prev = *gk;
            }
            if (!contracting) continue;
            const Rat err = Rat(25, 3) * *g;  // 5/3 tail model x5 safety
            if (i > best.depth || !have_best) {
                best = BigReal{*ratios[i], err, i};
                have_best = true;
            }
            if (err <= target && i <= max_depth)
                return BigReal{*ratios[i], err, i};
        }
    }
    throw PrecisionError("requested digits unreachable at max depth " +
                             std::to_string(max_depth) +
                             (have_best ? "; best err " + best.err_string() : ""),
                         best);
}

std::array<BigReal, 3> y_vector(const BigReal& xi) {
    BigReal one{Rat(1), Rat(0), xi.depth};
    const Rat sq = xi.value * xi.value;
    const Rat sq_err = 2 * abs(xi.value) * xi.err + xi.err * xi.err;
    return {one, xi, BigReal{sq, sq_err, xi.depth}};
}

ResidualPair residuals(FibSequence& seq, const std::array<BigReal, 3>& y, std::size_t i) {
    seq.extend(i + 1);
    const Vec3& yi = seq.y(i);
    const Vec3& zh = seq.zhat(i);
    const Rat& v1 = y[1].value;
    const Rat& v2 = y[2].value;
    const Rat& e1 = y[1].err;
    const Rat& e2 = y[2].err;

    ResidualPair out;

    // y_i ^ (1, xi, xi^2), componentwise with first-order error bounds
    const Rat c0 = yi.x1 * v2 - yi.x2 * v1;
    const Rat c1 = Rat(yi.x2) - yi.x0 * v2;
    const Rat c2 = yi.x0 * v1 - Rat(yi.x1);
    out.wedge_norm = std::max({Rat(abs(c0)), Rat(abs(c1)), Rat(abs(c2))});
    const Int a0 = abs(yi.x0), a1 = abs(yi.x1), a2 = abs(yi.x2);
    out.wedge_err = std::max({Rat(a1 * e2 + a2 * e1), Rat(a0 * e2), Rat(a0 * e1)});

    const Rat zs = Rat(zh.x0) + zh.x1 * v1 + zh.x2 * v2;
    const Int dw2 = abs(seq.det_w2());
    const Int b1 = abs(zh.x1), b2 = abs(zh.x2);
    out.z_scalar = abs(zs) / dw2;
    out.z_err = (b1 * e1 + b2 * e2) / dw2;

    if (1024 * out.wedge_err > out.wedge_norm || 1024 * out.z_err > out.z_scalar)
        throw PrecisionError("xi too shallow to certify residuals at index " +
                                 std::to_string(i),
                             y[1]);
    return out;
}

std::array<BigReal, 3> y_for_residuals(FibSequence& seq, std::size_t i_max,
                                       std::size_t max_depth) {
    seq.extend(i_max + 3);
    // first guess from the predicted residual size at the deepest index
    const double ln_res = log_abs(seq.det(i_max + 1)) - log_abs(seq.w(i_max + 2).norm());
    const double ln_scale = log_abs(norm(seq.zhat(i_max))) + 3.0;
    double want = -(ln_res - ln_scale) / std::numbers::ln10 + 24.0;
    unsigned digits = static_cast<unsigned>(std::max(32.0, want));

    for (int attempt = 0; attempt < 6; ++attempt) {
        BigReal xi = xi_approx(seq, digits, max_depth);
        auto y = y_vector(xi);
        try {
            for (std::size_t i = 3; i <= i_max; ++i) (void)residuals(seq, y, i);
            return y;
        } catch (const PrecisionError&) {
            digits *= 3;
        }
    }
    throw PrecisionError("cannot certify residuals up to index " + std::to_string(i_max),
                         BigReal{Rat(0), Rat(0), 0});
}

}  // namespace fibexp
