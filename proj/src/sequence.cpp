#include "fibexp/sequence.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fibexp {

namespace {

std::string brief(const Vec3& v) {
    std::ostringstream os;
    os << v;
    std::string s = os.str();
    if (s.size() > 120) s = s.substr(0, 117) + "...";
    return s;
}

}  // namespace

FibSequence::FibSequence(SeedPair seed) : seed_(std::move(seed)) {
    if (!seed_.admissible() || !seed_.n)
        throw std::invalid_argument(std::string("seed is not admissible: ") +
                                    to_string(seed_.status));
    nt_ = seed_.n->transposed();

    ws_ = {seed_.w0, seed_.w1, seed_.w1 * seed_.w0};
    for (const Mat2& w : ws_) {
        traces_.push_back(w.trace());
        dets_.push_back(w.det());
    }
    if (dets_[0] == 0 || dets_[1] == 0)
        throw std::invalid_argument("seed matrices must have nonzero determinant");

    for (std::size_t i = 0; i < 3; ++i) ys_.push_back(sym_point(ws_[i] * n_for(i)));
    d3_ = det3(ys_[0], ys_[1], ys_[2]);
}

const Mat2& FibSequence::n_for(std::size_t i) const {
    return i % 2 == 0 ? *seed_.n : nt_;
}

void FibSequence::push_next() {
    const std::size_t i = ws_.size();  // index being created, i >= 3
    ws_.push_back(ws_[i - 1] * ws_[i - 2]);
    traces_.push_back(ws_[i].trace());
    dets_.push_back(ws_[i].det());

    // y_i = tr(w_{i-2}) y_{i-1} - det(w_{i-2}) y_{i-3}; the matrix product
    // definition is much more expensive at depth, so it is only sampled.
    ys_.push_back(traces_[i - 2] * ys_[i - 1] - dets_[i - 2] * ys_[i - 3]);
    if (i % 4 == 0 && ys_[i] != sym_point(ws_[i] * n_for(i)))
        throw std::logic_error("y recurrence disagrees with definition at index " +
                               std::to_string(i));

    // zhat needs y_{i+1} and so lags one index behind.
    while (zhats_.size() + 1 < ys_.size()) {
        const std::size_t j = zhats_.size();
        if (j == 0) {
            zhats_.push_back(dets_[1] * wedge(ys_[0], ys_[1]));
        } else if (j == 1) {
            zhats_.push_back(dets_[0] * wedge(ys_[1], ys_[2]));
        } else if (j == 2) {
            zhats_.push_back(wedge(ys_[2], ys_[3]));
        } else {
            zhats_.push_back(traces_[j - 2] * zhats_[j - 2] + dets_[j - 3] * zhats_[j - 3]);
            if (j % 4 == 0 && dets_[2] * wedge(ys_[j], ys_[j + 1]) != dets_[j] * zhats_[j])
                throw std::logic_error("z recurrence disagrees with definition at index " +
                                       std::to_string(j));
        }
    }
}

void FibSequence::extend(std::size_t up_to) {
    while (ws_.size() <= up_to) push_next();
}

Vec3 FibSequence::reduced_z(std::size_t i) const {
    return canonical_sign(reduce_content(zhats_.at(i)));
}

Rat FibSequence::delta(std::size_t i) const {
    const Int n = ws_.at(i).norm();
    return Rat(abs(dets_.at(i)), n * n);
}

Report verify_recurrences(FibSequence& seq, std::size_t i_max) {
    Report rep;
    seq.extend(i_max + 4);
    const Int& d3 = seq.det_y012();
    const Int& dw2 = seq.det_w2();
    for (std::size_t i = 0; i <= i_max; ++i) {
        const Int sign = i % 2 == 0 ? 1 : -1;

        rep.add("rec_trace", static_cast<long long>(i),
                seq.trace(i + 3) == seq.trace(i + 1) * seq.trace(i + 2) -
                                        seq.det(i + 1) * seq.trace(i));

        const Vec3 yr = seq.trace(i + 1) * seq.y(i + 2) - seq.det(i + 1) * seq.y(i);
        rep.add("rec_y", static_cast<long long>(i), seq.y(i + 3) == yr);

        const Vec3 zr = seq.trace(i + 1) * seq.zhat(i + 1) + seq.det(i) * seq.zhat(i);
        rep.add("rec_z", static_cast<long long>(i), seq.zhat(i + 3) == zr);

        // det(y_i, y_{i+1}, y_{i+2}) det(w2) = (-1)^i det(y0,y1,y2) det(w_{i+2})
        const Int lhs = det3(seq.y(i), seq.y(i + 1), seq.y(i + 2)) * dw2;
        const Int rhs = sign * d3 * seq.det(i + 2);
        rep.add("det_triple", static_cast<long long>(i), lhs == rhs);

        // zhat_i ^ zhat_{i+1} = (-1)^i det(y0,y1,y2) det(w2) y_{i+1}
        const Vec3 wl = wedge(seq.zhat(i), seq.zhat(i + 1));
        const Vec3 wr = (sign * d3 * dw2) * seq.y(i + 1);
        rep.add("wedge_z", static_cast<long long>(i), wl == wr,
                wl == wr ? "" : brief(wl) + " != " + brief(wr));
    }
    return rep;
}

Report verify_arithmetic(FibSequence& seq, std::size_t i_max) {
    Report rep;
    seq.extend(i_max + 2);

    bool hyp_ok = true;
    for (std::size_t i = 0; i < 4; ++i) {
        const bool ok = gcd(abs(seq.trace(i)), abs(seq.det(i))) == 1;
        hyp_ok &= ok;
        rep.add("hyp_coprime", static_cast<long long>(i), ok);
    }
    {
        const bool ok = seq.det_y012() != 0;
        hyp_ok &= ok;
        rep.add("hyp_det3", -1, ok, ok ? "" : "det(y0,y1,y2)=0");
    }
    if (!hyp_ok) {
        rep.skip("arithmetic_items", -1, "hypotheses not met");
        return rep;
    }

    const Int dy2 = seq.y(2).det();
    const Int& dw2 = seq.det_w2();
    if (dy2 % dw2 != 0) throw std::logic_error("det(y2) not divisible by det(w2)");
    const Int q = abs(dy2 / dw2);                 // = |det N|
    const Int zc_bound = abs(dy2 * seq.det_y012());

    for (std::size_t i = 0; i <= i_max; ++i) {
        const auto idx = static_cast<long long>(i);
        rep.add("indep_triple", idx, det3(seq.y(i), seq.y(i + 1), seq.y(i + 2)) != 0);
        rep.add("coprime", idx, gcd(abs(seq.trace(i)), abs(seq.det(i))) == 1);
        rep.add("primitive_w", idx, seq.w(i).is_primitive());
        rep.add("content_y", idx, q % content(seq.y(i)) == 0);

        // zhat_i must agree with det(w2)/det(w_i) * (y_i ^ y_{i+1}) exactly,
        // which also certifies that det(w2) z_i is integral.
        const Vec3 cleared = dw2 * wedge(seq.y(i), seq.y(i + 1));
        const Vec3 scaled = seq.det(i) * seq.zhat(i);
        rep.add("z_integral", idx, cleared == scaled);
        rep.add("content_z", idx, zc_bound % content(seq.zhat(i)) == 0);
    }
    return rep;
}

bool growth_form(const Mat2& m) {
    return m.e11 >= 1 && m.e11 <= m.e12 && m.e11 <= m.e21 && m.e12 <= m.e22 &&
           m.e21 <= m.e22;
}

Report verify_growth(FibSequence& seq, std::size_t i_max,
                     std::optional<GrowthExponents> env) {
    Report rep;
    seq.extend(i_max + 2);

    const bool shaped = growth_form(seq.w(0)) && growth_form(seq.w(1));
    if (!shaped) {
        rep.skip("growth_precondition", -1, "seed entries outside the ordered positive form");
    } else {
        for (std::size_t i = 0; i <= i_max; ++i)
            rep.add("growth_form", static_cast<long long>(i), growth_form(seq.w(i)));
        for (std::size_t i = 0; i <= i_max; ++i) {
            const Int prod = seq.w(i).norm() * seq.w(i + 1).norm();
            const Int next = seq.w(i + 2).norm();
            const bool ok = prod < next && next <= 2 * prod;
            rep.add("growth_two_sided", static_cast<long long>(i), ok,
                    ok ? "" : "||w||*||w'||=" + prod.str() + " ||w''||=" + next.str());
        }
    }

    // Ratio band for ||w_{i+1}|| / ||w_i||^gamma (and the det analogue):
    // logged, not asserted; the bounds exist but are not prescribed.
    {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        double dlo = lo, dhi = -lo;
        for (std::size_t i = 0; i + 1 <= i_max; ++i) {
            const double b = log_abs(seq.w(i + 1).norm()) - kGamma * log_abs(seq.w(i).norm());
            lo = std::min(lo, b);
            hi = std::max(hi, b);
            if (abs(seq.det(i)) > 1 && abs(seq.det(i + 1)) > 1) {
                const double d = log_abs(seq.det(i + 1)) - kGamma * log_abs(seq.det(i));
                dlo = std::min(dlo, d);
                dhi = std::max(dhi, d);
            }
        }
        char buf[160];
        std::snprintf(buf, sizeof buf, "log norm-ratio in [%.6f,%.6f], log det-ratio in [%.6f,%.6f]",
                      lo, hi, dlo, dhi);
        rep.add("growth_gamma_band", -1, true, buf);
    }

    if (env) {
        // (2||w_i||)^alpha <= |det w_i| <= ||w_i||^beta, compared in log
        // space with a tiny slack: equality holds at the seeds by the choice
        // of the exponents, and rounding must not flip it.
        for (std::size_t i = 0; i <= i_max; ++i) {
            const double ld = log_abs(seq.det(i));
            const double ln = log_abs(seq.w(i).norm());
            const double lhs = env->alpha * (std::log(2.0) + ln);
            const double rhs = env->beta * ln;
            const double slack = 1e-9 * (1.0 + std::abs(ld) + std::abs(ln));
            const bool ok = lhs <= ld + slack && ld <= rhs + slack;
            char buf[128];
            std::snprintf(buf, sizeof buf, "alpha*log(2||w||)=%.6f log|det|=%.6f beta*log||w||=%.6f",
                          lhs, ld, rhs);
            rep.add("growth_envelope", static_cast<long long>(i), ok, ok ? "" : buf);
        }
    }
    return rep;
}

}  // namespace fibexp
