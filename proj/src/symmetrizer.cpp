#include "fibexp/symmetrizer.hpp"

#include <stdexcept>
#include <utility>

namespace fibexp {

const char* to_string(SeedStatus s) {
    switch (s) {
        case SeedStatus::Admissible: return "Admissible";
        case SeedStatus::NotInV: return "NotInV";
        case SeedStatus::NotInU: return "NotInU";
    }
    return "?";
}

namespace {

// Coefficients of (M*N)_{12} - (M*N)_{21} as a linear form in the entries of N.
std::array<Int, 4> straight_row(const Mat2& m) {
    return {-m.e21, m.e11, -m.e22, m.e12};
}

// Same for (M * tN): swaps the roles of n12 and n21.
std::array<Int, 4> transposed_row(const Mat2& m) {
    return {-m.e21, -m.e22, m.e11, m.e12};
}

// det of the 3x3 matrix obtained by deleting column `skip`.
Int minor3(const SymSystem& s, int skip) {
    std::array<int, 3> c{};
    for (int j = 0, k = 0; j < 4; ++j)
        if (j != skip) c[k++] = j;
    return s[0][c[0]] * (s[1][c[1]] * s[2][c[2]] - s[1][c[2]] * s[2][c[1]]) -
           s[0][c[1]] * (s[1][c[0]] * s[2][c[2]] - s[1][c[2]] * s[2][c[0]]) +
           s[0][c[2]] * (s[1][c[0]] * s[2][c[1]] - s[1][c[1]] * s[2][c[0]]);
}

void require_monoid(const Mat2& w, const char* name) {
    if (w.det() == 0)
        throw std::invalid_argument(std::string(name) + " has zero determinant");
}

}  // namespace

SymSystem build_system(const Mat2& w0, const Mat2& w1) {
    return {straight_row(w0), transposed_row(w1), straight_row(w1 * w0)};
}

int system_rank(const SymSystem& sys) {
    // Bareiss elimination on a working copy; exact, no rationals needed.
    std::array<std::array<Int, 4>, 3> m = sys;
    int rank = 0;
    Int prev = 1;
    for (int col = 0; col < 4 && rank < 3; ++col) {
        int pivot = -1;
        for (int r = rank; r < 3; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < 3; ++r) {
            for (int c = col + 1; c < 4; ++c)
                m[r][c] = (m[r][c] * m[rank][col] - m[r][col] * m[rank][c]) / prev;
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

SolveResult solve_n(const Mat2& w0, const Mat2& w1) {
    require_monoid(w0, "w0");
    require_monoid(w1, "w1");
    const SymSystem sys = build_system(w0, w1);

    std::array<Int, 4> v;
    Int sign = 1;
    for (int j = 0; j < 4; ++j) {
        v[j] = sign * minor3(sys, j);
        sign = -sign;
    }
    if (v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0)
        return {std::nullopt, SeedStatus::NotInV};

    Int g = 0;
    for (const auto& x : v) g = gcd(g, abs(x));
    for (auto& x : v) x /= g;
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }

    Mat2 n{v[0], v[1], v[2], v[3]};
    if (n.det() == 0) return {std::nullopt, SeedStatus::NotInU};

    // The minor vector spans the kernel when the rank is 3, so these hold by
    // construction; a failure means the assembly above is wrong.
    if (!(w0 * n).is_symmetric() || !(w1 * n.transposed()).is_symmetric() ||
        !(w1 * w0 * n).is_symmetric())
        throw std::logic_error("symmetrizer verification failed");

    return {n, SeedStatus::Admissible};
}

SeedPair is_admissible(const Mat2& w0, const Mat2& w1) {
    SolveResult r = solve_n(w0, w1);
    return {w0, w1, r.n, r.status};
}

}  // namespace fibexp
