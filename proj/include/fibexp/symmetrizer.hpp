#pragma once

#include "fibexp/linalg.hpp"

#include <array>
#include <optional>

namespace fibexp {

enum class SeedStatus {
    Admissible,
    NotInV,  // the 3x4 symmetry system has rank < 3
    NotInU,  // rank 3 but the minor-vector matrix is singular
};

const char* to_string(SeedStatus s);

struct SeedPair {
    Mat2 w0, w1;
    std::optional<Mat2> n;  // canonical symmetrizer when admissible
    SeedStatus status = SeedStatus::NotInV;

    bool admissible() const { return status == SeedStatus::Admissible; }
};

// Rows constrain the off-diagonal entries of w0*N, w1*tN and w1*w0*N to be
// equal; columns follow the row-major entries (n11, n12, n21, n22) of N.
using SymSystem = std::array<std::array<Int, 4>, 3>;

SymSystem build_system(const Mat2& w0, const Mat2& w1);

// Exact rank via fraction-free elimination.
int system_rank(const SymSystem& sys);

struct SolveResult {
    std::optional<Mat2> n;
    SeedStatus status;
};

// Kernel vector of the symmetry system assembled from its four signed 3x3
// minors, reduced to content 1 with positive leading entry. Requires both
// seeds to have nonzero determinant.
SolveResult solve_n(const Mat2& w0, const Mat2& w1);

SeedPair is_admissible(const Mat2& w0, const Mat2& w1);

}  // namespace fibexp
