#pragma once

#include "fibexp/numeric.hpp"

#include <iosfwd>

namespace fibexp {

// 2x2 integer matrix, row-major. Membership in the monoid of interest
// additionally requires det() != 0; that is checked by the callers that
// need it, not here.
struct Mat2 {
    Int e11, e12, e21, e22;

    static Mat2 identity();

    Int det() const { return e11 * e22 - e12 * e21; }
    Int trace() const { return e11 + e22; }
    Int norm() const;     // max |entry|
    Int content() const;  // gcd of entries; throws std::domain_error on the zero matrix
    bool is_zero() const;
    bool is_symmetric() const { return e12 == e21; }
    bool is_primitive() const { return content() == 1; }
    Mat2 transposed() const { return {e11, e21, e12, e22}; }

    bool operator==(const Mat2&) const = default;
};

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(const Int& s, const Mat2& m);
Mat2 operator-(const Mat2& a, const Mat2& b);
std::ostream& operator<<(std::ostream& os, const Mat2& m);

// Integer point (x0, x1, x2), identified with the symmetric matrix
// [[x0, x1], [x1, x2]] wherever the matrix view is needed.
struct Vec3 {
    Int x0, x1, x2;

    Int det() const { return x0 * x2 - x1 * x1; }  // determinant of the symmetric view
    bool is_zero() const { return x0 == 0 && x1 == 0 && x2 == 0; }
    Mat2 sym_mat() const { return {x0, x1, x1, x2}; }

    bool operator==(const Vec3&) const = default;
};

using SymPoint = Vec3;

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(const Int& s, const Vec3& v);
std::ostream& operator<<(std::ostream& os, const Vec3& v);

Vec3 wedge(const Vec3& a, const Vec3& b);
Int scalar(const Vec3& a, const Vec3& b);
Int det3(const Vec3& a, const Vec3& b, const Vec3& c);
Int norm(const Vec3& v);
Int content(const Vec3& v);  // throws std::domain_error on the zero point
bool is_primitive(const Vec3& v);

// ||a ^ b|| / (||a|| ||b||) as an exact reduced rational; zero iff the
// points are proportional. Throws std::domain_error on zero input.
Rat proj_dist(const Vec3& a, const Vec3& b);

// Symmetric-matrix view back to a point; throws std::invalid_argument if
// the matrix is not symmetric.
Vec3 sym_point(const Mat2& m);

Vec3 reduce_content(const Vec3& v);   // divide by content (zero point stays zero)
Vec3 canonical_sign(const Vec3& v);   // first nonzero coordinate made positive

}  // namespace fibexp
