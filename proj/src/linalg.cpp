#include "fibexp/linalg.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace fibexp {

Mat2 Mat2::identity() { return {1, 0, 0, 1}; }

Int Mat2::norm() const {
    return std::max({abs(e11), abs(e12), abs(e21), abs(e22)});
}

bool Mat2::is_zero() const {
    return e11 == 0 && e12 == 0 && e21 == 0 && e22 == 0;
}

Int Mat2::content() const {
    if (is_zero()) throw std::domain_error("content of the zero matrix is undefined");
    return gcd(gcd(abs(e11), abs(e12)), gcd(abs(e21), abs(e22)));
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
            a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
}

Mat2 operator*(const Int& s, const Mat2& m) {
    return {s * m.e11, s * m.e12, s * m.e21, s * m.e22};
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.e11 - b.e11, a.e12 - b.e12, a.e21 - b.e21, a.e22 - b.e22};
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.e11 << "," << m.e12 << "],[" << m.e21 << "," << m.e22 << "]]";
}

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2}; }
Vec3 operator*(const Int& s, const Vec3& v) { return {s * v.x0, s * v.x1, s * v.x2}; }

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    return os << "(" << v.x0 << "," << v.x1 << "," << v.x2 << ")";
}

Vec3 wedge(const Vec3& a, const Vec3& b) {
    return {a.x1 * b.x2 - a.x2 * b.x1,
            a.x2 * b.x0 - a.x0 * b.x2,
            a.x0 * b.x1 - a.x1 * b.x0};
}

Int scalar(const Vec3& a, const Vec3& b) {
    return a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2;
}

Int det3(const Vec3& a, const Vec3& b, const Vec3& c) {
    return scalar(a, wedge(b, c));
}

Int norm(const Vec3& v) {
    return std::max({abs(v.x0), abs(v.x1), abs(v.x2)});
}

Int content(const Vec3& v) {
    if (v.is_zero()) throw std::domain_error("content of the zero point is undefined");
    return gcd(gcd(abs(v.x0), abs(v.x1)), abs(v.x2));
}

bool is_primitive(const Vec3& v) { return content(v) == 1; }

Rat proj_dist(const Vec3& a, const Vec3& b) {
    if (a.is_zero() || b.is_zero())
        throw std::domain_error("projective distance needs non-zero points");
    return Rat(norm(wedge(a, b)), norm(a) * norm(b));
}

Vec3 sym_point(const Mat2& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
    return {m.e11, m.e12, m.e22};
}

Vec3 reduce_content(const Vec3& v) {
    if (v.is_zero()) return v;
    const Int g = content(v);
    return {v.x0 / g, v.x1 / g, v.x2 / g};
}

Vec3 canonical_sign(const Vec3& v) {
    Int lead = v.x0 != 0 ? v.x0 : (v.x1 != 0 ? v.x1 : v.x2);
    if (lead < 0) return {-v.x0, -v.x1, -v.x2};
    return v;
}

}  // namespace fibexp
