#include "fibexp/linalg.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace fibexp;

namespace {

// schoolbook product, kept separate from the implementation on purpose
Mat2 slow_mul(const Mat2& a, const Mat2& b) {
    Mat2 r{0, 0, 0, 0};
    const Int* lhs[2][2] = {{&a.e11, &a.e12}, {&a.e21, &a.e22}};
    const Int* rhs[2][2] = {{&b.e11, &b.e12}, {&b.e21, &b.e22}};
    Int* out[2][2] = {{&r.e11, &r.e12}, {&r.e21, &r.e22}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) *out[i][j] += *lhs[i][k] * *rhs[k][j];
    return r;
}

const Mat2 kJ{0, 1, -1, 0};

}  // namespace

TEST_CASE("matrix product") {
    const Mat2 a{1, 2, 2, 6};
    const Mat2 b{1, 1, 2, 4};
    CHECK(a * b == Mat2{5, 9, 14, 26});

    const Mat2 m{7, -3, 12, 5};
    CHECK(Mat2::identity() * m == m);
    CHECK(m * Mat2::identity() == m);

    const Mat2 c{23, 64, 66, 184};
    const Mat2 d{5, 9, 14, 26};
    CHECK(c * d == Mat2{1011, 1871, 2906, 5378});
    CHECK(c * d == slow_mul(c, d));

    auto rng = testutil::make_rng();
    for (int it = 0; it < 200; ++it) {
        const Mat2 x = testutil::rand_mat(rng, -1000, 1000);
        const Mat2 y = testutil::rand_mat(rng, -1000, 1000);
        CHECK(x * y == slow_mul(x, y));
        CHECK((x * y).det() == x.det() * y.det());
    }
}

TEST_CASE("wedge, scalar and det3") {
    CHECK(wedge({5, -2, 0}, {3, -2, 0}) == Vec3{0, 0, -4});
    CHECK(wedge({3, -2, 0}, {1, -2, -4}) == Vec3{8, 12, -4});
    CHECK(det3({5, -2, 0}, {3, -2, 0}, {1, -2, -4}) == 16);
    CHECK(scalar({4, 6, -2}, {5, -2, 0}) == 8);

    auto rng = testutil::make_rng(7);
    for (int it = 0; it < 500; ++it) {
        const Vec3 x = testutil::rand_vec(rng, 1000);
        const Vec3 y = testutil::rand_vec(rng, 1000);
        const Vec3 z = testutil::rand_vec(rng, 1000);
        CHECK(wedge(x, x).is_zero());
        CHECK(wedge(x, y) + wedge(y, x) == Vec3{0, 0, 0});
        CHECK(det3(x, x, z) == 0);
        CHECK(det3(x, y, z) == scalar(x, wedge(y, z)));
        // triple wedge identity
        CHECK(wedge(wedge(x, y), wedge(y, z)) == det3(x, y, z) * y);
    }
}

TEST_CASE("content and primitivity") {
    CHECK(content({4, 6, -2}) == 2);
    CHECK(content({0, 0, -4}) == 4);
    CHECK(is_primitive({2, 3, -1}));
    CHECK_FALSE(is_primitive({4, 6, -2}));
    CHECK_THROWS_AS(content(Vec3{0, 0, 0}), std::domain_error);
    CHECK(reduce_content({4, 6, -2}) == Vec3{2, 3, -1});
    CHECK(canonical_sign({0, -3, 5}) == Vec3{0, 3, -5});
    CHECK(canonical_sign({0, 3, -5}) == Vec3{0, 3, -5});
}

TEST_CASE("projective distance") {
    const Vec3 x{5, -2, 0};
    CHECK(proj_dist(x, 2 * x) == 0);
    CHECK(proj_dist({5, -2, 0}, {3, -2, 0}) == Rat(4, 15));
    CHECK_THROWS_AS(proj_dist({0, 0, 0}, x), std::domain_error);

    auto rng = testutil::make_rng(11);
    for (int it = 0; it < 500; ++it) {
        const Vec3 a = testutil::rand_nonzero_vec(rng, 500);
        const Vec3 b = testutil::rand_nonzero_vec(rng, 500);
        const Vec3 c = testutil::rand_nonzero_vec(rng, 500);
        CHECK(proj_dist(a, c) <= proj_dist(a, b) + 2 * proj_dist(b, c));
    }
}

TEST_CASE("scalar-wedge norm inequalities") {
    auto rng = testutil::make_rng(13);
    for (int it = 0; it < 500; ++it) {
        const Vec3 x = testutil::rand_vec(rng, 1000000);
        const Vec3 y = testutil::rand_vec(rng, 1000000);
        const Vec3 z = testutil::rand_vec(rng, 1000000);
        const Vec3 lhs = scalar(x, z) * y - scalar(x, y) * z;
        CHECK(norm(lhs) <= 2 * norm(x) * norm(wedge(y, z)));
        CHECK(norm(y) * norm(wedge(x, z)) <=
              norm(z) * norm(wedge(x, y)) + 2 * norm(x) * norm(wedge(y, z)));
    }
}

TEST_CASE("symmetric view identities") {
    auto rng = testutil::make_rng(17);
    for (int it = 0; it < 500; ++it) {
        const Vec3 x = testutil::rand_vec(rng, 100000);
        const Mat2 xm = x.sym_mat();
        CHECK(xm * kJ * xm == x.det() * kJ);

        const Vec3 y = testutil::rand_vec(rng, 100000);
        CHECK(norm(wedge(x, y)) <= 2 * (x.sym_mat() * kJ * y.sym_mat()).norm());
    }

    CHECK(sym_point(Mat2{1, -2, -2, -4}) == Vec3{1, -2, -4});
    CHECK_THROWS_AS(sym_point(Mat2{1, 2, 3, 4}), std::invalid_argument);
}
