#include "fibexp/families.hpp"

#include <doctest.h>

#include <cmath>

using namespace fibexp;

TEST_CASE("family seeds and symmetrizer") {
    const FamilyParams p = make_family(2, 1, 2);
    CHECK(family_w0(p) == Mat2{1, 1, 2, 4});
    CHECK(family_w1(p) == Mat2{1, 2, 2, 6});
    CHECK(family_symmetrizer(p) == Mat2{11, -4, -6, 2});

    const SeedPair sp = family_seed(p);
    REQUIRE(sp.admissible());
    CHECK(sp.w0.det() == 2);
    CHECK(sp.w1.det() == 2);
    CHECK(sp.n->det() == -2);

    CHECK(family_det_y012(p) == 16);
    CHECK(family_det_y012(make_family(4, 1, 2)) == 256);

    CHECK_THROWS_AS(make_family(1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_family(2, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_family(2, 3, 2), std::invalid_argument);
}

TEST_CASE("degenerate family is admissible but has a vanishing triple determinant") {
    const FamilyParams p = make_family(2, 1, 1);
    CHECK(family_degenerate(p));
    const SeedPair sp = family_seed(p);
    CHECK(sp.admissible());
    FibSequence seq(sp);
    CHECK(seq.y(0) == seq.y(1));
    CHECK(seq.det_y012() == 0);
    CHECK(family_det_y012(p) == 0);
}

TEST_CASE("target parameter search") {
    const TargetParams tp = target_params(0.35, 0.2);
    CHECK(tp.k == 3);
    CHECK(tp.l == 1);
    CHECK(tp.family.a == 2);
    CHECK(tp.family.b == 3);
    CHECK(tp.family.c == 4);
    CHECK(tp.beta == doctest::Approx(1.0 / 3.0));

    const TargetParams tq = target_params(0.30, 0.05);
    CHECK(tq.l > 0);
    CHECK(tq.l < tq.k);
    // the three defining inequalities
    const double lk = double(tq.l) / double(tq.k);
    const double lk2 = double(tq.l) / double(tq.k + 2);
    CHECK(lk < 0.30);
    CHECK(lk2 <= lk);
    CHECK(lk2 >= 0.30 - 0.05 - 1e-12);

    // near the top of the admissible range the ratio crowds the endpoint
    const TargetParams tr = target_params(kInvGammaSq - 1e-6, 1e-3);
    CHECK(double(tr.l) / double(tr.k) < kInvGammaSq);
    CHECK(double(tr.l) / double(tr.k) > kInvGammaSq - 2e-3);

    CHECK_THROWS_AS(target_params(0.5, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(target_params(0.3, 0.0), std::invalid_argument);
}

TEST_CASE("target intervals") {
    const auto [lo, hi] = target_interval(std::log(2.0) / std::log(20.0), 1.0 / 3.0);
    CHECK(lo == doctest::Approx(2.0787).epsilon(1e-3));
    CHECK(hi == doctest::Approx(2.2437).epsilon(1e-3));

    const auto [flo, fhi] = target_interval(0.0, 0.0);
    CHECK(flo == doctest::Approx(kGammaSq));
    CHECK(fhi == doctest::Approx(kGammaSq));

    // parameter-search outputs always land strictly inside [2, gamma^2]
    for (double t : {0.05, 0.15, 0.25, 0.35, 0.38}) {
        const TargetParams tp = target_params(t, 0.2);
        const auto [a, b] = target_interval(tp);
        CHECK(a > 2.0);
        CHECK(b <= kGammaSq + 1e-12);
        CHECK(a <= b);
    }
}
