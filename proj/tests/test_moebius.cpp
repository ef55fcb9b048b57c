#include "blaschke/error.hpp"
#include "blaschke/moebius.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace blaschke;
using testing::near;

namespace {

Complex nested(const DiscAutomorphism& s, const DiscAutomorphism& t, Complex z) { return s(t(z)); }

DiscAutomorphism random_automorphism(Sampler& rng) {
    return {rng.in_disc(0.95), rng.on_circle()};
}

} // namespace

TEST_CASE("identity and rotations") {
    const auto id = DiscAutomorphism::identity();
    for (Complex z : {Complex{0.3, -0.2}, Complex{0.0, 0.9}, Complex{-0.7, 0.0}})
        CHECK(near(id(z), z, 1e-15));
    const auto rot = DiscAutomorphism::rotation(polar_unit(0.7));
    CHECK(near(rot(Complex{0.5, 0.0}), 0.5 * polar_unit(0.7), 1e-15));
}

TEST_CASE("evaluation at the base point and the origin") {
    const DiscAutomorphism t(Complex{0.5, 0.0}, Complex{1.0, 0.0});
    CHECK(near(t(Complex{0.5, 0.0}), Complex{}, 1e-16));
    const DiscAutomorphism u(Complex{0.2, -0.4}, polar_unit(1.1));
    CHECK(near(u(Complex{}), u.a() * u.gamma(), 1e-16));
    CHECK(near(u(u.a()), Complex{}, 1e-16));
}

TEST_CASE("T_a is an involution") {
    const auto t = DiscAutomorphism::involution(Complex{0.5, 0.0});
    CHECK(near(t(t(Complex{0.3, 0.0})), Complex{0.3, 0.0}, 1e-15));

    Sampler rng(11);
    for (int i = 0; i < 50; ++i) {
        const auto ta = DiscAutomorphism::involution(rng.in_disc(0.99));
        const auto sq = compose(ta, ta);
        CHECK(std::abs(sq.a()) <= 1e-12);
        CHECK(near(sq.gamma(), Complex{-1.0, 0.0}, 1e-12));
    }
}

TEST_CASE("gamma is renormalized on construction") {
    const DiscAutomorphism t(Complex{0.1, 0.1}, Complex{3.0, 4.0});
    CHECK(std::abs(std::abs(t.gamma()) - 1.0) <= 1e-15);
    CHECK(near(t.gamma(), Complex{0.6, 0.8}, 1e-15));
}

TEST_CASE("composition matches nested evaluation") {
    const auto id = DiscAutomorphism::identity();
    const DiscAutomorphism t(Complex{0.5, 0.0}, Complex{1.0, 0.0});
    const auto left = compose(id, t);
    CHECK(near(left.a(), t.a(), 1e-15));
    CHECK(near(left.gamma(), t.gamma(), 1e-15));

    const DiscAutomorphism s(Complex{0.0, 0.3}, Complex{0.0, 1.0});
    const auto st = compose(s, t);
    Sampler rng(20);
    for (int i = 0; i < 20; ++i) {
        const Complex z = rng.in_disc(1.0);
        CHECK(near(st(z), nested(s, t, z), 1e-12));
    }

    for (int i = 0; i < 100; ++i) {
        const auto a = random_automorphism(rng);
        const auto b = random_automorphism(rng);
        const auto ab = compose(a, b);
        CHECK(std::abs(ab.a()) < 1.0);
        CHECK(std::abs(std::abs(ab.gamma()) - 1.0) <= 1e-12);
        const Complex z = rng.in_disc(0.99);
        CHECK(near(ab(z), nested(a, b, z), 1e-12));
    }
}

TEST_CASE("inverse") {
    const auto ta = DiscAutomorphism::involution(Complex{0.3, -0.6});
    const auto inv = inverse(ta);
    CHECK(near(inv.a(), ta.a(), 1e-15));
    CHECK(near(inv.gamma(), ta.gamma(), 1e-15));

    const auto id_inv = inverse(DiscAutomorphism::identity());
    CHECK(std::abs(id_inv.a()) == 0.0);
    CHECK(near(id_inv.gamma(), Complex{-1.0, 0.0}, 1e-15));

    const DiscAutomorphism t(Complex{0.4, 0.1}, polar_unit(kPi / 3.0));
    const auto ti = inverse(t);
    Sampler rng(3);
    for (int i = 0; i < 20; ++i) {
        const Complex z = rng.in_disc(1.0);
        CHECK(near(ti(t(z)), z, 1e-12));
        CHECK(near(t(ti(z)), z, 1e-12));
    }
    const auto round = compose(t, ti);
    CHECK(std::abs(round.a()) <= 1e-12);
    CHECK(near(round.gamma(), Complex{-1.0, 0.0}, 1e-12));
}

TEST_CASE("the unit circle is preserved") {
    Sampler rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto t = random_automorphism(rng);
        const Complex e = polar_unit(rng.uniform(0.0, 2.0 * kPi));
        CHECK(std::abs(std::abs(t(e)) - 1.0) <= 1e-12);
    }
}

TEST_CASE("derivative agrees with central differences") {
    const DiscAutomorphism t(Complex{-0.3, 0.5}, polar_unit(2.0));
    const double h = 1e-6;
    for (Complex z : {Complex{0.1, 0.2}, Complex{-0.6, 0.1}, Complex{0.0, -0.8}}) {
        const Complex fd = (t(z + h) - t(z - h)) / (2.0 * h);
        CHECK(testing::rel_err(t.derivative(z), fd) < 1e-8);
    }
}

TEST_CASE("limit bound") {
    // At z = 0 the deviation is exactly |gamma0 - a gamma| and the bound twice that.
    const auto at0 = automorphism_limit_bound(Complex{0.9, 0.0}, Complex{1.0, 0.0}, Complex{1.0, 0.0}, Complex{});
    CHECK(at0.deviation == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(at0.bound == doctest::Approx(0.2).epsilon(1e-12));

    const auto mid = automorphism_limit_bound(Complex{0.9, 0.0}, Complex{1.0, 0.0}, Complex{1.0, 0.0}, Complex{0.5, 0.0});
    CHECK(mid.bound == doctest::Approx(0.4).epsilon(1e-12));
    // Direct: T(0.5) = 0.4 / 0.55.
    CHECK(mid.deviation == doctest::Approx(1.0 - 0.4 / 0.55).epsilon(1e-12));
    CHECK(mid.deviation <= mid.bound);

    const auto tilted = automorphism_limit_bound(0.99 * polar_unit(0.01), Complex{1.0, 0.0},
                                                 Complex{1.0, 0.0}, Complex{-0.3, 0.0});
    CHECK(tilted.deviation <= tilted.bound);

    CHECK_THROWS_AS(automorphism_limit_bound(Complex{0.5, 0.0}, Complex{1.0, 0.0}, Complex{1.0, 0.0},
                                             Complex{1.0, 0.0}),
                    Error);
}

TEST_CASE("limit bound holds uniformly on a disc of radius r") {
    const Complex gamma0 = polar_unit(0.8);
    const double r = 0.7;
    for (int k = 1; k <= 12; ++k) {
        const double eps = std::pow(0.5, k);
        const Complex a = (1.0 - eps) * gamma0 * polar_unit(-eps);
        const Complex gamma = polar_unit(eps);
        const DiscAutomorphism t(a, gamma);
        double worst = 0.0;
        for (int i = 0; i < 360; ++i)
            worst = std::max(worst, std::abs(t(std::polar(r, 2.0 * kPi * i / 360)) - gamma0));
        CHECK(worst <= 2.0 * std::abs(gamma0 - a * gamma) / (1.0 - r) + 1e-12);
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(DiscAutomorphism(Complex{1.0, 0.0}, Complex{1.0, 0.0}), Error);
    CHECK_THROWS_AS(DiscAutomorphism(Complex{0.2, 0.0}, Complex{0.0, 0.0}), Error);
    const DiscAutomorphism t(Complex{0.2, 0.0}, Complex{1.0, 0.0});
    CHECK_THROWS_AS(t(Complex{2.0, 0.0}), Error);

    const double a = 1.0 - 1e-14;
    const DiscAutomorphism edge(Complex{a, 0.0}, Complex{1.0, 0.0});
    try {
        (void)edge(Complex{1.0 / a, 0.0});
        FAIL("expected a pole-proximity error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PoleProximity);
    }
}
