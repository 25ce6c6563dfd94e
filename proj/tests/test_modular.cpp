#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"

using namespace latmin;
using oracles::cplx;

TEST_CASE("UhpPoint construction enforces the upper half-plane") {
    CHECK_NOTHROW(UhpPoint(0.0, 1e-12));
    CHECK_THROWS_AS(UhpPoint(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(UhpPoint(0.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(UhpPoint(std::nan(""), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(UhpPoint(0.0, std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
}

TEST_CASE("SeriesBudget validation") {
    SeriesBudget bad;
    bad.rel_tol = 1e-5; // must be below 1e-6
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.rel_tol = 1e-14;
    bad.max_terms = 8;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("e_of elementary values") {
    CHECK(std::abs(e_of(cplx{0.0, 0.0}) - 1.0) < 1e-15);
    CHECK(std::abs(e_of(cplx{0.0, 1.0}) - std::exp(-2.0 * oracles::pi)) < 1e-18);
    CHECK(std::abs(e_of(cplx{0.5, 0.0}) - cplx{-1.0, 0.0}) < 1e-15);
    // |e(z)| = exp(-2 pi Im z)
    CHECK(std::abs(e_of(cplx{0.3, 0.7})) == doctest::Approx(std::exp(-1.4 * oracles::pi)));
}

TEST_CASE("eta4 basic values") {
    const cplx at_i = eta4(UhpPoint{0.0, 1.0});
    CHECK(at_i.real() > 0.0);
    CHECK(std::abs(at_i.imag()) < 1e-16);
    // Closed form eta(i)^4 = (Gamma(1/4) / (2 pi^(3/4)))^4
    CHECK(at_i.real() == doctest::Approx(0.34830098242141921).epsilon(1e-13));
    CHECK(eta4(UhpPoint{0.0, 2.0}).real() == doctest::Approx(0.12314299328206101).epsilon(1e-13));

    const cplx deep = eta4(UhpPoint{0.0, 10.0});
    CHECK(std::abs(deep - std::exp(-10.0 * oracles::pi / 3.0)) < 1e-12 * std::abs(deep));
}

TEST_CASE("eta4 against the 200-term extended-precision product") {
    for (const cplx z : {cplx{0.0, 1.0}, cplx{0.3, 0.8}, cplx{-0.45, 1.7}, cplx{0.2, 0.35}}) {
        const auto brute = oracles::eta4_brute({z.real(), z.imag()});
        const cplx got = eta4(UhpPoint{z});
        CHECK(std::abs(got - cplx{static_cast<double>(brute.real()),
                                  static_cast<double>(brute.imag())}) <
              1e-13 * std::abs(got));
    }
}

TEST_CASE("eta4 reports BudgetExceeded for tiny imaginary part") {
    CHECK_THROWS_AS(eta4(UhpPoint{0.0, 1e-4}), BudgetExceeded);
}

TEST_CASE("eta4 functional equations") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ux(-2.0, 2.0), uy(0.3, 3.0);
    const cplx sixth_root = std::exp(cplx{0.0, 2.0 * oracles::pi / 6.0});
    for (int i = 0; i < 100; ++i) {
        const UhpPoint z{ux(rng), uy(rng)};
        const cplx ez = eta4(z);
        CHECK(std::abs(eta4(UhpPoint{z.x() + 1.0, z.y()}) - sixth_root * ez) <
              1e-11 * std::abs(ez));
        const cplx zz = z.value();
        const cplx rhs = zz * zz * ez;
        CHECK(std::abs(eta4(UhpPoint{-1.0 / zz}) + rhs) < 1e-11 * std::abs(rhs));
        // reflection invariance of the magnitude
        CHECK(std::abs(std::abs(eta4(UhpPoint{-z.x(), z.y()})) - std::abs(ez)) <
              1e-12 * std::abs(ez));
    }
}

TEST_CASE("apply_generator elementary actions") {
    const UhpPoint s_fixed = apply_generator(UhpPoint{0.0, 1.0}, Generator::S);
    CHECK(s_fixed.x() == doctest::Approx(0.0));
    CHECK(s_fixed.y() == doctest::Approx(1.0));

    const UhpPoint refl = apply_generator(UhpPoint{0.4, 1.2}, Generator::R);
    CHECK(refl.x() == doctest::Approx(-0.4));
    CHECK(refl.y() == doctest::Approx(1.2));

    const UhpPoint shifted = apply_generator(UhpPoint{2.3, 0.9}, Generator::T2Inv);
    CHECK(shifted.x() == doctest::Approx(0.3));
    CHECK(shifted.y() == doctest::Approx(0.9));
}

TEST_CASE("generators invert exactly") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ux(-3.0, 3.0), uy(0.05, 5.0);
    for (int i = 0; i < 200; ++i) {
        const UhpPoint z{ux(rng), uy(rng)};
        for (Generator g : {Generator::T2, Generator::T2Inv, Generator::S, Generator::R}) {
            const UhpPoint back = apply_generator(apply_generator(z, g), inverse_generator(g));
            CHECK(std::abs(back.x() - z.x()) < 1e-13);
            CHECK(std::abs(back.y() - z.y()) < 1e-13);
        }
    }
}

TEST_CASE("canonicalize fixed points and single moves") {
    const CanonicalPoint at_i = canonicalize(UhpPoint{0.0, 1.0});
    CHECK(at_i.word.empty());
    CHECK(at_i.point.x() == doctest::Approx(0.0));
    CHECK(at_i.point.y() == doctest::Approx(1.0));

    const CanonicalPoint refl = canonicalize(UhpPoint{-0.4, 1.2});
    REQUIRE(refl.word.size() == 1);
    CHECK(refl.word[0] == Generator::R);
    CHECK(refl.point.x() == doctest::Approx(0.4));
    CHECK(refl.point.y() == doctest::Approx(1.2));
}

TEST_CASE("canonicalize against exhaustive word enumeration") {
    const UhpPoint z{2.35, 0.17};
    const CanonicalPoint c = canonicalize(z);
    CHECK(in_fundamental_set(c.point, 1e-12));

    const auto orbit = oracles::fundamental_orbit_points(z, 12);
    REQUIRE(!orbit.empty());
    double best = 1e9;
    for (const cplx p : orbit) best = std::min(best, std::abs(p - c.point.value()));
    CHECK(best < 1e-8);
}

TEST_CASE("canonicalize membership and word replay on random points") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ux(-4.0, 4.0), uy(0.05, 5.0);
    for (int i = 0; i < 200; ++i) {
        const UhpPoint z{ux(rng), uy(rng)};
        const CanonicalPoint c = canonicalize(z);
        CHECK(c.point.x() >= -1e-12);
        CHECK(c.point.x() <= 1.0 + 1e-12);
        CHECK(std::abs(c.point.value()) >= 1.0 - 1e-12);

        UhpPoint replay = z;
        for (Generator g : c.word) replay = apply_generator(replay, g);
        CHECK(std::abs(replay.x() - c.point.x()) < 1e-12);
        CHECK(std::abs(replay.y() - c.point.y()) < 1e-12);
    }
}

TEST_CASE("boundary points are accepted as canonical") {
    // |z| = 1 and Re z in {0, 1} stay put.
    const CanonicalPoint arc = canonicalize(UhpPoint{0.6, 0.8});
    CHECK(arc.point.x() == doctest::Approx(0.6));
    CHECK(arc.point.y() == doctest::Approx(0.8));

    const CanonicalPoint edge = canonicalize(UhpPoint{1.0, 1.5});
    CHECK(edge.point.x() == doctest::Approx(1.0));
    CHECK(edge.point.y() == doctest::Approx(1.5));
}

TEST_CASE("the objective is blind to canonicalization") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> ux(-4.0, 4.0), uy(0.1, 4.0);
    for (int i = 0; i < 25; ++i) {
        const UhpPoint z{ux(rng), uy(rng)};
        const UhpPoint c = canonicalize(z).point;
        for (double b : {-0.5, 0.0, 0.3, 1.0, 1.2}) {
            const double fz = f_b(MixWeight{b}, z);
            CHECK(std::abs(f_b(MixWeight{b}, c) - fz) <= 1e-10 * (1.0 + std::abs(fz)));
        }
    }
}

TEST_CASE("log_abs_im_eta matches the direct product where it converges") {
    for (const cplx z : {cplx{0.3, 1.2}, cplx{0.9, 0.6}, cplx{-1.7, 0.25}}) {
        const double direct = std::log(
            z.imag() *
            std::abs(static_cast<cplx>(oracles::eta4_brute({z.real(), z.imag()}, 400))));
        CHECK(detail::log_abs_im_eta(z) == doctest::Approx(direct).epsilon(1e-12));
    }
}
