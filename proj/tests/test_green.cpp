#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"

using namespace latmin;
using oracles::cplx;

namespace {
const LatticeBasis square = LatticeBasis::unit_area_from_tau(UhpPoint{0.0, 1.0});
const LatticeBasis hexagonal =
    LatticeBasis::unit_area_from_tau(UhpPoint{0.5, std::sqrt(3.0) / 2.0});
const LatticeBasis skew = LatticeBasis::unit_area_from_tau(UhpPoint{0.3, 1.7});
} // namespace

TEST_CASE("LatticeBasis construction and tau") {
    CHECK_THROWS_AS(LatticeBasis({1.0, 0.0}, {2.0, -1.0}), std::invalid_argument);
    CHECK(square.unit_area());
    CHECK(square.tau().y() == doctest::Approx(1.0));
    CHECK(hexagonal.area() == doctest::Approx(1.0));
}

TEST_CASE("square lattice symmetry of the half periods") {
    const double g1 = green_value(square, square.a1() * 0.5);
    const double g2 = green_value(square, square.a2() * 0.5);
    CHECK(std::abs(g1 - g2) < 1e-12);
}

TEST_CASE("periodicity and evenness") {
    const cplx zeta = 0.27 * skew.a1() + 0.41 * skew.a2();
    const double g = green_value(skew, zeta);
    CHECK(std::abs(green_value(skew, zeta + skew.a1()) - g) < 1e-11);
    CHECK(std::abs(green_value(skew, zeta + skew.a2()) - g) < 1e-11);
    CHECK(std::abs(green_value(skew, zeta + skew.a1() + skew.a2()) - g) < 1e-11);
    CHECK(std::abs(green_value(skew, -zeta) - g) < 1e-11);
}

TEST_CASE("equivalent bases of one lattice give one Green's function") {
    // (1, 9+i) generates the same lattice as (1, i).
    const LatticeBasis skewed{{1.0, 0.0}, {9.0, 1.0}};
    const cplx zeta{0.3, 0.4};
    CHECK(std::abs(green_value(skewed, zeta) - green_value(square, zeta)) < 1e-12);
}

TEST_CASE("on-lattice guard") {
    CHECK_THROWS_AS(green_value(square, cplx{0.0, 0.0}), OnLattice);
    CHECK_THROWS_AS(green_value(square, square.a1()), OnLattice);
    CHECK_THROWS_AS(green_value(square, square.a1() * 1e-12), OnLattice);
}

TEST_CASE("dual-lattice Fourier oracle agreement") {
    const cplx mid = 0.5 * (square.a1() + square.a2());
    CHECK(std::abs(green_value(square, mid) - fourier_green_value(square, mid)) < 1e-8);

    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> ut(0.05, 0.95);
    const LatticeBasis* bases[] = {&square, &hexagonal, &skew};
    for (int i = 0; i < 20; ++i) {
        const LatticeBasis& basis = *bases[i % 3];
        const cplx zeta = ut(rng) * basis.a1() + ut(rng) * basis.a2();
        CHECK(std::abs(green_value(basis, zeta) - fourier_green_value(basis, zeta)) < 1e-7);
    }
}

TEST_CASE("exponential integral oracle values") {
    CHECK(detail::expint_e1(0.5) == doctest::Approx(0.55977359477616081).epsilon(1e-14));
    CHECK(detail::expint_e1(1.0) == doctest::Approx(0.21938393439552028).epsilon(1e-14));
    CHECK(detail::expint_e1(5.0) == doctest::Approx(0.001148295591275326).epsilon(1e-13));
    CHECK(detail::expint_e1(20.0) == doctest::Approx(9.8355252906498816e-11).epsilon(1e-12));
}

TEST_CASE("regular part at zero: closed form vs series routes") {
    for (const LatticeBasis* basis : {&square, &hexagonal, &skew}) {
        const double closed = h_regular_at_zero(*basis);
        const double through_series = h_value(*basis, 0.0);
        CHECK(std::abs(closed - through_series) < 1e-13);
    }
    // Distinct lattices give distinct values.
    CHECK(std::abs(h_regular_at_zero(square) - h_regular_at_zero(hexagonal)) > 1e-4);
}

TEST_CASE("regular part is stable under doubling max_terms") {
    SeriesBudget doubled;
    doubled.max_terms = 8192;
    for (const LatticeBasis* basis : {&square, &hexagonal}) {
        CHECK(std::abs(h_regular_at_zero(*basis) - h_regular_at_zero(*basis, doubled)) < 1e-12);
    }
}

TEST_CASE("regular part is a lattice invariant") {
    // tau and tau + 2 generate the same lattice.
    const LatticeBasis shifted = LatticeBasis::unit_area_from_tau(UhpPoint{2.0, 1.0});
    CHECK(std::abs(h_regular_at_zero(square) - h_regular_at_zero(shifted)) < 1e-11);
}

TEST_CASE("Green decomposition: Richardson extrapolation of the regular part") {
    for (const LatticeBasis* basis : {&square, &skew}) {
        auto d_of = [&](double t) {
            const cplx zeta = t * basis->a1();
            return green_value(*basis, zeta) +
                   std::log(2.0 * oracles::pi * std::abs(zeta)) / (2.0 * oracles::pi) -
                   std::norm(zeta) / 4.0;
        };
        const double t = 0.01;
        const double d1 = d_of(t), d2 = d_of(t / 2.0), d3 = d_of(t / 4.0);
        const double r1 = (4.0 * d2 - d1) / 3.0, r2 = (4.0 * d3 - d2) / 3.0;
        const double extrap = (16.0 * r2 - r1) / 15.0;
        CHECK(std::abs(extrap - h_regular_at_zero(*basis)) < 1e-9);
    }
}

TEST_CASE("half-period closed forms match the direct Green evaluation") {
    for (const LatticeBasis* basis : {&square, &hexagonal, &skew}) {
        const HalfPeriodValues v = half_period_values(*basis);
        CHECK(std::abs(v.g_mid - green_value(*basis, 0.5 * (basis->a1() + basis->a2()))) < 1e-10);
        CHECK(std::abs(v.g_half1 - green_value(*basis, 0.5 * basis->a1())) < 1e-10);
        CHECK(std::abs(v.g_half2 - green_value(*basis, 0.5 * basis->a2())) < 1e-10);
    }
}

TEST_CASE("half periods on the square lattice coincide") {
    const HalfPeriodValues v = half_period_values(square);
    CHECK(std::abs(v.g_half1 - v.g_half2) < 1e-11);
    // (a1+a2)/2 and (a1-a2)/2 are lattice-equivalent.
    CHECK(std::abs(green_value(square, 0.5 * (square.a1() + square.a2())) -
                   green_value(square, 0.5 * (square.a1() - square.a2()))) < 1e-11);
}

TEST_CASE("half_period_values requires a unit-area basis") {
    const LatticeBasis big{{2.0, 0.0}, {0.0, 2.0}};
    CHECK_THROWS_AS(half_period_values(big), std::invalid_argument);
}

TEST_CASE("product identities") {
    for (const UhpPoint tau : {UhpPoint{0.0, 1.0}, UhpPoint{0.3, 1.7}}) {
        const ProductResiduals res = verify_product_identities(tau);
        CHECK(res.residual1 < 1e-12);
        CHECK(res.residual2 < 1e-12);
    }
    // Deep in the cusp all factors are within exp(-5 pi) of 1.
    CHECK(verify_product_identities(UhpPoint{0.0, 5.0}).residual2 < 1e-15);
}

TEST_CASE("cell-average of the Green's function vanishes") {
    const int n = 64;
    const double a = 0.05;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double t1 = (i + 0.5) / n - 0.5, t2 = (j + 0.5) / n - 0.5;
            const cplx zeta = t1 * square.a1() + t2 * square.a2();
            if (std::abs(zeta) <= a) continue;
            sum += green_value(square, zeta) / (n * n);
        }
    }
    const double disc = a * a * (1.0 - 2.0 * std::log(2.0 * oracles::pi * a)) / 4.0 +
                        oracles::pi * std::pow(a, 4) / 8.0 +
                        oracles::pi * a * a * h_regular_at_zero(square);
    CHECK(std::abs(sum + disc) < 1e-3);
}
