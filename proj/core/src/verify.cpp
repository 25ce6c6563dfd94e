#include "latmin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "latmin/assembly.hpp"
#include "latmin/green.hpp"
#include "latmin/minimize.hpp"
#include "latmin/modular.hpp"
#include "latmin/objective.hpp"
#include "latmin/series.hpp"

namespace latmin {

namespace {

constexpr double pi = std::numbers::pi;
const double sqrt3 = std::sqrt(3.0);
using cplx = std::complex<double>;

CheckResult equality(std::string name, double computed, double expected, double tol) {
    CheckResult r;
    r.name = std::move(name);
    r.computed = computed;
    r.expected = expected;
    r.tolerance = tol;
    r.kind = CheckResult::Kind::Equality;
    r.passed = std::abs(computed - expected) <= tol;
    return r;
}

CheckResult bound(std::string name, double computed, double limit, bool lower) {
    CheckResult r;
    r.name = std::move(name);
    r.computed = computed;
    r.expected = limit;
    r.tolerance = 0.0;
    r.kind = lower ? CheckResult::Kind::LowerBound : CheckResult::Kind::UpperBound;
    r.passed = lower ? computed > limit : computed < limit;
    return r;
}

CheckResult info(std::string name, double computed) {
    CheckResult r;
    r.name = std::move(name);
    r.computed = computed;
    r.kind = CheckResult::Kind::Info;
    r.passed = true;
    return r;
}

UhpPoint random_uhp(std::mt19937_64& rng, double x_span, double y_lo, double y_hi) {
    std::uniform_real_distribution<double> ux(-x_span, x_span);
    std::uniform_real_distribution<double> uy(y_lo, y_hi);
    return {ux(rng), uy(rng)};
}

} // namespace

double CheckResult::margin() const {
    switch (kind) {
        case Kind::Equality: return tolerance - std::abs(computed - expected);
        case Kind::LowerBound: return computed - expected;
        case Kind::UpperBound: return expected - computed;
        case Kind::Info: return 0.0;
    }
    return 0.0;
}

std::vector<CheckResult> check_reference_constants(const SeriesBudget& budget) {
    std::vector<CheckResult> out;

    const double d = axis_derivative(SpeciesTag::Zero, 1, 1.0, budget);
    const double e = axis_derivative(SpeciesTag::One, 1, 1.0, budget);
    out.push_back(equality("Y0_prime_at_i", d, 0.2982, 5e-4));
    out.push_back(equality("Y1_prime_at_i", e, -1.298, 5e-3));
    out.push_back(equality("B_threshold", threshold_b(budget), 0.1867, 5e-4));
    out.push_back(equality("lhospital_ratio", ratio_y0_over_y1(1.0, budget), -0.2297, 5e-4));

    // |dY_B(i)/dy| = |B e + (1-B) d| vanishes by construction of B.
    const double B = threshold_b(budget);
    out.push_back(equality("interp_second_derivative", B * e + (1.0 - B) * d, 0.0, 1e-10));

    const double a1 = 4.0 * std::pow(pi, 3) / std::pow(1.0 + std::exp(-pi), 3);
    const double a2 = 32.0 * std::pow(pi, 3) / std::pow(1.0 - std::exp(-2.0 * pi), 3) +
                      4.0 * std::pow(pi, 3) * (1.0 + 4.0 * std::exp(-2.0 * pi) + std::exp(-4.0 * pi)) /
                          (std::pow(1.0 - std::exp(-pi), 3) * std::pow(1.0 - std::exp(-2.0 * pi), 4));
    out.push_back(equality("A1", a1, 109.24, 0.01));
    out.push_back(equality("A2", a2, 1141.50, 0.01));

    auto kappa = [&](double y) {
        return 2.0 * std::exp(pi * y) / (y * y * y) - a1 + a2 * std::exp(-pi * y);
    };
    out.push_back(equality("kappa_at_1", kappa(1.0), -13.63, 0.01));
    out.push_back(equality("kappa_at_sqrt3", kappa(sqrt3), -15.47, 0.01));

    const double ep = std::exp(-pi), e2p = std::exp(-2.0 * pi), e3p = std::exp(-3.0 * pi);
    const double e4p = std::exp(-4.0 * pi);
    const double big_a =
        36.0 * pi * pi / (3.0 * std::pow(1.0 + e3p, 2)) * (3.0 * pi * (1.0 - e3p) / (1.0 + e3p) - 2.0) -
        64.0 * std::pow(pi, 5) * ((1.0 + ep) / (1.0 - ep)) *
            (1.0 + 31.0 * e4p + 55.0 * std::exp(-8.0 * pi) + 9.0 * std::exp(-12.0 * pi)) /
            std::pow(1.0 - e4p, 5) -
        1024.0 * std::pow(pi, 5) / std::pow(1.0 - e2p, 4) *
            (e2p * (1.0 + 6.0 * e2p + e4p) / std::pow(1.0 - e2p, 3));
    out.push_back(equality("A", big_a, -21077.61, 0.02));

    // Tail estimate constant for the alternating series, y >= sqrt(3).
    const double r3 = std::exp(-sqrt3 * pi);
    const double alt3 = std::exp(sqrt3 * pi) / 4.0 -
                        std::pow(1.0 + r3, 2) / std::pow(1.0 - std::exp(-2.0 * sqrt3 * pi), 2);
    out.push_back(equality("alt3_constant", alt3, 56.68, 0.01));

    // Derivative bound at y = sqrt(3); the sharp-denominator form is the
    // one that reproduces the printed value.
    const double deriv_bound = -1.0 + 4.0 * pi * 3.0 * r3 / std::pow(1.0 + r3, 2);
    out.push_back(equality("y0_derivative_bound", deriv_bound, -0.8388, 1e-3));
    out.push_back(bound("y0_derivative_bound_simple", -1.0 + 12.0 * pi * r3, 0.0, false));

    // Term-decrease comparison for the cubic alternating series, y > 1.
    out.push_back(equality("alt2_lhs", std::exp(pi) / 8.0, 2.8925, 1e-3));
    out.push_back(equality("alt2_rhs", std::pow(1.0 + ep, 3) / std::pow(1.0 - e2p, 3), 1.1417, 1e-3));

    out.push_back(equality("dkk_factor", 1.0 - ep - e2p, 0.9549, 1e-3));
    return out;
}

std::vector<CheckResult> check_beta_conditions(double beta, const SeriesBudget& budget) {
    if (!(beta > 1.0 && beta < sqrt3))
        throw OutOfRange("check_beta_conditions: beta must be in (1, sqrt(3))");
    (void)budget;

    const double eb = std::exp(-pi * beta);
    const double e2b = std::exp(-2.0 * pi * beta);
    const double e3b = std::exp(-3.0 * pi * beta);
    const double e2p = std::exp(-2.0 * pi);

    const double c1 = -1.0 / (beta * beta) + 4.0 * pi * pi * eb / std::pow(1.0 + eb, 2) -
                      16.0 * pi * pi * e2b / std::pow(1.0 - e2b, 2);
    const double c2 = -1.0 + 48.0 * eb - 312.0 * e2b;
    const double c3 = -6.0 / (4.0 * std::pow(pi, 4) * std::pow(beta, 4)) +
                      (eb - 24.0 * e2b + 104.0 * e3b) / std::pow(1.0 - e2p, 4);

    const double ep = std::exp(-pi), e4p = std::exp(-4.0 * pi), e3p = std::exp(-3.0 * pi);
    const double big_a =
        36.0 * pi * pi / (3.0 * std::pow(1.0 + e3p, 2)) * (3.0 * pi * (1.0 - e3p) / (1.0 + e3p) - 2.0) -
        64.0 * std::pow(pi, 5) * ((1.0 + ep) / (1.0 - ep)) *
            (1.0 + 31.0 * e4p + 55.0 * std::exp(-8.0 * pi) + 9.0 * std::exp(-12.0 * pi)) /
            std::pow(1.0 - e4p, 5) -
        1024.0 * std::pow(pi, 5) / std::pow(1.0 - e2p, 4) *
            (std::exp(-2.0 * pi) * (1.0 + 6.0 * e2p + e4p) / std::pow(1.0 - e2p, 3));
    const double c4 = (4.0 * pi / (beta * beta) - 8.0 / std::pow(beta, 3)) / eb -
                      (4.0 * pi / (beta * beta) + 8.0 / std::pow(beta, 3)) +
                      big_a * eb * std::pow(1.0 + eb, 3) / (pi * pi);

    std::vector<CheckResult> out;
    const bool printed = std::abs(beta - 1.08) < 1e-12;
    auto add = [&](const char* name, double value, double target, bool positive) {
        if (printed) {
            out.push_back(equality(name, value, target, 1e-3 * std::abs(target)));
        } else {
            out.push_back(bound(name, value, 0.0, positive));
        }
    };
    add("beta_condition_1", c1, 0.2058, true);
    add("beta_condition_2", c2, 0.2608, true);
    add("beta_condition_3", c3, -0.0007930, false);
    add("beta_condition_4", c4, 35.20, true);
    return out;
}

namespace {

double t_of_y(double y, const SeriesBudget& budget) {
    return axis_derivative(SpeciesTag::Zero, 2, y, budget) *
               axis_derivative(SpeciesTag::One, 1, y, budget) -
           axis_derivative(SpeciesTag::Zero, 1, y, budget) *
               axis_derivative(SpeciesTag::One, 2, y, budget);
}

} // namespace

CheckResult check_t_positive(const SeriesBudget& budget, int n_samples) {
    if (n_samples < 10) throw OutOfRange("check_t_positive: need at least 10 samples");
    double min_t = std::numeric_limits<double>::infinity();
    const double lo = 1.0 + 1e-6, hi = sqrt3 - 1e-6;
    for (int i = 0; i < n_samples; ++i) {
        const double y = lo + (hi - lo) * static_cast<double>(i) / (n_samples - 1);
        min_t = std::min(min_t, t_of_y(y, budget));
    }
    return bound("T_positive_min", min_t, 0.0, true);
}

std::vector<CheckResult> appendix_suite(const SeriesBudget& budget, int n_samples) {
    std::vector<CheckResult> out;
    out.push_back(check_t_positive(budget, n_samples));
    out.push_back(equality("T_at_1", t_of_y(1.0, budget), 0.0, 1e-8));

    // d^2 Y_j(i)/dy^2 = -3 dY_j(i)/dy for both species.
    for (SpeciesTag j : {SpeciesTag::One, SpeciesTag::Zero}) {
        const double first = axis_derivative(j, 1, 1.0, budget);
        const double second = axis_derivative(j, 2, 1.0, budget);
        out.push_back(equality(j == SpeciesTag::One ? "recursive_identity_j1"
                                                    : "recursive_identity_j0",
                               second + 3.0 * first, 0.0, 1e-9));
    }

    // y -> Y0'/Y1' strictly increasing on (1, sqrt(3)).
    {
        double prev = -std::numeric_limits<double>::infinity();
        double min_gap = std::numeric_limits<double>::infinity();
        const double lo = 1.0 + 1e-6, hi = sqrt3 - 1e-6;
        for (int i = 0; i < n_samples; ++i) {
            const double y = lo + (hi - lo) * static_cast<double>(i) / (n_samples - 1);
            const double v = axis_derivative(SpeciesTag::Zero, 1, y, budget) /
                             axis_derivative(SpeciesTag::One, 1, y, budget);
            if (i > 0) min_gap = std::min(min_gap, v - prev);
            prev = v;
        }
        out.push_back(bound("derivative_ratio_increasing", min_gap, 0.0, true));
    }

    // y -> Y0/Y1 strictly increasing on (1, sqrt(3)), the key monotonicity.
    {
        double prev = -std::numeric_limits<double>::infinity();
        double min_gap = std::numeric_limits<double>::infinity();
        const double lo = 1.0 + 1e-4, hi = sqrt3 - 1e-6;
        for (int i = 0; i < n_samples; ++i) {
            const double y = lo + (hi - lo) * static_cast<double>(i) / (n_samples - 1);
            const double v = ratio_y0_over_y1(y, budget);
            if (i > 0) min_gap = std::min(min_gap, v - prev);
            prev = v;
        }
        out.push_back(bound("quotient_monotone", min_gap, 0.0, true));
    }
    return out;
}

double fourier_green_value(const LatticeBasis& basis, cplx zeta, double k_cutoff) {
    // Dual sum with Gaussian regularization exp(-|k|^2 / (4 kappa^2)); the
    // compensating short-range part restores the bare sum's value exactly.
    const double kappa2 = 64.0;
    const double area = basis.area();
    const cplx a1 = basis.a1(), a2 = basis.a2();

    // Dual basis (row vectors of the inverse): a_i . b_j = delta_ij.
    const double p = a1.real(), q = a1.imag(), r = a2.real(), s = a2.imag();
    const double det = p * s - q * r;
    const double b1x = s / det, b1y = -r / det;
    const double b2x = -q / det, b2y = p / det;

    const double norm_max = std::sqrt(std::norm(a1) + std::norm(a2));
    const int m_max = static_cast<int>(std::ceil(k_cutoff * norm_max / (2.0 * pi))) + 1;

    double k_sum = 0.0;
    for (int m = -m_max; m <= m_max; ++m) {
        for (int n = -m_max; n <= m_max; ++n) {
            if (m == 0 && n == 0) continue;
            const double kx = 2.0 * pi * (m * b1x + n * b2x);
            const double ky = 2.0 * pi * (m * b1y + n * b2y);
            const double k2 = kx * kx + ky * ky;
            if (k2 > k_cutoff * k_cutoff) continue;
            k_sum += std::cos(kx * zeta.real() + ky * zeta.imag()) *
                     std::exp(-k2 / (4.0 * kappa2)) / k2;
        }
    }
    k_sum /= area;

    // Short-range completion: sum of E1(kappa^2 |zeta - lambda|^2)/(4 pi)
    // minus the cell average 1/(4 kappa^2 A).
    const double t1 = -std::imag(std::conj(a2) * zeta) / area;
    const double t2 = std::imag(std::conj(a1) * zeta) / area;
    const cplx z_red = (t1 - std::floor(t1)) * a1 + (t2 - std::floor(t2)) * a2;
    double r_sum = 0.0;
    for (int j1 = -3; j1 <= 3; ++j1) {
        for (int j2 = -3; j2 <= 3; ++j2) {
            const double d2 =
                std::norm(z_red - (static_cast<double>(j1) * a1 + static_cast<double>(j2) * a2));
            const double x = kappa2 * d2;
            if (x < 46.0) r_sum += detail::expint_e1(x) / (4.0 * pi);
        }
    }
    return k_sum + r_sum - 1.0 / (4.0 * kappa2 * area);
}

namespace detail {

double expint_e1(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("expint_e1: x must be positive");
    if (x <= 1.0) {
        // E1(x) = -gamma - ln x + sum (-1)^{k+1} x^k / (k k!)
        constexpr double euler_gamma = 0.5772156649015328606;
        double sum = 0.0, term = 1.0;
        for (int k = 1; k < 64; ++k) {
            term *= -x / k;
            const double add = -term / k;
            sum += add;
            if (std::abs(add) < 1e-18 * (std::abs(sum) + 1.0)) break;
        }
        return -euler_gamma - std::log(x) + sum;
    }
    // Continued fraction (modified Lentz).
    double b = x + 1.0, c = 1e308, d = 1.0 / b, h = d;
    for (int k = 1; k < 200; ++k) {
        const double a = -static_cast<double>(k) * k;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x);
}

} // namespace detail

std::vector<CheckResult> check_lemma_suite(const SeriesBudget& budget) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(verifier_seed);
    out.push_back(info("rng_seed", static_cast<double>(verifier_seed)));

    // --- modular_core ---
    {
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const UhpPoint z = random_uhp(rng, 3.0, 0.05, 5.0);
            for (Generator g : {Generator::T2, Generator::T2Inv, Generator::S, Generator::R}) {
                const UhpPoint back = apply_generator(apply_generator(z, g), inverse_generator(g));
                worst = std::max({worst, std::abs(back.x() - z.x()), std::abs(back.y() - z.y())});
            }
        }
        out.push_back(equality("gen_inverse_roundtrip", worst, 0.0, 1e-13));
    }
    {
        double worst_shift = 0.0, worst_inv = 0.0, worst_refl = 0.0;
        const cplx phase = std::exp(cplx(0.0, 2.0 * pi / 6.0));
        for (int i = 0; i < 100; ++i) {
            const UhpPoint z = random_uhp(rng, 2.0, 0.3, 3.0);
            const cplx ez = eta4(z, budget);
            const cplx eshift = eta4(UhpPoint{z.x() + 1.0, z.y()}, budget);
            worst_shift = std::max(worst_shift, std::abs(eshift - phase * ez) / std::abs(ez));
            const cplx zz = z.value();
            const cplx einv = eta4(UhpPoint{-1.0 / zz}, budget);
            const cplx rhs = zz * zz * ez;
            worst_inv = std::max(worst_inv, std::abs(einv + rhs) / std::abs(rhs));
            const cplx erefl = eta4(UhpPoint{-z.x(), z.y()}, budget);
            worst_refl =
                std::max(worst_refl, std::abs(std::abs(erefl) - std::abs(ez)) / std::abs(ez));
        }
        out.push_back(equality("eta_shift_relation", worst_shift, 0.0, 1e-11));
        out.push_back(equality("eta_inversion_relation", worst_inv, 0.0, 1e-11));
        out.push_back(equality("eta_reflection", worst_refl, 0.0, 1e-12));
    }
    {
        double worst_slack = 0.0, worst_replay = 0.0;
        for (int i = 0; i < 200; ++i) {
            const UhpPoint z = random_uhp(rng, 4.0, 0.05, 5.0);
            const CanonicalPoint c = canonicalize(z);
            const double slack = std::max(
                {-c.point.x(), c.point.x() - 1.0, 1.0 - std::abs(c.point.value())});
            worst_slack = std::max(worst_slack, slack);
            UhpPoint replay = z;
            for (Generator g : c.word) replay = apply_generator(replay, g);
            worst_replay = std::max({worst_replay, std::abs(replay.x() - c.point.x()),
                                     std::abs(replay.y() - c.point.y())});
        }
        out.push_back(equality("canonicalize_membership", worst_slack, 0.0, 1e-12));
        out.push_back(equality("canonicalize_word_replay", worst_replay, 0.0, 1e-12));
    }

    // --- series_derivatives ---
    {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const UhpPoint z = random_uhp(rng, 1.5, 0.3, 3.0);
            for (SpeciesTag j : {SpeciesTag::One, SpeciesTag::Zero}) {
                const Gradient g = gradient_series(j, z, budget);
                const Gradient gr = gradient_series(j, UhpPoint{-z.x(), z.y()}, budget);
                worst = std::max({worst, std::abs(gr.x + g.x), std::abs(gr.y - g.y)});
            }
        }
        out.push_back(equality("grad_reflection", worst, 0.0, 1e-11));
    }
    {
        double worst1 = 0.0, worst0 = 0.0;
        for (int i = 0; i < 40; ++i) {
            const double y = 1.01 + (3.0 - 1.01) * i / 39.0;
            const double s1 = axis_derivative(SpeciesTag::One, 0, y, budget) +
                              axis_derivative(SpeciesTag::One, 0, 1.0 / y, budget) / (y * y);
            const double s0 = axis_derivative(SpeciesTag::Zero, 0, y, budget) +
                              axis_derivative(SpeciesTag::Zero, 0, 1.0 / y, budget) / (y * y);
            worst1 = std::max(worst1, std::abs(s1));
            worst0 = std::max(worst0, std::abs(s0));
        }
        out.push_back(equality("axis_scaling_j1", worst1, 0.0, 1e-10));
        out.push_back(equality("axis_scaling_j0", worst0, 0.0, 1e-10));
    }
    {
        bool ok = true;
        for (double y = 0.22; y < 1.0; y += 0.06)
            ok = ok && axis_derivative(SpeciesTag::One, 0, y, budget) > 0.0;
        for (double y = 1.02; y < 5.0; y += 0.11)
            ok = ok && axis_derivative(SpeciesTag::One, 0, y, budget) < 0.0;
        out.push_back(bound("y1_sign_pattern", ok ? 1.0 : -1.0, 0.0, true));
        out.push_back(
            equality("y1_zero_at_i", axis_derivative(SpeciesTag::One, 0, 1.0, budget), 0.0, 1e-10));
    }
    {
        bool ok = true;
        auto y0 = [&](double y) { return axis_derivative(SpeciesTag::Zero, 0, y, budget); };
        for (double y = 0.20; y < 0.56; y += 0.04) ok = ok && y0(y) > 0.0;
        for (double y = 0.62; y < 0.99; y += 0.04) ok = ok && y0(y) < 0.0;
        for (double y = 1.02; y < 1.72; y += 0.05) ok = ok && y0(y) > 0.0;
        for (double y = 1.76; y < 5.0; y += 0.12) ok = ok && y0(y) < 0.0;
        out.push_back(bound("y0_sign_pattern", ok ? 1.0 : -1.0, 0.0, true));
        const double z1 = std::abs(y0(sqrt3 / 3.0)), z2 = std::abs(y0(1.0)), z3 = std::abs(y0(sqrt3));
        out.push_back(equality("y0_zeros", std::max({z1, z2, z3}), 0.0, 1e-9));
    }
    {
        double prev = 0.0, min_gap = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 500; ++i) {
            const double y = (1.0 + 1e-4) + (sqrt3 - 2e-4 - 1.0) * i / 499.0;
            const double v = ratio_y0_over_y1(y, budget);
            if (i > 0) min_gap = std::min(min_gap, v - prev);
            prev = v;
        }
        out.push_back(bound("quotient_monotone", min_gap, 0.0, true));
    }
    {
        double worst = 0.0;
        const double h = 1e-4;
        for (double y : {1.05, 1.3, 1.6}) {
            for (SpeciesTag j : {SpeciesTag::One, SpeciesTag::Zero}) {
                for (int k = 1; k <= 3; ++k) {
                    const double fd = (axis_derivative(j, k - 1, y + h, budget) -
                                       axis_derivative(j, k - 1, y - h, budget)) /
                                      (2.0 * h);
                    const double an = axis_derivative(j, k, y, budget);
                    worst = std::max(worst, std::abs(fd - an) / std::abs(an));
                }
            }
        }
        out.push_back(equality("axis_derivative_fd", worst, 0.0, 1e-5));
    }

    // --- objective ---
    {
        double worst = 0.0;
        std::uniform_real_distribution<double> ub(-0.5, 1.5);
        for (int i = 0; i < 100; ++i) {
            const UhpPoint z = random_uhp(rng, 2.0, 0.2, 3.0);
            const MixWeight b{ub(rng)};
            const double f = f_b(b, z, budget);
            for (Generator g : {Generator::T2, Generator::S, Generator::R}) {
                const double fg = f_b(b, apply_generator(z, g), budget);
                worst = std::max(worst, std::abs(fg - f) / (1.0 + std::abs(f)));
            }
        }
        out.push_back(equality("g_invariance", worst, 0.0, 1e-10));
    }
    {
        const UhpPoint z{0.2, 1.2};
        const double d1 = std::abs(f_component(SpeciesTag::One, UhpPoint{z.x() + 1.0, z.y()}, budget) -
                                   f_component(SpeciesTag::One, z, budget));
        out.push_back(equality("f1_shift1_invariance", d1, 0.0, 1e-10));
        const double d0 = std::abs(f_component(SpeciesTag::Zero, UhpPoint{z.x() + 1.0, z.y()}, budget) -
                                   f_component(SpeciesTag::Zero, z, budget));
        out.push_back(bound("f0_shift1_noninvariance", d0, 1e-3, true));
    }
    {
        double worst = 0.0;
        std::uniform_real_distribution<double> ub(-0.5, 1.5);
        for (int i = 0; i < 100; ++i) {
            const UhpPoint z = random_uhp(rng, 2.0, 0.2, 3.0);
            const double b = ub(rng);
            const double lhs = f_b(MixWeight{b}, dual_point(z), budget);
            const double rhs = f_b(MixWeight{1.0 - b}, z, budget);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        out.push_back(equality("duality", worst, 0.0, 1e-10));
    }
    {
        double worst = 0.0;
        const double h = 1e-4;
        for (double y = 1.2; y < 3.0; y += 0.35) {
            const double da = (arg_z_eta(UhpPoint{h, y}, budget) -
                               arg_z_eta(UhpPoint{-h, y}, budget)) /
                              (2.0 * h);
            const double y1 = axis_derivative(SpeciesTag::One, 0, y, budget);
            worst = std::max(worst, std::abs(da + y1));
        }
        out.push_back(equality("cr_consistency", worst, 0.0, 1e-6));
    }
    {
        double worst = 0.0;
        std::uniform_real_distribution<double> ub(0.0, 1.0);
        const double h = 1e-5;
        for (int i = 0; i < 100; ++i) {
            const UhpPoint z = random_uhp(rng, 1.5, 0.3, 3.0);
            const MixWeight b{ub(rng)};
            const Gradient g = grad_f_b(b, z, budget);
            const double fdx = (f_b(b, UhpPoint{z.x() + h, z.y()}, budget) -
                                f_b(b, UhpPoint{z.x() - h, z.y()}, budget)) /
                               (2.0 * h);
            const double fdy = (f_b(b, UhpPoint{z.x(), z.y() + h}, budget) -
                                f_b(b, UhpPoint{z.x(), z.y() - h}, budget)) /
                               (2.0 * h);
            worst = std::max({worst, std::abs(g.x - fdx), std::abs(g.y - fdy)});
        }
        out.push_back(equality("gradient_fd", worst, 0.0, 1e-7));
    }

    // --- lattice_green ---
    {
        // Midpoint-rule cell integral of G, log singularity added analytically:
        // integral of -log(2 pi |z| / sqrt(A))/(2 pi) over a disc of radius a
        // is a^2 (1 - 2 log(2 pi a)) / 4 plus the smooth remainder at 0.
        const LatticeBasis basis = LatticeBasis::unit_area_from_tau(UhpPoint{0.0, 1.0});
        const int n = 64;
        const double a = 0.05;
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const double t1 = (i + 0.5) / n - 0.5, t2 = (j + 0.5) / n - 0.5;
                const cplx zeta = t1 * basis.a1() + t2 * basis.a2();
                if (std::abs(zeta) <= a) continue;
                sum += green_value(basis, zeta, budget) / (n * n);
            }
        }
        // Analytic integral over the excluded disc: singular log part plus
        // |z|^2/4 + H(0) to leading order.
        const double disc = a * a * (1.0 - 2.0 * std::log(2.0 * pi * a)) / 4.0 +
                            pi * a * a * a * a / 8.0 +
                            pi * a * a * h_regular_at_zero(basis, budget);
        out.push_back(equality("green_zero_mean", sum + disc, 0.0, 1e-3));
    }
    {
        const LatticeBasis basis = LatticeBasis::unit_area_from_tau(UhpPoint{0.3, 1.4});
        const cplx zeta = 0.31 * basis.a1() + 0.17 * basis.a2();
        double worst = 0.0;
        for (const cplx lambda : {basis.a1(), basis.a2(), basis.a1() + basis.a2()})
            worst = std::max(worst, std::abs(green_value(basis, zeta + lambda, budget) -
                                             green_value(basis, zeta, budget)));
        out.push_back(equality("green_periodicity", worst, 0.0, 1e-11));
        out.push_back(equality("green_evenness",
                               std::abs(green_value(basis, -zeta, budget) -
                                        green_value(basis, zeta, budget)),
                               0.0, 1e-11));
    }
    {
        double worst = 0.0;
        std::uniform_real_distribution<double> ut(0.05, 0.95);
        const LatticeBasis bases[] = {
            LatticeBasis::unit_area_from_tau(UhpPoint{0.0, 1.0}),
            LatticeBasis::unit_area_from_tau(UhpPoint{0.5, std::sqrt(3.0) / 2.0}),
            LatticeBasis::unit_area_from_tau(UhpPoint{0.3, 1.7}),
            LatticeBasis::unit_area_from_tau(UhpPoint{0.0, 1.4}),
        };
        for (int i = 0; i < 20; ++i) {
            const LatticeBasis& basis = bases[i % 4];
            const cplx zeta = ut(rng) * basis.a1() + ut(rng) * basis.a2();
            worst = std::max(worst, std::abs(green_value(basis, zeta, budget) -
                                             fourier_green_value(basis, zeta)));
        }
        out.push_back(equality("green_fourier_oracle", worst, 0.0, 1e-7));
    }
    {
        double worst1 = 0.0, worst2 = 0.0;
        const UhpPoint taus[] = {{0.0, 1.0},  {0.3, 1.7},  {0.0, 5.0},  {0.5, 0.9},
                                 {-0.4, 1.2}, {0.25, 2.5}, {0.9, 1.05}, {0.5, std::sqrt(3.0) / 2.0},
                                 {0.1, 0.8},  {0.7, 3.3}};
        for (const UhpPoint& tau : taus) {
            const ProductResiduals res = verify_product_identities(tau, budget);
            worst1 = std::max(worst1, res.residual1);
            worst2 = std::max(worst2, res.residual2);
        }
        out.push_back(equality("green_product_identity_1", worst1, 0.0, 1e-12));
        out.push_back(equality("green_product_identity_2", worst2, 0.0, 1e-12));
    }

    // --- assembly_energy ---
    {
        const SpeciesParams p{0.01, 0.015, 1.2, 0.4, 0.9};
        const UhpPoint taus[] = {{0.0, 1.0}, {0.0, 1.3}, {0.0, sqrt3}, {0.2, 1.1}, {0.5, 1.2}};
        std::vector<std::pair<double, double>> pts;
        for (const UhpPoint& tau : taus) {
            const LatticeBasis basis = LatticeBasis::unit_area_from_tau(tau);
            pts.emplace_back(interaction_F(basis, p, budget),
                             optimal_scale(basis, p, budget).energy_per_cell_area);
        }
        std::sort(pts.begin(), pts.end());
        double min_gap = std::numeric_limits<double>::infinity();
        for (std::size_t i = 1; i < pts.size(); ++i)
            min_gap = std::min(min_gap, pts[i].second - pts[i - 1].second);
        out.push_back(bound("energy_monotone_in_f", min_gap, 0.0, true));
    }
    {
        std::uniform_real_distribution<double> uw(0.01, 0.45);
        std::uniform_real_distribution<double> ug(0.1, 3.0);
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (int i = 0; i < 1000; ++i) {
            const double w1 = uw(rng), w2 = std::min(uw(rng), 0.99 - w1);
            const double g11 = ug(rng), g22 = ug(rng);
            std::uniform_real_distribution<double> u12(0.0, std::sqrt(g11 * g22));
            const SpeciesParams p{w1, w2, g11, u12(rng), g22};
            const double b = mix_weight(p).b;
            lo = std::min(lo, b);
            hi = std::max(hi, b);
        }
        out.push_back(bound("mix_weight_lower", lo, -1e-15, true));
        out.push_back(bound("mix_weight_upper", -(hi - 1.0), -1e-15, true));
    }
    {
        const SpeciesParams p{0.012, 0.02, 1.0, 0.5, 1.3};
        const LatticeBasis basis = LatticeBasis::unit_area_from_tau(UhpPoint{0.21, 1.33});
        const LatticeBasis shifted{basis.a1(), 2.0 * basis.a1() + basis.a2()};
        out.push_back(equality("interaction_basis_invariance",
                               interaction_F(shifted, p, budget) - interaction_F(basis, p, budget),
                               0.0, 1e-9));
    }

    // --- minimizer ---
    {
        double worst = 0.0;
        for (double b : {0.05, 0.1, 0.15}) {
            const UhpPoint z1 = maximize_f_b(b, budget).z_star;
            const UhpPoint z2 = maximize_f_b(1.0 - b, budget).z_star;
            const UhpPoint dual = canonicalize(dual_point(z1)).point;
            worst = std::max({worst, std::abs(dual.x() - z2.x()), std::abs(dual.y() - z2.y())});
        }
        out.push_back(equality("maximizer_duality", worst, 0.0, 1e-8));
    }
    {
        const double B = threshold_b(budget);
        double prev = std::numeric_limits<double>::infinity();
        double min_drop = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 50; ++i) {
            const double b = (B - 1e-4) * i / 49.0;
            const double q = q_of_b(b, budget);
            if (i > 0) min_drop = std::min(min_drop, prev - q);
            prev = q;
        }
        out.push_back(bound("q_monotone_decreasing", min_drop, 0.0, true));
    }
    {
        // Y_b(yi) < 0 above i throughout the square range of b.
        const double B = threshold_b(budget);
        double worst = -std::numeric_limits<double>::infinity();
        for (double b = B; b <= 1.0 - B + 1e-12; b += 0.02) {
            for (double y : {1.05, 1.2, 1.5, 2.0}) {
                const double yb = b * axis_derivative(SpeciesTag::One, 0, y, budget) +
                                  (1.0 - b) * axis_derivative(SpeciesTag::Zero, 0, y, budget);
                worst = std::max(worst, yb);
            }
        }
        out.push_back(bound("yb_negative_midrange", worst, 0.0, false));
    }
    {
        // The grid check inside maximize_f_b must stay silent across a sweep.
        bool fired = false;
        try {
            for (double b = 0.0; b <= 1.0 + 1e-12; b += 0.1) maximize_f_b(std::min(b, 1.0), budget);
        } catch (const GridBeatsFormula&) {
            fired = true;
        }
        out.push_back(bound("grid_never_beats_formula", fired ? -1.0 : 1.0, 0.0, true));
    }
    {
        // X_b < 0 at interior points of the fundamental set.
        const double B = threshold_b(budget);
        std::uniform_real_distribution<double> ux(1e-3, 1.0 - 1e-3);
        std::uniform_real_distribution<double> uy(0.0, 1.0);
        double worst = -std::numeric_limits<double>::infinity();
        for (double b : {0.0, 0.3, 1.0 - B}) {
            for (int i = 0; i < 100; ++i) {
                const double x = ux(rng);
                const double y_min = std::sqrt(std::max(0.0, 1.0 + 1e-6 - x * x));
                const double y = y_min + uy(rng) * 3.0;
                const Gradient g = grad_f_b(MixWeight{b}, UhpPoint{x, y}, budget);
                worst = std::max(worst, g.x);
            }
        }
        out.push_back(bound("xb_negative_interior", worst, 0.0, false));
    }

    // --- summation formulas ---
    {
        auto partial = [](auto term) {
            double s = 0.0;
            for (int n = 1; n <= 400; ++n) s += term(n);
            return s;
        };
        const double t = 0.1;
        const double s1 = partial([&](int n) { return n * n * n * std::pow(t, n); });
        const double f1 = t * (1.0 + 4.0 * t + t * t) / std::pow(1.0 - t, 4);
        out.push_back(equality("sum1_t=0.1", f1, s1, 1e-12));

        const double r = 0.3;
        const double s2 = partial([&](int k) {
            return 4.0 * k * k * (2.0 * k - 1.0) * (2.0 * k - 1.0) * std::pow(r, 4 * k - 1);
        });
        const double f2 = 4.0 * std::pow(r, 3) *
                          (1.0 + 31.0 * std::pow(r, 4) + 55.0 * std::pow(r, 8) +
                           9.0 * std::pow(r, 12)) /
                          std::pow(1.0 - std::pow(r, 4), 5);
        out.push_back(equality("sum2_r=0.3", f2, s2, 1e-12));

        const double s3 = partial([&](int n) {
            return n < 2 ? 0.0 : n * n * n * std::pow(r, 2 * n - 1);
        });
        const double f3 = std::pow(r, 3) *
                          (8.0 - 5.0 * r * r + 4.0 * std::pow(r, 4) - std::pow(r, 6)) /
                          std::pow(1.0 - r * r, 4);
        out.push_back(equality("sum3_r=0.3", f3, s3, 1e-12));

        const double s4 = partial([&](int k) {
            return (2.0 * k - 1.0) * (2.0 * k - 1.0) * std::pow(r, 2 * k + 3);
        });
        const double f4 = std::pow(r, 5) * (1.0 + 6.0 * r * r + std::pow(r, 4)) /
                          std::pow(1.0 - r * r, 3);
        out.push_back(equality("sum4_r=0.3", f4, s4, 1e-12));
    }

    // --- singular corner probe (informational; a limsup admits no tolerance) ---
    {
        double running_max = -std::numeric_limits<double>::infinity();
        for (int k = 5; k <= 40; ++k) {
            const UhpPoint z{1.0 - 1.0 / (static_cast<double>(k) * k), 1.0 / k};
            const Gradient g = grad_f_b(MixWeight{0.5}, z, budget);
            running_max = std::max(running_max, g.x);
        }
        out.push_back(info("singular_trend_max_xb", running_max));
    }

    return out;
}

} // namespace latmin
