#include "latmin/series.hpp"

#include <cmath>
#include <numbers>

namespace latmin {

namespace {

constexpr double pi = std::numbers::pi;

// 2 cosh(a) - 2 cos(b) = 4 sinh^2(a/2) + 4 sin^2(b/2), cancellation-free.
double cosh_minus_cos(double a, double b) {
    const double sh = std::sinh(0.5 * a);
    const double sn = std::sin(0.5 * b);
    return 4.0 * (sh * sh + sn * sn);
}

// 2 cosh(a) + 2 cos(b) = 4 sinh^2(a/2) + 4 cos^2(b/2).
double cosh_plus_cos(double a, double b) {
    const double sh = std::sinh(0.5 * a);
    const double cs = std::cos(0.5 * b);
    return 4.0 * (sh * sh + cs * cs);
}

Gradient gradient_one(double x, double y, const SeriesBudget& budget) {
    // X_1 = sum 8 pi n sin(2 pi n x) / D_n,
    // Y_1 = 1/y - pi/3 + sum 8 pi n (cos(2 pi n x) - exp(-2 pi n y)) / D_n,
    // D_n = exp(2 pi n y) + exp(-2 pi n y) - 2 cos(2 pi n x).
    const double q = std::exp(-2.0 * pi * y);
    double sx = 0.0, sy = 0.0;
    double qn = 1.0;
    for (int n = 1; n <= budget.max_terms; ++n) {
        qn *= q;
        const double denom = cosh_minus_cos(2.0 * pi * n * y, 2.0 * pi * n * x);
        const double c = 8.0 * pi * n;
        sx += c * std::sin(2.0 * pi * n * x) / denom;
        sy += c * (std::cos(2.0 * pi * n * x) - qn) / denom;
        // both numerators are bounded by 2c and denom >= 4 sinh^2(pi n y)
        const double sh = std::sinh(pi * n * y);
        const double bound = 2.0 * c / (4.0 * sh * sh);
        if (bound / (1.0 - q) < budget.rel_tol * (1.0 + std::abs(sx) + std::abs(sy)))
            return {sx, 1.0 / y - pi / 3.0 + sy};
    }
    throw BudgetExceeded("gradient_series(One): series did not converge within max_terms");
}

Gradient gradient_zero(double x, double y, const SeriesBudget& budget) {
    // Series in cos(pi n (x+1)) = (-1)^n cos(pi n x); the explicit sign
    // avoids evaluating trig functions at arguments near multiples of pi.
    const double q = std::exp(-pi * y);
    double sx = 0.0, sy = 0.0;
    double qn = 1.0;
    double sign = 1.0;
    for (int n = 1; n <= budget.max_terms; ++n) {
        qn *= q;
        sign = -sign;
        const double denom = sign > 0 ? cosh_minus_cos(pi * n * y, pi * n * x)
                                      : cosh_plus_cos(pi * n * y, pi * n * x);
        const double c = 4.0 * pi * n;
        sx += c * sign * std::sin(pi * n * x) / denom;
        sy += c * (sign * std::cos(pi * n * x) - qn) / denom;
        const double sh = std::sinh(0.5 * pi * n * y);
        const double bound = 2.0 * c / (4.0 * sh * sh);
        if (bound / (1.0 - q) < budget.rel_tol * (1.0 + std::abs(sx) + std::abs(sy)))
            return {sx, 1.0 / y - pi / 6.0 + sy};
    }
    throw BudgetExceeded("gradient_series(Zero): series did not converge within max_terms");
}

// Shared kernel for the imaginary-axis series: sums f(n, s_n) where
// s_n = sgn^n r^(c n), with geometric-tail stopping.
template <typename Term>
double axis_sum(double base, double r_step, bool alternating, const SeriesBudget& budget,
                Term term) {
    double sum = base;
    double sn = 1.0;
    const double step = alternating ? -r_step : r_step;
    int consecutive_small = 0;
    for (int n = 1; n <= budget.max_terms; ++n) {
        sn *= step;
        const double t = term(n, sn);
        sum += t;
        if (std::abs(t) < budget.rel_tol * (std::abs(sum) + 1e-300)) {
            if (++consecutive_small >= 2) return sum;
        } else {
            consecutive_small = 0;
        }
    }
    throw BudgetExceeded("axis_derivative: series did not converge within max_terms");
}

} // namespace

Gradient gradient_series(SpeciesTag j, UhpPoint z, const SeriesBudget& budget) {
    budget.validate();
    return j == SpeciesTag::One ? gradient_one(z.x(), z.y(), budget)
                                : gradient_zero(z.x(), z.y(), budget);
}

double axis_derivative(SpeciesTag j, int order, double y, const SeriesBudget& budget) {
    budget.validate();
    if (order < 0 || order > 3)
        throw OutOfRange("axis_derivative: order must be in 0..3");
    if (!(y > 0.0) || !std::isfinite(y))
        throw std::invalid_argument("axis_derivative: y must be positive");

    const double r = std::exp(-pi * y);
    if (j == SpeciesTag::One) {
        // u_n = r^(2n) = exp(-2 pi n y)
        const double u = r * r;
        switch (order) {
            case 0:
                return axis_sum(1.0 / y - pi / 3.0, u, false, budget, [](int n, double un) {
                    return 8.0 * pi * n * un / (1.0 - un);
                });
            case 1:
                return axis_sum(-1.0 / (y * y), u, false, budget, [](int n, double un) {
                    const double d = 1.0 - un;
                    return -16.0 * pi * pi * n * n * un / (d * d);
                });
            case 2:
                return axis_sum(2.0 / (y * y * y), u, false, budget, [](int n, double un) {
                    const double d = 1.0 - un;
                    return 32.0 * std::pow(pi, 3) * std::pow(static_cast<double>(n), 3) * un *
                           (1.0 + un) / (d * d * d);
                });
            default:
                return axis_sum(-6.0 / (y * y * y * y), u, false, budget, [](int n, double un) {
                    const double d = 1.0 - un;
                    return -64.0 * std::pow(pi, 4) * std::pow(static_cast<double>(n), 4) * un *
                           (1.0 + un * (4.0 + un)) / (d * d * d * d);
                });
        }
    }
    // s_n = (-r)^n
    switch (order) {
        case 0:
            return axis_sum(1.0 / y - pi / 6.0, r, true, budget, [](int n, double sn) {
                return 4.0 * pi * n * sn / (1.0 - sn);
            });
        case 1:
            return axis_sum(-1.0 / (y * y), r, true, budget, [](int n, double sn) {
                const double d = 1.0 - sn;
                return -4.0 * pi * pi * n * n * sn / (d * d);
            });
        case 2:
            return axis_sum(2.0 / (y * y * y), r, true, budget, [](int n, double sn) {
                const double d = 1.0 - sn;
                return 4.0 * std::pow(pi, 3) * std::pow(static_cast<double>(n), 3) * sn *
                       (1.0 + sn) / (d * d * d);
            });
        default:
            return axis_sum(-6.0 / (y * y * y * y), r, true, budget, [](int n, double sn) {
                const double d = 1.0 - sn;
                return -4.0 * std::pow(pi, 4) * std::pow(static_cast<double>(n), 4) * sn *
                       (1.0 + sn * (4.0 + sn)) / (d * d * d * d);
            });
    }
}

AxisDerivative axis_derivative_record(SpeciesTag j, int order, double y,
                                      const SeriesBudget& budget) {
    return {order, axis_derivative(j, order, y, budget)};
}

double ratio_y0_over_y1(double y, const SeriesBudget& budget) {
    const double sqrt3 = std::sqrt(3.0);
    if (!(y >= 1.0) || !(y < sqrt3))
        throw OutOfRange("ratio_y0_over_y1: y must be in [1, sqrt(3))");
    if (y - 1.0 < 1e-12) {
        // 0/0 at y = 1; take the derivative ratio instead.
        return axis_derivative(SpeciesTag::Zero, 1, 1.0, budget) /
               axis_derivative(SpeciesTag::One, 1, 1.0, budget);
    }
    return axis_derivative(SpeciesTag::Zero, 0, y, budget) /
           axis_derivative(SpeciesTag::One, 0, y, budget);
}

} // namespace latmin
