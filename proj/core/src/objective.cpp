#include "latmin/objective.hpp"

#include <cmath>
#include <numbers>

namespace latmin {

namespace {
constexpr double pi = std::numbers::pi;
} // namespace

double f_component(SpeciesTag j, UhpPoint z, const SeriesBudget& budget) {
    if (j == SpeciesTag::One) return detail::log_abs_im_eta(z.value(), budget);
    return detail::log_abs_im_eta((z.value() + 1.0) / 2.0, budget);
}

double f_b(MixWeight b, UhpPoint z, const SeriesBudget& budget) {
    if (b.b == 0.0) return f_component(SpeciesTag::Zero, z, budget);
    if (b.b == 1.0) return f_component(SpeciesTag::One, z, budget);
    return b.b * f_component(SpeciesTag::One, z, budget) +
           (1.0 - b.b) * f_component(SpeciesTag::Zero, z, budget);
}

Gradient grad_f_b(MixWeight b, UhpPoint z, const SeriesBudget& budget) {
    if (b.b == 0.0) return gradient_series(SpeciesTag::Zero, z, budget);
    if (b.b == 1.0) return gradient_series(SpeciesTag::One, z, budget);
    const Gradient g1 = gradient_series(SpeciesTag::One, z, budget);
    const Gradient g0 = gradient_series(SpeciesTag::Zero, z, budget);
    return {b.b * g1.x + (1.0 - b.b) * g0.x, b.b * g1.y + (1.0 - b.b) * g0.y};
}

UhpPoint dual_point(UhpPoint z) {
    const std::complex<double> w = (z.value() - 1.0) / (z.value() + 1.0);
    return UhpPoint{w};
}

double arg_z_eta(UhpPoint z, const SeriesBudget& budget) {
    // Continue arg(z eta(z)) from i, where it equals pi/2 (eta(i) > 0).
    // z eta(z) never vanishes on the upper half-plane so the continuation is
    // single-valued; refine the path until every increment is below pi/2.
    const std::complex<double> start{0.0, 1.0};
    const std::complex<double> target = z.value();

    auto w_at = [&](std::complex<double> p) { return p * eta4(UhpPoint{p}, budget); };

    int steps = 8 + static_cast<int>(16.0 * std::abs(target - start));
    constexpr int max_steps = 1 << 20;
    while (steps <= max_steps) {
        double a = pi / 2.0;
        std::complex<double> w_prev = w_at(start);
        bool ok = true;
        for (int k = 1; k <= steps; ++k) {
            const double t = static_cast<double>(k) / steps;
            const std::complex<double> w_k = w_at(start + t * (target - start));
            const double da = std::arg(w_k / w_prev);
            if (std::abs(da) > pi / 2.0) {
                ok = false;
                break;
            }
            a += da;
            w_prev = w_k;
        }
        if (ok) return a;
        steps *= 2;
    }
    throw BranchAmbiguity("arg_z_eta: continuation step exceeded pi/2 at maximal refinement");
}

Gradient circle_transfer(MixWeight b, double u, const SeriesBudget& budget) {
    if (!(u > -1.0 && u < 1.0))
        throw OutOfRange("circle_transfer: u must be in (-1, 1)");
    const double root = std::sqrt(1.0 - u * u);
    const double y = root / (1.0 - u);
    const double y1 = axis_derivative(SpeciesTag::One, 0, y, budget);
    const double y0 = axis_derivative(SpeciesTag::Zero, 0, y, budget);
    const double y_dual = (1.0 - b.b) * y1 + b.b * y0; // Y_{1-b}(yi)
    return {root / (1.0 - u) * y_dual, -u / (1.0 - u) * y_dual};
}

} // namespace latmin
