#ifndef LATMIN_SERIES_HPP
#define LATMIN_SERIES_HPP

#include "latmin/budget.hpp"
#include "latmin/errors.hpp"
#include "latmin/uhp.hpp"

namespace latmin {

/// Selects the f1-side (One) or f0-side (Zero) series.
enum class SpeciesTag { One, Zero };

struct Gradient {
    double x; // X_j(z) = d f_j / dx
    double y; // Y_j(z) = d f_j / dy
};

struct AxisDerivative {
    int order;    // 0..3
    double value; // Y_j(yi) for order 0, d^k Y_j(yi)/dy^k for k=1..3
};

/// Closed-form series for (X_j(z), Y_j(z)) on the upper half-plane.
Gradient gradient_series(SpeciesTag j, UhpPoint z, const SeriesBudget& budget = {});

/// Y_j and its first three y-derivatives on the imaginary axis, via the
/// r = exp(-pi*y) series.
double axis_derivative(SpeciesTag j, int order, double y, const SeriesBudget& budget = {});

AxisDerivative axis_derivative_record(SpeciesTag j, int order, double y,
                                      const SeriesBudget& budget = {});

/// Y_0(yi) / Y_1(yi) for y in [1, sqrt(3)); at y = 1 the 0/0 limit is taken
/// as the ratio of first derivatives.
double ratio_y0_over_y1(double y, const SeriesBudget& budget = {});

} // namespace latmin

#endif
