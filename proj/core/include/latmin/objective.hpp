#ifndef LATMIN_OBJECTIVE_HPP
#define LATMIN_OBJECTIVE_HPP

#include "latmin/budget.hpp"
#include "latmin/errors.hpp"
#include "latmin/modular.hpp"
#include "latmin/series.hpp"
#include "latmin/uhp.hpp"

namespace latmin {

/// Interspecies mix weight. Physical inputs give b in [0,1]; the lemmas
/// also hold for arbitrary real b, so any finite value is admitted.
struct MixWeight {
    double b = 0.0;
    MixWeight() = default;
    explicit MixWeight(double value) : b(value) {
        if (!std::isfinite(value)) throw std::invalid_argument("MixWeight: b must be finite");
    }
    bool physical() const { return b >= 0.0 && b <= 1.0; }
};

/// f_1(z) = log|Im(z) eta(z)|, f_0(z) = log|Im((z+1)/2) eta((z+1)/2)|.
double f_component(SpeciesTag j, UhpPoint z, const SeriesBudget& budget = {});

/// f_b(z) = b f_1(z) + (1-b) f_0(z).
double f_b(MixWeight b, UhpPoint z, const SeriesBudget& budget = {});

/// (X_b, Y_b) = (d f_b/dx, d f_b/dy).
Gradient grad_f_b(MixWeight b, UhpPoint z, const SeriesBudget& budget = {});

/// The duality transform w = (z-1)/(z+1), exchanging f_b and f_{1-b}.
UhpPoint dual_point(UhpPoint z);

/// The continuous harmonic branch of A(z) = arg(z eta(z)) with A(i) = pi/2,
/// computed by analytic continuation along the segment from i to z.
double arg_z_eta(UhpPoint z, const SeriesBudget& budget = {});

/// Predicted gradient of f_b at u + i*sqrt(1-u^2) on the unit circle,
/// transferred from the Y series of f_{1-b} on the imaginary axis.
Gradient circle_transfer(MixWeight b, double u, const SeriesBudget& budget = {});

/// Evaluation near the singular corner z = 1 is permitted but flagged.
inline bool near_singular_corner(UhpPoint z) { return z.y() < 0.05; }

} // namespace latmin

#endif
