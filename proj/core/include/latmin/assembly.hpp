#ifndef LATMIN_ASSEMBLY_HPP
#define LATMIN_ASSEMBLY_HPP

#include <array>
#include <complex>

#include "latmin/budget.hpp"
#include "latmin/errors.hpp"
#include "latmin/green.hpp"
#include "latmin/lattice.hpp"
#include "latmin/objective.hpp"

namespace latmin {

/// Physical inputs: area fractions and the symmetric interaction matrix.
struct SpeciesParams {
    double omega1, omega2;
    double g11, g12, g22;

    SpeciesParams(double w1, double w2, double gamma11, double gamma12, double gamma22)
        : omega1(w1), omega2(w2), g11(gamma11), g12(gamma12), g22(gamma22) {
        if (!(omega1 > 0.0) || !(omega2 > 0.0) || !(omega1 + omega2 < 1.0))
            throw InvalidParams("SpeciesParams: need 0 < omega1, omega2 and omega1 + omega2 < 1");
        if (!(g11 > 0.0) || !(g22 > 0.0) || g12 < 0.0 || g11 * g22 - g12 * g12 < 0.0)
            throw InvalidParams(
                "SpeciesParams: need g11, g22 > 0, g12 >= 0 and g11*g22 - g12^2 >= 0");
    }
};

/// Two discs per species per cell; species 1 at (3/4, 1/4) and (1/4, 3/4),
/// species 2 at (1/4, 1/4) and (3/4, 3/4) in cell coordinates.
struct DiscAssembly {
    LatticeBasis basis;
    double r1, r2;
    std::array<std::complex<double>, 4> centers; // xi1, xi1', xi2, xi2'

    static DiscAssembly from_omegas(const LatticeBasis& basis, double omega1, double omega2);
    static DiscAssembly from_radii(const LatticeBasis& basis, double r1, double r2);
};

/// b = 2 g12 w1 w2 / (g11 w1^2 + g22 w2^2), guaranteed in [0,1].
MixWeight mix_weight(const SpeciesParams& p);

/// Worst-case (center distance) / (radius sum) over all disc pairs and
/// lattice translates. Radii scale like sqrt(omega), so ratio^2 is the
/// largest omega scale factor that keeps the assembly disjoint.
double disjointness_ratio(const DiscAssembly& a);

/// True iff every center-to-center distance across all lattice translates
/// strictly exceeds the corresponding radius sum (tangency counts as overlap).
bool check_disjoint(const DiscAssembly& a);

/// H(0) + G((a1+a2)/2) + b (G(a1/2) + G(a2/2)) for a unit-area basis.
double f_tilde(const LatticeBasis& basis, MixWeight b, const SeriesBudget& budget = {});

/// The interaction energy F(alpha) assembled from the closed-form disc
/// integrals; unit-area basis, disjoint assembly required.
double interaction_F(const LatticeBasis& basis, const SpeciesParams& p,
                     const SeriesBudget& budget = {});

struct ScaleResult {
    double t_alpha;
    double energy_per_cell_area;
};

/// Optimal size factor and the minimized energy per cell area.
ScaleResult optimal_scale(const LatticeBasis& basis, const SpeciesParams& p,
                          const SeriesBudget& budget = {});

} // namespace latmin

#endif
