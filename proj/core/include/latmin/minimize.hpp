#ifndef LATMIN_MINIMIZE_HPP
#define LATMIN_MINIMIZE_HPP

#include <optional>
#include <vector>

#include "latmin/assembly.hpp"
#include "latmin/budget.hpp"
#include "latmin/errors.hpp"
#include "latmin/objective.hpp"
#include "latmin/uhp.hpp"

namespace latmin {

/// Classification of a minimal lattice.
struct LatticeClass {
    enum class Kind { Rectangular, Square, Rhombic, Hexagonal };
    Kind kind;
    double param = 0.0; // side ratio (Rectangular) or acute angle in radians (Rhombic)

    bool has_param() const { return kind == Kind::Rectangular || kind == Kind::Rhombic; }
    const char* name() const;
};

/// One row of the phase diagram.
struct PhasePoint {
    double b;
    UhpPoint z_star;
    LatticeClass klass;
    double f_value;
};

/// The threshold B = d / (d - e) with d = dY_0(i)/dy, e = dY_1(i)/dy.
double threshold_b(const SeriesBudget& budget = {});

/// The unique zero q_b in (1, sqrt(3)] of Y_b on the imaginary axis, b in [0, B).
double q_of_b(double b, const SeriesBudget& budget = {});

/// p_b = (q_{1-b}^2 - 1)/(q_{1-b}^2 + 1) in (0, 1/2], b in (1-B, 1].
double p_of_b(double b, const SeriesBudget& budget = {});

/// Argmax of f_b over the fundamental set, verified against a 161x161 grid.
PhasePoint maximize_f_b(double b, const SeriesBudget& budget = {});

/// Classify a maximizer by its critical locus (imaginary axis or unit circle).
LatticeClass classify(UhpPoint z_star);

/// Sweep b over [b_min, b_max] with the given step. workers = 0 picks the
/// hardware concurrency; results are ordered by b regardless of scheduling.
std::vector<PhasePoint> phase_diagram(double b_min, double b_max, double step,
                                      const SeriesBudget& budget = {}, unsigned workers = 0);

struct AssemblyResult {
    PhasePoint phase;
    DiscAssembly assembly; // basis scaled by t_alpha
    double t_alpha;
    double energy_per_cell_area;
};

/// End-to-end pipeline: species parameters -> b -> maximizer -> unit-area
/// basis -> optimal scale -> physical assembly.
AssemblyResult minimal_assembly(const SpeciesParams& p, const SeriesBudget& budget = {});

} // namespace latmin

#endif
