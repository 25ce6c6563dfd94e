#include "latmin/minimize.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "latmin/series.hpp"

namespace latmin {

namespace {

constexpr double pi = std::numbers::pi;
const double sqrt3 = std::sqrt(3.0);
constexpr double class_tol = 1e-9;

double y_b_axis(double b, double y, const SeriesBudget& budget) {
    return b * axis_derivative(SpeciesTag::One, 0, y, budget) +
           (1.0 - b) * axis_derivative(SpeciesTag::Zero, 0, y, budget);
}

// 161 x 161 samples of [0,1] x [1,4]; every sample has |z| >= 1, so the
// whole rectangle lies in the fundamental set.
constexpr int grid_n = 161;

void grid_check(double b, double f_star, const SeriesBudget& budget) {
    for (int i = 0; i < grid_n; ++i) {
        const double x = static_cast<double>(i) / (grid_n - 1);
        for (int j = 0; j < grid_n; ++j) {
            const double y = 1.0 + 3.0 * static_cast<double>(j) / (grid_n - 1);
            const double f = f_b(MixWeight{b}, UhpPoint{x, y}, budget);
            if (f > f_star + 1e-9) {
                std::ostringstream msg;
                msg << "maximize_f_b: grid point " << x << "+" << y << "i beats the formula ("
                    << f << " > " << f_star << ") at b = " << b;
                throw GridBeatsFormula(msg.str());
            }
        }
    }
}

} // namespace

const char* LatticeClass::name() const {
    switch (kind) {
        case Kind::Rectangular: return "Rectangular";
        case Kind::Square: return "Square";
        case Kind::Rhombic: return "Rhombic";
        case Kind::Hexagonal: return "Hexagonal";
    }
    return "?";
}

double threshold_b(const SeriesBudget& budget) {
    struct Key {
        double rel_tol;
        int max_terms;
        bool operator<(const Key& o) const {
            return rel_tol != o.rel_tol ? rel_tol < o.rel_tol : max_terms < o.max_terms;
        }
    };
    static std::map<Key, double> cache;
    static std::mutex mtx;

    const Key key{budget.rel_tol, budget.max_terms};
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const double d = axis_derivative(SpeciesTag::Zero, 1, 1.0, budget);
    const double e = axis_derivative(SpeciesTag::One, 1, 1.0, budget);
    const double b = d / (d - e);
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(key, b);
    return b;
}

double q_of_b(double b, const SeriesBudget& budget) {
    const double B = threshold_b(budget);
    if (!(b >= 0.0) || b >= B)
        throw OutOfRange("q_of_b: b must be in [0, B)");
    if (b <= 1e-13) return sqrt3; // q_b - sqrt(3) below double resolution

    double hi = sqrt3;
    double fhi = y_b_axis(b, hi, budget);
    if (!(fhi < 0.0))
        throw BracketFailure("q_of_b: Y_b(sqrt(3) i) not negative; series tolerance too loose?");

    // Y_b > 0 exactly on (1, q_b); walk a geometric ladder toward 1 until a
    // decisively positive sample seeds the bracket. Near b = B the root
    // merges with 1 like sqrt(B - b) and the ladder bottoms out.
    double lo = std::numeric_limits<double>::quiet_NaN(), flo = 0.0;
    for (int k = 1; k <= 48; ++k) {
        const double y = 1.0 + (sqrt3 - 1.0) * std::ldexp(1.0, -k);
        const double f = y_b_axis(b, y, budget);
        if (f > 0.0) {
            lo = y;
            flo = f;
            break;
        }
        hi = y;
        fhi = f;
    }
    if (std::isnan(lo)) return 1.0; // root indistinguishable from 1

    // Bisection with a secant refinement once the bracket is tight.
    for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
        double mid;
        if (hi - lo < 1e-4) {
            mid = lo + (hi - lo) * flo / (flo - fhi); // secant
            if (!(mid > lo && mid < hi)) mid = 0.5 * (lo + hi);
        } else {
            mid = 0.5 * (lo + hi);
        }
        const double fm = y_b_axis(b, mid, budget);
        if (fm > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    return 0.5 * (lo + hi);
}

double p_of_b(double b, const SeriesBudget& budget) {
    const double B = threshold_b(budget);
    if (!(b > 1.0 - B) || !(b <= 1.0))
        throw OutOfRange("p_of_b: b must be in (1-B, 1]");
    const double dual = 1.0 - b; // in [0, B)
    const double q = dual < B ? q_of_b(dual, budget) : 1.0;
    return (q * q - 1.0) / (q * q + 1.0);
}

LatticeClass classify(UhpPoint z_star) {
    const double x = z_star.x(), y = z_star.y();
    if (std::abs(x) <= class_tol) {
        const double ratio = y;
        if (std::abs(ratio - 1.0) <= class_tol)
            return {LatticeClass::Kind::Square, 0.0};
        return {LatticeClass::Kind::Rectangular, ratio};
    }
    if (std::abs(std::hypot(x, y) - 1.0) <= class_tol) {
        const double angle = std::atan2(y, x);
        if (std::abs(angle - pi / 2.0) <= class_tol) return {LatticeClass::Kind::Square, 0.0};
        if (std::abs(angle - pi / 3.0) <= class_tol) return {LatticeClass::Kind::Hexagonal, 0.0};
        return {LatticeClass::Kind::Rhombic, angle};
    }
    throw Unclassified("classify: maximizer lies on neither critical locus");
}

PhasePoint maximize_f_b(double b, const SeriesBudget& budget) {
    if (!(b >= 0.0 && b <= 1.0))
        throw OutOfRange("maximize_f_b: b must be in [0, 1]");
    const double B = threshold_b(budget);

    UhpPoint z_star{0.0, 1.0};
    if (b <= 1.0 - B) {
        const double q = b < B ? q_of_b(b, budget) : 1.0;
        z_star = UhpPoint{0.0, q};
    } else {
        const double p = p_of_b(b, budget);
        z_star = UhpPoint{p, std::sqrt(1.0 - p * p)};
    }

    const double f_star = f_b(MixWeight{b}, z_star, budget);
    grid_check(b, f_star, budget);
    return {b, z_star, classify(z_star), f_star};
}

std::vector<PhasePoint> phase_diagram(double b_min, double b_max, double step,
                                      const SeriesBudget& budget, unsigned workers) {
    if (!(b_min >= 0.0) || !(b_max <= 1.0) || !(b_min <= b_max) || !(step > 0.0))
        throw OutOfRange("phase_diagram: need 0 <= b_min <= b_max <= 1 and step > 0");

    std::vector<double> bs;
    const long n_steps = static_cast<long>(std::floor((b_max - b_min) / step + 1e-9));
    for (long i = 0; i <= n_steps; ++i) bs.push_back(std::min(b_min + i * step, b_max));

    std::vector<std::optional<PhasePoint>> slots(bs.size());
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, bs.size());

    if (workers <= 1) {
        for (std::size_t i = 0; i < bs.size(); ++i) slots[i] = maximize_f_b(bs[i], budget);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mtx;
        auto run = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= bs.size()) return;
                try {
                    slots[i] = maximize_f_b(bs[i], budget);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mtx);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }

    std::vector<PhasePoint> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(*s);
    return out;
}

AssemblyResult minimal_assembly(const SpeciesParams& p, const SeriesBudget& budget) {
    const MixWeight b = mix_weight(p);
    const PhasePoint phase = maximize_f_b(b.b, budget);
    const LatticeBasis unit = LatticeBasis::unit_area_from_tau(phase.z_star);

    // Disjointness is scale-invariant: check on the unit-area assembly and
    // report the largest admissible omega scale factor on failure.
    const DiscAssembly trial = DiscAssembly::from_omegas(unit, p.omega1, p.omega2);
    const double ratio = disjointness_ratio(trial);
    if (!(ratio > 1.0)) {
        std::ostringstream msg;
        msg << "minimal_assembly: optimal assembly overlaps; omegas admit at most a factor "
            << ratio * ratio << " of their current size";
        throw NotDisjoint(msg.str());
    }

    const ScaleResult scale = optimal_scale(unit, p, budget);
    const LatticeBasis physical = unit.scaled(scale.t_alpha);
    const DiscAssembly assembly = DiscAssembly::from_omegas(physical, p.omega1, p.omega2);
    return {phase, assembly, scale.t_alpha, scale.energy_per_cell_area};
}

} // namespace latmin
