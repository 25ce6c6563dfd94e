#include "latmin/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace latmin {

namespace {

constexpr double pi = std::numbers::pi;
using cplx = std::complex<double>;

// Lagrange-Gauss reduction; makes the translate search below exhaustive
// with a small window even for skewed input bases.
std::pair<cplx, cplx> gauss_reduce(cplx v1, cplx v2) {
    for (int iter = 0; iter < 64; ++iter) {
        if (std::norm(v1) > std::norm(v2)) std::swap(v1, v2);
        const double mu = std::round((v2.real() * v1.real() + v2.imag() * v1.imag()) /
                                     std::norm(v1));
        if (mu == 0.0) break;
        v2 -= mu * v1;
    }
    if (std::norm(v1) > std::norm(v2)) std::swap(v1, v2);
    return {v1, v2};
}

// min_{lambda in Lambda} |delta + lambda|; exclude_origin drops lambda
// chosen so that delta + lambda = 0 (used for the same-disc pair).
double min_translate_distance(const LatticeBasis& basis, cplx delta, bool exclude_zero) {
    const auto [v1, v2] = gauss_reduce(basis.a1(), basis.a2());
    // Round delta into the reduced cell first (signed area handles the
    // orientation flips the reduction may introduce).
    const double s = std::imag(std::conj(v1) * v2);
    const double c1 = -std::imag(std::conj(v2) * delta) / s;
    const double c2 = std::imag(std::conj(v1) * delta) / s;
    delta -= std::round(c1) * v1 + std::round(c2) * v2;

    double best = std::numeric_limits<double>::infinity();
    for (int j1 = -2; j1 <= 2; ++j1)
        for (int j2 = -2; j2 <= 2; ++j2) {
            const cplx p = delta + static_cast<double>(j1) * v1 + static_cast<double>(j2) * v2;
            const double d = std::abs(p);
            if (exclude_zero && d < 1e-14 * std::abs(v1)) continue;
            best = std::min(best, d);
        }
    return best;
}

} // namespace

DiscAssembly DiscAssembly::from_omegas(const LatticeBasis& basis, double omega1, double omega2) {
    if (!(omega1 > 0.0) || !(omega2 > 0.0))
        throw InvalidParams("DiscAssembly: omegas must be positive");
    const double cell = basis.area();
    return from_radii(basis, std::sqrt(omega1 * cell / (2.0 * pi)),
                      std::sqrt(omega2 * cell / (2.0 * pi)));
}

DiscAssembly DiscAssembly::from_radii(const LatticeBasis& basis, double r1, double r2) {
    if (!(r1 > 0.0) || !(r2 > 0.0)) throw InvalidParams("DiscAssembly: radii must be positive");
    const cplx a1 = basis.a1(), a2 = basis.a2();
    return DiscAssembly{basis, r1, r2,
                        {0.75 * a1 + 0.25 * a2, 0.25 * a1 + 0.75 * a2,
                         0.25 * a1 + 0.25 * a2, 0.75 * a1 + 0.75 * a2}};
}

MixWeight mix_weight(const SpeciesParams& p) {
    const double num = 2.0 * p.g12 * p.omega1 * p.omega2;
    const double den = p.g11 * p.omega1 * p.omega1 + p.g22 * p.omega2 * p.omega2;
    return MixWeight{num / den};
}

double disjointness_ratio(const DiscAssembly& a) {
    const cplx d_same = a.centers[0] - a.centers[1]; // (a1 - a2)/2, both species
    const cplx d_cross1 = a.centers[0] - a.centers[2]; // a1/2
    const cplx d_cross2 = a.centers[0] - a.centers[3]; // -a2/2

    struct Pair {
        cplx delta;
        double rsum;
        bool exclude_zero;
    };
    const Pair pairs[] = {
        {0.0, 2.0 * a.r1, true},     // species-1 disc vs its own translates
        {0.0, 2.0 * a.r2, true},
        {d_same, 2.0 * a.r1, false}, // xi1 vs xi1'
        {d_same, 2.0 * a.r2, false}, // xi2 vs xi2'
        {d_cross1, a.r1 + a.r2, false},
        {d_cross2, a.r1 + a.r2, false},
    };
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& p : pairs)
        worst = std::min(worst, min_translate_distance(a.basis, p.delta, p.exclude_zero) / p.rsum);
    return worst;
}

bool check_disjoint(const DiscAssembly& a) { return disjointness_ratio(a) > 1.0; }

double f_tilde(const LatticeBasis& basis, MixWeight b, const SeriesBudget& budget) {
    const HalfPeriodValues v = half_period_values(basis, budget);
    return v.h0 + v.g_mid + b.b * (v.g_half1 + v.g_half2);
}

double interaction_F(const LatticeBasis& basis, const SpeciesParams& p,
                     const SeriesBudget& budget) {
    if (!basis.unit_area())
        throw std::invalid_argument("interaction_F: basis must have unit cell area");
    const DiscAssembly a = DiscAssembly::from_omegas(basis, p.omega1, p.omega2);
    if (!check_disjoint(a)) throw NotDisjoint("interaction_F: assembly discs overlap");

    const double r1s = p.omega1 / (2.0 * pi); // r1^2, unit-area cell
    const double r2s = p.omega2 / (2.0 * pi);
    const double r1 = std::sqrt(r1s), r2 = std::sqrt(r2s);

    auto c_same = [](double r) {
        const double r4 = r * r * r * r;
        return pi * r4 / 8.0 - pi * r4 / 2.0 * std::log(2.0 * pi * r) +
               pi * pi * r4 * r * r / 4.0;
    };
    auto c_prime = [](double rj2, double rk2) {
        return pi * pi * (rj2 * rk2 * rk2 + rj2 * rj2 * rk2) / 8.0;
    };

    const double c11 = c_same(r1), c22 = c_same(r2);
    const double c11p = c_prime(r1s, r1s), c22p = c_prime(r2s, r2s);
    const double c12 = c_prime(r1s, r2s), c12p = c12;

    const double lead = pi * pi * (p.g11 * r1s * r1s + p.g22 * r2s * r2s);
    return lead * f_tilde(basis, mix_weight(p), budget) + p.g11 * (c11 + c11p) +
           p.g22 * (c22 + c22p) + 2.0 * p.g12 * (c12 + c12p);
}

ScaleResult optimal_scale(const LatticeBasis& basis, const SpeciesParams& p,
                          const SeriesBudget& budget) {
    const double F = interaction_F(basis, p, budget);
    if (!(F > 0.0))
        throw DegenerateInteraction("optimal_scale: interaction form is not positive");
    const double per = std::sqrt(2.0 * pi * p.omega1) + std::sqrt(2.0 * pi * p.omega2);
    const double t = std::cbrt(2.0 * per / (2.0 * F));
    const double energy = 3.0 * std::pow(per, 2.0 / 3.0) * std::cbrt(F);
    return {t, energy};
}

} // namespace latmin
