#ifndef LATMIN_GREEN_HPP
#define LATMIN_GREEN_HPP

#include <complex>

#include "latmin/budget.hpp"
#include "latmin/errors.hpp"
#include "latmin/lattice.hpp"
#include "latmin/uhp.hpp"

namespace latmin {

/// Periodic Green's function G of -Laplace on the lattice cell,
/// via the closed q-product after reduction of zeta into the cell.
double green_value(const LatticeBasis& basis, std::complex<double> zeta,
                   const SeriesBudget& budget = {});

/// Regular part H(zeta) = G(zeta) + log(2*pi*|zeta|/sqrt(A))/(2*pi) - |zeta|^2/(4A),
/// evaluated directly (stable through zeta = 0, no cell reduction applied;
/// requires |Im(zeta/a1)| < Im(tau) for convergence).
double h_value(const LatticeBasis& basis, std::complex<double> zeta,
               const SeriesBudget& budget = {});

/// H(0) for a unit-area basis, from its closed form in tau.
double h_regular_at_zero(const LatticeBasis& basis, const SeriesBudget& budget = {});

struct HalfPeriodValues {
    double g_mid;   // G((a1+a2)/2)
    double g_half1; // G(a1/2)
    double g_half2; // G(a2/2)
    double h0;      // H(0)
};

/// The four closed-form special values for a unit-area basis.
HalfPeriodValues half_period_values(const LatticeBasis& basis, const SeriesBudget& budget = {});

struct ProductResiduals {
    double residual1; // |prod(1-e(n tau)) prod(1+e((n-1/2) tau)) - prod(1-e(n (tau+1)/2))|
    double residual2; // |prod(1+e((n-1/2) tau)) prod(1+e(n tau)) prod(1-e((n-1/2) tau)) - 1|
};

ProductResiduals verify_product_identities(UhpPoint tau, const SeriesBudget& budget = {});

} // namespace latmin

#endif
