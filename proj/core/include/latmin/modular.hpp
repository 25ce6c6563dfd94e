#ifndef LATMIN_MODULAR_HPP
#define LATMIN_MODULAR_HPP

#include <complex>

#include "latmin/budget.hpp"
#include "latmin/errors.hpp"
#include "latmin/uhp.hpp"

namespace latmin {

/// e(z) = exp(2*pi*i*z).
std::complex<double> e_of(std::complex<double> z);
inline std::complex<double> e_of(UhpPoint z) { return e_of(z.value()); }

/// Fourth power of the Dedekind eta function,
/// eta(z) = e(z/6) * prod_{n>=1} (1 - e(n z))^4.
std::complex<double> eta4(UhpPoint z, const SeriesBudget& budget = {});

UhpPoint apply_generator(UhpPoint z, Generator g);
Generator inverse_generator(Generator g);

struct CanonicalPoint {
    UhpPoint point;
    GroupWord word; // applied left to right, maps the input to `point`
};

/// Reduce z into the fundamental set {0 <= Re z <= 1, |z| >= 1}.
CanonicalPoint canonicalize(UhpPoint z);

/// Membership in the closed fundamental set, with boundary slack.
bool in_fundamental_set(UhpPoint z, double slack = 1e-12);

namespace detail {

/// log |eta(z)| evaluated after reduction into the classical fundamental
/// domain |Re z| <= 1/2, |z| >= 1 (the value is invariant in magnitude
/// only after pairing with Im z; see log_abs_im_eta).
double log_abs_eta4_raw(std::complex<double> z, const SeriesBudget& budget);

/// log |Im(z) * eta(z)|, invariant under the full modular group and under
/// reflection, evaluated stably for any z in the upper half-plane.
double log_abs_im_eta(std::complex<double> z, const SeriesBudget& budget = {});

} // namespace detail

} // namespace latmin

#endif
