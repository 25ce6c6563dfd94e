#ifndef LATMIN_LATTICE_HPP
#define LATMIN_LATTICE_HPP

#include <complex>
#include <stdexcept>

#include "latmin/uhp.hpp"

namespace latmin {

/// Ordered basis (a1, a2) of a planar lattice with positively oriented cell.
class LatticeBasis {
public:
    LatticeBasis(std::complex<double> a1, std::complex<double> a2) : a1_(a1), a2_(a2) {
        const double a = area();
        if (!(a > 0.0) || !std::isfinite(a))
            throw std::invalid_argument("LatticeBasis: Im(conj(a1)*a2) must be positive");
    }

    /// Unit-area basis with a1 real positive and a2/a1 = tau.
    static LatticeBasis unit_area_from_tau(UhpPoint tau) {
        const double a1 = 1.0 / std::sqrt(tau.y());
        return LatticeBasis{{a1, 0.0}, tau.value() * a1};
    }

    std::complex<double> a1() const { return a1_; }
    std::complex<double> a2() const { return a2_; }
    double area() const { return std::imag(std::conj(a1_) * a2_); }
    UhpPoint tau() const { return UhpPoint{a2_ / a1_}; }
    bool unit_area(double tol = 1e-9) const { return std::abs(area() - 1.0) <= tol; }

    LatticeBasis scaled(double t) const { return LatticeBasis{t * a1_, t * a2_}; }

private:
    std::complex<double> a1_, a2_;
};

} // namespace latmin

#endif
