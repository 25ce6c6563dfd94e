#ifndef LATMIN_UHP_HPP
#define LATMIN_UHP_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace latmin {

/// A point z = x + iy of the open upper half-plane.
class UhpPoint {
public:
    UhpPoint(double x, double y) : x_(x), y_(y) {
        if (!std::isfinite(x) || !std::isfinite(y))
            throw std::invalid_argument("UhpPoint: components must be finite");
        if (!(y > 0.0))
            throw std::invalid_argument("UhpPoint: imaginary part must be positive");
    }
    explicit UhpPoint(std::complex<double> z) : UhpPoint(z.real(), z.imag()) {}

    double x() const { return x_; }
    double y() const { return y_; }
    std::complex<double> value() const { return {x_, y_}; }

private:
    double x_, y_;
};

/// Generators of the group acting on the upper half-plane:
/// T2: z -> z+2, T2Inv: z -> z-2, S: z -> -1/z, R: z -> -conj(z).
enum class Generator { T2, T2Inv, S, R };

using GroupWord = std::vector<Generator>;

const char* generator_name(Generator g);

} // namespace latmin

#endif
