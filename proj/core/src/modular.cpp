#include "latmin/modular.hpp"

#include <cmath>
#include <numbers>

namespace latmin {

namespace {
constexpr double pi = std::numbers::pi;
constexpr int reduction_cap = 10000;
// Points within a few ulps of the unit circle count as reduced; applying S
// there ping-pongs between z and -conj(z) forever in floating point.
constexpr double circle_eps = 1e-15;
} // namespace

const char* generator_name(Generator g) {
    switch (g) {
        case Generator::T2: return "T2";
        case Generator::T2Inv: return "T2inv";
        case Generator::S: return "S";
        case Generator::R: return "R";
    }
    return "?";
}

std::complex<double> e_of(std::complex<double> z) {
    // exp(2*pi*i*(x+iy)) = exp(-2*pi*y) * (cos(2*pi*x) + i sin(2*pi*x))
    const double m = std::exp(-2.0 * pi * z.imag());
    return {m * std::cos(2.0 * pi * z.real()), m * std::sin(2.0 * pi * z.real())};
}

std::complex<double> eta4(UhpPoint z, const SeriesBudget& budget) {
    budget.validate();
    const std::complex<double> q1 = e_of(z);
    const double aq1 = std::abs(q1);
    const double stop = budget.rel_tol * (1.0 - aq1);

    std::complex<double> prod = 1.0;
    std::complex<double> qn = 1.0;
    int n = 0;
    while (true) {
        if (++n > budget.max_terms)
            throw BudgetExceeded("eta4: product did not converge within max_terms (y too small?)");
        qn *= q1;
        const std::complex<double> f = 1.0 - qn;
        const std::complex<double> f2 = f * f;
        prod *= f2 * f2;
        if (std::abs(qn) < stop) break;
    }
    return e_of(z.value() / 6.0) * prod;
}

UhpPoint apply_generator(UhpPoint z, Generator g) {
    switch (g) {
        case Generator::T2: return {z.x() + 2.0, z.y()};
        case Generator::T2Inv: return {z.x() - 2.0, z.y()};
        case Generator::S: {
            const std::complex<double> w = -1.0 / z.value();
            return UhpPoint{w};
        }
        case Generator::R: return {-z.x(), z.y()};
    }
    throw std::logic_error("apply_generator: bad tag");
}

Generator inverse_generator(Generator g) {
    switch (g) {
        case Generator::T2: return Generator::T2Inv;
        case Generator::T2Inv: return Generator::T2;
        case Generator::S: return Generator::S;
        case Generator::R: return Generator::R;
    }
    throw std::logic_error("inverse_generator: bad tag");
}

bool in_fundamental_set(UhpPoint z, double slack) {
    return z.x() >= -slack && z.x() <= 1.0 + slack && std::norm(z.value()) >= 1.0 - 2.0 * slack;
}

CanonicalPoint canonicalize(UhpPoint z) {
    UhpPoint cur = z;
    GroupWord word;

    int iter = 0;
    while (true) {
        if (++iter > reduction_cap)
            throw NonConvergence("canonicalize: reduction exceeded iteration cap");

        double x = cur.x();
        if (x > 1.0 || x < -1.0) {
            const double k = std::floor((x + 1.0) / 2.0); // x - 2k in [-1, 1)
            const Generator tag = k > 0 ? Generator::T2Inv : Generator::T2;
            const long reps = static_cast<long>(std::abs(k));
            for (long i = 0; i < reps; ++i) word.push_back(tag);
            cur = UhpPoint{x - 2.0 * k, cur.y()};
        }
        if (std::norm(cur.value()) < 1.0 - circle_eps) {
            cur = apply_generator(cur, Generator::S);
            word.push_back(Generator::S);
            continue;
        }
        break;
    }
    if (cur.x() < 0.0) {
        cur = apply_generator(cur, Generator::R);
        word.push_back(Generator::R);
    }
    return {cur, std::move(word)};
}

namespace detail {

double log_abs_eta4_raw(std::complex<double> z, const SeriesBudget& budget) {
    budget.validate();
    const double y = z.imag();
    const std::complex<double> q1 = e_of(z);
    const double stop = budget.rel_tol * (1.0 - std::abs(q1));

    double logprod = 0.0;
    std::complex<double> qn = 1.0;
    int n = 0;
    while (true) {
        if (++n > budget.max_terms)
            throw BudgetExceeded("log_abs_eta4: product did not converge within max_terms");
        qn *= q1;
        logprod += 4.0 * std::log(std::abs(1.0 - qn));
        if (std::abs(qn) < stop) break;
    }
    return -pi * y / 3.0 + logprod;
}

double log_abs_im_eta(std::complex<double> z, const SeriesBudget& budget) {
    // |Im(z) eta(z)| is invariant under z -> z+1 and z -> -1/z, so reduce
    // into |Re z| <= 1/2, |z| >= 1 where the product needs few terms.
    int iter = 0;
    while (true) {
        if (++iter > reduction_cap)
            throw NonConvergence("log_abs_im_eta: reduction exceeded iteration cap");
        const double shift = std::round(z.real());
        z -= shift;
        if (std::norm(z) < 1.0 - circle_eps) {
            z = -1.0 / z;
            continue;
        }
        break;
    }
    return std::log(z.imag()) + log_abs_eta4_raw(z, budget);
}

} // namespace detail

} // namespace latmin
