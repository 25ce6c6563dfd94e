#include "latmin/green.hpp"

#include <cmath>
#include <numbers>

#include "latmin/modular.hpp"

namespace latmin {

namespace {

constexpr double pi = std::numbers::pi;
using cplx = std::complex<double>;

// exp(u) - 1 without cancellation for small |u|.
cplx expm1c(cplx u) {
    if (std::abs(u) > 0.5) return std::exp(u) - 1.0;
    cplx term = u, sum = u;
    for (int k = 2; k < 32; ++k) {
        term *= u / static_cast<double>(k);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

struct CellCoords {
    double t1, t2;
};

CellCoords coords(const LatticeBasis& basis, cplx zeta) {
    const double area = basis.area();
    const double t1 = -std::imag(std::conj(basis.a2()) * zeta) / area;
    const double t2 = std::imag(std::conj(basis.a1()) * zeta) / area;
    return {t1, t2};
}

double frac(double t) {
    const double f = t - std::floor(t);
    return f == 1.0 ? 0.0 : f;
}

// Sum of log|1 - e(n tau + w)| + log|1 - e(n tau - w)| over n >= 1.
// Requires |Im w| < Im tau.
double log_theta_tail(cplx tau, cplx w, const SeriesBudget& budget, const char* who) {
    const double h = tau.imag();
    double sum = 0.0;
    for (int n = 1; n <= budget.max_terms; ++n) {
        const cplx qp = e_of(static_cast<double>(n) * tau + w);
        const cplx qm = e_of(static_cast<double>(n) * tau - w);
        sum += std::log(std::abs(1.0 - qp)) + std::log(std::abs(1.0 - qm));
        const double tail = std::abs(qp) + std::abs(qm);
        if (tail / (1.0 - std::exp(-2.0 * pi * h)) < budget.rel_tol) return sum;
    }
    throw BudgetExceeded(std::string(who) + ": q-product did not converge within max_terms");
}

// log of the quadratic exponent factor: log|e(Q)| = -2 pi Im(Q) with
// Q = zeta^2 conj(a1) / (4 i A a1) - zeta/(2 a1) + tau/12.
double log_abs_exponent_factor(const LatticeBasis& basis, cplx zeta) {
    const cplx a1 = basis.a1();
    const double area = basis.area();
    const cplx q = zeta * zeta * std::conj(a1) / (cplx(0.0, 4.0 * area) * a1) -
                   zeta / (2.0 * a1) + basis.tau().value() / 12.0;
    return -2.0 * pi * q.imag();
}

// Closed-form building block: sum of log|1 -+ e(c n tau + d tau)| terms.
enum class ProductKind { OneMinusEn, OnePlusEn, OnePlusHalf, OneMinusHalf };

double log_abs_product(ProductKind kind, cplx tau, const SeriesBudget& budget) {
    double sum = 0.0;
    const double h = tau.imag();
    for (int n = 1; n <= budget.max_terms; ++n) {
        cplx q;
        double sign = 1.0;
        switch (kind) {
            case ProductKind::OneMinusEn: q = e_of(static_cast<double>(n) * tau); sign = -1.0; break;
            case ProductKind::OnePlusEn: q = e_of(static_cast<double>(n) * tau); break;
            case ProductKind::OnePlusHalf: q = e_of((n - 0.5) * tau); break;
            case ProductKind::OneMinusHalf: q = e_of((n - 0.5) * tau); sign = -1.0; break;
        }
        sum += std::log(std::abs(1.0 + sign * q));
        if (std::abs(q) / (1.0 - std::exp(-pi * h)) < budget.rel_tol) return sum;
    }
    throw BudgetExceeded("half_period_values: product did not converge within max_terms");
}

void require_unit_area(const LatticeBasis& basis, const char* who) {
    if (!basis.unit_area())
        throw std::invalid_argument(std::string(who) + ": basis must have unit cell area");
}

} // namespace

double green_value(const LatticeBasis& basis, cplx zeta, const SeriesBudget& budget) {
    budget.validate();
    const double area = basis.area();

    // Reduce into the cell; G is Lambda-periodic and even, so fold the
    // second coordinate into [0, 1/2] for the fastest product decay.
    CellCoords t = coords(basis, zeta);
    t.t1 = frac(t.t1);
    t.t2 = frac(t.t2);
    if (t.t2 > 0.5) {
        t.t1 = frac(1.0 - t.t1);
        t.t2 = 1.0 - t.t2;
    }
    const cplx zr = t.t1 * basis.a1() + t.t2 * basis.a2();

    // Guard against (near-)lattice points, where the log term blows up.
    const double guard = 1e-9 * std::abs(basis.a1());
    double min_dist = std::abs(zr);
    for (int j1 = -1; j1 <= 1; ++j1)
        for (int j2 = -1; j2 <= 1; ++j2) {
            if (j1 == 0 && j2 == 0) continue;
            min_dist = std::min(min_dist,
                                std::abs(zr - (static_cast<double>(j1) * basis.a1() +
                                               static_cast<double>(j2) * basis.a2())));
        }
    if (min_dist <= guard)
        throw OnLattice("green_value: zeta is within the guard radius of a lattice point");

    const cplx tau = basis.tau().value();
    const cplx w = zr / basis.a1();
    const double log_mag = log_abs_exponent_factor(basis, zr) +
                           std::log(std::abs(1.0 - e_of(w))) +
                           log_theta_tail(tau, w, budget, "green_value");
    return std::norm(zr) / (4.0 * area) - log_mag / (2.0 * pi);
}

double h_value(const LatticeBasis& basis, cplx zeta, const SeriesBudget& budget) {
    budget.validate();
    const double area = basis.area();
    const cplx tau = basis.tau().value();
    const cplx w = zeta / basis.a1();
    if (std::abs(w.imag()) >= 0.75 * tau.imag())
        throw std::invalid_argument("h_value: zeta too far from the base cell row");

    // |1 - e(w)| / |zeta|, stable through zeta = 0 where it tends 2 pi/|a1|.
    double log_sing;
    if (zeta == 0.0) {
        log_sing = std::log(2.0 * pi / std::abs(basis.a1()));
    } else {
        log_sing = std::log(std::abs(expm1c(cplx(0.0, 2.0 * pi) * w)) / std::abs(zeta));
    }

    const double log_mag = log_abs_exponent_factor(basis, zeta) +
                           std::log(std::sqrt(area) / (2.0 * pi)) + log_sing +
                           log_theta_tail(tau, w, budget, "h_value");
    return -log_mag / (2.0 * pi);
}

double h_regular_at_zero(const LatticeBasis& basis, const SeriesBudget& budget) {
    budget.validate();
    require_unit_area(basis, "h_regular_at_zero");
    const cplx tau = basis.tau().value();
    // H(0) = -log| sqrt(Im tau) e(tau/12) prod (1 - e(n tau))^2 | / (2 pi)
    const double log_mag = 0.5 * std::log(tau.imag()) - pi * tau.imag() / 6.0 +
                           2.0 * log_abs_product(ProductKind::OneMinusEn, tau, budget);
    return -log_mag / (2.0 * pi);
}

HalfPeriodValues half_period_values(const LatticeBasis& basis, const SeriesBudget& budget) {
    budget.validate();
    require_unit_area(basis, "half_period_values");
    const cplx tau = basis.tau().value();
    const double h = tau.imag();

    const double log_mid = pi * h / 12.0 + 2.0 * log_abs_product(ProductKind::OnePlusHalf, tau, budget);
    const double log_h1 =
        std::log(2.0) - pi * h / 6.0 + 2.0 * log_abs_product(ProductKind::OnePlusEn, tau, budget);
    const double log_h2 = pi * h / 12.0 + 2.0 * log_abs_product(ProductKind::OneMinusHalf, tau, budget);

    HalfPeriodValues v;
    v.g_mid = -log_mid / (2.0 * pi);
    v.g_half1 = -log_h1 / (2.0 * pi);
    v.g_half2 = -log_h2 / (2.0 * pi);
    v.h0 = h_regular_at_zero(basis, budget);
    return v;
}

ProductResiduals verify_product_identities(UhpPoint tau, const SeriesBudget& budget) {
    budget.validate();
    const cplx t = tau.value();
    const cplx t_half = (t + 1.0) / 2.0;

    auto product = [&](auto factor, double decay_h) {
        cplx prod = 1.0;
        for (int n = 1; n <= budget.max_terms; ++n) {
            const auto [f, qmag] = factor(n);
            prod *= f;
            if (qmag / (1.0 - std::exp(-pi * decay_h)) < budget.rel_tol) return prod;
        }
        throw BudgetExceeded("verify_product_identities: product did not converge");
    };

    const double h = t.imag();
    const cplx p_minus = product([&](int n) {
        const cplx q = e_of(static_cast<double>(n) * t);
        return std::pair{1.0 - q, std::abs(q)};
    }, h);
    const cplx p_plus = product([&](int n) {
        const cplx q = e_of(static_cast<double>(n) * t);
        return std::pair{1.0 + q, std::abs(q)};
    }, h);
    const cplx q_plus = product([&](int n) {
        const cplx q = e_of((n - 0.5) * t);
        return std::pair{1.0 + q, std::abs(q)};
    }, h);
    const cplx q_minus = product([&](int n) {
        const cplx q = e_of((n - 0.5) * t);
        return std::pair{1.0 - q, std::abs(q)};
    }, h);
    const cplx r_half = product([&](int n) {
        const cplx q = e_of(static_cast<double>(n) * t_half);
        return std::pair{1.0 - q, std::abs(q)};
    }, t_half.imag());

    return {std::abs(p_minus * q_plus - r_half), std::abs(q_plus * p_plus * q_minus - 1.0)};
}

} // namespace latmin
