#ifndef LATMIN_BUDGET_HPP
#define LATMIN_BUDGET_HPP

#include <stdexcept>

namespace latmin {

/// Truncation control for all infinite products and sums.
struct SeriesBudget {
    double rel_tol = 1e-14;
    int max_terms = 4096;

    void validate() const {
        if (!(rel_tol > 0.0 && rel_tol < 1e-6))
            throw std::invalid_argument("SeriesBudget: rel_tol must be in (0, 1e-6)");
        if (max_terms < 16)
            throw std::invalid_argument("SeriesBudget: max_terms must be >= 16");
    }
};

} // namespace latmin

#endif
