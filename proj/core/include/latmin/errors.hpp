#ifndef LATMIN_ERRORS_HPP
#define LATMIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latmin {

// Series truncation hit max_terms before the tail bound was met.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Fundamental-domain reduction exceeded its iteration cap.
struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

// Argument continuation step jumped by more than pi/2.
struct BranchAmbiguity : std::runtime_error {
    explicit BranchAmbiguity(const std::string& what) : std::runtime_error(what) {}
};

// Green's function evaluated too close to a lattice point.
struct OnLattice : std::runtime_error {
    explicit OnLattice(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParams : std::invalid_argument {
    explicit InvalidParams(const std::string& what) : std::invalid_argument(what) {}
};

struct NotDisjoint : std::runtime_error {
    explicit NotDisjoint(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateInteraction : std::runtime_error {
    explicit DegenerateInteraction(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfRange : std::invalid_argument {
    explicit OutOfRange(const std::string& what) : std::invalid_argument(what) {}
};

// Root bracketing failed: no sign change on the search interval.
struct BracketFailure : std::runtime_error {
    explicit BracketFailure(const std::string& what) : std::runtime_error(what) {}
};

// A grid sample beat the closed-form maximizer; indicates an implementation bug.
struct GridBeatsFormula : std::runtime_error {
    explicit GridBeatsFormula(const std::string& what) : std::runtime_error(what) {}
};

// Maximizer sits on neither critical locus (imaginary axis, unit circle).
struct Unclassified : std::runtime_error {
    explicit Unclassified(const std::string& what) : std::runtime_error(what) {}
};

} // namespace latmin

#endif
