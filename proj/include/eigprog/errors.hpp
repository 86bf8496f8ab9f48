#pragma once

#include <stdexcept>
#include <string>

namespace eigprog {

// Common base so callers can catch everything thrown by this library at once.
struct Error : std::runtime_error {
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Two elements (or an element and a constraint) belong to different algebras.
struct AlgebraMismatch : Error {
    using Error::Error;
};

// A raw buffer, matrix, or vector has the wrong size for its target.
struct DimensionMismatch : Error {
    using Error::Error;
};

// A prescribed spectrum violates the ordering/nonnegativity structure of the
// algebra's eigenvalue range beyond the repair tolerance.
struct InvalidSpectrum : Error {
    using Error::Error;
};

// The iterative eigensolver exhausted its sweep budget.
struct EigSolverNoConvergence : Error {
    using Error::Error;
};

// A spectral constraint is detectably empty at construction time.
struct EmptyConstraint : Error {
    using Error::Error;
};

// A matrix required to be positive definite is not.
struct NotPositiveDefinite : Error {
    using Error::Error;
};

// The restart loop used up its restart budget without converging.
struct RestartBudgetExceeded : Error {
    using Error::Error;
};

// An objective, gradient, or iterate produced NaN/Inf.
struct NonFiniteValue : Error {
    using Error::Error;
};

// A run configuration or instance file is malformed.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace eigprog
