#pragma once

#include <stdexcept>
#include <string>

namespace rbfhfd {

// Series inversion (or jet reciprocal) with zero constant term.
struct NotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

// Linear system over the series ring has no power-series solution.
struct FlatLimitSingular : std::domain_error {
    using std::domain_error::domain_error;
};

// Numeric weight solve requested at eps = 0 (kernel matrix of all ones).
struct SingularAtFlatLimit : std::domain_error {
    using std::domain_error::domain_error;
};

// Computed flat-limit weights disagree with the built-in reference stencil.
struct FlatLimitMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Derivative order requested beyond a jet's truncation.
struct OutOfOrder : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// LTE polynomial admits no positive optimum candidate.
struct NoOptimalEps : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rbfhfd
