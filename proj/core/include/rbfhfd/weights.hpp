#pragma once

#include <map>
#include <string>
#include <vector>

#include "rbfhfd/stencil.hpp"

namespace rbfhfd {

enum class WeightSource { Series, Numeric, Flat };

/// Numeric weights. alpha is stored nondimensionally: the true function-value
/// weight is alpha/h^p with p the operator order; beta is dimensionless.
struct WeightSet {
    FormulaId id{};
    KernelKind kernel{};
    double eps = 0, h = 0;
    std::map<Offset, double> alpha;
    std::map<Offset, double> beta;
    std::vector<double> gamma;  // polynomial multipliers, reported only
    WeightSource source = WeightSource::Numeric;
    bool ill_conditioned = false;
    double rcond = 1.0;

    double true_alpha(Offset o) const;  // alpha / h^p
};

/// Exact weight series in t = (eps*h)^2, same nondimensionalization.
struct SeriesWeightSet {
    FormulaId id{};
    KernelKind kernel{};
    std::size_t trunc_len = 0;
    std::map<Offset, TruncatedSeries> alpha;
    std::map<Offset, TruncatedSeries> beta;
    std::vector<TruncatedSeries> gamma;

    WeightSet at(double eps, double h) const;  // evaluate all series at t
};

/// Exact flat-limit (t = 0) weights.
struct FlatWeightSet {
    FormulaId id{};
    std::map<Offset, Rational> alpha;
    std::map<Offset, Rational> beta;
};

struct NumericSystem {
    std::vector<std::vector<double>> matrix;
    std::vector<double> rhs;
};

struct SeriesSystem {
    std::vector<std::vector<TruncatedSeries>> matrix;
    std::vector<TruncatedSeries> rhs;
};

/// Raw (dimensional) collocation system over the symmetry-reduced unknowns;
/// for D1_6 with the Gaussian kernel this is the published 5x5 system.
NumericSystem assemble_numeric(FormulaId id, KernelKind kernel, double eps, double h);

/// Nondimensionalized system: every entry is a pure series in t.
SeriesSystem assemble_series(FormulaId id, KernelKind kernel, std::size_t n);

/// Extended-precision solve of the nondimensional system with partial
/// pivoting and one refinement step. Throws SingularAtFlatLimit at eps = 0.
WeightSet weights_numeric(FormulaId id, KernelKind kernel, double eps, double h);

/// Exact rational weight series (memoized; thread-safe).
const SeriesWeightSet& weights_series(FormulaId id, KernelKind kernel, std::size_t n);

/// Constant terms of the weight series, checked against the built-in
/// compact-FD reference table; throws FlatLimitMismatch on disagreement.
FlatWeightSet weights_flat(FormulaId id);

/// The embedded reference stencil table.
const FlatWeightSet& flat_reference(FormulaId id);

/// Series evaluation below t_switch, numeric solve above; both agree in the
/// overlap band.
WeightSet weights_auto(FormulaId id, KernelKind kernel, double eps, double h,
                       std::size_t n = 14);

/// Routing threshold in t for weights_auto. Multiquadric series have
/// convergence radius 1/k_max, so the threshold shrinks with the stencil.
double t_switch(FormulaId id, KernelKind kernel);

/// Structured-text (JSON-shaped) serializations with exact "p/q" rationals.
std::string to_text(const SeriesWeightSet& w);
std::string to_text(const WeightSet& w);

}  // namespace rbfhfd
