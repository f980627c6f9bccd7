#pragma once

#include <compare>
#include <string>

#include "rbfhfd/series.hpp"

namespace rbfhfd {

enum class KernelKind { Gaussian, Multiquadric };

enum class OperatorKind { Identity, FirstDerivative1D, SecondDerivative1D, Laplacian2D };

/// Power of 1/h carried by function-value weights of the operator.
int operator_order(OperatorKind op);

/// Which sides of the kernel an operator acts on in a collocation block.
/// L2 differentiates with respect to the kernel's center argument, L1 with
/// respect to the evaluation argument; this file fixes that convention and
/// everything else inherits it.
enum class BlockRole {
    II,  // plain kernel value
    IL,  // operator at the source center      (block L2.Phi)
    LI,  // operator at the evaluation point   (block L1.Phi)
    LL,  // operator on both arguments         (block L1.L2.Phi)
};

/// Integer node offset in units of h; y stays 0 for the 1D operators.
struct Offset {
    int x = 0;
    int y = 0;
    auto operator<=>(const Offset&) const = default;
    long sq_norm() const { return static_cast<long>(x) * x + static_cast<long>(y) * y; }
};

/// Kernel value at squared distance r2; exactly 1 at r2 = 0 for both kinds.
double phi_numeric(KernelKind kind, double r2, double eps);

/// Closed-form block entry, dimensional (offset in units of h).
double block_entry_numeric(KernelKind kind, BlockRole role, OperatorKind op, Offset offset,
                           double eps, double h);

/// Same entry in extended precision and nondimensional form:
/// block_entry_numeric = h^{-q} * value(t) with t = (eps*h)^2.
__float128 block_entry_nondim_quad(KernelKind kind, BlockRole role, OperatorKind op,
                                   Offset offset, __float128 t);

struct SeriesEntry {
    TruncatedSeries series;  // S(t) with the numeric entry equal to h^{-q} S(t)
    int h_power = 0;         // q
};

SeriesEntry block_entry_series(KernelKind kind, BlockRole role, OperatorKind op, Offset offset,
                               std::size_t n);

std::string to_string(KernelKind k);
std::string to_string(OperatorKind op);

}  // namespace rbfhfd
