#include "rbfhfd/kernels.hpp"

#include <cmath>
#include <quadmath.h>
#include <stdexcept>

namespace rbfhfd {

int operator_order(OperatorKind op) {
    switch (op) {
        case OperatorKind::Identity: return 0;
        case OperatorKind::FirstDerivative1D: return 1;
        case OperatorKind::SecondDerivative1D: return 2;
        case OperatorKind::Laplacian2D: return 2;
    }
    return 0;
}

std::string to_string(KernelKind k) {
    return k == KernelKind::Gaussian ? "gaussian" : "multiquadric";
}

std::string to_string(OperatorKind op) {
    switch (op) {
        case OperatorKind::Identity: return "identity";
        case OperatorKind::FirstDerivative1D: return "d1";
        case OperatorKind::SecondDerivative1D: return "d2";
        case OperatorKind::Laplacian2D: return "laplacian";
    }
    return "?";
}

namespace {

inline double exp_of(double x) { return std::exp(x); }
inline double sqrt_of(double x) { return std::sqrt(x); }
inline __float128 exp_of(__float128 x) { return expq(x); }
inline __float128 sqrt_of(__float128 x) { return sqrtq(x); }

// Nondimensional entry: block_entry_numeric equals h^{-q} * entry(t).
// Derivative conventions (s = offset along x in units of h, k = |offset|^2):
//   Gaussian phi = exp(-k t):
//     d/dx  phi = -2 s t exp(-k t) / h              (L1, first derivative)
//     d/dy' phi = +2 s t exp(-k t) / h              (L2 acts on the center)
//     d2/dx2 phi = (4 s^2 t^2 - 2 t) exp(-k t)/h^2
//     lap   phi = (4 k t^2 - 4 t) exp(-k t)/h^2
//   Multiquadric phi = (1 + k t)^{1/2}, W_e = (1 + k t)^{e/2}.
template <typename Real>
Real entry_nondim(KernelKind kind, BlockRole role, OperatorKind op, Offset off, Real t) {
    const long k = off.sq_norm();
    const Real s = static_cast<Real>(off.x);
    if (kind == KernelKind::Gaussian) {
        const Real E = exp_of(-static_cast<Real>(k) * t);
        if (role == BlockRole::II) return E;
        switch (op) {
            case OperatorKind::FirstDerivative1D:
                if (role == BlockRole::LI) return -2 * s * t * E;
                if (role == BlockRole::IL) return 2 * s * t * E;
                return (2 * t - 4 * s * s * t * t) * E;
            case OperatorKind::SecondDerivative1D:
                if (role == BlockRole::LI || role == BlockRole::IL)
                    return (4 * s * s * t * t - 2 * t) * E;
                return (16 * s * s * s * s * t * t * t * t - 48 * s * s * t * t * t +
                        12 * t * t) * E;
            case OperatorKind::Laplacian2D:
                if (role == BlockRole::LI || role == BlockRole::IL)
                    return (4 * k * t * t - 4 * t) * E;
                return (Real(16) * k * k * t * t * t * t - 64 * k * t * t * t + 32 * t * t) * E;
            case OperatorKind::Identity: break;
        }
    } else {
        const Real w = 1 + static_cast<Real>(k) * t;
        const Real w12 = sqrt_of(w);
        if (role == BlockRole::II) return w12;
        const Real wm12 = 1 / w12;
        const Real wm32 = wm12 / w;
        switch (op) {
            case OperatorKind::FirstDerivative1D:
                if (role == BlockRole::LI) return s * t * wm12;
                if (role == BlockRole::IL) return -s * t * wm12;
                return -t * wm12 + s * s * t * t * wm32;
            case OperatorKind::SecondDerivative1D: {
                if (role == BlockRole::LI || role == BlockRole::IL)
                    return t * wm12 - s * s * t * t * wm32;
                const Real wm52 = wm32 / w;
                const Real wm72 = wm52 / w;
                return -3 * t * t * wm32 + 18 * s * s * t * t * t * wm52 -
                       15 * s * s * s * s * t * t * t * t * wm72;
            }
            case OperatorKind::Laplacian2D: {
                if (role == BlockRole::LI || role == BlockRole::IL)
                    return 2 * t * wm12 - k * t * t * wm32;
                const Real wm52 = wm32 / w;
                const Real wm72 = wm52 / w;
                return t * t * (wm32 + 6 * wm52 - 15 * wm72);
            }
            case OperatorKind::Identity: break;
        }
    }
    throw std::invalid_argument("operator role combination not defined");
}

int h_power(BlockRole role, OperatorKind op) {
    if (role == BlockRole::II) return 0;
    const int p = operator_order(op);
    return role == BlockRole::LL ? 2 * p : p;
}

}  // namespace

double phi_numeric(KernelKind kind, double r2, double eps) {
    return kind == KernelKind::Gaussian ? std::exp(-eps * eps * r2)
                                        : std::sqrt(1 + eps * eps * r2);
}

double block_entry_numeric(KernelKind kind, BlockRole role, OperatorKind op, Offset offset,
                           double eps, double h) {
    const double t = eps * h * eps * h;
    const double v = entry_nondim<double>(kind, role, op, offset, t);
    return v * std::pow(h, -h_power(role, op));
}

__float128 block_entry_nondim_quad(KernelKind kind, BlockRole role, OperatorKind op,
                                   Offset offset, __float128 t) {
    return entry_nondim<__float128>(kind, role, op, offset, t);
}

SeriesEntry block_entry_series(KernelKind kind, BlockRole role, OperatorKind op, Offset offset,
                               std::size_t n) {
    const long k = offset.sq_norm();
    const long s = offset.x;
    const int q = h_power(role, op);
    if (kind == KernelKind::Gaussian) {
        TruncatedSeries E = series_exp_neg(k, n);
        if (role == BlockRole::II) return {E, q};
        switch (op) {
            case OperatorKind::FirstDerivative1D:
                if (role == BlockRole::LI) return {E.scaled(-2 * s).shifted_up(1), q};
                if (role == BlockRole::IL) return {E.scaled(2 * s).shifted_up(1), q};
                return {E.scaled(2).shifted_up(1) - E.scaled(4 * s * s).shifted_up(2), q};
            case OperatorKind::SecondDerivative1D:
                if (role != BlockRole::LL)
                    return {E.scaled(4 * s * s).shifted_up(2) - E.scaled(2).shifted_up(1), q};
                return {E.scaled(16 * s * s * s * s).shifted_up(4) -
                            E.scaled(48 * s * s).shifted_up(3) + E.scaled(12).shifted_up(2),
                        q};
            case OperatorKind::Laplacian2D:
                if (role != BlockRole::LL)
                    return {E.scaled(4 * k).shifted_up(2) - E.scaled(4).shifted_up(1), q};
                return {E.scaled(16 * k * k).shifted_up(4) - E.scaled(64 * k).shifted_up(3) +
                            E.scaled(32).shifted_up(2),
                        q};
            case OperatorKind::Identity: break;
        }
    } else {
        auto W = [&](int e) { return series_pow_half(e, k, n); };
        if (role == BlockRole::II) return {W(1), q};
        switch (op) {
            case OperatorKind::FirstDerivative1D:
                if (role == BlockRole::LI) return {W(-1).scaled(s).shifted_up(1), q};
                if (role == BlockRole::IL) return {W(-1).scaled(-s).shifted_up(1), q};
                return {W(-3).scaled(s * s).shifted_up(2) - W(-1).shifted_up(1), q};
            case OperatorKind::SecondDerivative1D:
                if (role != BlockRole::LL)
                    return {W(-1).shifted_up(1) - W(-3).scaled(s * s).shifted_up(2), q};
                return {W(-3).scaled(-3).shifted_up(2) +
                            W(-5).scaled(18 * s * s).shifted_up(3) -
                            W(-7).scaled(15 * s * s * s * s).shifted_up(4),
                        q};
            case OperatorKind::Laplacian2D:
                if (role != BlockRole::LL)
                    return {W(-1).scaled(2).shifted_up(1) - W(-3).scaled(k).shifted_up(2), q};
                return {(W(-3) + W(-5).scaled(6) - W(-7).scaled(15)).shifted_up(2), q};
            case OperatorKind::Identity: break;
        }
    }
    throw std::invalid_argument("operator role combination not defined");
}

}  // namespace rbfhfd
