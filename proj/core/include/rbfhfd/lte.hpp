#pragma once

#include <vector>

#include "rbfhfd/jets.hpp"
#include "rbfhfd/weights.hpp"

namespace rbfhfd {

/// Leading local-truncation-error polynomial: tau0 = h^m P_n(z) + O(h^{m+2}),
/// z = eps^2, normalized so coeffs are exactly lim_{h->0} tau0/h^m.
struct LtePoly {
    FormulaId formula{};
    int h_order = 0;             // m
    std::vector<double> coeffs;  // a_0 .. a_n, n = m/2
};

struct LteResult {
    double tau0 = 0;  // signed
    FormulaId formula{};
    KernelKind kernel{};
    TestFunctionId testfn{};
    Point point{};
    double eps = 0, h = 0;
};

enum class OptimalEpsMechanism { PolynomialRoot, DerivativeMinimum };

struct OptimalEpsResult {
    double eps_star = 0;
    double z_c = 0;
    OptimalEpsMechanism mechanism{};
    std::vector<double> candidates;  // all real roots of P_n found
};

/// sum alpha_d u(node) + sum beta_d (L u)(node), node values exact via jets.
double apply_formula(const WeightSet& w, TestFunctionId f, Point p, double h);

/// Test seam: node data supplied directly. jet_at(offset) must return a jet
/// of order >= the operator order centered on the node.
double apply_formula_1d(const WeightSet& w, const std::function<Jet1(double)>& jet_at, double h);
double apply_formula_2d(const WeightSet& w, const std::function<Jet2(double, double)>& jet_at,
                        double h);

/// Exact operator value at the point, from a jet.
double exact_operator_value(OperatorKind op, TestFunctionId f, Point p);

/// tau0 = apply_formula - exact operator value. In the series regime
/// (t <= t_switch and nodes within the jet radius) the difference is
/// evaluated through the weight-series h-expansion, which is free of the
/// catastrophic cancellation the direct sum has when tau0 ~ h^10.
LteResult lte_numeric(FormulaId id, KernelKind kernel, TestFunctionId f, Point p, double eps,
                      double h, std::size_t n = 14);

/// P_n(z) assembled from the published coefficient templates with
/// derivatives from jets.
LtePoly lte_poly_template(FormulaId id, TestFunctionId f, Point p);

/// Independent route: expand tau0 from the exact weight series applied to
/// jets and collect the h^m coefficient as a polynomial in z.
LtePoly lte_poly_derived(FormulaId id, KernelKind kernel, TestFunctionId f, Point p,
                         std::size_t n = 14);

/// Smallest positive real root of P_n when one exists (closed form through
/// degree 3, companion eigenvalues above); otherwise the positive root of
/// P_n' minimizing |P_n|. Throws NoOptimalEps when no candidate is positive.
OptimalEpsResult optimal_eps(const LtePoly& p);

/// Precomputed h-expansion of tau0: tau0(eps, h) = sum_{l>=m} h^l C_l(z).
/// Built once per (formula, kernel, test function, point) and then cheap to
/// evaluate across (eps, h) grids.
class LteExpansion {
public:
    LteExpansion(FormulaId id, KernelKind kernel, TestFunctionId f, Point p, std::size_t n = 14);

    double tau(double eps, double h) const;
    LtePoly leading() const;  // C_m, degree-capped at m/2
    /// C_l as z-polynomial coefficients; l <= max_level(). Levels below m
    /// vanish up to roundoff.
    const std::vector<double>& level(int l) const;
    int max_level() const { return static_cast<int>(levels_.size()) - 1; }
    FormulaId formula() const { return id_; }
    int h_order() const { return m_; }
    /// Largest node distance from the reference point, in units of h.
    double stencil_radius() const { return radius_; }

private:
    FormulaId id_;
    KernelKind kernel_;
    TestFunctionId f_;
    Point p_;
    int m_ = 0;
    double radius_ = 0;
    std::vector<std::vector<double>> levels_;
};

}  // namespace rbfhfd
