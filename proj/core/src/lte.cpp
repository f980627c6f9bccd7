#include "rbfhfd/lte.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "rbfhfd/errors.hpp"

namespace rbfhfd {

namespace {

double polyval(const std::vector<double>& c, double z) {
    double v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
    return v;
}

double laplacian_of(const Jet2& j) { return 2 * (j(2, 0) + j(0, 2)); }

}  // namespace

double apply_formula_1d(const WeightSet& w, const std::function<Jet1(double)>& jet_at, double h) {
    const StencilSpec& spec = catalog(w.id);
    const int p = operator_order(spec.op);
    const double hp = std::pow(h, p);
    double acc = 0;
    for (const auto& [o, a] : w.alpha) acc += (a / hp) * jet_at(o.x * h)[0];
    for (const auto& [o, b] : w.beta) acc += b * derivative_from_jet(jet_at(o.x * h), p);
    return acc;
}

double apply_formula_2d(const WeightSet& w, const std::function<Jet2(double, double)>& jet_at,
                        double h) {
    const double h2 = h * h;
    double acc = 0;
    for (const auto& [o, a] : w.alpha) acc += (a / h2) * jet_at(o.x * h, o.y * h)(0, 0);
    for (const auto& [o, b] : w.beta) acc += b * laplacian_of(jet_at(o.x * h, o.y * h));
    return acc;
}

double apply_formula(const WeightSet& w, TestFunctionId f, Point p, double h) {
    const StencilSpec& spec = catalog(w.id);
    if (dimension(f) != spec.dimension())
        throw std::invalid_argument("test function arity incompatible with formula");
    if (spec.dimension() == 1)
        return apply_formula_1d(
            w, [&](double x) { return testfn_jet1(f, p.x + x, 2); }, h);
    return apply_formula_2d(
        w, [&](double x, double y) { return testfn_jet2(f, p.x + x, p.y + y, 2); }, h);
}

double exact_operator_value(OperatorKind op, TestFunctionId f, Point p) {
    switch (op) {
        case OperatorKind::FirstDerivative1D: return derivative_from_jet(testfn_jet1(f, p.x, 1), 1);
        case OperatorKind::SecondDerivative1D:
            return derivative_from_jet(testfn_jet1(f, p.x, 2), 2);
        case OperatorKind::Laplacian2D: return laplacian_of(testfn_jet2(f, p.x, p.y, 2));
        case OperatorKind::Identity: return testfn_jet1(f, p.x, 0)[0];
    }
    return 0;
}

// ---------------------------------------------------------------------------

LteExpansion::LteExpansion(FormulaId id, KernelKind kernel, TestFunctionId f, Point p,
                           std::size_t n)
    : id_(id), kernel_(kernel), f_(f), p_(p) {
    const StencilSpec& spec = catalog(id);
    if (dimension(f) != spec.dimension())
        throw std::invalid_argument("test function arity incompatible with formula");
    m_ = spec.order;
    const int op_p = operator_order(spec.op);
    const SeriesWeightSet& w = weights_series(id, kernel, n);

    const int K = spec.dimension() == 1 ? 14 : 10;
    // Taylor coefficients of u and Lu about the reference point, evaluated
    // per stencil offset: cval(d, j) = coefficient of h^j in u(x0 + d h).
    std::vector<std::vector<double>> cval(w.alpha.size());
    std::vector<std::vector<double>> cLval(w.beta.size());
    double exact_L = 0;
    if (spec.dimension() == 1) {
        Jet1 jet = testfn_jet1(f, p.x, K);
        std::size_t i = 0;
        for (const auto& [o, s] : w.alpha) {
            auto& v = cval[i++];
            v.resize(K + 1);
            double d = o.x, dj = 1;
            for (int j = 0; j <= K; ++j, dj *= d) v[j] = jet[j] * dj;
        }
        // Taylor coefficients of the operator-applied function
        std::vector<double> cL(K + 1 - op_p);
        for (int j = 0; j + op_p <= K; ++j) {
            double m = 1;
            for (int q = 1; q <= op_p; ++q) m *= j + q;
            cL[j] = jet[j + op_p] * m;
        }
        i = 0;
        for (const auto& [o, s] : w.beta) {
            auto& v = cLval[i++];
            v.resize(cL.size());
            double d = o.x, dj = 1;
            for (std::size_t j = 0; j < cL.size(); ++j, dj *= d) v[j] = cL[j] * dj;
        }
        exact_L = cL.empty() ? 0 : cL[0];
    } else {
        Jet2 jet = testfn_jet2(f, p.x, p.y, K);
        Jet2 lap(p.x, p.y, K - 2);
        for (int i = 0; i + 2 <= K; ++i)
            for (int j = 0; i + j + 2 <= K; ++j)
                lap(i, j) = jet(i + 2, j) * (i + 1) * (i + 2) + jet(i, j + 2) * (j + 1) * (j + 2);
        auto fill = [](const Jet2& jj, Offset o, int maxdeg) {
            std::vector<double> v(maxdeg + 1, 0.0);
            for (int j = 0; j <= maxdeg; ++j) {
                double acc = 0;
                for (int i = 0; i <= j; ++i)
                    acc += jj(i, j - i) * std::pow(o.x, i) * std::pow(o.y, j - i);
                v[j] = acc;
            }
            return v;
        };
        std::size_t i = 0;
        for (const auto& [o, s] : w.alpha) cval[i++] = fill(jet, o, K);
        i = 0;
        for (const auto& [o, s] : w.beta) cLval[i++] = fill(lap, o, K - 2);
        exact_L = laplacian_of(jet);
    }

    for (Offset o : spec.s_offsets())
        radius_ = std::max(radius_, std::sqrt(static_cast<double>(o.sq_norm())));

    // tau0 = sum_{i,j} z^i h^{2i+j-p} [sum_d a_{d,i} c_j(d)]
    //      + sum_{i,j} z^i h^{2i+j}   [sum_d b_{d,i} cL_j(d)] - Lu(x0)
    const int Lmax = K;
    const int cL_len = cLval.empty() ? 0 : static_cast<int>(cLval[0].size());
    levels_.assign(Lmax + 1, {});
    for (int l = 0; l <= Lmax; ++l) {
        const std::size_t nz = std::min(n, static_cast<std::size_t>((l + op_p) / 2) + 1);
        auto& zc = levels_[l];
        zc.assign(nz, 0.0);
        for (std::size_t i = 0; i < nz; ++i) {
            const int ja = l + op_p - static_cast<int>(2 * i);
            const int jb = l - static_cast<int>(2 * i);
            double acc = 0;
            if (ja >= 0 && ja <= K) {
                std::size_t d = 0;
                for (const auto& [o, s] : w.alpha) acc += to_double(s[i]) * cval[d++][ja];
            }
            if (jb >= 0 && jb < cL_len) {
                std::size_t d = 0;
                for (const auto& [o, s] : w.beta) acc += to_double(s[i]) * cLval[d++][jb];
            }
            zc[i] = acc;
        }
    }
    levels_[0][0] -= exact_L;
}

double LteExpansion::tau(double eps, double h) const {
    const double z = eps * eps;
    double acc = 0;
    for (int l = max_level(); l >= m_; --l) acc = acc * h + polyval(levels_[l], z);
    return acc * std::pow(h, m_);
}

const std::vector<double>& LteExpansion::level(int l) const {
    return levels_.at(static_cast<std::size_t>(l));
}

LtePoly LteExpansion::leading() const {
    LtePoly p;
    p.formula = id_;
    p.h_order = m_;
    const std::size_t deg = static_cast<std::size_t>(m_) / 2;
    p.coeffs = levels_[static_cast<std::size_t>(m_)];
    p.coeffs.resize(deg + 1, 0.0);
    return p;
}

// ---------------------------------------------------------------------------

LteResult lte_numeric(FormulaId id, KernelKind kernel, TestFunctionId f, Point p, double eps,
                      double h, std::size_t n) {
    const StencilSpec& spec = catalog(id);
    LteResult r;
    r.formula = id;
    r.kernel = kernel;
    r.testfn = f;
    r.point = p;
    r.eps = eps;
    r.h = h;
    const double t = eps * h * eps * h;
    double radius = 0;
    for (Offset o : spec.s_offsets())
        radius = std::max(radius, std::sqrt(static_cast<double>(o.sq_norm())));
    if (t <= t_switch(id, kernel) && h * radius <= 0.35) {
        // series regime: evaluate the recentred expansion; the direct sum
        // cancels catastrophically once tau0 drops below ~1e-13
        r.tau0 = LteExpansion(id, kernel, f, p, n).tau(eps, h);
    } else {
        WeightSet w = weights_auto(id, kernel, eps, h, n);
        r.tau0 = apply_formula(w, f, p, h) - exact_operator_value(spec.op, f, p);
    }
    return r;
}

LtePoly lte_poly_derived(FormulaId id, KernelKind kernel, TestFunctionId f, Point p,
                         std::size_t n) {
    return LteExpansion(id, kernel, f, p, n).leading();
}

// ---------------------------------------------------------------------------
// Coefficient templates for the leading LTE polynomials: exact rational
// multiplier per (z power, derivative index).

namespace {

struct TemplateTerm {
    int zpow;
    const char* coeff;
    int dx;
    int dy;  // dy < 0 marks a univariate derivative of order dx
};

const std::vector<TemplateTerm>& template_terms(FormulaId id) {
    static const std::map<FormulaId, std::vector<TemplateTerm>> table = {
        {FormulaId::D1_4, {{0, "-1/120", 5, -1}, {1, "-1/6", 3, -1}, {2, "-1/2", 1, -1}}},
        {FormulaId::D1_6,
         {{0, "1/1260", 7, -1}, {1, "1/30", 5, -1}, {2, "1/3", 3, -1}, {3, "2/3", 1, -1}}},
        {FormulaId::D1_8,
         {{0, "-1/22680", 9, -1},
          {1, "-1/315", 7, -1},
          {2, "-1/15", 5, -1},
          {3, "-4/9", 3, -1},
          {4, "-2/3", 1, -1}}},
        {FormulaId::D1_10,
         {{0, "1/277200", 11, -1},
          {1, "1/2520", 9, -1},
          {2, "1/70", 7, -1},
          {3, "1/5", 5, -1},
          {4, "1", 3, -1},
          {5, "6/5", 1, -1}}},
        {FormulaId::D2_4, {{0, "-1/200", 6, -1}, {1, "-7/50", 4, -1}, {2, "-7/10", 2, -1}}},
        {FormulaId::D2_6,
         {{0, "23/55440", 8, -1}, {1, "69/3080", 6, -1}, {2, "69/220", 4, -1}, {3, "23/22", 2, -1}}},
        {FormulaId::D2_8,
         {{0, "-79/2971080", 10, -1},
          {1, "-869/371385", 8, -1},
          {2, "-869/13755", 6, -1},
          {3, "-3476/5895", 4, -1},
          {4, "-1738/1179", 2, -1}}},
        {FormulaId::D2_10,
         {{0, "619/299043360", 12, -1},
          {1, "8047/29904336", 10, -1},
          {2, "8047/679644", 8, -1},
          {3, "8047/37758", 6, -1},
          {4, "8047/5394", 4, -1},
          {5, "8047/2697", 2, -1}}},
        {FormulaId::Lap2,
         {{0, "1/12", 4, 0}, {0, "1/12", 0, 4}, {1, "3/4", 2, 0}, {1, "3/4", 0, 2}}},
        {FormulaId::Lap4,
         {{0, "-1/160", 6, 0},
          {0, "-1/160", 0, 6},
          {0, "1/96", 2, 4},
          {0, "1/96", 4, 2},
          {1, "-5/32", 4, 0},
          {1, "-5/32", 0, 4},
          {1, "13/48", 2, 2},
          {2, "-1/2", 2, 0},
          {2, "-1/2", 0, 2}}},
        {FormulaId::Lap6,
         {{0, "1/1680", 8, 0},
          {0, "1/1680", 0, 8},
          {0, "-1/920", 2, 6},
          {0, "-1/920", 6, 2},
          {1, "-2941/72680", 2, 4},
          {1, "-2941/72680", 4, 2},
          {2, "-16327/36340", 4, 0},
          {2, "-16327/36340", 0, 4},
          {2, "-4061/9085", 2, 2},
          {3, "-2227/790", 2, 0},
          {3, "-2227/790", 0, 2}}},
    };
    return table.at(id);
}

}  // namespace

LtePoly lte_poly_template(FormulaId id, TestFunctionId f, Point p) {
    const StencilSpec& spec = catalog(id);
    if (dimension(f) != spec.dimension())
        throw std::invalid_argument("test function arity incompatible with formula");
    LtePoly out;
    out.formula = id;
    out.h_order = spec.order;
    out.coeffs.assign(static_cast<std::size_t>(spec.order) / 2 + 1, 0.0);
    if (spec.dimension() == 1) {
        Jet1 jet = testfn_jet1(f, p.x, spec.order + operator_order(spec.op));
        for (const TemplateTerm& t : template_terms(id))
            out.coeffs[static_cast<std::size_t>(t.zpow)] +=
                to_double(rational_from_string(t.coeff)) * derivative_from_jet(jet, t.dx);
    } else {
        Jet2 jet = testfn_jet2(f, p.x, p.y, spec.order + 2);
        for (const TemplateTerm& t : template_terms(id))
            out.coeffs[static_cast<std::size_t>(t.zpow)] +=
                to_double(rational_from_string(t.coeff)) * derivative_from_jet(jet, t.dx, t.dy);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// Real roots of a polynomial given by ascending coefficients; closed form
// through degree 3, companion-matrix eigenvalues above. Complex pairs with
// imaginary part below 1e-10 of the root scale count as real.
std::vector<double> real_roots(std::vector<double> a) {
    const double scale = *std::max_element(
        a.begin(), a.end(), [](double p, double q) { return std::abs(p) < std::abs(q); });
    const double tiny = 1e-12 * std::abs(scale);
    while (a.size() > 1 && std::abs(a.back()) <= tiny) a.pop_back();
    const std::size_t n = a.size() - 1;
    std::vector<double> roots;
    if (n == 0) return roots;
    if (n == 1) {
        roots.push_back(-a[0] / a[1]);
        return roots;
    }
    if (n == 2) {
        const double A = a[2], B = a[1], C = a[0];
        const double disc = B * B - 4 * A * C;
        const double mag = std::max(std::abs(B / (2 * A)), std::sqrt(std::abs(disc)) / (2 * std::abs(A)));
        if (disc >= 0) {
            const double q = -0.5 * (B + std::copysign(std::sqrt(disc), B));
            roots.push_back(q / A);
            roots.push_back(q != 0 ? C / q : -B / (2 * A));
        } else if (std::sqrt(-disc) / (2 * std::abs(A)) <= 1e-10 * mag) {
            roots.assign(2, -B / (2 * A));
        }
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    if (n == 3) {
        // depressed cubic, trigonometric for three real roots, Cardano else
        const double b = a[2] / a[3], c = a[1] / a[3], d = a[0] / a[3];
        const double q = (b * b - 3 * c) / 9;
        const double r = (b * (2 * b * b - 9 * c) + 27 * d) / 54;
        const double r2 = r * r, q3 = q * q * q;
        if (r2 < q3) {
            const double th = std::acos(std::clamp(r / std::sqrt(q3), -1.0, 1.0));
            const double s = -2 * std::sqrt(q);
            roots = {s * std::cos(th / 3) - b / 3,
                     s * std::cos((th + 2 * std::numbers::pi) / 3) - b / 3,
                     s * std::cos((th - 2 * std::numbers::pi) / 3) - b / 3};
        } else {
            const double u = std::cbrt(-r - std::copysign(std::sqrt(r2 - q3), r));
            const double v = u == 0 ? 0 : q / u;
            roots.push_back(u + v - b / 3);
            const double im = 0.5 * std::sqrt(3.0) * std::abs(u - v);
            const double re = -0.5 * (u + v) - b / 3;
            if (im <= 1e-10 * std::max(std::abs(re), std::abs(roots[0]))) {
                roots.push_back(re);
                roots.push_back(re);
            }
        }
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<int>(n), static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i) comp(static_cast<int>(i), static_cast<int>(n) - 1) =
        -a[i] / a[n];
    for (std::size_t i = 1; i < n; ++i) comp(static_cast<int>(i), static_cast<int>(i) - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    const auto ev = es.eigenvalues();
    double rad = 0;
    for (int i = 0; i < ev.size(); ++i) rad = std::max(rad, std::abs(ev[i]));
    for (int i = 0; i < ev.size(); ++i)
        if (std::abs(ev[i].imag()) <= 1e-10 * rad) roots.push_back(ev[i].real());
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

OptimalEpsResult optimal_eps(const LtePoly& p) {
    double mx = 0;
    for (double c : p.coeffs) mx = std::max(mx, std::abs(c));
    if (mx == 0) throw NoOptimalEps("LTE polynomial is identically zero");

    OptimalEpsResult out;
    out.candidates = real_roots(p.coeffs);
    std::vector<double> pos;
    for (double z : out.candidates)
        if (z > 0) pos.push_back(z);
    if (!pos.empty()) {
        out.z_c = *std::min_element(pos.begin(), pos.end());
        out.mechanism = OptimalEpsMechanism::PolynomialRoot;
        out.eps_star = std::sqrt(out.z_c);
        return out;
    }
    std::vector<double> dp;
    for (std::size_t i = 1; i < p.coeffs.size(); ++i) dp.push_back(p.coeffs[i] * static_cast<double>(i));
    std::vector<double> dpos;
    if (!dp.empty())
        for (double z : real_roots(dp))
            if (z > 0) dpos.push_back(z);
    if (dpos.empty()) throw NoOptimalEps("no positive optimum candidate");
    double best = dpos[0], bestval = std::abs(polyval(p.coeffs, dpos[0]));
    for (double z : dpos) {
        const double v = std::abs(polyval(p.coeffs, z));
        if (v < bestval) best = z, bestval = v;
    }
    out.z_c = best;
    out.mechanism = OptimalEpsMechanism::DerivativeMinimum;
    out.eps_star = std::sqrt(best);
    return out;
}

}  // namespace rbfhfd
