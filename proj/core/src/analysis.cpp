#include "rbfhfd/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "rbfhfd/errors.hpp"

namespace rbfhfd {

std::vector<double> EpsGrid::values() const {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        v.push_back(start);
        return v;
    }
    if (log_spaced) {
        const double r = std::log(stop / start) / (count - 1);
        for (int i = 0; i < count; ++i) v.push_back(start * std::exp(r * i));
    } else {
        const double d = (stop - start) / (count - 1);
        for (int i = 0; i < count; ++i) v.push_back(start + d * i);
    }
    return v;
}

std::string format_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

// One tau evaluation reusing a prebuilt expansion in the series regime.
double tau_at(const LteExpansion& exp_, FormulaId id, KernelKind kernel, TestFunctionId f,
              Point p, double eps, double h, std::size_t n) {
    const double t = eps * h * eps * h;
    if (t <= t_switch(id, kernel) && h * exp_.stencil_radius() <= 0.35) return exp_.tau(eps, h);
    WeightSet w = weights_auto(id, kernel, eps, h, n);
    return apply_formula(w, f, p, h) - exact_operator_value(catalog(id).op, f, p);
}

}  // namespace

SweepResult sweep(FormulaId id, KernelKind kernel, TestFunctionId f, Point p,
                  const std::vector<double>& eps_grid, const std::vector<double>& h_set,
                  std::size_t n) {
    SweepResult res;
    res.id = id;
    res.kernel = kernel;
    res.testfn = f;
    res.point = p;
    LteExpansion exp_(id, kernel, f, p, n);
    for (double h : h_set)
        for (double eps : eps_grid) {
            try {
                const double tau = tau_at(exp_, id, kernel, f, p, eps, h, n);
                res.rows.push_back({eps, h, std::abs(tau)});
            } catch (const std::exception&) {
                // per-point failures become missing rows
            }
        }
    return res;
}

ConvergenceResult convergence(FormulaId id, KernelKind kernel, TestFunctionId f, Point p,
                              double eps, const std::vector<double>& h_sequence, std::size_t n) {
    ConvergenceResult res;
    res.id = id;
    res.kernel = kernel;
    res.testfn = f;
    res.eps = eps;
    LteExpansion exp_(id, kernel, f, p, n);
    const double floor = 100 * std::numeric_limits<double>::epsilon();
    for (double h : h_sequence) {
        ConvergenceRow row;
        row.h = h;
        row.abs_tau0 = std::abs(tau_at(exp_, id, kernel, f, p, eps, h, n));
        row.dropped = row.abs_tau0 < floor;
        res.rows.push_back(row);
    }
    const ConvergenceRow* prev = nullptr;
    for (auto& row : res.rows) {
        if (row.dropped) continue;
        if (prev) {
            row.observed_order =
                std::log(prev->abs_tau0 / row.abs_tau0) / std::log(prev->h / row.h);
            row.has_order = true;
        }
        prev = &row;
    }
    return res;
}

std::vector<FlatReportRow> flat_limit_report() {
    std::vector<FlatReportRow> out;
    for (FormulaId id : kAllFormulas) {
        FlatReportRow row;
        row.id = id;
        try {
            weights_flat(id);
            row.pass = true;
        } catch (const FlatLimitMismatch& e) {
            row.pass = false;
            row.detail = e.what();
        }
        out.push_back(std::move(row));
    }
    return out;
}

CompareResult compare_kernels(FormulaId id, TestFunctionId f, Point p,
                              const std::vector<double>& eps_grid, double h, std::size_t n) {
    CompareResult res;
    res.id = id;
    res.testfn = f;
    res.point = p;
    LteExpansion ga(id, KernelKind::Gaussian, f, p, n);
    LteExpansion mq(id, KernelKind::Multiquadric, f, p, n);
    // flat weights are kernel independent, so the compact-FD baseline is the
    // Gaussian expansion pinned at eps = 0
    const double fd = std::abs(ga.tau(0.0, h));
    for (double eps : eps_grid) {
        try {
            CompareRow row;
            row.eps = eps;
            row.h = h;
            row.abs_tau0_ga =
                std::abs(tau_at(ga, id, KernelKind::Gaussian, f, p, eps, h, n));
            row.abs_tau0_mq =
                std::abs(tau_at(mq, id, KernelKind::Multiquadric, f, p, eps, h, n));
            row.abs_tau0_fd = fd;
            res.rows.push_back(row);
        } catch (const std::exception&) {
        }
    }
    return res;
}

void write_csv(std::ostream& os, const SweepResult& r) {
    os << "formula,kernel,testfn,x0,y0,eps,h,abs_tau0\n";
    const bool two_d = dimension(r.testfn) == 2;
    for (const SweepRow& row : r.rows)
        os << to_string(r.id) << ',' << to_string(r.kernel) << ',' << to_string(r.testfn) << ','
           << format_float(r.point.x) << ',' << (two_d ? format_float(r.point.y) : "") << ','
           << format_float(row.eps) << ',' << format_float(row.h) << ','
           << format_float(row.abs_tau0) << '\n';
}

void write_csv(std::ostream& os, const ConvergenceResult& r) {
    os << "formula,kernel,testfn,eps,h,abs_tau0,observed_order\n";
    for (const ConvergenceRow& row : r.rows)
        os << to_string(r.id) << ',' << to_string(r.kernel) << ',' << to_string(r.testfn) << ','
           << format_float(r.eps) << ',' << format_float(row.h) << ','
           << format_float(row.abs_tau0) << ','
           << (row.has_order ? format_float(row.observed_order) : "") << '\n';
}

void write_csv(std::ostream& os, const CompareResult& r) {
    os << "formula,testfn,eps,h,abs_tau0_ga,abs_tau0_mq,abs_tau0_fd\n";
    for (const CompareRow& row : r.rows)
        os << to_string(r.id) << ',' << to_string(r.testfn) << ',' << format_float(row.eps) << ','
           << format_float(row.h) << ',' << format_float(row.abs_tau0_ga) << ','
           << format_float(row.abs_tau0_mq) << ',' << format_float(row.abs_tau0_fd) << '\n';
}

}  // namespace rbfhfd
