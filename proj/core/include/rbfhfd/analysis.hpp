#pragma once

#include <iosfwd>
#include <vector>

#include "rbfhfd/lte.hpp"

namespace rbfhfd {

struct EpsGrid {
    double start = 0.01;
    double stop = 3.5;
    int count = 350;
    bool log_spaced = false;

    std::vector<double> values() const;
};

struct SweepRow {
    double eps = 0, h = 0;
    double abs_tau0 = 0;
};

struct SweepResult {
    FormulaId id{};
    KernelKind kernel{};
    TestFunctionId testfn{};
    Point point{};
    std::vector<SweepRow> rows;  // grid order: h-major, then eps
};

SweepResult sweep(FormulaId id, KernelKind kernel, TestFunctionId f, Point p,
                  const std::vector<double>& eps_grid, const std::vector<double>& h_set,
                  std::size_t n = 14);

struct ConvergenceRow {
    double h = 0;
    double abs_tau0 = 0;
    bool dropped = false;            // |tau| below 100x machine precision
    double observed_order = 0;       // valid when has_order
    bool has_order = false;
};

struct ConvergenceResult {
    FormulaId id{};
    KernelKind kernel{};
    TestFunctionId testfn{};
    double eps = 0;
    std::vector<ConvergenceRow> rows;
};

ConvergenceResult convergence(FormulaId id, KernelKind kernel, TestFunctionId f, Point p,
                              double eps, const std::vector<double>& h_sequence,
                              std::size_t n = 14);

struct FlatReportRow {
    FormulaId id{};
    bool pass = false;
    std::string detail;  // offending entry on failure
};

std::vector<FlatReportRow> flat_limit_report();

struct CompareRow {
    double eps = 0, h = 0;
    double abs_tau0_ga = 0, abs_tau0_mq = 0, abs_tau0_fd = 0;
};

struct CompareResult {
    FormulaId id{};
    TestFunctionId testfn{};
    Point point{};
    std::vector<CompareRow> rows;
};

CompareResult compare_kernels(FormulaId id, TestFunctionId f, Point p,
                              const std::vector<double>& eps_grid, double h, std::size_t n = 14);

// CSV emission; header row mandatory, floats printed with 17 significant
// digits, y0 left empty for univariate test functions.
void write_csv(std::ostream& os, const SweepResult& r);
void write_csv(std::ostream& os, const ConvergenceResult& r);
void write_csv(std::ostream& os, const CompareResult& r);

std::string format_float(double v);  // %.17g

}  // namespace rbfhfd
