#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rbfhfd {

/// Univariate truncated Taylor jet: c[k] = u^(k)(x0) / k!.
class Jet1 {
public:
    Jet1() = default;
    Jet1(double x0, int order) : x0_(x0), c_(static_cast<std::size_t>(order) + 1, 0.0) {}

    static Jet1 constant(double value, double x0, int order);
    static Jet1 identity(double x0, int order);  // jet of u(x) = x

    double center() const { return x0_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    double operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    double& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

    Jet1 operator+(const Jet1& o) const;
    Jet1 operator-(const Jet1& o) const;
    Jet1 operator*(const Jet1& o) const;
    Jet1 scaled(double s) const;
    Jet1 shifted(double s) const;  // add a constant
    Jet1 reciprocal() const;       // throws NotInvertible at zero constant term
    Jet1 pow_int(int e) const;     // e >= 0

    double eval(double dx) const;  // Horner in the displacement

    friend Jet1 sin(const Jet1& f);
    friend Jet1 cos(const Jet1& f);
    friend Jet1 exp(const Jet1& f);
    friend Jet1 tanh(const Jet1& f);  // recurrence tanh' = 1 - tanh^2

private:
    double x0_ = 0;
    std::vector<double> c_;
};

/// Bivariate jet truncated at total degree K, dense triangular storage:
/// c(i, j) = d^{i+j} u / dx^i dy^j (x0, y0) / (i! j!).
class Jet2 {
public:
    Jet2() = default;
    Jet2(double x0, double y0, int order);

    static Jet2 constant(double value, double x0, double y0, int order);
    static Jet2 identity_x(double x0, double y0, int order);
    static Jet2 identity_y(double x0, double y0, int order);

    double x0() const { return x0_; }
    double y0() const { return y0_; }
    int order() const { return k_; }
    double operator()(int i, int j) const { return c_[index(i, j)]; }
    double& operator()(int i, int j) { return c_[index(i, j)]; }

    Jet2 operator+(const Jet2& o) const;
    Jet2 operator-(const Jet2& o) const;
    Jet2 operator*(const Jet2& o) const;  // truncated at total degree K
    Jet2 scaled(double s) const;
    Jet2 shifted(double s) const;
    Jet2 reciprocal() const;
    Jet2 pow_int(int e) const;

    /// Composes a scalar function given by its univariate jet around this
    /// jet's constant term: F(f) = sum F_k (f - f00)^k, truncated.
    Jet2 compose(const Jet1& outer) const;

    double eval(double dx, double dy) const;

    friend Jet2 sin(const Jet2& f);
    friend Jet2 cos(const Jet2& f);
    friend Jet2 exp(const Jet2& f);
    friend Jet2 tanh(const Jet2& f);

private:
    std::size_t index(int i, int j) const;
    double x0_ = 0, y0_ = 0;
    int k_ = 0;
    std::vector<double> c_;
};

/// The catalogued test functions; u3 does not exist (the numbering skips it).
enum class TestFunctionId { U1, U2, U4, U5, U6, U7, U8, U9 };

constexpr std::array<TestFunctionId, 8> kAllTestFunctions = {
    TestFunctionId::U1, TestFunctionId::U2, TestFunctionId::U4, TestFunctionId::U5,
    TestFunctionId::U6, TestFunctionId::U7, TestFunctionId::U8, TestFunctionId::U9,
};

int dimension(TestFunctionId f);  // 1 or 2

struct Point {
    double x = 0;
    double y = 0;
};

Point default_point(TestFunctionId f);

std::string to_string(TestFunctionId f);
std::optional<TestFunctionId> parse_testfn(std::string_view s);

/// K <= 14; enough for the order-10 LTE polynomials needing u^(12).
Jet1 testfn_jet1(TestFunctionId f, double x0, int order);

/// K <= 10; the sixth-order Laplacian LTE needs eighth-order partials.
Jet2 testfn_jet2(TestFunctionId f, double x0, double y0, int order);

/// u^(k)(x0); throws OutOfOrder beyond the jet's truncation.
double derivative_from_jet(const Jet1& jet, int k);

/// d^{i+j} u / dx^i dy^j (x0, y0).
double derivative_from_jet(const Jet2& jet, int i, int j);

}  // namespace rbfhfd
