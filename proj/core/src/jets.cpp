#include "rbfhfd/jets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rbfhfd/errors.hpp"

namespace rbfhfd {

namespace {

void require_compatible(const Jet1& a, const Jet1& b) {
    if (a.center() != b.center() || a.order() != b.order())
        throw std::invalid_argument("jet center/order mismatch");
}

}  // namespace

Jet1 Jet1::constant(double value, double x0, int order) {
    Jet1 j(x0, order);
    j[0] = value;
    return j;
}

Jet1 Jet1::identity(double x0, int order) {
    Jet1 j(x0, order);
    j[0] = x0;
    if (order >= 1) j[1] = 1;
    return j;
}

Jet1 Jet1::operator+(const Jet1& o) const {
    require_compatible(*this, o);
    Jet1 r = *this;
    for (int k = 0; k <= order(); ++k) r[k] += o[k];
    return r;
}

Jet1 Jet1::operator-(const Jet1& o) const {
    require_compatible(*this, o);
    Jet1 r = *this;
    for (int k = 0; k <= order(); ++k) r[k] -= o[k];
    return r;
}

Jet1 Jet1::operator*(const Jet1& o) const {
    require_compatible(*this, o);
    Jet1 r(x0_, order());
    for (int i = 0; i <= order(); ++i) {
        if (c_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= order(); ++j)
            r[i + j] += (*this)[i] * o[j];
    }
    return r;
}

Jet1 Jet1::scaled(double s) const {
    Jet1 r = *this;
    for (int k = 0; k <= order(); ++k) r[k] *= s;
    return r;
}

Jet1 Jet1::shifted(double s) const {
    Jet1 r = *this;
    r[0] += s;
    return r;
}

Jet1 Jet1::reciprocal() const {
    if (c_[0] == 0) throw NotInvertible("jet reciprocal at zero constant term");
    Jet1 r(x0_, order());
    r[0] = 1.0 / c_[0];
    for (int k = 1; k <= order(); ++k) {
        double s = 0;
        for (int j = 1; j <= k; ++j) s += (*this)[j] * r[k - j];
        r[k] = -s / c_[0];
    }
    return r;
}

Jet1 Jet1::pow_int(int e) const {
    Jet1 r = Jet1::constant(1.0, x0_, order());
    Jet1 base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * base;
        if (e > 1) base = base * base;
    }
    return r;
}

double Jet1::eval(double dx) const {
    double v = 0;
    for (int k = order(); k >= 0; --k) v = v * dx + (*this)[k];
    return v;
}

Jet1 sin(const Jet1& f) {
    const int K = f.order();
    Jet1 s(f.center(), K), c(f.center(), K);
    s[0] = std::sin(f[0]);
    c[0] = std::cos(f[0]);
    for (int k = 1; k <= K; ++k) {
        double as = 0, ac = 0;
        for (int j = 1; j <= k; ++j) {
            as += j * f[j] * c[k - j];
            ac += j * f[j] * s[k - j];
        }
        s[k] = as / k;
        c[k] = -ac / k;
    }
    return s;
}

Jet1 cos(const Jet1& f) {
    const int K = f.order();
    Jet1 s(f.center(), K), c(f.center(), K);
    s[0] = std::sin(f[0]);
    c[0] = std::cos(f[0]);
    for (int k = 1; k <= K; ++k) {
        double as = 0, ac = 0;
        for (int j = 1; j <= k; ++j) {
            as += j * f[j] * c[k - j];
            ac += j * f[j] * s[k - j];
        }
        s[k] = as / k;
        c[k] = -ac / k;
    }
    return c;
}

Jet1 exp(const Jet1& f) {
    const int K = f.order();
    Jet1 g(f.center(), K);
    g[0] = std::exp(f[0]);
    for (int k = 1; k <= K; ++k) {
        double a = 0;
        for (int j = 1; j <= k; ++j) a += j * f[j] * g[k - j];
        g[k] = a / k;
    }
    return g;
}

// g' = (1 - g^2) f', with w = 1 - g^2 maintained alongside.
Jet1 tanh(const Jet1& f) {
    const int K = f.order();
    Jet1 g(f.center(), K), w(f.center(), K);
    g[0] = std::tanh(f[0]);
    w[0] = 1 - g[0] * g[0];
    for (int k = 1; k <= K; ++k) {
        double a = 0;
        for (int j = 1; j <= k; ++j) a += j * f[j] * w[k - j];
        g[k] = a / k;
        double b = 0;
        for (int i = 0; i <= k; ++i) b += g[i] * g[k - i];
        w[k] = -b;
    }
    return g;
}

// ---------------------------------------------------------------------------

Jet2::Jet2(double x0, double y0, int order)
    : x0_(x0), y0_(y0), k_(order),
      c_(static_cast<std::size_t>((order + 1) * (order + 2) / 2), 0.0) {}

std::size_t Jet2::index(int i, int j) const {
    // row i of the triangle starts after rows 0..i-1 (lengths K+1, K, ...)
    return static_cast<std::size_t>(i * (k_ + 1) - i * (i - 1) / 2 + j);
}

Jet2 Jet2::constant(double value, double x0, double y0, int order) {
    Jet2 j(x0, y0, order);
    j(0, 0) = value;
    return j;
}

Jet2 Jet2::identity_x(double x0, double y0, int order) {
    Jet2 j(x0, y0, order);
    j(0, 0) = x0;
    if (order >= 1) j(1, 0) = 1;
    return j;
}

Jet2 Jet2::identity_y(double x0, double y0, int order) {
    Jet2 j(x0, y0, order);
    j(0, 0) = y0;
    if (order >= 1) j(0, 1) = 1;
    return j;
}

namespace {

void require_compatible(const Jet2& a, const Jet2& b) {
    if (a.x0() != b.x0() || a.y0() != b.y0() || a.order() != b.order())
        throw std::invalid_argument("jet center/order mismatch");
}

}  // namespace

Jet2 Jet2::operator+(const Jet2& o) const {
    require_compatible(*this, o);
    Jet2 r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

Jet2 Jet2::operator-(const Jet2& o) const {
    require_compatible(*this, o);
    Jet2 r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

Jet2 Jet2::operator*(const Jet2& o) const {
    require_compatible(*this, o);
    Jet2 r(x0_, y0_, k_);
    for (int i1 = 0; i1 <= k_; ++i1)
        for (int j1 = 0; i1 + j1 <= k_; ++j1) {
            const double a = (*this)(i1, j1);
            if (a == 0) continue;
            for (int i2 = 0; i1 + j1 + i2 <= k_; ++i2)
                for (int j2 = 0; i1 + j1 + i2 + j2 <= k_; ++j2)
                    r(i1 + i2, j1 + j2) += a * o(i2, j2);
        }
    return r;
}

Jet2 Jet2::scaled(double s) const {
    Jet2 r = *this;
    for (double& v : r.c_) v *= s;
    return r;
}

Jet2 Jet2::shifted(double s) const {
    Jet2 r = *this;
    r(0, 0) += s;
    return r;
}

Jet2 Jet2::compose(const Jet1& outer) const {
    Jet2 fhat = *this;
    fhat(0, 0) = 0;
    const int K = std::min(k_, outer.order());
    Jet2 r = Jet2::constant(outer[K], x0_, y0_, k_);
    for (int k = K - 1; k >= 0; --k) r = r * fhat + Jet2::constant(outer[k], x0_, y0_, k_);
    return r;
}

Jet2 Jet2::reciprocal() const {
    if ((*this)(0, 0) == 0) throw NotInvertible("jet reciprocal at zero constant term");
    return compose(Jet1::identity((*this)(0, 0), k_).reciprocal());
}

Jet2 Jet2::pow_int(int e) const {
    Jet2 r = Jet2::constant(1.0, x0_, y0_, k_);
    Jet2 base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * base;
        if (e > 1) base = base * base;
    }
    return r;
}

double Jet2::eval(double dx, double dy) const {
    double v = 0;
    double xi = 1;
    for (int i = 0; i <= k_; ++i) {
        double yj = 1, row = 0;
        for (int j = 0; i + j <= k_; ++j) {
            row += (*this)(i, j) * yj;
            yj *= dy;
        }
        v += row * xi;
        xi *= dx;
    }
    return v;
}

Jet2 sin(const Jet2& f) { return f.compose(sin(Jet1::identity(f(0, 0), f.order()))); }
Jet2 cos(const Jet2& f) { return f.compose(cos(Jet1::identity(f(0, 0), f.order()))); }
Jet2 exp(const Jet2& f) { return f.compose(exp(Jet1::identity(f(0, 0), f.order()))); }
Jet2 tanh(const Jet2& f) { return f.compose(tanh(Jet1::identity(f(0, 0), f.order()))); }

// ---------------------------------------------------------------------------

int dimension(TestFunctionId f) {
    return (f == TestFunctionId::U1 || f == TestFunctionId::U2) ? 1 : 2;
}

Point default_point(TestFunctionId f) {
    switch (f) {
        case TestFunctionId::U1: return {0.4, 0};
        case TestFunctionId::U2: return {0.25, 0};
        case TestFunctionId::U4: return {0.25, 0.25};
        case TestFunctionId::U5: return {0.0, 0.0};
        default: return {0.1, 0.2};  // u6..u9
    }
}

std::string to_string(TestFunctionId f) {
    switch (f) {
        case TestFunctionId::U1: return "u1";
        case TestFunctionId::U2: return "u2";
        case TestFunctionId::U4: return "u4";
        case TestFunctionId::U5: return "u5";
        case TestFunctionId::U6: return "u6";
        case TestFunctionId::U7: return "u7";
        case TestFunctionId::U8: return "u8";
        case TestFunctionId::U9: return "u9";
    }
    return "?";
}

std::optional<TestFunctionId> parse_testfn(std::string_view s) {
    for (TestFunctionId f : kAllTestFunctions)
        if (to_string(f) == s) return f;
    return std::nullopt;
}

Jet1 testfn_jet1(TestFunctionId f, double x0, int order) {
    using std::numbers::pi;
    const Jet1 x = Jet1::identity(x0, order);
    switch (f) {
        case TestFunctionId::U1: return sin(x * x);
        case TestFunctionId::U2:
            return sin(x.scaled(pi)) + exp(x).shifted(-1.0).scaled(1.0 / (std::exp(1.0) - 1.0));
        default: throw std::invalid_argument("testfn_jet1: bivariate test function");
    }
}

Jet2 testfn_jet2(TestFunctionId f, double x0, double y0, int order) {
    using std::numbers::pi;
    const Jet2 x = Jet2::identity_x(x0, y0, order);
    const Jet2 y = Jet2::identity_y(x0, y0, order);
    switch (f) {
        case TestFunctionId::U4: {
            Jet2 g = exp((x.shifted(-0.25).pow_int(2) + y.shifted(-0.5).pow_int(2)).scaled(-1.0));
            return g * sin(x.scaled(pi)) * cos(y.scaled(2 * pi));
        }
        case TestFunctionId::U5: {
            Jet2 den = (x.shifted(-0.2).pow_int(2) + y.pow_int(2).scaled(2.0)).shifted(25.0);
            return den.reciprocal().scaled(25.0);
        }
        case TestFunctionId::U6: return exp(x) * tanh(y.scaled(1.0 / std::sqrt(2.0)));
        case TestFunctionId::U7: {
            Jet2 nx = x.scaled(9.0), ny = y.scaled(9.0);
            Jet2 t1 =
                exp((nx.shifted(-2).pow_int(2) + ny.shifted(-2).pow_int(2)).scaled(-0.25)).scaled(0.75);
            // second term mixes a squared x-part with a linear y-part, as printed
            Jet2 t2 = exp(nx.shifted(1).pow_int(2).scaled(-1.0 / 49.0) -
                          ny.shifted(1).scaled(0.1))
                          .scaled(0.75);
            Jet2 t3 =
                exp((nx.shifted(-7).pow_int(2) + ny.shifted(-3).pow_int(2)).scaled(-0.25)).scaled(0.5);
            Jet2 t4 = exp((nx.shifted(-4).pow_int(2) + ny.shifted(-7).pow_int(2)).scaled(-1.0))
                          .scaled(0.2);
            return t1 + t2 + t3 - t4;
        }
        case TestFunctionId::U8: {
            Jet2 hx = x.scaled(-0.5).shifted(1.0);   // 1 - x/2
            Jet2 hy = y.scaled(-0.5).shifted(1.0);
            Jet2 ox = x.scaled(-1.0).shifted(1.0);   // 1 - x
            Jet2 oy = y.scaled(-1.0).shifted(1.0);
            return hx.pow_int(6) * hy.pow_int(6) +
                   (ox.pow_int(3) * x.pow_int(3) * oy.pow_int(3) * y.pow_int(3)).scaled(1000.0) +
                   y.pow_int(6) * hx.pow_int(6) + x.pow_int(6) * hy.pow_int(6);
        }
        case TestFunctionId::U9: return sin(x.scaled(pi)) * sin(y.scaled(pi));
        default: throw std::invalid_argument("testfn_jet2: univariate test function");
    }
}

namespace {

double factorial(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

double derivative_from_jet(const Jet1& jet, int k) {
    if (k < 0 || k > jet.order()) throw OutOfOrder("derivative order beyond jet truncation");
    return jet[k] * factorial(k);
}

double derivative_from_jet(const Jet2& jet, int i, int j) {
    if (i < 0 || j < 0 || i + j > jet.order())
        throw OutOfOrder("derivative order beyond jet truncation");
    return jet(i, j) * factorial(i) * factorial(j);
}

}  // namespace rbfhfd
