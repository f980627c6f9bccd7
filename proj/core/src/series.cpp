#include "rbfhfd/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rbfhfd/errors.hpp"

namespace rbfhfd {

namespace {

void require_same_len(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.trunc_len() != b.trunc_len())
        throw std::invalid_argument("truncation length mismatch");
}

}  // namespace

TruncatedSeries TruncatedSeries::constant(const Rational& value, std::size_t n) {
    TruncatedSeries s(n);
    if (n > 0) s.c_[0] = value;
    return s;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    require_same_len(*this, o);
    TruncatedSeries out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    require_same_len(*this, o);
    TruncatedSeries out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - o.c_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    require_same_len(*this, o);
    const std::size_t n = c_.size();
    TruncatedSeries out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j + i < n; ++j) {
            if (o.c_[j] == 0) continue;
            out.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& r) const {
    TruncatedSeries out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * r;
    return out;
}

TruncatedSeries TruncatedSeries::shifted_up(std::size_t p) const {
    TruncatedSeries out(c_.size());
    for (std::size_t i = p; i < c_.size(); ++i) out.c_[i] = c_[i - p];
    return out;
}

TruncatedSeries TruncatedSeries::inverted() const {
    if (c_.empty() || c_[0] == 0) throw NotInvertible("series has zero constant term");
    const std::size_t n = c_.size();
    TruncatedSeries out(n);
    out.c_[0] = Rational(1) / c_[0];
    for (std::size_t k = 1; k < n; ++k) {
        Rational s = 0;
        for (std::size_t j = 1; j <= k; ++j) s += c_[j] * out.c_[k - j];
        out.c_[k] = -s / c_[0];
    }
    return out;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t n) const {
    TruncatedSeries out(n);
    for (std::size_t i = 0; i < n && i < c_.size(); ++i) out.c_[i] = c_[i];
    return out;
}

double TruncatedSeries::eval(double t) const {
    double v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + to_double(*it);
    return v;
}

std::string TruncatedSeries::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ' ';
        out += rbfhfd::to_string(c_[i]);
    }
    return out;
}

TruncatedSeries TruncatedSeries::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<Rational> coeffs;
    std::string tok;
    while (in >> tok) coeffs.push_back(rational_from_string(tok));
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries series_exp_neg(long k, std::size_t n) {
    TruncatedSeries out(n);
    if (n == 0) return out;
    out[0] = 1;
    for (std::size_t i = 1; i < n; ++i) out[i] = out[i - 1] * Rational(-k, static_cast<long>(i));
    return out;
}

TruncatedSeries series_pow_half(int e, long k, std::size_t n) {
    TruncatedSeries out(n);
    if (n == 0) return out;
    out[0] = 1;
    for (std::size_t i = 1; i < n; ++i) {
        // C(e/2, i) k^i  via the ratio (e/2 - (i-1)) * k / i
        long i_ = static_cast<long>(i);
        out[i] = out[i - 1] * Rational(k * (e - 2 * (i_ - 1)), 2 * i_);
    }
    return out;
}

TruncatedSeries series_sqrt_one_plus(long k, std::size_t n) { return series_pow_half(1, k, n); }

// ---------------------------------------------------------------------------
// Fraction-free solve.
//
// The collocation systems this serves are singular at t = 0 (their rows
// collide in the flat limit) while the solutions stay regular, so Gaussian
// elimination over the truncated ring cannot pivot. Instead: lift entries to
// integer polynomials (scaling each row by its common denominator leaves the
// Cramer ratios unchanged), run Bareiss determinants, and expand det_j/det
// as a power series at 0.
// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<BigInt>;  // coefficient of t^i at index i, trimmed

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Exact division; Bareiss guarantees divisibility over the integers.
Poly div_exact(const Poly& num, const Poly& den) {
    if (den.empty()) throw FlatLimitSingular("division by zero polynomial");
    if (num.empty()) return {};
    Poly r = num;
    if (r.size() < den.size()) throw FlatLimitSingular("inexact polynomial division");
    Poly q(r.size() - den.size() + 1);
    for (std::size_t d = q.size(); d-- > 0;) {
        BigInt c = r[d + den.size() - 1] / den.back();
        q[d] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i < den.size(); ++i) r[d + i] -= c * den[i];
    }
    for (const BigInt& c : r)
        if (c != 0) throw FlatLimitSingular("inexact polynomial division");
    return q;
}

std::size_t valuation(const Poly& p) {
    std::size_t v = 0;
    while (v < p.size() && p[v] == 0) ++v;
    return v;
}

// Bareiss determinant of a matrix of integer polynomials.
Poly bareiss_det(std::vector<std::vector<Poly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return {BigInt(1)};
    int sign = 1;
    Poly prev{BigInt(1)};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // pivot on the lowest-valuation entry in the column to keep sizes down
        std::size_t piv = n;
        std::size_t best_val = 0;
        for (std::size_t r = k; r < n; ++r) {
            if (m[r][k].empty()) continue;
            std::size_t v = valuation(m[r][k]);
            if (piv == n || v < best_val) piv = r, best_val = v;
        }
        if (piv == n) return {};
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = sub(mul(m[k][k], m[i][j]), mul(m[i][k], m[k][j]));
                m[i][j] = (prev.size() == 1 && prev[0] == 1) ? std::move(num)
                                                             : div_exact(num, prev);
            }
            m[i][k].clear();
        }
        prev = m[k][k];
    }
    Poly d = m[n - 1][n - 1];
    if (sign < 0)
        for (BigInt& c : d) c = -c;
    return d;
}

}  // namespace

std::vector<TruncatedSeries> series_solve(const std::vector<std::vector<TruncatedSeries>>& A,
                                          const std::vector<TruncatedSeries>& b) {
    const std::size_t n = b.size();
    if (A.size() != n) throw std::invalid_argument("series_solve: shape mismatch");
    if (n == 0) return {};
    const std::size_t len = b[0].trunc_len();
    for (const auto& row : A) {
        if (row.size() != n) throw std::invalid_argument("series_solve: shape mismatch");
        for (const auto& e : row)
            if (e.trunc_len() != len) throw std::invalid_argument("series_solve: length mismatch");
    }

    // Integerize row by row: multiply row i of [A|b] by the lcm of its
    // denominators. Row scaling cancels in det_j/det.
    std::vector<std::vector<Poly>> M(n, std::vector<Poly>(n));
    std::vector<Poly> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        BigInt l = 1;
        auto fold = [&l](const TruncatedSeries& s) {
            for (std::size_t k = 0; k < s.trunc_len(); ++k)
                l = lcm(l, denominator(s[k]));
        };
        for (std::size_t j = 0; j < n; ++j) fold(A[i][j]);
        fold(b[i]);
        auto lift = [&l, len](const TruncatedSeries& s) {
            Poly p(len);
            for (std::size_t k = 0; k < len; ++k)
                p[k] = numerator(s[k]) * (l / denominator(s[k]));
            trim(p);
            return p;
        };
        for (std::size_t j = 0; j < n; ++j) M[i][j] = lift(A[i][j]);
        rhs[i] = lift(b[i]);
    }

    Poly det = bareiss_det(M);
    if (det.empty()) throw FlatLimitSingular("system determinant vanishes identically");
    const std::size_t v = valuation(det);
    if (v >= len) throw FlatLimitSingular("determinant vanishes to full truncation order");

    // Denominator unit part as a rational series of the output length.
    TruncatedSeries den_unit(len);
    for (std::size_t i = 0; i < len && v + i < det.size(); ++i) den_unit[i] = Rational(det[v + i]);
    TruncatedSeries den_inv = den_unit.inverted();

    std::vector<TruncatedSeries> x;
    x.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        auto Mj = M;
        for (std::size_t i = 0; i < n; ++i) Mj[i][j] = rhs[i];
        Poly dj = bareiss_det(std::move(Mj));
        if (dj.empty()) {
            x.emplace_back(len);
            continue;
        }
        if (valuation(dj) < v)
            throw FlatLimitSingular("solution is not regular at the flat limit");
        TruncatedSeries num(len);
        for (std::size_t i = 0; i < len && v + i < dj.size(); ++i) num[i] = Rational(dj[v + i]);
        x.push_back(num * den_inv);
    }
    return x;
}

}  // namespace rbfhfd
