#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rbfhfd/rational.hpp"

namespace rbfhfd {

/// Truncated formal power series in t = (eps*h)^2 with exact rational
/// coefficients. All binary operations require equal truncation length.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(std::size_t n) : c_(n) {}
    explicit TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

    static TruncatedSeries constant(const Rational& value, std::size_t n);

    std::size_t trunc_len() const { return c_.size(); }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;  // Cauchy product mod t^n
    TruncatedSeries scaled(const Rational& r) const;
    TruncatedSeries shifted_up(std::size_t p) const;  // multiply by t^p
    TruncatedSeries inverted() const;                 // throws NotInvertible if c0 == 0
    TruncatedSeries truncated(std::size_t n) const;   // keep first n coefficients

    bool operator==(const TruncatedSeries& o) const = default;

    /// Horner evaluation of the truncated polynomial at t.
    double eval(double t) const;

    /// Space-separated "p/q" tokens; parse() is its inverse.
    std::string to_string() const;
    static TruncatedSeries parse(std::string_view text);

private:
    std::vector<Rational> c_;
};

/// exp(-k t): coefficient of t^n is (-k)^n / n!.
TruncatedSeries series_exp_neg(long k, std::size_t n);

/// (1 + k t)^(1/2): binomial coefficients C(1/2, n) k^n.
TruncatedSeries series_sqrt_one_plus(long k, std::size_t n);

/// (1 + k t)^(e/2) for odd integer e; generalizes series_sqrt_one_plus.
TruncatedSeries series_pow_half(int e, long k, std::size_t n);

/// Solves A x = b over the series ring. The matrix may be singular at t = 0
/// as long as the solution is a regular power series (Cramer ratios): the
/// elimination runs fraction-free (Bareiss) on polynomial lifts of the
/// entries, then expands det_j/det around t = 0. Throws FlatLimitSingular
/// when no power-series solution exists. All entries must share trunc_len
/// and the result has that same length. Results are exact when det(A) has a
/// nonzero constant term; when det vanishes at t = 0 to order v the trailing
/// coefficients can absorb truncation of the inputs, so callers needing all
/// n orders exactly should solve with oversized series and truncate (the
/// stencil assembly does this).
std::vector<TruncatedSeries> series_solve(const std::vector<std::vector<TruncatedSeries>>& A,
                                          const std::vector<TruncatedSeries>& b);

}  // namespace rbfhfd
