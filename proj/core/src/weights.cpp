#include "rbfhfd/weights.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <quadmath.h>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "rbfhfd/errors.hpp"

namespace rbfhfd {

namespace {

// Spare exactly-computed orders carried through the degenerate solve; the
// Cramer ratio can consume up to ~10 of them on the order-10 stencils.
constexpr std::size_t kSolvePad = 16;

Offset diff(Offset a, Offset b) { return {a.x - b.x, a.y - b.y}; }
Offset neg(Offset a) { return {-a.x, -a.y}; }

}  // namespace

double WeightSet::true_alpha(Offset o) const {
    return alpha.at(o) / std::pow(h, operator_order(catalog(id).op));
}

WeightSet SeriesWeightSet::at(double eps, double h) const {
    const double t = eps * h * eps * h;
    WeightSet w;
    w.id = id;
    w.kernel = kernel;
    w.eps = eps;
    w.h = h;
    w.source = WeightSource::Series;
    for (const auto& [o, s] : alpha) w.alpha[o] = s.eval(t);
    for (const auto& [o, s] : beta) w.beta[o] = s.eval(t);
    for (const auto& s : gamma) w.gamma.push_back(s.eval(t));
    return w;
}

NumericSystem assemble_numeric(FormulaId id, KernelKind kernel, double eps, double h) {
    const StencilSpec& spec = catalog(id);
    NumericSystem sys;
    auto row_for = [&](Offset y, BlockRole on_alpha, BlockRole on_beta) {
        std::vector<double> row;
        for (const auto& cls : spec.alpha_classes) {
            double v = 0;
            for (std::size_t i = 0; i < cls.offsets.size(); ++i)
                v += cls.signs[i] *
                     block_entry_numeric(kernel, on_alpha, spec.op, diff(cls.offsets[i], y), eps, h);
            row.push_back(v);
        }
        for (const auto& cls : spec.beta_classes) {
            double v = 0;
            for (Offset o : cls)
                v += block_entry_numeric(kernel, on_beta, spec.op, diff(o, y), eps, h);
            row.push_back(v);
        }
        row.push_back(on_alpha == BlockRole::II ? 1.0 : 0.0);
        sys.matrix.push_back(std::move(row));
        sys.rhs.push_back(block_entry_numeric(kernel, on_beta, spec.op, neg(y), eps, h));
    };
    for (const auto& cls : spec.alpha_classes) row_for(cls.offsets.front(), BlockRole::II, BlockRole::LI);
    for (const auto& cls : spec.beta_classes) row_for(cls.front(), BlockRole::IL, BlockRole::LL);
    // constant-exactness row; x and y augmentation rows vanish under the
    // symmetry reduction
    std::vector<double> prow;
    for (const auto& cls : spec.alpha_classes) {
        int s = 0;
        for (int sg : cls.signs) s += sg;
        prow.push_back(s);
    }
    prow.resize(prow.size() + spec.beta_classes.size() + 1, 0.0);
    sys.matrix.push_back(std::move(prow));
    sys.rhs.push_back(0.0);
    return sys;
}

SeriesSystem assemble_series(FormulaId id, KernelKind kernel, std::size_t n) {
    const StencilSpec& spec = catalog(id);
    SeriesSystem sys;
    auto row_for = [&](Offset y, BlockRole on_alpha, BlockRole on_beta) {
        std::vector<TruncatedSeries> row;
        for (const auto& cls : spec.alpha_classes) {
            TruncatedSeries v(n);
            for (std::size_t i = 0; i < cls.offsets.size(); ++i)
                v = v + block_entry_series(kernel, on_alpha, spec.op, diff(cls.offsets[i], y), n)
                            .series.scaled(cls.signs[i]);
            row.push_back(std::move(v));
        }
        for (const auto& cls : spec.beta_classes) {
            TruncatedSeries v(n);
            for (Offset o : cls)
                v = v + block_entry_series(kernel, on_beta, spec.op, diff(o, y), n).series;
            row.push_back(std::move(v));
        }
        row.push_back(TruncatedSeries::constant(on_alpha == BlockRole::II ? 1 : 0, n));
        sys.matrix.push_back(std::move(row));
        sys.rhs.push_back(block_entry_series(kernel, on_beta, spec.op, neg(y), n).series);
    };
    for (const auto& cls : spec.alpha_classes) row_for(cls.offsets.front(), BlockRole::II, BlockRole::LI);
    for (const auto& cls : spec.beta_classes) row_for(cls.front(), BlockRole::IL, BlockRole::LL);
    std::vector<TruncatedSeries> prow;
    for (const auto& cls : spec.alpha_classes) {
        int s = 0;
        for (int sg : cls.signs) s += sg;
        prow.push_back(TruncatedSeries::constant(s, n));
    }
    prow.resize(prow.size() + spec.beta_classes.size() + 1, TruncatedSeries(n));
    sys.matrix.push_back(std::move(prow));
    sys.rhs.push_back(TruncatedSeries(n));
    return sys;
}

namespace {

SeriesWeightSet solve_series(FormulaId id, KernelKind kernel, std::size_t n) {
    const StencilSpec& spec = catalog(id);
    SeriesSystem sys = assemble_series(id, kernel, n + kSolvePad);
    std::vector<TruncatedSeries> x = series_solve(sys.matrix, sys.rhs);
    SeriesWeightSet w;
    w.id = id;
    w.kernel = kernel;
    w.trunc_len = n;
    std::size_t col = 0;
    for (const auto& cls : spec.alpha_classes) {
        for (std::size_t i = 0; i < cls.offsets.size(); ++i)
            w.alpha[cls.offsets[i]] = x[col].scaled(cls.signs[i]).truncated(n);
        ++col;
    }
    for (const auto& cls : spec.beta_classes) {
        for (Offset o : cls) w.beta[o] = x[col].truncated(n);
        ++col;
    }
    w.gamma.push_back(x[col].truncated(n));
    for (int i = 1; i < spec.poly_terms; ++i) w.gamma.emplace_back(n);  // x, y multipliers: 0
    return w;
}

}  // namespace

const SeriesWeightSet& weights_series(FormulaId id, KernelKind kernel, std::size_t n) {
    using Key = std::tuple<FormulaId, KernelKind, std::size_t>;
    static std::map<Key, SeriesWeightSet> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.try_emplace(Key{id, kernel, n});
    if (inserted) it->second = solve_series(id, kernel, n);
    return it->second;
}

WeightSet weights_numeric(FormulaId id, KernelKind kernel, double eps, double h) {
    if (eps == 0)
        throw SingularAtFlatLimit("weights_numeric at eps = 0: kernel matrix of all ones");
    const StencilSpec& spec = catalog(id);
    const __float128 t = static_cast<__float128>(eps) * eps * h * h;

    // Nondimensional system assembled and solved in extended precision: the
    // raw solve is flat-limit degenerate (condition numbers reach ~1e17 at
    // t = 0.01 for the order-10 stencils).
    std::vector<std::vector<__float128>> A;
    std::vector<__float128> b;
    auto row_for = [&](Offset y, BlockRole on_alpha, BlockRole on_beta) {
        std::vector<__float128> row;
        for (const auto& cls : spec.alpha_classes) {
            __float128 v = 0;
            for (std::size_t i = 0; i < cls.offsets.size(); ++i)
                v += cls.signs[i] *
                     block_entry_nondim_quad(kernel, on_alpha, spec.op, diff(cls.offsets[i], y), t);
            row.push_back(v);
        }
        for (const auto& cls : spec.beta_classes) {
            __float128 v = 0;
            for (Offset o : cls)
                v += block_entry_nondim_quad(kernel, on_beta, spec.op, diff(o, y), t);
            row.push_back(v);
        }
        row.push_back(on_alpha == BlockRole::II ? 1 : 0);
        A.push_back(std::move(row));
        b.push_back(block_entry_nondim_quad(kernel, on_beta, spec.op, neg(y), t));
    };
    for (const auto& cls : spec.alpha_classes) row_for(cls.offsets.front(), BlockRole::II, BlockRole::LI);
    for (const auto& cls : spec.beta_classes) row_for(cls.front(), BlockRole::IL, BlockRole::LL);
    std::vector<__float128> prow;
    for (const auto& cls : spec.alpha_classes) {
        int s = 0;
        for (int sg : cls.signs) s += sg;
        prow.push_back(s);
    }
    prow.resize(prow.size() + spec.beta_classes.size() + 1, 0);
    A.push_back(std::move(prow));
    b.push_back(0);

    const std::size_t n = b.size();
    // LU with partial pivoting
    std::vector<std::vector<__float128>> lu = A;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (fabsq(lu[r][k]) > fabsq(lu[piv][k])) piv = r;
        std::swap(lu[k], lu[piv]);
        std::swap(perm[k], perm[piv]);
        if (lu[k][k] == 0) throw SingularAtFlatLimit("numeric collocation system is singular");
        for (std::size_t r = k + 1; r < n; ++r) {
            __float128 f = lu[r][k] / lu[k][k];
            lu[r][k] = f;
            for (std::size_t c = k + 1; c < n; ++c) lu[r][c] -= f * lu[k][c];
        }
    }
    auto lu_solve = [&](const std::vector<__float128>& rhs) {
        std::vector<__float128> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            __float128 s = rhs[perm[i]];
            for (std::size_t j = 0; j < i; ++j) s -= lu[i][j] * y[j];
            y[i] = s;
        }
        for (std::size_t i = n; i-- > 0;) {
            __float128 s = y[i];
            for (std::size_t j = i + 1; j < n; ++j) s -= lu[i][j] * y[j];
            y[i] = s / lu[i][i];
        }
        return y;
    };
    std::vector<__float128> x = lu_solve(b);
    // one step of residual refinement
    std::vector<__float128> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        __float128 s = b[i];
        for (std::size_t j = 0; j < n; ++j) s -= A[i][j] * x[j];
        r[i] = s;
    }
    std::vector<__float128> dx = lu_solve(r);
    for (std::size_t i = 0; i < n; ++i) x[i] += dx[i];

    __float128 dmin = fabsq(lu[0][0]), dmax = dmin;
    for (std::size_t i = 1; i < n; ++i) {
        __float128 d = fabsq(lu[i][i]);
        dmin = d < dmin ? d : dmin;
        dmax = d > dmax ? d : dmax;
    }

    WeightSet w;
    w.id = id;
    w.kernel = kernel;
    w.eps = eps;
    w.h = h;
    w.source = WeightSource::Numeric;
    w.rcond = dmax > 0 ? static_cast<double>(dmin / dmax) : 0.0;
    w.ill_conditioned = w.rcond < 1e-13;
    std::size_t col = 0;
    for (const auto& cls : spec.alpha_classes) {
        for (std::size_t i = 0; i < cls.offsets.size(); ++i)
            w.alpha[cls.offsets[i]] = static_cast<double>(x[col]) * cls.signs[i];
        ++col;
    }
    for (const auto& cls : spec.beta_classes) {
        for (Offset o : cls) w.beta[o] = static_cast<double>(x[col]);
        ++col;
    }
    w.gamma.push_back(static_cast<double>(x[col]));
    for (int i = 1; i < spec.poly_terms; ++i) w.gamma.push_back(0.0);
    return w;
}

const FlatWeightSet& flat_reference(FormulaId id) {
    static const std::map<FormulaId, FlatWeightSet> table = [] {
        std::map<FormulaId, FlatWeightSet> m;
        auto R = [](const char* s) { return rational_from_string(s); };
        auto add1d = [&m, &R](FormulaId id, std::initializer_list<const char*> alphas,
                              std::initializer_list<const char*> betas) {
            // alphas from the innermost pair outward after the center value;
            // first entry is alpha_0, then alpha_{-1}, alpha_{-2}, ...
            FlatWeightSet w;
            w.id = id;
            auto it = alphas.begin();
            w.alpha[{0, 0}] = R(*it++);
            int i = 1;
            const bool odd = catalog(id).op == OperatorKind::FirstDerivative1D;
            for (; it != alphas.end(); ++it, ++i) {
                w.alpha[{-i, 0}] = R(*it);
                w.alpha[{i, 0}] = odd ? -R(*it) : R(*it);
            }
            i = 1;
            for (const char* s : betas) {
                w.beta[{-i, 0}] = R(s);
                w.beta[{i, 0}] = R(s);
                ++i;
            }
            return w;
        };
        m[FormulaId::D1_4] = add1d(FormulaId::D1_4, {"0", "-3/4"}, {"-1/4"});
        m[FormulaId::D1_6] = add1d(FormulaId::D1_6, {"0", "-7/9", "-1/36"}, {"-1/3"});
        m[FormulaId::D1_8] = add1d(FormulaId::D1_8, {"0", "-20/27", "-25/216"}, {"-4/9", "-1/36"});
        m[FormulaId::D1_10] =
            add1d(FormulaId::D1_10, {"0", "-17/24", "-101/600", "-1/600"}, {"-1/2", "-1/20"});
        m[FormulaId::D2_4] = add1d(FormulaId::D2_4, {"-12/5", "6/5"}, {"-1/10"});
        m[FormulaId::D2_6] = add1d(FormulaId::D2_6, {"-51/22", "12/11", "3/44"}, {"-2/11"});
        m[FormulaId::D2_8] =
            add1d(FormulaId::D2_8, {"-265/131", "320/393", "155/786"}, {"-344/1179", "-23/2358"});
        m[FormulaId::D2_10] = add1d(FormulaId::D2_10,
                                    {"-14335/8091", "1065/1798", "519/1798", "79/16182"},
                                    {"-334/899", "-43/1798"});
        auto add2d = [&m, &R](FormulaId id, const char* center, const char* near_axis,
                              const char* diag, const char* far_axis, const char* beta_axis,
                              const char* beta_diag) {
            FlatWeightSet w;
            w.id = id;
            w.alpha[{0, 0}] = R(center);
            const StencilSpec& spec = catalog(id);
            for (Offset o : spec.s_offsets()) {
                if (o.x == 0 && o.y == 0) continue;
                long k = o.sq_norm();
                w.alpha[o] = R(k == 1 ? near_axis : (k == 2 ? diag : far_axis));
            }
            for (Offset o : spec.mu_offsets()) w.beta[o] = R(o.sq_norm() == 1 ? beta_axis : beta_diag);
            return w;
        };
        m[FormulaId::Lap2] = add2d(FormulaId::Lap2, "-4", "1", "", "", "", "");
        m[FormulaId::Lap4] = add2d(FormulaId::Lap4, "-5", "1", "1/4", "", "-1/8", "");
        m[FormulaId::Lap6] =
            add2d(FormulaId::Lap6, "-105/23", "12/23", "12/23", "9/92", "-5/23", "-1/46");
        return m;
    }();
    return table.at(id);
}

FlatWeightSet weights_flat(FormulaId id) {
    const SeriesWeightSet& sw = weights_series(id, KernelKind::Gaussian, 2);
    FlatWeightSet w;
    w.id = id;
    for (const auto& [o, s] : sw.alpha) w.alpha[o] = s[0];
    for (const auto& [o, s] : sw.beta) w.beta[o] = s[0];
    const FlatWeightSet& ref = flat_reference(id);
    auto check = [&](const std::map<Offset, Rational>& got, const std::map<Offset, Rational>& want,
                     const char* kind) {
        if (got.size() != want.size())
            throw FlatLimitMismatch(to_string(id) + ": " + kind + " node set differs");
        for (const auto& [o, r] : want) {
            auto it = got.find(o);
            if (it == got.end() || it->second != r)
                throw FlatLimitMismatch(to_string(id) + ": " + kind + "[" + std::to_string(o.x) +
                                        "," + std::to_string(o.y) + "] = " +
                                        (it == got.end() ? std::string("missing")
                                                         : to_string(it->second)) +
                                        ", reference " + to_string(r));
        }
    };
    check(w.alpha, ref.alpha, "alpha");
    check(w.beta, ref.beta, "beta");
    return w;
}

double t_switch(FormulaId id, KernelKind kernel) {
    if (kernel == KernelKind::Gaussian) return 0.25;
    // Multiquadric series converge only for t < 1/k_max (branch point of
    // (1+kt)^{1/2}); stay well inside.
    return std::min(0.25, 0.25 / static_cast<double>(catalog(id).max_sq_distance()));
}

WeightSet weights_auto(FormulaId id, KernelKind kernel, double eps, double h, std::size_t n) {
    const double t = eps * h * eps * h;
    if (t <= t_switch(id, kernel)) return weights_series(id, kernel, n).at(eps, h);
    return weights_numeric(id, kernel, eps, h);
}

namespace {

std::string offset_key(Offset o, int dim) {
    return dim == 1 ? std::to_string(o.x) : std::to_string(o.x) + "," + std::to_string(o.y);
}

}  // namespace

std::string to_text(const SeriesWeightSet& w) {
    const StencilSpec& spec = catalog(w.id);
    std::ostringstream os;
    os << "{\n  \"formula\": \"" << to_string(w.id) << "\",\n  \"kernel\": \""
       << to_string(w.kernel) << "\",\n  \"trunc_len\": " << w.trunc_len << ",\n";
    auto emit = [&os, &spec](const char* name, const std::map<Offset, TruncatedSeries>& m) {
        os << "  \"" << name << "\": {";
        bool first = true;
        for (const auto& [o, s] : m) {
            os << (first ? "\n" : ",\n") << "    \"" << offset_key(o, spec.dimension()) << "\": [";
            for (std::size_t i = 0; i < s.trunc_len(); ++i)
                os << (i ? ", " : "") << '"' << to_string(s[i]) << '"';
            os << ']';
            first = false;
        }
        os << "\n  },\n";
    };
    emit("alpha", w.alpha);
    emit("beta", w.beta);
    os << "  \"gamma\": [";
    for (std::size_t g = 0; g < w.gamma.size(); ++g) {
        os << (g ? ", " : "") << '[';
        for (std::size_t i = 0; i < w.gamma[g].trunc_len(); ++i)
            os << (i ? ", " : "") << '"' << to_string(w.gamma[g][i]) << '"';
        os << ']';
    }
    os << "]\n}\n";
    return os.str();
}

std::string to_text(const WeightSet& w) {
    const StencilSpec& spec = catalog(w.id);
    std::ostringstream os;
    char buf[64];
    auto num = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    os << "{\n  \"formula\": \"" << to_string(w.id) << "\",\n  \"kernel\": \""
       << to_string(w.kernel) << "\",\n  \"eps\": " << num(w.eps) << ",\n  \"h\": " << num(w.h)
       << ",\n  \"source\": \""
       << (w.source == WeightSource::Series ? "series"
                                            : (w.source == WeightSource::Numeric ? "numeric" : "flat"))
       << "\",\n  \"rcond\": " << num(w.rcond)
       << ",\n  \"ill_conditioned\": " << (w.ill_conditioned ? "true" : "false") << ",\n";
    auto emit = [&](const char* name, const std::map<Offset, double>& m, bool denondim) {
        os << "  \"" << name << "\": {";
        bool first = true;
        const double scale =
            denondim ? std::pow(w.h, -operator_order(spec.op)) : 1.0;
        for (const auto& [o, v] : m) {
            os << (first ? "\n" : ",\n") << "    \"" << offset_key(o, spec.dimension())
               << "\": " << num(v * scale);
            first = false;
        }
        os << "\n  },\n";
    };
    emit("alpha", w.alpha, true);
    emit("beta", w.beta, false);
    os << "  \"gamma\": [";
    for (std::size_t g = 0; g < w.gamma.size(); ++g) os << (g ? ", " : "") << num(w.gamma[g]);
    os << "]\n}\n";
    return os.str();
}

}  // namespace rbfhfd
