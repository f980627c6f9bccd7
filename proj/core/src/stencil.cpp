#include "rbfhfd/stencil.hpp"

#include <algorithm>
#include <map>

namespace rbfhfd {

namespace {

AlphaClass origin() { return {{{0, 0}}, {1}}; }

// {-i, +i} with u_{-i} sign +1 and u_{+i} sign `sgn` (antisymmetric for the
// first derivative, symmetric for the even operators).
AlphaClass pair1d(int i, int sgn) { return {{{-i, 0}, {i, 0}}, {1, sgn}}; }

const std::vector<Offset> kAxis = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
const std::vector<Offset> kDiag = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
const std::vector<Offset> kAxisFar = {{2, 0}, {0, 2}, {-2, 0}, {0, -2}};

AlphaClass all_plus(std::vector<Offset> offs) {
    AlphaClass c;
    c.signs.assign(offs.size(), 1);
    c.offsets = std::move(offs);
    return c;
}

std::vector<Offset> cat(std::vector<Offset> a, const std::vector<Offset>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<Offset> mu1d(std::initializer_list<int> is) {
    std::vector<Offset> v;
    for (int i : is) v.push_back({i, 0});
    return v;
}

std::map<FormulaId, StencilSpec> build_catalog() {
    using OK = OperatorKind;
    std::map<FormulaId, StencilSpec> c;
    auto mk1d = [](FormulaId id, OK op, int order, int width, int sgn,
                   std::vector<std::vector<Offset>> beta) {
        StencilSpec s{id, op, order, {}, std::move(beta), 1};
        for (int i = width; i >= 1; --i) s.alpha_classes.push_back(pair1d(i, sgn));
        s.alpha_classes.push_back(origin());
        return s;
    };
    c.emplace(FormulaId::D1_4,
              mk1d(FormulaId::D1_4, OK::FirstDerivative1D, 4, 1, -1, {mu1d({-1, 1})}));
    c.emplace(FormulaId::D1_6,
              mk1d(FormulaId::D1_6, OK::FirstDerivative1D, 6, 2, -1, {mu1d({-1, 1})}));
    c.emplace(FormulaId::D1_8, mk1d(FormulaId::D1_8, OK::FirstDerivative1D, 8, 2, -1,
                                    {mu1d({-2, 2}), mu1d({-1, 1})}));
    c.emplace(FormulaId::D1_10, mk1d(FormulaId::D1_10, OK::FirstDerivative1D, 10, 3, -1,
                                     {mu1d({-2, 2}), mu1d({-1, 1})}));
    c.emplace(FormulaId::D2_4,
              mk1d(FormulaId::D2_4, OK::SecondDerivative1D, 4, 1, 1, {mu1d({-1, 1})}));
    c.emplace(FormulaId::D2_6,
              mk1d(FormulaId::D2_6, OK::SecondDerivative1D, 6, 2, 1, {mu1d({-1, 1})}));
    c.emplace(FormulaId::D2_8, mk1d(FormulaId::D2_8, OK::SecondDerivative1D, 8, 2, 1,
                                    {mu1d({-2, 2}), mu1d({-1, 1})}));
    c.emplace(FormulaId::D2_10, mk1d(FormulaId::D2_10, OK::SecondDerivative1D, 10, 3, 1,
                                     {mu1d({-2, 2}), mu1d({-1, 1})}));
    // Five-point star, no operator nodes, augmentation {1, x, y}.
    c.emplace(FormulaId::Lap2,
              StencilSpec{FormulaId::Lap2, OK::Laplacian2D, 2,
                          {origin(), all_plus(kAxis)}, {}, 3});
    // 3x3 box; operator values on the four axis neighbours.
    c.emplace(FormulaId::Lap4,
              StencilSpec{FormulaId::Lap4, OK::Laplacian2D, 4,
                          {origin(), all_plus(kAxis), all_plus(kDiag)}, {kAxis}, 3});
    // 3x3 box plus far axis nodes; all eight near neighbours share one weight
    // (their collocation row is taken at the axis representative), operator
    // values on the eight near neighbours in two classes.
    c.emplace(FormulaId::Lap6,
              StencilSpec{FormulaId::Lap6, OK::Laplacian2D, 6,
                          {origin(), all_plus(cat(kAxis, kDiag)), all_plus(kAxisFar)},
                          {kAxis, kDiag}, 3});
    return c;
}

const std::map<FormulaId, StencilSpec>& catalog_map() {
    static const std::map<FormulaId, StencilSpec> c = build_catalog();
    return c;
}

}  // namespace

std::vector<Offset> StencilSpec::s_offsets() const {
    std::vector<Offset> out;
    for (const auto& c : alpha_classes) out.insert(out.end(), c.offsets.begin(), c.offsets.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Offset> StencilSpec::mu_offsets() const {
    std::vector<Offset> out;
    for (const auto& c : beta_classes) out.insert(out.end(), c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

long StencilSpec::max_sq_distance() const {
    long m = 0;
    auto s = s_offsets();
    for (const Offset& a : s)
        for (const Offset& b : s) {
            Offset d{a.x - b.x, a.y - b.y};
            m = std::max(m, d.sq_norm());
        }
    return m;
}

const StencilSpec& catalog(FormulaId id) { return catalog_map().at(id); }

std::string to_string(FormulaId id) {
    switch (id) {
        case FormulaId::D1_4: return "d1-4";
        case FormulaId::D1_6: return "d1-6";
        case FormulaId::D1_8: return "d1-8";
        case FormulaId::D1_10: return "d1-10";
        case FormulaId::D2_4: return "d2-4";
        case FormulaId::D2_6: return "d2-6";
        case FormulaId::D2_8: return "d2-8";
        case FormulaId::D2_10: return "d2-10";
        case FormulaId::Lap2: return "lap-2";
        case FormulaId::Lap4: return "lap-4";
        case FormulaId::Lap6: return "lap-6";
    }
    return "?";
}

std::optional<FormulaId> parse_formula(std::string_view s) {
    for (FormulaId id : kAllFormulas)
        if (to_string(id) == s) return id;
    return std::nullopt;
}

}  // namespace rbfhfd
