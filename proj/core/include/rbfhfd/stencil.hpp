#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbfhfd/kernels.hpp"

namespace rbfhfd {

enum class FormulaId { D1_4, D1_6, D1_8, D1_10, D2_4, D2_6, D2_8, D2_10, Lap2, Lap4, Lap6 };

constexpr std::array<FormulaId, 11> kAllFormulas = {
    FormulaId::D1_4, FormulaId::D1_6, FormulaId::D1_8, FormulaId::D1_10,
    FormulaId::D2_4, FormulaId::D2_6, FormulaId::D2_8, FormulaId::D2_10,
    FormulaId::Lap2, FormulaId::Lap4, FormulaId::Lap6,
};

/// One signed symmetry class of function-value nodes. The reduced unknown
/// multiplies sum_i sign_i * u(offset_i); the first member is the class
/// representative used for the collocation row.
struct AlphaClass {
    std::vector<Offset> offsets;
    std::vector<int> signs;  // +1 / -1, same length as offsets
};

struct StencilSpec {
    FormulaId id;
    OperatorKind op;
    int order;                                   // nominal accuracy m
    std::vector<AlphaClass> alpha_classes;       // partition of S
    std::vector<std::vector<Offset>> beta_classes;  // partition of mu (signs all +1)
    int poly_terms;                              // 1 in 1D; 3 ({1, x, y}) in 2D

    std::vector<Offset> s_offsets() const;
    std::vector<Offset> mu_offsets() const;
    int dimension() const { return op == OperatorKind::Laplacian2D ? 2 : 1; }
    /// Largest squared node-pair distance appearing in any block entry.
    long max_sq_distance() const;
};

const StencilSpec& catalog(FormulaId id);

std::string to_string(FormulaId id);                       // "d1-4" ... "lap-6"
std::optional<FormulaId> parse_formula(std::string_view);  // nullopt on unknown

}  // namespace rbfhfd
