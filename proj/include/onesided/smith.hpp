#pragma once

#include <vector>

#include "onesided/int_matrix.hpp"

namespace onesided {

// Smith normal form U*A*V = D: U, V unimodular, D diagonal with non-negative
// entries and d_1 | d_2 | ...  det_u, det_v are tracked exactly (always +-1).
// In builds with assertions the product U*A*V is re-verified on every call.
struct SmithResult {
    IntMatrix d, u, v;
    int det_u = 1;
    int det_v = 1;

    std::vector<Int> invariant_factors() const;  // the nonzero diagonal of d
};

SmithResult smith_normal_form(const IntMatrix& a);

}  // namespace onesided
