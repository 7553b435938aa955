#include "onesided/smith.hpp"

#include <cassert>
#include <cstdlib>

namespace onesided {

std::vector<Int> SmithResult::invariant_factors() const {
    std::vector<Int> out;
    int n = std::min(d.rows(), d.cols());
    for (int i = 0; i < n; ++i)
        if (d(i, i) != 0) out.push_back(d(i, i));
    return out;
}

namespace {

// Smallest nonzero |entry| of d[t.., t..]; ties broken by row then column.
bool find_pivot(const IntMatrix& d, int t, int& pr, int& pc) {
    bool found = false;
    Int best;
    for (int i = t; i < d.rows(); ++i)
        for (int j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            Int v = abs(d(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pr = i;
                pc = j;
            }
        }
    return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
    SmithResult r;
    r.d = a;
    r.u = IntMatrix::identity(a.rows());
    r.v = IntMatrix::identity(a.cols());

    int m = a.rows(), n = a.cols();
    int steps = std::min(m, n);
    for (int t = 0; t < steps; ++t) {
        int pr, pc;
        if (!find_pivot(r.d, t, pr, pc)) break;  // remainder is zero

        for (;;) {
            find_pivot(r.d, t, pr, pc);
            if (pr != t) {
                r.d.swap_rows(t, pr);
                r.u.swap_rows(t, pr);
                r.det_u = -r.det_u;
            }
            if (pc != t) {
                r.d.swap_cols(t, pc);
                r.v.swap_cols(t, pc);
                r.det_v = -r.det_v;
            }

            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (r.d(i, t) == 0) continue;
                Int f = -(r.d(i, t) / r.d(t, t));
                r.d.add_row_multiple(i, t, f);
                r.u.add_row_multiple(i, t, f);
                if (r.d(i, t) != 0) clean = false;  // remainder: pivot shrinks next pass
            }
            for (int j = t + 1; j < n; ++j) {
                if (r.d(t, j) == 0) continue;
                Int f = -(r.d(t, j) / r.d(t, t));
                r.d.add_col_multiple(j, t, f);
                r.v.add_col_multiple(j, t, f);
                if (r.d(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot divides everything below-right, or we merge the offending
            // row and reduce again.
            bool divides = true;
            for (int i = t + 1; i < m && divides; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (r.d(i, j) % r.d(t, t) != 0) {
                        r.d.add_row_multiple(t, i, 1);
                        r.u.add_row_multiple(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }

        if (r.d(t, t) < 0) {
            r.d.negate_row(t);
            r.u.negate_row(t);
            r.det_u = -r.det_u;
        }
    }

    assert(r.u * a * r.v == r.d);
    return r;
}

}  // namespace onesided
