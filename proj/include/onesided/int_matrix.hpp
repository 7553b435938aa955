#pragma once

#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "onesided/numeric.hpp"

namespace onesided {

// Dense matrix of arbitrary-precision integers, row-major.  Intermediate
// Smith-form entries overflow machine words even for small presentations,
// so entries are Int throughout.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    IntMatrix(int rows, int cols, std::initializer_list<Int> entries);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Int& operator()(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }

    bool operator==(const IntMatrix&) const = default;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row_multiple(int dst, int src, const Int& f);  // row dst += f * row src
    void add_col_multiple(int dst, int src, const Int& f);
    void negate_row(int i);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

}  // namespace onesided
