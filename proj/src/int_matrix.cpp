#include "onesided/int_matrix.hpp"

#include <ostream>
#include <stdexcept>

namespace onesided {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    a_.assign(static_cast<std::size_t>(rows) * cols, Int(0));
}

IntMatrix::IntMatrix(int rows, int cols, std::initializer_list<Int> entries)
    : IntMatrix(rows, cols) {
    if (entries.size() != a_.size())
        throw std::invalid_argument("IntMatrix: entry count does not match dimensions");
    std::size_t i = 0;
    for (const Int& e : entries) a_[i++] = e;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& f) {
    for (int c = 0; c < cols_; ++c) (*this)(dst, c) += f * (*this)(src, c);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& f) {
    for (int r = 0; r < rows_; ++r) (*this)(r, dst) += f * (*this)(r, src);
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix multiply: shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    for (int i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < m.cols(); ++j) os << m(i, j) << (j + 1 < m.cols() ? " " : "");
        os << (i + 1 < m.rows() ? "\n" : "]");
    }
    return os;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    int n = m.rows();
    if (n == 0) return 1;
    IntMatrix w = m;
    Int prev = 1;
    int sign = 1;
    for (int t = 0; t < n - 1; ++t) {
        if (w(t, t) == 0) {
            int r = t + 1;
            while (r < n && w(r, t) == 0) ++r;
            if (r == n) return 0;
            w.swap_rows(t, r);
            sign = -sign;
        }
        for (int i = t + 1; i < n; ++i)
            for (int j = t + 1; j < n; ++j) {
                w(i, j) = w(t, t) * w(i, j) - w(i, t) * w(t, j);
                w(i, j) /= prev;  // Bareiss: division is exact
            }
        prev = w(t, t);
    }
    return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

}  // namespace onesided
