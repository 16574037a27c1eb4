#pragma once

// Dense exact matrices over Rational. Elimination is fraction-free
// (Bareiss) on a denominator-cleared integer copy, which keeps entry
// growth under control for matrices like A_12.

#include <stdexcept>
#include <vector>

#include "segrehilb/rational.hpp"

namespace segrehilb {

class RationalMatrix {
public:
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    int rows_, cols_;
    std::vector<Rational> entries_;
};

namespace detail {

// Clears denominators row by row (does not change the kernel or the
// vanishing of the determinant); returns the per-row scale factors.
inline std::vector<Int> to_integer_rows(const RationalMatrix& m, std::vector<std::vector<Int>>& out) {
    out.assign(static_cast<size_t>(m.rows()), std::vector<Int>(static_cast<size_t>(m.cols())));
    std::vector<Int> scales(static_cast<size_t>(m.rows()), 1);
    for (int r = 0; r < m.rows(); ++r) {
        Int lcm = 1;
        for (int c = 0; c < m.cols(); ++c)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).den().get_mpz_t());
        scales[static_cast<size_t>(r)] = lcm;
        for (int c = 0; c < m.cols(); ++c) {
            Rational v = Rational(lcm) * m.at(r, c);
            out[static_cast<size_t>(r)][static_cast<size_t>(c)] = v.num();
        }
    }
    return scales;
}

// Fraction-free Gaussian elimination (Bareiss). Returns the pivot columns
// in order; rows end up in echelon form. sign is flipped on row swaps.
inline std::vector<int> bareiss_echelon(std::vector<std::vector<Int>>& a, int& sign) {
    sign = 1;
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivots;
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r) { std::swap(a[static_cast<size_t>(p)], a[static_cast<size_t>(r)]); sign = -sign; }
        const Int piv = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
        for (int i = r + 1; i < rows; ++i) {
            const Int head = a[static_cast<size_t>(i)][static_cast<size_t>(c)];
            for (int j = c; j < cols; ++j) {
                Int t = a[static_cast<size_t>(i)][static_cast<size_t>(j)] * piv
                      - head * a[static_cast<size_t>(r)][static_cast<size_t>(j)];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = t;
            }
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

inline int rank_exact(const RationalMatrix& m) {
    std::vector<std::vector<Int>> a;
    detail::to_integer_rows(m, a);
    int sign;
    return static_cast<int>(detail::bareiss_echelon(a, sign).size());
}

/// Exact determinant of a square matrix by Bareiss elimination.
inline Rational det_exact(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    if (m.rows() == 0) return Rational(1);
    std::vector<std::vector<Int>> a;
    std::vector<Int> scales = detail::to_integer_rows(m, a);
    int sign;
    std::vector<int> pivots = detail::bareiss_echelon(a, sign);
    if (static_cast<int>(pivots.size()) < m.rows()) return Rational(0);
    // Bareiss leaves the determinant of the integer matrix as the last pivot.
    Int det = a[static_cast<size_t>(m.rows() - 1)][static_cast<size_t>(m.cols() - 1)];
    Int denom = 1;
    for (const Int& s : scales) denom *= s;
    return Rational(sign * det, denom);
}

/// Exact basis of the right kernel; an empty list means trivial kernel.
/// Each free column yields one basis vector (free coordinate set to 1).
inline std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    std::vector<std::vector<Int>> a;
    detail::to_integer_rows(m, a);
    int sign;
    std::vector<int> pivots = detail::bareiss_echelon(a, sign);
    int cols = m.cols();
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<std::vector<Rational>> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[static_cast<size_t>(fc)]) continue;
        std::vector<Rational> v(static_cast<size_t>(cols));
        v[static_cast<size_t>(fc)] = 1;
        // Back-substitute through the echelon rows.
        for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
            int pc = pivots[static_cast<size_t>(r)];
            Rational s = 0;
            for (int j = pc + 1; j < cols; ++j)
                s += Rational(a[static_cast<size_t>(r)][static_cast<size_t>(j)]) * v[static_cast<size_t>(j)];
            v[static_cast<size_t>(pc)] = -s / Rational(a[static_cast<size_t>(r)][static_cast<size_t>(pc)]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace segrehilb
