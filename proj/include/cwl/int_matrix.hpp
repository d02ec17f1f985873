#pragma once

// Dense integer matrices at surgery-presentation scale (a handful of rows),
// with exact determinants, principal minors and eigenvalue sign counts.

#include <vector>

#include "cwl/rational.hpp"

namespace cwl {

class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    int dim() const { return n_; }
    Integer& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Integer& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    bool is_symmetric() const;

    // Keeps the rows/columns listed in `keep` (in the given order).
    IntMatrix submatrix(const std::vector<int>& keep) const;

    bool operator==(const IntMatrix& o) const = default;

private:
    int n_ = 0;
    std::vector<Integer> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination. det of the
// empty matrix is 1.
Integer determinant(const IntMatrix& m);

// Determinant of the principal minor with rows/columns `deleted` removed.
// Deleting everything yields the empty matrix, hence 1.
Integer principal_minor_det(const IntMatrix& m, const std::vector<int>& deleted);

struct Inertia {
    int positive = 0;
    int negative = 0;
    int nullity = 0;
};

// Exact eigenvalue sign counts of a symmetric integer matrix: the
// characteristic polynomial has integer coefficients and only real roots,
// so the nullity is the trailing-zero count and the positive-root count is
// the Descartes sign-variation count of the remaining factor.
Inertia inertia(const IntMatrix& m);

// Coefficients of det(xI - m), little-endian in x (test hook for inertia).
std::vector<Integer> char_poly(const IntMatrix& m);

}  // namespace cwl
