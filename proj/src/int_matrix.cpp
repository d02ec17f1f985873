#include "cwl/int_matrix.hpp"

#include <algorithm>

#include "cwl/errors.hpp"

namespace cwl {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    n_ = static_cast<int>(rows.size());
    a_.assign(static_cast<size_t>(n_) * n_, 0);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_) throw ArgumentError("matrix rows must be square");
        int j = 0;
        for (long long v : row) at(i, j++) = v;
        ++i;
    }
}

bool IntMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::submatrix(const std::vector<int>& keep) const {
    IntMatrix s(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j)
            s.at(static_cast<int>(i), static_cast<int>(j)) = at(keep[i], keep[j]);
    return s;
}

Integer determinant(const IntMatrix& m) {
    int n = m.dim();
    if (n == 0) return 1;
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    Integer sign = 1;
    Integer prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Integer principal_minor_det(const IntMatrix& m, const std::vector<int>& deleted) {
    std::vector<bool> drop(m.dim(), false);
    for (int i : deleted) {
        if (i < 0 || i >= m.dim()) throw IndexError("minor index out of range");
        drop[i] = true;
    }
    std::vector<int> keep;
    for (int i = 0; i < m.dim(); ++i)
        if (!drop[i]) keep.push_back(i);
    return determinant(m.submatrix(keep));
}

std::vector<Integer> char_poly(const IntMatrix& m) {
    // det(xI - m) = sum_k (-1)^k e_k x^{n-k}, e_k = sum of k x k principal minors.
    int n = m.dim();
    std::vector<Integer> coeff(n + 1, 0);
    coeff[n] = 1;
    std::vector<int> pick;
    for (int k = 1; k <= n; ++k) {
        Integer ek = 0;
        pick.assign(k, 0);
        for (int i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            ek += determinant(m.submatrix(pick));
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
        coeff[n - k] = (k % 2 ? -ek : ek);
    }
    return coeff;
}

Inertia inertia(const IntMatrix& m) {
    if (!m.is_symmetric()) throw ArgumentError("inertia requires a symmetric matrix");
    int n = m.dim();
    auto p = char_poly(m);

    Inertia r;
    int low = 0;
    while (low <= n && p[low] == 0) ++low;
    r.nullity = low;

    // All roots of the reduced factor are real and nonzero, so Descartes'
    // rule is exact: positive roots = sign variations in p[low..n].
    int variations = 0;
    int last = 0;
    for (int k = low; k <= n; ++k) {
        if (p[k] == 0) continue;
        int s = p[k] > 0 ? 1 : -1;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    r.positive = variations;
    r.negative = n - r.nullity - r.positive;
    return r;
}

}  // namespace cwl
