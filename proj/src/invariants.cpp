#include "cwl/invariants.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "cwl/errors.hpp"

namespace cwl {

namespace {

std::vector<int> members(Subset s) {
    std::vector<int> v;
    for (int i = 0; i < 31; ++i)
        if (s & (Subset{1} << i)) v.push_back(i);
    return v;
}

void check_indices(const IntMatrix& m, int i, int j, const std::vector<int>& through) {
    auto in_range = [&](int x) { return x >= 0 && x < m.dim(); };
    if (!in_range(i) || !in_range(j)) throw ArgumentError("chain endpoint out of range");
    std::vector<int> all = through;
    all.push_back(i);
    if (j != i) all.push_back(j);
    std::sort(all.begin(), all.end());
    for (size_t k = 0; k < all.size(); ++k) {
        if (!in_range(all[k])) throw ArgumentError("chain index out of range");
        if (k > 0 && all[k] == all[k - 1]) throw ArgumentError("chain indices must be distinct");
    }
}

// combinations of size k from a sorted pool, as (chosen, rest)
void for_each_split(const std::vector<int>& pool, int k,
                    const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn) {
    const int n = static_cast<int>(pool.size());
    if (k < 0 || k > n) return;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        std::vector<int> chosen, rest;
        int t = 0;
        for (int i = 0; i < n; ++i) {
            if (t < k && pick[t] == i) { chosen.push_back(pool[i]); ++t; }
            else rest.push_back(pool[i]);
        }
        fn(chosen, rest);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j2 = i + 1; j2 < k; ++j2) pick[j2] = pick[j2 - 1] + 1;
    }
}

}  // namespace

Rational chain_product(const IntMatrix& linking, int i, int j, const std::vector<int>& through) {
    check_indices(linking, i, j, through);
    if (through.empty()) return Rational(linking.at(i, j));  // fr_i when i == j
    std::vector<int> seq = through;
    std::sort(seq.begin(), seq.end());
    Rational total = 0;
    do {
        Rational term(linking.at(i, seq.front()));
        for (size_t t = 0; t + 1 < seq.size(); ++t) term *= Rational(linking.at(seq[t], seq[t + 1]));
        term *= Rational(linking.at(seq.back(), j));
        total += term;
    } while (std::next_permutation(seq.begin(), seq.end()));
    return total;
}

void for_each_partition2(
    const std::vector<int>& pool, int a,
    const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn) {
    const int b = static_cast<int>(pool.size()) - a;
    for_each_split(pool, a, [&](const std::vector<int>& A, const std::vector<int>& B) {
        // partitions with tied sizes are unordered: keep the half holding the
        // least element
        if (a == b && !A.empty() && !B.empty() && B.front() < A.front()) return;
        fn(A, B);
    });
}

void for_each_partition3(
    const std::vector<int>& pool, int a, int b,
    const std::function<void(const std::vector<int>&, const std::vector<int>&,
                             const std::vector<int>&)>& fn) {
    const int c = static_cast<int>(pool.size()) - a - b;
    for_each_split(pool, a, [&](const std::vector<int>& A, const std::vector<int>& restA) {
        for_each_split(restA, b, [&](const std::vector<int>& B, const std::vector<int>& C) {
            if (a == b && !A.empty() && !B.empty() && B.front() < A.front()) return;
            if (b == c && !B.empty() && !C.empty() && C.front() < B.front()) return;
            fn(A, B, C);
        });
    });
}

namespace {

Rational u_invariant_impl(const LinkInvariantData& data, Subset I, std::map<Subset, Rational>& memo) {
    if (auto it = memo.find(I); it != memo.end()) return it->second;
    const int m = std::popcount(I);
    Rational r;
    if (m == 1) {
        r = data.conway_coeff(I, 2) - Rational(1, 24);
    } else {
        r = data.conway_coeff(I, m + 1);
        for (int i : members(I)) {
            Subset rest = I & ~(Subset{1} << i);
            Rational lk_sum = 0;
            for (int j : members(rest)) lk_sum += data.l(i, j);
            r -= u_invariant_impl(data, rest, memo) * lk_sum;
        }
    }
    memo[I] = r;
    return r;
}

}  // namespace

Rational u_invariant(const LinkInvariantData& data, Subset I) {
    if (I == 0) throw ArgumentError("U needs a nonempty component set");
    std::map<Subset, Rational> memo;
    return u_invariant_impl(data, I, memo);
}

Rational partition_sum_two(const IntMatrix& linking, int a, int b) {
    if (!linking.is_symmetric()) throw ArgumentError("linking matrix must be symmetric");
    if (a < b || b < 0 || a <= 0) throw ArgumentError("profile must satisfy a >= b >= 0, a > 0");
    const int n = linking.dim();
    if (a + b + 1 != n) throw ArgumentError("profile does not match component count");
    Rational total = 0;
    for (int i = 0; i < n; ++i) {
        std::vector<int> pool;
        for (int t = 0; t < n; ++t)
            if (t != i) pool.push_back(t);
        for_each_partition2(pool, a, [&](const std::vector<int>& A, const std::vector<int>& B) {
            total += chain_product(linking, i, i, A) * chain_product(linking, i, i, B);
        });
    }
    return total / 4;
}

Rational partition_sum_three(const IntMatrix& linking, int a, int b, int c) {
    if (!linking.is_symmetric()) throw ArgumentError("linking matrix must be symmetric");
    if (a < b || b < c || c < 0 || a <= 0)
        throw ArgumentError("profile must satisfy a >= b >= c >= 0, a > 0");
    const int n = linking.dim();
    if (a + b + c + 2 != n) throw ArgumentError("profile does not match component count");
    Rational total = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> pool;
            for (int t = 0; t < n; ++t)
                if (t != i && t != j) pool.push_back(t);
            if (b == 0 && c == 0) {
                total += Rational(linking.at(i, j)) * Rational(linking.at(i, j)) *
                         chain_product(linking, i, j, pool);
            } else {
                for_each_partition3(pool, a, b,
                                    [&](const std::vector<int>& A, const std::vector<int>& B,
                                        const std::vector<int>& C) {
                                        total += chain_product(linking, i, j, A) *
                                                 chain_product(linking, i, j, B) *
                                                 chain_product(linking, i, j, C);
                                    });
            }
        }
    if (b == 0 && c == 0) total /= 2;
    return total;
}

namespace {

Rational mu_small(const LinkInvariantData& data, Subset I, bool via_coefficients) {
    const auto idx = members(I);
    if (idx.size() == 1) {
        const Rational fr = data.l(idx[0], idx[0]);
        const Rational c2 = data.conway_coeff(I, 2);
        if (!via_coefficients) return fr * fr / 24 - c2 + Rational(1, 12);
        // 2 [ (1/48) C[trivial] + (1/6) C[parallel] - (1/3) C[crossed] ]
        const Rational c_plus = fr * fr / 8 + Rational(1, 24) - c2;
        const Rational c_minus = c2 - Rational(1, 24);
        return 2 * (Rational(1, 48) + c_plus / 6 - c_minus / 3);
    }
    const int i = idx[0], j = idx[1];
    const Rational lk = data.l(i, j);
    const Rational fi = data.l(i, i), fj = data.l(j, j);
    const Rational c2i = data.conway_coeff(Subset{1} << i, 2);
    const Rational c2j = data.conway_coeff(Subset{1} << j, 2);
    if (!via_coefficients) {
        const Rational c3 = data.conway_coeff(I, 3);
        return lk * lk * lk / 12 + (fi + fj) * lk * lk / 12 +
               lk * (c2i + c2j - Rational(1, 12)) - c3;
    }
    // (1/2)(C[D(0,0,0) pair] = lk^3/6) + (1/3)(C[D(1,0) pairs] = (1/4)(fi+fj)lk^2) - U_3
    return lk * lk * lk / 12 + (fi + fj) * lk * lk / 12 - u_invariant(data, I);
}

}  // namespace

Rational mu(const LinkInvariantData& data, Subset I) {
    if (I == 0) throw ArgumentError("mu needs a nonempty component set");
    const auto idx = members(I);
    const int m = static_cast<int>(idx.size());
    if (m <= 2) return mu_small(data, I, false);

    const int n = m - 2;
    const IntMatrix& L = data.linking();

    // (1/12) sum over (a,b) profiles of the raw double sums
    Rational term_ab = 0;
    for (int a = n + 1; 2 * a >= n + 1; --a) {
        for (int i : idx) {
            std::vector<int> pool;
            for (int t : idx)
                if (t != i) pool.push_back(t);
            for_each_partition2(pool, a, [&](const std::vector<int>& A, const std::vector<int>& B) {
                term_ab += chain_product(L, i, i, A) * chain_product(L, i, i, B);
            });
        }
    }

    // (1/2) sum over (a,b,c) profiles with (b,c) != (0,0)
    Rational term_abc = 0;
    for (int a = n; a >= 1; --a)
        for (int b = std::min(n - a, a); b >= 1; --b) {
            const int c = n - a - b;
            if (c > b || c < 0) continue;
            for (size_t s = 0; s < idx.size(); ++s)
                for (size_t t = s + 1; t < idx.size(); ++t) {
                    std::vector<int> pool;
                    for (int x : idx)
                        if (x != idx[s] && x != idx[t]) pool.push_back(x);
                    for_each_partition3(pool, a, b,
                                        [&](const std::vector<int>& A, const std::vector<int>& B,
                                            const std::vector<int>& C) {
                                            term_abc += chain_product(L, idx[s], idx[t], A) *
                                                        chain_product(L, idx[s], idx[t], B) *
                                                        chain_product(L, idx[s], idx[t], C);
                                        });
                }
        }

    // (1/4) sum_{i<j} l_{i,j}^2 L_{i,j,rest}  (the (n,0,0) profile)
    Rational term_sq = 0;
    for (size_t s = 0; s < idx.size(); ++s)
        for (size_t t = s + 1; t < idx.size(); ++t) {
            std::vector<int> pool;
            for (int x : idx)
                if (x != idx[s] && x != idx[t]) pool.push_back(x);
            term_sq += data.l(idx[s], idx[t]) * data.l(idx[s], idx[t]) *
                       chain_product(L, idx[s], idx[t], pool);
        }

    return term_ab / 12 + term_abc / 2 + term_sq / 4 - u_invariant(data, I);
}

Rational mu_via_decomposition(const LinkInvariantData& data, Subset I) {
    if (I == 0) throw ArgumentError("mu needs a nonempty component set");
    const auto idx = members(I);
    const int m = static_cast<int>(idx.size());
    if (m <= 2) return mu_small(data, I, true);

    const int n = m - 2;
    const IntMatrix sub = data.linking().submatrix(idx);

    Rational total = 0;
    for (int a = n + 1; 2 * a >= n + 1; --a) total += partition_sum_two(sub, a, n + 1 - a) / 3;
    for (int a = n; a >= 1; --a)
        for (int b = std::min(n - a, a); b >= 0; --b) {
            const int c = n - a - b;
            if (c > b || c < 0) continue;
            total += partition_sum_three(sub, a, b, c) / 2;
        }
    return total - u_invariant(data, I);
}

Rational conway_from_un(const LinkInvariantData& data, Subset I) {
    const auto idx = members(I);
    if (idx.size() < 2) throw ArgumentError("needs at least two components");
    Rational r = u_invariant(data, I);
    for (int i : idx) {
        Subset rest = I & ~(Subset{1} << i);
        Rational lk_sum = 0;
        for (int j : members(rest)) lk_sum += data.l(i, j);
        r += u_invariant(data, rest) * lk_sum;
    }
    return r;
}

}  // namespace cwl
