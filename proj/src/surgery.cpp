#include "cwl/surgery.hpp"

#include <bit>
#include <vector>

#include "cwl/errors.hpp"

namespace cwl {

namespace {

int parity_sign(int k) { return k % 2 ? -1 : +1; }

// sum over nonempty subsets I of (-1)^{n-|I|} det(L with I deleted) mu_|I|(L_I)
Rational subset_sum(const LinkInvariantData& data) {
    const int n = data.num_components();
    Rational total = 0;
    for (Subset I = 1; I < (Subset{1} << n); ++I) {
        std::vector<int> deleted;
        for (int i = 0; i < n; ++i)
            if (I & (Subset{1} << i)) deleted.push_back(i);
        const Integer minor = principal_minor_det(data.linking(), deleted);
        if (minor == 0) continue;
        total += parity_sign(n - std::popcount(I)) * Rational(minor) * mu(data, I);
    }
    return total;
}

}  // namespace

ManifoldReport lambda_lescop(const LinkInvariantData& data) {
    if (!data.complete())
        throw IncompleteDataError("lambda_L needs Conway data for every sublink");
    const int n = data.num_components();
    const IntMatrix& L = data.linking();
    const Inertia in = inertia(L);
    const Integer d = determinant(L);
    const int sigma = in.positive - in.negative;

    Rational lambda = parity_sign(in.negative) * Rational(d) * sigma / 8;
    lambda += parity_sign(n + in.negative) * subset_sum(data);

    ManifoldReport r;
    r.lambda = lambda;
    r.det = d;
    r.betti1 = in.nullity;
    r.sigma_plus = in.positive;
    r.sigma_minus = in.negative;
    if (d != 0) {
        r.h1_order = d < 0 ? -d : d;
        r.lambda_walker = 2 * lambda / Rational(*r.h1_order);
    }
    return r;
}

Rational iota0_partition(const IntMatrix& linking) {
    if (!linking.is_symmetric()) throw ArgumentError("linking matrix must be symmetric");
    const int n = linking.dim();

    // enumerate set partitions of 0..n-1 by assigning each element to a block
    std::vector<std::vector<int>> blocks;
    Rational total = 0;
    auto block_value = [&](const std::vector<int>& blk) -> Rational {
        if (blk.size() == 1) return Rational(linking.at(blk[0], blk[0]));
        std::vector<int> through(blk.begin(), blk.end() - 1);
        return chain_product(linking, blk.back(), blk.back(), through);
    };
    auto recurse = [&](auto&& self, int next) -> void {
        if (next == n) {
            Rational term = blocks.size() % 2 ? -1 : 1;
            for (const auto& blk : blocks) term *= block_value(blk);
            total += term;
            return;
        }
        // index-based: recursion may reallocate the block vector
        const size_t count = blocks.size();
        for (size_t t = 0; t < count; ++t) {
            blocks[t].push_back(next);
            self(self, next + 1);
            blocks[t].pop_back();
        }
        blocks.push_back({next});
        self(self, next + 1);
        blocks.pop_back();
    };
    recurse(recurse, 0);
    return total;
}

Rational matveev_polyak_lambda(const LinkInvariantData& data) {
    if (data.num_components() != 2) throw ArgumentError("Matveev-Polyak needs two components");
    const Integer d = determinant(data.linking());
    if (d == 0) throw ArgumentError("Matveev-Polyak needs det != 0");

    const Rational a = data.l(0, 0), b = data.l(1, 1), lk = data.l(0, 1);
    const Rational c2_1 = data.conway_coeff(Subset{1}, 2);
    const Rational c2_2 = data.conway_coeff(Subset{2}, 2);
    const Rational c3 = data.conway_coeff(Subset{3}, 3);

    // (det/2)(lambda_W - sigma/4) as printed
    const Rational mp = a * c2_2 + b * c2_1 + (lk * lk * lk - lk) / 12 +
                        (a + b) / 24 * (2 * lk * lk - a * b - 2) - c3 +
                        lk * (c2_1 + c2_2);

    const Inertia in = inertia(data.linking());
    const int sigma = in.positive - in.negative;
    const Rational abs_det = Rational(d < 0 ? -d : d);
    const int sign_det = d < 0 ? -1 : 1;
    // lambda = (1/2)|det| lambda_W with lambda_W = sigma/4 + 2 mp / det
    return abs_det * sigma / 8 + sign_det * mp;
}

std::pair<Rational, Rational> lmo_degree1(const LinkInvariantData& data) {
    if (!data.complete())
        throw IncompleteDataError("lmo_degree1 needs Conway data for every sublink");
    const int n = data.num_components();
    const Inertia in = inertia(data.linking());
    const Rational c0 = parity_sign(n) * Rational(determinant(data.linking()));
    const Rational c1 = subset_sum(data) / 2;

    // the key equality must reassemble lambda_L exactly
    const int sigma = in.positive - in.negative;
    const Rational reassembled =
        2 * parity_sign(in.nullity) *
        (parity_sign(in.positive) * Rational(sigma) / 16 * c0 + parity_sign(in.positive) * c1);
    if (reassembled != lambda_lescop(data).lambda)
        throw std::logic_error("degree-<=1 LMO pair does not reassemble lambda_L");
    return {c0, c1};
}

}  // namespace cwl
