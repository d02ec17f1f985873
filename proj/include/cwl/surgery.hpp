#pragma once

// The surgery formula for the Casson-Walker-Lescop invariant of the
// 3-manifold obtained by integral surgery along a framed link, together with
// the degree-0 determinant identity, the degree-<=1 LMO pair, and the
// Matveev-Polyak two-component cross-check.

#include <optional>

#include "cwl/invariants.hpp"
#include "cwl/link_data.hpp"

namespace cwl {

struct ManifoldReport {
    Rational lambda;                     // lambda_L of the surgered manifold
    Integer det;                          // det of the linking matrix
    int betti1 = 0;                       // nullity of the linking matrix
    std::optional<Integer> h1_order;      // |H_1| = |det|, absent when infinite
    int sigma_plus = 0;
    int sigma_minus = 0;
    std::optional<Rational> lambda_walker;  // 2 lambda / |det|, rational homology spheres only
};

// lambda_L(S^3_L) = (-1)^{sigma_-} det(L)/8 sigma
//                 + (-1)^{n+sigma_-} sum_{I != 0} (-1)^{n-|I|} det(L_del I) mu_{|I|}(L_I).
// Requires the complete Conway table (IncompleteDataError otherwise).
ManifoldReport lambda_lescop(const LinkInvariantData& data);

// Partition-sum form of the degree-0 closure: sum over set partitions
// {I_1..I_k} of (-1)^k prod_j I(I_j), I({i}) = fr_i, I(I) = L_{i,I minus i}.
// Equals (-1)^n det(L).
Rational iota0_partition(const IntMatrix& linking);

// Two-component rational-homology-sphere formula of Matveev-Polyak,
// solved back to lambda_L. Requires n = 2 and det != 0.
Rational matveev_polyak_lambda(const LinkInvariantData& data);

// ((iota_1 Zcheck)_0, (iota_1 Zcheck)_1) = ((-1)^n det L,
// (1/2) sum (-1)^{n-k} det L_del mu_k); verifies that the key equality
// reassembles lambda_lescop before returning.
std::pair<Rational, Rational> lmo_degree1(const LinkInvariantData& data);

}  // namespace cwl
