#pragma once

// The formula layer: chain products of linking numbers, the U_n invariants
// built from Conway coefficients, the partition sums behind the D±-family
// coefficient identities, and the mu_n invariants entering the surgery
// formula — computed along two independently grouped routes that must agree.

#include <functional>
#include <vector>

#include "cwl/int_matrix.hpp"
#include "cwl/link_data.hpp"
#include "cwl/rational.hpp"

namespace cwl {

// L_{i,j,I} = sum over orderings (i1..ik) of I of l(i,i1) l(i1,i2) ... l(ik,j),
// with L_{i,j,∅} = l(i,j) for i != j and L_{i,∅} = fr_i. Entries of `through`
// must be distinct and disjoint from {i,j}.
Rational chain_product(const IntMatrix& linking, int i, int j, const std::vector<int>& through);

// U_{|I|+1}(L_I): U_2(K) = c_2(K) - 1/24, and
// U_{n+1}(L) = c_{n+1}(L) - sum_i U_n(L_i-dropped) sum_{j != i} l_{i,j}.
Rational u_invariant(const LinkInvariantData& data, Subset I);

// (1/4) sum_i sum_{I ⊔ J = rest, |I|=a, |J|=b} L_{i,I} L_{i,J}, partitions
// unordered; requires a >= b >= 0, a > 0, a+b+1 = dim.
Rational partition_sum_two(const IntMatrix& linking, int a, int b);

// b = c = 0: (1/2) sum_{i<j} l_{i,j}^2 L_{i,j,rest};
// otherwise: sum_{i<j} sum_{I ⊔ J ⊔ K = rest} L_{i,j,I} L_{i,j,J} L_{i,j,K},
// partitions unordered; requires a >= b >= c >= 0, a > 0, a+b+c+2 = dim.
Rational partition_sum_three(const IntMatrix& linking, int a, int b, int c);

// mu_{|I|}(L_I). Sizes 1 and 2 use the closed forms; size m >= 3 evaluates
// the explicit formula (1/12 / 1/2 / 1/4 grouped sums minus U_{m+1}).
Rational mu(const LinkInvariantData& data, Subset I);

// Same invariant through the decomposition (1/3) sum D(a,b)-coefficients +
// (1/2) sum D(a,b,c)-coefficients - (E^- sum); must equal mu on all inputs.
Rational mu_via_decomposition(const LinkInvariantData& data, Subset I);

// U_{m+1}(L_I) + sum_i U_m(L_{I minus i}) sum_j l_{i,j}: by definition this
// reproduces c_{m+1}(L_I); exercises the E^-/P(n) split of the Conway
// coefficient.
Rational conway_from_un(const LinkInvariantData& data, Subset I);

// Enumeration helpers shared by mu and the partition sums (unordered when
// sizes tie).
void for_each_partition2(const std::vector<int>& pool, int a,
                         const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn);
void for_each_partition3(const std::vector<int>& pool, int a, int b,
                         const std::function<void(const std::vector<int>&, const std::vector<int>&,
                                                  const std::vector<int>&)>& fn);

}  // namespace cwl
