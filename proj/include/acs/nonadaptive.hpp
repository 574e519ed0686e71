#pragma once

// Optimal non-adaptive query families, their decoders, and a brute-force
// identifiability check. A family is identifying for (n, k) when the answer
// vectors of all k-antichains over [n] are pairwise distinct.

#include <vector>

#include "acs/core.hpp"
#include "acs/oracle.hpp"

namespace acs {

/// Smallest identifying family size h(n, k). Supported regimes:
///   k = 1             -> n
///   1 < k < n, n >= 3 -> sum_{i=n-k}^{n-1} C(n,i) - 1
///   n <= k <= C(n-2, floor(n/2)-1) + 1, n >= 3 -> 2^n - 4
/// plus the degenerate values h(1,1)=1, h(2,1)=2, h(2,2)=0.
long long h_formula(int n, int k);

/// The concrete optimal family behind h_formula, in canonical order:
///   k = 1:     all (n-1)-element sets
///   1 < k < n: all sets of size n-k .. n-1 except [n-1]
///   k >= n:    all sets except the empty set, [n], {n} and [n-1]
Family build_family(int n, int k);

/// Answer vector of `hidden` over `queries`, positionally aligned.
std::vector<bool> answers_for(const Antichain& hidden, const Family& queries);

/// Reconstructs the unique k-antichain consistent with `answers` over
/// build_family(n, k). Throws DecodeError (naming the first violated
/// query) if no k-antichain is consistent.
Antichain decode(int n, int k, const Family& queries,
                 const std::vector<bool>& answers);

/// True iff the map from k-antichains to answer vectors over `queries` is
/// injective. Brute force; capped at n <= 6.
bool verify_identifying(const Family& queries, int n, int k);

}  // namespace acs
