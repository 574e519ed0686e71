#pragma once

// Counting kernel: extremal minimal-cover counts g(n, m) by formula and by
// brute force, the truncated-product bound on |MC|, the 2-antichain count
// A(n), and the exhaustive search for the smallest identifying family.

#include <cstdint>

#include "acs/core.hpp"

namespace acs {

/// prod_{i=0}^{m-1} floor((n+i)/m); the minimal-cover count of a balanced
/// partition of [n] into m parts.
long long g_formula(int n, int m);

struct GBruteResult {
  long long value = 0;
  Family witness;  // lexicographically least maximizer
};

/// max |MC(F)| over all m-member families F of subsets of [n], with a
/// witness. Guarded by an operation budget.
GBruteResult g_bruteforce(int n, int m, std::uint64_t budget = 2'000'000'000);

/// Truncated-product upper bound on |MC(f)| for a family with at least one
/// element shared by two members:
///   prod a_i + sum_{j=1}^{min(a,m-1)} C(a,j) * prod_{i=1}^{m-j-1} a_i
/// where a counts shared elements and a_1 >= ... >= a_m are the members'
/// unshared sizes.
long long eq1_bound(const Family& f);

/// Number of 2-member antichains on [n]: 2^(2n-1) - 3^n + 2^(n-1).
long long antichain_pair_count(int n);

/// Smallest size of an identifying family for (n, k), found by exhausting
/// all families of each size in ascending order. Capped at n <= 4.
int exact_h_search(int n, int k);

}  // namespace acs
