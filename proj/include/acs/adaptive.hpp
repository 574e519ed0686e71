#pragma once

// Adaptive solvers: the |A|-query minimal-member extraction (Gainanov's
// algorithm), the minimal-cover extension solver, the 2n-query two-member
// solver, and an exhaustive minimax referee for the optimal worst-case
// query count.

#include <cstdint>
#include <vector>

#include "acs/core.hpp"
#include "acs/oracle.hpp"

namespace acs {

/// Finds one minimal member of the hidden upfamily inside `a`, which must be
/// known to contain a member (a = [n] with k >= 1, or a YES-answered query).
/// Issues exactly |a| queries. Elements are removed in descending label
/// order; YES excludes the element, NO confirms it.
Mask gainanov_find_one(Oracle& oracle, Mask a);

struct SolveResult {
  Antichain found;
  std::size_t queries_used = 0;
  // |MC(S'_m)| realized per extension round, m = 1 .. k-1. The proof-side
  // budget for the run is sum(mc_sizes) + k*n.
  std::vector<std::size_t> mc_sizes;
};

/// Recovers a hidden k-member antichain: one member via gainanov on [n],
/// then k-1 extension rounds that probe complements of the minimal covers
/// of the members found so far (canonical order, stop at first YES).
/// Already-asked queries are cached and never re-asked.
SolveResult solve(Oracle& oracle, int k);

/// Two-member specialization with worst-case 2n queries.
SolveResult solve_k2(Oracle& oracle);

/// sum(g_values) + k*n, where g_values[m-1] bounds |MC| over m-member
/// families (brute-force or formula values, or realized MC sizes).
long long theorem3_bound(int n, int k, const std::vector<long long>& g_values);

struct ExactFOptions {
  std::uint64_t node_budget = 50'000'000;
};

/// Exact worst-case optimal adaptive query count for (n, k): minimax over
/// query trees on the set of still-consistent k-antichains, memoized,
/// terminal when at most one candidate remains. Capped at n <= 4.
int exact_f(int n, int k, const ExactFOptions& opts = {});

}  // namespace acs
