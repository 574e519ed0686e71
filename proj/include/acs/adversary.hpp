#pragma once

// Executable lower-bound strategies: the missing-query constructions for
// non-adaptive families, the partition adversary for the adaptive game, the
// first-query counting certificates for the two-member case, and a generic
// confusion-pair finder.

#include <optional>
#include <utility>

#include "acs/core.hpp"
#include "acs/oracle.hpp"

namespace acs {

/// If `queries` is not identifying for (n, k), returns two distinct
/// k-antichains with identical answer vectors; otherwise nothing.
/// Capped at n <= 5.
std::optional<std::pair<Antichain, Antichain>> confusion_pair(
    const Family& queries, int n, int k);

/// Two k-antichains no query family omitting a0 can tell apart. For
/// 1 < k < n (with n-k <= |a0| <= n-2) the pair differs only in a0 versus
/// a0 plus one fresh element, and agrees on every query other than a0.
/// For k >= n the construction is keyed by |a0|: 1 (a second unqueried
/// singleton is implied), 2..n-2, or n-1 (a second unqueried co-singleton
/// is implied); in the two implied-partner regimes the pair agrees on every
/// query outside the unqueried pair.
std::pair<Antichain, Antichain> missing_set_construction(int n, int k,
                                                         const Subset& a0);

/// Adaptive adversary for n > k >= 3: reveals a balanced partition
/// H_1..H_{k-1} of [n] with |H_i| = floor((n+i-1)/(k-1)) as the first k-1
/// members and keeps the candidates for the last member (the complements of
/// the partition's minimal covers) alive as long as possible. Forced
/// answers are free; only queries that hit a live candidate shrink the
/// candidate set and are tallied.
class PartitionAdversary final : public Oracle {
 public:
  PartitionAdversary(int n, int k);

  const Antichain& revealed() const { return revealed_; }
  const Family& candidates() const { return candidates_; }
  std::size_t candidate_queries() const { return candidate_queries_; }
  bool committed() const { return candidates_.members.size() == 1; }

  /// Valid once committed: the partition plus the surviving candidate.
  Antichain committed_antichain() const;

 protected:
  bool respond(Mask q) override;

 private:
  Antichain revealed_;
  Family candidates_;
  std::size_t candidate_queries_ = 0;
};

struct PlayResult {
  std::size_t candidate_queries = 0;
  long long lower_bound = 0;  // |candidates| - 1
  bool ok = false;
  Antichain found;
};

/// Solver-versus-PartitionAdversary game: the questioner knows the revealed
/// partition and probes the candidates in canonical order until one member
/// is pinned down. The adversary forces lower_bound candidate queries.
PlayResult play_theorem5(int n, int k);

struct K2Certificate {
  long long lower_bound = 0;  // consistent 2-antichains after the worse answer
  long long threshold = 0;    // 2^(2n-2)
};

/// Counting certificate for the first query A of any two-member search:
/// for |A| = n-1 (valid for n >= 6) the YES branch keeps A(n) - A(n-1)
/// antichains; for |A| <= n-2 (valid for n >= 12) the NO branch keeps at
/// least A(n) - A(n-2) - 2^(n-2) * (2^n - 2^(n-2)). Both exceed 2^(2n-2).
K2Certificate k2_first_query_certificate(int n, int size_of_a);

}  // namespace acs
