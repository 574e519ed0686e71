#include "acs/adversary.hpp"

#include <algorithm>
#include <map>

#include "acs/combinatorics.hpp"

namespace acs {

std::optional<std::pair<Antichain, Antichain>> confusion_pair(
    const Family& queries, int n, int k) {
  if (n > 5) throw ResourceError("confusion_pair: brute force capped at n <= 5");
  if (queries.n != n)
    throw DimensionError("confusion_pair: mismatched ground sets");

  std::map<std::vector<bool>, Antichain> seen;
  std::optional<std::pair<Antichain, Antichain>> result;
  for_each_antichain(n, k, [&](const std::vector<Mask>& members) {
    if (result) return;
    const Antichain s{n, members};
    std::vector<bool> sig;
    sig.reserve(queries.members.size());
    for (Mask q : queries.members) sig.push_back(answer_query(s, q));
    auto [it, inserted] = seen.emplace(std::move(sig), s);
    if (!inserted) result = std::make_pair(it->second, s);
  });
  return result;
}

namespace {

Mask bit_of(int element) { return Mask{1} << (element - 1); }

// Lowest set bit as an element label.
int min_element(Mask m) { return std::countr_zero(m) + 1; }

// The 1 < k < n construction: grow the missing set by one fresh element,
// patch the other complement elements into same-size decoys, and pad with
// further same-size sets outside a0 + {w}.
std::pair<Antichain, Antichain> middle_regime(int n, int k, Mask a0) {
  const Mask full = full_mask(n);
  const int ell = n - popcount(a0);

  const auto comp = elements_of(full & ~a0);  // c_1 < ... < c_ell
  const int w = comp[0];
  const int x = min_element(a0);

  std::vector<Mask> shared;  // members common to both antichains
  for (int i = 1; i < ell; ++i)
    shared.push_back((a0 & ~bit_of(x)) | bit_of(comp[i]));

  const Mask grown = a0 | bit_of(w);
  const int need = k - ell;
  for (Mask c = 0; c <= full && static_cast<int>(shared.size()) < ell - 1 + need;
       ++c) {
    if (popcount(c) != popcount(a0)) continue;
    if (mask_subset(c, grown)) continue;  // skips a0 itself
    if (std::find(shared.begin(), shared.end(), c) != shared.end()) continue;
    shared.push_back(c);
  }
  if (static_cast<int>(shared.size()) != ell - 1 + need)
    throw ContractError("missing_set_construction: not enough decoy sets");

  std::vector<Mask> s1 = shared, s2 = shared;
  s1.push_back(a0);
  s2.push_back(grown);
  return {make_family(n, std::move(s1)), make_family(n, std::move(s2))};
}

// k >= n, 2 <= |a0| <= n-2: same-size decoys for all complement elements
// but the fresh one, plus a half-size family pinned by one complement
// element and blocked by the smallest element of a0.
std::pair<Antichain, Antichain> big_mid_regime(int n, int k, Mask a0) {
  const Mask full = full_mask(n);
  const auto comp = elements_of(full & ~a0);
  const int ell = static_cast<int>(comp.size());

  const auto a0_elems = elements_of(a0);
  const int x1 = a0_elems[0];
  const int x2 = a0_elems[1];
  const int w = comp[0];
  const int anchor = comp[ell - 1];

  std::vector<Mask> fixed;  // a0's decoys, shared by both antichains
  for (int j = 1; j < ell; ++j)
    fixed.push_back((a0 & ~bit_of(x2)) | bit_of(comp[j]));
  const Mask grown = a0 | bit_of(w);

  auto comparable = [](Mask a, Mask b) {
    return mask_subset(a, b) || mask_subset(b, a);
  };

  std::vector<Mask> blockers;
  const int need = k - ell;
  for (Mask c = 0; c <= full && static_cast<int>(blockers.size()) < need; ++c) {
    if (popcount(c) != n / 2) continue;
    if (!(c & bit_of(anchor)) || (c & bit_of(x1))) continue;
    bool ok = !comparable(c, a0) && !comparable(c, grown);
    for (Mask f : fixed)
      if (!ok || comparable(c, f)) ok = false;
    if (ok) blockers.push_back(c);
  }
  if (static_cast<int>(blockers.size()) != need)
    throw ContractError("missing_set_construction: not enough blocker sets");

  std::vector<Mask> s1 = fixed, s2 = fixed;
  s1.insert(s1.end(), blockers.begin(), blockers.end());
  s2 = s1;
  s1.push_back(a0);
  s2.push_back(grown);
  return {make_family(n, std::move(s1)), make_family(n, std::move(s2))};
}

// k >= n, |a0| = 1: the implied second missing query is the next singleton.
std::pair<Antichain, Antichain> singleton_regime(int n, int k, Mask a0) {
  const Mask full = full_mask(n);
  const int x = min_element(a0);
  const int y = (x == 1) ? 2 : 1;

  std::vector<Mask> blockers;
  const int need = k - n + 1;
  for (Mask c = 0; c <= full && static_cast<int>(blockers.size()) < need; ++c) {
    if (popcount(c) != n / 2 - 1) continue;
    if (c & (bit_of(x) | bit_of(y))) continue;
    blockers.push_back(c);
  }
  if (static_cast<int>(blockers.size()) != need)
    throw ContractError("missing_set_construction: not enough blocker sets");

  std::vector<Mask> s1 = blockers, s2 = blockers;
  s1.push_back(bit_of(x));
  s2.push_back(bit_of(y));
  for (int i = 1; i <= n; ++i) {
    if (i == x || i == y) continue;
    s1.push_back(bit_of(y) | bit_of(i));
    s2.push_back(bit_of(x) | bit_of(i));
  }
  return {make_family(n, std::move(s1)), make_family(n, std::move(s2))};
}

// k >= n, |a0| = n-1: the implied second missing query is the next
// co-singleton.
std::pair<Antichain, Antichain> cosingleton_regime(int n, int k, Mask a0) {
  const Mask full = full_mask(n);
  const int u = min_element(full & ~a0);
  const int v = (u == 1) ? 2 : 1;

  std::vector<Mask> blockers;
  const int need = k - 1;
  for (Mask c = 0; c <= full && static_cast<int>(blockers.size()) < need; ++c) {
    if (popcount(c) != n / 2 + 1) continue;
    if ((c & (bit_of(u) | bit_of(v))) != (bit_of(u) | bit_of(v))) continue;
    blockers.push_back(c);
  }
  if (static_cast<int>(blockers.size()) != need)
    throw ContractError("missing_set_construction: not enough blocker sets");

  std::vector<Mask> s1 = blockers, s2 = blockers;
  s1.push_back(a0);
  s2.push_back(full & ~bit_of(v));
  return {make_family(n, std::move(s1)), make_family(n, std::move(s2))};
}

}  // namespace

std::pair<Antichain, Antichain> missing_set_construction(int n, int k,
                                                         const Subset& a0) {
  if (a0.n != n)
    throw DimensionError("missing_set_construction: mismatched ground sets");
  const int size = popcount(a0.bits);

  std::pair<Antichain, Antichain> pair;
  if (k > 1 && k < n) {
    if (size < n - k || size > n - 2)
      throw ContractError("missing_set_construction: need n-k <= |a0| <= n-2");
    pair = middle_regime(n, k, a0.bits);
  } else if (k >= n && n >= 3 &&
             static_cast<long long>(k) <= binomial(n - 2, n / 2 - 1) + 1) {
    if (size == 1)
      pair = singleton_regime(n, k, a0.bits);
    else if (size >= 2 && size <= n - 2)
      pair = big_mid_regime(n, k, a0.bits);
    else if (size == n - 1)
      pair = cosingleton_regime(n, k, a0.bits);
    else
      throw ContractError("missing_set_construction: |a0| out of range");
  } else {
    throw UnsupportedRegimeError("missing_set_construction: unsupported (n,k)");
  }

  for (const Antichain* s : {&pair.first, &pair.second}) {
    if (static_cast<int>(s->members.size()) != k || !is_antichain(*s))
      throw ContractError("missing_set_construction: output is not a k-antichain");
  }
  return pair;
}

PartitionAdversary::PartitionAdversary(int n, int k) : Oracle(n) {
  if (!(n > k && k >= 3))
    throw ContractError("PartitionAdversary: requires n > k >= 3");
  if (n > 12)
    throw ResourceError("PartitionAdversary: minimal-cover setup capped at n <= 12");

  std::vector<Mask> parts;
  int next = 1;
  for (int i = 1; i <= k - 1; ++i) {
    const int size = (n + i - 1) / (k - 1);
    Mask part = 0;
    for (int j = 0; j < size; ++j) part |= bit_of(next++);
    parts.push_back(part);
  }
  revealed_ = make_family(n, std::move(parts));
  candidates_ = complement_family(minimal_covers(revealed_));
}

bool PartitionAdversary::respond(Mask q) {
  for (Mask h : revealed_.members)
    if (mask_subset(h, q)) return true;

  auto& cand = candidates_.members;
  auto it = std::find(cand.begin(), cand.end(), q);
  if (it != cand.end()) {
    if (cand.size() >= 2) {
      cand.erase(it);
      ++candidate_queries_;
      return false;
    }
    return true;  // committed: the last candidate is the hidden member
  }
  // Proper supersets of a candidate always contain a revealed part, so the
  // first branch already caught them; everything else is a forced NO.
  return false;
}

Antichain PartitionAdversary::committed_antichain() const {
  if (candidates_.members.size() != 1)
    throw ContractError("PartitionAdversary: not committed yet");
  std::vector<Mask> members = revealed_.members;
  members.push_back(candidates_.members.front());
  return make_family(revealed_.n, std::move(members));
}

PlayResult play_theorem5(int n, int k) {
  PartitionAdversary adv(n, k);
  const std::vector<Mask> initial = adv.candidates().members;
  const long long lower_bound = static_cast<long long>(initial.size()) - 1;

  std::vector<Mask> remaining = initial;
  std::optional<Mask> last;
  for (Mask c : initial) {
    if (remaining.size() == 1) {
      last = remaining.front();
      break;
    }
    if (adv.ask(c)) {
      last = c;
      break;
    }
    remaining.erase(std::find(remaining.begin(), remaining.end(), c));
  }
  if (!last && remaining.size() == 1) last = remaining.front();

  PlayResult r;
  r.lower_bound = lower_bound;
  r.candidate_queries = adv.candidate_queries();
  if (!last) return r;

  std::vector<Mask> members = adv.revealed().members;
  members.push_back(*last);
  r.found = make_family(n, std::move(members));

  bool consistent = is_antichain(r.found);
  for (const auto& e : adv.log().entries)
    if (answer_query(r.found, e.query) != e.answer) consistent = false;
  r.ok = consistent &&
         static_cast<long long>(r.candidate_queries) >= lower_bound;
  return r;
}

K2Certificate k2_first_query_certificate(int n, int size_of_a) {
  if (size_of_a < 0 || size_of_a > n - 1)
    throw ContractError("k2_first_query_certificate: need 0 <= |A| <= n-1");

  K2Certificate c;
  c.threshold = 1LL << (2 * n - 2);
  if (size_of_a == n - 1) {
    if (n < 6)
      throw UnsupportedRegimeError("k2_first_query_certificate: |A| = n-1 needs n >= 6");
    c.lower_bound = antichain_pair_count(n) - antichain_pair_count(n - 1);
  } else {
    if (n < 12)
      throw UnsupportedRegimeError("k2_first_query_certificate: |A| <= n-2 needs n >= 12");
    c.lower_bound = antichain_pair_count(n) - antichain_pair_count(n - 2) -
                    (1LL << (n - 2)) * ((1LL << n) - (1LL << (n - 2)));
  }
  if (c.lower_bound <= c.threshold)
    throw ContractError("k2_first_query_certificate: certificate failed");
  return c;
}

}  // namespace acs
