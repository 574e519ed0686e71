#include "acs/nonadaptive.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace acs {

namespace {

long long third_case_cap(int n) {
  return binomial(n - 2, n / 2 - 1) + 1;
}

enum class Regime { kOne, kMiddle, kBig, kDegenerate22 };

Regime classify(int n, int k) {
  check_ground_set(n);
  if (k < 1) throw ContractError("k must be >= 1");
  if (k == 1) return Regime::kOne;
  if (n == 2 && k == 2) return Regime::kDegenerate22;
  if (n >= 3 && k < n) return Regime::kMiddle;
  if (n >= 3 && k >= n && k <= third_case_cap(n)) return Regime::kBig;
  throw UnsupportedRegimeError("h(n,k) unsupported for n=" + std::to_string(n) +
                               ", k=" + std::to_string(k));
}

}  // namespace

long long h_formula(int n, int k) {
  switch (classify(n, k)) {
    case Regime::kOne:
      return n;
    case Regime::kDegenerate22:
      return 0;  // the single 2-antichain on [2] needs no query
    case Regime::kMiddle: {
      long long s = 0;
      for (int i = n - k; i <= n - 1; ++i) s += binomial(n, i);
      return s - 1;
    }
    case Regime::kBig:
      return (1LL << n) - 4;
  }
  return 0;  // unreachable
}

Family build_family(int n, int k) {
  const Mask full = full_mask(n);
  std::vector<Mask> q;
  switch (classify(n, k)) {
    case Regime::kOne:
      for (int x = 1; x <= n; ++x) q.push_back(full & ~(Mask{1} << (x - 1)));
      break;
    case Regime::kDegenerate22:
      break;
    case Regime::kMiddle: {
      const Mask except = full_mask(n - 1);  // [n-1]
      for (Mask m = 0; m <= full; ++m) {
        int pc = popcount(m);
        if (pc >= n - k && pc <= n - 1 && m != except) q.push_back(m);
      }
      break;
    }
    case Regime::kBig: {
      const Mask top = Mask{1} << (n - 1);  // {n}
      const Mask nm1 = full_mask(n - 1);    // [n-1]
      for (Mask m = 1; m < full; ++m)
        if (m != top && m != nm1) q.push_back(m);
      break;
    }
  }
  return make_family(n, std::move(q));
}

std::vector<bool> answers_for(const Antichain& hidden, const Family& queries) {
  if (hidden.n != queries.n)
    throw DimensionError("answers_for: mismatched ground sets");
  std::vector<bool> out;
  out.reserve(queries.members.size());
  for (Mask q : queries.members) out.push_back(answer_query(hidden, q));
  return out;
}

namespace {

// Checks the decoded antichain against the full answer vector; names the
// first violated query on failure.
Antichain certify(int n, int k, const Family& queries,
                  const std::vector<bool>& answers, Antichain s) {
  if (static_cast<int>(s.members.size()) != k || !is_antichain(s))
    throw DecodeError("decode: reconstruction is not a k-antichain");
  for (std::size_t i = 0; i < queries.members.size(); ++i) {
    if (answer_query(s, queries.members[i]) != answers[i])
      throw DecodeError("decode: no consistent k-antichain; first violated query " +
                        to_string(queries.members[i]));
  }
  (void)n;
  return s;
}

Antichain decode_middle(int n, int k, const Family& queries,
                        const std::vector<bool>& answers) {
  if (n > 15)
    throw ResourceError("decode: 2^n reconstruction capped at n <= 15");
  const Mask full = full_mask(n);
  const Mask nm1 = full_mask(n - 1);

  // A is alive iff every queried superset of A was answered YES.
  std::vector<Mask> alive;
  for (Mask a = 0; a <= full; ++a) {
    bool ok = true;
    for (std::size_t i = 0; i < queries.members.size(); ++i) {
      if (mask_subset(a, queries.members[i]) && !answers[i]) {
        ok = false;
        break;
      }
    }
    if (ok) alive.push_back(a);
  }
  Family a0 = minimal_members(Family{n, std::move(alive)});

  if (static_cast<int>(a0.members.size()) == k + 1) {
    auto it = std::find(a0.members.begin(), a0.members.end(), nm1);
    if (it == a0.members.end())
      throw DecodeError("decode: minimal alive family has size k+1 without [n-1]");
    a0.members.erase(it);
  }
  return certify(n, k, queries, answers, std::move(a0));
}

Antichain decode_big(int n, int k, const Family& queries,
                     const std::vector<bool>& answers) {
  const Mask top = Mask{1} << (n - 1);  // {n}
  const Mask nm1 = full_mask(n - 1);    // [n-1]

  std::map<Mask, bool> ans;
  for (std::size_t i = 0; i < queries.members.size(); ++i)
    ans[queries.members[i]] = answers[i];
  auto yes = [&](Mask q) { return ans.at(q); };

  // A set with every maximal proper subset asked is pinned directly: it is
  // a minimal member iff it was answered YES and all those subsets NO.
  // Unresolvable without case analysis: {n}, the pairs {i,n}, and [n-1].
  std::vector<Mask> known;
  std::vector<Mask> ambiguous_pairs;  // {i,n} with {i} answered NO
  for (const auto& [a, answered_yes] : ans) {
    if (!answered_yes) continue;
    bool minimal = true;
    bool pair_with_top = false;
    for (int e : elements_of(a)) {
      Mask f = a & ~(Mask{1} << (e - 1));
      if (f == 0) continue;  // the empty set is never a member when k > 1
      if (f == top) {
        pair_with_top = true;
        continue;
      }
      if (yes(f)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    if (pair_with_top)
      ambiguous_pairs.push_back(a);
    else
      known.push_back(a);
  }

  auto resolved_pairs_without_top = [&]() {
    // With {n} ruled out, {i,n} is a minimal member iff it was YES and
    // {i} was NO -- exactly the ambiguous_pairs list.
    return ambiguous_pairs;
  };

  bool nm1_ruled_out = false;
  for (Mask f = 0; f < nm1; ++f) {
    if (popcount(f) == n - 2 && mask_subset(f, nm1) && yes(f)) {
      nm1_ruled_out = true;
      break;
    }
  }

  if (!nm1_ruled_out) {
    // Every (n-2)-subset of [n-1] was NO: only [n-1] may be the member
    // avoiding n, and {n} itself is impossible for k >= 3.
    std::vector<Mask> members = known;
    auto pairs = resolved_pairs_without_top();
    members.insert(members.end(), pairs.begin(), pairs.end());
    if (static_cast<int>(members.size()) == k - 1) members.push_back(nm1);
    return certify(n, k, queries, answers, make_family(n, std::move(members)));
  }

  bool some_pair_no = false;
  for (int i = 1; i < n; ++i) {
    Mask p = top | (Mask{1} << (i - 1));
    if (!yes(p)) {
      some_pair_no = true;
      break;
    }
  }
  if (some_pair_no) {
    // A NO-answered pair {i,n} rules out {n} as a member.
    std::vector<Mask> members = known;
    auto pairs = resolved_pairs_without_top();
    members.insert(members.end(), pairs.begin(), pairs.end());
    return certify(n, k, queries, answers, make_family(n, std::move(members)));
  }

  // All pairs {i,n} were YES: either {n} is a member, or every ambiguous
  // pair is. Disambiguate by size and full consistency.
  std::vector<std::optional<Antichain>> candidates;
  {
    std::vector<Mask> c = known;
    c.push_back(top);
    candidates.push_back(make_family(n, std::move(c)));
  }
  {
    std::vector<Mask> c = known;
    auto pairs = resolved_pairs_without_top();
    c.insert(c.end(), pairs.begin(), pairs.end());
    candidates.push_back(make_family(n, std::move(c)));
  }
  std::optional<Antichain> picked;
  for (auto& cand : candidates) {
    if (static_cast<int>(cand->members.size()) != k || !is_antichain(*cand))
      continue;
    bool ok = true;
    for (std::size_t i = 0; i < queries.members.size() && ok; ++i)
      ok = answer_query(*cand, queries.members[i]) == answers[i];
    if (!ok) continue;
    if (picked && picked->members != cand->members)
      throw DecodeError("decode: two distinct consistent reconstructions");
    picked = std::move(*cand);
  }
  if (!picked)
    throw DecodeError("decode: no consistent k-antichain; first violated certificate {n}");
  return certify(n, k, queries, answers, std::move(*picked));
}

}  // namespace

Antichain decode(int n, int k, const Family& queries,
                 const std::vector<bool>& answers) {
  Regime regime = classify(n, k);
  if (queries != build_family(n, k))
    throw ContractError("decode: queries must equal build_family(n,k)");
  if (answers.size() != queries.members.size())
    throw ContractError("decode: answer vector length mismatch");

  switch (regime) {
    case Regime::kOne: {
      Mask h = 0;
      const Mask full = full_mask(n);
      for (std::size_t i = 0; i < queries.members.size(); ++i)
        if (!answers[i]) h |= full & ~queries.members[i];
      return make_family(n, {h});
    }
    case Regime::kDegenerate22:
      return family_of(2, {{1}, {2}});
    case Regime::kMiddle:
      return decode_middle(n, k, queries, answers);
    case Regime::kBig:
      return decode_big(n, k, queries, answers);
  }
  throw ContractError("decode: unreachable");
}

bool verify_identifying(const Family& queries, int n, int k) {
  if (n > 6)
    throw ResourceError("verify_identifying: brute force capped at n <= 6");
  if (queries.n != n)
    throw DimensionError("verify_identifying: mismatched ground sets");

  const std::size_t nq = queries.members.size();
  const std::size_t words = (nq + 63) / 64;
  std::vector<std::vector<std::uint64_t>> sigs;
  for_each_antichain(n, k, [&](const std::vector<Mask>& members) {
    const Antichain s{n, members};
    std::vector<std::uint64_t> sig(words, 0);
    for (std::size_t i = 0; i < nq; ++i)
      if (answer_query(s, queries.members[i]))
        sig[i / 64] |= std::uint64_t{1} << (i % 64);
    sigs.push_back(std::move(sig));
  });
  std::sort(sigs.begin(), sigs.end());
  return std::adjacent_find(sigs.begin(), sigs.end()) == sigs.end();
}

}  // namespace acs
