#include "acs/combinatorics.hpp"

#include <algorithm>

#include "acs/oracle.hpp"

namespace acs {

long long g_formula(int n, int m) {
  check_ground_set(n);
  if (m < 1 || m > n)
    throw ContractError("g_formula: need 1 <= m <= n");
  long long p = 1;
  for (int i = 0; i < m; ++i) p *= (n + i) / m;
  return p;
}

GBruteResult g_bruteforce(int n, int m, std::uint64_t budget) {
  check_ground_set(n);
  if (m < 1) throw ContractError("g_bruteforce: m must be >= 1");
  const long long universe = 1LL << n;
  if (m > universe) throw ContractError("g_bruteforce: m exceeds 2^n");
  if (n > 8) throw ResourceError("g_bruteforce: capped at n <= 8");

  long long families = binomial(static_cast<int>(universe), m);
  if (families <= 0 ||
      static_cast<std::uint64_t>(families) >
          budget / (static_cast<std::uint64_t>(universe) * m))
    throw ResourceError("g_bruteforce: C(2^n, m) * 2^n * m exceeds budget");

  GBruteResult best;
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    std::vector<Mask> members(idx.begin(), idx.end());
    const Family f{n, std::move(members)};
    const long long mc = static_cast<long long>(minimal_covers(f).members.size());
    if (mc > best.value) {
      best.value = mc;
      best.witness = f;
    }
    int i = m - 1;
    while (i >= 0 && idx[i] == universe - m + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

long long eq1_bound(const Family& f) {
  const int m = static_cast<int>(f.members.size());
  if (m < 1) throw ContractError("eq1_bound: empty family");

  Mask shared = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) shared |= f.members[i] & f.members[j];
  const int a = popcount(shared);
  if (a == 0)
    throw UnsupportedRegimeError("eq1_bound: family is pairwise disjoint");

  std::vector<long long> sizes;  // unshared part sizes, descending
  for (Mask mem : f.members) sizes.push_back(popcount(mem & ~shared));
  std::sort(sizes.rbegin(), sizes.rend());

  long long bound = 1;
  for (long long s : sizes) bound *= s;
  for (int j = 1; j <= std::min(a, m - 1); ++j) {
    long long prod = 1;
    for (int i = 0; i < m - j - 1; ++i) prod *= sizes[i];
    bound += binomial(a, j) * prod;
  }
  return bound;
}

long long antichain_pair_count(int n) {
  check_ground_set(n);
  long long p3 = 1;
  for (int i = 0; i < n; ++i) p3 *= 3;
  return (1LL << (2 * n - 1)) - p3 + (1LL << (n - 1));
}

namespace {

int ceil_log2(long long s) {
  int t = 0;
  while ((1LL << t) < s) ++t;
  return t;
}

}  // namespace

int exact_h_search(int n, int k) {
  if (n > 4)
    throw ResourceError("exact_h_search: exhaustive search capped at n <= 4");
  const auto antichains = enumerate_antichains(n, k);
  if (antichains.empty())
    throw UnsupportedRegimeError("exact_h_search: no k-antichain exists on [n]");
  const std::size_t count = antichains.size();
  if (count == 1) return 0;

  const int universe = 1 << n;
  std::vector<std::vector<char>> ans(universe, std::vector<char>(count));
  for (int q = 0; q < universe; ++q)
    for (std::size_t i = 0; i < count; ++i)
      ans[q][i] = answer_query(antichains[i], static_cast<Mask>(q)) ? 1 : 0;

  // Duplicate-signature detection with epoch stamping; family size stays
  // small enough for a direct 2^s table.
  for (int s = ceil_log2(static_cast<long long>(count)); s <= universe; ++s) {
    std::vector<std::uint32_t> stamp(std::size_t{1} << s, 0);
    std::uint32_t epoch = 0;

    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ++epoch;
      bool identifying = true;
      for (std::size_t i = 0; i < count && identifying; ++i) {
        std::uint32_t sig = 0;
        for (int j = 0; j < s; ++j) sig |= std::uint32_t{ans[idx[j]][i]} << j;
        if (stamp[sig] == epoch)
          identifying = false;
        else
          stamp[sig] = epoch;
      }
      if (identifying) return s;

      int i = s - 1;
      while (i >= 0 && idx[i] == universe - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw ContractError("exact_h_search: even the full power set fails");
}

}  // namespace acs
