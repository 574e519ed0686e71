#include "acs/adaptive.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <unordered_map>

namespace acs {

namespace {

// Forwards fresh queries to the inner oracle and replays cached answers
// without re-charging them. Its own log holds the logical query sequence.
class CachingOracle final : public Oracle {
 public:
  explicit CachingOracle(Oracle& inner) : Oracle(inner.n()), inner_(inner) {}

 protected:
  bool respond(Mask q) override {
    if (auto it = cache_.find(q); it != cache_.end()) return it->second;
    bool a = inner_.ask(q);
    cache_.emplace(q, a);
    return a;
  }

 private:
  Oracle& inner_;
  std::unordered_map<Mask, bool> cache_;
};

// Answers of this run must match the returned antichain; a mismatch means
// the oracle was not playing any k-antichain we could have found.
void check_run_consistency(const Oracle& oracle, std::size_t first_entry,
                           const Antichain& found, const char* who) {
  const auto& entries = oracle.log().entries;
  for (std::size_t i = first_entry; i < entries.size(); ++i) {
    if (answer_query(found, entries[i].query) != entries[i].answer)
      throw ContractError(std::string(who) +
                          ": transcript inconsistent with the reconstruction");
  }
}

}  // namespace

Mask gainanov_find_one(Oracle& oracle, Mask a) {
  if (a & ~full_mask(oracle.n()))
    throw DimensionError("gainanov_find_one: set outside [n]");
  Mask current = a;
  auto elems = elements_of(a);
  for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
    const Mask probe = current & ~(Mask{1} << (*it - 1));
    if (oracle.ask(probe)) current = probe;  // element excluded
    // NO confirms the element; it stays in every later probe.
  }
  return current;
}

SolveResult solve(Oracle& oracle, int k) {
  const int n = oracle.n();
  if (k < 1) throw ContractError("solve: k must be >= 1");
  if (k >= 2 && n > 12)
    throw ResourceError("solve: minimal-cover rounds capped at n <= 12");

  const std::size_t start_count = oracle.count();
  const std::size_t start_entry = oracle.log().entries.size();
  CachingOracle cached(oracle);

  std::vector<Mask> found;
  found.push_back(gainanov_find_one(cached, full_mask(n)));

  std::vector<std::size_t> mc_sizes;
  while (static_cast<int>(found.size()) < k) {
    const Family mc = minimal_covers(make_family(n, found));
    mc_sizes.push_back(mc.members.size());
    const Family probes = complement_family(mc);

    std::optional<Mask> hit;
    for (Mask q : probes.members) {
      if (cached.ask(q)) {
        hit = q;
        break;
      }
    }
    if (!hit)
      throw ContractError("solve: oracle inconsistent with any k-antichain "
                          "(no extension set answered YES)");
    found.push_back(gainanov_find_one(cached, *hit));
  }

  Antichain result = make_family(n, std::move(found));
  if (!is_antichain(result))
    throw ContractError("solve: reconstructed family is not an antichain");
  check_run_consistency(oracle, start_entry, result, "solve");
  return {std::move(result), oracle.count() - start_count, std::move(mc_sizes)};
}

SolveResult solve_k2(Oracle& oracle) {
  const int n = oracle.n();
  const Mask full = full_mask(n);
  const std::size_t start_count = oracle.count();
  const std::size_t start_entry = oracle.log().entries.size();
  CachingOracle cached(oracle);

  const Mask first = gainanov_find_one(cached, full);
  if (first == 0 || first == full)
    throw ContractError("solve_k2: hidden family cannot be a 2-antichain");

  // Probe [n] minus one element of the first member at a time. NO pins the
  // element into the second member; the first YES localizes it.
  Mask confirmed = 0;
  std::optional<Mask> second;
  for (int h : elements_of(first)) {
    const Mask probe = full & ~(Mask{1} << (h - 1));
    if (!cached.ask(probe)) {
      confirmed |= Mask{1} << (h - 1);
      continue;
    }
    Mask current = probe;
    auto unknown = elements_of(probe & ~confirmed);
    for (auto it = unknown.rbegin(); it != unknown.rend(); ++it) {
      const Mask next = current & ~(Mask{1} << (*it - 1));
      if (cached.ask(next)) current = next;
    }
    second = current;
    break;
  }
  if (!second)
    throw ContractError("solve_k2: no second member distinct from the first");

  Antichain result = make_family(n, {first, *second});
  if (!is_antichain(result))
    throw ContractError("solve_k2: reconstruction is not an antichain");
  check_run_consistency(oracle, start_entry, result, "solve_k2");
  return {std::move(result), oracle.count() - start_count, {}};
}

long long theorem3_bound(int n, int k, const std::vector<long long>& g_values) {
  if (static_cast<int>(g_values.size()) != k - 1)
    throw ContractError("theorem3_bound: need exactly k-1 g values");
  long long s = 0;
  for (long long g : g_values) s += g;
  return s + static_cast<long long>(k) * n;
}

namespace {

int ceil_log2(std::size_t s) {
  int t = 0;
  while ((std::size_t{1} << t) < s) ++t;
  return t;
}

struct MinimaxSolver {
  int n;
  std::vector<std::vector<char>> answer;  // [query][antichain index]
  std::map<std::vector<std::uint32_t>, int> memo;
  std::uint64_t nodes = 0;
  std::uint64_t budget;

  int value(const std::vector<std::uint32_t>& state) {
    if (state.size() <= 1) return 0;
    if (auto it = memo.find(state); it != memo.end()) return it->second;
    if (++nodes > budget)
      throw ResourceError("exact_f: node budget exceeded at " +
                          std::to_string(nodes) + " expansions");

    const int lb = ceil_log2(state.size());
    const Mask full = full_mask(n);

    // Prefer balanced splits; the information-theoretic floor then often
    // closes the node immediately.
    std::vector<std::pair<long, Mask>> order;
    for (Mask q = 0; q <= full; ++q) {
      long yes = 0;
      for (auto i : state) yes += answer[q][i];
      if (yes == 0 || yes == static_cast<long>(state.size())) continue;
      order.emplace_back(std::labs(2 * yes - static_cast<long>(state.size())), q);
    }
    std::sort(order.begin(), order.end());

    int best = std::numeric_limits<int>::max();
    for (const auto& [bal, q] : order) {
      std::vector<std::uint32_t> yes_state, no_state;
      for (auto i : state)
        (answer[q][i] ? yes_state : no_state).push_back(i);
      const int v = 1 + std::max(value(yes_state), value(no_state));
      best = std::min(best, v);
      if (best == lb) break;
    }
    if (best == std::numeric_limits<int>::max())
      throw ContractError("exact_f: indistinguishable distinct antichains");
    memo.emplace(state, best);
    return best;
  }
};

}  // namespace

int exact_f(int n, int k, const ExactFOptions& opts) {
  if (n > 4) throw ResourceError("exact_f: exhaustive minimax capped at n <= 4");
  auto antichains = enumerate_antichains(n, k);
  if (antichains.empty())
    throw UnsupportedRegimeError("exact_f: no k-antichain exists on [n]");

  MinimaxSolver s;
  s.n = n;
  s.budget = opts.node_budget;
  const Mask full = full_mask(n);
  s.answer.assign(std::size_t{full} + 1, {});
  for (Mask q = 0; q <= full; ++q) {
    s.answer[q].resize(antichains.size());
    for (std::size_t i = 0; i < antichains.size(); ++i)
      s.answer[q][i] = answer_query(antichains[i], q) ? 1 : 0;
  }

  std::vector<std::uint32_t> all(antichains.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::uint32_t>(i);
  return s.value(all);
}

}  // namespace acs
