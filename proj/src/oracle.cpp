#include "acs/oracle.hpp"

namespace acs {

bool answer_query(const Antichain& s, const Subset& q) {
  if (s.n != q.n) throw DimensionError("answer_query: mismatched ground sets");
  return answer_query(s, q.bits);
}

bool answer_query(const Antichain& s, Mask q) {
  for (Mask h : s.members)
    if (mask_subset(h, q)) return true;
  return false;
}

bool Oracle::ask(Mask q) {
  if (q & ~full_mask(log_.n)) throw DimensionError("ask: query outside [n]");
  bool a = respond(q);
  log_.entries.push_back({q, a});
  return a;
}

bool Oracle::ask(const Subset& q) {
  if (q.n != log_.n) throw DimensionError("ask: mismatched ground sets");
  return ask(q.bits);
}

AntichainOracle::AntichainOracle(Antichain hidden)
    : Oracle(hidden.n), hidden_(std::move(hidden)) {
  if (hidden_.members.empty())
    throw ContractError("AntichainOracle: hidden family must be nonempty");
  if (!is_antichain(hidden_))
    throw ContractError("AntichainOracle: hidden family is not an antichain");
}

std::vector<Antichain> consistent_antichains(const Transcript& t, int k) {
  if (t.n > 6)
    throw ResourceError("consistent_antichains: brute-force referee capped at n <= 6");
  std::vector<Antichain> out;
  for_each_antichain(t.n, k, [&](const std::vector<Mask>& members) {
    const Antichain s{t.n, members};
    for (const auto& e : t.entries)
      if (answer_query(s, e.query) != e.answer) return;
    out.push_back(s);
  });
  return out;
}

}  // namespace acs
