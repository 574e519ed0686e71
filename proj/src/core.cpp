#include "acs/core.hpp"

#include <algorithm>
#include <sstream>

namespace acs {

void check_ground_set(int n) {
  if (n < 1 || n > kMaxGroundSet)
    throw ContractError("ground-set size must be in [1, " +
                        std::to_string(kMaxGroundSet) + "], got " +
                        std::to_string(n));
}

Subset::Subset(int n_, Mask bits_) : n(n_), bits(bits_) {
  check_ground_set(n);
  if (bits & ~full_mask(n))
    throw ContractError("subset has bits outside [n]");
}

Family make_family(int n, std::vector<Mask> members) {
  check_ground_set(n);
  for (Mask m : members)
    if (m & ~full_mask(n)) throw ContractError("family member outside [n]");
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw ContractError("family has duplicate members");
  return Family{n, std::move(members)};
}

Family family_of(int n, const std::vector<std::vector<int>>& sets) {
  std::vector<Mask> members;
  members.reserve(sets.size());
  for (const auto& s : sets) {
    Mask m = 0;
    for (int e : s) {
      if (e < 1 || e > n) throw ContractError("element outside [n]");
      m |= Mask{1} << (e - 1);
    }
    members.push_back(m);
  }
  return make_family(n, std::move(members));
}

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  while (m) {
    int b = std::countr_zero(m);
    out.push_back(b + 1);
    m &= m - 1;
  }
  return out;
}

std::string to_string(Mask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements_of(m)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string to_string(const Family& f) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    if (i) os << ',';
    os << to_string(f.members[i]);
  }
  os << '}';
  return os.str();
}

bool is_subset(const Subset& a, const Subset& b) {
  if (a.n != b.n) throw DimensionError("is_subset: mismatched ground sets");
  return mask_subset(a.bits, b.bits);
}

bool is_antichain(const Family& f) {
  const auto& m = f.members;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (mask_subset(m[i], m[j]) || mask_subset(m[j], m[i])) return false;
  return true;
}

Family minimal_members(const Family& f) {
  std::vector<Mask> out;
  for (Mask a : f.members) {
    bool minimal = true;
    for (Mask b : f.members) {
      if (b != a && mask_subset(b, a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return make_family(f.n, std::move(out));
}

Family complement_family(const Family& f) {
  const Mask full = full_mask(f.n);
  std::vector<Mask> out;
  out.reserve(f.members.size());
  for (Mask m : f.members) out.push_back(full & ~m);
  return make_family(f.n, std::move(out));
}

bool is_cover(const Subset& a, const Family& f) {
  if (a.n != f.n) throw DimensionError("is_cover: mismatched ground sets");
  if (f.members.empty())
    throw ContractError("is_cover: empty family (vacuous cover)");
  for (Mask m : f.members)
    if ((a.bits & m) == 0) return false;
  return true;
}

Family minimal_covers(const Family& f) {
  if (f.members.empty()) throw ContractError("minimal_covers: empty family");
  for (Mask m : f.members)
    if (m == 0) return Family{f.n, {}};  // an empty member admits no cover

  const Mask full = full_mask(f.n);
  auto covers = [&](Mask c) {
    for (Mask m : f.members)
      if ((c & m) == 0) return false;
    return true;
  };

  // Ascending by popcount then value: anything kept earlier is no larger,
  // so a candidate is minimal iff it contains no kept cover.
  std::vector<Mask> kept;
  for (int pc = 0; pc <= f.n; ++pc) {
    for (Mask c = 0; c <= full; ++c) {
      if (popcount(c) != pc) continue;
      if (!covers(c)) continue;
      bool minimal = true;
      for (Mask k : kept) {
        if (mask_subset(k, c)) {
          minimal = false;
          break;
        }
      }
      if (minimal) kept.push_back(c);
    }
  }
  return make_family(f.n, std::move(kept));
}

namespace {

void antichain_rec(int n, int k, std::vector<Mask>& chosen, Mask from,
                   const std::function<void(const std::vector<Mask>&)>& fn) {
  if (static_cast<int>(chosen.size()) == k) {
    fn(chosen);
    return;
  }
  const Mask full = full_mask(n);
  for (Mask c = from; c <= full; ++c) {
    bool ok = true;
    for (Mask p : chosen) {
      if (mask_subset(p, c) || mask_subset(c, p)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(c);
    antichain_rec(n, k, chosen, c + 1, fn);
    chosen.pop_back();
  }
}

}  // namespace

void for_each_antichain(int n, int k,
                        const std::function<void(const std::vector<Mask>&)>& fn) {
  if (n < 1 || n > 8)
    throw ResourceError("for_each_antichain: ground set capped at n <= 8");
  if (k < 1) throw ContractError("for_each_antichain: k must be >= 1");
  std::vector<Mask> chosen;
  chosen.reserve(k);
  antichain_rec(n, k, chosen, 0, fn);
}

std::vector<Antichain> enumerate_antichains(int n, int k) {
  std::vector<Antichain> out;
  for_each_antichain(n, k, [&](const std::vector<Mask>& members) {
    out.push_back(Family{n, members});
  });
  return out;
}

long long count_antichains(int n, int k) {
  long long c = 0;
  for_each_antichain(n, k, [&](const std::vector<Mask>&) { ++c; });
  return c;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace acs
