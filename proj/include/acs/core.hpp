#pragma once

// Bitmask-encoded subsets of [n], set families, antichains, and minimal
// cover arithmetic. The universe is [n] = {1,...,n} with n <= 20; element i
// is bit i-1 of a Mask. All operations here are pure.

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace acs {

using Mask = std::uint32_t;

inline constexpr int kMaxGroundSet = 20;

// Ground-set sizes disagree between operands.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A stated precondition was violated.
struct ContractError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The (n, k) combination is outside every supported regime.
struct UnsupportedRegimeError : std::domain_error {
  using std::domain_error::domain_error;
};

// Parameters exceed the configured brute-force caps or node budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An answer vector is inconsistent with every k-antichain.
struct DecodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Mask full_mask(int n) { return (n == 0) ? 0u : ((Mask{1} << n) - 1u); }

inline int popcount(Mask m) { return std::popcount(m); }

void check_ground_set(int n);

/// A subset of [n]; bit i-1 set means element i is present.
struct Subset {
  int n = 0;
  Mask bits = 0;

  Subset() = default;
  Subset(int n_, Mask bits_);
};

/// A duplicate-free family of subsets of [n], kept in canonical order
/// (ascending mask value). An antichain is a Family whose members are
/// pairwise incomparable; the alias marks intent.
struct Family {
  int n = 0;
  std::vector<Mask> members;

  bool operator==(const Family&) const = default;
};

using Antichain = Family;

/// Validates, sorts ascending, and rejects duplicates.
Family make_family(int n, std::vector<Mask> members);

/// Convenience: build a family from element lists (1-based).
Family family_of(int n, const std::vector<std::vector<int>>& sets);

std::vector<int> elements_of(Mask m);
std::string to_string(Mask m);
std::string to_string(const Family& f);

bool is_subset(const Subset& a, const Subset& b);
inline bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

bool is_antichain(const Family& f);

/// Members that contain no other member as a proper subset. Always an
/// antichain; a fixed point on antichain input.
Family minimal_members(const Family& f);

/// Replaces each member by its complement within [n]. Involution.
Family complement_family(const Family& f);

/// True iff a intersects every member of f. f must be nonempty.
bool is_cover(const Subset& a, const Family& f);

/// All minimal covers (transversals) of f: covers whose every proper subset
/// fails to cover. Empty result if some member of f is empty. Brute force
/// over all 2^n candidates, ascending by popcount then value.
Family minimal_covers(const Family& f);

/// Calls fn once per k-member antichain over [n], in canonical order
/// (lexicographic on the ascending member list). Hard cap n <= 8.
void for_each_antichain(int n, int k,
                        const std::function<void(const std::vector<Mask>&)>& fn);

std::vector<Antichain> enumerate_antichains(int n, int k);

long long count_antichains(int n, int k);

long long binomial(int n, int k);

}  // namespace acs
