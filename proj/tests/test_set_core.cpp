#include "doctest.h"

#include <algorithm>

#include "acs/core.hpp"
#include "test_support.hpp"

using namespace acs;

TEST_CASE("is_subset basics") {
  CHECK(is_subset(Subset(3, 0b001), Subset(3, 0b101)));         // {1} in {1,3}
  CHECK_FALSE(is_subset(Subset(3, 0b011), Subset(3, 0b101)));   // {1,2} vs {1,3}
  CHECK(is_subset(Subset(3, 0), Subset(3, 0)));                 // empty reflexive
  CHECK_THROWS_AS(is_subset(Subset(3, 1), Subset(4, 1)), DimensionError);
}

TEST_CASE("subset mask validation") {
  CHECK_THROWS_AS(Subset(3, 0b1000), ContractError);
  CHECK_THROWS_AS(Subset(0, 0), ContractError);
  CHECK_THROWS_AS(Subset(21, 0), ContractError);
  CHECK_NOTHROW(Subset(20, full_mask(20)));
}

TEST_CASE("make_family rejects duplicates and sorts") {
  CHECK_THROWS_AS(make_family(3, {1, 1}), ContractError);
  const Family f = make_family(3, {4, 1});
  CHECK(f.members == std::vector<Mask>{1, 4});
}

TEST_CASE("is_antichain") {
  CHECK(is_antichain(family_of(2, {{1}, {2}})));
  CHECK_FALSE(is_antichain(family_of(2, {{1}, {1, 2}})));
  CHECK(is_antichain(Family{3, {}}));  // vacuous
}

TEST_CASE("minimal_members") {
  CHECK(minimal_members(family_of(3, {{1}, {1, 2}, {2, 3}})) ==
        family_of(3, {{1}, {2, 3}}));
  const Family ac = family_of(3, {{1}, {2, 3}});
  CHECK(minimal_members(ac) == ac);  // fixed point on antichains
  CHECK(minimal_members(family_of(2, {{1, 2}, {1}, {2}})) ==
        family_of(2, {{1}, {2}}));
  CHECK(is_antichain(minimal_members(family_of(3, {{1, 2}, {2, 3}, {1, 2, 3}}))));
}

TEST_CASE("complement_family") {
  CHECK(complement_family(family_of(3, {{1}})) == family_of(3, {{2, 3}}));
  const Family f = family_of(3, {{1, 2}, {3}});
  CHECK(complement_family(complement_family(f)) == f);
  CHECK(complement_family(f) == family_of(3, {{3}, {1, 2}}));
}

TEST_CASE("is_cover") {
  const Family f = family_of(4, {{1, 2}, {3, 4}});
  CHECK(is_cover(Subset(4, 0b0101), f));        // {1,3}
  CHECK_FALSE(is_cover(Subset(4, 0b0001), f));  // {1}
  CHECK(is_cover(Subset(4, full_mask(4)), f));
  CHECK_THROWS_AS(is_cover(Subset(4, 1), Family{4, {}}), ContractError);
}

TEST_CASE("minimal_covers matches the definitional brute force") {
  SUBCASE("disjoint cross product") {
    const Family f = family_of(4, {{1, 2}, {3, 4}});
    CHECK(minimal_covers(f) ==
          family_of(4, {{1, 3}, {2, 3}, {1, 4}, {2, 4}}));
  }
  SUBCASE("overlapping pair, value frozen from the definitional oracle") {
    const Family f = family_of(3, {{1, 2}, {2, 3}});
    const auto expected = test::minimal_covers_def(f);
    CHECK(minimal_covers(f).members == expected);
    CHECK(minimal_covers(f) == family_of(3, {{2}, {1, 3}}));
  }
  SUBCASE("single singleton") {
    CHECK(minimal_covers(family_of(1, {{1}})) == family_of(1, {{1}}));
  }
  SUBCASE("empty member admits no cover") {
    CHECK(minimal_covers(make_family(3, {0, 0b011})).members.empty());
  }
  SUBCASE("random families agree with the definition") {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    auto rnd = [&] { s ^= s << 13; s ^= s >> 7; s ^= s << 17; return s; };
    for (int t = 0; t < 300; ++t) {
      const int n = 2 + static_cast<int>(rnd() % 4);
      const int m = 1 + static_cast<int>(rnd() % 3);
      std::vector<Mask> mem;
      while (static_cast<int>(mem.size()) < m) {
        Mask c = static_cast<Mask>(rnd()) & full_mask(n);
        if (std::find(mem.begin(), mem.end(), c) == mem.end()) mem.push_back(c);
      }
      const Family f = make_family(n, mem);
      CHECK(minimal_covers(f).members == test::minimal_covers_def(f));
    }
  }
}

TEST_CASE("enumerate_antichains counts and order") {
  const auto one = enumerate_antichains(2, 2);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == family_of(2, {{1}, {2}}));

  CHECK(enumerate_antichains(3, 2).size() == 9);
  CHECK(enumerate_antichains(4, 2).size() == 55);

  // canonical order: lexicographic on the ascending member list
  const auto all = enumerate_antichains(3, 2);
  auto sorted = all;
  std::sort(sorted.begin(), sorted.end(),
            [](const Family& a, const Family& b) { return a.members < b.members; });
  for (std::size_t i = 0; i < all.size(); ++i)
    CHECK(all[i].members == sorted[i].members);

  for (const auto& s : all) CHECK(is_antichain(s));

  CHECK_THROWS_AS(enumerate_antichains(9, 2), ResourceError);
  CHECK_THROWS_AS(enumerate_antichains(3, 0), ContractError);
}
