#include "doctest.h"

#include <algorithm>

#include "acs/core.hpp"
#include "acs/nonadaptive.hpp"
#include "test_support.hpp"

using namespace acs;

TEST_CASE("h_formula across regimes") {
  // k = 1
  CHECK(h_formula(1, 1) == 1);
  CHECK(h_formula(2, 1) == 2);
  CHECK(h_formula(3, 1) == 3);
  CHECK(h_formula(10, 1) == 10);
  // degenerate (2, 2)
  CHECK(h_formula(2, 2) == 0);
  // 1 < k < n
  CHECK(h_formula(3, 2) == 5);
  CHECK(h_formula(4, 2) == 9);
  CHECK(h_formula(4, 3) == 13);
  CHECK(h_formula(5, 2) == 14);
  CHECK(h_formula(5, 3) == 24);
  // k >= n
  CHECK(h_formula(6, 6) == 60);
  CHECK(h_formula(6, 7) == 60);  // cap C(4,2)+1 = 7
  CHECK(h_formula(10, 10) == 1020);

  CHECK_THROWS_AS(h_formula(3, 0), ContractError);
  CHECK_THROWS_AS(h_formula(2, 3), UnsupportedRegimeError);
  CHECK_THROWS_AS(h_formula(6, 8), UnsupportedRegimeError);  // above the cap
  CHECK_THROWS_AS(h_formula(21, 1), ContractError);
}

TEST_CASE("build_family contents and sizes") {
  CHECK(build_family(3, 1) == family_of(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(build_family(3, 2) ==
        family_of(3, {{1}, {2}, {3}, {1, 3}, {2, 3}}));
  CHECK(build_family(2, 2).members.empty());

  SUBCASE("k >= n family is everything minus four distinguished sets") {
    const Family f = build_family(6, 6);
    CHECK(f.members.size() == 60);
    for (Mask m : f.members) {
      CHECK(m != 0);
      CHECK(m != full_mask(6));
      CHECK(m != (Mask{1} << 5));   // {6}
      CHECK(m != full_mask(5));     // [5]
    }
  }

  SUBCASE("size always matches h_formula") {
    for (int n = 1; n <= 10; ++n)
      for (int k = 1; k <= 12; ++k) {
        long long h;
        try {
          h = h_formula(n, k);
        } catch (const UnsupportedRegimeError&) {
          CHECK_THROWS_AS(build_family(n, k), UnsupportedRegimeError);
          continue;
        }
        CHECK(static_cast<long long>(build_family(n, k).members.size()) == h);
      }
  }

  SUBCASE("middle family excludes [n-1] and respects the size band") {
    const Family f = build_family(5, 3);
    for (Mask m : f.members) {
      CHECK(popcount(m) >= 2);
      CHECK(popcount(m) <= 4);
      CHECK(m != full_mask(4));
    }
  }
}

TEST_CASE("answers_for matches the definitional oracle") {
  const Family q = build_family(4, 2);
  const Antichain s = family_of(4, {{1}, {2, 3}});
  CHECK(answers_for(s, q) == test::answers_def(s, q));
  CHECK_THROWS_AS(answers_for(family_of(3, {{1}}), q), DimensionError);
}

TEST_CASE("decode round trips, k = 1") {
  const Family q = build_family(3, 1);
  for (Mask h = 0; h <= full_mask(3); ++h) {
    const Antichain s = Family{3, {h}};
    CHECK(decode(3, 1, q, answers_for(s, q)) == s);
  }
  // all-YES answers decode to the empty-set member
  CHECK(decode(3, 1, q, {true, true, true}) == Family{3, {0}});
}

TEST_CASE("decode round trips, middle regime") {
  for (auto [n, k] : {std::pair{3, 2}, {4, 2}, {4, 3}}) {
    const Family q = build_family(n, k);
    int checked = 0;
    for_each_antichain(n, k, [&](const std::vector<Mask>& members) {
      const Antichain s{n, members};
      CHECK(decode(n, k, q, answers_for(s, q)) == s);
      ++checked;
    });
    CHECK(checked == count_antichains(n, k));
  }
}

TEST_CASE("decode round trips, k >= n regime") {
  for (int k : {6, 7}) {
    const Family q = build_family(6, k);
    int checked = 0;
    for_each_antichain(6, k, [&](const std::vector<Mask>& members) {
      const Antichain s{6, members};
      CHECK(decode(6, k, q, answers_for(s, q)) == s);
      ++checked;
    });
    CHECK(checked > 0);
  }
}

TEST_CASE("decode rejects bad input") {
  const Family q = build_family(3, 2);
  CHECK_THROWS_AS(decode(3, 2, q, {true, true}), ContractError);  // length
  CHECK_THROWS_AS(decode(3, 2, family_of(3, {{1}}), {false}), ContractError);
  // all-NO is inconsistent with every 2-antichain on [3]
  CHECK_THROWS_AS(decode(3, 2, q, std::vector<bool>(5, false)), DecodeError);
}

TEST_CASE("verify_identifying") {
  CHECK(verify_identifying(build_family(4, 2), 4, 2));
  CHECK(verify_identifying(build_family(3, 2), 3, 2));
  CHECK(verify_identifying(build_family(6, 6), 6, 6));

  SUBCASE("dropping any query from the optimal family breaks it") {
    const Family q = build_family(4, 2);
    for (std::size_t i = 0; i < q.members.size(); ++i) {
      auto reduced = q.members;
      reduced.erase(reduced.begin() + static_cast<long>(i));
      CHECK_FALSE(verify_identifying(make_family(4, reduced), 4, 2));
    }
  }

  SUBCASE("the full power set always identifies") {
    std::vector<Mask> all;
    for (Mask m = 0; m <= full_mask(4); ++m) all.push_back(m);
    CHECK(verify_identifying(make_family(4, all), 4, 2));
  }

  SUBCASE("no 4-query family identifies (3, 2): h(3, 2) = 5 is tight") {
    std::vector<Mask> all;
    for (Mask m = 0; m <= full_mask(3); ++m) all.push_back(m);
    int families = 0;
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = a + 1; b < all.size(); ++b)
        for (std::size_t c = b + 1; c < all.size(); ++c)
          for (std::size_t d = c + 1; d < all.size(); ++d) {
            const Family f = make_family(3, {all[a], all[b], all[c], all[d]});
            CHECK_FALSE(verify_identifying(f, 3, 2));
            ++families;
          }
    CHECK(families == 70);
  }

  CHECK_THROWS_AS(verify_identifying(build_family(4, 2), 7, 2), ResourceError);
}
