#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "trimlat/bitlattice.hpp"
#include "test_support.hpp"

using namespace trimlat;

TEST_CASE("mask helpers") {
  CHECK(mask_rank(0) == 0);
  CHECK(mask_rank(mask_of({0, 2, 3})) == 3);
  CHECK(is_subset_of(mask_of({1}), mask_of({0, 1})));
  CHECK_FALSE(is_subset_of(mask_of({2}), mask_of({0, 1})));
  CHECK(universe_mask(0) == 0);
  CHECK(universe_mask(3) == 0b111u);
  CHECK(universe_mask(32) == ~Mask{0});
  CHECK(mask_elements(mask_of({4, 1})) == std::vector<int>{1, 4});
}

TEST_CASE("set family normalizes and validates") {
  SetFamily f(3, {mask_of({1}), mask_of({0}), mask_of({1})});
  CHECK(f.size() == 2);
  CHECK(f.members() == std::vector<Mask>{mask_of({0}), mask_of({1})});
  CHECK(f.contains(mask_of({1})));
  CHECK_FALSE(f.contains(mask_of({2})));
  CHECK_THROWS_AS(SetFamily(2, {mask_of({5})}), std::invalid_argument);
  CHECK_THROWS_AS(SetFamily(33), std::invalid_argument);
}

TEST_CASE("upper closure of named families") {
  CHECK(upper_closure(SetFamily(3)).empty());

  SetFamily bottom(2, {0});
  CHECK(upper_closure(bottom).members() == std::vector<Mask>{0, 1, 2, 3});

  SetFamily f(3, {mask_of({0}), mask_of({1, 2})});
  std::vector<Mask> expected{mask_of({0}),    mask_of({0, 1}), mask_of({0, 2}),
                             mask_of({1, 2}), mask_of({0, 1, 2})};
  std::sort(expected.begin(), expected.end());
  CHECK(upper_closure(f).members() == expected);
}

TEST_CASE("minimal and maximal members") {
  SetFamily f(3, {mask_of({0}), mask_of({0, 1}), mask_of({1, 2})});
  CHECK(minimal_members(f).members() ==
        std::vector<Mask>{mask_of({0}), mask_of({1, 2})});
  CHECK(maximal_members(f).members() ==
        std::vector<Mask>{mask_of({0, 1}), mask_of({1, 2})});
  CHECK(minimal_members(SetFamily(3)).empty());
}

TEST_CASE("frontier deduplicates and pops by rank") {
  RankFrontier fr(3);
  fr.push(mask_of({0}));
  fr.push(mask_of({0}));
  auto first = fr.pop();
  REQUIRE(first.has_value());
  CHECK(*first == mask_of({0}));
  CHECK_FALSE(fr.pop().has_value());

  RankFrontier fr2(3);
  fr2.push(mask_of({1, 2}));
  fr2.push(mask_of({0}));
  CHECK(*fr2.pop() == mask_of({0}));
  CHECK(*fr2.pop() == mask_of({1, 2}));

  RankFrontier empty(3);
  CHECK_FALSE(empty.pop().has_value());
}

TEST_CASE("frontier rejects pushes below the current rank") {
  RankFrontier fr(4);
  fr.push(mask_of({0, 1}));
  REQUIRE(fr.pop().has_value());
  CHECK(fr.current_rank() == 2);
  CHECK_THROWS_AS(fr.push(mask_of({3})), std::invalid_argument);
  CHECK_NOTHROW(fr.push(mask_of({0, 3})));
}

TEST_CASE("frontier pops are nondecreasing in rank") {
  std::mt19937 rng(7);
  for (int round = 0; round < 20; ++round) {
    int n = 1 + static_cast<int>(rng() % 8);
    RankFrontier fr(n);
    std::uniform_int_distribution<Mask> masks(0, universe_mask(n));
    for (int i = 0; i < 10; ++i) fr.push(masks(rng));
    int last = 0;
    while (auto x = fr.pop()) {
      CHECK(mask_rank(*x) >= last);
      last = mask_rank(*x);
      // grow the way the lattice walks do
      if (mask_rank(*x) < n && rng() % 2)
        fr.push(*x | (universe_mask(n) & ~*x & -(universe_mask(n) & ~*x)));
    }
  }
}

TEST_CASE("upper closure matches the scan and is idempotent") {
  std::mt19937 rng(11);
  for (int round = 0; round < 40; ++round) {
    int n = 1 + static_cast<int>(rng() % 12);
    SetFamily family = ttest::random_family(n, static_cast<int>(rng() % 6), rng);
    SetFamily closure = upper_closure(family);
    CHECK(closure.members() == ttest::scan_closure(n, family.members()));
    CHECK(upper_closure(closure).members() == closure.members());

    SetFamily mins = minimal_members(family);
    SetFamily maxs = maximal_members(family);
    for (Mask m : mins.members()) CHECK(family.contains(m));
    for (Mask m : maxs.members()) CHECK(family.contains(m));
    CHECK(upper_closure(mins).members() == closure.members());
  }
}

TEST_CASE("sparse table stores zeros but reports nonzero support") {
  SparseTable t(3);
  t.set(mask_of({0}), 4);
  t.set(mask_of({1}), 0);
  CHECK(t.size() == 2);
  CHECK(t.support() == std::vector<Mask>{mask_of({0})});
  CHECK(t.value(mask_of({1})) == 0);
  CHECK(t.value(mask_of({2})) == 0);
  CHECK(t.stores(mask_of({1})));
  CHECK_FALSE(t.stores(mask_of({2})));
  CHECK_THROWS_AS(t.set(mask_of({4}), 1), std::invalid_argument);

  SparseTable u(3);
  u.set(mask_of({0}), 4);
  u.set(mask_of({2}), 0);
  CHECK(t.same_function(u));
}
