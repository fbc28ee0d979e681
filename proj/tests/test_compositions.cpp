#include "doctest.h"
#include "pqsym/composition.hpp"

using namespace pqsym;

TEST_CASE("set_of and comp_of") {
  CHECK(set_of({3, 2, 5}).elements == std::vector<int>{3, 5});
  CHECK(set_of({3, 2, 5}).ambient == 10);
  CHECK(set_of({7}).elements.empty());
  CHECK(set_of({1, 1, 1}).elements == std::vector<int>{1, 2});

  CHECK(comp_of({3, 5}, 10) == Composition{3, 2, 5});
  CHECK(comp_of({}, 4) == Composition{4});
  CHECK(comp_of({1, 2}, 3) == Composition{1, 1, 1});
  CHECK_THROWS_AS(comp_of({4}, 4), std::invalid_argument);

  // round trips
  for (int n = 0; n <= 8; ++n)
    for (const auto& alpha : compositions_of(n)) {
      CHECK(comp_of(set_of(alpha)) == alpha);
    }
}

TEST_CASE("peak_of") {
  auto x = make_index_set({2, 4, 8, 10, 11}, 12);
  CHECK(peak_of(x).elements == std::vector<int>{2, 4, 8, 10});
  CHECK(peak_of(make_index_set({}, 5)).elements.empty());
  CHECK(peak_of(make_index_set({1, 2, 3}, 5)).elements.empty());

  // idempotent on peak sets
  for (int n = 2; n <= 9; ++n)
    for (const auto& alpha : compositions_of(n, true)) {
      IndexSet s = set_of(alpha);
      CHECK(is_peak_set(s));
      CHECK(peak_of(s) == s);
    }
}

TEST_CASE("composition enumeration") {
  CHECK(compositions_of(0) == std::vector<Composition>{{}});
  CHECK(compositions_of(3).size() == 4);
  auto peaks4 = compositions_of(4, true);
  CHECK(peaks4 == std::vector<Composition>{{2, 1}, {2, 2}, {3, 1}, {4}});

  // |Cp_n| = 2^{n-1}; peak compositions <-> peak sets
  for (int n = 1; n <= 12; ++n) {
    auto all = compositions_of(n);
    CHECK(static_cast<int>(all.size()) == 1 << (n - 1));
    int peak_sets = 0;
    for (const auto& alpha : all)
      if (is_peak_set(set_of(alpha))) {
        ++peak_sets;
        CHECK(is_peak_composition(alpha));
      }
    CHECK(peak_sets == static_cast<int>(compositions_of(n, true).size()));
  }
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq({2, 2}, {3, 1}));
  CHECK_FALSE(dominance_leq({3, 1}, {2, 2}));
  CHECK(dominance_leq({4}, {4}));
  CHECK_THROWS_AS(dominance_leq({2}, {3}), std::invalid_argument);

  // partial order on Cp_n, exhaustively for n <= 7
  for (int n = 1; n <= 7; ++n) {
    auto all = compositions_of(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
        for (const auto& c : all)
          if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
      }
  }
}

TEST_CASE("refinement") {
  CHECK(refines({1, 1, 2}, {2, 2}));
  CHECK_FALSE(refines({2, 2}, {1, 3}));
  CHECK(refines({3, 1}, {3, 1}));
}

TEST_CASE("sorting sign") {
  CHECK(sorting_sign({3, 2}) == 1);
  CHECK(sorting_sign({2, 3}) == -1);
  CHECK(sorting_sign({2, 4, 3}) == 1);
  CHECK_THROWS_AS(sorting_sign({2, 2}), std::invalid_argument);
}

TEST_CASE("partition helpers") {
  CHECK(conjugate({5, 4, 3}) == Composition{3, 3, 3, 2, 1});
  CHECK(sorted_decreasing({2, 4, 3}) == Composition{4, 3, 2});
  CHECK(reversed({3, 2, 5}) == Composition{5, 2, 3});
  CHECK(is_peak_partition({3, 3, 1}));
  CHECK_FALSE(is_peak_partition({3, 1, 1}));
  CHECK(is_strict_partition({5, 3}));
}
