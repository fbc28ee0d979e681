#include <algorithm>
#include <set>

#include "doctest.h"
#include "pqsym/tableaux.hpp"

using namespace pqsym;

namespace {
Filling make(std::vector<std::vector<int>> rows) { return Filling::from_rows(std::move(rows)); }
}  // namespace

TEST_CASE("SPIT validation examples") {
  Filling s = make({{1, 2, 7}, {3, 4, 6}, {5}});
  CHECK(is_valid(s, TableauClass::SPIT));

  Filling t = make({{1, 2, 7}, {3, 5, 6}, {4}});
  auto report = validate(t, TableauClass::SPIT);
  CHECK_FALSE(report.ok);
  CHECK(report.condition == "peak-tableau-condition");

  CHECK(is_valid(make({{1, 2}, {3, 4}}), TableauClass::SYCT));
}

TEST_CASE("reading words and descents") {
  Filling t = make({{1, 2, 7, 11}, {3, 4, 12}, {5, 6, 8, 10}, {9}});
  CHECK(reading_word_col(t) == Word{1, 3, 5, 9, 2, 4, 6, 7, 12, 8, 11, 10});
  CHECK(descent_set(reading_word_col(t)).elements == std::vector<int>{2, 4, 8, 10, 11});

  Filling small = make({{1, 2}, {3, 4}});
  CHECK(reading_word_row(small) == Word{3, 4, 1, 2});
  CHECK(reading_word_young(small) == Word{3, 1, 2, 4});
  CHECK(descent_set(Word{3, 4, 1, 2}).elements == std::vector<int>{2});
  CHECK(descent_set(Word{1, 2, 3}).elements.empty());
}

TEST_CASE("bdes equals young reading descents") {
  Filling small = make({{1, 2}, {3, 4}});
  CHECK(bdes(small).elements == std::vector<int>{2});
  Filling row = make({{1, 2, 3, 4}});
  CHECK(bdes(row).elements.empty());

  for (int n = 1; n <= 7; ++n)
    for (const auto& alpha : compositions_of(n))
      for (const auto& t : enumerate_tableaux(alpha, TableauClass::SYCT))
        CHECK(bdes(t) == descent_set(reading_word_young(t)));
}

TEST_CASE("enumerate SPIT((3,3,1)) matches the ten-element list") {
  auto spits = enumerate_tableaux({3, 3, 1}, TableauClass::SPIT);
  CHECK(spits.size() == 10);
  std::set<Filling> got(spits.begin(), spits.end());
  std::set<Filling> expected = {
      make({{1, 2, 3}, {4, 5, 6}, {7}}), make({{1, 2, 3}, {4, 5, 7}, {6}}),
      make({{1, 2, 4}, {3, 5, 6}, {7}}), make({{1, 2, 4}, {3, 5, 7}, {6}}),
      make({{1, 2, 5}, {3, 4, 6}, {7}}), make({{1, 2, 5}, {3, 4, 7}, {6}}),
      make({{1, 2, 6}, {3, 4, 5}, {7}}), make({{1, 2, 6}, {3, 4, 7}, {5}}),
      make({{1, 2, 7}, {3, 4, 5}, {6}}), make({{1, 2, 7}, {3, 4, 6}, {5}})};
  CHECK(got == expected);
  for (const auto& t : spits) CHECK(is_valid(t, TableauClass::SPIT));
}

TEST_CASE("enumerate SPYCT((3,3,1)) matches the seven-element list") {
  auto list = enumerate_tableaux({3, 3, 1}, TableauClass::SPYCT);
  CHECK(list.size() == 7);
  std::set<Filling> got(list.begin(), list.end());
  std::set<Filling> expected = {
      make({{1, 2, 3}, {4, 5, 6}, {7}}), make({{1, 2, 4}, {3, 5, 6}, {7}}),
      make({{1, 2, 6}, {3, 4, 5}, {7}}), make({{1, 2, 3}, {4, 5, 7}, {6}}),
      make({{1, 2, 4}, {3, 5, 7}, {6}}), make({{1, 2, 7}, {3, 4, 5}, {6}}),
      make({{1, 2, 7}, {3, 4, 6}, {5}})};
  CHECK(got == expected);
}

TEST_CASE("single-row shapes have one tableau") {
  for (TableauClass cls : {TableauClass::SIT, TableauClass::SPIT, TableauClass::SYCT,
                           TableauClass::SPYCT, TableauClass::SYT}) {
    auto list = enumerate_tableaux({5}, cls);
    REQUIRE(list.size() == 1);
    CHECK(list.front() == make({{1, 2, 3, 4, 5}}));
  }
}

TEST_CASE("enumerated tableaux validate, n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& alpha : compositions_of(n))
      for (TableauClass cls : {TableauClass::SIT, TableauClass::SPIT, TableauClass::SYCT,
                               TableauClass::SPYCT, TableauClass::SPYT, TableauClass::SYT,
                               TableauClass::SShT, TableauClass::DIRT}) {
        if (!shape_valid_for(alpha, cls)) continue;
        for (const auto& t : enumerate_tableaux(alpha, cls)) {
          auto r = validate(t, cls);
          if (!r.ok) {
            CAPTURE(to_string(alpha));
            CAPTURE(to_string(cls));
            CAPTURE(r.condition);
          }
          CHECK(r.ok);
        }
      }
}

TEST_CASE("peak-tableau condition is the canonical two-column condition") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& alpha : compositions_of(n, true))
      for (const auto& t : enumerate_tableaux(alpha, TableauClass::SIT))
        CHECK(is_valid(t, TableauClass::SPIT) == first_two_columns_canonical(t));
}

TEST_CASE("SPYCT criterion: second column increasing") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& alpha : compositions_of(n, true))
      for (const auto& t : enumerate_tableaux(alpha, TableauClass::SYCT)) {
        bool second_increasing = true;
        int prev = 0;
        for (int r = 1; r <= static_cast<int>(t.rows.size()); ++r)
          if (t.has_box(2, r)) {
            if (t.at(2, r) < prev) second_increasing = false;
            prev = t.at(2, r);
          }
        CHECK(is_valid(t, TableauClass::SPYCT) == second_increasing);
      }
}

TEST_CASE("row strip shape") {
  CHECK(row_strip_shape(make({{1, 2, 3, 4}})) == Composition{4});
  CHECK(row_strip_shape(make({{1, 2}, {3, 4}})) == Composition{2, 2});
}

TEST_CASE("subfillings") {
  Filling t = make({{1, 2, 7}, {3, 5, 6}, {4}});
  Filling prefix = entries_at_most(t, 4);
  CHECK(prefix.shape == Composition{2, 1, 1});
  CHECK_FALSE(is_peak_composition(prefix.shape));

  Filling u = make({{1, 2, 7, 11}, {3, 4, 12}, {5, 6, 8, 10}, {9}});
  CHECK(first_boxes(u, u.size()) == u);
  CHECK(first_boxes(u, 7) == make({{1, 2}, {3, 4}, {5, 6}, {9}}));
  CHECK(first_columns(u, 2) == make({{1, 2}, {3, 4}, {5, 6}, {9}}));
  CHECK(first_rows(u, 2) == make({{1, 2, 7, 11}, {3, 4, 12}}));
}

TEST_CASE("swap entries") {
  Filling t = make({{1, 2}, {3, 4}});
  auto s1 = swap_entries(t, 1);
  REQUIRE(s1.has_value());
  CHECK(*s1 == make({{2, 1}, {3, 4}}));
  CHECK_FALSE(swap_entries(t, 9).has_value());
}

TEST_CASE("SPIT hook length formula") {
  CHECK(hook_count_spit({3, 2, 4, 2}) == 54);
  CHECK(hook_count_spit({3, 3, 1}) == 10);
  long long expected = 1;
  for (int k = 1; k <= 4; ++k) {
    expected *= 3 * k - 2;
    Composition alpha(k, 3);
    CHECK(hook_count_spit(alpha) == expected);
  }
  CHECK_THROWS_AS(hook_count_spit({1, 3}), std::invalid_argument);

  for (int n = 1; n <= 9; ++n)
    for (const auto& alpha : compositions_of(n, true))
      CHECK(hook_count_spit(alpha) ==
            static_cast<long long>(enumerate_tableaux(alpha, TableauClass::SPIT).size()));
}

TEST_CASE("SPYT hook length formula, parts <= 3") {
  CHECK(hook_count_spyt({2, 1}) == 1);
  CHECK(hook_count_spyt({3, 2}) ==
        static_cast<long long>(enumerate_tableaux({3, 2}, TableauClass::SPYT).size()));
  CHECK_THROWS_AS(hook_count_spyt({5, 3}), std::invalid_argument);
  CHECK(spyt_hook_formula_value({5, 3}) == 20);
  CHECK(enumerate_tableaux({5, 3}, TableauClass::SPYT).size() == 19);

  for (int n = 1; n <= 10; ++n)
    for (const auto& lambda : compositions_of(n, true)) {
      if (!is_peak_partition(lambda) || max_part(lambda) > 3) continue;
      CHECK(hook_count_spyt(lambda) ==
            static_cast<long long>(enumerate_tableaux(lambda, TableauClass::SPYT).size()));
    }
}

TEST_CASE("standard shifted tableaux") {
  Filling s = make({{1, 2, 4, 5}, {3, 6}});
  CHECK(is_valid(s, TableauClass::SShT));
  CHECK(is_valid(make({{1, 2, 3, 4}, {5, 6}}), TableauClass::SShT));
  // 4 sits diagonally below-right of 5 in the shifted diagram
  CHECK_FALSE(is_valid(make({{1, 2, 5, 6}, {3, 4}}), TableauClass::SShT));
  auto all = enumerate_tableaux({4, 2}, TableauClass::SShT);
  for (const auto& t : all) CHECK(is_valid(t, TableauClass::SShT));
  CHECK(std::find(all.begin(), all.end(), s) != all.end());
}

TEST_CASE("set-valued tableaux") {
  auto svts = enumerate_svt({2, 1}, {2, 1});
  for (const auto& v : svts) CHECK(validate_svt(v).ok);
  CHECK_FALSE(svts.empty());
}

TEST_CASE("Catalan counts for SYCT((2^k))") {
  long long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int k = 1; k <= 6; ++k) {
    Composition alpha(k, 2);
    CHECK(static_cast<long long>(enumerate_tableaux(alpha, TableauClass::SYCT).size()) ==
          catalan[k]);
    // the peak subfamily collapses to the single canonical filling
    CHECK(enumerate_tableaux(alpha, TableauClass::SPYCT).size() == 1);
  }
}
