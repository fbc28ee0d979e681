#pragma once

// Fillings of composition diagrams and their reading words.
//
// Boxes are addressed as (column, row), both 1-based, rows numbered from
// the bottom up (xy convention).  rows[r][c] holds the entry of the box
// at column c+1 of row r+1, so serialization lists rows bottom-to-top.

#include <optional>
#include <vector>

#include "pqsym/composition.hpp"

namespace pqsym {

using Word = std::vector<int>;

struct Box {
  int col = 0;
  int row = 0;
};

bool operator==(const Box& a, const Box& b);

struct Filling {
  Composition shape;
  std::vector<std::vector<int>> rows;

  static Filling from_rows(std::vector<std::vector<int>> rows);

  int size() const;
  bool has_box(int col, int row) const;
  int at(int col, int row) const;
  std::optional<Box> find(int entry) const;
  bool contains(int entry) const;
  std::vector<int> entries_sorted() const;
  bool entries_distinct() const;
  // Entries are exactly 1..size().
  bool standard() const;
};

bool operator==(const Filling& a, const Filling& b);
bool operator!=(const Filling& a, const Filling& b);
bool operator<(const Filling& a, const Filling& b);

// Boxes of a diagram: column-major lists columns left to right, each
// bottom-to-top; row-major lists rows bottom-to-top, each left to right.
std::vector<Box> boxes_column_major(const Composition& shape);
std::vector<Box> boxes_row_major(const Composition& shape);

enum class ReadingMode { Row, Column, Young };
ReadingMode reading_mode_from_string(const std::string& s);

// w_r: rows left to right starting from the uppermost row.
Word reading_word_row(const Filling& f);
// w_c: columns left to right, each bottom to top.
Word reading_word_col(const Filling& f);
// w_Y: first column top to bottom, then later columns bottom to top.
Word reading_word_young(const Filling& f);
Word reading_word(const Filling& f, ReadingMode mode);

// Des(w) = {i : i, i+1 in w and i to the right of i+1}; Asc likewise with
// "to the left".  Ambient of the result is the largest letter.
IndexSet descent_set(const Word& w);
IndexSet ascent_set(const Word& w);

// Order-isomorphic relabelling of the entries by 1..n.
Filling standardize(const Filling& f);

// s_i: swap entries i and i+1; nullopt when either is absent.
std::optional<Filling> swap_entries(const Filling& f, int i);

// T[<=k]: boxes with entries <= k.
Filling entries_at_most(const Filling& f, int k);
// T_{[1:j]}: the first j boxes in column-major order.
Filling first_boxes(const Filling& f, int j);
// T^{(<=j)}: the first j columns.
Filling first_columns(const Filling& f, int j);
// T_{(<=i)}: the first i rows.
Filling first_rows(const Filling& f, int i);

// Entries strictly increase left to right then bottom to top across the
// first two columns (the "canonical" condition of the peak-tableau lemma).
bool first_two_columns_canonical(const Filling& f);

}  // namespace pqsym
