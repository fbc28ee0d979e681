#include "pqsym/filling.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pqsym {

bool operator==(const Box& a, const Box& b) { return a.col == b.col && a.row == b.row; }

Filling Filling::from_rows(std::vector<std::vector<int>> rows) {
  Filling f;
  f.rows = std::move(rows);
  for (const auto& row : f.rows) f.shape.push_back(static_cast<int>(row.size()));
  if (!is_composition(f.shape))
    throw std::invalid_argument("Filling: empty row inside a diagram");
  if (!f.entries_distinct())
    throw std::invalid_argument("Filling: repeated entries");
  return f;
}

int Filling::size() const { return comp_size(shape); }

bool Filling::has_box(int col, int row) const {
  return row >= 1 && row <= static_cast<int>(rows.size()) && col >= 1 &&
         col <= static_cast<int>(rows[row - 1].size());
}

int Filling::at(int col, int row) const {
  if (!has_box(col, row)) throw std::out_of_range("Filling::at: no such box");
  return rows[row - 1][col - 1];
}

std::optional<Box> Filling::find(int entry) const {
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (int c = 0; c < static_cast<int>(rows[r].size()); ++c)
      if (rows[r][c] == entry) return Box{c + 1, r + 1};
  return std::nullopt;
}

bool Filling::contains(int entry) const { return find(entry).has_value(); }

std::vector<int> Filling::entries_sorted() const {
  std::vector<int> out;
  for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool Filling::entries_distinct() const {
  auto e = entries_sorted();
  return std::adjacent_find(e.begin(), e.end()) == e.end();
}

bool Filling::standard() const {
  auto e = entries_sorted();
  for (int i = 0; i < static_cast<int>(e.size()); ++i)
    if (e[i] != i + 1) return false;
  return true;
}

bool operator==(const Filling& a, const Filling& b) { return a.rows == b.rows; }
bool operator!=(const Filling& a, const Filling& b) { return !(a == b); }
bool operator<(const Filling& a, const Filling& b) { return a.rows < b.rows; }

std::vector<Box> boxes_column_major(const Composition& shape) {
  std::vector<Box> out;
  for (int c = 1; c <= max_part(shape); ++c)
    for (int r = 1; r <= static_cast<int>(shape.size()); ++r)
      if (shape[r - 1] >= c) out.push_back(Box{c, r});
  return out;
}

std::vector<Box> boxes_row_major(const Composition& shape) {
  std::vector<Box> out;
  for (int r = 1; r <= static_cast<int>(shape.size()); ++r)
    for (int c = 1; c <= shape[r - 1]; ++c) out.push_back(Box{c, r});
  return out;
}

ReadingMode reading_mode_from_string(const std::string& s) {
  if (s == "row") return ReadingMode::Row;
  if (s == "column" || s == "col") return ReadingMode::Column;
  if (s == "young") return ReadingMode::Young;
  throw std::invalid_argument("unknown reading mode: " + s);
}

Word reading_word_row(const Filling& f) {
  Word w;
  for (auto it = f.rows.rbegin(); it != f.rows.rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return w;
}

Word reading_word_col(const Filling& f) {
  Word w;
  for (const Box& b : boxes_column_major(f.shape)) w.push_back(f.at(b.col, b.row));
  return w;
}

Word reading_word_young(const Filling& f) {
  Word w;
  for (int r = static_cast<int>(f.rows.size()); r >= 1; --r) w.push_back(f.at(1, r));
  for (int c = 2; c <= max_part(f.shape); ++c)
    for (int r = 1; r <= static_cast<int>(f.rows.size()); ++r)
      if (f.has_box(c, r)) w.push_back(f.at(c, r));
  return w;
}

Word reading_word(const Filling& f, ReadingMode mode) {
  switch (mode) {
    case ReadingMode::Row: return reading_word_row(f);
    case ReadingMode::Column: return reading_word_col(f);
    case ReadingMode::Young: return reading_word_young(f);
  }
  throw std::logic_error("reading_word: bad mode");
}

namespace {

IndexSet adjacency_set(const Word& w, bool descents) {
  std::map<int, int> position;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    if (w[i] < 1) throw std::invalid_argument("word entries must be positive");
    if (!position.emplace(w[i], i).second)
      throw std::invalid_argument("word entries must be distinct");
  }
  IndexSet out;
  out.ambient = position.empty() ? 0 : position.rbegin()->first;
  for (const auto& [value, pos] : position) {
    auto next = position.find(value + 1);
    if (next == position.end()) continue;
    bool right_of_successor = pos > next->second;
    if (right_of_successor == descents) out.elements.push_back(value);
  }
  return out;
}

}  // namespace

IndexSet descent_set(const Word& w) { return adjacency_set(w, true); }
IndexSet ascent_set(const Word& w) { return adjacency_set(w, false); }

Filling standardize(const Filling& f) {
  std::vector<int> sorted = f.entries_sorted();
  Filling out = f;
  for (auto& row : out.rows)
    for (int& e : row)
      e = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), e) - sorted.begin()) + 1;
  return out;
}

std::optional<Filling> swap_entries(const Filling& f, int i) {
  auto a = f.find(i), b = f.find(i + 1);
  if (!a || !b) return std::nullopt;
  Filling out = f;
  out.rows[a->row - 1][a->col - 1] = i + 1;
  out.rows[b->row - 1][b->col - 1] = i;
  return out;
}

namespace {

Filling from_boxes(const Filling& f, const std::vector<Box>& boxes) {
  Filling out;
  out.rows.resize(f.rows.size());
  for (const Box& b : boxes) {
    if (static_cast<int>(out.rows[b.row - 1].size()) != b.col - 1)
      throw std::invalid_argument("subfilling is not left-justified");
    out.rows[b.row - 1].push_back(f.at(b.col, b.row));
  }
  while (!out.rows.empty() && out.rows.back().empty()) out.rows.pop_back();
  for (const auto& row : out.rows)
    if (row.empty()) throw std::invalid_argument("subfilling has an empty middle row");
  for (const auto& row : out.rows) out.shape.push_back(static_cast<int>(row.size()));
  return out;
}

}  // namespace

Filling entries_at_most(const Filling& f, int k) {
  std::vector<Box> boxes;
  for (const Box& b : boxes_row_major(f.shape))
    if (f.at(b.col, b.row) <= k) boxes.push_back(b);
  return from_boxes(f, boxes);
}

Filling first_boxes(const Filling& f, int j) {
  if (j < 0 || j > f.size()) throw std::invalid_argument("first_boxes: j out of range");
  auto boxes = boxes_column_major(f.shape);
  boxes.resize(j);
  return from_boxes(f, boxes);
}

Filling first_columns(const Filling& f, int j) {
  if (j < 0) throw std::invalid_argument("first_columns: negative j");
  std::vector<Box> boxes;
  for (const Box& b : boxes_row_major(f.shape))
    if (b.col <= j) boxes.push_back(b);
  return from_boxes(f, boxes);
}

Filling first_rows(const Filling& f, int i) {
  if (i < 0 || i > static_cast<int>(f.rows.size()))
    throw std::invalid_argument("first_rows: i out of range");
  Filling out;
  out.rows.assign(f.rows.begin(), f.rows.begin() + i);
  out.shape.assign(f.shape.begin(), f.shape.begin() + i);
  return out;
}

bool first_two_columns_canonical(const Filling& f) {
  int prev = 0;
  for (int r = 1; r <= static_cast<int>(f.rows.size()); ++r)
    for (int c = 1; c <= 2; ++c) {
      if (!f.has_box(c, r)) continue;
      if (f.at(c, r) <= prev) return false;
      prev = f.at(c, r);
    }
  return true;
}

}  // namespace pqsym
