#include "pqsym/tableaux.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>

namespace pqsym {

TableauClass tableau_class_from_string(const std::string& s) {
  if (s == "sit") return TableauClass::SIT;
  if (s == "spit") return TableauClass::SPIT;
  if (s == "syct") return TableauClass::SYCT;
  if (s == "spyct") return TableauClass::SPYCT;
  if (s == "spyt") return TableauClass::SPYT;
  if (s == "syt") return TableauClass::SYT;
  if (s == "ssht") return TableauClass::SShT;
  if (s == "dirt") return TableauClass::DIRT;
  throw std::invalid_argument("unknown tableau class: " + s);
}

std::string to_string(TableauClass cls) {
  switch (cls) {
    case TableauClass::SIT: return "sit";
    case TableauClass::SPIT: return "spit";
    case TableauClass::SYCT: return "syct";
    case TableauClass::SPYCT: return "spyct";
    case TableauClass::SPYT: return "spyt";
    case TableauClass::SYT: return "syt";
    case TableauClass::SShT: return "ssht";
    case TableauClass::DIRT: return "dirt";
  }
  throw std::logic_error("bad tableau class");
}

namespace {

ValidationReport fail(std::string condition, std::vector<Box> boxes = {}) {
  return ValidationReport{false, std::move(condition), std::move(boxes)};
}

ValidationReport check_rows_increasing(const Filling& f) {
  for (int r = 1; r <= static_cast<int>(f.rows.size()); ++r)
    for (int c = 2; c <= static_cast<int>(f.rows[r - 1].size()); ++c)
      if (f.at(c - 1, r) > f.at(c, r))
        return fail("rows-increasing", {Box{c - 1, r}, Box{c, r}});
  return {};
}

ValidationReport check_first_column_increasing(const Filling& f) {
  for (int r = 2; r <= static_cast<int>(f.rows.size()); ++r)
    if (f.at(1, r - 1) > f.at(1, r))
      return fail("first-column-increasing", {Box{1, r - 1}, Box{1, r}});
  return {};
}

// Shape of the boxes holding entries <= k, for every k.  Rows of an SIT
// fill from the left and column 1 grows upward, so the prefix is always a
// well formed composition here.
ValidationReport check_peak_tableau_condition(const Filling& f) {
  std::vector<int> counts(f.rows.size(), 0);
  std::map<int, Box> where;
  for (const Box& b : boxes_row_major(f.shape)) where[f.at(b.col, b.row)] = b;
  int top = 0;
  for (const auto& [entry, box] : where) {
    ++counts[box.row - 1];
    top = std::max(top, box.row);
    for (int r = 1; r < top; ++r)
      if (counts[r - 1] < 2) return fail("peak-tableau-condition", {box});
  }
  return {};
}

ValidationReport check_young_triple(const Filling& f) {
  int rows = static_cast<int>(f.rows.size());
  for (int i = 1; i <= rows; ++i)
    for (int j = i + 1; j <= rows; ++j)
      for (int k = 1; k <= f.shape[j - 1]; ++k) {
        if (!f.has_box(k + 1, i)) continue;
        if (f.at(k, j) <= f.at(k + 1, i)) {
          if (!f.has_box(k + 1, j) || f.at(k + 1, j) >= f.at(k + 1, i))
            return fail("young-triple-condition", {Box{k, j}, Box{k + 1, i}});
        }
      }
  return {};
}

ValidationReport check_columns_increasing(const Filling& f) {
  for (int r = 2; r <= static_cast<int>(f.rows.size()); ++r)
    for (int c = 1; c <= f.shape[r - 1]; ++c)
      if (f.has_box(c, r - 1) && f.at(c, r - 1) > f.at(c, r))
        return fail("columns-increasing", {Box{c, r - 1}, Box{c, r}});
  return {};
}

// Shifted geometry: row r box index k sits on top of row r-1 box index
// k+1 (0-based), since row r is indented one column further.
ValidationReport check_shifted_columns_increasing(const Filling& f) {
  for (int r = 2; r <= static_cast<int>(f.rows.size()); ++r)
    for (int k = 0; k < f.shape[r - 1]; ++k) {
      if (k + 1 >= f.shape[r - 2]) return fail("shifted-shape", {Box{k + 1, r}});
      if (f.rows[r - 2][k + 1] > f.rows[r - 1][k])
        return fail("shifted-columns-increasing", {Box{k + 2, r - 1}, Box{k + 1, r}});
    }
  return {};
}

ValidationReport check_strips_start_first_column(const Filling& f) {
  std::map<int, Box> where;
  for (const Box& b : boxes_row_major(f.shape)) where[f.at(b.col, b.row)] = b;
  int prev_col = 0;
  bool first = true;
  for (const auto& [entry, box] : where) {
    bool starts = first || box.col <= prev_col;
    if (starts && box.col != 1)
      return fail("strips-start-first-column", {box});
    prev_col = box.col;
    first = false;
  }
  return {};
}

ValidationReport check_first_column_decreasing(const Filling& f) {
  for (int r = 2; r <= static_cast<int>(f.rows.size()); ++r)
    if (f.at(1, r - 1) < f.at(1, r))
      return fail("first-column-decreasing", {Box{1, r - 1}, Box{1, r}});
  return {};
}

// For rows i < j sharing column k: an entry of the lower row i that
// exceeds the one above it must also exceed the next entry of row j.
ValidationReport check_dirt_triple(const Filling& f) {
  int rows = static_cast<int>(f.rows.size());
  for (int i = 1; i <= rows; ++i)
    for (int j = i + 1; j <= rows; ++j)
      for (int k = 1; k <= std::min(f.shape[i - 1], f.shape[j - 1]); ++k)
        if (f.at(k, i) > f.at(k, j) && f.has_box(k + 1, j) &&
            f.at(k, i) < f.at(k + 1, j))
          return fail("dirt-triple-condition", {Box{k, i}, Box{k + 1, j}});
  return {};
}

}  // namespace

ValidationReport validate(const Filling& f, TableauClass cls) {
  if (!f.entries_distinct()) return fail("entries-distinct");
  if (!f.standard()) return fail("entries-standard");

  switch (cls) {
    case TableauClass::SIT:
    case TableauClass::SPIT: {
      if (auto r = check_rows_increasing(f); !r.ok) return r;
      if (auto r = check_first_column_increasing(f); !r.ok) return r;
      if (cls == TableauClass::SPIT) {
        if (!is_peak_composition(f.shape)) return fail("shape-not-peak-composition");
        if (auto r = check_peak_tableau_condition(f); !r.ok) return r;
      }
      return {};
    }
    case TableauClass::SYCT:
    case TableauClass::SPYCT: {
      if (auto r = check_rows_increasing(f); !r.ok) return r;
      if (auto r = check_first_column_increasing(f); !r.ok) return r;
      if (auto r = check_young_triple(f); !r.ok) return r;
      if (cls == TableauClass::SPYCT) {
        if (!is_peak_composition(f.shape)) return fail("shape-not-peak-composition");
        if (auto r = check_peak_tableau_condition(f); !r.ok) return r;
      }
      return {};
    }
    case TableauClass::SYT:
    case TableauClass::SPYT: {
      if (!is_partition(f.shape)) return fail("shape-not-partition");
      if (auto r = check_rows_increasing(f); !r.ok) return r;
      if (auto r = check_columns_increasing(f); !r.ok) return r;
      if (cls == TableauClass::SPYT) {
        if (!is_peak_partition(f.shape)) return fail("shape-not-peak-partition");
        if (auto r = check_peak_tableau_condition(f); !r.ok) return r;
      }
      return {};
    }
    case TableauClass::SShT: {
      if (!is_strict_partition(f.shape)) return fail("shape-not-strict-partition");
      if (auto r = check_rows_increasing(f); !r.ok) return r;
      if (auto r = check_shifted_columns_increasing(f); !r.ok) return r;
      return {};
    }
    case TableauClass::DIRT: {
      if (auto r = check_rows_increasing(f); !r.ok) return r;
      if (auto r = check_strips_start_first_column(f); !r.ok) return r;
      if (auto r = check_first_column_decreasing(f); !r.ok) return r;
      if (auto r = check_dirt_triple(f); !r.ok) return r;
      return {};
    }
  }
  throw std::logic_error("bad tableau class");
}

bool is_valid(const Filling& f, TableauClass cls) { return validate(f, cls).ok; }

bool is_generalized_spit(const Filling& f) {
  if (!f.entries_distinct()) return false;
  return is_valid(standardize(f), TableauClass::SPIT);
}

bool shape_valid_for(const Composition& shape, TableauClass cls) {
  switch (cls) {
    case TableauClass::SIT:
    case TableauClass::SYCT:
    case TableauClass::DIRT: return is_composition(shape);
    case TableauClass::SPIT:
    case TableauClass::SPYCT: return is_peak_composition(shape);
    case TableauClass::SYT: return is_partition(shape);
    case TableauClass::SPYT: return is_peak_partition(shape);
    case TableauClass::SShT: return is_strict_partition(shape);
  }
  throw std::logic_error("bad tableau class");
}

namespace {

// Backtracking generator: entries 1..n are placed in increasing order at
// the next free box of some row; `allowed` encodes the incremental class
// predicate, which is prefix-closed for all families here.
struct Generator {
  const Composition& shape;
  TableauClass cls;
  const Composition* strip = nullptr;  // prescribed strip boundaries for DIRTs
  std::vector<char> strip_start;
  std::vector<int> fill;
  std::vector<int> row_of;  // row_of[e-1]
  std::vector<int> col_of;
  std::vector<Filling> out;
  int n;

  Generator(const Composition& shape, TableauClass cls) : shape(shape), cls(cls) {
    n = comp_size(shape);
    fill.assign(shape.size(), 0);
    row_of.assign(n, 0);
    col_of.assign(n, 0);
  }

  int top_nonempty() const {
    for (int r = static_cast<int>(shape.size()); r >= 1; --r)
      if (fill[r - 1] > 0) return r;
    return 0;
  }

  bool allowed(int e, int r) const {
    int c = fill[r - 1] + 1;
    switch (cls) {
      case TableauClass::SIT:
      case TableauClass::SPIT: {
        if (c == 1 && r >= 2 && fill[r - 2] < 1) return false;
        if (cls == TableauClass::SPIT && c == 1 && r > top_nonempty() && r >= 2 &&
            fill[r - 2] < 2)
          return false;
        return true;
      }
      case TableauClass::SYCT:
      case TableauClass::SPYCT: {
        if (c == 1) {
          if (r >= 2 && fill[r - 2] < 1) return false;
        } else {
          for (int rr = r + 1; rr <= static_cast<int>(shape.size()); ++rr)
            if (fill[rr - 1] == c - 1) return false;
        }
        if (cls == TableauClass::SPYCT && c == 1 && r > top_nonempty() && r >= 2 &&
            fill[r - 2] < 2)
          return false;
        return true;
      }
      case TableauClass::SYT:
      case TableauClass::SPYT: {
        if (r >= 2 && fill[r - 2] < c) return false;
        if (cls == TableauClass::SPYT && c == 1 && r > top_nonempty() && r >= 2 &&
            fill[r - 2] < 2)
          return false;
        return true;
      }
      case TableauClass::SShT: {
        // shifted: the box below index k (0-based) is index k+1 of row r-1
        if (r >= 2 && fill[r - 2] < c + 1) return false;
        return true;
      }
      case TableauClass::DIRT: {
        bool is_start = strip ? strip_start[e - 1] : (e == 1 || c <= col_of[e - 2]);
        if (is_start) {
          if (c != 1) return false;
          for (int rr = r + 1; rr <= static_cast<int>(shape.size()); ++rr)
            if (fill[rr - 1] < 1) return false;
        } else {
          if (e == 1 || c <= col_of[e - 2]) return false;
        }
        return true;
      }
    }
    return false;
  }

  void emit() {
    Filling f;
    f.shape = shape;
    f.rows.resize(shape.size());
    for (int r = 0; r < static_cast<int>(shape.size()); ++r) f.rows[r].resize(shape[r]);
    for (int e = 1; e <= n; ++e) f.rows[row_of[e - 1] - 1][col_of[e - 1] - 1] = e;
    if (cls == TableauClass::DIRT && !check_dirt_triple(f).ok) return;
    out.push_back(std::move(f));
  }

  void rec(int e) {
    if (e > n) {
      emit();
      return;
    }
    for (int r = 1; r <= static_cast<int>(shape.size()); ++r) {
      if (fill[r - 1] >= shape[r - 1]) continue;
      if (!allowed(e, r)) continue;
      ++fill[r - 1];
      row_of[e - 1] = r;
      col_of[e - 1] = fill[r - 1];
      rec(e + 1);
      --fill[r - 1];
    }
  }
};

}  // namespace

std::vector<Filling> enumerate_tableaux(const Composition& shape, TableauClass cls) {
  if (!shape_valid_for(shape, cls))
    throw std::invalid_argument("shape " + to_string(shape) + " is not valid for class " +
                                to_string(cls));
  Generator gen(shape, cls);
  gen.rec(1);
  return std::move(gen.out);
}

std::vector<Filling> enumerate_dirts(const Composition& beta, const Composition& strip) {
  if (comp_size(beta) != comp_size(strip))
    throw std::invalid_argument("enumerate_dirts: size mismatch");
  Generator gen(beta, TableauClass::DIRT);
  gen.strip = &strip;
  gen.strip_start.assign(gen.n, 0);
  int sum = 0;
  for (int part : strip) {
    if (sum < gen.n) gen.strip_start[sum] = 1;
    sum += part;
  }
  gen.rec(1);
  std::vector<Filling> out;
  for (auto& q : gen.out)
    if (row_strip_shape(q) == strip) out.push_back(std::move(q));
  return out;
}

Composition row_strip_shape(const Filling& q) {
  if (!q.standard()) throw std::invalid_argument("row_strip_shape: entries must be 1..n");
  int n = q.size();
  Composition out;
  int len = 0, prev_col = 0;
  for (int e = 1; e <= n; ++e) {
    int col = q.find(e)->col;
    if (len > 0 && col > prev_col) {
      ++len;
    } else {
      if (len > 0) out.push_back(len);
      len = 1;
    }
    prev_col = col;
  }
  if (len > 0) out.push_back(len);
  return out;
}

IndexSet bdes(const Filling& t) {
  if (auto r = validate(t, TableauClass::SYCT); !r.ok)
    throw std::invalid_argument("bdes: not an SYCT (" + r.condition + ")");
  IndexSet out;
  out.ambient = t.size();
  for (int i = 1; i < t.size(); ++i)
    if (t.find(i)->col >= t.find(i + 1)->col) out.elements.push_back(i);
  return out;
}

namespace {

using boost::multiprecision::cpp_int;

long long checked_hook_quotient(int n, const std::vector<long long>& hooks,
                                const std::string& what) {
  cpp_int numerator = 1;
  for (int i = 2; i <= n; ++i) numerator *= i;
  cpp_int denominator = 1;
  for (long long h : hooks) {
    if (h <= 0) throw std::logic_error(what + ": nonpositive hook value");
    denominator *= h;
  }
  if (numerator % denominator != 0)
    throw std::logic_error(what + ": hook product does not divide n!");
  cpp_int q = numerator / denominator;
  if (q > std::numeric_limits<long long>::max())
    throw std::overflow_error(what + ": count exceeds long long");
  return static_cast<long long>(q);
}

}  // namespace

long long hook_count_spit(const Composition& alpha) {
  if (!is_peak_composition(alpha))
    throw std::invalid_argument("hook_count_spit: not a peak composition: " + to_string(alpha));
  int len = static_cast<int>(alpha.size());
  std::vector<long long> hooks;
  // tail[j] = alpha_j + ... + alpha_len
  std::vector<int> tail(len + 2, 0);
  for (int j = len; j >= 1; --j) tail[j] = alpha[j - 1] + tail[j + 1];
  for (int j = 1; j <= len; ++j)
    for (int i = 1; i <= alpha[j - 1]; ++i) {
      if (i == 1) hooks.push_back(tail[j]);
      else if (i == 2) hooks.push_back(tail[j] - 1);
      else hooks.push_back(alpha[j - 1] - i + 1);
    }
  return checked_hook_quotient(comp_size(alpha), hooks, "hook_count_spit");
}

long long spyt_hook_formula_value(const Composition& lambda) {
  if (!is_peak_partition(lambda))
    throw std::invalid_argument("spyt_hook_formula_value: not a peak partition: " +
                                to_string(lambda));
  Composition conj = conjugate(lambda);
  auto conj_at = [&](int i) { return i <= static_cast<int>(conj.size()) ? conj[i - 1] : 0; };
  std::vector<long long> hooks;
  for (int j = 1; j <= static_cast<int>(lambda.size()); ++j)
    for (int i = 1; i <= lambda[j - 1]; ++i) {
      // counts of boxes strictly above (i,j) in columns 1 and 2
      long long above1 = std::max(conj_at(1) - j, 0);
      long long above2 = std::max(conj_at(2) - j, 0);
      if (i == 1) hooks.push_back(above1 + above2 + lambda[j - 1]);
      else if (i == 2) hooks.push_back(above1 + above2 + lambda[j - 1] - 1);
      else hooks.push_back(conj_at(3) - j + 1);
    }
  return checked_hook_quotient(comp_size(lambda), hooks, "spyt_hook_formula_value");
}

long long hook_count_spyt(const Composition& lambda) {
  if (max_part(lambda) > 3)
    throw std::invalid_argument("hook_count_spyt: formula requires parts <= 3, got " +
                                to_string(lambda));
  return spyt_hook_formula_value(lambda);
}

bool operator==(const SetValuedFilling& a, const SetValuedFilling& b) {
  return a.rows == b.rows;
}

bool operator<(const SetValuedFilling& a, const SetValuedFilling& b) {
  return a.rows < b.rows;
}

ValidationReport validate_svt(const SetValuedFilling& v) {
  if (!is_partition(v.shape)) return fail("shape-not-partition");
  if (v.density.size() != v.shape.size()) return fail("density-length");
  std::vector<int> all;
  for (int r = 1; r <= static_cast<int>(v.rows.size()); ++r) {
    if (static_cast<int>(v.rows[r - 1].size()) != v.shape[r - 1]) return fail("shape-rows");
    for (int c = 1; c <= v.shape[r - 1]; ++c) {
      const auto& cell = v.rows[r - 1][c - 1];
      if (static_cast<int>(cell.size()) != v.density[r - 1])
        return fail("density", {Box{c, r}});
      if (!std::is_sorted(cell.begin(), cell.end())) return fail("cell-sorted", {Box{c, r}});
      all.insert(all.end(), cell.begin(), cell.end());
    }
  }
  std::sort(all.begin(), all.end());
  for (int i = 0; i < static_cast<int>(all.size()); ++i)
    if (all[i] != i + 1) return fail("entries-cover-range");
  auto cell_max = [&](int c, int r) { return v.rows[r - 1][c - 1].back(); };
  auto cell_min = [&](int c, int r) { return v.rows[r - 1][c - 1].front(); };
  for (int r = 1; r <= static_cast<int>(v.rows.size()); ++r)
    for (int c = 1; c <= v.shape[r - 1]; ++c) {
      if (c >= 2 && cell_max(c - 1, r) > cell_min(c, r))
        return fail("rows-increasing", {Box{c - 1, r}, Box{c, r}});
      if (r >= 2 && c <= v.shape[r - 2] && cell_max(c, r - 1) > cell_min(c, r))
        return fail("columns-increasing", {Box{c, r - 1}, Box{c, r}});
    }
  return {};
}

std::vector<SetValuedFilling> enumerate_svt(const Composition& lambda, const Composition& rho) {
  if (!is_partition(lambda)) throw std::invalid_argument("enumerate_svt: shape not a partition");
  if (rho.size() != lambda.size())
    throw std::invalid_argument("enumerate_svt: density length mismatch");
  int total = 0;
  for (std::size_t r = 0; r < lambda.size(); ++r) total += lambda[r] * rho[r];

  SetValuedFilling v;
  v.shape = lambda;
  v.density = rho;
  v.rows.resize(lambda.size());
  for (std::size_t r = 0; r < lambda.size(); ++r) v.rows[r].resize(lambda[r]);

  std::vector<SetValuedFilling> out;
  auto cell_full = [&](int c, int r) {
    return static_cast<int>(v.rows[r - 1][c - 1].size()) == rho[r - 1];
  };
  auto rec = [&](auto&& self, int e) -> void {
    if (e > total) {
      out.push_back(v);
      return;
    }
    for (int r = 1; r <= static_cast<int>(lambda.size()); ++r)
      for (int c = 1; c <= lambda[r - 1]; ++c) {
        if (cell_full(c, r)) continue;
        if (c >= 2 && !cell_full(c - 1, r)) continue;
        if (r >= 2 && c <= lambda[r - 2] && !cell_full(c, r - 1)) continue;
        v.rows[r - 1][c - 1].push_back(e);
        self(self, e + 1);
        v.rows[r - 1][c - 1].pop_back();
      }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pqsym
