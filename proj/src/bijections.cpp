#include "pqsym/bijections.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pqsym {

namespace {

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

int row_of(const Filling& f, int entry) {
  auto box = f.find(entry);
  if (!box) throw std::logic_error("row_of: entry " + std::to_string(entry) + " absent");
  return box->row;
}

Filling add_box(const Filling& u, Box b, int entry) {
  Filling out = u;
  if (b.row == static_cast<int>(out.rows.size()) + 1) {
    if (b.col != 1) throw std::invalid_argument("add_box: new row must start at column 1");
    out.rows.push_back({entry});
    out.shape.push_back(1);
    return out;
  }
  if (b.row < 1 || b.row > static_cast<int>(out.rows.size()) ||
      b.col != static_cast<int>(out.rows[b.row - 1].size()) + 1)
    throw std::invalid_argument("add_box: box does not extend the diagram");
  out.rows[b.row - 1].push_back(entry);
  out.shape[b.row - 1] += 1;
  return out;
}

}  // namespace

bool shape_descent_aligned(const Filling& t, const Filling& u) {
  if (!is_generalized_spit(t) || !is_generalized_spit(u)) return false;
  if (u.size() != t.size() - 1) return false;
  if (max_part(t.shape) < 3) return false;
  Filling head = first_boxes(t, u.size());
  if (head.shape != u.shape) return false;
  if (head.entries_sorted() != u.entries_sorted()) return false;
  return descent_set(reading_word_row(u)) == descent_set(reading_word_col(head));
}

Filling pair_insert(const Filling& t, const Filling& u, Alg31Trace* trace) {
  if (!shape_descent_aligned(t, u))
    throw std::invalid_argument("pair_insert: shape-descent alignment condition fails");

  std::vector<int> te = t.entries_sorted(), ue = u.entries_sorted();
  std::vector<int> diff;
  std::set_difference(te.begin(), te.end(), ue.begin(), ue.end(), std::back_inserter(diff));
  if (diff.size() != 1) throw std::logic_error("pair_insert: |t| != |u| + 1");
  int h = diff.front();
  Box spot = *t.find(h);

  IndexSet des_t = descent_set(reading_word_col(t));
  IndexSet asc_t = ascent_set(reading_word_col(t));

  Filling current = add_box(u, spot, h);
  if (trace) *trace = Alg31Trace{h, {}};

  for (int j = 1; j <= t.size() + 1; ++j) {
    Word row_word = reading_word_row(current);
    std::vector<int> a_set = sorted_intersection(descent_set(row_word).elements, asc_t.elements);
    std::vector<int> b_set = sorted_intersection(ascent_set(row_word).elements, des_t.elements);

    if (a_set.size() > 1 || b_set.size() > 1)
      throw std::logic_error("pair_insert: non-singleton step set");

    if (a_set.empty() && b_set.empty()) {
      if (trace) trace->steps.push_back({j, a_set, b_set, std::nullopt});
      return current;
    }

    int z;
    if (!a_set.empty() && !b_set.empty()) {
      int a = a_set.front(), b = b_set.front();
      if (b != a + 1) throw std::logic_error("pair_insert: expected b = a + 1");
      z = row_of(current, a) < row_of(current, a + 2) ? a : a + 1;
    } else if (!a_set.empty()) {
      z = a_set.front();
    } else {
      z = b_set.front();
    }

    if (trace) trace->steps.push_back({j, a_set, b_set, z});
    auto next = swap_entries(current, z);
    if (!next) throw std::logic_error("pair_insert: swap outside the filling");
    current = *next;
  }
  throw std::logic_error("pair_insert: did not terminate");
}

Filling xi(const Filling& t, XiTrace* trace) {
  if (auto r = validate(t, TableauClass::SPIT); !r.ok)
    throw std::invalid_argument("xi: input is not an SPIT (" + r.condition + ")");
  int n = t.size();
  int core = column_count(t.shape, 1) + column_count(t.shape, 2);
  if (core == n) return t;

  Filling u = first_boxes(t, core);
  for (int i = 1; i <= n - core; ++i) {
    Alg31Trace step;
    u = pair_insert(first_boxes(t, core + i), u, trace ? &step : nullptr);
    if (trace) trace->insertions.push_back(std::move(step));
  }
  return u;
}

bool cond_c1(const Filling& v, int g) {
  auto below = v.find(g - 1);
  auto here = v.find(g);
  if (!below || !here || below->row >= here->row) return false;
  if (auto above = v.find(g + 1))
    return above->row <= below->row || above->row > here->row;
  return true;
}

bool cond_c2(const Filling& v, int g) {
  auto here = v.find(g);
  auto succ = v.find(g + 1);
  if (!here || !succ || succ->row >= here->row) return false;
  if (auto pred = v.find(g - 1))
    return pred->row < succ->row || pred->row >= here->row;
  return true;
}

std::vector<int> downseq(const Filling& v, int g) {
  if (!v.contains(g)) throw std::invalid_argument("downseq: g not in the filling");
  std::vector<int> seq{g - 1};
  Filling current = v;
  for (int j = 2;; ++j) {
    auto next = swap_entries(current, seq.back());
    if (!next) return seq;
    current = *next;
    auto lo = current.find(g - j);
    if (!lo) return seq;
    // continue while g-j sits strictly below g-j+1 and weakly below g-j+2
    if (lo->row >= row_of(current, g - j + 1)) return seq;
    if (lo->row > row_of(current, g - j + 2)) return seq;
    seq.push_back(g - j);
  }
}

std::vector<int> upseq(const Filling& v, int g) {
  if (!v.contains(g)) throw std::invalid_argument("upseq: g not in the filling");
  std::vector<int> seq{g};
  Filling current = v;
  for (int j = 2;; ++j) {
    auto next = swap_entries(current, seq.back());
    if (!next) return seq;
    current = *next;
    auto hi = current.find(g + j);
    if (!hi) return seq;
    // continue while g+j sits strictly below g+j-1 and strictly above g+j-2
    if (hi->row >= row_of(current, g + j - 1)) return seq;
    if (hi->row <= row_of(current, g + j - 2)) return seq;
    seq.push_back(g + j - 1);
  }
}

Filling xi_inverse(const Filling& t, std::vector<XiInvStep>* trace) {
  if (auto r = validate(t, TableauClass::SPIT); !r.ok)
    throw std::invalid_argument("xi_inverse: input is not an SPIT (" + r.condition + ")");
  int n = t.size();
  int core = column_count(t.shape, 1) + column_count(t.shape, 2);
  if (core == n) return t;

  Filling v = t;
  std::vector<int> removed;  // y_1, ..., y_{n-core}
  for (int i = 1; i <= n - core; ++i) {
    Box last = boxes_column_major(v.shape).back();
    int g = v.at(last.col, last.row);
    XiInvStep step;
    step.g = g;
    Filling acted = v;
    if (cond_c1(v, g)) {
      step.cond = "C1";
      step.seq = downseq(v, g);
    } else if (cond_c2(v, g)) {
      step.cond = "C2";
      step.seq = upseq(v, g);
    } else {
      step.cond = "none";
    }
    for (int idx : step.seq) {
      auto next = swap_entries(acted, idx);
      if (!next) throw std::logic_error("xi_inverse: swap outside the filling");
      acted = *next;
    }
    Box drop = boxes_column_major(acted.shape).back();
    step.removed = acted.at(drop.col, drop.row);
    removed.push_back(step.removed);
    v = first_boxes(acted, acted.size() - 1);
    if (trace) trace->push_back(std::move(step));
  }

  Word letters = reading_word_col(v);
  for (int i = n - core; i >= 1; --i) letters.push_back(removed[i - 1]);
  Filling out;
  out.shape = t.shape;
  out.rows.resize(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) out.rows[r].resize(t.shape[r]);
  auto boxes = boxes_column_major(t.shape);
  for (std::size_t i = 0; i < boxes.size(); ++i)
    out.rows[boxes[i].row - 1][boxes[i].col - 1] = letters[i];
  return out;
}

// ---- AHM insertion ----

AhmInsertion ahm_insert_full(int k, const Filling& t) {
  if (k < 1) throw std::invalid_argument("ahm_insert: entries must be positive");
  if (t.contains(k)) throw std::invalid_argument("ahm_insert: entry already present");
  if (t.size() > 0) {
    Filling st = standardize(t);
    if (auto r = validate(st, TableauClass::SYCT); !r.ok)
      throw std::invalid_argument("ahm_insert: not a Young composition tableau (" +
                                  r.condition + ")");
  }

  // Boxes of the padded diagram, right to left, top to bottom per column.
  // Column-1 boxes never match: they have no left neighbour.
  struct Slot {
    int col, row;
    bool infinity;
  };
  std::vector<Slot> slots;
  int widest = max_part(t.shape) + 1;
  for (int c = widest; c >= 2; --c)
    for (int r = static_cast<int>(t.rows.size()); r >= 1; --r) {
      if (t.shape[r - 1] + 1 < c) continue;
      slots.push_back({c, r, c == t.shape[r - 1] + 1});
    }

  Filling result = t;
  int current = k;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const Slot& s = slots[i];
    bool inf_slot = s.infinity;
    int left = result.at(s.col - 1, s.row);
    int here = inf_slot ? 0 : result.at(s.col, s.row);
    if (left > current) continue;
    if (!inf_slot && current >= here) continue;
    if (inf_slot) {
      return {add_box(result, Box{s.col, s.row}, current), Box{s.col, s.row}, std::nullopt};
    }
    result.rows[s.row - 1][s.col - 1] = current;
    current = here;
  }

  // New row at the highest position whose lower first-column entries are
  // all smaller; rows above shift up.
  int pos = 1;
  for (int r = 1; r <= static_cast<int>(result.rows.size()); ++r)
    if (result.at(1, r) < current) pos = r + 1;
  Filling out = result;
  out.rows.insert(out.rows.begin() + (pos - 1), {current});
  out.shape.insert(out.shape.begin() + (pos - 1), 1);
  return {out, Box{1, pos}, pos};
}

Filling ahm_insert(int k, const Filling& t) { return ahm_insert_full(k, t).result; }

std::pair<Filling, Filling> insertion_pair(const Word& w) {
  Filling p, q;
  for (int j = 1; j <= static_cast<int>(w.size()); ++j) {
    AhmInsertion ins = ahm_insert_full(w[j - 1], p);
    p = ins.result;
    if (ins.new_row) {
      q.rows.insert(q.rows.begin() + (*ins.new_row - 1), {j});
      q.shape.insert(q.shape.begin() + (*ins.new_row - 1), 1);
    } else {
      q.rows[ins.new_box.row - 1].push_back(j);
      q.shape[ins.new_box.row - 1] += 1;
    }
  }
  return {p, q};
}

long long dirt_count(const Composition& beta, const Composition& alpha) {
  if (comp_size(beta) != comp_size(alpha))
    throw std::invalid_argument("dirt_count: size mismatch");
  return static_cast<long long>(enumerate_dirts(beta, reversed(alpha)).size());
}

// ---- parts <= 3 operators ----

std::vector<int> i_alpha(const Composition& alpha) {
  if (!is_peak_composition(alpha) || max_part(alpha) > 3)
    throw std::invalid_argument("i_alpha: requires a peak composition with parts <= 3");
  std::vector<int> out;
  for (int i = 1; i + 1 <= static_cast<int>(alpha.size()); ++i)
    if (alpha[i - 1] == 3 && alpha[i] != 1) out.push_back(i);
  return out;
}

namespace {

std::vector<std::pair<int, int>> maximal_intervals(const std::vector<int>& s) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j + 1 < s.size() && s[j + 1] == s[j] + 1) ++j;
    out.emplace_back(s[i], s[j]);
    i = j + 1;
  }
  return out;
}

void require_subset_of_i_alpha(const Composition& alpha, const std::vector<int>& s) {
  auto idx = i_alpha(alpha);
  for (int v : s)
    if (!std::binary_search(idx.begin(), idx.end(), v))
      throw std::invalid_argument("index set is not contained in I_alpha");
  if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("index set must be strictly increasing");
}

}  // namespace

Composition delta_s(const Composition& alpha, const std::vector<int>& s) {
  require_subset_of_i_alpha(alpha, s);
  Composition out = alpha;
  for (auto [i, j] : maximal_intervals(s)) {
    for (int k = i; k <= j; ++k) out[k - 1] -= 1;
    out[j] += j - i + 1;
  }
  return out;
}

bool in_a_alpha(const Filling& t, int s) {
  const Composition& alpha = t.shape;
  if (s < 1 || s + 1 > static_cast<int>(alpha.size()))
    throw std::invalid_argument("in_a_alpha: row index out of range");
  return t.at(alpha[s - 1], s) > t.at(alpha[s], s + 1);
}

bool in_a_alpha_any(const Filling& t) {
  for (int s : i_alpha(t.shape))
    if (in_a_alpha(t, s)) return true;
  return false;
}

Filling psi_alpha(const Filling& t) {
  if (max_part(t.shape) > 3)
    throw std::invalid_argument("psi_alpha: requires parts <= 3");
  if (auto r = validate(t, TableauClass::SPYCT); !r.ok)
    throw std::invalid_argument("psi_alpha: input is not an SPYCT (" + r.condition + ")");
  Filling out = t;
  std::vector<int> third;
  for (int r = 1; r <= static_cast<int>(out.rows.size()); ++r)
    if (out.has_box(3, r)) third.push_back(out.at(3, r));
  std::sort(third.begin(), third.end());
  std::size_t next = 0;
  for (int r = 1; r <= static_cast<int>(out.rows.size()); ++r)
    if (out.has_box(3, r)) out.rows[r - 1][2] = third[next++];
  return out;
}

Filling phi_s(const Filling& t, const std::vector<int>& s) {
  if (auto r = validate(t, TableauClass::SPIT); !r.ok)
    throw std::invalid_argument("phi_s: input is not an SPIT (" + r.condition + ")");
  require_subset_of_i_alpha(t.shape, s);
  for (int v : s)
    if (!in_a_alpha(t, v))
      throw std::invalid_argument("phi_s: tableau is outside the domain A_alpha(" +
                                  std::to_string(v) + ")");
  Filling out = t;
  for (auto [i, j] : maximal_intervals(s)) {
    for (int p = j; p >= i; --p) {
      int entry = out.rows[p - 1].back();
      out.rows[p - 1].pop_back();
      out.shape[p - 1] -= 1;
      out.rows[j].push_back(entry);
      out.shape[j] += 1;
    }
  }
  return out;
}

// ---- word models ----

bool is_lattice_word(const Word& w) {
  std::map<int, int> counts;
  for (int letter : w) {
    if (letter < 1) return false;
    ++counts[letter];
    if (letter > 1 && counts[letter] > counts[letter - 1]) return false;
  }
  return true;
}

bool is_peak_lattice_word(const Word& w) {
  if (!is_lattice_word(w)) return false;
  int ones = 0, twos = 0;
  for (int letter : w) {
    if (letter == 1) ++ones;
    if (letter == 2) ++twos;
    if (ones < 2 * twos) return false;
  }
  return true;
}

Word rs_word(const Word& w) {
  if (!is_lattice_word(w)) throw std::invalid_argument("rs_word: not a lattice word");
  int top = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
  std::vector<std::vector<int>> positions(top + 1);
  for (int i = 0; i < static_cast<int>(w.size()); ++i) positions[w[i]].push_back(i);

  Word out(w.size(), 0);
  for (std::size_t k = 0; k < positions[1].size(); ++k)
    out[positions[1][k]] = static_cast<int>(k) + 1;
  for (int letter = 2; letter <= top; ++letter) {
    std::vector<bool> used(w.size() + 2, false);
    for (int pos : positions[letter]) {
      int best = 0;
      for (int prev : positions[letter - 1]) {
        if (prev >= pos) break;
        if (!used[out[prev]]) best = std::max(best, out[prev]);
      }
      if (best == 0) throw std::logic_error("rs_word: no available row label");
      out[pos] = best;
      used[best] = true;
    }
  }
  return out;
}

Word ps_word(const Word& w) {
  if (!is_peak_lattice_word(w))
    throw std::invalid_argument("ps_word: not a peak lattice word");
  Word out;
  int ones_before = 0;
  for (int letter : w) {
    if (letter == 1) {
      out.push_back(ones_before % 2 == 0 ? 1 : 2);
      ++ones_before;
    } else {
      out.push_back(letter + 1);
    }
  }
  return out;
}

Word f_alpha(const Filling& t) {
  if (auto r = validate(t, TableauClass::SYCT); !r.ok)
    throw std::invalid_argument("f_alpha: input is not an SYCT (" + r.condition + ")");
  Word out;
  for (int e = 1; e <= t.size(); ++e) out.push_back(t.find(e)->col);
  return out;
}

namespace {

void check_word_conditions(const Composition& alpha, const Word& w, bool peak) {
  int n = comp_size(alpha);
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("word model: wrong length");
  if (peak) {
    if (!is_peak_lattice_word(w))
      throw std::invalid_argument("word model: condition (s1') fails");
  } else if (!is_lattice_word(w)) {
    throw std::invalid_argument("word model: condition (s1) fails");
  }

  std::map<int, int> counts;
  for (int letter : w) ++counts[letter];
  if (peak) {
    int expected_ones = column_count(alpha, 1) + column_count(alpha, 2);
    if (counts[1] != expected_ones)
      throw std::invalid_argument("word model: condition (s2') fails at letter 1");
    for (int i = 2; i <= max_part(alpha) - 1; ++i)
      if (counts[i] != column_count(alpha, i + 1))
        throw std::invalid_argument("word model: condition (s2') fails at letter " +
                                    std::to_string(i));
    if (!counts.empty() && counts.rbegin()->first > std::max(1, max_part(alpha) - 1))
      throw std::invalid_argument("word model: condition (s2') fails, letter too large");
  } else {
    for (int i = 1; i <= max_part(alpha); ++i)
      if (counts[i] != column_count(alpha, i))
        throw std::invalid_argument("word model: condition (s2) fails at letter " +
                                    std::to_string(i));
    if (!counts.empty() && counts.rbegin()->first > max_part(alpha))
      throw std::invalid_argument("word model: condition (s2) fails, letter too large");
  }

  Word rows = rs_word(peak ? ps_word(w) : w);
  std::map<int, int> row_counts;
  for (int r : rows) ++row_counts[r];
  for (int j = 1; j <= static_cast<int>(alpha.size()); ++j)
    if (row_counts[j] != alpha[j - 1])
      throw std::invalid_argument(std::string("word model: condition (s3") +
                                  (peak ? "')" : ")") + " fails at row " + std::to_string(j));
}

}  // namespace

Filling f_alpha_inv(const Composition& alpha, const Word& w) {
  check_word_conditions(alpha, w, false);
  Word rows = rs_word(w);
  Filling out;
  out.shape = alpha;
  out.rows.resize(alpha.size());
  for (std::size_t r = 0; r < alpha.size(); ++r) out.rows[r].resize(alpha[r]);
  std::vector<int> fill(alpha.size(), 0);
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
    int r = rows[i - 1], c = w[i - 1];
    if (r < 1 || r > static_cast<int>(alpha.size()) || fill[r - 1] != c - 1 || c > alpha[r - 1])
      throw std::invalid_argument("f_alpha_inv: malformed diagram at step " + std::to_string(i));
    out.rows[r - 1][c - 1] = i;
    fill[r - 1] = c;
  }
  return out;
}

Word f_tilde_alpha(const Filling& t) {
  if (auto r = validate(t, TableauClass::SPYCT); !r.ok)
    throw std::invalid_argument("f_tilde_alpha: input is not an SPYCT (" + r.condition + ")");
  Word out;
  for (int e = 1; e <= t.size(); ++e) {
    int col = t.find(e)->col;
    out.push_back(col <= 2 ? 1 : col - 1);
  }
  return out;
}

Filling f_tilde_alpha_inv(const Composition& alpha, const Word& w) {
  check_word_conditions(alpha, w, true);
  Filling out = f_alpha_inv(alpha, ps_word(w));
  if (!is_valid(out, TableauClass::SPYCT))
    throw std::logic_error("f_tilde_alpha_inv: image is not an SPYCT");
  return out;
}

std::vector<Word> word_model(const Composition& alpha, TableauClass cls) {
  if (cls != TableauClass::SYCT && cls != TableauClass::SPYCT)
    throw std::invalid_argument("word_model: class must be SYCT or SPYCT");
  bool peak = cls == TableauClass::SPYCT;
  if (!shape_valid_for(alpha, cls))
    throw std::invalid_argument("word_model: invalid shape for class");

  std::vector<int> target;
  if (peak) {
    target.push_back(column_count(alpha, 1) + column_count(alpha, 2));
    for (int i = 2; i <= max_part(alpha) - 1; ++i) target.push_back(column_count(alpha, i + 1));
  } else {
    for (int i = 1; i <= max_part(alpha); ++i) target.push_back(column_count(alpha, i));
  }
  int letters = static_cast<int>(target.size());
  int n = comp_size(alpha);

  std::vector<Word> out;
  Word current;
  std::vector<int> counts(letters + 1, 0);
  auto ok_prefix = [&](int letter) {
    if (counts[letter] > target[letter - 1]) return false;
    if (peak) {
      if (letter == 2 && counts[1] < 2 * counts[2]) return false;
      if (letter > 2 && counts[letter - 1] < counts[letter]) return false;
    } else if (letter > 1 && counts[letter - 1] < counts[letter]) {
      return false;
    }
    return true;
  };
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == n) {
      try {
        check_word_conditions(alpha, current, peak);
      } catch (const std::invalid_argument&) {
        return;
      }
      out.push_back(current);
      return;
    }
    for (int letter = 1; letter <= letters; ++letter) {
      ++counts[letter];
      if (ok_prefix(letter)) {
        current.push_back(letter);
        self(self);
        current.pop_back();
      }
      --counts[letter];
    }
  };
  rec(rec);
  return out;
}

long long word_model_count_rectangular(int m, int k, TableauClass cls) {
  if (cls != TableauClass::SYCT && cls != TableauClass::SPYCT)
    throw std::invalid_argument("word_model_count_rectangular: class must be SYCT or SPYCT");
  bool peak = cls == TableauClass::SPYCT;
  if (m < 1 || k < 1) throw std::invalid_argument("word_model_count_rectangular: bad m, k");

  std::vector<int> target;
  if (peak) {
    if (m < 2) throw std::invalid_argument("peak rectangles need m >= 2");
    target.push_back(2 * k);
    for (int i = 2; i <= m - 1; ++i) target.push_back(k);
  } else {
    target.assign(m, k);
  }
  int letters = static_cast<int>(target.size());

  std::map<std::vector<int>, long long> memo;
  std::vector<int> counts(letters, 0);
  auto rec = [&](auto&& self) -> long long {
    bool done = true;
    for (int i = 0; i < letters; ++i)
      if (counts[i] < target[i]) done = false;
    if (done) return 1;
    auto it = memo.find(counts);
    if (it != memo.end()) return it->second;
    long long total = 0;
    for (int letter = 1; letter <= letters; ++letter) {
      if (counts[letter - 1] >= target[letter - 1]) continue;
      ++counts[letter - 1];
      bool ok;
      if (peak)
        ok = letter == 1 || (letter == 2 ? counts[0] >= 2 * counts[1]
                                         : counts[letter - 2] >= counts[letter - 1]);
      else
        ok = letter == 1 || counts[letter - 2] >= counts[letter - 1];
      if (ok) total += self(self);
      --counts[letter - 1];
    }
    memo[counts] = total;
    return total;
  };
  return rec(rec);
}

// ---- column sorting and set-valued bijections ----

Filling sort_columns_map(const Filling& t) {
  if (auto r = validate(t, TableauClass::SYCT); !r.ok)
    throw std::invalid_argument("sort_columns_map: input is not an SYCT (" + r.condition + ")");
  Composition lambda = sorted_decreasing(t.shape);
  Filling out;
  out.shape = lambda;
  out.rows.resize(lambda.size());
  for (std::size_t r = 0; r < lambda.size(); ++r) out.rows[r].resize(lambda[r]);
  for (int c = 1; c <= max_part(t.shape); ++c) {
    std::vector<int> column;
    for (int r = 1; r <= static_cast<int>(t.rows.size()); ++r)
      if (t.has_box(c, r)) column.push_back(t.at(c, r));
    std::sort(column.begin(), column.end());
    for (std::size_t r = 0; r < column.size(); ++r) out.rows[r][c - 1] = column[r];
  }
  return out;
}

Filling reflect(const Filling& t) {
  if (!is_partition(t.shape))
    throw std::invalid_argument("reflect: shape must be a partition");
  Composition conj = conjugate(t.shape);
  Filling out;
  out.shape = conj;
  out.rows.resize(conj.size());
  for (std::size_t r = 0; r < conj.size(); ++r) out.rows[r].resize(conj[r]);
  for (int r = 1; r <= static_cast<int>(t.rows.size()); ++r)
    for (int c = 1; c <= t.shape[r - 1]; ++c) out.rows[c - 1][r - 1] = t.at(c, r);
  return out;
}

SetValuedFilling reflect_svt(const SetValuedFilling& v) {
  if (!is_partition(v.shape))
    throw std::invalid_argument("reflect_svt: shape must be a partition");
  Composition conj = conjugate(v.shape);
  SetValuedFilling out;
  out.shape = conj;
  out.rows.resize(conj.size());
  for (std::size_t r = 0; r < conj.size(); ++r) out.rows[r].resize(conj[r]);
  for (int r = 1; r <= static_cast<int>(v.rows.size()); ++r)
    for (int c = 1; c <= v.shape[r - 1]; ++c) out.rows[c - 1][r - 1] = v.rows[r - 1][c - 1];
  return out;
}

SetValuedFilling merge_columns(const Filling& t) {
  SetValuedFilling out;
  out.rows.resize(t.rows.size());
  for (int r = 1; r <= static_cast<int>(t.rows.size()); ++r) {
    std::vector<int> first{t.at(1, r)};
    if (t.has_box(2, r)) first.push_back(t.at(2, r));
    std::sort(first.begin(), first.end());
    out.rows[r - 1].push_back(first);
    for (int c = 3; c <= t.shape[r - 1]; ++c) out.rows[r - 1].push_back({t.at(c, r)});
  }
  for (const auto& row : out.rows) out.shape.push_back(static_cast<int>(row.size()));
  return out;
}

SetValuedFilling merge_rows(const Filling& t) {
  if (t.rows.empty()) throw std::invalid_argument("merge_rows: empty filling");
  SetValuedFilling out;
  int width = t.shape[0];
  if (t.rows.size() >= 2) width = std::max(width, t.shape[1]);
  out.rows.emplace_back();
  for (int c = 1; c <= width; ++c) {
    std::vector<int> cell;
    if (t.has_box(c, 1)) cell.push_back(t.at(c, 1));
    if (t.has_box(c, 2)) cell.push_back(t.at(c, 2));
    std::sort(cell.begin(), cell.end());
    out.rows[0].push_back(cell);
  }
  for (int r = 3; r <= static_cast<int>(t.rows.size()); ++r) {
    out.rows.emplace_back();
    for (int c = 1; c <= t.shape[r - 1]; ++c) out.rows.back().push_back({t.at(c, r)});
  }
  for (const auto& row : out.rows) out.shape.push_back(static_cast<int>(row.size()));
  return out;
}

SetValuedFilling g_lambda(const Filling& t) {
  if (auto r = validate(t, TableauClass::SPYT); !r.ok)
    throw std::invalid_argument("g_lambda: input is not an SPYT (" + r.condition + ")");
  const Composition& lambda = t.shape;
  if (lambda.empty() || lambda.back() < 2)
    throw std::invalid_argument("g_lambda: last part of the shape must exceed 1");
  SetValuedFilling out = reflect_svt(merge_columns(t));
  out.density.assign(out.shape.size(), 1);
  if (!out.density.empty()) out.density[0] = 2;
  return out;
}

Filling h_lambda(const SetValuedFilling& v) {
  if (auto r = validate_svt(v); !r.ok)
    throw std::invalid_argument("h_lambda: input is not an SVT (" + r.condition + ")");
  if (v.density.empty() || v.density[0] != 2)
    throw std::invalid_argument("h_lambda: density must be (2,1,...,1)");
  for (std::size_t r = 1; r < v.density.size(); ++r)
    if (v.density[r] != 1)
      throw std::invalid_argument("h_lambda: density must be (2,1,...,1)");
  SetValuedFilling w = reflect_svt(v);
  Filling out;
  out.rows.resize(w.rows.size());
  for (int r = 1; r <= static_cast<int>(w.rows.size()); ++r) {
    const auto& first = w.rows[r - 1][0];
    if (first.size() != 2) throw std::invalid_argument("h_lambda: malformed first column");
    out.rows[r - 1].push_back(first[0]);
    out.rows[r - 1].push_back(first[1]);
    for (std::size_t c = 1; c < w.rows[r - 1].size(); ++c) {
      if (w.rows[r - 1][c].size() != 1)
        throw std::invalid_argument("h_lambda: malformed cell");
      out.rows[r - 1].push_back(w.rows[r - 1][c][0]);
    }
  }
  for (const auto& row : out.rows) out.shape.push_back(static_cast<int>(row.size()));
  return out;
}

}  // namespace pqsym
