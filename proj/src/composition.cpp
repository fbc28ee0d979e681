#include "pqsym/composition.hpp"

#include <algorithm>
#include <numeric>

namespace pqsym {

int comp_size(const Composition& alpha) {
  return std::accumulate(alpha.begin(), alpha.end(), 0);
}

bool is_composition(const Composition& alpha) {
  return std::all_of(alpha.begin(), alpha.end(), [](int p) { return p >= 1; });
}

bool is_peak_composition(const Composition& alpha) {
  if (!is_composition(alpha)) return false;
  for (std::size_t i = 0; i + 1 < alpha.size(); ++i)
    if (alpha[i] < 2) return false;
  return true;
}

bool is_partition(const Composition& alpha) {
  if (!is_composition(alpha)) return false;
  return std::is_sorted(alpha.rbegin(), alpha.rend());
}

bool is_strict_partition(const Composition& alpha) {
  if (!is_partition(alpha)) return false;
  return std::adjacent_find(alpha.begin(), alpha.end()) == alpha.end();
}

bool is_peak_partition(const Composition& alpha) {
  return is_partition(alpha) && is_peak_composition(alpha);
}

Composition reversed(const Composition& alpha) {
  return Composition(alpha.rbegin(), alpha.rend());
}

Composition sorted_decreasing(const Composition& alpha) {
  Composition out = alpha;
  std::sort(out.rbegin(), out.rend());
  return out;
}

Composition conjugate(const Composition& lambda) {
  if (!is_partition(lambda))
    throw std::invalid_argument("conjugate: not a partition: " + to_string(lambda));
  Composition out;
  for (int c = 1; c <= max_part(lambda); ++c) out.push_back(column_count(lambda, c));
  return out;
}

int column_count(const Composition& alpha, int col) {
  int count = 0;
  for (int part : alpha)
    if (part >= col) ++count;
  return count;
}

int max_part(const Composition& alpha) {
  return alpha.empty() ? 0 : *std::max_element(alpha.begin(), alpha.end());
}

bool operator==(const IndexSet& a, const IndexSet& b) {
  return a.ambient == b.ambient && a.elements == b.elements;
}

IndexSet make_index_set(std::vector<int> elements, int ambient) {
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    throw std::invalid_argument("make_index_set: repeated element");
  for (int e : elements)
    if (e < 1 || e > ambient)
      throw std::invalid_argument("make_index_set: element " + std::to_string(e) +
                                  " outside [1, " + std::to_string(ambient) + "]");
  return IndexSet{ambient, std::move(elements)};
}

bool is_peak_set(const IndexSet& x) {
  for (std::size_t i = 0; i < x.elements.size(); ++i) {
    int e = x.elements[i];
    if (e < 2 || e > x.ambient - 1) return false;
    if (i > 0 && x.elements[i - 1] == e - 1) return false;
  }
  return true;
}

void require_peak_set(const IndexSet& x) {
  if (!is_peak_set(x))
    throw std::invalid_argument("expected a peak set in [" + std::to_string(x.ambient) + "]");
}

IndexSet set_of(const Composition& alpha) {
  if (!is_composition(alpha)) throw std::invalid_argument("set_of: not a composition");
  IndexSet out;
  out.ambient = comp_size(alpha);
  int sum = 0;
  for (std::size_t i = 0; i + 1 < alpha.size(); ++i) {
    sum += alpha[i];
    out.elements.push_back(sum);
  }
  return out;
}

Composition comp_of(const IndexSet& index_set) {
  return comp_of(index_set.elements, index_set.ambient);
}

Composition comp_of(const std::vector<int>& elements, int n) {
  Composition out;
  int prev = 0;
  for (int e : elements) {
    if (e <= prev || e >= n)
      throw std::invalid_argument("comp_of: invalid index " + std::to_string(e) +
                                  " for ambient " + std::to_string(n));
    out.push_back(e - prev);
    prev = e;
  }
  if (n > 0) out.push_back(n - prev);
  else if (n < 0) throw std::invalid_argument("comp_of: negative ambient");
  return out;
}

IndexSet peak_of(const IndexSet& x) {
  IndexSet out;
  out.ambient = x.ambient;
  for (std::size_t i = 0; i < x.elements.size(); ++i) {
    int e = x.elements[i];
    if (e > 1 && !(i > 0 && x.elements[i - 1] == e - 1)) out.elements.push_back(e);
  }
  return out;
}

std::vector<Composition> compositions_of(int n, bool peak_only) {
  if (n < 0) throw std::invalid_argument("compositions_of: negative n");
  std::vector<Composition> out;
  Composition current;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(current);
      return;
    }
    for (int part = 1; part <= rest; ++part) {
      if (peak_only && part == 1 && rest != 1) continue;
      current.push_back(part);
      self(self, rest - part);
      current.pop_back();
    }
  };
  rec(rec, n);
  std::sort(out.begin(), out.end());
  return out;
}

bool dominance_leq(const Composition& alpha, const Composition& beta) {
  int n = comp_size(alpha);
  if (n != comp_size(beta))
    throw std::invalid_argument("dominance_leq: size mismatch");
  std::size_t len = std::max(alpha.size(), beta.size());
  int sum_a = 0, sum_b = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sum_a += i < alpha.size() ? alpha[i] : 0;
    sum_b += i < beta.size() ? beta[i] : 0;
    if (sum_a > sum_b) return false;
  }
  return true;
}

bool refines(const Composition& alpha, const Composition& beta) {
  if (comp_size(alpha) != comp_size(beta))
    throw std::invalid_argument("refines: size mismatch");
  IndexSet sa = set_of(alpha), sb = set_of(beta);
  return std::includes(sa.elements.begin(), sa.elements.end(), sb.elements.begin(),
                       sb.elements.end());
}

int sorting_sign(const Composition& alpha) {
  Composition sorted = sorted_decreasing(alpha);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("sorting_sign: repeated parts in " + to_string(alpha));
  int inversions = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = i + 1; j < alpha.size(); ++j)
      if (alpha[i] < alpha[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::string to_string(const Composition& alpha) {
  std::string out = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(alpha[i]);
  }
  return out + ")";
}

}  // namespace pqsym
