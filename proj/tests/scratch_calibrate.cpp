// Temporary calibration harness: finds the smallest xi round-trip failures
// and DIRT predicate mismatches, printing enough state to fix conditions.
#include <iostream>
#include <map>
#include <set>

#include "pqsym/bijections.hpp"

using namespace pqsym;

static void print_filling(const Filling& f) {
  for (auto it = f.rows.rbegin(); it != f.rows.rend(); ++it) {
    for (int v : *it) std::cout << v << ' ';
    std::cout << '\n';
  }
}

int main() {
  int shown = 0;
  for (int n = 1; n <= 9 && shown < 3; ++n)
    for (const auto& alpha : compositions_of(n, true)) {
      for (const auto& t : enumerate_tableaux(alpha, TableauClass::SPIT)) {
        Filling image = xi(t);
        Filling back = xi_inverse(image);
        if (back != t) {
          std::cout << "=== xi round trip failure, alpha = " << to_string(alpha) << "\n";
          std::cout << "T:\n";
          print_filling(t);
          std::cout << "xi(T):\n";
          print_filling(image);
          std::cout << "xi_inverse(xi(T)):\n";
          print_filling(back);
          std::vector<XiInvStep> steps;
          xi_inverse(image, &steps);
          for (const auto& s : steps) {
            std::cout << "  g=" << s.g << " cond=" << s.cond << " seq=[";
            for (int z : s.seq) std::cout << z << ' ';
            std::cout << "] removed=" << s.removed << "\n";
          }
          if (++shown >= 3) goto dirts;
        }
      }
    }
dirts:
  std::cout << "\n--- DIRT mismatches ---\n";
  shown = 0;
  for (int n = 1; n <= 6 && shown < 4; ++n)
    for (const auto& alpha : compositions_of(n)) {
      std::map<Composition, std::set<Filling>> oracle;
      for (const auto& t : enumerate_tableaux(alpha, TableauClass::SIT)) {
        auto [p, q] = insertion_pair(reading_word_row(t));
        oracle[q.shape].insert(q);
      }
      for (const auto& beta : compositions_of(n)) {
        auto dirts = enumerate_dirts(beta, reversed(alpha));
        std::set<Filling> dirt_set(dirts.begin(), dirts.end());
        auto it = oracle.find(beta);
        std::set<Filling> expected = it == oracle.end() ? std::set<Filling>{} : it->second;
        if (dirt_set == expected) continue;
        std::cout << "alpha=" << to_string(alpha) << " beta=" << to_string(beta) << "\n";
        for (const auto& q : expected)
          if (!dirt_set.count(q)) {
            std::cout << " oracle-only (predicate rejects): cond="
                      << validate(q, TableauClass::DIRT).condition << "\n";
            print_filling(q);
          }
        for (const auto& q : dirt_set)
          if (!expected.count(q)) {
            std::cout << " predicate-only (not an image):\n";
            print_filling(q);
          }
        if (++shown >= 4) return 0;
      }
    }
  return 0;
}
