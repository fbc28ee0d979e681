#pragma once

// Compositions, peak compositions and the subset correspondence.
//
// A composition of n is stored as a plain vector of positive parts, row 1
// first.  Peak compositions are compositions whose parts, except possibly
// the last one, are all >= 2.  Subsets of [n-1] are carried around as an
// IndexSet together with their ambient n, since comp() needs it.

#include <stdexcept>
#include <string>
#include <vector>

namespace pqsym {

using Composition = std::vector<int>;

int comp_size(const Composition& alpha);

bool is_composition(const Composition& alpha);
bool is_peak_composition(const Composition& alpha);
bool is_partition(const Composition& alpha);
bool is_strict_partition(const Composition& alpha);
// A peak partition is a partition with at most one part equal to 1,
// i.e. a partition that is also a peak composition.
bool is_peak_partition(const Composition& alpha);

Composition reversed(const Composition& alpha);
// lambda(alpha): parts sorted weakly decreasing.
Composition sorted_decreasing(const Composition& alpha);
// Conjugate partition; alpha must be a partition.
Composition conjugate(const Composition& lambda);
// Number of boxes in column c of the diagram of alpha.
int column_count(const Composition& alpha, int col);
int max_part(const Composition& alpha);

struct IndexSet {
  int ambient = 0;
  std::vector<int> elements;  // strictly increasing positive integers
};

bool operator==(const IndexSet& a, const IndexSet& b);

// Validates that elements are strictly increasing, positive and <= ambient.
IndexSet make_index_set(std::vector<int> elements, int ambient);

// Peak set in [ambient-1]: subset of [2, ambient-1] with no two consecutive.
bool is_peak_set(const IndexSet& x);
void require_peak_set(const IndexSet& x);

// set(alpha) = {a1, a1+a2, ..., a1+...+a_{l-1}} with ambient |alpha|.
IndexSet set_of(const Composition& alpha);

// comp(I) = (i1, i2-i1, ..., n-ip); inverse of set_of.
Composition comp_of(const IndexSet& index_set);
Composition comp_of(const std::vector<int>& elements, int n);

// Peak(X) = {i in X : i > 1 and i-1 not in X}.
IndexSet peak_of(const IndexSet& x);

// All (peak) compositions of n in canonical order: lexicographic on the
// parts list, a proper prefix before its extensions.
std::vector<Composition> compositions_of(int n, bool peak_only = false);

// Every prefix partial sum of alpha is <= the one of beta (trailing sums
// pad shorter lists).  Requires |alpha| = |beta|.
bool dominance_leq(const Composition& alpha, const Composition& beta);

// alpha refines beta, i.e. set(beta) is a subset of set(alpha).
bool refines(const Composition& alpha, const Composition& beta);

// (-1)^{l(sigma)} for the minimal permutation sorting alpha into
// decreasing order; parts must be pairwise distinct.
int sorting_sign(const Composition& alpha);

std::string to_string(const Composition& alpha);

}  // namespace pqsym
