#pragma once

// The constructive maps: the descent-preserving bijection on SPIT(alpha)
// and its inverse, the Allen-Hallam-Mason insertion with its recording
// tableau, the part-lowering operators on parts<=3 peak compositions, the
// lattice-word models for SYCTs and SPYCTs, and the merge/reflect/split
// bijections between SPYTs and set-valued tableaux.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pqsym/composition.hpp"
#include "pqsym/filling.hpp"
#include "pqsym/tableaux.hpp"

namespace pqsym {

// ---- pair insertion ----

struct Alg31Step {
  int j = 0;
  std::vector<int> a_set, b_set;
  std::optional<int> z;
};

struct Alg31Trace {
  int h = 0;
  std::vector<Alg31Step> steps;
};

// The shape-descent alignment condition for a pair (t, u).
bool shape_descent_aligned(const Filling& t, const Filling& u);

// Pair insertion: u gains the one entry of t it lacks, then entries are
// swapped until the row word of the result and the column word of t have
// realigned descents.  Both inputs are generalized SPITs.
Filling pair_insert(const Filling& t, const Filling& u, Alg31Trace* trace = nullptr);

struct XiTrace {
  std::vector<Alg31Trace> insertions;
};

// The bijection SPIT(alpha) -> SPIT(alpha) with
// Des(w_c(T)) = Des(w_r(xi(T))).
Filling xi(const Filling& t, XiTrace* trace = nullptr);

// ---- inverse direction ----

bool cond_c1(const Filling& v, int g);
bool cond_c2(const Filling& v, int g);

// Maximal sequences g-1, g-2, ... resp. g, g+1, ... of swap indices; the
// returned indices are applied first-to-last.
std::vector<int> downseq(const Filling& v, int g);
std::vector<int> upseq(const Filling& v, int g);

struct XiInvStep {
  int g = 0;
  std::string cond;  // "C1", "C2" or "none"
  std::vector<int> seq;
  int removed = 0;
};

// Inverse of xi: peels off the last column-major box of V^i step by step.
Filling xi_inverse(const Filling& t, std::vector<XiInvStep>* trace = nullptr);

// ---- AHM insertion ----

// Insert k into a Young composition tableau; returns the new tableau,
// the created box, and the height of the freshly created row if any.
struct AhmInsertion {
  Filling result;
  Box new_box;
  std::optional<int> new_row;
};

AhmInsertion ahm_insert_full(int k, const Filling& t);
Filling ahm_insert(int k, const Filling& t);

// (P(w), Q(w)): insertion and recording tableaux of a word with distinct
// entries.
std::pair<Filling, Filling> insertion_pair(const Word& w);

// c_{alpha,beta} = |DIRT(beta, alpha^r)|.
long long dirt_count(const Composition& beta, const Composition& alpha);

// ---- parts <= 3 operators ----

// I_alpha = {i < l(alpha) : alpha_i = 3, alpha_{i+1} != 1}.
std::vector<int> i_alpha(const Composition& alpha);

// Delta_S(alpha) for S a subset of I_alpha.
Composition delta_s(const Composition& alpha, const std::vector<int>& s);

// T in A_alpha(s): the last entry of row s exceeds the last entry of row s+1.
bool in_a_alpha(const Filling& t, int s);
bool in_a_alpha_any(const Filling& t);

// Sorts the third column increasingly; SPYCT(alpha) -> SPIT(alpha) \ A_alpha.
Filling psi_alpha(const Filling& t);

// Box-shifting bijection from the intersection of the A_alpha(s), s in S,
// onto SPIT(Delta_S(alpha)).
Filling phi_s(const Filling& t, const std::vector<int>& s);

// ---- word models ----

bool is_lattice_word(const Word& w);
bool is_peak_lattice_word(const Word& w);

// Row-assignment word of a lattice word.
Word rs_word(const Word& w);
// Peak-to-plain relabelling of a peak lattice word.
Word ps_word(const Word& w);

Word f_alpha(const Filling& t);
Filling f_alpha_inv(const Composition& alpha, const Word& w);
Word f_tilde_alpha(const Filling& t);
Filling f_tilde_alpha_inv(const Composition& alpha, const Word& w);

// All words of the SYCT resp. SPYCT model of alpha (cls must be SYCT or
// SPYCT), lexicographically ordered.
std::vector<Word> word_model(const Composition& alpha, TableauClass cls);

// Fast model count via dynamic programming over prefix letter counts;
// valid for rectangular alpha = (m^k) where the rs-condition is void.
long long word_model_count_rectangular(int m, int k, TableauClass cls);

// ---- column sorting and set-valued bijections ----

// f_lambda: sorts every column increasingly; SYCT -> SYT of the sorted shape.
Filling sort_columns_map(const Filling& t);

Filling reflect(const Filling& t);
SetValuedFilling reflect_svt(const SetValuedFilling& v);
SetValuedFilling merge_columns(const Filling& t);
SetValuedFilling merge_rows(const Filling& t);

// g_lambda = reflect . merge_columns : SPYT(lambda) -> SVT(lambda'_-, rho).
SetValuedFilling g_lambda(const Filling& t);
// h_lambda = split_columns . reflect, the inverse of g_lambda.
Filling h_lambda(const SetValuedFilling& v);

}  // namespace pqsym
