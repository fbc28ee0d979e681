#pragma once

// The tableau families: validation with violation reports, backtracking
// enumeration, descent statistics and the two hook length counting
// formulas.
//
// All families are standard (entries exactly 1..n).  SShT lives on the
// shifted diagram of a strict partition; row r is stored as a plain list
// but occupies absolute columns r..r+lambda_r-1.

#include <string>
#include <vector>

#include "pqsym/composition.hpp"
#include "pqsym/filling.hpp"

namespace pqsym {

enum class TableauClass { SIT, SPIT, SYCT, SPYCT, SPYT, SYT, SShT, DIRT };

TableauClass tableau_class_from_string(const std::string& s);
std::string to_string(TableauClass cls);

struct ValidationReport {
  bool ok = true;
  std::string condition;   // identifier of the first violated condition
  std::vector<Box> boxes;  // witnessing box(es)
};

ValidationReport validate(const Filling& f, TableauClass cls);
bool is_valid(const Filling& f, TableauClass cls);

// Distinct entries whose standardization is an SPIT.
bool is_generalized_spit(const Filling& f);

bool shape_valid_for(const Composition& shape, TableauClass cls);

// All standard members of the class with the given shape, ordered
// lexicographically by the word (row of entry 1, row of entry 2, ...).
std::vector<Filling> enumerate_tableaux(const Composition& shape, TableauClass cls);

// DIRTs of shape beta whose row strip shape is exactly `strip`.
std::vector<Filling> enumerate_dirts(const Composition& beta, const Composition& strip);

// Lengths of the maximal runs a, a+1, ... with each successor strictly
// right of its predecessor; entries must be 1..n.
Composition row_strip_shape(const Filling& q);

// BDes(t) = {i : i weakly right of i+1}; t must be an SYCT.
IndexSet bdes(const Filling& t);

// |SPIT(alpha)| via the hook-type product formula.
long long hook_count_spit(const Composition& alpha);
// The analogous SPYT formula; only valid when all parts are <= 3.
long long hook_count_spyt(const Composition& lambda);
// The raw formula value without the parts<=3 guard (it can disagree with
// |SPYT(lambda)| outside that range, e.g. (5,3) gives 20 vs 19).
long long spyt_hook_formula_value(const Composition& lambda);

// Standard set-valued Young tableaux: box (i,j) holds a set of rho_j
// integers; sets grow along rows and up columns.
struct SetValuedFilling {
  Composition shape;    // partition, rows bottom-to-top
  Composition density;  // rho, one part per row
  std::vector<std::vector<std::vector<int>>> rows;
};

bool operator==(const SetValuedFilling& a, const SetValuedFilling& b);
bool operator<(const SetValuedFilling& a, const SetValuedFilling& b);

ValidationReport validate_svt(const SetValuedFilling& v);
std::vector<SetValuedFilling> enumerate_svt(const Composition& lambda, const Composition& rho);

}  // namespace pqsym
