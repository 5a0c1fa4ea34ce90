#pragma once

#include <array>
#include <string_view>

#include "citerank/model.hpp"

namespace citerank {

// The eight-paper model set and its two single-citation variants, with author
// labels X, Y, Z attached. first_mod moves the least-cited paper up by one;
// second_mod gives one of the three four-citation papers another citation.
struct Table1Models {
  ReferenceSet original;
  ReferenceSet first_mod;
  ReferenceSet second_mod;
};

Table1Models table1_models();

enum class FieldCaseId { A, B, C, D };

// One of four fictitious 100-paper field distributions over citation counts
// 0..10. A is literal data; B, C, D are derived from it by rule:
//   B(c) = ceil(A(c)/2) for c >= 2,   C(c) = ceil(3*A(c)/2) for c >= 2,
//   D(c) = A(c-1)       for c >= 2,
// singly-cited papers fixed at 20 and the uncited row absorbing the remainder
// so each case totals 100 papers.
struct FieldCase {
  FieldCaseId id;
  std::array<int, 11> paper_counts;  // index = citation count

  ReferenceSet to_reference_set() const;
};

FieldCase field_case(FieldCaseId id);
FieldCase field_case(std::string_view label);  // "A".."D"; throws UnknownCaseError

}  // namespace citerank
