#include "citerank/generators.hpp"

#include <string>

#include "citerank/errors.hpp"
#include "citerank/perturbation.hpp"

namespace citerank {

Table1Models table1_models() {
  const std::vector<PaperRecord> originals = {
      {"p1", 1, {"X"}, {}, {}},  {"p2", 2, {"Y"}, {}, {}},
      {"p3", 3, {"Y"}, {}, {}},  {"p4", 4, {"Y"}, {}, {}},
      {"p5", 4, {"Y"}, {}, {}},  {"p6", 4, {"Y"}, {}, {}},
      {"p7", 7, {"Z"}, {}, {}},  {"p8", 10, {"X"}, {}, {}},
  };
  ReferenceSet original(originals, "table1_orig");

  // least-cited paper gains one citation
  PerturbationSpec first({{PaperSelector::at_count(1, 1), +1}});
  ReferenceSet first_mod(apply(original, first).papers(), "table1_mod1");

  // one of the three papers with four citations gains one
  PerturbationSpec second({{PaperSelector::at_count(4, 1), +1}});
  ReferenceSet second_mod(apply(original, second).papers(), "table1_mod2");

  return {std::move(original), std::move(first_mod), std::move(second_mod)};
}

namespace {

// Case A paper counts for citations 0..10; the other cases derive from it.
constexpr std::array<int, 11> kCaseA = {45, 20, 10, 7, 5, 4, 3, 2, 2, 1, 1};

constexpr int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::array<int, 11> derive(FieldCaseId id) {
  std::array<int, 11> counts{};
  counts[1] = 20;  // singly cited papers held constant
  for (int c = 2; c <= 10; ++c) {
    switch (id) {
      case FieldCaseId::A: counts[c] = kCaseA[c]; break;
      case FieldCaseId::B: counts[c] = ceil_div(kCaseA[c], 2); break;
      case FieldCaseId::C: counts[c] = ceil_div(3 * kCaseA[c], 2); break;
      case FieldCaseId::D: counts[c] = kCaseA[c - 1]; break;
    }
  }
  int placed = 0;
  for (int c = 1; c <= 10; ++c) placed += counts[c];
  counts[0] = 100 - placed;  // uncited row absorbs the remainder
  return counts;
}

}  // namespace

ReferenceSet FieldCase::to_reference_set() const {
  const char letter = "ABCD"[static_cast<int>(id)];
  std::vector<PaperRecord> papers;
  papers.reserve(100);
  int serial = 0;
  for (Citations c = 0; c <= 10; ++c)
    for (int k = 0; k < paper_counts[static_cast<std::size_t>(c)]; ++k) {
      PaperRecord paper;
      paper.id = std::string(1, letter) + "-" +
                 (++serial < 10 ? "00" : serial < 100 ? "0" : "") +
                 std::to_string(serial);
      paper.citations = c;
      papers.push_back(std::move(paper));
    }
  return ReferenceSet(std::move(papers), std::string("table2_") + letter);
}

FieldCase field_case(FieldCaseId id) {
  FieldCase fc{id, id == FieldCaseId::A ? kCaseA : derive(id)};
  return fc;
}

FieldCase field_case(std::string_view label) {
  if (label == "A") return field_case(FieldCaseId::A);
  if (label == "B") return field_case(FieldCaseId::B);
  if (label == "C") return field_case(FieldCaseId::C);
  if (label == "D") return field_case(FieldCaseId::D);
  throw UnknownCaseError(std::string(label));
}

}  // namespace citerank
