#pragma once

#include <filesystem>

#include "citerank/model.hpp"
#include "citerank/perturbation.hpp"

namespace citerank::fixtures {

// Bundled example datasets. table1_* and table2_* come straight from the
// generators module; the others reproduce published citation records whose
// condensed mid-ranges carry synthetic per-count splits (totals, ranks and
// cumulated percentages are authoritative, the splits inside a condensed
// range are not).

ReferenceSet table3_original();
ReferenceSet table4_original();
ReferenceSet epl(int year);  // 1986, 1987, 2007, 2008

// Perturbation specs shipped next to the datasets.
PerturbationSpec table3_mod(int which);  // 1..4
PerturbationSpec ll1();
PerturbationSpec ll2();

// Writes every fixture file into `directory` (creating it if needed).
void write_all(const std::filesystem::path& directory);

}  // namespace citerank::fixtures
