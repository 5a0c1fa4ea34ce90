#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citerank/model.hpp"

namespace citerank {

// A table with a single unique count cannot satisfy both endpoint rules
// (lowest -> 0 and highest -> 100). The caller opts in to treating the sole
// count as top impact; the default is an error so means are never silently
// skewed.
enum class DegeneratePolicy { error, top };

// Whether papers sitting exactly at a class boundary belong to the top class.
enum class ThresholdMembership { inclusive, exclusive };

IndicatorValue p100(Citations citations, const UniqueCountTable& table,
                    DegeneratePolicy policy = DegeneratePolicy::error);

std::map<std::string, IndicatorValue> p100_all(
    const ReferenceSet& set, DegeneratePolicy policy = DegeneratePolicy::error);

// Unweighted arithmetic mean of the author's per-paper P100 values.
Rational mean_p100(const ReferenceSet& set, std::string_view author,
                   DegeneratePolicy policy = DegeneratePolicy::error);

// One (reference table, citation count) pair per subject category.
struct CategoryRanked {
  UniqueCountTable table;
  Citations citations;
};

// Unweighted mean of the per-category P100 values of one paper.
Rational multi_category_p100(std::span<const CategoryRanked> categories,
                             DegeneratePolicy policy = DegeneratePolicy::error);

struct CumulatedRow {
  Citations citations;
  int papers;
  Rational cumulated;  // fraction of papers with count <= citations, in (0, 1]
};

std::vector<CumulatedRow> cumulated_percentages(const UniqueCountTable& table);

struct TopFractionResult {
  Citations threshold_citations;
  int member_count;
  std::vector<std::string> member_ids;  // sorted
  IndicatorValue threshold_p100;
};

// Smallest count whose exact cumulated paper fraction strictly exceeds
// (1 - fraction); papers at the threshold count as members. Strict comparison
// on exact rationals: a cumulated fraction of exactly 90% does not yet reach
// the top decile.
TopFractionResult top_fraction(const ReferenceSet& set, const Rational& fraction,
                               DegeneratePolicy policy = DegeneratePolicy::error);

// Boundary-membership query where the inclusive/exclusive ambiguity is the
// caller's explicit choice.
bool in_top_fraction(const ReferenceSet& set, std::string_view paper_id,
                     const Rational& fraction, ThresholdMembership membership);

// Citation count of the paper at ascending position ceil(n/2).
Citations median_paper_citations(const ReferenceSet& set);

// Classic position-based percentile 100 * (position - 1/2) / n over
// individually ranked papers; comparison baseline. Never attains 0 or 100.
Rational hazen_percentile(int ascending_position, int n);

}  // namespace citerank
