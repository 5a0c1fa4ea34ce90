#include "citerank/indicators.hpp"

#include <algorithm>

#include "citerank/errors.hpp"

namespace citerank {

IndicatorValue p100(Citations citations, const UniqueCountTable& table,
                    DegeneratePolicy policy) {
  const auto rank = table.rank_of(citations);
  if (!rank)
    throw UnrankedCountError("citation count " + std::to_string(citations) +
                             " has no papers and therefore no rank");
  if (table.i_max() == 0) {
    if (policy == DegeneratePolicy::error) throw DegenerateTableError();
    return {Rational(100), 0, 0};  // sole count treated as highest impact
  }
  return {Rational(100 * *rank, table.i_max()), *rank, table.i_max()};
}

std::map<std::string, IndicatorValue> p100_all(const ReferenceSet& set,
                                               DegeneratePolicy policy) {
  const UniqueCountTable table(set);
  std::map<std::string, IndicatorValue> values;
  for (const auto& paper : set.papers())
    values.emplace(paper.id, p100(paper.citations, table, policy));
  return values;
}

Rational mean_p100(const ReferenceSet& set, std::string_view author,
                   DegeneratePolicy policy) {
  const UniqueCountTable table(set);
  Rational sum(0);
  long papers = 0;
  for (const auto& paper : set.papers()) {
    if (!paper.has_author(author)) continue;
    sum += p100(paper.citations, table, policy).value;
    ++papers;
  }
  if (papers == 0) throw UnknownAuthorError(std::string(author));
  return sum / papers;
}

Rational multi_category_p100(std::span<const CategoryRanked> categories,
                             DegeneratePolicy policy) {
  if (categories.empty())
    throw Error("multi-category P100 requires at least one category");
  Rational sum(0);
  for (const auto& category : categories)
    sum += p100(category.citations, category.table, policy).value;
  return sum / static_cast<std::int64_t>(categories.size());
}

std::vector<CumulatedRow> cumulated_percentages(const UniqueCountTable& table) {
  std::vector<CumulatedRow> rows;
  rows.reserve(table.entries().size());
  const auto total = static_cast<std::int64_t>(table.total_papers());
  std::int64_t running = 0;
  for (const auto& entry : table.entries()) {
    running += entry.papers;
    rows.push_back({entry.citations, entry.papers, Rational(running, total)});
  }
  return rows;
}

TopFractionResult top_fraction(const ReferenceSet& set, const Rational& fraction,
                               DegeneratePolicy policy) {
  const UniqueCountTable table(set);
  const Rational boundary = Rational(1) - fraction;

  // cumulated fractions are non-decreasing and end at 1 > boundary, so the
  // threshold always exists
  Citations threshold = table.max_count();
  for (const auto& row : cumulated_percentages(table)) {
    if (row.cumulated > boundary) {
      threshold = row.citations;
      break;
    }
  }

  TopFractionResult result;
  result.threshold_citations = threshold;
  result.threshold_p100 = p100(threshold, table, policy);
  for (const auto& paper : set.papers())
    if (paper.citations >= threshold) result.member_ids.push_back(paper.id);
  std::sort(result.member_ids.begin(), result.member_ids.end());
  result.member_count = static_cast<int>(result.member_ids.size());
  return result;
}

bool in_top_fraction(const ReferenceSet& set, std::string_view paper_id,
                     const Rational& fraction, ThresholdMembership membership) {
  const PaperRecord* paper = set.find(paper_id);
  if (!paper) throw Error("no paper with id: " + std::string(paper_id));
  const auto top = top_fraction(set, fraction, DegeneratePolicy::top);
  return membership == ThresholdMembership::inclusive
             ? paper->citations >= top.threshold_citations
             : paper->citations > top.threshold_citations;
}

Citations median_paper_citations(const ReferenceSet& set) {
  std::vector<Citations> counts;
  counts.reserve(set.size());
  for (const auto& paper : set.papers()) counts.push_back(paper.citations);
  const std::size_t position = (counts.size() + 1) / 2;  // ceil(n/2), 1-based
  std::nth_element(counts.begin(), counts.begin() + (position - 1), counts.end());
  return counts[position - 1];
}

Rational hazen_percentile(int ascending_position, int n) {
  if (n < 1 || ascending_position < 1 || ascending_position > n)
    throw PositionOutOfRangeError("position " + std::to_string(ascending_position) +
                                  " not in 1.." + std::to_string(n));
  return {100 * (2 * static_cast<std::int64_t>(ascending_position) - 1),
          2 * static_cast<std::int64_t>(n)};
}

}  // namespace citerank
