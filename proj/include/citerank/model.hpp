#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "citerank/rational.hpp"

namespace citerank {

using Citations = std::int64_t;

// One publication. Author and category labels are kept sorted and unique so
// records compare as values.
struct PaperRecord {
  std::string id;
  Citations citations = 0;
  std::vector<std::string> authors;
  std::optional<int> year;
  std::vector<std::string> categories;

  void normalize();  // sort + dedupe label sets
  bool has_author(std::string_view label) const;

  friend bool operator==(const PaperRecord&, const PaperRecord&) = default;
};

// The comparison population. Validated on construction: non-empty, unique ids,
// no negative citation counts. Immutable afterwards; paper order is preserved
// because ordinal selectors resolve against it.
class ReferenceSet {
 public:
  explicit ReferenceSet(std::vector<PaperRecord> papers, std::string label = "");

  const std::vector<PaperRecord>& papers() const noexcept { return papers_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t size() const noexcept { return papers_.size(); }
  Citations total_citations() const noexcept { return total_; }

  const PaperRecord* find(std::string_view id) const;
  std::vector<std::string> author_labels() const;  // distinct, sorted

 private:
  std::vector<PaperRecord> papers_;
  std::string label_;
  Citations total_ = 0;
};

ReferenceSet validate_reference_set(std::vector<PaperRecord> papers,
                                    std::string label = "");

struct CountEntry {
  Citations citations;  // strictly increasing across entries
  int papers;           // >= 1; zero-paper counts are not ranked
  int rank;             // 0..i_max in order

  friend bool operator==(const CountEntry&, const CountEntry&) = default;
};

// Sorted unique citation counts with multiplicities and ranks.
class UniqueCountTable {
 public:
  explicit UniqueCountTable(const ReferenceSet& set);

  const std::vector<CountEntry>& entries() const noexcept { return entries_; }
  int i_max() const noexcept { return static_cast<int>(entries_.size()) - 1; }
  std::size_t total_papers() const noexcept { return total_papers_; }

  std::optional<int> rank_of(Citations citations) const;
  Citations min_count() const noexcept { return entries_.front().citations; }
  Citations max_count() const noexcept { return entries_.back().citations; }

  friend bool operator==(const UniqueCountTable&, const UniqueCountTable&) = default;

 private:
  std::vector<CountEntry> entries_;
  std::size_t total_papers_ = 0;
};

UniqueCountTable build_unique_table(const ReferenceSet& set);

// P100 of one ranked count: exactly 100 * rank / i_max.
struct IndicatorValue {
  Rational value;  // in [0, 100]
  int rank = 0;
  int i_max = 0;

  friend bool operator==(const IndicatorValue&, const IndicatorValue&) = default;
};

}  // namespace citerank
