#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "citerank/indicators.hpp"
#include "citerank/model.hpp"

namespace citerank {

// Addresses one paper either by id or as "the k-th paper currently at this
// citation count" (1-based, in reference-set input order). Text forms:
//   id:<string>      at:<count>#<ordinal>
struct PaperSelector {
  static PaperSelector by_id(std::string id);
  static PaperSelector at_count(Citations citations, int ordinal);
  static PaperSelector parse(std::string_view text);

  std::string to_text() const;

  bool is_id() const noexcept { return !id.empty(); }

  std::string id;           // empty when addressing by count
  Citations citations = 0;  // used when id is empty
  int ordinal = 1;
};

struct CitationDelta {
  PaperSelector selector;
  std::int64_t delta = 0;
  int line = 0;  // source line when parsed from a spec file, else 0
};

// An ordered list of citation deltas. Applied atomically: every selector
// resolves against the original set or nothing is applied.
class PerturbationSpec {
 public:
  PerturbationSpec() = default;
  explicit PerturbationSpec(std::vector<CitationDelta> deltas);

  // One delta per line: "<selector> <signed integer>". Blank lines and lines
  // starting with '#' are ignored.
  static PerturbationSpec parse(std::istream& in, const std::string& source = "");
  static PerturbationSpec parse_text(std::string_view text,
                                     const std::string& source = "");

  std::string to_text() const;

  const std::vector<CitationDelta>& deltas() const noexcept { return deltas_; }
  bool empty() const noexcept { return deltas_.empty(); }
  std::int64_t net_delta() const;

 private:
  std::vector<CitationDelta> deltas_;
};

// New set with all deltas applied; the input is untouched, size and ids are
// preserved. Throws SelectorUnresolvedError, SelectorConflictError (two deltas
// addressing one paper), NegativeResultError.
ReferenceSet apply(const ReferenceSet& set, const PerturbationSpec& spec);

struct PaperDelta {
  Citations citations_before = 0;
  Citations citations_after = 0;
  IndicatorValue p100_before;
  IndicatorValue p100_after;
  Rational delta_pp;  // after - before, percentage points
};

struct AuthorDelta {
  Rational mean_before;
  Rational mean_after;
  Rational delta_pp;
  std::optional<Rational> relative_percent;  // empty when mean_before == 0
};

// Every consequence of a perturbation between two sets over the same papers.
struct DiffReport {
  std::set<Citations> counts_appeared;
  std::set<Citations> counts_vanished;
  int i_max_before = 0;
  int i_max_after = 0;
  std::map<std::string, PaperDelta> per_paper;
  std::map<std::string, AuthorDelta> per_author;
  std::int64_t net_citation_delta = 0;
};

DiffReport diff(const ReferenceSet& before, const ReferenceSet& after,
                DegeneratePolicy policy = DegeneratePolicy::error);

enum class GapMechanism {
  gap_filled,             // a previously absent count became present
  merged_into_new,        // papers left for a count that did not exist before
  emptied_into_existing,  // papers left for counts that already existed
};

enum class ScaleShift {
  compressed,  // i_max grew: the value at any surviving rank dropped
  dilated,     // i_max shrank: the value at any surviving rank rose
  unchanged,
};

struct VanishedCount {
  GapMechanism kind;
  std::vector<Citations> destinations;  // where its papers went, sorted
};

struct MechanismSummary {
  std::map<Citations, GapMechanism> appeared;  // always gap_filled
  std::map<Citations, VanishedCount> vanished;
  ScaleShift shift = ScaleShift::unchanged;
};

MechanismSummary classify_mechanism(const DiffReport& report);

}  // namespace citerank
