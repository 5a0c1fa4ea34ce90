#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "citerank/indicators.hpp"
#include "citerank/model.hpp"
#include "citerank/perturbation.hpp"

namespace citerank {

struct ReportOptions {
  bool show_cumulated = false;
  bool show_author_means = false;
  int precision = 1;  // decimals for the P100 column; means print one more
  DegeneratePolicy policy = DegeneratePolicy::error;
};

struct ReportRow {
  Citations citations;
  int papers;
  int rank;
  Rational p100;
  std::optional<Rational> cumulated;  // percentage, set when requested
};

// The unique-count table of one dataset, ready for rendering: one row per
// ranked count, optional cumulated column and per-author mean block.
struct ReportTable {
  std::string label;
  std::size_t paper_count = 0;
  Citations citation_total = 0;
  int i_max = 0;
  std::vector<ReportRow> rows;
  std::vector<std::pair<std::string, Rational>> author_means;
};

ReportTable build_report(const ReferenceSet& set, const ReportOptions& options);

void render_report(const ReportTable& table, std::ostream& out,
                   const ReportOptions& options);

// Machine-readable mirror: tab-separated, one record per unique count.
void write_report_tsv(const ReportTable& table, std::ostream& out,
                      const ReportOptions& options);

// Perturbation rendering: i_max before/after, appeared/vanished counts,
// mechanism tags, per-count P100 columns (blank cells where a count is
// unranked on one side), and per-author means in pp and percent.
void render_diff(const DiffReport& report, const MechanismSummary& mechanisms,
                 std::ostream& out, int precision = 1);

enum class PlotMode { by_citation_count, by_unique_count, by_p100 };

struct PlotPoint {
  Rational x;
  long papers;
};

// by_citation_count: every count from 0 to max (or max_count cap), zeros kept.
// by_unique_count:   only ranked counts, so the paper column never drops to 0.
// by_p100:           the unique-count sequence with x mapped to 100*i/i_max.
std::vector<PlotPoint> plot_data(const ReferenceSet& set, PlotMode mode,
                                 std::optional<Citations> max_count = {},
                                 DegeneratePolicy policy = DegeneratePolicy::error);

void write_plot_data(std::span<const PlotPoint> points, std::ostream& out,
                     int precision = 4);

struct YearSummary {
  std::string label;
  std::size_t papers = 0;
  int i_max = 0;
  Citations top_count = 0;
  TopFractionResult top;
  bool flagged = false;  // threshold P100 differs from some other dataset's
};

struct YearComparison {
  std::vector<YearSummary> rows;
  // labels of dataset pairs sharing a threshold count but not its P100
  std::vector<std::pair<std::string, std::string>> equal_threshold_disparities;
};

YearComparison compare_years(std::span<const ReferenceSet> sets,
                             const Rational& fraction);

void render_comparison(const YearComparison& comparison, std::ostream& out);

}  // namespace citerank
