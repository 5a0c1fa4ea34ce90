#include "citerank/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "citerank/errors.hpp"

namespace citerank {

namespace {

std::string pad_left(const std::string& text, std::size_t width) {
  if (text.size() >= width) return text;
  return std::string(width - text.size(), ' ') + text;
}

}  // namespace

ReportTable build_report(const ReferenceSet& set, const ReportOptions& options) {
  const UniqueCountTable table(set);

  ReportTable report;
  report.label = set.label();
  report.paper_count = set.size();
  report.citation_total = set.total_citations();
  report.i_max = table.i_max();

  const auto cumulated = cumulated_percentages(table);
  for (std::size_t i = 0; i < table.entries().size(); ++i) {
    const auto& entry = table.entries()[i];
    ReportRow row;
    row.citations = entry.citations;
    row.papers = entry.papers;
    row.rank = entry.rank;
    row.p100 = p100(entry.citations, table, options.policy).value;
    if (options.show_cumulated) row.cumulated = cumulated[i].cumulated * 100;
    report.rows.push_back(std::move(row));
  }

  if (options.show_author_means)
    for (const auto& author : set.author_labels())
      report.author_means.emplace_back(author,
                                       mean_p100(set, author, options.policy));
  return report;
}

void render_report(const ReportTable& table, std::ostream& out,
                   const ReportOptions& options) {
  out << "dataset: " << table.label << '\n'
      << "papers: " << table.paper_count << '\n'
      << "citations: " << table.citation_total << '\n'
      << "unique counts: " << table.rows.size() << " (i_max " << table.i_max
      << ")\n\n";

  out << pad_left("citations", 9) << "  " << pad_left("papers", 6) << "  "
      << pad_left("rank", 4) << "  " << pad_left("P100", 7);
  if (options.show_cumulated) out << "  " << pad_left("cum%", 6);
  out << '\n';

  for (const auto& row : table.rows) {
    out << pad_left(std::to_string(row.citations), 9) << "  "
        << pad_left(std::to_string(row.papers), 6) << "  "
        << pad_left(std::to_string(row.rank), 4) << "  "
        << pad_left(format_fixed(row.p100, options.precision), 7);
    if (row.cumulated)
      out << "  " << pad_left(format_fixed(*row.cumulated, 1), 6);
    out << '\n';
  }

  if (!table.author_means.empty()) {
    out << "\nauthor mean P100\n";
    for (const auto& [author, mean] : table.author_means)
      out << "  " << author << "  " << format_fixed(mean, options.precision + 1)
          << '\n';
  }
}

void write_report_tsv(const ReportTable& table, std::ostream& out,
                      const ReportOptions& options) {
  out << "citations\tpapers\trank\tp100";
  if (options.show_cumulated) out << "\tcum_pct";
  out << '\n';
  for (const auto& row : table.rows) {
    out << row.citations << '\t' << row.papers << '\t' << row.rank << '\t'
        << format_fixed(row.p100, options.precision);
    if (row.cumulated) out << '\t' << format_fixed(*row.cumulated, 1);
    out << '\n';
  }
}

namespace {

void list_counts(std::ostream& out, const std::set<Citations>& counts) {
  for (const auto count : counts) out << ' ' << count;
  out << '\n';
}

}  // namespace

void render_diff(const DiffReport& report, const MechanismSummary& mechanisms,
                 std::ostream& out, int precision) {
  const auto unique_before =
      report.i_max_before + 1;
  const auto unique_after = report.i_max_after + 1;
  out << "unique counts: " << unique_before << " -> " << unique_after << '\n'
      << "i_max: " << report.i_max_before << " -> " << report.i_max_after << '\n'
      << "net citation delta: " << report.net_citation_delta << '\n';

  out << "appeared counts (" << report.counts_appeared.size() << "):";
  list_counts(out, report.counts_appeared);
  out << "vanished counts (" << report.counts_vanished.size() << "):";
  list_counts(out, report.counts_vanished);

  switch (mechanisms.shift) {
    case ScaleShift::compressed:
      out << "scale: compressed (i_max grew; values at surviving ranks drop)\n";
      break;
    case ScaleShift::dilated:
      out << "scale: dilated (i_max shrank; values at surviving ranks rise)\n";
      break;
    case ScaleShift::unchanged:
      out << "scale: unchanged\n";
      break;
  }

  if (!mechanisms.appeared.empty() || !mechanisms.vanished.empty()) {
    out << "mechanisms:\n";
    for (const auto& [count, kind] : mechanisms.appeared)
      out << "  " << count << ": gap filled\n";
    for (const auto& [count, vanished] : mechanisms.vanished) {
      out << "  " << count << ": "
          << (vanished.kind == GapMechanism::merged_into_new
                  ? "merged into new"
                  : "emptied into");
      for (const auto destination : vanished.destinations) out << ' ' << destination;
      out << '\n';
    }
  }

  // per-count P100 columns over the union of both tables; a side left blank
  // where the count is unranked there
  std::map<Citations, std::pair<std::optional<Rational>, std::optional<Rational>>>
      columns;
  for (const auto& [id, delta] : report.per_paper) {
    columns[delta.citations_before].first = delta.p100_before.value;
    columns[delta.citations_after].second = delta.p100_after.value;
  }
  out << "\n" << pad_left("citations", 9) << "  " << pad_left("before", 8) << "  "
      << pad_left("after", 8) << "  " << pad_left("delta_pp", 9) << '\n';
  for (const auto& [count, values] : columns) {
    const auto& [before, after] = values;
    out << pad_left(std::to_string(count), 9) << "  "
        << pad_left(before ? format_fixed(*before, precision) : "", 8) << "  "
        << pad_left(after ? format_fixed(*after, precision) : "", 8) << "  ";
    if (before && after)
      out << pad_left(format_fixed(*after - *before, precision), 9);
    out << '\n';
  }

  if (!report.per_author.empty()) {
    out << "\nauthor means:\n";
    for (const auto& [author, delta] : report.per_author) {
      out << "  " << author << ": " << format_fixed(delta.mean_before, 2) << " -> "
          << format_fixed(delta.mean_after, 2) << "  ("
          << (delta.delta_pp >= Rational(0) ? "+" : "")
          << format_fixed(delta.delta_pp, 2) << " pp";
      if (delta.relative_percent)
        out << ", " << (*delta.relative_percent >= Rational(0) ? "+" : "")
            << format_fixed(*delta.relative_percent, 2) << "%";
      out << ")\n";
    }
  }
}

std::vector<PlotPoint> plot_data(const ReferenceSet& set, PlotMode mode,
                                 std::optional<Citations> max_count,
                                 DegeneratePolicy policy) {
  const UniqueCountTable table(set);
  std::vector<PlotPoint> points;

  switch (mode) {
    case PlotMode::by_citation_count: {
      const Citations top =
          max_count ? std::min(*max_count, table.max_count()) : table.max_count();
      for (Citations c = 0; c <= top; ++c) {
        long papers = 0;
        if (const auto rank = table.rank_of(c))
          papers = table.entries()[static_cast<std::size_t>(*rank)].papers;
        points.push_back({Rational(c), papers});
      }
      break;
    }
    case PlotMode::by_unique_count:
      for (const auto& entry : table.entries())
        points.push_back({Rational(entry.citations), entry.papers});
      break;
    case PlotMode::by_p100:
      for (const auto& entry : table.entries())
        points.push_back(
            {p100(entry.citations, table, policy).value, entry.papers});
      break;
  }
  return points;
}

void write_plot_data(std::span<const PlotPoint> points, std::ostream& out,
                     int precision) {
  for (const auto& point : points) {
    if (point.x.denominator() == 1)
      out << point.x.numerator();
    else
      out << format_fixed(point.x, precision);
    out << '\t' << point.papers << '\n';
  }
}

YearComparison compare_years(std::span<const ReferenceSet> sets,
                             const Rational& fraction) {
  YearComparison comparison;
  for (const auto& set : sets) {
    const UniqueCountTable table(set);
    YearSummary summary;
    summary.label = set.label();
    summary.papers = set.size();
    summary.i_max = table.i_max();
    summary.top_count = table.max_count();
    summary.top = top_fraction(set, fraction);
    comparison.rows.push_back(std::move(summary));
  }

  auto& rows = comparison.rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const bool same_p100 =
          rows[i].top.threshold_p100.value == rows[j].top.threshold_p100.value;
      if (same_p100) continue;
      rows[i].flagged = rows[j].flagged = true;
      if (rows[i].top.threshold_citations == rows[j].top.threshold_citations)
        comparison.equal_threshold_disparities.emplace_back(rows[i].label,
                                                            rows[j].label);
    }
  }
  return comparison;
}

void render_comparison(const YearComparison& comparison, std::ostream& out) {
  out << pad_left("dataset", 12) << "  " << pad_left("papers", 6) << "  "
      << pad_left("i_max", 5) << "  " << pad_left("top", 6) << "  "
      << pad_left("threshold", 9) << "  " << pad_left("members", 7) << "  "
      << pad_left("P100", 7) << "  flag\n";
  for (const auto& row : comparison.rows) {
    out << pad_left(row.label, 12) << "  "
        << pad_left(std::to_string(row.papers), 6) << "  "
        << pad_left(std::to_string(row.i_max), 5) << "  "
        << pad_left(std::to_string(row.top_count), 6) << "  "
        << pad_left(std::to_string(row.top.threshold_citations), 9) << "  "
        << pad_left(std::to_string(row.top.member_count), 7) << "  "
        << pad_left(format_fixed(row.top.threshold_p100.value, 2), 7) << "  "
        << (row.flagged ? "*" : "") << '\n';
  }
  for (const auto& [left, right] : comparison.equal_threshold_disparities)
    out << "note: " << left << " and " << right
        << " share a threshold count but not its P100\n";
}

}  // namespace citerank
