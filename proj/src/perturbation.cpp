#include "citerank/perturbation.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

#include "citerank/errors.hpp"

namespace citerank {

namespace {

std::string where(const std::string& source, int line) {
  if (line <= 0) return "";
  return (source.empty() ? "line " : source + ":") + std::to_string(line) + ": ";
}

std::int64_t parse_int(std::string_view text, const std::string& context) {
  std::int64_t value = 0;
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw ParseError(context + "malformed integer: " + std::string(text));
  return value;
}

}  // namespace

PaperSelector PaperSelector::by_id(std::string id) {
  PaperSelector selector;
  selector.id = std::move(id);
  return selector;
}

PaperSelector PaperSelector::at_count(Citations citations, int ordinal) {
  PaperSelector selector;
  selector.citations = citations;
  selector.ordinal = ordinal;
  return selector;
}

PaperSelector PaperSelector::parse(std::string_view text) {
  if (text.starts_with("id:")) {
    auto id = std::string(text.substr(3));
    if (id.empty()) throw ParseError("empty id selector");
    return by_id(std::move(id));
  }
  if (text.starts_with("at:")) {
    const auto body = text.substr(3);
    const auto hash = body.find('#');
    if (hash == std::string_view::npos)
      throw ParseError("at-selector needs '#ordinal': " + std::string(text));
    const auto count = parse_int(body.substr(0, hash), "");
    const auto ordinal = parse_int(body.substr(hash + 1), "");
    if (ordinal < 1)
      throw ParseError("selector ordinal must be >= 1: " + std::string(text));
    return at_count(count, static_cast<int>(ordinal));
  }
  throw ParseError("selector must start with 'id:' or 'at:': " + std::string(text));
}

std::string PaperSelector::to_text() const {
  if (is_id()) return "id:" + id;
  return "at:" + std::to_string(citations) + "#" + std::to_string(ordinal);
}

PerturbationSpec::PerturbationSpec(std::vector<CitationDelta> deltas)
    : deltas_(std::move(deltas)) {}

PerturbationSpec PerturbationSpec::parse(std::istream& in,
                                         const std::string& source) {
  std::vector<CitationDelta> deltas;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t");
    std::istringstream fields(line.substr(first, last - first + 1));
    std::string selector_text, delta_text, extra;
    fields >> selector_text >> delta_text;
    if (delta_text.empty() || (fields >> extra))
      throw ParseError(where(source, number) +
                           "expected '<selector> <signed integer>'",
                       number);
    try {
      CitationDelta delta;
      delta.selector = PaperSelector::parse(selector_text);
      delta.delta = parse_int(delta_text, "");
      delta.line = number;
      deltas.push_back(std::move(delta));
    } catch (const ParseError& e) {
      throw ParseError(where(source, number) + e.what(), number);
    }
  }
  return PerturbationSpec(std::move(deltas));
}

PerturbationSpec PerturbationSpec::parse_text(std::string_view text,
                                              const std::string& source) {
  std::istringstream in{std::string(text)};
  return parse(in, source);
}

std::string PerturbationSpec::to_text() const {
  std::string out;
  for (const auto& delta : deltas_) {
    out += delta.selector.to_text();
    out += delta.delta >= 0 ? " +" : " ";
    out += std::to_string(delta.delta);
    out += '\n';
  }
  return out;
}

std::int64_t PerturbationSpec::net_delta() const {
  std::int64_t net = 0;
  for (const auto& delta : deltas_) net += delta.delta;
  return net;
}

ReferenceSet apply(const ReferenceSet& set, const PerturbationSpec& spec) {
  // resolve every selector against the original set before touching anything
  std::vector<std::size_t> targets;
  targets.reserve(spec.deltas().size());
  for (const auto& delta : spec.deltas()) {
    const auto& selector = delta.selector;
    const std::string at = where("", delta.line);
    std::size_t index = set.size();
    if (selector.is_id()) {
      for (std::size_t i = 0; i < set.size(); ++i)
        if (set.papers()[i].id == selector.id) {
          index = i;
          break;
        }
      if (index == set.size())
        throw SelectorUnresolvedError(at + "no paper with id '" + selector.id +
                                      "'");
    } else {
      int seen = 0;
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (set.papers()[i].citations != selector.citations) continue;
        if (++seen == selector.ordinal) {
          index = i;
          break;
        }
      }
      if (index == set.size())
        throw SelectorUnresolvedError(
            at + "no paper #" + std::to_string(selector.ordinal) + " at count " +
            std::to_string(selector.citations) + " (found " +
            std::to_string(seen) + ")");
    }
    if (std::find(targets.begin(), targets.end(), index) != targets.end())
      throw SelectorConflictError(at + "selector " + selector.to_text() +
                                  " addresses an already-perturbed paper");
    targets.push_back(index);
  }

  std::vector<PaperRecord> papers = set.papers();
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const auto& delta = spec.deltas()[k];
    PaperRecord& paper = papers[targets[k]];
    if (paper.citations + delta.delta < 0)
      throw NegativeResultError(where("", delta.line) + "delta " +
                                std::to_string(delta.delta) + " drives paper '" +
                                paper.id + "' below zero citations");
    paper.citations += delta.delta;
  }
  return ReferenceSet(std::move(papers), set.label());
}

DiffReport diff(const ReferenceSet& before, const ReferenceSet& after,
                DegeneratePolicy policy) {
  if (before.size() != after.size())
    throw MismatchedIdsError("sets differ in size");
  for (const auto& paper : before.papers())
    if (!after.find(paper.id))
      throw MismatchedIdsError("paper '" + paper.id + "' missing from the other set");

  const UniqueCountTable table_before(before);
  const UniqueCountTable table_after(after);

  DiffReport report;
  report.i_max_before = table_before.i_max();
  report.i_max_after = table_after.i_max();
  report.net_citation_delta = after.total_citations() - before.total_citations();

  for (const auto& entry : table_after.entries())
    if (!table_before.rank_of(entry.citations))
      report.counts_appeared.insert(entry.citations);
  for (const auto& entry : table_before.entries())
    if (!table_after.rank_of(entry.citations))
      report.counts_vanished.insert(entry.citations);

  for (const auto& paper : before.papers()) {
    const PaperRecord& counterpart = *after.find(paper.id);
    PaperDelta delta;
    delta.citations_before = paper.citations;
    delta.citations_after = counterpart.citations;
    delta.p100_before = p100(paper.citations, table_before, policy);
    delta.p100_after = p100(counterpart.citations, table_after, policy);
    delta.delta_pp = delta.p100_after.value - delta.p100_before.value;
    report.per_paper.emplace(paper.id, std::move(delta));
  }

  for (const auto& author : before.author_labels()) {
    AuthorDelta delta;
    delta.mean_before = mean_p100(before, author, policy);
    delta.mean_after = mean_p100(after, author, policy);
    delta.delta_pp = delta.mean_after - delta.mean_before;
    if (delta.mean_before != Rational(0))
      delta.relative_percent = delta.delta_pp / delta.mean_before * 100;
    report.per_author.emplace(author, std::move(delta));
  }
  return report;
}

MechanismSummary classify_mechanism(const DiffReport& report) {
  MechanismSummary summary;
  for (const auto count : report.counts_appeared)
    summary.appeared.emplace(count, GapMechanism::gap_filled);

  for (const auto count : report.counts_vanished) {
    VanishedCount vanished;
    bool any_new_destination = false;
    for (const auto& [id, delta] : report.per_paper) {
      if (delta.citations_before != count) continue;
      vanished.destinations.push_back(delta.citations_after);
      if (report.counts_appeared.contains(delta.citations_after))
        any_new_destination = true;
    }
    std::sort(vanished.destinations.begin(), vanished.destinations.end());
    vanished.destinations.erase(
        std::unique(vanished.destinations.begin(), vanished.destinations.end()),
        vanished.destinations.end());
    vanished.kind = any_new_destination ? GapMechanism::merged_into_new
                                        : GapMechanism::emptied_into_existing;
    summary.vanished.emplace(count, std::move(vanished));
  }

  if (report.i_max_after > report.i_max_before)
    summary.shift = ScaleShift::compressed;
  else if (report.i_max_after < report.i_max_before)
    summary.shift = ScaleShift::dilated;
  return summary;
}

}  // namespace citerank
