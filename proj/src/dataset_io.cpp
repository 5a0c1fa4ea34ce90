#include "citerank/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "citerank/errors.hpp"

namespace citerank {

namespace {

constexpr std::string_view kHeader = "id,citations,authors,year,categories";

std::vector<std::string_view> split(std::string_view text, char delimiter) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(delimiter, start);
    fields.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

std::vector<std::string> split_labels(std::string_view text) {
  std::vector<std::string> labels;
  for (const auto part : split(text, ';'))
    if (!part.empty()) labels.emplace_back(part);
  return labels;
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& label : labels) {
    if (!out.empty()) out += ';';
    out += label;
  }
  return out;
}

void reject_delimiters(const std::string& text, const std::string& what) {
  if (text.find(',') != std::string::npos || text.find(';') != std::string::npos)
    throw Error(what + " must not contain ',' or ';': " + text);
}

}  // namespace

ReferenceSet read_dataset(std::istream& in, std::string label,
                          const std::string& source) {
  const std::string prefix = source.empty() ? "" : source + ":";
  auto fail = [&](int line, const std::string& message) -> ParseError {
    return ParseError(prefix + std::to_string(line) + ": " + message, line);
  };

  std::string line;
  int number = 0;
  if (!std::getline(in, line)) throw ParseError(prefix + "1: empty dataset", 1);
  ++number;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader)
    throw fail(number, "expected header '" + std::string(kHeader) + "'");

  std::vector<PaperRecord> papers;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 5)
      throw fail(number, "expected 5 fields, got " + std::to_string(fields.size()));

    PaperRecord paper;
    paper.id = std::string(fields[0]);
    if (paper.id.empty()) throw fail(number, "empty id");

    const auto cit = fields[1];
    const auto [ptr, ec] =
        std::from_chars(cit.data(), cit.data() + cit.size(), paper.citations);
    if (ec != std::errc() || ptr != cit.data() + cit.size())
      throw fail(number, "malformed citation count: " + std::string(cit));
    if (paper.citations < 0)
      throw fail(number, "negative citation count: " + std::string(cit));

    paper.authors = split_labels(fields[2]);

    if (!fields[3].empty()) {
      int year = 0;
      const auto text = fields[3];
      const auto [yptr, yec] =
          std::from_chars(text.data(), text.data() + text.size(), year);
      if (yec != std::errc() || yptr != text.data() + text.size())
        throw fail(number, "malformed year: " + std::string(text));
      paper.year = year;
    }

    paper.categories = split_labels(fields[4]);
    papers.push_back(std::move(paper));
  }

  try {
    return ReferenceSet(std::move(papers), std::move(label));
  } catch (const EmptySetError&) {
    throw ParseError(prefix + "dataset has no rows");
  }
}

ReferenceSet read_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open dataset: " + path.string());
  return read_dataset(in, path.stem().string(), path.string());
}

void write_dataset(const ReferenceSet& set, std::ostream& out) {
  out << kHeader << '\n';
  for (const auto& paper : set.papers()) {
    reject_delimiters(paper.id, "id");
    for (const auto& label : paper.authors) reject_delimiters(label, "author");
    for (const auto& label : paper.categories) reject_delimiters(label, "category");
    out << paper.id << ',' << paper.citations << ',' << join_labels(paper.authors)
        << ',' << (paper.year ? std::to_string(*paper.year) : "") << ','
        << join_labels(paper.categories) << '\n';
  }
}

void write_dataset(const ReferenceSet& set, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write dataset: " + path.string());
  write_dataset(set, out);
  out.flush();
  if (!out) throw Error("failed writing dataset: " + path.string());
}

}  // namespace citerank
