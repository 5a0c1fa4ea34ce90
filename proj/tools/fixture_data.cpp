#include "fixture_data.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <numeric>
#include <string>
#include <vector>

#include "citerank/dataset_io.hpp"
#include "citerank/errors.hpp"
#include "citerank/generators.hpp"

namespace citerank::fixtures {

namespace {

std::string serial_id(const std::string& prefix, int serial) {
  std::string digits = std::to_string(serial);
  return prefix + "-" + std::string(4 - std::min<std::size_t>(4, digits.size()), '0') +
         digits;
}

struct CountRow {
  Citations citations;
  int lb, ll, rm, total;
};

// ---- Information Science & Library Science, 2009 reference set ----
//
// 3007 papers over 58 unique counts. The published table condenses counts
// 28..37 into one 36-paper line; the per-count split below is synthetic
// (as even as possible), which only the paper-count column can see - ranks
// and P100 depend on presence alone.
struct Table3Row {
  Citations citations;
  int papers;
  int leydesdorff;  // papers at this count carrying the author label
};

constexpr Table3Row kTable3[] = {
    {0, 834, 0},  {1, 506, 0},  {2, 353, 0},  {3, 222, 0},  {4, 179, 0},
    {5, 153, 0},  {6, 83, 0},   {7, 92, 2},   {8, 65, 0},   {9, 57, 0},
    {10, 62, 0},  {11, 60, 0},  {12, 37, 0},  {13, 44, 1},  {14, 32, 1},
    {15, 21, 1},  {16, 17, 1},  {17, 28, 1},  {18, 20, 1},  {19, 10, 1},
    {20, 8, 1},   {21, 15, 1},  {22, 13, 0},  {23, 7, 0},   {24, 12, 0},
    {25, 6, 0},   {26, 4, 0},   {27, 4, 0},   {28, 4, 0},   {29, 4, 0},
    {30, 4, 0},   {31, 4, 0},   {32, 4, 0},   {33, 4, 0},   {34, 3, 0},
    {35, 3, 0},   {36, 3, 0},   {37, 3, 0},   {38, 3, 0},   {40, 3, 1},
    {41, 1, 0},   {42, 1, 1},   {43, 1, 0},   {44, 3, 0},   {46, 1, 0},
    {48, 1, 0},   {50, 1, 0},   {51, 2, 1},   {52, 1, 0},   {55, 1, 0},
    {56, 1, 0},   {61, 1, 0},   {65, 1, 0},   {67, 1, 0},   {68, 1, 0},
    {111, 1, 0},  {119, 1, 0},  {123, 1, 1},
};

// ---- combined reference set of the three authors LB, LL, RM ----
//
// 365 papers with 5833 citations over 65 unique counts; LL holds 243 papers
// with 4339 citations.  Counts 4..23 are condensed in the published table
// (156 papers, 105 of them LL's); the splits below are synthetic, chosen to
// land those totals exactly.  Per-count author columns elsewhere are as
// published; overlaps (papers by two of the authors) reconcile author sums
// with the paper totals.
constexpr CountRow kTable4Low[] = {
    {0, 21, 46, 11, 72}, {1, 17, 15, 4, 32}, {2, 9, 16, 6, 24}, {3, 4, 8, 1, 12},
};
constexpr int kTable4MidTotal[] = {17, 14, 12, 11, 10, 9, 8, 7, 7, 7,
                                   7,  6,  6,  6,  5,  5, 5, 5, 5, 4};
constexpr int kTable4MidLl[] = {14, 9, 8, 7, 7, 6, 6, 5, 5, 5,
                                4,  3, 4, 4, 4, 4, 3, 3, 3, 1};
constexpr CountRow kTable4High[] = {
    {24, 3, 4, 0, 6},   {25, 2, 2, 0, 3},   {27, 0, 2, 0, 2},
    {28, 1, 1, 0, 2},   {29, 1, 1, 0, 1},   {30, 1, 1, 1, 2},
    {31, 0, 1, 0, 1},   {32, 0, 3, 0, 3},   {33, 2, 3, 1, 5},
    {34, 1, 2, 0, 3},   {35, 0, 1, 0, 1},   {36, 0, 1, 0, 1},
    {37, 1, 1, 0, 2},   {38, 1, 1, 0, 2},   {39, 0, 1, 0, 1},
    {40, 1, 2, 1, 2},   {41, 0, 1, 0, 1},   {42, 0, 3, 0, 3},
    {43, 0, 2, 0, 2},   {44, 1, 2, 0, 3},   {47, 0, 1, 0, 1},
    {48, 0, 1, 0, 1},   {49, 0, 1, 0, 1},   {54, 0, 1, 0, 1},
    {58, 0, 2, 0, 2},   {60, 0, 1, 0, 1},   {62, 0, 1, 0, 1},
    {68, 0, 2, 0, 2},   {70, 0, 1, 0, 1},   {73, 0, 1, 0, 1},
    {74, 1, 0, 0, 1},   {82, 0, 1, 0, 1},   {99, 0, 1, 0, 1},
    {106, 1, 0, 1, 1},  {118, 1, 0, 0, 1},  {123, 0, 1, 0, 1},
    {128, 1, 0, 0, 1},  {132, 1, 0, 0, 1},  {134, 0, 1, 0, 1},
    {149, 0, 1, 0, 1},  {638, 0, 1, 0, 1},
};

// ---- Europhysics Letters / EPL citation records, four publication years ----
//
// Rows outside the condensed mid-ranges are as published; the mid-range
// splits are synthetic with the published block totals, so every cumulated
// percentage at a published row is exact.
struct EplYear {
  int year;
  std::vector<std::pair<Citations, int>> explicit_rows;  // count -> papers
  Citations block1_from, block1_to;
  std::vector<int> block1;
  Citations block2_from, block2_to;
  std::vector<int> block2;
};

EplYear epl_year(int year) {
  switch (year) {
    case 1986:
      return {1986,
              {{0, 9}, {1, 5}, {2, 14}, {3, 6}, {4, 5}, {63, 1}, {65, 1},
               {212, 1}, {235, 1}, {275, 1}, {314, 1}, {318, 1}},
              5, 57,
              {9, 8, 7, 7, 6, 6, 5, 5, 5, 4, 4, 4, 4, 4, 4, 3, 3, 3, 3, 3, 3,
               3, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2,
               2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2},
              67, 82,
              {2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}};
    case 1987:
      return {1987,
              {{0, 15}, {1, 22}, {2, 20}, {3, 17}, {4, 22}, {63, 1}, {65, 1},
               {349, 1}, {355, 1}, {490, 1}, {520, 1}, {575, 1}},
              5, 59,
              {15, 14, 12, 11, 10, 9, 9, 8, 8, 7, 7, 7, 7, 6, 6, 6, 6, 5, 5,
               5,  5,  5,  5,  5,  4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 3,
               3,  3,  3,  3,  3,  3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3},
              67, 98,
              {2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
               1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}};
    case 2007:
      return {2007,
              {{0, 38}, {1, 69}, {2, 44}, {3, 56}, {4, 51}, {20, 4}, {21, 5},
               {50, 1}, {52, 2}, {66, 1}, {80, 1}, {115, 1}},
              5, 19,
              {31, 27, 25, 22, 21, 19, 18, 17, 16, 15, 15, 14, 13, 13, 12},
              22, 38,
              {4, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 2, 2}};
    case 2008:
      return {2008,
              {{0, 83}, {1, 99}, {2, 89}, {3, 91}, {4, 67}, {15, 9}, {16, 10},
               {340, 1}, {364, 1}, {365, 1}, {399, 1}, {439, 1}},
              5, 14,
              {46, 41, 37, 33, 31, 28, 27, 25, 24, 23},
              17, 51,
              {3, 3, 3, 3, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2,
               2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}};
    default:
      throw Error("no EPL fixture for year " + std::to_string(year));
  }
}

// Spread the author marks of one citation count over its papers: LL papers
// lead, LB papers trail, RM covers any paper in between first and then wraps
// around the front as a co-author.
void assign_authors(std::vector<PaperRecord>& papers, std::size_t first,
                    const CountRow& row) {
  const auto total = static_cast<std::size_t>(row.total);
  for (std::size_t k = 0; k < static_cast<std::size_t>(row.ll); ++k)
    papers[first + k].authors.push_back("LL");
  for (std::size_t k = total - static_cast<std::size_t>(row.lb); k < total; ++k)
    papers[first + k].authors.push_back("LB");
  int remaining = row.rm;
  for (std::size_t k = static_cast<std::size_t>(row.ll);
       remaining > 0 && k + static_cast<std::size_t>(row.lb) < total; ++k) {
    papers[first + k].authors.push_back("RM");
    --remaining;
  }
  for (std::size_t k = 0; remaining > 0; ++k, --remaining)
    papers[first + k].authors.push_back("RM");
  for (std::size_t k = 0; k < total; ++k)
    if (papers[first + k].authors.empty())
      throw Error("uncovered paper in table4 fixture at count " +
                  std::to_string(row.citations));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

}  // namespace

ReferenceSet table3_original() {
  std::vector<PaperRecord> papers;
  papers.reserve(3007);
  int serial = 0;
  for (const auto& row : kTable3) {
    for (int k = 0; k < row.papers; ++k) {
      PaperRecord paper;
      paper.id = serial_id("t3", ++serial);
      paper.citations = row.citations;
      paper.year = 2009;
      paper.categories = {"Information Science & Library Science"};
      if (k >= row.papers - row.leydesdorff)  // the author's papers come last
        paper.authors = {"Leydesdorff"};
      papers.push_back(std::move(paper));
    }
  }
  ReferenceSet set(std::move(papers), "table3_orig");
  if (set.size() != 3007) throw Error("table3 fixture: wrong paper count");
  return set;
}

ReferenceSet table4_original() {
  std::vector<CountRow> rows(std::begin(kTable4Low), std::end(kTable4Low));
  for (int i = 0; i < 20; ++i) {
    const int total = kTable4MidTotal[i];
    const int ll = kTable4MidLl[i];
    const int rm = i < 14 ? 1 : 0;  // 14 co-author marks settle the RM total
    rows.push_back({i + 4, total - ll, ll, rm, total});
  }
  rows.insert(rows.end(), std::begin(kTable4High), std::end(kTable4High));
  std::sort(rows.begin(), rows.end(),
            [](const CountRow& a, const CountRow& b) { return a.citations < b.citations; });

  std::vector<PaperRecord> papers;
  papers.reserve(365);
  int serial = 0;
  for (const auto& row : rows) {
    const std::size_t first = papers.size();
    for (int k = 0; k < row.total; ++k) {
      PaperRecord paper;
      paper.id = serial_id("t4", ++serial);
      paper.citations = row.citations;
      papers.push_back(std::move(paper));
    }
    assign_authors(papers, first, row);
  }

  ReferenceSet set(std::move(papers), "table4_orig");
  if (set.size() != 365 || set.total_citations() != 5833)
    throw Error("table4 fixture: totals off");
  Citations ll_citations = 0;
  int ll_papers = 0;
  for (const auto& paper : set.papers())
    if (paper.has_author("LL")) {
      ll_citations += paper.citations;
      ++ll_papers;
    }
  if (ll_papers != 243 || ll_citations != 4339)
    throw Error("table4 fixture: LL totals off");
  return set;
}

ReferenceSet epl(int year) {
  const EplYear data = epl_year(year);
  std::vector<std::pair<Citations, int>> rows = data.explicit_rows;
  for (std::size_t i = 0; i < data.block1.size(); ++i)
    rows.emplace_back(data.block1_from + static_cast<Citations>(i), data.block1[i]);
  for (std::size_t i = 0; i < data.block2.size(); ++i)
    rows.emplace_back(data.block2_from + static_cast<Citations>(i), data.block2[i]);
  std::sort(rows.begin(), rows.end());

  const std::string prefix = "epl" + std::to_string(year);
  std::vector<PaperRecord> papers;
  int serial = 0;
  for (const auto& [citations, count] : rows)
    for (int k = 0; k < count; ++k) {
      PaperRecord paper;
      paper.id = serial_id(prefix, ++serial);
      paper.citations = citations;
      paper.year = year;
      papers.push_back(std::move(paper));
    }
  return ReferenceSet(std::move(papers), prefix);
}

PerturbationSpec table3_mod(int which) {
  switch (which) {
    case 1:  // one of the papers with 40 citations loses a citation
      return PerturbationSpec::parse_text("at:40#1 -1\n");
    case 2:  // ... and one of the papers with 44 citations gains one
      return PerturbationSpec::parse_text("at:40#1 -1\nat:44#1 +1\n");
    case 3:  // the 55-citation paper gains one, merging into 56
      return PerturbationSpec::parse_text("at:55#1 +1\n");
    case 4:  // ... and the 52-citation paper loses one, merging into 51
      return PerturbationSpec::parse_text("at:52#1 -1\nat:55#1 +1\n");
    default:
      throw Error("table3 has modifications 1..4");
  }
}

PerturbationSpec ll1() {
  // net-zero rearrangement of 12 citations in LL's records: 65 -> 55 counts
  return PerturbationSpec::parse_text(
      "at:134#1 -2\n"
      "at:73#1 +1\n"
      "at:60#1 +1\n"
      "at:62#1 -1\n"
      "at:49#1 -1\n"
      "at:47#1 +1\n"
      "at:39#1 +1\n"
      "at:41#1 -1\n"
      "at:36#1 +1\n"
      "at:31#1 +1\n"
      "at:35#1 -1\n");
}

PerturbationSpec ll2() {
  // net-zero rearrangement of 6 citations in LL's records: 65 -> 70 counts
  return PerturbationSpec::parse_text(
      "at:68#1 -1\n"
      "at:58#1 -1\n"
      "at:27#1 -1\n"
      "at:44#1 +1\n"
      "at:44#2 +2\n");
}

void write_all(const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  auto csv = [&](const ReferenceSet& set) {
    write_dataset(set, directory / (set.label() + ".csv"));
  };

  const auto models = table1_models();
  csv(models.original);
  csv(models.first_mod);
  csv(models.second_mod);

  for (const auto id : {FieldCaseId::A, FieldCaseId::B, FieldCaseId::C,
                        FieldCaseId::D})
    csv(field_case(id).to_reference_set());

  csv(table3_original());
  for (int i = 1; i <= 4; ++i)
    write_text(directory / ("table3_mod" + std::to_string(i) + ".spec"),
               table3_mod(i).to_text());

  csv(table4_original());
  write_text(directory / "ll1.spec", ll1().to_text());
  write_text(directory / "ll2.spec", ll2().to_text());

  for (const int year : {1986, 1987, 2007, 2008}) csv(epl(year));
}

}  // namespace citerank::fixtures
