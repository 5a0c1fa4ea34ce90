#include <doctest.h>

#include "citerank/errors.hpp"
#include "citerank/generators.hpp"
#include "citerank/indicators.hpp"

using namespace citerank;

namespace {

std::vector<std::pair<Citations, int>> count_column(const ReferenceSet& set) {
  std::vector<std::pair<Citations, int>> column;
  for (const auto& entry : UniqueCountTable(set).entries())
    column.emplace_back(entry.citations, entry.papers);
  return column;
}

}  // namespace

TEST_CASE("table1 model sets") {
  const auto models = table1_models();

  CHECK(count_column(models.original) ==
        std::vector<std::pair<Citations, int>>{
            {1, 1}, {2, 1}, {3, 1}, {4, 3}, {7, 1}, {10, 1}});
  CHECK(models.original.total_citations() == 35);

  CHECK(count_column(models.first_mod) ==
        std::vector<std::pair<Citations, int>>{
            {2, 2}, {3, 1}, {4, 3}, {7, 1}, {10, 1}});

  const UniqueCountTable second(models.second_mod);
  CHECK(second.entries().size() == 7);
  CHECK(format_fixed(p100(2, second).value, 0) == "17");

  // author composition: X owns both endpoints, Y the middle block, Z the 7
  CHECK(models.original.author_labels() ==
        std::vector<std::string>{"X", "Y", "Z"});
  int x = 0, y = 0, z = 0;
  for (const auto& paper : models.original.papers()) {
    x += paper.has_author("X");
    y += paper.has_author("Y");
    z += paper.has_author("Z");
  }
  CHECK(x == 2);
  CHECK(y == 5);
  CHECK(z == 1);
}

TEST_CASE("field cases reproduce the four distributions") {
  CHECK(field_case(FieldCaseId::A).paper_counts ==
        std::array<int, 11>{45, 20, 10, 7, 5, 4, 3, 2, 2, 1, 1});
  CHECK(field_case(FieldCaseId::B).paper_counts ==
        std::array<int, 11>{60, 20, 5, 4, 3, 2, 2, 1, 1, 1, 1});
  CHECK(field_case(FieldCaseId::C).paper_counts ==
        std::array<int, 11>{25, 20, 15, 11, 8, 6, 5, 3, 3, 2, 2});
  CHECK(field_case(FieldCaseId::D).paper_counts ==
        std::array<int, 11>{26, 20, 20, 10, 7, 5, 4, 3, 2, 2, 1});
}

TEST_CASE("every field case totals 100 papers with 20 singly cited") {
  for (const auto id : {FieldCaseId::A, FieldCaseId::B, FieldCaseId::C,
                        FieldCaseId::D}) {
    const auto fc = field_case(id);
    int total = 0;
    for (const auto count : fc.paper_counts) total += count;
    CHECK(total == 100);
    CHECK(fc.paper_counts[1] == 20);

    const auto set = fc.to_reference_set();
    CHECK(set.size() == 100);
  }
}

TEST_CASE("all four cases share one rank and P100 column") {
  const auto reference = UniqueCountTable(field_case(FieldCaseId::A).to_reference_set());
  REQUIRE(reference.i_max() == 10);
  for (int rank = 0; rank <= 10; ++rank) {
    CHECK(reference.entries()[rank].citations == rank);
    CHECK(p100(rank, reference).value == Rational(10 * rank));
  }
  for (const auto id : {FieldCaseId::B, FieldCaseId::C, FieldCaseId::D}) {
    const UniqueCountTable table(field_case(id).to_reference_set());
    REQUIRE(table.i_max() == reference.i_max());
    for (int rank = 0; rank <= 10; ++rank) {
      CHECK(table.entries()[rank].citations ==
            reference.entries()[rank].citations);
      CHECK(p100(rank, table) == p100(rank, reference));
    }
  }
}

TEST_CASE("field case lookup by label") {
  CHECK(field_case("B").paper_counts == field_case(FieldCaseId::B).paper_counts);
  CHECK_THROWS_AS(field_case("E"), UnknownCaseError);
  CHECK_THROWS_AS(field_case("a"), UnknownCaseError);
}
