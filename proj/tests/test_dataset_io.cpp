#include <doctest.h>

#include <random>
#include <sstream>

#include "citerank/dataset_io.hpp"
#include "citerank/errors.hpp"
#include "support/random_sets.hpp"

using namespace citerank;

TEST_CASE("read a small dataset") {
  std::istringstream in(
      "id,citations,authors,year,categories\n"
      "p1,4,X;Y,2009,Library Science\n"
      "p2,0,,,\n"
      "p3,10,Z,,Physics;Optics\n");
  const auto set = read_dataset(in, "small");
  REQUIRE(set.size() == 3);
  CHECK(set.label() == "small");
  CHECK(set.total_citations() == 14);

  const auto* p1 = set.find("p1");
  REQUIRE(p1 != nullptr);
  CHECK(p1->authors == std::vector<std::string>{"X", "Y"});
  CHECK(p1->year == 2009);
  CHECK(p1->categories == std::vector<std::string>{"Library Science"});

  const auto* p2 = set.find("p2");
  REQUIRE(p2 != nullptr);
  CHECK(p2->authors.empty());
  CHECK_FALSE(p2->year.has_value());

  const auto* p3 = set.find("p3");
  REQUIRE(p3 != nullptr);
  CHECK(p3->categories == std::vector<std::string>{"Optics", "Physics"});
}

TEST_CASE("parse failures carry line numbers") {
  auto expect_line = [](const std::string& text, int line) {
    std::istringstream in(text);
    try {
      read_dataset(in, "bad", "bad.csv");
      FAIL("expected ParseError for: ", text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(std::string(e.what()).find("bad.csv:" + std::to_string(line)) !=
            std::string::npos);
    }
  };

  expect_line("wrong,header\n", 1);
  expect_line("id,citations,authors,year,categories\np1,3,X\n", 2);
  expect_line("id,citations,authors,year,categories\np1,3,X,,,extra\n", 2);
  expect_line("id,citations,authors,year,categories\np1,-2,,,\n", 2);
  expect_line("id,citations,authors,year,categories\np1,many,,,\n", 2);
  expect_line("id,citations,authors,year,categories\np1,1,,,\np2,2,,year,\n", 3);
  expect_line("id,citations,authors,year,categories\n,1,,,\n", 2);
}

TEST_CASE("duplicate ids surface as validation errors") {
  std::istringstream in(
      "id,citations,authors,year,categories\n"
      "p1,1,,,\n"
      "p1,2,,,\n");
  CHECK_THROWS_AS(read_dataset(in, "dup"), DuplicateIdError);
}

TEST_CASE("empty dataset is rejected") {
  std::istringstream header_only("id,citations,authors,year,categories\n");
  CHECK_THROWS_AS(read_dataset(header_only, "x"), ParseError);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_dataset(empty, "x"), ParseError);
}

TEST_CASE("write rejects embedded delimiters") {
  std::vector<PaperRecord> papers = {{"a,b", 1, {}, {}, {}}};
  const ReferenceSet set(papers, "x");
  std::ostringstream out;
  CHECK_THROWS_AS(write_dataset(set, out), Error);
}

TEST_CASE("random sets round-trip through the file format") {
  std::mt19937 rng(53);
  for (int round = 0; round < 200; ++round) {
    const auto set = citerank::testing::random_set(rng);
    std::ostringstream out;
    write_dataset(set, out);
    std::istringstream in(out.str());
    const auto back = read_dataset(in, set.label());
    CHECK(back.papers() == set.papers());
    CHECK(back.total_citations() == set.total_citations());
  }
}
