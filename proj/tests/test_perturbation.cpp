#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "citerank/errors.hpp"
#include "citerank/generators.hpp"
#include "citerank/perturbation.hpp"
#include "support/random_sets.hpp"

using namespace citerank;

namespace {

ReferenceSet set_of(const std::vector<Citations>& counts) {
  std::vector<PaperRecord> papers;
  for (std::size_t i = 0; i < counts.size(); ++i)
    papers.push_back({"t" + std::to_string(i), counts[i], {}, {}, {}});
  return ReferenceSet(std::move(papers), "t");
}

std::vector<Citations> count_multiset(const ReferenceSet& set) {
  std::vector<Citations> counts;
  for (const auto& paper : set.papers()) counts.push_back(paper.citations);
  std::sort(counts.begin(), counts.end());
  return counts;
}

}  // namespace

TEST_CASE("spec text round-trips") {
  const std::string text = "at:40#1 -1\nid:p7 +2\nat:5#3 +1\n";
  const auto spec = PerturbationSpec::parse_text(text);
  REQUIRE(spec.deltas().size() == 3);
  CHECK(spec.deltas()[0].selector.citations == 40);
  CHECK(spec.deltas()[0].selector.ordinal == 1);
  CHECK(spec.deltas()[0].delta == -1);
  CHECK(spec.deltas()[1].selector.id == "p7");
  CHECK(spec.deltas()[1].delta == 2);
  CHECK(spec.net_delta() == 2);
  CHECK(spec.to_text() == text);
}

TEST_CASE("spec parsing skips blanks and comments, reports bad lines") {
  const auto spec = PerturbationSpec::parse_text("# header\n\nat:1#1 +1\n");
  CHECK(spec.deltas().size() == 1);
  CHECK(spec.deltas()[0].line == 3);

  CHECK_THROWS_AS(PerturbationSpec::parse_text("at:1#1\n"), ParseError);
  CHECK_THROWS_AS(PerturbationSpec::parse_text("at:1 +1\n"), ParseError);
  CHECK_THROWS_AS(PerturbationSpec::parse_text("near:1#1 +1\n"), ParseError);
  CHECK_THROWS_AS(PerturbationSpec::parse_text("at:1#0 +1\n"), ParseError);
  CHECK_THROWS_AS(PerturbationSpec::parse_text("at:1#1 one\n"), ParseError);
  CHECK_THROWS_AS(PerturbationSpec::parse_text("at:1#1 +1 junk\n"), ParseError);
  try {
    PerturbationSpec::parse_text("at:1#1 +1\nbogus\n", "f.spec");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("f.spec:2") != std::string::npos);
  }
}

TEST_CASE("apply reproduces the first modification") {
  const auto models = table1_models();
  const auto spec = PerturbationSpec::parse_text("at:1#1 +1\n");
  const auto applied = apply(models.original, spec);
  CHECK(count_multiset(applied) ==
        std::vector<Citations>{2, 2, 3, 4, 4, 4, 7, 10});
  CHECK(applied.papers() == models.first_mod.papers());
  // untouched input
  CHECK(count_multiset(models.original) ==
        std::vector<Citations>{1, 2, 3, 4, 4, 4, 7, 10});
}

TEST_CASE("empty spec is the identity") {
  const auto set = set_of({3, 1, 4});
  const auto applied = apply(set, PerturbationSpec());
  CHECK(applied.papers() == set.papers());
}

TEST_CASE("selectors resolve in stable input order") {
  const auto set = set_of({4, 4, 4});
  const auto applied = apply(set, PerturbationSpec::parse_text("at:4#2 +3\n"));
  CHECK(applied.papers()[0].citations == 4);
  CHECK(applied.papers()[1].citations == 7);
  CHECK(applied.papers()[2].citations == 4);
}

TEST_CASE("apply failure modes") {
  const auto set = set_of({1, 2, 4, 4});

  CHECK_THROWS_AS(apply(set, PerturbationSpec::parse_text("at:9#1 +1\n")),
                  SelectorUnresolvedError);
  CHECK_THROWS_AS(apply(set, PerturbationSpec::parse_text("at:4#3 +1\n")),
                  SelectorUnresolvedError);
  CHECK_THROWS_AS(apply(set, PerturbationSpec::parse_text("id:nope +1\n")),
                  SelectorUnresolvedError);
  CHECK_THROWS_AS(apply(set, PerturbationSpec::parse_text("at:1#1 -2\n")),
                  NegativeResultError);
  // two deltas addressing the same paper
  CHECK_THROWS_AS(apply(set, PerturbationSpec::parse_text("id:t0 +1\nat:1#1 +1\n")),
                  SelectorConflictError);
  // all-or-nothing: a valid first delta does not survive an invalid second
  CHECK_THROWS_AS(apply(set, PerturbationSpec::parse_text("at:2#1 +1\nat:9#1 +1\n")),
                  SelectorUnresolvedError);
}

TEST_CASE("selectors resolve against the original set, not intermediate states") {
  const auto set = set_of({1, 2});
  // moves t0 to 2 and t1 to 3; 'at:2#1' must keep addressing the original paper
  const auto applied =
      apply(set, PerturbationSpec::parse_text("at:1#1 +1\nat:2#1 +1\n"));
  CHECK(applied.papers()[0].citations == 2);
  CHECK(applied.papers()[1].citations == 3);
}

TEST_CASE("diff on identical sets is all zero") {
  const auto models = table1_models();
  const auto report = diff(models.original, models.original);
  CHECK(report.counts_appeared.empty());
  CHECK(report.counts_vanished.empty());
  CHECK(report.i_max_before == report.i_max_after);
  CHECK(report.net_citation_delta == 0);
  for (const auto& [id, delta] : report.per_paper)
    CHECK(delta.delta_pp == Rational(0));
  for (const auto& [author, delta] : report.per_author)
    CHECK(delta.delta_pp == Rational(0));

  const auto mechanisms = classify_mechanism(report);
  CHECK(mechanisms.appeared.empty());
  CHECK(mechanisms.vanished.empty());
  CHECK(mechanisms.shift == ScaleShift::unchanged);
}

TEST_CASE("diff reports the second modification of the model set") {
  const auto models = table1_models();
  const auto report = diff(models.original, models.second_mod);
  CHECK(report.i_max_before == 5);
  CHECK(report.i_max_after == 6);
  CHECK(report.counts_appeared == std::set<Citations>{5});
  CHECK(report.counts_vanished.empty());
  CHECK(report.net_citation_delta == 1);

  // author X's endpoints survive untouched, Z rises, Y's remaining papers drop
  CHECK(report.per_author.at("X").delta_pp == Rational(0));
  CHECK(report.per_author.at("Z").delta_pp > Rational(0));
  CHECK(report.per_paper.at("p2").delta_pp < Rational(0));

  const auto mechanisms = classify_mechanism(report);
  CHECK(mechanisms.appeared.at(5) == GapMechanism::gap_filled);
  CHECK(mechanisms.shift == ScaleShift::compressed);
}

TEST_CASE("diff requires matching paper ids") {
  const auto left = set_of({1, 2});
  std::vector<PaperRecord> renamed = left.papers();
  renamed[1].id = "other";
  const ReferenceSet right(renamed, "t");
  CHECK_THROWS_AS(diff(left, right), MismatchedIdsError);
}

TEST_CASE("vanished counts are tagged by destination") {
  SUBCASE("emptied into an existing count") {
    const auto before = set_of({1, 3, 4});
    const auto after = apply(before, PerturbationSpec::parse_text("at:3#1 +1\n"));
    const auto mechanisms = classify_mechanism(diff(before, after));
    REQUIRE(mechanisms.vanished.contains(3));
    CHECK(mechanisms.vanished.at(3).kind == GapMechanism::emptied_into_existing);
    CHECK(mechanisms.vanished.at(3).destinations == std::vector<Citations>{4});
    CHECK(mechanisms.shift == ScaleShift::dilated);
  }
  SUBCASE("two counts merged into a new one") {
    const auto before = set_of({0, 4, 6});
    const auto after =
        apply(before, PerturbationSpec::parse_text("at:4#1 +1\nat:6#1 -1\n"));
    const auto mechanisms = classify_mechanism(diff(before, after));
    CHECK(mechanisms.appeared.at(5) == GapMechanism::gap_filled);
    CHECK(mechanisms.vanished.at(4).kind == GapMechanism::merged_into_new);
    CHECK(mechanisms.vanished.at(6).kind == GapMechanism::merged_into_new);
    CHECK(mechanisms.shift == ScaleShift::dilated);
  }
}

TEST_CASE("net delta flows from spec to diff") {
  std::mt19937 rng(31);
  for (int round = 0; round < 200; ++round) {
    const auto set = citerank::testing::random_set(rng, 10, 8, 2);
    std::uniform_int_distribution<std::size_t> pick(0, set.size() - 1);
    std::uniform_int_distribution<std::int64_t> step(-2, 3);

    const auto index = pick(rng);
    auto delta = step(rng);
    if (set.papers()[index].citations + delta < 0) delta = 1;
    PerturbationSpec spec(
        {{PaperSelector::by_id(set.papers()[index].id), delta}});

    const auto after = apply(set, spec);
    try {
      const auto report = diff(set, after);
      CHECK(report.net_citation_delta == spec.net_delta());
      CHECK(report.i_max_after - report.i_max_before ==
            static_cast<int>(report.counts_appeared.size()) -
                static_cast<int>(report.counts_vanished.size()));
    } catch (const DegenerateTableError&) {
      // a two-count set can collapse; not this property's business
    }
  }
}

TEST_CASE("net-zero specs commute under permutation") {
  std::mt19937 rng(37);
  for (int round = 0; round < 100; ++round) {
    const auto set = citerank::testing::random_set(rng, 10, 8, 2);
    std::vector<std::size_t> indices(set.size());
    std::iota(indices.begin(), indices.end(), 0);
    std::shuffle(indices.begin(), indices.end(), rng);

    // pair up papers: one +1, one -1 (skipping zero-citation losers)
    std::vector<CitationDelta> deltas;
    for (std::size_t k = 0; k + 1 < indices.size() && deltas.size() < 4; k += 2) {
      const auto& loser = set.papers()[indices[k]];
      const auto& gainer = set.papers()[indices[k + 1]];
      if (loser.citations == 0) continue;
      deltas.push_back({PaperSelector::by_id(gainer.id), +1});
      deltas.push_back({PaperSelector::by_id(loser.id), -1});
    }
    if (deltas.empty()) continue;

    PerturbationSpec spec(deltas);
    CHECK(spec.net_delta() == 0);
    const auto once = apply(set, spec);

    std::shuffle(deltas.begin(), deltas.end(), rng);
    const auto again = apply(set, PerturbationSpec(deltas));
    CHECK(count_multiset(once) == count_multiset(again));
    CHECK(once.total_citations() == set.total_citations());
  }
}

TEST_CASE("surviving endpoints keep their pinned values") {
  std::mt19937 rng(41);
  int tested = 0;
  while (tested < 200) {
    const auto set = citerank::testing::random_set(rng, 10, 8, 3);
    const UniqueCountTable before_table(set);
    std::uniform_int_distribution<std::size_t> pick(0, set.size() - 1);
    const auto& victim = set.papers()[pick(rng)];
    if (victim.citations == 0) continue;
    const auto after =
        apply(set, PerturbationSpec({{PaperSelector::by_id(victim.id), -1}}));
    const UniqueCountTable after_table(after);
    if (after_table.i_max() == 0) continue;

    DiffReport report;
    try {
      report = diff(set, after);
    } catch (const DegenerateTableError&) {
      continue;
    }
    ++tested;
    if (after_table.min_count() == before_table.min_count())
      for (const auto& [id, delta] : report.per_paper)
        if (delta.citations_before == before_table.min_count() &&
            delta.citations_after == delta.citations_before)
          CHECK(delta.p100_after.value == Rational(0));
    if (after_table.max_count() == before_table.max_count())
      for (const auto& [id, delta] : report.per_paper)
        if (delta.citations_before == before_table.max_count() &&
            delta.citations_after == delta.citations_before)
          CHECK(delta.p100_after.value == Rational(100));
  }
}
