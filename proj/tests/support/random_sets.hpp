#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "citerank/model.hpp"

namespace citerank::testing {

// Small random reference sets for property checks. Fixed seeds keep every run
// reproducible.
inline ReferenceSet random_set(std::mt19937& rng, int max_papers = 12,
                               Citations max_count = 10, int min_distinct = 1) {
  std::uniform_int_distribution<int> size_dist(std::max(1, min_distinct),
                                               max_papers);
  std::uniform_int_distribution<Citations> count_dist(0, max_count);
  std::uniform_int_distribution<int> author_dist(0, 3);

  while (true) {
    const int n = size_dist(rng);
    std::vector<PaperRecord> papers;
    papers.reserve(n);
    std::vector<Citations> distinct;
    for (int i = 0; i < n; ++i) {
      PaperRecord paper;
      paper.id = "r" + std::to_string(i);
      paper.citations = count_dist(rng);
      if (const int a = author_dist(rng); a > 0)
        paper.authors = {std::string(1, static_cast<char>('A' + a - 1))};
      distinct.push_back(paper.citations);
      papers.push_back(std::move(paper));
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (static_cast<int>(distinct.size()) < min_distinct) continue;
    return ReferenceSet(std::move(papers), "random");
  }
}

// Independent oracle: sorts the distinct counts itself and assigns
// 100*i/i_max directly, sharing no code with UniqueCountTable or p100.
struct BruteForce {
  std::vector<Citations> distinct;

  explicit BruteForce(const ReferenceSet& set) {
    for (const auto& paper : set.papers()) distinct.push_back(paper.citations);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  }

  int index_of(Citations count) const {
    for (std::size_t i = 0; i < distinct.size(); ++i)
      if (distinct[i] == count) return static_cast<int>(i);
    return -1;
  }

  // exact value as a rational built from scratch; requires >= 2 distinct counts
  Rational value(Citations count) const {
    const int index = index_of(count);
    if (index < 0 || distinct.size() < 2)
      throw std::logic_error("oracle misuse: unranked count or degenerate set");
    return {100 * static_cast<std::int64_t>(index),
            static_cast<std::int64_t>(distinct.size()) - 1};
  }
};

}  // namespace citerank::testing
