#include "citerank/model.hpp"

#include <algorithm>
#include <unordered_set>

#include "citerank/errors.hpp"

namespace citerank {

void PaperRecord::normalize() {
  auto dedupe = [](std::vector<std::string>& labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  };
  dedupe(authors);
  dedupe(categories);
}

bool PaperRecord::has_author(std::string_view label) const {
  return std::binary_search(authors.begin(), authors.end(), label);
}

ReferenceSet::ReferenceSet(std::vector<PaperRecord> papers, std::string label)
    : papers_(std::move(papers)), label_(std::move(label)) {
  if (papers_.empty()) throw EmptySetError();
  std::unordered_set<std::string_view> seen;
  seen.reserve(papers_.size());
  for (auto& paper : papers_) {
    if (paper.citations < 0) throw NegativeCitationsError(paper.id);
    if (!seen.insert(paper.id).second) throw DuplicateIdError(paper.id);
    paper.normalize();
    total_ += paper.citations;
  }
}

const PaperRecord* ReferenceSet::find(std::string_view id) const {
  for (const auto& paper : papers_)
    if (paper.id == id) return &paper;
  return nullptr;
}

std::vector<std::string> ReferenceSet::author_labels() const {
  std::vector<std::string> labels;
  for (const auto& paper : papers_)
    labels.insert(labels.end(), paper.authors.begin(), paper.authors.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

ReferenceSet validate_reference_set(std::vector<PaperRecord> papers,
                                    std::string label) {
  return ReferenceSet(std::move(papers), std::move(label));
}

UniqueCountTable::UniqueCountTable(const ReferenceSet& set)
    : total_papers_(set.size()) {
  std::vector<Citations> counts;
  counts.reserve(set.size());
  for (const auto& paper : set.papers()) counts.push_back(paper.citations);
  std::sort(counts.begin(), counts.end());

  for (std::size_t i = 0; i < counts.size();) {
    std::size_t j = i;
    while (j < counts.size() && counts[j] == counts[i]) ++j;
    entries_.push_back({counts[i], static_cast<int>(j - i),
                        static_cast<int>(entries_.size())});
    i = j;
  }
}

std::optional<int> UniqueCountTable::rank_of(Citations citations) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), citations,
      [](const CountEntry& e, Citations c) { return e.citations < c; });
  if (it == entries_.end() || it->citations != citations) return std::nullopt;
  return it->rank;
}

UniqueCountTable build_unique_table(const ReferenceSet& set) {
  return UniqueCountTable(set);
}

}  // namespace citerank
