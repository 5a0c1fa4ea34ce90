#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "citerank/model.hpp"

namespace citerank {

// Dataset files are comma-delimited text with the exact header
//
//   id,citations,authors,year,categories
//
// where authors and categories are semicolon-separated label lists (possibly
// empty) and year may be empty. Malformed rows are rejected with their line
// number. No quoting: ids and labels must not contain ',' or ';'.

ReferenceSet read_dataset(std::istream& in, std::string label,
                          const std::string& source = "");
ReferenceSet read_dataset(const std::filesystem::path& path);

void write_dataset(const ReferenceSet& set, std::ostream& out);
void write_dataset(const ReferenceSet& set, const std::filesystem::path& path);

}  // namespace citerank
