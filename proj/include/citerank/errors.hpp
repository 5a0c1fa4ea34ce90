#pragma once

#include <stdexcept>
#include <string>

namespace citerank {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// reference-set construction
struct EmptySetError : Error {
  EmptySetError() : Error("reference set is empty") {}
};
struct DuplicateIdError : Error {
  explicit DuplicateIdError(const std::string& id)
      : Error("duplicate paper id: " + id) {}
};
struct NegativeCitationsError : Error {
  explicit NegativeCitationsError(const std::string& id)
      : Error("negative citation count for paper: " + id) {}
};

// indicator computation
struct UnrankedCountError : Error {
  using Error::Error;
};
struct DegenerateTableError : Error {
  DegenerateTableError()
      : Error("table has a single unique citation count; "
              "lowest-maps-to-0 and highest-maps-to-100 conflict") {}
};
struct UnknownAuthorError : Error {
  explicit UnknownAuthorError(const std::string& author)
      : Error("no papers for author: " + author) {}
};
struct PositionOutOfRangeError : Error {
  using Error::Error;
};

// perturbation
struct SelectorUnresolvedError : Error {
  using Error::Error;
};
struct SelectorConflictError : Error {
  using Error::Error;
};
struct NegativeResultError : Error {
  using Error::Error;
};
struct MismatchedIdsError : Error {
  using Error::Error;
};

// generators
struct UnknownCaseError : Error {
  explicit UnknownCaseError(const std::string& label)
      : Error("unknown field case: " + label) {}
};

// file and text input; message carries "<source>:<line>: ..." when known
struct ParseError : Error {
  ParseError(std::string message, int line = 0)
      : Error(std::move(message)), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace citerank
