#pragma once

#include <stdexcept>
#include <string>

namespace fpncw {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two fuzzy sets were combined over different universes.
struct UniverseMismatch : Error {
  using Error::Error;
};

/// A place, transition, word, state, or symbol name failed to resolve.
struct UnknownName : Error {
  using Error::Error;
};

/// A transition was fired while not enabled.
struct DisabledTransition : Error {
  using Error::Error;
};

/// An exploration cap was hit (reachability marking budget, oracle depth).
struct BudgetExceeded : Error {
  using Error::Error;
};

/// Model text could not be parsed; carries the offending line number.
struct ParseError : Error {
  ParseError(int line_no, const std::string& message)
      : Error("line " + std::to_string(line_no) + ": " + message), line(line_no) {}
  int line;
};

}  // namespace fpncw
