#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fcd {

// Raised when a letter sequence cannot be parsed as a canonical form.
// `position` is the index of the offending letter in the input word.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// Raised when a computation would exceed a configured cap (weight-graph
// height, commutation-class size).  The message names the cap so callers
// can surface which limit to raise.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace fcd
