#pragma once

#include <stdexcept>
#include <string>

namespace coarg {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input text could not be parsed; carries a 1-based source position.
struct parse_error : error {
  int line;
  int column;
  parse_error(const std::string& msg, int line_, int column_)
      : error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

/// A program uses variables or other non-ground constructs.
struct non_ground_error : parse_error {
  using parse_error::parse_error;
};

/// An operation requiring a normal (affirmative and local) theory was given a
/// theory that is not normal.
struct not_normal_error : error {
  using error::error;
};

}  // namespace coarg
