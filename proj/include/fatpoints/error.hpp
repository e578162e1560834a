#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fatpoints {

// Malformed arguments: mixed fields, negative degrees, bad branch names.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The geometry itself is unusable (duplicate points, point off the curve).
class invalid_geometry : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

// Arguments are well formed but outside the range where a formula holds.
class out_of_domain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Randomized construction could not realize the request within its retry budget.
class generation_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace fatpoints
