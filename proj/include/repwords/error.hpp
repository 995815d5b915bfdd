#pragma once

#include <stdexcept>
#include <string>

namespace repwords {

// Base of every error thrown by the library. Each subtype names the
// precondition that was violated.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed word text.
class parse_error : public error {
 public:
  using error::error;
};

// Out-of-range or non-increasing occurrence indices.
class invalid_occurrence : public error {
 public:
  using error::error;
};

// A combinator or builder was called outside its domain
// (letter 0 in a sum operand, zero power, n = 0, ...).
class precondition_error : public error {
 public:
  using error::error;
};

// Monotone extraction asked for more than the length guarantees.
class guarantee_unavailable : public error {
 public:
  using error::error;
};

// The word has too few repeats for the unavoidability argument.
class insufficient_repeats : public error {
 public:
  using error::error;
};

// A brute-force or verification run exceeds its size guard.
class size_error : public error {
 public:
  using error::error;
};

}  // namespace repwords
