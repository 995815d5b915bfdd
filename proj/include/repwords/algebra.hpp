#pragma once

// Concatenation, direct sum and skew sum of words with positive letters.

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "repwords/error.hpp"
#include "repwords/word.hpp"

namespace repwords {

namespace detail {

inline void require_positive(const word& w, const char* op) {
  if (w.empty()) throw precondition_error(std::string(op) + ": operand must be nonempty");
  for (letter a : w)
    if (a == 0) throw precondition_error(std::string(op) + ": operands must not contain the letter 0");
}

inline void append_shifted(std::vector<letter>& out, const word& w, letter shift) {
  for (letter a : w) {
    if (a > std::numeric_limits<letter>::max() - shift)
      throw precondition_error("letter overflow while shifting");
    out.push_back(a + shift);
  }
}

}  // namespace detail

inline word concat(const word& pi, const word& sigma) {
  std::vector<letter> out;
  out.reserve(pi.size() + sigma.size());
  out.insert(out.end(), pi.begin(), pi.end());
  out.insert(out.end(), sigma.begin(), sigma.end());
  return word(std::move(out));
}

// pi followed by sigma shifted up by max(pi).
inline word direct_sum(const word& pi, const word& sigma) {
  detail::require_positive(pi, "direct_sum");
  detail::require_positive(sigma, "direct_sum");
  std::vector<letter> out;
  out.reserve(pi.size() + sigma.size());
  out.insert(out.end(), pi.begin(), pi.end());
  detail::append_shifted(out, sigma, pi.max_value());
  return word(std::move(out));
}

// pi shifted up by max(sigma), followed by sigma.
inline word skew_sum(const word& pi, const word& sigma) {
  detail::require_positive(pi, "skew_sum");
  detail::require_positive(sigma, "skew_sum");
  std::vector<letter> out;
  out.reserve(pi.size() + sigma.size());
  detail::append_shifted(out, pi, sigma.max_value());
  out.insert(out.end(), sigma.begin(), sigma.end());
  return word(std::move(out));
}

// pi ⊕ pi ⊕ ... ⊕ pi (m copies), folded from the left.
inline word direct_power(const word& pi, std::size_t m) {
  if (m == 0) throw precondition_error("direct_power: power must be positive");
  detail::require_positive(pi, "direct_power");
  // Left fold written out: copy c is shifted by c * max(pi).
  const letter h = pi.max_value();
  std::vector<letter> out;
  out.reserve(pi.size() * m);
  for (std::size_t c = 0; c < m; ++c) {
    if (c > 0 && h > std::numeric_limits<letter>::max() / c)
      throw precondition_error("letter overflow in direct_power");
    detail::append_shifted(out, pi, h * c);
  }
  return word(std::move(out));
}

// pi ⊖ pi ⊖ ... ⊖ pi (m copies), folded from the left.
inline word skew_power(const word& pi, std::size_t m) {
  if (m == 0) throw precondition_error("skew_power: power must be positive");
  detail::require_positive(pi, "skew_power");
  const letter h = pi.max_value();
  std::vector<letter> out;
  out.reserve(pi.size() * m);
  for (std::size_t c = m; c-- > 0;) {
    if (c > 0 && h > std::numeric_limits<letter>::max() / c)
      throw precondition_error("letter overflow in skew_power");
    detail::append_shifted(out, pi, h * c);
  }
  return word(std::move(out));
}

}  // namespace repwords
