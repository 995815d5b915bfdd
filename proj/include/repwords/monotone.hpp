#pragma once

// Longest monotone subwords and the Erdős–Szekeres extraction.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "repwords/error.hpp"
#include "repwords/word.hpp"

namespace repwords {

enum class monotone_direction { nondecreasing, nonincreasing };

inline const char* to_string(monotone_direction d) {
  return d == monotone_direction::nondecreasing ? "nondecreasing" : "nonincreasing";
}

namespace detail {

// Patience sorting; returns a longest chain that is non-decreasing with
// respect to the strict order `before`.
template <class Before>
occurrence longest_chain(std::span<const letter> w, Before before) {
  if (w.empty()) return {};
  std::vector<std::size_t> tails;  // tails[l] = position ending the best chain of length l+1
  std::vector<std::size_t> parent(w.size(), w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto it = std::upper_bound(tails.begin(), tails.end(), w[i],
                               [&](letter x, std::size_t pos) { return before(x, w[pos]); });
    if (it != tails.begin()) parent[i] = *std::prev(it);
    if (it == tails.end())
      tails.push_back(i);
    else
      *it = i;
  }
  std::vector<std::size_t> idx(tails.size());
  std::size_t cur = tails.back();
  for (std::size_t t = idx.size(); t-- > 0;) {
    idx[t] = cur + 1;
    cur = parent[cur];
  }
  return occurrence(std::move(idx));
}

}  // namespace detail

inline occurrence longest_nondecreasing(std::span<const letter> w) {
  return detail::longest_chain(w, std::less<letter>{});
}
inline occurrence longest_nondecreasing(const word& w) { return longest_nondecreasing(w.letters()); }

inline occurrence longest_nonincreasing(std::span<const letter> w) {
  return detail::longest_chain(w, std::greater<letter>{});
}
inline occurrence longest_nonincreasing(const word& w) { return longest_nonincreasing(w.letters()); }

inline occurrence longest_monotone(std::span<const letter> w, monotone_direction d) {
  return d == monotone_direction::nondecreasing ? longest_nondecreasing(w) : longest_nonincreasing(w);
}

inline bool is_monotone(std::span<const letter> w, monotone_direction d) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (d == monotone_direction::nondecreasing && w[i - 1] > w[i]) return false;
    if (d == monotone_direction::nonincreasing && w[i - 1] < w[i]) return false;
  }
  return true;
}

struct es_result {
  monotone_direction direction;
  occurrence occ;
};

// Every word of length r*s+1 has a non-decreasing subword of length r+1 or a
// non-increasing one of length s+1. Returns the first of these that exists
// (non-decreasing preferred), truncated to exactly the guaranteed length.
inline es_result es_extract(std::span<const letter> w, std::size_t r, std::size_t s) {
  if (r == 0 || s == 0) throw precondition_error("es_extract: r and s must be positive");
  if (w.size() <= r * s)
    throw guarantee_unavailable("es_extract: length " + std::to_string(w.size()) +
                                " must exceed r*s = " + std::to_string(r * s));
  auto truncate = [](const occurrence& occ, std::size_t len) {
    return occurrence(std::vector<std::size_t>(occ.begin(), occ.begin() + static_cast<std::ptrdiff_t>(len)));
  };
  auto up = longest_nondecreasing(w);
  if (up.size() >= r + 1) return {monotone_direction::nondecreasing, truncate(up, r + 1)};
  auto down = longest_nonincreasing(w);
  if (down.size() < s + 1)
    throw error("es_extract: no monotone subword of the guaranteed length (internal error)");
  return {monotone_direction::nonincreasing, truncate(down, s + 1)};
}

inline es_result es_extract(const word& w, std::size_t r, std::size_t s) {
  return es_extract(w.letters(), r, s);
}

}  // namespace repwords
