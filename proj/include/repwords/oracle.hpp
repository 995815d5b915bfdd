#pragma once

// Exhaustive enumeration for tiny instances. Everything here decides
// containment with the general backtracking search so it stays independent
// of the specialised checkers in patterns.hpp.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "repwords/error.hpp"
#include "repwords/patterns.hpp"
#include "repwords/word.hpp"

namespace repwords::oracle {

inline constexpr std::size_t default_cayley_guard = 10;
inline constexpr std::size_t default_balanced_guard = 16;
inline constexpr std::size_t default_search_guard = 12;

namespace detail {

class cayley_walker {
 public:
  cayley_walker(std::size_t len, const std::function<void(const word&)>& visit)
      : len_(len), visit_(visit), count_(len, 0) {
    prefix_.reserve(len);
  }

  void run() { step(0, 0); }

 private:
  // `top` is max(prefix)+1 (0 for the empty prefix), `distinct` the number
  // of values used so far; the prefix extends iff the gaps fit in what is left.
  void step(std::size_t top, std::size_t distinct) {
    if (prefix_.size() == len_) {
      if (distinct == top) visit_(word(prefix_));
      return;
    }
    const std::size_t remaining = len_ - prefix_.size() - 1;
    for (std::size_t c = 0; c < len_; ++c) {
      const std::size_t new_top = std::max(top, c + 1);
      const std::size_t new_distinct = distinct + (count_[c] == 0 ? 1 : 0);
      if (new_top - new_distinct > remaining) {
        if (c + 1 > top) break;  // larger c only widens the gap
        continue;
      }
      ++count_[c];
      prefix_.push_back(c);
      step(new_top, new_distinct);
      prefix_.pop_back();
      --count_[c];
    }
  }

  std::size_t len_;
  const std::function<void(const word&)>& visit_;
  std::vector<std::size_t> count_;
  std::vector<letter> prefix_;
};

inline bool contains_any(const word& w, const std::vector<family_entry>& fam) {
  return std::any_of(fam.begin(), fam.end(), [&](const family_entry& e) { return contains(w, e.pat).has_value(); });
}

}  // namespace detail

// Every standardised word of length len, once each, in lexicographic order.
inline void for_each_cayley(std::size_t len, const std::function<void(const word&)>& visit,
                            std::size_t guard = default_cayley_guard) {
  if (len > guard)
    throw size_error("enumerate_cayley: length " + std::to_string(len) + " exceeds guard " + std::to_string(guard));
  if (len == 0) {
    visit(word{});
    return;
  }
  detail::cayley_walker(len, visit).run();
}

inline std::vector<word> enumerate_cayley(std::size_t len, std::size_t guard = default_cayley_guard) {
  std::vector<word> out;
  for_each_cayley(len, [&](const word& w) { out.push_back(w); }, guard);
  return out;
}

// Every arrangement of {1^mult, ..., values^mult}, lexicographic order.
inline void for_each_balanced(std::size_t values, std::size_t mult, const std::function<void(const word&)>& visit,
                              std::size_t guard = default_balanced_guard) {
  if (values == 0 || mult == 0) throw precondition_error("enumerate_balanced: values and mult must be positive");
  if (values * mult > guard)
    throw size_error("enumerate_balanced: length " + std::to_string(values * mult) + " exceeds guard " +
                     std::to_string(guard));
  std::vector<letter> w;
  for (std::size_t v = 1; v <= values; ++v) w.insert(w.end(), mult, v);
  do {
    visit(word(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

inline std::vector<word> enumerate_balanced(std::size_t values, std::size_t mult,
                                            std::size_t guard = default_balanced_guard) {
  std::vector<word> out;
  for_each_balanced(values, mult, [&](const word& w) { out.push_back(w); }, guard);
  return out;
}

struct max_repeats_result {
  std::size_t max_repeats = 0;
  std::optional<word> witness;  // least standardised avoider attaining max_repeats
  std::size_t words_checked = 0;
};

// Largest repeat count of a word avoiding family(n, k), over words with at
// most max_values distinct values. Once-occurring letters can be deleted
// without changing repeats or creating a pattern, and a value occurring k+2
// times is 0^{k+2}, so only words whose values occur 2..k+1 times are
// searched. For max_values below n⁶+1 the answer is a lower bound on
// m(n, k) - 1, not its value.
inline max_repeats_result max_repeats_avoiding(std::size_t n, std::size_t k, std::size_t max_values,
                                               std::size_t guard = default_search_guard) {
  if (k == 0) throw precondition_error("max_repeats_avoiding: k must be positive");
  if (max_values * (k + 1) > guard)
    throw size_error("max_repeats_avoiding: words up to length " + std::to_string(max_values * (k + 1)) +
                     " exceed guard " + std::to_string(guard));
  const auto fam = family(n, k);

  max_repeats_result best;
  best.witness = word{0};
  for (std::size_t m = 1; m <= max_values; ++m) {
    std::vector<std::size_t> mult(m, 2);
    while (true) {
      std::vector<letter> w;
      for (std::size_t v = 0; v < m; ++v) w.insert(w.end(), mult[v], v);
      const std::size_t reps = w.size() - m;
      do {
        ++best.words_checked;
        if (reps < best.max_repeats) break;
        word cand(w);
        if (reps == best.max_repeats && best.witness && !(cand < *best.witness)) continue;
        if (detail::contains_any(cand, fam)) continue;
        best.max_repeats = reps;
        best.witness = std::move(cand);
      } while (std::next_permutation(w.begin(), w.end()));

      std::size_t v = 0;
      while (v < m && mult[v] == k + 1) mult[v++] = 2;
      if (v == m) break;
      ++mult[v];
    }
  }
  return best;
}

struct balanced_check_result {
  bool holds = true;
  std::size_t words_checked = 0;
  std::optional<word> counterexample;
};

// Every word with exactly k+1 occurrences of each of 1..n⁶+1 contains a
// pattern of family_mult(n, k).
inline balanced_check_result check_unavoidability_balanced(std::size_t n, std::size_t k,
                                                           std::size_t guard = default_balanced_guard) {
  if (n == 0 || k == 0) throw precondition_error("check_unavoidability_balanced: n and k must be at least 1");
  std::size_t n6 = 1;
  for (int i = 0; i < 6; ++i) {
    if (n6 > guard) break;
    n6 *= n;
  }
  const auto fam = family_mult(n, k);
  balanced_check_result res;
  for_each_balanced(
      n6 + 1, k + 1,
      [&](const word& w) {
        ++res.words_checked;
        if (res.holds && !detail::contains_any(w, fam)) {
          res.holds = false;
          res.counterexample = w;
        }
      },
      guard);
  return res;
}

}  // namespace repwords::oracle
