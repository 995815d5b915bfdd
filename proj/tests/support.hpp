#pragma once

// Test-only generators and brute-force references.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "repwords/word.hpp"

namespace repwords::testing {

inline word random_word(std::mt19937_64& rng, std::size_t len, letter alphabet, letter offset = 0) {
  std::uniform_int_distribution<letter> d(0, alphabet - 1);
  std::vector<letter> out(len);
  for (auto& a : out) a = d(rng) + offset;
  return word(std::move(out));
}

// Rank of each letter among the distinct letters, by counting.
inline word rank_standardise(const word& w) {
  std::vector<letter> out;
  for (letter a : w) {
    std::vector<letter> below;
    for (letter b : w)
      if (b < a && std::find(below.begin(), below.end(), b) == below.end()) below.push_back(b);
    out.push_back(below.size());
  }
  return word(std::move(out));
}

// Order-isomorphism checked pairwise, without standardising.
inline bool order_isomorphic(const word& a, const word& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if ((a[i] < a[j]) != (b[i] < b[j]) || (a[i] == a[j]) != (b[i] == b[j])) return false;
  return true;
}

// Lexicographically first index set (as 1-based positions) whose subword is
// order-isomorphic to p, by enumerating combinations in lex order.
inline std::optional<occurrence> brute_force_contains(const word& w, const word& p) {
  const std::size_t m = p.size(), L = w.size();
  if (m == 0) return occurrence{};
  if (m > L) return std::nullopt;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    std::vector<letter> sub;
    for (std::size_t i : idx) sub.push_back(w[i]);
    if (order_isomorphic(word(sub), p)) {
      std::vector<std::size_t> one;
      for (std::size_t i : idx) one.push_back(i + 1);
      return occurrence(std::move(one));
    }
    std::size_t t = m;
    while (t > 0 && idx[t - 1] == L - m + (t - 1)) --t;
    if (t == 0) return std::nullopt;
    ++idx[t - 1];
    for (std::size_t u = t; u < m; ++u) idx[u] = idx[u - 1] + 1;
  }
}

// Quadratic longest-chain DP: length of the longest non-decreasing (or
// non-increasing) subword.
inline std::size_t dp_longest(const word& w, bool nondecreasing) {
  std::vector<std::size_t> best(w.size(), 1);
  std::size_t out = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const bool ok = nondecreasing ? w[j] <= w[i] : w[j] >= w[i];
      if (ok) best[i] = std::max(best[i], best[j] + 1);
    }
    out = std::max(out, best[i]);
  }
  return out;
}

// Random word with exactly `reps` repeats and every multiplicity at most
// `max_mult`, plus `singles` once-occurring letters, shuffled, on random
// distinct letters.
inline word random_word_with_repeats(std::mt19937_64& rng, std::size_t reps, std::size_t max_mult,
                                     std::size_t singles) {
  std::vector<std::size_t> mult;
  std::size_t left = reps;
  while (left > 0) {
    std::uniform_int_distribution<std::size_t> d(1, std::min(left, max_mult - 1));
    const std::size_t extra = d(rng);
    mult.push_back(extra + 1);
    left -= extra;
  }
  mult.insert(mult.end(), singles, 1);
  std::vector<letter> labels(mult.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i;
  std::shuffle(labels.begin(), labels.end(), rng);
  std::vector<letter> out;
  for (std::size_t v = 0; v < mult.size(); ++v) out.insert(out.end(), mult[v], labels[v] * 3 + 1);
  std::shuffle(out.begin(), out.end(), rng);
  return word(std::move(out));
}

}  // namespace repwords::testing
