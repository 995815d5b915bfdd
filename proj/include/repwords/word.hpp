#pragma once

// Words over the non-negative integers, Cayley-permutation patterns and
// pattern containment.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "repwords/error.hpp"

namespace repwords {

using letter = std::uint64_t;

// A finite sequence of non-negative integers. Indexing through operator[]
// is 0-based; occurrences and the text formats use 1-based positions.
class word {
 public:
  using value_type = letter;
  using const_iterator = std::vector<letter>::const_iterator;

  word() = default;
  word(std::initializer_list<letter> letters) : letters_(letters) {}
  explicit word(std::vector<letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  letter operator[](std::size_t i) const { return letters_[i]; }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  std::span<const letter> letters() const noexcept { return letters_; }
  const std::vector<letter>& vec() const noexcept { return letters_; }

  void push_back(letter a) { letters_.push_back(a); }
  void reserve(std::size_t n) { letters_.reserve(n); }

  letter max_value() const {
    if (letters_.empty()) throw precondition_error("max_value: empty word");
    return *std::max_element(letters_.begin(), letters_.end());
  }

  letter min_value() const {
    if (letters_.empty()) throw precondition_error("min_value: empty word");
    return *std::min_element(letters_.begin(), letters_.end());
  }

  // value -> number of occurrences
  std::map<letter, std::size_t> multiplicities() const {
    std::map<letter, std::size_t> m;
    for (letter a : letters_) ++m[a];
    return m;
  }

  std::size_t distinct_count() const { return multiplicities().size(); }

  friend bool operator==(const word&, const word&) = default;
  friend auto operator<=>(const word&, const word&) = default;

 private:
  std::vector<letter> letters_;
};

// Strictly increasing 1-based positions into some host word.
class occurrence {
 public:
  occurrence() = default;
  occurrence(std::initializer_list<std::size_t> idx) : indices_(idx) {}
  explicit occurrence(std::vector<std::size_t> idx) : indices_(std::move(idx)) {}

  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  std::size_t operator[](std::size_t i) const { return indices_[i]; }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

  bool is_valid_for(std::size_t host_length) const noexcept {
    for (std::size_t t = 0; t < indices_.size(); ++t) {
      if (indices_[t] < 1 || indices_[t] > host_length) return false;
      if (t > 0 && indices_[t - 1] >= indices_[t]) return false;
    }
    return true;
  }

  friend bool operator==(const occurrence&, const occurrence&) = default;
  friend auto operator<=>(const occurrence&, const occurrence&) = default;

 private:
  std::vector<std::size_t> indices_;
};

inline bool is_standardised(const word& w) {
  if (w.empty()) return true;
  auto m = w.multiplicities();
  // keys are sorted, so they must be exactly 0..size-1
  return m.rbegin()->first + 1 == m.size();
}

// Order-preserving relabelling onto 0..m. The empty word maps to itself.
inline word standardise(const word& w) {
  std::vector<letter> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<letter> out;
  out.reserve(w.size());
  for (letter a : w) {
    out.push_back(static_cast<letter>(
        std::lower_bound(sorted.begin(), sorted.end(), a) - sorted.begin()));
  }
  return word(std::move(out));
}

// A standardised word. Construction from a word that is not standardised
// is a precondition error; use pattern::of to standardise first.
class pattern {
 public:
  pattern() = default;
  explicit pattern(word w) : letters_(std::move(w)) {
    if (!is_standardised(letters_))
      throw precondition_error("pattern: letters are not of the form 0..m");
  }
  static pattern of(const word& w) { return pattern(standardise(w)); }

  const word& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  letter operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const pattern&, const pattern&) = default;
  friend auto operator<=>(const pattern&, const pattern&) = default;

 private:
  word letters_;
};

// Number of positions holding a value already seen earlier.
inline std::size_t repeats(const word& w) {
  return w.size() - w.distinct_count();
}

inline word reverse(const word& w) {
  return word(std::vector<letter>(w.vec().rbegin(), w.vec().rend()));
}

inline pattern reverse(const pattern& p) { return pattern(reverse(p.letters())); }

inline word subword(const word& w, const occurrence& occ) {
  if (!occ.is_valid_for(w.size()))
    throw invalid_occurrence("subword: indices must be strictly increasing and within 1.." +
                             std::to_string(w.size()));
  std::vector<letter> out;
  out.reserve(occ.size());
  for (std::size_t i : occ) out.push_back(w[i - 1]);
  return word(std::move(out));
}

// True iff occ is a valid occurrence of p in w.
inline bool is_occurrence_of(const word& w, const occurrence& occ, const pattern& p) {
  if (occ.size() != p.size() || !occ.is_valid_for(w.size())) return false;
  return standardise(subword(w, occ)) == p.letters();
}

namespace detail {

// Depth-first search over host positions in increasing order, so the first
// complete assignment found is the lexicographically least occurrence.
class containment_search {
 public:
  containment_search(const word& host, const pattern& p)
      : host_(host), pat_(p), value_of_(p.empty() ? 0 : p.letters().max_value() + 1) {
    chosen_.reserve(p.size());
  }

  std::optional<occurrence> run() {
    if (pat_.size() > host_.size()) return std::nullopt;
    if (!step(0, 0)) return std::nullopt;
    std::vector<std::size_t> idx;
    idx.reserve(chosen_.size());
    for (std::size_t pos : chosen_) idx.push_back(pos + 1);
    return occurrence(std::move(idx));
  }

 private:
  bool fits(letter c, letter v) const {
    if (value_of_[c]) return *value_of_[c] == v;
    for (letter d = c; d-- > 0;) {
      if (value_of_[d]) {
        if (!(*value_of_[d] < v)) return false;
        break;
      }
    }
    for (letter d = c + 1; d < value_of_.size(); ++d) {
      if (value_of_[d]) {
        if (!(*value_of_[d] > v)) return false;
        break;
      }
    }
    return true;
  }

  bool step(std::size_t t, std::size_t start) {
    if (t == pat_.size()) return true;
    const letter c = pat_[t];
    const std::size_t last = host_.size() - (pat_.size() - t);
    for (std::size_t pos = start; pos <= last; ++pos) {
      const letter v = host_[pos];
      if (!fits(c, v)) continue;
      const bool fresh = !value_of_[c];
      if (fresh) value_of_[c] = v;
      chosen_.push_back(pos);
      if (step(t + 1, pos + 1)) return true;
      chosen_.pop_back();
      if (fresh) value_of_[c].reset();
    }
    return false;
  }

  const word& host_;
  const pattern& pat_;
  std::vector<std::optional<letter>> value_of_;
  std::vector<std::size_t> chosen_;
};

}  // namespace detail

// General containment by backtracking. Returns the lexicographically least
// occurrence of p in w, or nothing. Exponential in |p| in the worst case.
inline std::optional<occurrence> contains(const word& w, const pattern& p) {
  if (p.empty()) return occurrence{};
  return detail::containment_search(w, p).run();
}

inline bool is_inversion_sequence(const word& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] >= i + 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Text format
//
// Either letters separated by spaces or commas ("13 14 15") or a compact
// digit string ("13043134") when every letter is a single digit. Any space,
// tab or comma selects the separated form, so a one-letter word with a
// letter above 9 is written with a trailing comma ("13,").

enum class word_format { automatic, compact, separated };

inline word parse_word(std::string_view text) {
  auto is_sep = [](char c) { return c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '\r'; };
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);

  std::vector<letter> out;
  if (std::any_of(text.begin(), text.end(), is_sep)) {
    std::size_t i = 0;
    while (i < text.size()) {
      if (is_sep(text[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && !is_sep(text[j])) ++j;
      letter value = 0;
      auto tok = text.substr(i, j - i);
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw parse_error("malformed word: '" + std::string(tok) +
                          "' is not a non-negative decimal integer");
      out.push_back(value);
      i = j;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw parse_error(std::string("malformed word: unexpected character '") + c + "'");
      out.push_back(static_cast<letter>(c - '0'));
    }
  }
  return word(std::move(out));
}

inline std::string to_string(const word& w, word_format fmt = word_format::automatic) {
  if (fmt == word_format::automatic)
    fmt = std::all_of(w.begin(), w.end(), [](letter a) { return a <= 9; }) ? word_format::compact
                                                                           : word_format::separated;
  std::string out;
  if (fmt == word_format::compact) {
    for (letter a : w) {
      if (a > 9) throw precondition_error("compact word format needs letters 0..9");
      out.push_back(static_cast<char>('0' + a));
    }
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(w[i]);
  }
  if (w.size() == 1 && w[0] > 9) out.push_back(',');
  return out;
}

inline std::string to_string(const pattern& p, word_format fmt = word_format::automatic) {
  return to_string(p.letters(), fmt);
}

// "[1,2,5]"
inline std::string to_string(const occurrence& occ) {
  std::string out = "[";
  for (std::size_t t = 0; t < occ.size(); ++t) {
    if (t) out.push_back(',');
    out += std::to_string(occ[t]);
  }
  out.push_back(']');
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const word& w) { return os << to_string(w); }
inline std::ostream& operator<<(std::ostream& os, const pattern& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const occurrence& o) { return os << to_string(o); }

// Monospace plot of the points (i, w_i). One row per value from the maximum
// down to 0, '*' marks a point and '.' an empty cell. For an inversion
// sequence the cells on or above the staircase w_i = i are blanked and the
// staircase itself is drawn with '-'.
inline std::string render_grid(const word& w) {
  if (w.empty()) throw precondition_error("render_grid: empty word");
  const letter top = w.max_value();
  const bool staircase = is_inversion_sequence(w);
  const std::size_t label_width = std::to_string(top).size();
  const std::size_t col_width = std::to_string(w.size()).size();

  auto pad = [](std::string s, std::size_t width) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
  };

  std::string out;
  for (letter row = top + 1; row-- > 0;) {
    out += pad(std::to_string(row), label_width) + " |";
    for (std::size_t i = 0; i < w.size(); ++i) {
      char cell = '.';
      if (w[i] == row) {
        cell = '*';
      } else if (staircase && row == i + 1) {
        cell = '-';
      } else if (staircase && row > i + 1) {
        cell = ' ';
      }
      out += ' ' + pad(std::string(1, cell), col_width);
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out.push_back('\n');
  }
  out += std::string(label_width + 1, ' ') + '+' + std::string(w.size() * (col_width + 1), '-') + '\n';
  out += std::string(label_width + 2, ' ');
  for (std::size_t i = 0; i < w.size(); ++i) out += ' ' + pad(std::to_string(i + 1), col_width);
  out.push_back('\n');
  return out;
}

}  // namespace repwords
