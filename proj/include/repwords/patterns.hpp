#pragma once

// The unavoidable pattern families for words with repeats, with
// polynomial-time containment checks for each shape.
//
//   constant          0^m
//   doubled monotone  (0^m 1^m ... n^m)^e
//   double run        (01...n)^e1 (01...n)^e2
//
// The general backtracking `contains` in word.hpp is the reference these
// checkers are tested against.

#include <algorithm>
#include <cstddef>
#include <future>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "repwords/word.hpp"

namespace repwords {

enum class direction { id, rev };

inline direction flip(direction e) { return e == direction::id ? direction::rev : direction::id; }
inline const char* to_string(direction e) { return e == direction::id ? "id" : "rev"; }

enum class family_kind { constant, doubled_monotone, double_run };

struct family_id {
  family_kind kind = family_kind::constant;
  direction e1 = direction::id;  // e for doubled_monotone
  direction e2 = direction::id;
  std::size_t n = 0;
  // Run length for constant, group size for doubled_monotone, 1 otherwise.
  std::size_t mult = 1;

  static family_id constant(std::size_t m) { return {family_kind::constant, direction::id, direction::id, 0, m}; }
  static family_id doubled(std::size_t n, std::size_t mult, direction e) {
    return {family_kind::doubled_monotone, e, direction::id, n, mult};
  }
  static family_id double_run(std::size_t n, direction e1, direction e2) {
    return {family_kind::double_run, e1, e2, n, 1};
  }

  friend bool operator==(const family_id&, const family_id&) = default;
};

// "Constant", "DoubledMonotone(rev)", "DoubleRun(id,rev)"
inline std::string to_string(const family_id& f) {
  switch (f.kind) {
    case family_kind::constant:
      return "Constant";
    case family_kind::doubled_monotone:
      return std::string("DoubledMonotone(") + to_string(f.e1) + ")";
    case family_kind::double_run:
      return std::string("DoubleRun(") + to_string(f.e1) + "," + to_string(f.e2) + ")";
  }
  return "?";
}

inline pattern family_pattern(const family_id& f) {
  std::vector<letter> out;
  auto run = [&](direction e) {
    for (std::size_t v = 0; v <= f.n; ++v) out.push_back(e == direction::id ? v : f.n - v);
  };
  switch (f.kind) {
    case family_kind::constant:
      out.assign(f.mult, 0);
      break;
    case family_kind::doubled_monotone:
      for (std::size_t v = 0; v <= f.n; ++v) out.insert(out.end(), f.mult, v);
      if (f.e1 == direction::rev) std::reverse(out.begin(), out.end());
      break;
    case family_kind::double_run:
      run(f.e1);
      run(f.e2);
      break;
  }
  return pattern(word(std::move(out)));
}

struct family_entry {
  family_id id;
  pattern pat;
};

namespace detail {

inline std::vector<family_entry> dedupe(const std::vector<family_id>& ids) {
  std::vector<family_entry> out;
  for (const auto& id : ids) {
    auto p = family_pattern(id);
    if (std::none_of(out.begin(), out.end(), [&](const family_entry& e) { return e.pat == p; }))
      out.push_back({id, std::move(p)});
  }
  return out;
}

inline void push_double_runs(std::vector<family_id>& ids, std::size_t n) {
  for (direction e1 : {direction::id, direction::rev})
    for (direction e2 : {direction::id, direction::rev}) ids.push_back(family_id::double_run(n, e1, e2));
}

}  // namespace detail

// The seven patterns 0^{k+2}, (0011...nn)^e, (01...n)^e1 (01...n)^e2 in the
// fixed dispatch order. Shapes that coincide (n = 0) are kept once.
inline std::vector<family_entry> family(std::size_t n, std::size_t k) {
  std::vector<family_id> ids{family_id::constant(k + 2), family_id::doubled(n, 2, direction::id),
                             family_id::doubled(n, 2, direction::rev)};
  detail::push_double_runs(ids, n);
  return detail::dedupe(ids);
}

// The six patterns for words in which every value occurs exactly k+1 times:
// (0^{k+1} ... n^{k+1})^e and the four double runs.
inline std::vector<family_entry> family_mult(std::size_t n, std::size_t k) {
  std::vector<family_id> ids{family_id::doubled(n, k + 1, direction::id),
                             family_id::doubled(n, k + 1, direction::rev)};
  detail::push_double_runs(ids, n);
  return detail::dedupe(ids);
}

// The seven patterns avoided by the extremal construction with parameter k:
// 0^{k+2}, (0^{k+1} ... n^{k+1})^e and the four double runs. Equal to
// family(n, 1) when k = 1.
inline std::vector<family_entry> construction_family(std::size_t n, std::size_t k) {
  std::vector<family_id> ids{family_id::constant(k + 2), family_id::doubled(n, k + 1, direction::id),
                             family_id::doubled(n, k + 1, direction::rev)};
  detail::push_double_runs(ids, n);
  return detail::dedupe(ids);
}

namespace detail {

inline std::map<letter, std::vector<std::size_t>> positions_by_value(const word& w) {
  std::map<letter, std::vector<std::size_t>> pos;
  for (std::size_t i = 0; i < w.size(); ++i) pos[w[i]].push_back(i + 1);
  return pos;
}

inline occurrence sorted_occurrence(std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end());
  return occurrence(std::move(idx));
}

}  // namespace detail

// m equal letters. Picks the value whose first occurrence is earliest, which
// gives the lexicographically least occurrence.
inline std::optional<occurrence> contains_constant(const word& w, std::size_t m) {
  if (m == 0) return occurrence{};
  const auto pos = detail::positions_by_value(w);
  const std::vector<std::size_t>* best = nullptr;
  for (const auto& [value, p] : pos) {
    if (p.size() >= m && (!best || p.front() < best->front())) best = &p;
  }
  if (!best) return std::nullopt;
  return occurrence(std::vector<std::size_t>(best->begin(), best->begin() + static_cast<std::ptrdiff_t>(m)));
}

// (0^mult 1^mult ... n^mult)^e. Each value contributes a window of mult
// consecutive occurrences (any other choice of mult occurrences spans at
// least as much); the longest chain of windows that are position-disjoint
// and strictly monotone in value is found by a quadratic DP.
inline std::optional<occurrence> contains_multiplied_monotone(const word& w, std::size_t n, std::size_t mult,
                                                              direction e) {
  if (mult == 0) throw precondition_error("contains_multiplied_monotone: mult must be positive");
  struct window {
    letter value;
    std::size_t first, last;
    const std::vector<std::size_t>* pos;
    std::size_t offset;
  };
  const auto pos = detail::positions_by_value(w);
  std::vector<window> items;
  for (const auto& [value, p] : pos)
    for (std::size_t o = 0; o + mult <= p.size(); ++o) items.push_back({value, p[o], p[o + mult - 1], &p, o});
  std::sort(items.begin(), items.end(), [](const window& a, const window& b) { return a.first < b.first; });

  const std::size_t need = n + 1;
  std::vector<std::size_t> len(items.size(), 1), parent(items.size(), items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < i && len[i] < need; ++j) {
      if (items[j].last >= items[i].first) continue;
      const bool ordered = e == direction::id ? items[j].value < items[i].value : items[j].value > items[i].value;
      if (ordered && len[j] + 1 > len[i]) {
        len[i] = len[j] + 1;
        parent[i] = j;
      }
    }
    if (len[i] >= need) {
      std::vector<std::size_t> idx;
      for (std::size_t c = i; c != items.size(); c = parent[c]) {
        const auto& it = items[c];
        idx.insert(idx.end(), it.pos->begin() + static_cast<std::ptrdiff_t>(it.offset),
                   it.pos->begin() + static_cast<std::ptrdiff_t>(it.offset + mult));
      }
      return detail::sorted_occurrence(std::move(idx));
    }
  }
  return std::nullopt;
}

// (01...n)^e1 (01...n)^e2. Each value contributes a pair (x, y) of its
// occurrences, x in the first block and y in the second. For a threshold T
// (the largest first-block position) the candidates are the pairs with
// x <= T < y, and a chain must increase in value with x and y ordered per
// e1 and e2; any such chain of length n+1 is an occurrence.
inline std::optional<occurrence> contains_double_run(const word& w, std::size_t n, direction e1, direction e2) {
  struct pair_item {
    letter value;
    std::size_t x, y;
  };
  std::vector<pair_item> items;
  for (const auto& [value, p] : detail::positions_by_value(w))
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b) items.push_back({value, p[a], p[b]});
  std::sort(items.begin(), items.end(), [](const pair_item& a, const pair_item& b) {
    return a.value != b.value ? a.value < b.value : a.x != b.x ? a.x < b.x : a.y < b.y;
  });

  std::vector<std::size_t> thresholds;
  for (const auto& it : items) thresholds.push_back(it.x);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  auto before = [&](const pair_item& a, const pair_item& b) {
    if (!(a.value < b.value)) return false;
    if (e1 == direction::id ? !(a.x < b.x) : !(a.x > b.x)) return false;
    return e2 == direction::id ? a.y < b.y : a.y > b.y;
  };

  const std::size_t need = n + 1;
  std::vector<const pair_item*> live;
  std::vector<std::size_t> len, parent;
  for (std::size_t threshold : thresholds) {
    live.clear();
    for (const auto& it : items)
      if (it.x <= threshold && threshold < it.y) live.push_back(&it);
    if (live.size() < need) continue;
    len.assign(live.size(), 1);
    parent.assign(live.size(), live.size());
    for (std::size_t i = 0; i < live.size(); ++i) {
      for (std::size_t j = 0; j < i && len[i] < need; ++j) {
        if (len[j] + 1 > len[i] && before(*live[j], *live[i])) {
          len[i] = len[j] + 1;
          parent[i] = j;
        }
      }
      if (len[i] >= need) {
        std::vector<std::size_t> idx;
        for (std::size_t c = i; c != live.size(); c = parent[c]) {
          idx.push_back(live[c]->x);
          idx.push_back(live[c]->y);
        }
        return detail::sorted_occurrence(std::move(idx));
      }
    }
  }
  return std::nullopt;
}

inline std::optional<occurrence> contains_family_member(const word& w, const family_id& f) {
  switch (f.kind) {
    case family_kind::constant:
      return contains_constant(w, f.mult);
    case family_kind::doubled_monotone:
      return contains_multiplied_monotone(w, f.n, f.mult, f.e1);
    case family_kind::double_run:
      return contains_double_run(w, f.n, f.e1, f.e2);
  }
  return std::nullopt;
}

struct family_match {
  family_id id;
  occurrence occ;
};

// First entry, in list order, that w contains.
inline std::optional<family_match> first_match(const word& w, std::span<const family_entry> entries) {
  for (const auto& e : entries)
    if (auto occ = contains_family_member(w, e.id)) return family_match{e.id, std::move(*occ)};
  return std::nullopt;
}

// Checks every entry, concurrently; result[i] corresponds to entries[i].
inline std::vector<std::optional<occurrence>> match_all(const word& w, std::span<const family_entry> entries) {
  std::vector<std::future<std::optional<occurrence>>> jobs;
  jobs.reserve(entries.size());
  for (const auto& e : entries)
    jobs.push_back(std::async(std::launch::async, [&w, id = e.id] { return contains_family_member(w, id); }));
  std::vector<std::optional<occurrence>> out;
  out.reserve(entries.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

inline std::optional<family_match> contains_any_family(const word& w, std::size_t n, std::size_t k) {
  return first_match(w, family(n, k));
}

}  // namespace repwords
