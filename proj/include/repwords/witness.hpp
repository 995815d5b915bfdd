#pragma once

// Constructive unavoidability: from any word with at least k·n⁶+1 repeats,
// extract an occurrence of one of the seven patterns of family(n, k).
//
// 1. A value with k+2 occurrences gives 0^{k+2}.
// 2. Otherwise at least n⁶+1 distinct values repeat. Keep the first n⁶+1 of
//    them (by first occurrence) and let w' be the subword of their first two
//    occurrences.
// 3. The first occurrences a_0..a_{n⁶} of w' contain a strictly monotone
//    a'_0..a'_{n³} (Erdős–Szekeres with r = s = n³).
// 4. For block j = (t-1)n², t = 1..n: if the second occurrences of
//    a'_j..a'_{j+n²} all come after the first occurrence of a'_{j+n²}, those
//    n²+1 second occurrences hold a monotone b'_0..b'_n, and the matching first
//    occurrences a''_0..a''_n followed by b' form a double run.
// 5. If no block qualifies, every block t has some i_t whose two
//    occurrences precede a'_{t n²}, and
//    a'_{i_1} a'_{i_1} ... a'_{i_n} a'_{i_n} a'_{n³} a'_{n³} is a doubled
//    monotone pattern.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "repwords/error.hpp"
#include "repwords/monotone.hpp"
#include "repwords/patterns.hpp"
#include "repwords/word.hpp"

namespace repwords {

// Step 1 fired.
struct constant_branch {};

// Step 4 fired on block j. Occurrences index into w'.
struct claim_branch {
  std::size_t t = 0;  // 1-based block number
  std::size_t j = 0;  // (t-1)n²
  occurrence b_occ;        // second occurrences of a'_j..a'_{j+n²}
  occurrence b_prime_occ;  // monotone, length n+1
  monotone_direction b_prime_direction = monotone_direction::nondecreasing;
  occurrence a_dd_occ;  // first occurrences of the values of b'
};

// Step 5 fired. i_t[t-1] indexes a' (0-based, like a'_0..a'_{n³}).
struct blocks_branch {
  std::vector<std::size_t> i_t;
};

struct witness_trace {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<letter> chosen_values;
  word w_prime;
  occurrence w_prime_positions;  // where each letter of w' sits in w
  occurrence a_occ;              // into w'
  occurrence a_prime_occ;        // into w', a sub-occurrence of a_occ
  monotone_direction a_prime_direction = monotone_direction::nondecreasing;
  std::variant<constant_branch, claim_branch, blocks_branch> branch;
  family_id result_id;
  occurrence result;  // into w
};

struct witness_result {
  family_id id;
  occurrence occ;
  witness_trace trace;
};

namespace detail {

inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned e) {
  std::uint64_t out = 1;
  while (e--) {
    if (base != 0 && out > UINT64_MAX / base) return std::nullopt;
    out *= base;
  }
  return out;
}

inline direction as_direction(monotone_direction d) {
  return d == monotone_direction::nondecreasing ? direction::id : direction::rev;
}

inline bool strictly_monotone(const std::vector<letter>& v, monotone_direction d) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (d == monotone_direction::nondecreasing && !(v[i - 1] < v[i])) return false;
    if (d == monotone_direction::nonincreasing && !(v[i - 1] > v[i])) return false;
  }
  return true;
}

inline std::vector<letter> values_at(const word& w, const occurrence& occ) { return subword(w, occ).vec(); }

inline occurrence map_through(const occurrence& inner, const occurrence& outer) {
  std::vector<std::size_t> idx;
  idx.reserve(inner.size());
  for (std::size_t i : inner) idx.push_back(outer[i - 1]);
  return occurrence(std::move(idx));
}

inline std::size_t required_repeats(std::size_t n, std::size_t k) {
  auto n6 = checked_pow(n, 6);
  if (!n6 || (k != 0 && *n6 > (UINT64_MAX - 1) / k))
    throw insufficient_repeats("extract_witness: k*n^6+1 does not fit in 64 bits");
  return static_cast<std::size_t>(k * *n6 + 1);
}

}  // namespace detail

inline witness_result extract_witness(const word& w, std::size_t n, std::size_t k = 1) {
  if (n == 0 || k == 0) throw precondition_error("extract_witness: n and k must be at least 1");
  const std::size_t needed = detail::required_repeats(n, k);
  const std::size_t have = repeats(w);
  if (have < needed)
    throw insufficient_repeats("extract_witness: word has " + std::to_string(have) +
                               " repeats, needs at least k*n^6+1 = " + std::to_string(needed));

  witness_trace tr;
  tr.n = n;
  tr.k = k;

  if (auto occ = contains_constant(w, k + 2)) {
    tr.branch = constant_branch{};
    tr.result_id = family_id::constant(k + 2);
    tr.result = *occ;
    return {tr.result_id, tr.result, std::move(tr)};
  }

  const std::size_t n2 = n * n, n3 = n2 * n, n6 = n3 * n3;

  // Step 2: the first n⁶+1 repeated values by first occurrence.
  std::map<letter, std::vector<std::size_t>> pos;
  std::vector<letter> by_first;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto& p = pos[w[i]];
    if (p.size() == 1) by_first.push_back(w[i]);  // becomes repeated here
    p.push_back(i + 1);
  }
  std::sort(by_first.begin(), by_first.end(), [&](letter x, letter y) { return pos[x][0] < pos[y][0]; });
  if (by_first.size() < n6 + 1)
    throw error("extract_witness: fewer than n^6+1 repeated values although no value occurs k+2 times");
  tr.chosen_values.assign(by_first.begin(), by_first.begin() + static_cast<std::ptrdiff_t>(n6 + 1));

  std::vector<std::size_t> wp;
  for (letter v : tr.chosen_values) {
    wp.push_back(pos[v][0]);
    wp.push_back(pos[v][1]);
  }
  std::sort(wp.begin(), wp.end());
  tr.w_prime_positions = occurrence(std::move(wp));
  tr.w_prime = subword(w, tr.w_prime_positions);

  // first / second occurrence of each value inside w'
  std::map<letter, std::size_t> first_in_wp, second_in_wp;
  std::vector<std::size_t> a_idx;
  for (std::size_t i = 0; i < tr.w_prime.size(); ++i) {
    const letter v = tr.w_prime[i];
    if (first_in_wp.emplace(v, i + 1).second)
      a_idx.push_back(i + 1);
    else
      second_in_wp[v] = i + 1;
  }
  tr.a_occ = occurrence(std::move(a_idx));

  // Step 3
  const auto a_values = detail::values_at(tr.w_prime, tr.a_occ);
  const auto es = es_extract(a_values, n3, n3);
  tr.a_prime_direction = es.direction;
  tr.a_prime_occ = detail::map_through(es.occ, tr.a_occ);
  const auto a_prime = detail::values_at(tr.w_prime, tr.a_prime_occ);
  if (!detail::strictly_monotone(a_prime, es.direction))
    throw error("extract_witness: a' is not strictly monotone (internal error)");

  auto fa = [&](std::size_t i) { return first_in_wp.at(a_prime[i]); };
  auto sa = [&](std::size_t i) { return second_in_wp.at(a_prime[i]); };

  // Step 4
  for (std::size_t t = 1; t <= n; ++t) {
    const std::size_t j = (t - 1) * n2;
    bool holds = true;
    for (std::size_t i = j; i <= j + n2 && holds; ++i) holds = sa(i) > fa(j + n2);
    if (!holds) continue;

    claim_branch cb;
    cb.t = t;
    cb.j = j;
    std::vector<std::size_t> b;
    for (std::size_t i = j; i <= j + n2; ++i) b.push_back(sa(i));
    std::sort(b.begin(), b.end());
    cb.b_occ = occurrence(std::move(b));
    const auto b_es = es_extract(detail::values_at(tr.w_prime, cb.b_occ), n, n);
    cb.b_prime_direction = b_es.direction;
    cb.b_prime_occ = detail::map_through(b_es.occ, cb.b_occ);
    std::vector<std::size_t> add;
    for (letter v : detail::values_at(tr.w_prime, cb.b_prime_occ)) add.push_back(first_in_wp.at(v));
    std::sort(add.begin(), add.end());
    cb.a_dd_occ = occurrence(std::move(add));

    std::vector<std::size_t> res(cb.a_dd_occ.begin(), cb.a_dd_occ.end());
    res.insert(res.end(), cb.b_prime_occ.begin(), cb.b_prime_occ.end());
    tr.result = detail::map_through(occurrence(std::move(res)), tr.w_prime_positions);
    tr.result_id =
        family_id::double_run(n, detail::as_direction(es.direction), detail::as_direction(b_es.direction));
    tr.branch = std::move(cb);
    return {tr.result_id, tr.result, std::move(tr)};
  }

  // Step 5
  blocks_branch bb;
  std::vector<std::size_t> res;
  for (std::size_t t = 1; t <= n; ++t) {
    std::optional<std::size_t> found;
    for (std::size_t i = (t - 1) * n2; i <= t * n2 - 1 && !found; ++i)
      if (sa(i) < fa(t * n2)) found = i;
    if (!found) throw error("extract_witness: block " + std::to_string(t) + " has no i_t (internal error)");
    bb.i_t.push_back(*found);
    res.push_back(fa(*found));
    res.push_back(sa(*found));
  }
  res.push_back(fa(n3));
  res.push_back(sa(n3));
  tr.result = detail::map_through(occurrence(std::move(res)), tr.w_prime_positions);
  tr.result_id = family_id::doubled(n, 2, detail::as_direction(es.direction));
  tr.branch = std::move(bb);
  return {tr.result_id, tr.result, std::move(tr)};
}

// Re-checks every property the trace claims against w.
inline bool validate_trace(const word& w, const witness_trace& tr) {
  try {
    const std::size_t n = tr.n, k = tr.k;
    if (n == 0 || k == 0) return false;
    if (!is_occurrence_of(w, tr.result, family_pattern(tr.result_id))) return false;

    if (std::holds_alternative<constant_branch>(tr.branch))
      return tr.result_id.kind == family_kind::constant && tr.result_id.mult == k + 2;

    if (tr.result_id.n != n) return false;
    if (contains_constant(w, k + 2)) return false;  // step 1 should have fired

    const std::size_t n2 = n * n, n3 = n2 * n, n6 = n3 * n3;
    const auto mult = w.multiplicities();

    // chosen values and w'
    if (tr.chosen_values.size() != n6 + 1) return false;
    std::set<letter> chosen(tr.chosen_values.begin(), tr.chosen_values.end());
    if (chosen.size() != tr.chosen_values.size()) return false;
    for (letter v : chosen)
      if (!mult.contains(v) || mult.at(v) < 2) return false;

    if (tr.w_prime.size() != 2 * (n6 + 1)) return false;
    if (!tr.w_prime_positions.is_valid_for(w.size()) || tr.w_prime_positions.size() != tr.w_prime.size())
      return false;
    if (subword(w, tr.w_prime_positions) != tr.w_prime) return false;
    std::map<letter, std::size_t> seen;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!chosen.contains(w[i])) continue;
      const bool in_wp = std::binary_search(tr.w_prime_positions.begin(), tr.w_prime_positions.end(), i + 1);
      if (in_wp != (seen[w[i]]++ < 2)) return false;
    }

    std::map<letter, std::size_t> first_in_wp, second_in_wp;
    for (std::size_t i = 0; i < tr.w_prime.size(); ++i)
      if (!first_in_wp.emplace(tr.w_prime[i], i + 1).second) second_in_wp[tr.w_prime[i]] = i + 1;
    std::vector<std::size_t> expected_a;
    for (const auto& [v, i] : first_in_wp) expected_a.push_back(i);
    std::sort(expected_a.begin(), expected_a.end());
    if (tr.a_occ.indices() != expected_a) return false;

    // a'
    if (tr.a_prime_occ.size() != n3 + 1 || !tr.a_prime_occ.is_valid_for(tr.w_prime.size())) return false;
    for (std::size_t i : tr.a_prime_occ)
      if (!std::binary_search(tr.a_occ.begin(), tr.a_occ.end(), i)) return false;
    const auto a_prime = detail::values_at(tr.w_prime, tr.a_prime_occ);
    if (!detail::strictly_monotone(a_prime, tr.a_prime_direction)) return false;
    auto fa = [&](std::size_t i) { return first_in_wp.at(a_prime[i]); };
    auto sa = [&](std::size_t i) { return second_in_wp.at(a_prime[i]); };

    if (const auto* cb = std::get_if<claim_branch>(&tr.branch)) {
      if (cb->t < 1 || cb->t > n || cb->j != (cb->t - 1) * n2 || cb->j + n2 > n3) return false;
      std::vector<std::size_t> b;
      for (std::size_t i = cb->j; i <= cb->j + n2; ++i) {
        if (!(sa(i) > fa(cb->j + n2))) return false;
        b.push_back(sa(i));
      }
      std::sort(b.begin(), b.end());
      if (cb->b_occ.indices() != b) return false;
      if (cb->b_prime_occ.size() != n + 1 || !cb->b_prime_occ.is_valid_for(tr.w_prime.size())) return false;
      for (std::size_t i : cb->b_prime_occ)
        if (!std::binary_search(b.begin(), b.end(), i)) return false;
      const auto b_prime = detail::values_at(tr.w_prime, cb->b_prime_occ);
      if (!detail::strictly_monotone(b_prime, cb->b_prime_direction)) return false;
      std::vector<std::size_t> add;
      for (letter v : b_prime) add.push_back(first_in_wp.at(v));
      std::sort(add.begin(), add.end());
      if (cb->a_dd_occ.indices() != add) return false;
      if (!detail::strictly_monotone(detail::values_at(tr.w_prime, cb->a_dd_occ), tr.a_prime_direction))
        return false;
      std::vector<std::size_t> res(add);
      res.insert(res.end(), cb->b_prime_occ.begin(), cb->b_prime_occ.end());
      if (detail::map_through(occurrence(res), tr.w_prime_positions) != tr.result) return false;
      return tr.result_id == family_id::double_run(n, detail::as_direction(tr.a_prime_direction),
                                                   detail::as_direction(cb->b_prime_direction));
    }

    const auto& bb = std::get<blocks_branch>(tr.branch);
    if (bb.i_t.size() != n) return false;
    std::vector<std::size_t> res;
    for (std::size_t t = 1; t <= n; ++t) {
      const std::size_t i = bb.i_t[t - 1];
      if (i < (t - 1) * n2 || i > t * n2 - 1) return false;
      if (!(sa(i) < fa(t * n2))) return false;
      res.push_back(fa(i));
      res.push_back(sa(i));
    }
    res.push_back(fa(n3));
    res.push_back(sa(n3));
    if (detail::map_through(occurrence(res), tr.w_prime_positions) != tr.result) return false;
    return tr.result_id == family_id::doubled(n, 2, detail::as_direction(tr.a_prime_direction));
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace repwords
