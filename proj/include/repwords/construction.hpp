#pragma once

// The extremal word s = (q^{⊕n})^{⊖n} with q = p^{⊖n²} · (r^{⊖n})^{⊕n},
// r = t^{⊖n}, p = 12⋯n² and t = 1^k 2^k ⋯ n^k. Every value of s occurs
// exactly k+1 times, so s has k·n⁶ repeats, and s avoids all seven patterns
// of construction_family(n, k).

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "repwords/algebra.hpp"
#include "repwords/error.hpp"
#include "repwords/monotone.hpp"
#include "repwords/patterns.hpp"
#include "repwords/word.hpp"

namespace repwords {

struct construction_parts {
  std::size_t n = 0;
  std::size_t k = 0;
  word p, t, r, r_prime, q, s;
};

namespace detail {

inline std::size_t ipow(std::size_t base, unsigned e) {
  std::size_t out = 1;
  while (e--) out *= base;
  return out;
}

inline void require_parameters(std::size_t n, std::size_t k, const char* op) {
  if (n == 0 || k == 0) throw precondition_error(std::string(op) + ": n and k must be at least 1");
}

// 1^k 2^k ... n^k
inline word stuttered_run(std::size_t n, std::size_t k) {
  std::vector<letter> t;
  for (std::size_t v = 1; v <= n; ++v) t.insert(t.end(), k, v);
  return word(std::move(t));
}

}  // namespace detail

inline construction_parts build(std::size_t n, std::size_t k = 1) {
  detail::require_parameters(n, k, "build");
  construction_parts c;
  c.n = n;
  c.k = k;

  std::vector<letter> p;
  for (std::size_t v = 1; v <= n * n; ++v) p.push_back(v);
  c.p = word(std::move(p));
  c.t = detail::stuttered_run(n, k);
  c.r = skew_power(c.t, n);
  c.r_prime = direct_power(skew_power(c.r, n), n);
  c.q = concat(skew_power(c.p, n * n), c.r_prime);
  c.s = skew_power(direct_power(c.q, n), n);
  return c;
}

inline constexpr std::uint64_t default_guard = 100000;

struct verify_report {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t length = 0;
  std::size_t repeats = 0;
  bool multiplicity_ok = false;
  // one entry per pattern of construction_family(n, k), true when absent
  std::vector<std::pair<family_entry, bool>> avoided;
  double elapsed_ms = 0;

  bool all_avoided() const {
    for (const auto& [entry, absent] : avoided)
      if (!absent) return false;
    return true;
  }
  bool ok() const { return multiplicity_ok && all_avoided(); }
};

namespace detail {

inline void check_guard(std::size_t n, std::size_t k, std::uint64_t guard, const char* op) {
  const std::uint64_t size = static_cast<std::uint64_t>(k + 1) * ipow(n, 6);
  if (size > guard)
    throw size_error(std::string(op) + ": construction length " + std::to_string(size) + " exceeds guard " +
                     std::to_string(guard) + " (raise it with REPEATS_GUARD or --guard)");
}

inline bool every_value_occurs(const word& w, std::size_t times) {
  for (const auto& [value, count] : w.multiplicities())
    if (count != times) return false;
  return true;
}

}  // namespace detail

// Builds s and checks it against every pattern of construction_family(n, k)
// with the polynomial checkers.
inline verify_report verify(std::size_t n, std::size_t k = 1, std::uint64_t guard = default_guard) {
  detail::require_parameters(n, k, "verify");
  detail::check_guard(n, k, guard, "verify");
  const auto start = std::chrono::steady_clock::now();

  const auto parts = build(n, k);
  verify_report rep;
  rep.n = n;
  rep.k = k;
  rep.length = parts.s.size();
  rep.repeats = repeats(parts.s);
  rep.multiplicity_ok = detail::every_value_occurs(parts.s, k + 1);

  const auto fam = construction_family(n, k);
  const auto found = match_all(parts.s, fam);
  for (std::size_t i = 0; i < fam.size(); ++i) rep.avoided.emplace_back(fam[i], !found[i].has_value());

  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

struct q_lemma_report {
  std::size_t n = 0;
  std::size_t k = 0;
  // (pattern, absent from q)
  std::vector<std::pair<family_entry, bool>> checks;

  bool all_absent() const {
    for (const auto& [entry, absent] : checks)
      if (!absent) return false;
    return true;
  }
};

// q against 0^{k+2}, 0^{k+1}1^{k+1} and its reverse, and the four double
// runs on n+1 values. For k > 1 this is the natural generalisation and a
// failure is reported, not thrown.
inline q_lemma_report verify_q_lemma(std::size_t n, std::size_t k = 1, std::uint64_t guard = default_guard) {
  detail::require_parameters(n, k, "verify_q_lemma");
  detail::check_guard(n, k, guard, "verify_q_lemma");
  const auto parts = build(n, k);

  std::vector<family_id> ids{family_id::constant(k + 2), family_id::doubled(1, k + 1, direction::id),
                             family_id::doubled(1, k + 1, direction::rev)};
  detail::push_double_runs(ids, n);
  const auto fam = detail::dedupe(ids);
  const auto found = match_all(parts.q, fam);

  q_lemma_report rep;
  rep.n = n;
  rep.k = k;
  for (std::size_t i = 0; i < fam.size(); ++i) rep.checks.emplace_back(fam[i], !found[i].has_value());
  return rep;
}

struct monotone_lengths {
  std::size_t nondecreasing = 0;
  std::size_t nonincreasing = 0;
  std::size_t max() const { return nondecreasing > nonincreasing ? nondecreasing : nonincreasing; }
};

// Longest monotone subwords of r in each direction.
inline monotone_lengths max_monotone_of_r(std::size_t n, std::size_t k = 1) {
  detail::require_parameters(n, k, "max_monotone_of_r");
  const word r = skew_power(detail::stuttered_run(n, k), n);
  return {longest_nondecreasing(r).size(), longest_nonincreasing(r).size()};
}

}  // namespace repwords
