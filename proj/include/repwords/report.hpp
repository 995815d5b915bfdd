#pragma once

// JSON and key=value renderings of reports and witness traces.

#include <cmath>
#include <string>
#include <variant>

#include "json.hpp"
#include "repwords/construction.hpp"
#include "repwords/witness.hpp"
#include "repwords/word.hpp"

namespace repwords {

using json = nlohmann::json;

inline json to_json(const occurrence& occ) { return json(occ.indices()); }

// Fixed key set: avoided, elapsed_ms, length, multiplicity_ok, repeats.
inline json to_json(const verify_report& r) {
  json avoided = json::object();
  for (const auto& [entry, absent] : r.avoided) avoided[to_string(entry.id)] = absent;
  return json{{"length", r.length},
              {"repeats", r.repeats},
              {"multiplicity_ok", r.multiplicity_ok},
              {"avoided", avoided},
              {"elapsed_ms", static_cast<long long>(std::llround(r.elapsed_ms))}};
}

inline std::string to_text(const verify_report& r) {
  std::string out = "length=" + std::to_string(r.length) + " repeats=" + std::to_string(r.repeats) +
                    " multiplicity_ok=" + (r.multiplicity_ok ? "true" : "false");
  if (r.all_avoided()) {
    out += " avoided=all";
  } else {
    std::string found;
    for (const auto& [entry, absent] : r.avoided)
      if (!absent) found += (found.empty() ? "" : ",") + to_string(entry.id);
    out += " contained=" + found;
  }
  out += " elapsed_ms=" + std::to_string(std::llround(r.elapsed_ms));
  return out;
}

inline json to_json(const q_lemma_report& r) {
  json absent = json::object();
  for (const auto& [entry, ok] : r.checks) absent[to_string(entry.pat)] = ok;
  return json{{"n", r.n}, {"k", r.k}, {"absent", absent}, {"all_absent", r.all_absent()}};
}

inline json to_json(const witness_trace& tr) {
  json j{{"n", tr.n},
         {"k", tr.k},
         {"result", {{"family", to_string(tr.result_id)}, {"occurrence", to_json(tr.result)}}}};
  if (std::holds_alternative<constant_branch>(tr.branch)) {
    j["branch"] = "constant";
    return j;
  }
  j["chosen_values"] = tr.chosen_values;
  j["w_prime"] = to_string(tr.w_prime, word_format::separated);
  j["w_prime_positions"] = to_json(tr.w_prime_positions);
  j["a_occ"] = to_json(tr.a_occ);
  j["a_prime_occ"] = to_json(tr.a_prime_occ);
  j["a_prime_direction"] = to_string(tr.a_prime_direction);
  if (const auto* cb = std::get_if<claim_branch>(&tr.branch)) {
    j["branch"] = "claim";
    j["t"] = cb->t;
    j["j"] = cb->j;
    j["b_occ"] = to_json(cb->b_occ);
    j["b_prime_occ"] = to_json(cb->b_prime_occ);
    j["b_prime_direction"] = to_string(cb->b_prime_direction);
    j["a_dd_occ"] = to_json(cb->a_dd_occ);
  } else {
    j["branch"] = "blocks";
    j["i_t"] = std::get<blocks_branch>(tr.branch).i_t;
  }
  return j;
}

}  // namespace repwords
