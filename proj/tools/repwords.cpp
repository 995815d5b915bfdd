// repwords: command-line front end for the repwords library.
//
// Exit codes: 0 success, 1 domain failure (pattern absent, verification
// failed, guard exceeded, too few repeats, combinator precondition),
// 2 usage error (bad flags, malformed word or pattern).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "repwords/repwords.hpp"
#include "repwords/report.hpp"

namespace {

using namespace repwords;

constexpr int exit_domain = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

word read_word(const std::string& arg) {
  if (arg == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_word(text);
  }
  return parse_word(arg);
}

pattern read_pattern(const std::string& arg) {
  word w = parse_word(arg);
  if (w.empty()) throw usage_error("pattern must be nonempty");
  if (!is_standardised(w)) throw usage_error("pattern '" + arg + "' is not standardised (letters must be 0..m)");
  return pattern(std::move(w));
}

std::uint64_t guard_or(std::optional<std::uint64_t> flag, std::uint64_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("REPEATS_GUARD")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw usage_error(std::string("REPEATS_GUARD is not a number: ") + env);
    }
  }
  return fallback;
}

// Emits one word per line to --out, or stdout.
class word_sink {
 public:
  explicit word_sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw usage_error("cannot open " + path + " for writing");
    }
  }
  void operator()(const word& w) { (file_.is_open() ? file_ : std::cout) << to_string(w) << '\n'; }

 private:
  std::ofstream file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern containment, extremal construction and unavoidable-pattern witnesses for words"};
  app.require_subcommand(1);
  int status = 0;

  // std / repeats / render
  std::string word_arg;
  auto* std_cmd = app.add_subcommand("std", "Print the standardisation of a word");
  std_cmd->add_option("word", word_arg, "Word")->required();
  std_cmd->callback([&] { std::cout << to_string(standardise(read_word(word_arg))) << '\n'; });

  auto* rep_cmd = app.add_subcommand("repeats", "Print the number of repeats of a word");
  rep_cmd->add_option("word", word_arg, "Word")->required();
  rep_cmd->callback([&] { std::cout << repeats(read_word(word_arg)) << '\n'; });

  auto* render_cmd = app.add_subcommand("render", "Plot a word on a grid");
  render_cmd->add_option("word", word_arg, "Word")->required();
  render_cmd->callback([&] { std::cout << render_grid(read_word(word_arg)); });

  // contains
  std::string pattern_arg;
  bool show_occ = false;
  auto* contains_cmd = app.add_subcommand("contains", "Test pattern containment (exit 1 when absent)");
  contains_cmd->add_option("word", word_arg, "Host word")->required();
  contains_cmd->add_option("pattern", pattern_arg, "Pattern (standardised)")->required();
  contains_cmd->add_flag("--occurrence", show_occ, "Print the least occurrence");
  contains_cmd->callback([&] {
    const word w = read_word(word_arg);
    const pattern p = read_pattern(pattern_arg);
    if (auto occ = contains(w, p)) {
      std::cout << "contains";
      if (show_occ) std::cout << ' ' << to_string(*occ);
      std::cout << '\n';
    } else {
      std::cout << "avoids\n";
      status = exit_domain;
    }
  });

  // algebra
  auto* alg_cmd = app.add_subcommand("algebra", "Word combinators");
  alg_cmd->require_subcommand(1);
  std::string left_arg, right_arg;
  std::size_t power = 0;
  auto binary = [&](const char* name, const char* help, word (*op)(const word&, const word&)) {
    auto* c = alg_cmd->add_subcommand(name, help);
    c->add_option("left", left_arg, "Left operand")->required();
    c->add_option("right", right_arg, "Right operand")->required();
    c->callback([&, op] { std::cout << to_string(op(read_word(left_arg), read_word(right_arg))) << '\n'; });
  };
  auto unary = [&](const char* name, const char* help, word (*op)(const word&, std::size_t)) {
    auto* c = alg_cmd->add_subcommand(name, help);
    c->add_option("word", left_arg, "Word")->required();
    c->add_option("m", power, "Number of copies")->required();
    c->callback([&, op] { std::cout << to_string(op(read_word(left_arg), power)) << '\n'; });
  };
  binary("concat", "Concatenation", &concat);
  binary("dsum", "Direct sum", &direct_sum);
  binary("ssum", "Skew sum", &skew_sum);
  unary("dpow", "Direct sum of m copies", &direct_power);
  unary("spow", "Skew sum of m copies", &skew_power);

  // construct
  std::size_t n = 0, k = 1;
  std::string part = "s";
  auto* con_cmd = app.add_subcommand("construct", "Emit a word of the extremal construction");
  con_cmd->add_option("--n", n, "n")->required();
  con_cmd->add_option("--k", k, "k")->capture_default_str();
  con_cmd->add_option("--part", part, "Which word")
      ->check(CLI::IsMember({"p", "t", "r", "rprime", "q", "s"}))
      ->capture_default_str();
  con_cmd->callback([&] {
    const auto c = build(n, k);
    const word& w = part == "p" ? c.p : part == "t" ? c.t : part == "r" ? c.r : part == "rprime" ? c.r_prime
                  : part == "q" ? c.q : c.s;
    std::cout << to_string(w, word_format::separated) << '\n';
  });

  // verify
  bool as_json = false;
  std::optional<std::uint64_t> guard;
  auto* ver_cmd = app.add_subcommand("verify", "Check that the construction avoids all seven patterns");
  ver_cmd->add_option("--n", n, "n")->required();
  ver_cmd->add_option("--k", k, "k")->capture_default_str();
  ver_cmd->add_flag("--json", as_json, "JSON report");
  ver_cmd->add_option("--guard", guard, "Maximum construction length (default 100000)");
  ver_cmd->callback([&] {
    const auto rep = verify(n, k, guard_or(guard, default_guard));
    std::cout << (as_json ? to_json(rep).dump(2) : to_text(rep)) << '\n';
    if (!rep.ok()) status = exit_domain;
  });

  // witness
  bool show_trace = false;
  auto* wit_cmd = app.add_subcommand("witness", "Extract one of the seven patterns from a word with enough repeats");
  wit_cmd->add_option("--n", n, "n")->required();
  wit_cmd->add_option("--k", k, "k")->capture_default_str();
  wit_cmd->add_flag("--trace", show_trace, "Also print the proof trace as JSON");
  wit_cmd->add_option("word", word_arg, "Word, or - for standard input")->required();
  wit_cmd->callback([&] {
    const word w = read_word(word_arg);
    const auto res = extract_witness(w, n, k);
    std::cout << to_string(res.id) << ' ' << to_string(res.occ) << '\n';
    if (show_trace) std::cout << to_json(res.trace).dump(2) << '\n';
  });

  // oracle
  auto* orc_cmd = app.add_subcommand("oracle", "Brute-force enumeration and search");
  orc_cmd->require_subcommand(1);
  std::string out_path;
  std::size_t len = 0, values = 0, mult = 0, max_values = 0;

  auto* cay = orc_cmd->add_subcommand("cayley", "All standardised words of a given length");
  cay->add_option("--len", len, "Length")->required();
  cay->add_option("--out", out_path, "Write words to this file");
  cay->add_option("--guard", guard, "Maximum length (default 10)");
  cay->callback([&] {
    word_sink sink(out_path);
    oracle::for_each_cayley(len, std::ref(sink), guard_or(guard, oracle::default_cayley_guard));
  });

  auto* bal = orc_cmd->add_subcommand("balanced", "All arrangements of 1^M 2^M ... V^M");
  bal->add_option("--values", values, "V")->required();
  bal->add_option("--mult", mult, "M")->required();
  bal->add_option("--out", out_path, "Write words to this file");
  bal->add_option("--guard", guard, "Maximum length (default 16)");
  bal->callback([&] {
    word_sink sink(out_path);
    oracle::for_each_balanced(values, mult, std::ref(sink), guard_or(guard, oracle::default_balanced_guard));
  });

  auto* mr = orc_cmd->add_subcommand("max-repeats", "Most repeats of a word avoiding the seven patterns");
  mr->add_option("--n", n, "n")->required();
  mr->add_option("--k", k, "k")->required();
  mr->add_option("--max-values", max_values, "Distinct values searched")->required();
  mr->add_option("--guard", guard, "Maximum word length searched (default 12)");
  mr->callback([&] {
    const auto res = oracle::max_repeats_avoiding(n, k, max_values, guard_or(guard, oracle::default_search_guard));
    std::cout << "max_repeats=" << res.max_repeats << " witness=" << to_string(*res.witness)
              << " words_checked=" << res.words_checked << " (over words with at most " << max_values
              << " distinct values)\n";
  });

  auto* bc = orc_cmd->add_subcommand("balanced-check", "Exhaustive check over words with k+1 copies of each value");
  bc->add_option("--n", n, "n")->required();
  bc->add_option("--k", k, "k")->required();
  bc->add_option("--guard", guard, "Maximum word length (default 16)");
  bc->callback([&] {
    const auto res = oracle::check_unavoidability_balanced(n, k, guard_or(guard, oracle::default_balanced_guard));
    std::cout << "holds=" << (res.holds ? "true" : "false") << " words=" << res.words_checked;
    if (res.counterexample) std::cout << " counterexample=" << to_string(*res.counterexample);
    std::cout << '\n';
    if (!res.holds) status = exit_domain;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const repwords::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_domain;
  }
  return status;
}
