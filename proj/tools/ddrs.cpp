// Command-line front end: normalize, evaluate and convert terms, list
// redexes and weights, dump systems, run the verification suites, and
// replay recorded traces. Exit codes: 0 success, 1 failed checks or a
// trace that does not replay, 2 usage or parse errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ddrs/catalog.hpp"
#include "ddrs/rewrite.hpp"
#include "ddrs/semantics.hpp"
#include "ddrs/term.hpp"
#include "ddrs/verify.hpp"
#include "ddrs/weights.hpp"

namespace {

using namespace ddrs;

int fail_usage(const std::string& msg) {
  std::cerr << "ddrs: " << msg << "\n";
  return 2;
}

Style default_style(const Signature& sig) {
  return sig.unary_view() ? Style::Compact : Style::Minimal;
}

struct NormalizeArgs {
  std::string system;
  std::string strategy = "li";
  std::string style;
  std::string trace_path;
  std::uint64_t max_steps = NormalizeLimits{}.max_steps;
  std::string term;
};

int do_normalize(const NormalizeArgs& a) {
  const System& sys = get_system(a.system);
  const Term t = parse_term(a.term, sys.signature());
  const Strategy strategy = parse_strategy(a.strategy);
  const Style style =
      a.style.empty() ? default_style(sys.signature()) : parse_style(a.style);
  const Trace trace = normalize(sys, t, strategy, {a.max_steps});
  if (!a.trace_path.empty()) {
    std::ofstream out(a.trace_path);
    if (!out) return fail_usage("cannot write trace file " + a.trace_path);
    out << trace_to_jsonl(trace, sys.id());
  }
  std::cout << render_term(trace.final_term, style) << "\n";
  return 0;
}

Term parse_with_optional_system(const std::string& text,
                                const std::string& system) {
  if (system.empty()) return parse_term_any(text);
  return parse_term(text, get_system(system).signature());
}

int do_eval(const std::string& term, const std::string& system) {
  std::cout << eval_int(parse_with_optional_system(term, system)).str()
            << "\n";
  return 0;
}

int do_convert(const std::string& term, const std::string& system,
               const std::string& to, const std::string& style_name) {
  ViewKind kind;
  if (to == "ring")
    kind = ViewKind::Ring;
  else if (to == "unary")
    kind = ViewKind::Unary;
  else if (to == "successor")
    kind = ViewKind::Successor;
  else
    return fail_usage("unknown view: " + to +
                      " (valid: ring, unary, successor)");
  const Term t = parse_with_optional_system(term, system);
  const Term c = canonical_term(eval_int(t), View{kind, true});
  const Style style = style_name.empty()
                          ? (kind == ViewKind::Unary ? Style::Compact
                                                     : Style::Minimal)
                          : parse_style(style_name);
  std::cout << render_term(c, style) << "\n";
  return 0;
}

int do_redexes(const std::string& term, const std::string& system) {
  const System& sys = get_system(system);
  const Term t = parse_term(term, sys.signature());
  for (const Redex& r : find_redexes(sys, t))
    std::cout << r.pos.str() << " " << r.rule_id << "\n";
  return 0;
}

int do_weight(const std::string& term, const std::string& system) {
  const System& sys = get_system(system);
  const Term t = parse_term(term, sys.signature());
  const WeightValue w = term_weight(t, sys.weight_scheme());
  if (w.overflow)
    std::cout << "overflow\n";
  else
    std::cout << w.value.str() << "\n";
  return 0;
}

int do_show(const std::string& system) {
  if (system.empty()) {
    for (const SystemInfo& info : list_systems())
      std::cout << info.id << "  (" << info.signature << ", "
                << info.rule_count << " rules)  " << info.description << "\n";
    return 0;
  }
  const System& sys = get_system(system);
  std::cout << sys.id() << ": " << sys.description() << "\n";
  std::cout << "signature " << sys.signature().name() << ", weight scheme "
            << weight_scheme_name(sys.weight_scheme()) << ", "
            << sys.rule_count() << " rules\n";
  for (const Rule& r : sys.rules())
    std::cout << r.id << ": " << render_pattern(r.lhs) << " -> "
              << render_pattern(r.rhs) << "\n";
  return 0;
}

int do_check(const std::vector<std::string>& suites, SuiteConfig cfg,
             bool seed_given, const std::string& json_path) {
  if (!seed_given) {
    if (const char* env = std::getenv("DDRS_SEED")) {
      try {
        std::size_t used = 0;
        cfg.seed = std::stoull(env, &used);
        if (env[used] != '\0') throw std::invalid_argument(env);
      } catch (const std::exception&) {
        return fail_usage(std::string("DDRS_SEED is not an unsigned integer: ") +
                          env);
      }
    }
  }
  for (const std::string& id : cfg.systems)
    if (id == "all") {
      cfg.systems.clear();
      break;
    }
  std::vector<SuiteId> ids;
  for (const std::string& name : suites) {
    const auto id = parse_suite(name);
    if (!id)
      return fail_usage("unknown suite: " + name +
                        " (valid: soundness, termination, confluence, "
                        "determinism, characterization, fixtures)");
    ids.push_back(*id);
  }
  if (ids.empty()) ids = all_suites();
  const SuiteReport rep = run_suites(ids, cfg);
  std::cout << rep.to_text();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) return fail_usage("cannot write " + json_path);
    out << rep.to_json();
  }
  return rep.ok() ? 0 : 1;
}

int do_replay(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) return fail_usage("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const ParsedTrace trace = parse_trace_jsonl(text);
  get_system(trace.system_id);  // unknown system is a malformed trace
  try {
    const Term fin = replay_trace(trace);
    std::cout << render_term(fin) << "\n";
    return 0;
  } catch (const RewriteError& e) {
    std::cerr << "ddrs: replay failed: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"term rewriting workbench for integer arithmetic"};
  app.require_subcommand(1);

  NormalizeArgs na;
  CLI::App* cmd_normalize =
      app.add_subcommand("normalize", "reduce a term to its normal form");
  cmd_normalize->add_option("--system", na.system, "rewrite system id")
      ->required();
  cmd_normalize->add_option("--strategy", na.strategy,
                            "li (leftmost-innermost) or lo "
                            "(leftmost-outermost)");
  cmd_normalize->add_option("--style", na.style, "full, minimal or compact");
  cmd_normalize->add_option("--trace", na.trace_path,
                            "write a JSONL trace of the reduction");
  cmd_normalize->add_option("--max-steps", na.max_steps, "step budget");
  cmd_normalize->add_option("term", na.term, "term to reduce")->required();

  std::string e_term, e_system;
  CLI::App* cmd_eval =
      app.add_subcommand("eval", "print the integer value of a term");
  cmd_eval->add_option("--system", e_system,
                       "parse under this system's signature");
  cmd_eval->add_option("term", e_term, "term to evaluate")->required();

  std::string c_term, c_system, c_to, c_style;
  CLI::App* cmd_convert = app.add_subcommand(
      "convert", "print the canonical form of a term's value in a view");
  cmd_convert->add_option("--to", c_to, "target view: ring, unary, successor")
      ->required();
  cmd_convert->add_option("--system", c_system,
                          "parse under this system's signature");
  cmd_convert->add_option("--style", c_style, "full, minimal or compact");
  cmd_convert->add_option("term", c_term, "term to convert")->required();

  std::string r_term, r_system;
  CLI::App* cmd_redexes =
      app.add_subcommand("redexes", "list the redexes of a term");
  cmd_redexes->add_option("--system", r_system, "rewrite system id")
      ->required();
  cmd_redexes->add_option("term", r_term, "term to inspect")->required();

  std::string w_term, w_system;
  CLI::App* cmd_weight =
      app.add_subcommand("weight", "print the termination weight of a term");
  cmd_weight->add_option("--system", w_system, "rewrite system id")
      ->required();
  cmd_weight->add_option("term", w_term, "term to weigh")->required();

  std::string s_system;
  CLI::App* cmd_show = app.add_subcommand(
      "show", "print a system's rules (no argument: list the catalog)");
  cmd_show->add_option("system", s_system, "system id");

  SuiteConfig cfg;
  std::vector<std::string> k_suites;
  std::string k_json;
  CLI::App* cmd_check =
      app.add_subcommand("check", "run the verification suites");
  cmd_check->add_option("--system", cfg.systems,
                        "restrict to these systems (repeatable)");
  cmd_check->add_option("--suite", k_suites,
                        "suites to run (repeatable; default all)");
  CLI::Option* seed_opt =
      cmd_check->add_option("--seed", cfg.seed, "random seed (default 42, or "
                                                "DDRS_SEED when set)");
  cmd_check->add_option("--max-size", cfg.max_size,
                        "exhaustive enumeration bound");
  cmd_check->add_option("--samples", cfg.random_samples,
                        "random terms per system");
  cmd_check->add_option("--max-steps", cfg.max_steps,
                        "per-normalization step budget");
  cmd_check->add_option("--json", k_json, "also write a JSON report here");

  std::string p_path;
  CLI::App* cmd_replay =
      app.add_subcommand("replay", "re-run a JSONL trace and verify it");
  cmd_replay->add_option("file", p_path, "trace file (- for stdin)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_normalize)) return do_normalize(na);
    if (app.got_subcommand(cmd_eval)) return do_eval(e_term, e_system);
    if (app.got_subcommand(cmd_convert))
      return do_convert(c_term, c_system, c_to, c_style);
    if (app.got_subcommand(cmd_redexes)) return do_redexes(r_term, r_system);
    if (app.got_subcommand(cmd_weight)) return do_weight(w_term, w_system);
    if (app.got_subcommand(cmd_show)) return do_show(s_system);
    if (app.got_subcommand(cmd_check))
      return do_check(k_suites, cfg, seed_opt->count() > 0, k_json);
    if (app.got_subcommand(cmd_replay)) return do_replay(p_path);
  } catch (const StepLimitError& e) {
    std::cerr << "ddrs: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "ddrs: " << e.what() << "\n";
    return 2;
  }
  return fail_usage("no command given");
}
