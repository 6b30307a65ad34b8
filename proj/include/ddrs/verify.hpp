#pragma once

// The verification workbench: batched evidence that each catalog system
// is terminating, ground-confluent and computes integer arithmetic.
// Suites are pure functions of their configuration — reports carry no
// timing or environment data, so identical config and seed reproduce
// identical bytes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ddrs/catalog.hpp"
#include "ddrs/report.hpp"
#include "ddrs/rewrite.hpp"
#include "ddrs/term.hpp"

namespace ddrs {

// One-step reachability search from `t`, following every redex of
// every state. Collects the normal forms reached; `truncated` is set
// when the state cap stopped the search early.
struct ConfluenceReport {
  std::set<Term, TermLess> normal_forms;
  std::size_t states_explored = 0;
  bool truncated = false;
};

ConfluenceReport bfs_normal_forms(const System& sys, const Term& t,
                                  std::size_t max_states = 4'000'000);

// Follows the reduction of `t` while every state has exactly one
// redex. Succeeds when a normal form is reached that way; otherwise
// records the first state exposing zero-or-several choices.
struct DeterminismReport {
  bool deterministic = true;
  Trace path;  // complete reduction when deterministic
  std::optional<Term> branch_state;
  std::vector<Redex> branch_redexes;
};

DeterminismReport deterministic_path(const System& sys, const Term& t);

enum class SuiteId {
  Soundness,         // rules preserve integer value on random instances
  Termination,       // weights strictly decrease across every one-step reduct
  Confluence,        // every reduction path reaches the same normal form
  Determinism,       // sums/products of canonical forms reduce choice-free
  Characterization,  // normal forms are exactly the canonical value terms
  Fixtures,          // recorded reduction branches replay step for step
};

const char* suite_name(SuiteId id);
std::optional<SuiteId> parse_suite(std::string_view name);
std::vector<SuiteId> all_suites();

struct SuiteConfig {
  std::vector<std::string> systems;  // empty = whole catalog
  std::uint64_t seed = 42;

  std::size_t max_size = 7;           // exhaustive enumeration bound
  std::size_t random_samples = 500;   // extra sampled terms per system
  std::size_t random_min_size = 8;    // sampled term sizes (inclusive)
  std::size_t random_max_size = 12;
  std::size_t max_product_depth = 3;  // nesting cap for sampled products

  std::size_t soundness_samples = 200;  // instances per rule
  std::size_t confluence_max_states = 4'000'000;
  std::size_t determinism_ring_bound = 25;   // canonical arguments 0..bound
  std::size_t determinism_unary_bound = 12;
  std::size_t max_steps = 1'000'000;  // per-normalization step budget
};

struct SuiteRun {
  std::string suite;
  std::string system;  // empty for catalog-wide checks
  Report report;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<SuiteRun> runs;

  bool ok() const;
  std::size_t checks() const;
  std::size_t failures() const;

  // Human-readable summary: one line per check, one block per run.
  std::string to_text() const;
  // Machine-readable form with fixed key order; byte-identical across
  // runs with the same config and seed.
  std::string to_json() const;
};

SuiteReport run_suite(SuiteId id, const SuiteConfig& config);
SuiteReport run_suites(const std::vector<SuiteId>& ids,
                       const SuiteConfig& config);

}  // namespace ddrs
