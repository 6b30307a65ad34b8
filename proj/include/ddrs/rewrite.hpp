#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ddrs/term.hpp"

namespace ddrs {

class System;  // catalog.hpp

/// A term pattern: the term constructors plus named variables.
class Pattern {
 public:
  static Pattern var(std::string name);
  static Pattern op(Sym s, const std::vector<Pattern>& children);

  bool is_var() const { return node_->is_var; }
  const std::string& var_name() const { return node_->var; }
  Sym sym() const { return node_->sym; }
  int num_children() const { return node_->is_var ? 0 : arity(node_->sym); }
  Pattern child(int i) const;  // 0-based
  std::uint32_t size() const { return node_->size; }

  bool operator==(const Pattern& o) const;
  bool operator!=(const Pattern& o) const { return !(*this == o); }

  // Variable names in first-occurrence order (depth-first).
  std::vector<std::string> variables() const;
  // No variable occurs twice.
  bool is_linear() const;
  bool signature_valid(const Signature& sig) const;
  // Same shape with every `from` node replaced by `to`.
  Pattern rename_sym(Sym from, Sym to) const;

 private:
  struct Node {
    bool is_var;
    Sym sym;
    std::string var;
    std::uint32_t size;
    std::shared_ptr<const Node> kid[2];
  };
  explicit Pattern(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Pattern parse_pattern(std::string_view text, const Signature& sig);

// Reparsable display form in the style of the rule tables: compound
// operands of binary and prefix operators are parenthesized.
std::string render_pattern(const Pattern& p);

/// An oriented rewrite rule lhs -> rhs. Catalog rules satisfy
/// vars(rhs) subset-of vars(lhs), lhs not a lone variable, left-linear.
struct Rule {
  std::string id;
  Pattern lhs;
  Pattern rhs;
};

using Binding = std::map<std::string, Term>;

std::string render_binding(const Binding& b);

// First-order matching of a pattern against a ground term. Returns the
// unique binding with p[binding] == t, or nullopt.
std::optional<Binding> match_pattern(const Pattern& p, const Term& t);

// Throws RewriteError if a variable of p is unbound in b.
Term instantiate(const Pattern& p, const Binding& b);

struct Redex {
  Position pos;
  std::string rule_id;
  bool operator==(const Redex& o) const {
    return pos == o.pos && rule_id == o.rule_id;
  }
};

std::string render_redexes(const std::vector<Redex>& rs);

struct StepRecord {
  std::string rule_id;
  Position pos;
  Term before;
  Term after;
};

struct Trace {
  Term initial;
  std::vector<StepRecord> steps;
  Term final_term;
};

enum class Strategy : std::uint8_t {
  LeftmostInnermost,  // deepest redex, leftmost among equally deep
  LeftmostOutermost,  // shallowest redex, leftmost among equally shallow
};

Strategy parse_strategy(std::string_view name);

struct RewriteError : std::runtime_error {
  explicit RewriteError(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnknownRuleError : RewriteError {
  explicit UnknownRuleError(const std::string& msg) : RewriteError(msg) {}
};

struct StepLimitError : std::runtime_error {
  explicit StepLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NormalizeLimits {
  std::uint64_t max_steps = 1'000'000;
};

// Applies the named rule at position p. Throws UnknownRuleError,
// PositionError, or RewriteError (no match).
Term rewrite_at(const System& sys, const Term& t, const Position& p,
                std::string_view rule_id);

// All redexes of t, ordered by position (pre-order), then by rule order
// in the system. Empty iff t is a normal form.
std::vector<Redex> find_redexes(const System& sys, const Term& t);

// The strategy-selected step, or nullopt when t is a normal form.
// Ties among rules at one position follow catalog rule order.
std::optional<StepRecord> step(const System& sys, const Term& t, Strategy strategy);

// Iterates `step` to a normal form. The returned trace carries the
// normal form as final_term. Throws StepLimitError past limits.max_steps.
Trace normalize(const System& sys, const Term& t,
                Strategy strategy = Strategy::LeftmostInnermost,
                NormalizeLimits limits = {});

// The set of one-step reducts of t (deduplicated terms).
std::set<Term, TermLess> all_one_step_reducts(const System& sys, const Term& t);

// JSON-lines trace serialization: a header {"initial","system"} line,
// one {"step","rule","pos","from","to"} line per step (minimal render),
// and a {"final","steps"} footer.
std::string trace_to_jsonl(const Trace& trace, const std::string& system_id);

struct TraceLine {
  std::size_t step = 0;
  std::string rule;
  std::string pos;
  std::string from;
  std::string to;
};

struct ParsedTrace {
  std::string system_id;
  std::string initial;
  std::vector<TraceLine> steps;
  std::string final_text;
  std::size_t declared_steps = 0;
};

// Parses the JSON-lines format produced by trace_to_jsonl. Throws
// ParseError on malformed input.
ParsedTrace parse_trace_jsonl(std::string_view text);

// Replays a parsed trace against its system via rewrite_at, checking
// every step and the footer. Returns the final term; throws
// RewriteError on any mismatch.
Term replay_trace(const ParsedTrace& trace);

}  // namespace ddrs
