#include "ddrs/rewrite.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <utility>

#include "ddrs/catalog.hpp"

namespace ddrs {

// ---------------------------------------------------------------------------
// Pattern

Pattern Pattern::var(std::string name) {
  auto node = std::make_shared<Node>();
  node->is_var = true;
  node->sym = Sym::Zero;  // unused
  node->var = std::move(name);
  node->size = 1;
  return Pattern(std::move(node));
}

Pattern Pattern::op(Sym s, const std::vector<Pattern>& children) {
  if (static_cast<int>(children.size()) != arity(s))
    throw std::invalid_argument("pattern: wrong number of children for " +
                                std::string(sym_name(s)));
  auto node = std::make_shared<Node>();
  node->is_var = false;
  node->sym = s;
  node->size = 1;
  for (std::size_t i = 0; i < children.size(); ++i) {
    node->size += children[i].node_->size;
    node->kid[i] = children[i].node_;
  }
  return Pattern(std::move(node));
}

Pattern Pattern::child(int i) const {
  if (i < 0 || i >= num_children())
    throw std::out_of_range("pattern child index out of range");
  return Pattern(node_->kid[i]);
}

bool Pattern::operator==(const Pattern& o) const {
  if (node_.get() == o.node_.get()) return true;
  if (node_->is_var != o.node_->is_var) return false;
  if (node_->is_var) return node_->var == o.node_->var;
  if (node_->sym != o.node_->sym) return false;
  for (int i = 0; i < num_children(); ++i)
    if (!(child(i) == o.child(i))) return false;
  return true;
}

static void collect_vars(const Pattern& p, std::vector<std::string>& out) {
  if (p.is_var()) {
    for (const auto& seen : out)
      if (seen == p.var_name()) return;
    out.push_back(p.var_name());
    return;
  }
  for (int i = 0; i < p.num_children(); ++i) collect_vars(p.child(i), out);
}

std::vector<std::string> Pattern::variables() const {
  std::vector<std::string> out;
  collect_vars(*this, out);
  return out;
}

static std::size_t count_var_occurrences(const Pattern& p) {
  if (p.is_var()) return 1;
  std::size_t n = 0;
  for (int i = 0; i < p.num_children(); ++i)
    n += count_var_occurrences(p.child(i));
  return n;
}

bool Pattern::is_linear() const {
  return count_var_occurrences(*this) == variables().size();
}

bool Pattern::signature_valid(const Signature& sig) const {
  if (is_var()) return true;
  if (!sig.contains(sym())) return false;
  for (int i = 0; i < num_children(); ++i)
    if (!child(i).signature_valid(sig)) return false;
  return true;
}

Pattern Pattern::rename_sym(Sym from, Sym to) const {
  if (is_var()) return *this;
  std::vector<Pattern> kids;
  for (int i = 0; i < num_children(); ++i)
    kids.push_back(child(i).rename_sym(from, to));
  return op(sym() == from ? to : sym(), kids);
}

// ---------------------------------------------------------------------------
// Matching and instantiation

static bool match_into(const Pattern& p, const Term& t, Binding& b) {
  if (p.is_var()) {
    auto [it, inserted] = b.emplace(p.var_name(), t);
    return inserted || it->second == t;
  }
  if (p.sym() != t.sym()) return false;
  for (int i = 0; i < p.num_children(); ++i)
    if (!match_into(p.child(i), t.child(i), b)) return false;
  return true;
}

std::optional<Binding> match_pattern(const Pattern& p, const Term& t) {
  Binding b;
  if (!match_into(p, t, b)) return std::nullopt;
  return b;
}

Term instantiate(const Pattern& p, const Binding& b) {
  if (p.is_var()) {
    auto it = b.find(p.var_name());
    if (it == b.end())
      throw RewriteError("unbound variable '" + p.var_name() +
                         "' while instantiating pattern " + render_pattern(p));
    return it->second;
  }
  std::vector<Term> kids;
  for (int i = 0; i < p.num_children(); ++i)
    kids.push_back(instantiate(p.child(i), b));
  return Term::make(p.sym(), kids);
}

std::string render_binding(const Binding& b) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, t] : b) {
    if (!first) out += ", ";
    first = false;
    out += name + " -> " + render_term(t);
  }
  return out + "}";
}

std::string render_redexes(const std::vector<Redex>& rs) {
  std::string out = "[";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) out += ",";
    out += "(" + rs[i].pos.str() + "," + rs[i].rule_id + ")";
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Rewriting

Strategy parse_strategy(std::string_view name) {
  if (name == "li" || name == "leftmost-innermost")
    return Strategy::LeftmostInnermost;
  if (name == "lo" || name == "leftmost-outermost")
    return Strategy::LeftmostOutermost;
  throw std::invalid_argument("unknown strategy '" + std::string(name) +
                              "' (expected li or lo)");
}

Term rewrite_at(const System& sys, const Term& t, const Position& p,
                std::string_view rule_id) {
  const Rule* rule = sys.find_rule(rule_id);
  if (!rule)
    throw UnknownRuleError("system " + sys.id() + " has no rule '" +
                           std::string(rule_id) + "'");
  Term sub = subterm_at(t, p);
  auto b = match_pattern(rule->lhs, sub);
  if (!b)
    throw RewriteError("rule " + rule->id + " does not match " +
                       render_term(sub) + " at position " + p.str());
  return graft_at(t, p, instantiate(rule->rhs, *b));
}

static void redexes_rec(const System& sys, const Term& t, Position pos,
                        std::vector<Redex>& out) {
  for (const Rule& r : sys.rules())
    if (match_pattern(r.lhs, t)) out.push_back({pos, r.id});
  for (int i = 0; i < t.num_children(); ++i)
    redexes_rec(sys, t.child(i), pos.child(i + 1), out);
}

std::vector<Redex> find_redexes(const System& sys, const Term& t) {
  std::vector<Redex> out;
  redexes_rec(sys, t, Position::root(), out);
  return out;
}

std::optional<StepRecord> step(const System& sys, const Term& t,
                               Strategy strategy) {
  std::vector<Redex> rs = find_redexes(sys, t);
  if (rs.empty()) return std::nullopt;
  // find_redexes lists positions in pre-order, i.e. ascending
  // lexicographic order, with catalog rule order within a position; the
  // first redex at the extremal depth is the strategy's pick.
  const Redex* pick = &rs[0];
  for (const Redex& r : rs) {
    bool better = strategy == Strategy::LeftmostInnermost
                      ? r.pos.depth() > pick->pos.depth()
                      : r.pos.depth() < pick->pos.depth();
    if (better) pick = &r;
  }
  Term after = rewrite_at(sys, t, pick->pos, pick->rule_id);
  return StepRecord{pick->rule_id, pick->pos, t, after};
}

Trace normalize(const System& sys, const Term& t, Strategy strategy,
                NormalizeLimits limits) {
  Trace trace{t, {}, t};
  Term cur = t;
  while (auto s = step(sys, cur, strategy)) {
    if (trace.steps.size() >= limits.max_steps)
      throw StepLimitError("no normal form of " + render_term(t) +
                           " within " + std::to_string(limits.max_steps) +
                           " steps in system " + sys.id());
    cur = s->after;
    trace.steps.push_back(std::move(*s));
  }
  trace.final_term = cur;
  return trace;
}

std::set<Term, TermLess> all_one_step_reducts(const System& sys,
                                              const Term& t) {
  std::set<Term, TermLess> out;
  for (const Redex& r : find_redexes(sys, t))
    out.insert(rewrite_at(sys, t, r.pos, r.rule_id));
  return out;
}

// ---------------------------------------------------------------------------
// Trace serialization

std::string trace_to_jsonl(const Trace& trace, const std::string& system_id) {
  using json = nlohmann::ordered_json;
  std::string out;
  json header;
  header["initial"] = render_term(trace.initial);
  header["system"] = system_id;
  out += header.dump() + "\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const StepRecord& s = trace.steps[i];
    json line;
    line["step"] = i + 1;
    line["rule"] = s.rule_id;
    line["pos"] = s.pos.str();
    line["from"] = render_term(s.before);
    line["to"] = render_term(s.after);
    out += line.dump() + "\n";
  }
  json footer;
  footer["final"] = render_term(trace.final_term);
  footer["steps"] = trace.steps.size();
  out += footer.dump() + "\n";
  return out;
}

ParsedTrace parse_trace_jsonl(std::string_view text) {
  using json = nlohmann::json;
  ParsedTrace out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool saw_header = false, saw_footer = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError("trace line is not valid JSON: " + std::string(e.what()),
                       lineno);
    }
    if (saw_footer) throw ParseError("trace continues after footer", lineno);
    if (!saw_header) {
      if (!j.contains("initial") || !j.contains("system"))
        throw ParseError("trace header needs 'initial' and 'system'", lineno);
      out.initial = j["initial"].get<std::string>();
      out.system_id = j["system"].get<std::string>();
      saw_header = true;
    } else if (j.contains("final")) {
      if (!j.contains("steps"))
        throw ParseError("trace footer needs 'final' and 'steps'", lineno);
      out.final_text = j["final"].get<std::string>();
      out.declared_steps = j["steps"].get<std::size_t>();
      saw_footer = true;
    } else {
      for (const char* key : {"step", "rule", "pos", "from", "to"})
        if (!j.contains(key))
          throw ParseError("trace step line is missing '" + std::string(key) +
                               "'",
                           lineno);
      out.steps.push_back({j["step"].get<std::size_t>(),
                           j["rule"].get<std::string>(),
                           j["pos"].get<std::string>(),
                           j["from"].get<std::string>(),
                           j["to"].get<std::string>()});
    }
  }
  if (!saw_header) throw ParseError("trace has no header line", lineno);
  if (!saw_footer) throw ParseError("trace has no footer line", lineno);
  return out;
}

Term replay_trace(const ParsedTrace& trace) {
  const System& sys = get_system(trace.system_id);
  const Signature& sig = sys.signature();
  Term cur = parse_term(trace.initial, sig);
  std::size_t k = 0;
  for (const TraceLine& line : trace.steps) {
    ++k;
    if (line.step != k)
      throw RewriteError("trace step " + std::to_string(k) +
                         " is numbered " + std::to_string(line.step));
    if (!(parse_term(line.from, sig) == cur))
      throw RewriteError("trace step " + std::to_string(k) + ": 'from' is " +
                         line.from + " but the current term is " +
                         render_term(cur));
    cur = rewrite_at(sys, cur, Position::parse(line.pos), line.rule);
    if (!(parse_term(line.to, sig) == cur))
      throw RewriteError("trace step " + std::to_string(k) + ": 'to' is " +
                         line.to + " but rewriting produced " +
                         render_term(cur));
  }
  if (trace.declared_steps != trace.steps.size())
    throw RewriteError("trace footer declares " +
                       std::to_string(trace.declared_steps) + " steps but " +
                       std::to_string(trace.steps.size()) + " are present");
  if (!(parse_term(trace.final_text, sig) == cur))
    throw RewriteError("trace final is " + trace.final_text +
                       " but replay produced " + render_term(cur));
  return cur;
}

}  // namespace ddrs
