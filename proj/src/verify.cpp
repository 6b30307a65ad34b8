#include "ddrs/verify.hpp"

#include <map>
#include <nlohmann/json.hpp>
#include <queue>
#include <unordered_set>
#include <utility>

#include "ddrs/generate.hpp"
#include "ddrs/semantics.hpp"
#include "ddrs/weights.hpp"

namespace ddrs {

namespace {

// One-step expansion tuned for the state search: rebuilds each reduct
// while unwinding the spine instead of materializing redexes and
// re-running the match inside rewrite_at. Reduct graphs of the sampled
// product terms run into millions of states, so the per-state constant
// matters here.
void collect_reducts(const System& sys, const Term& cur,
                     std::vector<std::pair<Term, int>>& spine,
                     std::vector<Term>& out) {
  for (const Rule& r : sys.rules()) {
    const auto b = match_pattern(r.lhs, cur);
    if (!b) continue;
    Term rebuilt = instantiate(r.rhs, *b);
    for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
      const Term& p = it->first;
      if (p.num_children() == 1)
        rebuilt = Term::make(p.sym(), {rebuilt});
      else if (it->second == 0)
        rebuilt = Term::make(p.sym(), {rebuilt, p.child(1)});
      else
        rebuilt = Term::make(p.sym(), {p.child(0), rebuilt});
    }
    out.push_back(std::move(rebuilt));
  }
  for (int i = 0; i < cur.num_children(); ++i) {
    spine.emplace_back(cur, i);
    collect_reducts(sys, cur.child(i), spine, out);
    spine.pop_back();
  }
}

}  // namespace

ConfluenceReport bfs_normal_forms(const System& sys, const Term& t,
                                  std::size_t max_states) {
  ConfluenceReport rep;
  std::unordered_set<Term, TermHash> seen;
  std::queue<Term> pending;
  seen.insert(t);
  pending.push(t);
  std::vector<std::pair<Term, int>> spine;
  std::vector<Term> reducts;
  while (!pending.empty()) {
    if (rep.states_explored >= max_states) {
      rep.truncated = true;
      break;
    }
    const Term cur = pending.front();
    pending.pop();
    ++rep.states_explored;
    reducts.clear();
    collect_reducts(sys, cur, spine, reducts);
    if (reducts.empty()) {
      rep.normal_forms.insert(cur);
      continue;
    }
    for (const Term& n : reducts)
      if (seen.insert(n).second) pending.push(n);
  }
  return rep;
}

DeterminismReport deterministic_path(const System& sys, const Term& t) {
  const NormalizeLimits limits;
  std::vector<StepRecord> steps;
  Term cur = t;
  while (true) {
    std::vector<Redex> rs = find_redexes(sys, cur);
    if (rs.empty()) break;
    if (rs.size() > 1)
      return {false, Trace{t, std::move(steps), cur}, cur, std::move(rs)};
    if (steps.size() >= limits.max_steps)
      throw StepLimitError("deterministic_path: no normal form within " +
                           std::to_string(limits.max_steps) + " steps");
    Term next = rewrite_at(sys, cur, rs[0].pos, rs[0].rule_id);
    steps.push_back({rs[0].rule_id, rs[0].pos, cur, next});
    cur = std::move(next);
  }
  return {true, Trace{t, std::move(steps), cur}, std::nullopt, {}};
}

// ---------------------------------------------------------------------------
// Suite ids

const char* suite_name(SuiteId id) {
  switch (id) {
    case SuiteId::Soundness:
      return "soundness";
    case SuiteId::Termination:
      return "termination";
    case SuiteId::Confluence:
      return "confluence";
    case SuiteId::Determinism:
      return "determinism";
    case SuiteId::Characterization:
      return "characterization";
    case SuiteId::Fixtures:
      return "fixtures";
  }
  return "?";
}

std::optional<SuiteId> parse_suite(std::string_view name) {
  for (SuiteId id : all_suites())
    if (name == suite_name(id)) return id;
  return std::nullopt;
}

std::vector<SuiteId> all_suites() {
  return {SuiteId::Soundness,      SuiteId::Termination,
          SuiteId::Confluence,     SuiteId::Determinism,
          SuiteId::Characterization, SuiteId::Fixtures};
}

// ---------------------------------------------------------------------------
// Shared helpers

namespace {

std::vector<const System*> selected_systems(const SuiteConfig& cfg) {
  std::vector<const System*> out;
  if (cfg.systems.empty())
    for (const SystemInfo& info : list_systems())
      out.push_back(&get_system(info.id));
  else
    for (const std::string& id : cfg.systems) out.push_back(&get_system(id));
  return out;
}

bool selected(const SuiteConfig& cfg, std::string_view id) {
  if (cfg.systems.empty()) return true;
  for (const std::string& s : cfg.systems)
    if (s == id) return true;
  return false;
}

// Exhaustive terms up to cfg.max_size followed by the seeded random
// sample. The generator is re-seeded per system, so the budget does not
// depend on which other systems run.
std::vector<Term> budget_terms(const System& sys, const SuiteConfig& cfg,
                               std::size_t* enumerated = nullptr) {
  std::vector<Term> terms =
      enumerate_ground_terms(sys.signature(), cfg.max_size);
  if (enumerated) *enumerated = terms.size();
  std::mt19937_64 rng(cfg.seed);
  const std::size_t span =
      cfg.random_max_size >= cfg.random_min_size
          ? cfg.random_max_size - cfg.random_min_size + 1
          : 1;
  for (std::size_t i = 0; i < cfg.random_samples; ++i) {
    const std::size_t size = cfg.random_min_size + rng() % span;
    terms.push_back(random_ground_term(sys.signature(), size, rng,
                                       cfg.max_product_depth));
  }
  return terms;
}

std::string budget_detail(std::size_t total, std::size_t enumerated) {
  return std::to_string(total) + " terms (" + std::to_string(enumerated) +
         " enumerated, " + std::to_string(total - enumerated) + " sampled)";
}

// ---------------------------------------------------------------------------
// Suites

void run_soundness(const SuiteConfig& cfg, std::vector<SuiteRun>& runs) {
  for (const System* sys : selected_systems(cfg))
    runs.push_back({suite_name(SuiteId::Soundness), sys->id(),
                    rule_soundness(*sys, cfg.soundness_samples, cfg.seed)});
}

void run_termination(const SuiteConfig& cfg, std::vector<SuiteRun>& runs) {
  for (const System* sys : selected_systems(cfg)) {
    std::size_t enumerated = 0;
    const std::vector<Term> terms = budget_terms(*sys, cfg, &enumerated);
    const WeightStats st = weight_decrease_check(*sys, terms);
    Report rep;
    rep.title = "termination: " + sys->id();
    std::string detail = budget_detail(terms.size(), enumerated) + ", " +
                         std::to_string(st.redexes_checked) + " redexes";
    if (!st.ok()) {
      const WeightViolation& v = st.violations.front();
      detail += "; first violation: " + render_term(v.term) + " via " +
                v.redex.rule_id + " at " + v.redex.pos.str();
    }
    rep.add("every rewrite step strictly decreases the term weight", st.ok(),
            detail);
    rep.add("weight-overflow skips stay within 5% of the budget",
            st.terms_skipped * 20 <= terms.size(),
            std::to_string(st.terms_skipped) + " of " +
                std::to_string(terms.size()) + " terms skipped");
    runs.push_back(
        {suite_name(SuiteId::Termination), sys->id(), std::move(rep)});
  }
}

void run_confluence(const SuiteConfig& cfg, std::vector<SuiteRun>& runs) {
  for (const System* sys : selected_systems(cfg)) {
    std::size_t enumerated = 0;
    const std::vector<Term> terms = budget_terms(*sys, cfg, &enumerated);
    const View view = sys->view();
    const NormalizeLimits limits{cfg.max_steps};
    std::size_t strategy_bad = 0, join_bad = 0, truncated = 0;
    std::string first_strategy, first_join;
    for (const Term& t : terms) {
      const Term expect = canonical_term(eval_int(t), view);
      const Term li =
          normalize(*sys, t, Strategy::LeftmostInnermost, limits).final_term;
      const Term lo =
          normalize(*sys, t, Strategy::LeftmostOutermost, limits).final_term;
      if (li != expect || lo != expect) {
        ++strategy_bad;
        if (first_strategy.empty())
          first_strategy = render_term(t) + " -> " + render_term(li) + " / " +
                           render_term(lo) + ", expected " +
                           render_term(expect);
      }
      const ConfluenceReport c =
          bfs_normal_forms(*sys, t, cfg.confluence_max_states);
      if (c.truncated) {
        ++truncated;
        if (first_join.empty())
          first_join = render_term(t) + ": search truncated at " +
                       std::to_string(c.states_explored) + " states";
      } else if (c.normal_forms.size() != 1 ||
                 !(*c.normal_forms.begin() == expect)) {
        ++join_bad;
        if (first_join.empty())
          first_join = render_term(t) + " reaches " +
                       std::to_string(c.normal_forms.size()) +
                       " normal forms";
      }
    }
    Report rep;
    rep.title = "confluence: " + sys->id();
    rep.add("both strategies normalize to the canonical form of the value",
            strategy_bad == 0,
            strategy_bad == 0 ? budget_detail(terms.size(), enumerated)
                              : first_strategy);
    rep.add("every reduction path joins at that normal form",
            join_bad == 0 && truncated == 0,
            join_bad == 0 && truncated == 0
                ? budget_detail(terms.size(), enumerated)
                : first_join);
    runs.push_back(
        {suite_name(SuiteId::Confluence), sys->id(), std::move(rep)});
  }
}

void run_characterization(const SuiteConfig& cfg,
                          std::vector<SuiteRun>& runs) {
  for (const System* sys : selected_systems(cfg)) {
    const std::vector<Term> terms =
        enumerate_ground_terms(sys->signature(), cfg.max_size);
    const View view = sys->view();
    std::size_t canonical_count = 0, mismatches = 0, value_dups = 0;
    std::string first_mismatch, first_dup;
    std::map<IntValue, Term> by_value;
    for (const Term& t : terms) {
      const bool normal = find_redexes(*sys, t).empty();
      const bool canon = in_canonical_set(t, view);
      if (normal != canon) {
        ++mismatches;
        if (first_mismatch.empty())
          first_mismatch = render_term(t) +
                           (normal ? " is a non-canonical normal form"
                                   : " is canonical but has a redex");
      }
      if (canon) {
        ++canonical_count;
        if (!by_value.emplace(eval_int(t), t).second) {
          ++value_dups;
          if (first_dup.empty()) first_dup = render_term(t);
        }
      }
    }
    Report rep;
    rep.title = "characterization: " + sys->id();
    rep.add("terms without redexes are exactly the canonical forms",
            mismatches == 0,
            mismatches == 0 ? std::to_string(terms.size()) + " terms, " +
                                  std::to_string(canonical_count) +
                                  " canonical"
                            : first_mismatch);
    rep.add("canonical forms carry pairwise distinct values", value_dups == 0,
            value_dups == 0 ? std::to_string(canonical_count) +
                                  " canonical forms"
                            : "duplicate value at " + first_dup);
    bool round_trip = true;
    std::string first_rt;
    const long long lo = view.integers ? -200 : 0;
    for (long long n = lo; n <= 200 && round_trip; ++n) {
      const Term c = canonical_term(IntValue(n), view);
      round_trip = in_canonical_set(c, view) && eval_int(c) == n &&
                   find_redexes(*sys, c).empty();
      if (!round_trip) first_rt = "value " + std::to_string(n);
    }
    rep.add("canonical_term round-trips through eval for |n| <= 200",
            round_trip, round_trip ? "" : first_rt);
    runs.push_back(
        {suite_name(SuiteId::Characterization), sys->id(), std::move(rep)});
  }
}

struct SweepResult {
  std::size_t cases = 0;
  std::size_t branches = 0;
  std::string first;
};

SweepResult sweep_pairs(const System& sys, Sym op, long long lo,
                        long long hi) {
  SweepResult res;
  const View view = sys.view();
  for (long long l = lo; l <= hi; ++l)
    for (long long r = lo; r <= hi; ++r) {
      const Term t = Term::make(op, {canonical_term(IntValue(l), view),
                                     canonical_term(IntValue(r), view)});
      const DeterminismReport d = deterministic_path(sys, t);
      ++res.cases;
      if (!d.deterministic) {
        ++res.branches;
        if (res.first.empty())
          res.first = render_term(t) + " branches at " +
                      render_term(*d.branch_state);
      }
    }
  return res;
}

void add_sweep(Report& rep, const System& sys, Sym op, long long bound,
               const std::string& name) {
  const SweepResult res = sweep_pairs(sys, op, 0, bound);
  rep.add(name, res.branches == 0,
          res.branches == 0 ? std::to_string(res.cases) +
                                  " pairs, values 0.." + std::to_string(bound)
                            : res.first);
}

void add_expected_branch(
    Report& rep, const System& sys, const std::string& name, const char* text,
    const char* branch_text,
    const std::vector<std::pair<const char*, const char*>>& redexes) {
  const Term t = parse_term(text, sys.signature());
  const Term want_state = parse_term(branch_text, sys.signature());
  std::vector<Redex> want;
  for (const auto& [pos, rule] : redexes)
    want.push_back({Position::parse(pos), rule});
  const DeterminismReport d = deterministic_path(sys, t);
  const bool ok = !d.deterministic && d.branch_state &&
                  *d.branch_state == want_state && d.branch_redexes == want;
  std::string detail;
  if (ok)
    detail = "branches at " + render_term(want_state) + " with redexes " +
             render_redexes(want);
  else if (d.deterministic)
    detail = render_term(t) + " unexpectedly rewrites deterministically";
  else
    detail = "branches at " + render_term(*d.branch_state) +
             " with redexes " + render_redexes(d.branch_redexes);
  rep.add(name, ok, detail);
}

void run_determinism(const SuiteConfig& cfg, std::vector<SuiteRun>& runs) {
  const long long rb = static_cast<long long>(cfg.determinism_ring_bound);
  const long long ub = static_cast<long long>(cfg.determinism_unary_bound);
  auto emit = [&runs](const System& sys, Report rep) {
    runs.push_back(
        {suite_name(SuiteId::Determinism), sys.id(), std::move(rep)});
  };

  if (selected(cfg, "d2")) {
    const System& sys = get_system("d2");
    Report rep;
    rep.title = "determinism: d2";
    add_sweep(rep, sys, Sym::Plus, rb,
              "sums of nonnegative canonical forms rewrite deterministically");
    {
      std::size_t branches = 0;
      std::string first;
      for (long long u = 1; u <= rb; ++u) {
        const Term t = Term::plus(
            Term::one(), canonical_term(IntValue(-u), sys.view()));
        const DeterminismReport d = deterministic_path(sys, t);
        if (!d.deterministic) {
          ++branches;
          if (first.empty())
            first = render_term(t) + " branches at " +
                    render_term(*d.branch_state);
        }
      }
      rep.add("sums 1 + u with canonical negative u rewrite deterministically",
              branches == 0,
              branches == 0 ? std::to_string(rb) + " cases, values -1..-" +
                                  std::to_string(rb)
                            : first);
    }
    add_expected_branch(
        rep, sys, "0 + u with negative u branches after the sign-flip step",
        "0+(-(1+1))", "-((-0)+(1+1))", {{"1", "R3'"}, {"1.1", "R7"}});
    add_expected_branch(
        rep, sys,
        "negative + negative branches after the sign-flip step",
        "(-1)+(-(1+1))", "-((-(-1))+(1+1))", {{"1", "R3'"}, {"1.1", "R10"}});
    add_expected_branch(
        rep, sys, "0 * (1+1) branches after the product-unfolding step",
        "0*(1+1)", "(0*1)+0", {{"e", "R1"}, {"1", "R5"}});
    {
      std::string summary;
      for (long long l = -2; l <= 2; ++l) {
        std::size_t det = 0, tot = 0;
        for (long long r = -3; r <= -1; ++r) {
          const Term t =
              Term::plus(canonical_term(IntValue(l), sys.view()),
                         canonical_term(IntValue(r), sys.view()));
          ++tot;
          if (deterministic_path(sys, t).deterministic) ++det;
        }
        if (!summary.empty()) summary += "; ";
        summary += "left " + std::to_string(l) + ": " + std::to_string(det) +
                   "/" + std::to_string(tot) + " deterministic";
      }
      rep.add("mixed-sign sums: determinism boundary (recorded)", true,
              summary);
    }
    emit(sys, std::move(rep));
  }

  for (const char* id : {"n1", "n4", "z1", "z4"}) {
    if (!selected(cfg, id)) continue;
    const System& sys = get_system(id);
    Report rep;
    rep.title = std::string("determinism: ") + id;
    add_sweep(rep, sys, Sym::Plus, ub,
              "sums of canonical naturals rewrite deterministically");
    add_sweep(rep, sys, Sym::Times, ub,
              "products of canonical naturals rewrite deterministically");
    emit(sys, std::move(rep));
  }

  for (const char* id : {"n2", "n3", "z2", "z3"}) {
    if (!selected(cfg, id)) continue;
    const System& sys = get_system(id);
    Report rep;
    rep.title = std::string("determinism: ") + id;
    add_sweep(rep, sys, Sym::Plus, ub,
              "sums of canonical naturals rewrite deterministically");
    if (sys.id() == "n3") {
      const Term t = parse_term("0*S(0)", sys.signature());
      const DeterminismReport d = deterministic_path(sys, t);
      rep.add("a product of canonical naturals branches", !d.deterministic,
              d.deterministic
                  ? render_term(t) + " unexpectedly rewrites deterministically"
                  : render_term(t) + " branches at " +
                        render_term(*d.branch_state));
    }
    if (sys.id() == "z2")
      add_expected_branch(
          rep, sys, "0 * 0' branches after the product-unfolding step",
          "0*(0')", "(0*0)+0", {{"e", "U1"}, {"1", "U3"}});
    emit(sys, std::move(rep));
  }
}

void replay_branch_z1(std::vector<SuiteRun>& runs) {
  const System& sys = get_system("z1");
  const Signature& sig = sys.signature();
  Report rep;
  rep.title = "recorded branch: (-011)+01 under z1";
  const Term t0 = parse_term("(-011)+01", sig);
  const std::vector<Redex> r0 = find_redexes(sys, t0);
  const std::vector<Redex> want0 = {{Position::root(), "U2"}};
  rep.add("the first step is forced (U2 at e)", r0 == want0,
          render_redexes(r0));
  const Term t1 = rewrite_at(sys, t0, Position::root(), "U2");
  rep.add("it lands at ((-011)')+0",
          t1 == parse_term("((-011)')+0", sig), render_term(t1));
  const std::vector<Redex> r1 = find_redexes(sys, t1);
  const std::vector<Redex> want1 = {{Position::root(), "U1"},
                                    {Position::parse("1"), "U6"}};
  rep.add("the branch state offers exactly (e,U1) and (1,U6)", r1 == want1,
          render_redexes(r1));
  const Term a = rewrite_at(sys, t1, Position::parse("1"), "U6");
  const Term b = rewrite_at(sys, t1, Position::root(), "U1");
  rep.add("the U6 branch passes through (-01)+0",
          a == parse_term("(-01)+0", sig), render_term(a));
  rep.add("the U1 branch passes through (-011)'",
          b == parse_term("(-011)'", sig), render_term(b));
  const Term join = parse_term("-01", sig);
  const Term fa = normalize(sys, a).final_term;
  const Term fb = normalize(sys, b).final_term;
  rep.add("both branches join at -01", fa == join && fb == join,
          render_term(fa) + " / " + render_term(fb));
  runs.push_back({suite_name(SuiteId::Fixtures), "z1", std::move(rep)});
}

// A two-way branch that rejoins after one step on each side and then
// continues to `final_text`.
void replay_diamond(std::vector<SuiteRun>& runs, const char* system_id,
                    const char* title, const char* initial_text,
                    const char* forced_rule, const char* mid_text,
                    const std::vector<std::pair<const char*, const char*>>&
                        branch_redexes,
                    const char* join_text, const char* final_text) {
  const System& sys = get_system(system_id);
  const Signature& sig = sys.signature();
  Report rep;
  rep.title = title;
  const Term t0 = parse_term(initial_text, sig);
  const std::vector<Redex> r0 = find_redexes(sys, t0);
  const std::vector<Redex> want0 = {{Position::root(), forced_rule}};
  rep.add(std::string("the first step is forced (") + forced_rule + " at e)",
          r0 == want0, render_redexes(r0));
  const Term t1 = rewrite_at(sys, t0, Position::root(), forced_rule);
  rep.add(std::string("it lands at ") + mid_text,
          t1 == parse_term(mid_text, sig), render_term(t1));
  std::vector<Redex> want1;
  for (const auto& [pos, rule] : branch_redexes)
    want1.push_back({Position::parse(pos), rule});
  const std::vector<Redex> r1 = find_redexes(sys, t1);
  rep.add("the branch state offers exactly " + render_redexes(want1),
          r1 == want1, render_redexes(r1));
  const Term join = parse_term(join_text, sig);
  bool rejoin = r1 == want1;
  std::string got;
  for (const Redex& r : r1) {
    const Term side = rewrite_at(sys, t1, r.pos, r.rule_id);
    const DeterminismReport d = deterministic_path(sys, side);
    rejoin = rejoin && d.deterministic;
    // Both sides run deterministically to the normal form, passing
    // through the join state on the way.
    bool seen_join = side == join;
    for (const StepRecord& s : d.path.steps)
      seen_join = seen_join || s.after == join;
    rejoin = rejoin && seen_join;
    if (!got.empty()) got += " / ";
    got += render_term(d.path.final_term);
  }
  rep.add(std::string("both branches rejoin at ") + join_text, rejoin, got);
  const Term fin = parse_term(final_text, sig);
  const Term li = normalize(sys, t0).final_term;
  const ConfluenceReport c = bfs_normal_forms(sys, t0);
  rep.add(std::string("every path ends at ") + final_text,
          li == fin && !c.truncated && c.normal_forms.size() == 1 &&
              *c.normal_forms.begin() == fin,
          std::to_string(c.states_explored) + " states explored");
  runs.push_back({suite_name(SuiteId::Fixtures), system_id, std::move(rep)});
}

void replay_branch_d2m(std::vector<SuiteRun>& runs) {
  const System& sys = get_system("d2m");
  const Signature& sig = sys.signature();
  Report rep;
  rep.title = "recorded branch: 1*((((1+1)+1)+1)+1) under d2m";
  const Term t0 = parse_term("1*((((1+1)+1)+1)+1)", sig);
  const Term stop = parse_term("1+((1+(1+1))+1)", sig);
  const DeterminismReport d = deterministic_path(sys, t0);
  rep.add("the reduction is forced for 7 steps, then branches",
          !d.deterministic && d.path.steps.size() == 7 && d.branch_state &&
              *d.branch_state == stop,
          d.deterministic
              ? "unexpectedly deterministic"
              : std::to_string(d.path.steps.size()) + " forced steps to " +
                    render_term(*d.branch_state));
  const std::set<Term, TermLess> reducts = all_one_step_reducts(sys, stop);
  const std::set<Term, TermLess> want = {
      parse_term("(1+(1+(1+1)))+1", sig),
      parse_term("1+(((1+1)+1)+1)", sig)};
  std::string got;
  for (const Term& r : reducts) {
    if (!got.empty()) got += " / ";
    got += render_term(r);
  }
  rep.add("the branch state has exactly two one-step reducts",
          reducts == want, got);
  const Term fin = canonical_term(IntValue(5), sys.view());
  bool joined = reducts == want;
  for (const Term& r : reducts)
    joined = joined && normalize(sys, r).final_term == fin;
  rep.add("both branches normalize to the canonical form of 5", joined,
          render_term(fin));
  runs.push_back({suite_name(SuiteId::Fixtures), "d2m", std::move(rep)});
}

void run_fixtures(const SuiteConfig& cfg, std::vector<SuiteRun>& runs) {
  runs.push_back({suite_name(SuiteId::Fixtures), "", catalog_audit()});
  if (selected(cfg, "z1")) replay_branch_z1(runs);
  if (selected(cfg, "d2")) {
    replay_diamond(runs, "d2", "recorded branch: 0+(-(1+1)) under d2",
                   "0+(-(1+1))", "R11", "-((-0)+(1+1))",
                   {{"1", "R3'"}, {"1.1", "R7"}}, "-((0+1)+1)", "-(1+1)");
    replay_diamond(runs, "d2", "recorded branch: (-1)+(-(1+1)) under d2",
                   "(-1)+(-(1+1))", "R11", "-((-(-1))+(1+1))",
                   {{"1", "R3'"}, {"1.1", "R10"}}, "-((1+1)+1)",
                   "-((1+1)+1)");
    replay_diamond(runs, "d2", "recorded branch: 0*(1+1) under d2",
                   "0*(1+1)", "R6'", "(0*1)+0", {{"e", "R1"}, {"1", "R5"}},
                   "0", "0");
  }
  if (selected(cfg, "z2"))
    replay_diamond(runs, "z2", "recorded branch: 0*(0') under z2", "0*(0')",
                   "U4'", "(0*0)+0", {{"e", "U1"}, {"1", "U3"}}, "0", "0");
  if (selected(cfg, "d2m")) replay_branch_d2m(runs);
}

}  // namespace

// ---------------------------------------------------------------------------
// Reports

bool SuiteReport::ok() const {
  for (const SuiteRun& run : runs)
    if (!run.report.ok()) return false;
  return true;
}

std::size_t SuiteReport::checks() const {
  std::size_t n = 0;
  for (const SuiteRun& run : runs) n += run.report.checks.size();
  return n;
}

std::size_t SuiteReport::failures() const {
  std::size_t n = 0;
  for (const SuiteRun& run : runs) n += run.report.failures();
  return n;
}

std::string SuiteReport::to_text() const {
  std::string out;
  for (const SuiteRun& run : runs) {
    out += run.suite;
    if (!run.system.empty()) out += " " + run.system;
    out += run.report.ok() ? ": pass\n" : ": FAIL\n";
    for (const CheckResult& c : run.report.checks) {
      out += c.passed ? "  pass  " : "  FAIL  ";
      out += c.name;
      if (!c.detail.empty()) out += "  (" + c.detail + ")";
      out += "\n";
    }
  }
  out += "total: " + std::to_string(checks()) + " checks, " +
         std::to_string(failures()) + " failures\n";
  return out;
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["config"]["systems"] = config.systems;
  j["config"]["seed"] = config.seed;
  j["config"]["max_size"] = config.max_size;
  j["config"]["random_samples"] = config.random_samples;
  j["config"]["random_min_size"] = config.random_min_size;
  j["config"]["random_max_size"] = config.random_max_size;
  j["config"]["max_product_depth"] = config.max_product_depth;
  j["config"]["soundness_samples"] = config.soundness_samples;
  j["config"]["confluence_max_states"] = config.confluence_max_states;
  j["config"]["determinism_ring_bound"] = config.determinism_ring_bound;
  j["config"]["determinism_unary_bound"] = config.determinism_unary_bound;
  j["config"]["max_steps"] = config.max_steps;
  j["runs"] = nlohmann::ordered_json::array();
  for (const SuiteRun& run : runs) {
    nlohmann::ordered_json r;
    r["suite"] = run.suite;
    r["system"] = run.system;
    r["ok"] = run.report.ok();
    r["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : run.report.checks) {
      nlohmann::ordered_json chk;
      chk["name"] = c.name;
      chk["passed"] = c.passed;
      chk["detail"] = c.detail;
      r["checks"].push_back(std::move(chk));
    }
    j["runs"].push_back(std::move(r));
  }
  j["summary"]["checks"] = checks();
  j["summary"]["failures"] = failures();
  j["summary"]["ok"] = ok();
  return j.dump(2) + "\n";
}

SuiteReport run_suite(SuiteId id, const SuiteConfig& config) {
  return run_suites({id}, config);
}

SuiteReport run_suites(const std::vector<SuiteId>& ids,
                       const SuiteConfig& config) {
  SuiteReport rep{config, {}};
  for (SuiteId id : ids) {
    switch (id) {
      case SuiteId::Soundness:
        run_soundness(config, rep.runs);
        break;
      case SuiteId::Termination:
        run_termination(config, rep.runs);
        break;
      case SuiteId::Confluence:
        run_confluence(config, rep.runs);
        break;
      case SuiteId::Determinism:
        run_determinism(config, rep.runs);
        break;
      case SuiteId::Characterization:
        run_characterization(config, rep.runs);
        break;
      case SuiteId::Fixtures:
        run_fixtures(config, rep.runs);
        break;
    }
  }
  return rep;
}

}  // namespace ddrs
