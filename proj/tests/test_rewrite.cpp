#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ddrs/catalog.hpp"
#include "ddrs/generate.hpp"
#include "ddrs/rewrite.hpp"
#include "ddrs/semantics.hpp"
#include "ddrs/term.hpp"

using namespace ddrs;

namespace {

Term t(std::string_view text, const System& sys) {
  return parse_term(text, sys.signature());
}

Position pos(std::string_view text) { return Position::parse(text); }

std::vector<std::string> rule_ids(const Trace& tr) {
  std::vector<std::string> out;
  for (const StepRecord& s : tr.steps) out.push_back(s.rule_id);
  return out;
}

}  // namespace

TEST_CASE("pattern parsing and rendering") {
  const Signature& ring = get_system("d1").signature();
  const Signature& unary = get_system("z1").signature();
  const Signature& succ = get_system("z3").signature();

  Pattern p = parse_pattern("x+(y')", unary);
  CHECK(p.variables() == std::vector<std::string>{"x", "y"});
  CHECK(p.is_linear());
  CHECK(render_pattern(p) == "x+(y')");

  Pattern q = parse_pattern("(-(x+1))+1", ring);
  CHECK(render_pattern(q) == "(-(x+1))+1");
  CHECK(q.variables() == std::vector<std::string>{"x"});

  Pattern dist = parse_pattern("x*(y+z)", ring);
  CHECK(dist.variables() == std::vector<std::string>{"x", "y", "z"});
  CHECK(dist.is_linear());

  Pattern dup = parse_pattern("x+x", ring);
  CHECK_FALSE(dup.is_linear());
  CHECK(dup.variables() == std::vector<std::string>{"x"});

  // Whitespace and redundant parentheses are immaterial.
  CHECK(parse_pattern(" x + ( y ' ) ", unary) == p);
  CHECK(parse_pattern("x+(y')", unary) == parse_pattern("x+y'", unary));
  CHECK(p != parse_pattern("(x')+y", unary));

  CHECK(p.signature_valid(unary));
  CHECK_FALSE(p.signature_valid(ring));
  CHECK_FALSE(p.signature_valid(succ));

  // Renaming the unary successor to the functional one maps rule tables
  // onto each other node for node.
  CHECK(p.rename_sym(Sym::Append, Sym::Succ) == parse_pattern("x+S(y)", succ));
  CHECK(parse_pattern("(-(x'))'", unary).rename_sym(Sym::Append, Sym::Succ) ==
        parse_pattern("S(-S(x))", succ));

  CHECK_THROWS_AS(parse_pattern("x+", ring), ParseError);
  CHECK_THROWS_AS(parse_pattern("x'", ring), SignatureError);
}

TEST_CASE("matching binds variables to subterms") {
  const System& d1 = get_system("d1");
  const Signature& ring = d1.signature();

  Pattern lhs = parse_pattern("x+0", ring);
  auto b = match_pattern(lhs, t("1+0", d1));
  REQUIRE(b.has_value());
  CHECK(b->size() == 1);
  CHECK(b->at("x") == t("1", d1));
  CHECK(render_binding(*b) == "{x -> 1}");

  CHECK_FALSE(match_pattern(lhs, t("0+1", d1)).has_value());
  CHECK_FALSE(match_pattern(lhs, t("0", d1)).has_value());

  auto b9 = match_pattern(parse_pattern("(-(x+1))+1", ring),
                          t("(-(1+1))+1", d1));
  REQUIRE(b9.has_value());
  CHECK(b9->at("x") == t("1", d1));

  auto bd = match_pattern(parse_pattern("x*(y+z)", ring),
                          t("0*((1+1)+1)", d1));
  REQUIRE(bd.has_value());
  CHECK(bd->at("x") == t("0", d1));
  CHECK(bd->at("y") == t("1+1", d1));
  CHECK(bd->at("z") == t("1", d1));
  CHECK(render_binding(*bd) == "{x -> 0, y -> 1+1, z -> 1}");

  // A repeated variable must match equal subterms.
  Pattern dup = parse_pattern("x+x", ring);
  auto bb = match_pattern(dup, t("0+0", d1));
  REQUIRE(bb.has_value());
  CHECK(bb->at("x") == t("0", d1));
  CHECK_FALSE(match_pattern(dup, t("0+1", d1)).has_value());
}

TEST_CASE("instantiation substitutes bindings") {
  const System& d1 = get_system("d1");
  const Signature& ring = d1.signature();

  Binding b{{"x", t("1+1", d1)}};
  CHECK(instantiate(parse_pattern("-x", ring), b) == t("-(1+1)", d1));
  CHECK(instantiate(parse_pattern("x+x", ring), b) == t("(1+1)+(1+1)", d1));
  CHECK(instantiate(parse_pattern("0", ring), {}) == t("0", d1));
  CHECK_THROWS_AS(instantiate(parse_pattern("x+y", ring), b), RewriteError);

  // match then instantiate the same pattern reproduces the term.
  Pattern lhs = parse_pattern("x*(y+z)", ring);
  Term u = t("(1+1)*(0+(-1))", d1);
  auto bu = match_pattern(lhs, u);
  REQUIRE(bu.has_value());
  CHECK(instantiate(lhs, *bu) == u);
}

TEST_CASE("rewrite_at applies one rule at one position") {
  const System& d1 = get_system("d1");
  const System& d2 = get_system("d2");
  const System& z1 = get_system("z1");

  CHECK(rewrite_at(d1, t("(-(1+1))+1", d1), pos("e"), "R9") == t("-1", d1));
  CHECK(rewrite_at(d2, t("0+1", d2), pos("e"), "R2'") == t("1", d2));
  CHECK(rewrite_at(z1, t("(-011)+01", z1), pos("e"), "U2") ==
        t("((-011)')+0", z1));

  // Rewriting below the root grafts the contractum in place.
  CHECK(rewrite_at(d1, t("(0+0)+1", d1), pos("1"), "R1") == t("0+1", d1));
  CHECK(rewrite_at(d1, t("1*(-(-0))", d1), pos("2"), "R10") == t("1*0", d1));

  CHECK_THROWS_AS(rewrite_at(d1, t("0+0", d1), pos("e"), "R99"),
                  UnknownRuleError);
  CHECK_THROWS_AS(rewrite_at(d1, t("0+1", d1), pos("e"), "R1"), RewriteError);
  CHECK_THROWS_AS(rewrite_at(d1, t("0", d1), pos("1"), "R1"), PositionError);
}

TEST_CASE("find_redexes lists positions pre-order, rules in table order") {
  const System& d1 = get_system("d1");
  const System& d2 = get_system("d2");

  CHECK(find_redexes(d1, t("0+0", d1)) ==
        std::vector<Redex>{{pos("e"), "R1"}, {pos("e"), "R2"}});
  CHECK(find_redexes(d2, t("(0*1)+0", d2)) ==
        std::vector<Redex>{{pos("e"), "R1"}, {pos("1"), "R5"}});
  CHECK(find_redexes(d2, t("(1+1)+1", d2)).empty());
  CHECK(find_redexes(d2, t("-((1+1)+1)", d2)).empty());

  CHECK(find_redexes(d1, t("(0+0)*(0+0)", d1)) ==
        std::vector<Redex>{{pos("e"), "R6"},
                           {pos("1"), "R1"},
                           {pos("1"), "R2"},
                           {pos("2"), "R1"},
                           {pos("2"), "R2"}});

  CHECK(render_redexes(find_redexes(d2, t("(0*1)+0", d2))) ==
        "[(e,R1),(1,R5)]");
}

TEST_CASE("step follows the strategy, breaking ties by rule order") {
  const System& d1 = get_system("d1");
  const System& d2 = get_system("d2");
  const System& n1 = get_system("n1");

  auto s = step(d2, t("(1+1)+(1+1)", d2), Strategy::LeftmostInnermost);
  REQUIRE(s.has_value());
  CHECK(s->rule_id == "R3'");
  CHECK(s->pos == pos("e"));
  CHECK(s->before == t("(1+1)+(1+1)", d2));
  CHECK(s->after == t("((1+1)+1)+1", d2));

  CHECK_FALSE(step(d1, t("0", d1), Strategy::LeftmostInnermost).has_value());
  CHECK_FALSE(step(d1, t("-(1+1)", d1), Strategy::LeftmostOutermost).has_value());

  auto u = step(n1, t("0+(0')", n1), Strategy::LeftmostInnermost);
  REQUIRE(u.has_value());
  CHECK(u->rule_id == "U2");
  CHECK(u->after == t("(0')+0", n1));

  // The strategies pick different redexes of 0+(0+0): the inner sum is
  // deepest, the root is shallowest.
  Term nested = t("0+(0+0)", d1);
  auto li = step(d1, nested, Strategy::LeftmostInnermost);
  auto lo = step(d1, nested, Strategy::LeftmostOutermost);
  REQUIRE(li.has_value());
  REQUIRE(lo.has_value());
  CHECK(li->pos == pos("2"));
  CHECK(li->rule_id == "R1");
  CHECK(lo->pos == pos("e"));
  CHECK(lo->rule_id == "R2");
  CHECK(li->after == t("0+0", d1));
  CHECK(lo->after == t("0+0", d1));

  // At one position the first matching rule in the table wins.
  auto tie = step(d1, t("0+0", d1), Strategy::LeftmostInnermost);
  REQUIRE(tie.has_value());
  CHECK(tie->rule_id == "R1");
}

TEST_CASE("normalize reaches the canonical form and records the path") {
  const System& d1 = get_system("d1");
  const System& d2 = get_system("d2");
  const System& z1 = get_system("z1");

  Trace tr = normalize(z1, t("(-011)+01", z1));
  CHECK(tr.final_term == t("-01", z1));
  CHECK(rule_ids(tr) == std::vector<std::string>{"U2", "U6", "U1"});

  // Outermost reduction orders the same three contractions differently.
  Trace lo = normalize(z1, t("(-011)+01", z1), Strategy::LeftmostOutermost);
  CHECK(lo.final_term == t("-01", z1));
  CHECK(rule_ids(lo) == std::vector<std::string>{"U2", "U1", "U6"});

  Trace sq = normalize(d2, t("(1+1)*(1+1)", d2));
  CHECK(sq.final_term == t("((1+1)+1)+1", d2));
  CHECK(rule_ids(sq) == std::vector<std::string>{"R6'", "R5", "R3'"});

  Trace id = normalize(d1, t("0", d1));
  CHECK(id.steps.empty());
  CHECK(id.initial == t("0", d1));
  CHECK(id.final_term == t("0", d1));

  // Consecutive step records chain from the initial to the final term.
  REQUIRE(sq.steps.size() == 3);
  CHECK(sq.steps.front().before == sq.initial);
  CHECK(sq.steps[0].after == sq.steps[1].before);
  CHECK(sq.steps[1].after == sq.steps[2].before);
  CHECK(sq.steps.back().after == sq.final_term);

  CHECK_THROWS_AS(normalize(d2, t("(1+1)*(1+1)", d2),
                            Strategy::LeftmostInnermost, {.max_steps = 1}),
                  StepLimitError);
  CHECK_NOTHROW(normalize(d2, t("(1+1)*(1+1)", d2),
                          Strategy::LeftmostInnermost, {.max_steps = 3}));
}

TEST_CASE("all_one_step_reducts deduplicates alternative contractions") {
  const System& d1 = get_system("d1");
  const System& d2 = get_system("d2");

  CHECK(all_one_step_reducts(d1, t("0+0", d1)) ==
        std::set<Term, TermLess>{t("0", d1)});
  CHECK(all_one_step_reducts(d2, t("(0*1)+0", d2)) ==
        std::set<Term, TermLess>{t("0*1", d2), t("0+0", d2)});
  CHECK(all_one_step_reducts(d2, t("1", d2)).empty());
}

TEST_CASE("traces serialize to JSON lines and replay exactly") {
  const System& d2 = get_system("d2");
  const System& z1 = get_system("z1");

  Trace tr = normalize(d2, t("0+1", d2));
  std::string jsonl = trace_to_jsonl(tr, "d2");
  CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == 3);  // header, 1 step, footer

  ParsedTrace pt = parse_trace_jsonl(jsonl);
  CHECK(pt.system_id == "d2");
  CHECK(pt.initial == "0+1");
  REQUIRE(pt.steps.size() == 1);
  CHECK(pt.steps[0].step == 1);
  CHECK(pt.steps[0].rule == "R2'");
  CHECK(pt.steps[0].pos == "e");
  CHECK(pt.steps[0].from == "0+1");
  CHECK(pt.steps[0].to == "1");
  CHECK(pt.final_text == "1");
  CHECK(pt.declared_steps == 1);
  CHECK(replay_trace(pt) == t("1", d2));

  // A longer trace survives the round trip too.
  Trace big = normalize(z1, t("(-011)+01", z1));
  ParsedTrace pb = parse_trace_jsonl(trace_to_jsonl(big, "z1"));
  CHECK(pb.steps.size() == big.steps.size());
  CHECK(replay_trace(pb) == big.final_term);
}

TEST_CASE("replay rejects traces that do not replay") {
  const System& d2 = get_system("d2");
  Trace tr = normalize(d2, t("0+1", d2));
  std::string jsonl = trace_to_jsonl(tr, "d2");

  auto tampered = [&](const std::string& from, const std::string& to) {
    std::string s = jsonl;
    auto at = s.find(from);
    REQUIRE(at != std::string::npos);
    s.replace(at, from.size(), to);
    return parse_trace_jsonl(s);
  };

  CHECK_THROWS_AS(replay_trace(tampered("\"to\":\"1\"", "\"to\":\"0\"")),
                  RewriteError);
  CHECK_THROWS_AS(replay_trace(tampered("\"rule\":\"R2'\"", "\"rule\":\"R1\"")),
                  RewriteError);
  CHECK_THROWS_AS(replay_trace(tampered("\"final\":\"1\"", "\"final\":\"0\"")),
                  RewriteError);
  CHECK_THROWS_AS(replay_trace(tampered("\"steps\":1", "\"steps\":2")),
                  RewriteError);

  CHECK_THROWS_AS(parse_trace_jsonl("not json\n"), ParseError);
  CHECK_THROWS_AS(parse_trace_jsonl(""), ParseError);
}

TEST_CASE("every rewrite step preserves the term's value") {
  for (const SystemInfo& info : list_systems()) {
    const System& sys = get_system(info.id);
    int max = sys.signature().contains(Sym::One) ? 5 : 6;
    for (const Term& u : enumerate_ground_terms(sys.signature(), max)) {
      IntValue v = eval_int(u);
      for (const Redex& r : find_redexes(sys, u)) {
        Term after = rewrite_at(sys, u, r.pos, r.rule_id);
        CHECK(eval_int(after) == v);
      }
    }
  }
}

TEST_CASE("both strategies reach the same normal form") {
  for (const SystemInfo& info : list_systems()) {
    const System& sys = get_system(info.id);
    for (const Term& u : enumerate_ground_terms(sys.signature(), 5)) {
      Trace li = normalize(sys, u, Strategy::LeftmostInnermost);
      Trace lo = normalize(sys, u, Strategy::LeftmostOutermost);
      CHECK(li.final_term == lo.final_term);
      CHECK(in_canonical_set(li.final_term, sys.view()));
    }
  }
}

TEST_CASE("a term is redex-free exactly when it is canonical") {
  for (const SystemInfo& info : list_systems()) {
    const System& sys = get_system(info.id);
    for (const Term& u : enumerate_ground_terms(sys.signature(), 5)) {
      CHECK(find_redexes(sys, u).empty() == in_canonical_set(u, sys.view()));
    }
  }
}
