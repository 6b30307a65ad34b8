#include "ddrs/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ddrs/semantics.hpp"

namespace ddrs {

// ---------------------------------------------------------------------------
// System

System::System(std::string id, std::string description, Signature sig,
               std::vector<Rule> rules)
    : id_(std::move(id)),
      description_(std::move(description)),
      sig_(sig),
      rules_(std::move(rules)),
      scheme_(weight_scheme_for(sig)) {
  std::set<std::string> seen;
  for (const Rule& r : rules_) {
    if (!seen.insert(r.id).second)
      throw std::logic_error("system " + id_ + ": duplicate rule id " + r.id);
    if (r.lhs.is_var())
      throw std::logic_error("system " + id_ + ": rule " + r.id +
                             " has a lone variable on the left");
    if (!r.lhs.is_linear())
      throw std::logic_error("system " + id_ + ": rule " + r.id +
                             " is not left-linear");
    auto lvars = r.lhs.variables();
    for (const auto& v : r.rhs.variables())
      if (std::find(lvars.begin(), lvars.end(), v) == lvars.end())
        throw std::logic_error("system " + id_ + ": rule " + r.id +
                               " uses unbound variable " + v);
    if (!r.lhs.signature_valid(sig_) || !r.rhs.signature_valid(sig_))
      throw std::logic_error("system " + id_ + ": rule " + r.id +
                             " leaves the signature");
  }
}

const Rule* System::find_rule(std::string_view rule_id) const {
  for (const Rule& r : rules_)
    if (r.id == rule_id) return &r;
  return nullptr;
}

View System::view() const { return view_of(sig_); }

// ---------------------------------------------------------------------------
// The catalog

namespace {

struct RuleSpec {
  const char* id;
  const char* lhs;
  const char* rhs;
};

System make_system(const char* id, const char* description,
                   const Signature& sig,
                   std::initializer_list<RuleSpec> specs) {
  std::vector<Rule> rules;
  for (const RuleSpec& s : specs)
    rules.push_back({s.id, parse_pattern(s.lhs, sig), parse_pattern(s.rhs, sig)});
  return System(id, description, sig, std::move(rules));
}

std::vector<System> build_catalog() {
  std::vector<System> cat;
  const Signature ring = Signature::ring();
  const Signature un = Signature::unary(false);
  const Signature ui = Signature::unary(true);
  const Signature sn = Signature::successor(false);
  const Signature si = Signature::successor(true);
  const Signature uix = Signature::unary_ext();
  const Signature six = Signature::successor_ext();

  cat.push_back(make_system(
      "d0", "ring integers, 15 rules (case-split negative sums)", ring,
      {{"R1", "x+0", "x"},
       {"R2", "0+x", "x"},
       {"R3", "x+(y+z)", "(x+y)+z"},
       {"R4", "x*0", "0"},
       {"R5", "x*1", "x"},
       {"R6", "x*(y+z)", "(x*y)+(x*z)"},
       {"R7", "-0", "0"},
       {"R8", "(-1)+1", "0"},
       {"R9", "(-(x+1))+1", "-x"},
       {"R10", "-(-x)", "x"},
       {"r5", "1+(-1)", "0"},
       {"r6", "(x+1)+(-1)", "x"},
       {"r7", "x+(-(y+1))", "(x+(-y))+(-1)"},
       {"r11", "(-x)+(-y)", "-(x+y)"},
       {"R12", "x*(-y)", "-(x*y)"}}));

  cat.push_back(make_system(
      "d1", "ring integers, 12 rules (structural sum/product recursion)", ring,
      {{"R1", "x+0", "x"},
       {"R2", "0+x", "x"},
       {"R3", "x+(y+z)", "(x+y)+z"},
       {"R4", "x*0", "0"},
       {"R5", "x*1", "x"},
       {"R6", "x*(y+z)", "(x*y)+(x*z)"},
       {"R7", "-0", "0"},
       {"R8", "(-1)+1", "0"},
       {"R9", "(-(x+1))+1", "-x"},
       {"R10", "-(-x)", "x"},
       {"R11", "x+(-y)", "-((-x)+y)"},
       {"R12", "x*(-y)", "-(x*y)"}}));

  cat.push_back(make_system(
      "d2", "ring integers, 12 rules (numeral-peeling recursion)", ring,
      {{"R1", "x+0", "x"},
       {"R2'", "0+1", "1"},
       {"R3'", "x+(y+1)", "(x+y)+1"},
       {"R4", "x*0", "0"},
       {"R5", "x*1", "x"},
       {"R6'", "x*(y+1)", "(x*y)+x"},
       {"R7", "-0", "0"},
       {"R8", "(-1)+1", "0"},
       {"R9", "(-(x+1))+1", "-x"},
       {"R10", "-(-x)", "x"},
       {"R11", "x+(-y)", "-((-x)+y)"},
       {"R12", "x*(-y)", "-(x*y)"}}));

  cat.push_back(make_system(
      "d2m", "d2 with the product rule flipped to x*(y+1) -> x+(x*y)", ring,
      {{"R1", "x+0", "x"},
       {"R2'", "0+1", "1"},
       {"R3'", "x+(y+1)", "(x+y)+1"},
       {"R4", "x*0", "0"},
       {"R5", "x*1", "x"},
       {"R6''", "x*(y+1)", "x+(x*y)"},
       {"R7", "-0", "0"},
       {"R8", "(-1)+1", "0"},
       {"R9", "(-(x+1))+1", "-x"},
       {"R10", "-(-x)", "x"},
       {"R11", "x+(-y)", "-((-x)+y)"},
       {"R12", "x*(-y)", "-(x*y)"}}));

  cat.push_back(make_system(
      "n1", "unary naturals, 4 rules (append-shift addition)", un,
      {{"U1", "x+0", "x"},
       {"U2", "x+(y')", "(x')+y"},
       {"U3", "x*0", "0"},
       {"U4", "x*(y')", "x+(x*y)"}}));

  cat.push_back(make_system(
      "z1", "unary integers, 9 rules extending n1", ui,
      {{"U1", "x+0", "x"},
       {"U2", "x+(y')", "(x')+y"},
       {"U3", "x*0", "0"},
       {"U4", "x*(y')", "x+(x*y)"},
       {"U5", "-0", "0"},
       {"U6", "(-(x'))'", "-x"},
       {"U7", "-(-x)", "x"},
       {"U8", "x+(-y)", "-((-x)+y)"},
       {"U9", "x*(-y)", "-(x*y)"}}));

  cat.push_back(make_system(
      "n2", "unary naturals, 4 rules (append-out addition)", un,
      {{"U1", "x+0", "x"},
       {"U2'", "x+(y')", "(x+y)'"},
       {"U3", "x*0", "0"},
       {"U4'", "x*(y')", "(x*y)+x"}}));

  cat.push_back(make_system(
      "z2", "unary integers, 9 rules extending n2", ui,
      {{"U1", "x+0", "x"},
       {"U2'", "x+(y')", "(x+y)'"},
       {"U3", "x*0", "0"},
       {"U4'", "x*(y')", "(x*y)+x"},
       {"U5", "-0", "0"},
       {"U6", "(-(x'))'", "-x"},
       {"U7", "-(-x)", "x"},
       {"U8", "x+(-y)", "-((-x)+y)"},
       {"U9", "x*(-y)", "-(x*y)"}}));

  cat.push_back(make_system(
      "n3", "successor naturals, 4 rules (n2 with S for append)", sn,
      {{"S1", "x+0", "x"},
       {"S2", "x+S(y)", "S(x+y)"},
       {"S3", "x*0", "0"},
       {"S4", "x*S(y)", "(x*y)+x"}}));

  cat.push_back(make_system(
      "z3", "successor integers, 9 rules (z2 with S for append)", si,
      {{"S1", "x+0", "x"},
       {"S2", "x+S(y)", "S(x+y)"},
       {"S3", "x*0", "0"},
       {"S4", "x*S(y)", "(x*y)+x"},
       {"S5", "-0", "0"},
       {"S6", "S(-S(x))", "-x"},
       {"S7", "-(-x)", "x"},
       {"S8", "x+(-y)", "-((-x)+y)"},
       {"S9", "x*(-y)", "-(x*y)"}}));

  cat.push_back(make_system(
      "n4", "successor naturals, 4 rules (n1 with S for append)", sn,
      {{"S1", "x+0", "x"},
       {"S2'", "x+S(y)", "S(x)+y"},
       {"S3", "x*0", "0"},
       {"S4'", "x*S(y)", "x+(x*y)"}}));

  cat.push_back(make_system(
      "z4", "successor integers, 9 rules (z1 with S for append)", si,
      {{"S1", "x+0", "x"},
       {"S2'", "x+S(y)", "S(x)+y"},
       {"S3", "x*0", "0"},
       {"S4'", "x*S(y)", "x+(x*y)"},
       {"S5", "-0", "0"},
       {"S6", "S(-S(x))", "-x"},
       {"S7", "-(-x)", "x"},
       {"S8", "x+(-y)", "-((-x)+y)"},
       {"S9", "x*(-y)", "-(x*y)"}}));

  cat.push_back(make_system(
      "z1p", "z1 plus predecessor and subtraction, 13 rules", uix,
      {{"U1", "x+0", "x"},
       {"U2", "x+(y')", "(x')+y"},
       {"U3", "x*0", "0"},
       {"U4", "x*(y')", "x+(x*y)"},
       {"U5", "-0", "0"},
       {"U6", "(-(x'))'", "-x"},
       {"U7", "-(-x)", "x"},
       {"U8", "x+(-y)", "-((-x)+y)"},
       {"U9", "x*(-y)", "-(x*y)"},
       {"P1", "P(0)", "-(0')"},
       {"P2", "P(x')", "x"},
       {"P3", "P(-x)", "-(x')"},
       {"Sub", "x-y", "x+(-y)"}}));

  cat.push_back(make_system(
      "z2p", "z2 plus predecessor and subtraction, 13 rules", uix,
      {{"U1", "x+0", "x"},
       {"U2'", "x+(y')", "(x+y)'"},
       {"U3", "x*0", "0"},
       {"U4'", "x*(y')", "(x*y)+x"},
       {"U5", "-0", "0"},
       {"U6", "(-(x'))'", "-x"},
       {"U7", "-(-x)", "x"},
       {"U8", "x+(-y)", "-((-x)+y)"},
       {"U9", "x*(-y)", "-(x*y)"},
       {"P1", "P(0)", "-(0')"},
       {"P2", "P(x')", "x"},
       {"P3", "P(-x)", "-(x')"},
       {"Sub", "x-y", "x+(-y)"}}));

  cat.push_back(make_system(
      "z3p", "z3 plus predecessor and subtraction, 13 rules", six,
      {{"S1", "x+0", "x"},
       {"S2", "x+S(y)", "S(x+y)"},
       {"S3", "x*0", "0"},
       {"S4", "x*S(y)", "(x*y)+x"},
       {"S5", "-0", "0"},
       {"S6", "S(-S(x))", "-x"},
       {"S7", "-(-x)", "x"},
       {"S8", "x+(-y)", "-((-x)+y)"},
       {"S9", "x*(-y)", "-(x*y)"},
       {"P1", "P(0)", "-S(0)"},
       {"P2", "P(S(x))", "x"},
       {"P3", "P(-x)", "-S(x)"},
       {"Sub", "x-y", "x+(-y)"}}));

  cat.push_back(make_system(
      "z4p", "z4 plus predecessor and subtraction, 13 rules", six,
      {{"S1", "x+0", "x"},
       {"S2'", "x+S(y)", "S(x)+y"},
       {"S3", "x*0", "0"},
       {"S4'", "x*S(y)", "x+(x*y)"},
       {"S5", "-0", "0"},
       {"S6", "S(-S(x))", "-x"},
       {"S7", "-(-x)", "x"},
       {"S8", "x+(-y)", "-((-x)+y)"},
       {"S9", "x*(-y)", "-(x*y)"},
       {"P1", "P(0)", "-S(0)"},
       {"P2", "P(S(x))", "x"},
       {"P3", "P(-x)", "-S(x)"},
       {"Sub", "x-y", "x+(-y)"}}));

  return cat;
}

Report audit_catalog(const std::vector<System>& cat);

const std::vector<System>& catalog() {
  static const std::vector<System> cat = [] {
    std::vector<System> c = build_catalog();
    Report audit = audit_catalog(c);
    if (!audit.ok()) {
      std::string what = "catalog audit failed:";
      for (const auto& chk : audit.checks)
        if (!chk.passed) what += "\n  " + chk.name + ": " + chk.detail;
      throw std::logic_error(what);
    }
    return c;
  }();
  return cat;
}

const System* find_system(std::string_view id) {
  for (const System& s : catalog())
    if (s.id() == id) return &s;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Structural audit

bool same_rule(const Rule& a, const Rule& b) {
  return a.id == b.id && a.lhs == b.lhs && a.rhs == b.rhs;
}

// a's rules are the first rules of b, id for id.
bool rules_prefix(const System& a, const System& b) {
  if (a.rule_count() > b.rule_count()) return false;
  for (std::size_t i = 0; i < a.rule_count(); ++i)
    if (!same_rule(a.rules()[i], b.rules()[i])) return false;
  return true;
}

// a's rules equal b's with Append replaced by Succ (ids aside).
bool rules_renamed(const System& a, const System& b) {
  if (a.rule_count() != b.rule_count()) return false;
  for (std::size_t i = 0; i < a.rule_count(); ++i) {
    const Rule& ra = a.rules()[i];
    const Rule& rb = b.rules()[i];
    if (!(ra.lhs.rename_sym(Sym::Append, Sym::Succ) == rb.lhs)) return false;
    if (!(ra.rhs.rename_sym(Sym::Append, Sym::Succ) == rb.rhs)) return false;
  }
  return true;
}

std::vector<std::string> rule_ids(const System& s) {
  std::vector<std::string> ids;
  for (const Rule& r : s.rules()) ids.push_back(r.id);
  return ids;
}

Report audit_catalog(const std::vector<System>& cat) {
  Report rep;
  rep.title = "catalog structure";

  auto sys = [&cat](std::string_view id) -> const System& {
    for (const System& s : cat)
      if (s.id() == id) return s;
    throw UnknownSystemError(id);
  };

  const std::map<std::string, std::size_t> expected_counts = {
      {"d0", 15}, {"d1", 12}, {"d2", 12}, {"d2m", 12}, {"n1", 4}, {"z1", 9},
      {"n2", 4},  {"z2", 9},  {"n3", 4},  {"z3", 9},   {"n4", 4}, {"z4", 9},
      {"z1p", 13}, {"z2p", 13}, {"z3p", 13}, {"z4p", 13}};

  rep.add("catalog has 16 systems", cat.size() == 16,
          std::to_string(cat.size()) + " present");
  for (const System& s : cat) {
    auto it = expected_counts.find(s.id());
    rep.add(s.id() + ": expected rule count",
            it != expected_counts.end() && s.rule_count() == it->second,
            std::to_string(s.rule_count()) + " rules");
    bool shape_ok = true;
    std::set<std::string> ids;
    for (const Rule& r : s.rules())
      shape_ok = shape_ok && ids.insert(r.id).second && !r.lhs.is_var() &&
                 r.lhs.is_linear() && r.lhs.signature_valid(s.signature()) &&
                 r.rhs.signature_valid(s.signature());
    rep.add(s.id() + ": distinct ids, left-linear signature-valid rules",
            shape_ok);
  }

  // d1/d2 share all rules except the three primed replacements.
  {
    const System &d1 = sys("d1"), &d2 = sys("d2");
    bool ok = d1.rule_count() == d2.rule_count();
    std::vector<std::string> replaced;
    for (std::size_t i = 0; ok && i < d1.rule_count(); ++i)
      if (!same_rule(d1.rules()[i], d2.rules()[i]))
        replaced.push_back(d1.rules()[i].id + "->" + d2.rules()[i].id);
    ok = ok && replaced == std::vector<std::string>{"R2->R2'", "R3->R3'",
                                                    "R6->R6'"};
    rep.add("d2 replaces exactly R2, R3, R6 of d1", ok);
  }

  // d2m differs from d2 in the product unfolding rule only.
  {
    const System &d2 = sys("d2"), &m = sys("d2m");
    bool ok = d2.rule_count() == m.rule_count();
    for (std::size_t i = 0; ok && i < d2.rule_count(); ++i) {
      if (d2.rules()[i].id == "R6'")
        ok = m.rules()[i].id == "R6''" &&
             m.rules()[i].lhs == d2.rules()[i].lhs &&
             !(m.rules()[i].rhs == d2.rules()[i].rhs);
      else
        ok = same_rule(d2.rules()[i], m.rules()[i]);
    }
    rep.add("d2m differs from d2 only in the product rule", ok);
  }

  // d0 keeps every d1 rule but R11, adding the four case rules in its place.
  {
    const System &d0 = sys("d0"), &d1 = sys("d1");
    auto ids = rule_ids(d0);
    bool ok = ids == std::vector<std::string>{"R1", "R2", "R3", "R4", "R5",
                                              "R6", "R7", "R8", "R9", "R10",
                                              "r5", "r6", "r7", "r11", "R12"};
    for (const Rule& r : d1.rules())
      if (r.id != "R11")
        ok = ok && d0.find_rule(r.id) && same_rule(*d0.find_rule(r.id), r);
    ok = ok && d0.find_rule("R11") == nullptr;
    rep.add("d0 is d1 with R11 split into r5, r6, r7, r11", ok);
  }

  for (auto [n, z] : {std::pair{"n1", "z1"}, {"n2", "z2"}, {"n3", "z3"},
                      {"n4", "z4"}})
    rep.add(std::string(z) + " extends " + n, rules_prefix(sys(n), sys(z)));

  for (auto [base, ext] : {std::pair{"z1", "z1p"}, {"z2", "z2p"},
                           {"z3", "z3p"}, {"z4", "z4p"}}) {
    bool ok = rules_prefix(sys(base), sys(ext));
    auto ids = rule_ids(sys(ext));
    ok = ok && std::vector<std::string>(ids.end() - 4, ids.end()) ==
                   std::vector<std::string>{"P1", "P2", "P3", "Sub"};
    rep.add(std::string(ext) + " extends " + base +
                " with P1, P2, P3 and Sub",
            ok);
  }

  for (auto [u, s] : {std::pair{"n2", "n3"}, {"z2", "z3"}, {"n1", "n4"},
                      {"z1", "z4"}, {"z2p", "z3p"}, {"z1p", "z4p"}})
    rep.add(std::string(s) + " is " + u + " with S for append",
            rules_renamed(sys(u), sys(s)));

  return rep;
}

}  // namespace

const System& get_system(std::string_view id) {
  if (const System* s = find_system(id)) return *s;
  std::string valid;
  for (const System& s : catalog()) {
    if (!valid.empty()) valid += ", ";
    valid += s.id();
  }
  throw UnknownSystemError(std::string(id) + " (valid: " + valid + ")");
}

bool has_system(std::string_view id) { return find_system(id) != nullptr; }

std::vector<SystemInfo> list_systems() {
  std::vector<SystemInfo> out;
  for (const System& s : catalog())
    out.push_back({s.id(), s.description(), s.signature().name(),
                   s.rule_count()});
  return out;
}

Report catalog_audit() { return audit_catalog(catalog()); }

}  // namespace ddrs
