#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ddrs/catalog.hpp"
#include "ddrs/rewrite.hpp"
#include "ddrs/semantics.hpp"
#include "ddrs/weights.hpp"

using namespace ddrs;

namespace {

std::string rule_text(const System& sys, std::string_view id) {
  const Rule* r = sys.find_rule(id);
  REQUIRE(r != nullptr);
  return render_pattern(r->lhs) + " -> " + render_pattern(r->rhs);
}

std::vector<std::string> ids_of(const System& sys) {
  std::vector<std::string> out;
  for (const Rule& r : sys.rules()) out.push_back(r.id);
  return out;
}

}  // namespace

TEST_CASE("the catalog lists sixteen systems in a fixed order") {
  std::vector<SystemInfo> infos = list_systems();
  std::vector<std::string> ids;
  for (const SystemInfo& i : infos) ids.push_back(i.id);
  CHECK(ids == std::vector<std::string>{"d0", "d1", "d2", "d2m", "n1", "z1",
                                        "n2", "z2", "n3", "z3", "n4", "z4",
                                        "z1p", "z2p", "z3p", "z4p"});

  for (const SystemInfo& i : infos) {
    const System& sys = get_system(i.id);
    CHECK(sys.id() == i.id);
    CHECK(sys.description() == i.description);
    CHECK(sys.signature().name() == i.signature);
    CHECK(sys.rule_count() == i.rule_count);
    CHECK_FALSE(i.description.empty());
  }
}

TEST_CASE("rule counts and signatures per system") {
  auto expect = [](std::string_view id, std::size_t rules,
                   std::string_view sig_name, bool integers) {
    const System& sys = get_system(id);
    CHECK(sys.rule_count() == rules);
    CHECK(sys.signature().name() == sig_name);
    CHECK(sys.integers() == integers);
  };
  expect("d0", 15, "ring", true);
  expect("d1", 12, "ring", true);
  expect("d2", 12, "ring", true);
  expect("d2m", 12, "ring", true);
  expect("n1", 4, "unary", false);
  expect("n2", 4, "unary", false);
  expect("z1", 9, "unary", true);
  expect("z2", 9, "unary", true);
  expect("n3", 4, "successor", false);
  expect("n4", 4, "successor", false);
  expect("z3", 9, "successor", true);
  expect("z4", 9, "successor", true);
  expect("z1p", 13, "unary-ext", true);
  expect("z2p", 13, "unary-ext", true);
  expect("z3p", 13, "successor-ext", true);
  expect("z4p", 13, "successor-ext", true);
}

TEST_CASE("lookup by id") {
  CHECK(has_system("d2m"));
  CHECK_FALSE(has_system("d3"));
  CHECK_FALSE(has_system(""));
  CHECK(&get_system("z1") == &get_system("z1"));  // one shared instance

  CHECK_THROWS_AS(get_system("zzz"), UnknownSystemError);
  try {
    get_system("zzz");
  } catch (const UnknownSystemError& e) {
    std::string msg = e.what();
    CHECK(msg.find("unknown system: zzz") != std::string::npos);
    CHECK(msg.find("d0") != std::string::npos);  // lists the valid ids
    CHECK(msg.find("z4p") != std::string::npos);
  }
}

TEST_CASE("find_rule") {
  const System& d1 = get_system("d1");
  const Rule* r9 = d1.find_rule("R9");
  REQUIRE(r9 != nullptr);
  CHECK(r9->id == "R9");
  CHECK(render_pattern(r9->lhs) == "(-(x+1))+1");
  CHECK(render_pattern(r9->rhs) == "-x");
  CHECK(d1.find_rule("U1") == nullptr);
  CHECK(d1.find_rule("R2'") == nullptr);  // primed ids live in d2
}

TEST_CASE("the ring systems' rule tables") {
  const System& d1 = get_system("d1");
  CHECK(ids_of(d1) == std::vector<std::string>{"R1", "R2", "R3", "R4", "R5",
                                               "R6", "R7", "R8", "R9", "R10",
                                               "R11", "R12"});
  CHECK(rule_text(d1, "R1") == "x+0 -> x");
  CHECK(rule_text(d1, "R2") == "0+x -> x");
  CHECK(rule_text(d1, "R3") == "x+(y+z) -> (x+y)+z");
  CHECK(rule_text(d1, "R4") == "x*0 -> 0");
  CHECK(rule_text(d1, "R5") == "x*1 -> x");
  CHECK(rule_text(d1, "R6") == "x*(y+z) -> (x*y)+(x*z)");
  CHECK(rule_text(d1, "R7") == "-0 -> 0");
  CHECK(rule_text(d1, "R8") == "(-1)+1 -> 0");
  CHECK(rule_text(d1, "R9") == "(-(x+1))+1 -> -x");
  CHECK(rule_text(d1, "R10") == "-(-x) -> x");
  CHECK(rule_text(d1, "R11") == "x+(-y) -> -((-x)+y)");
  CHECK(rule_text(d1, "R12") == "x*(-y) -> -(x*y)");

  const System& d2 = get_system("d2");
  CHECK(ids_of(d2) == std::vector<std::string>{"R1", "R2'", "R3'", "R4", "R5",
                                               "R6'", "R7", "R8", "R9", "R10",
                                               "R11", "R12"});
  CHECK(rule_text(d2, "R2'") == "0+1 -> 1");
  CHECK(rule_text(d2, "R3'") == "x+(y+1) -> (x+y)+1");
  CHECK(rule_text(d2, "R6'") == "x*(y+1) -> (x*y)+x");

  const System& d2m = get_system("d2m");
  CHECK(rule_text(d2m, "R6''") == "x*(y+1) -> x+(x*y)");

  const System& d0 = get_system("d0");
  CHECK(ids_of(d0) == std::vector<std::string>{"R1", "R2", "R3", "R4", "R5",
                                               "R6", "R7", "R8", "R9", "R10",
                                               "r5", "r6", "r7", "r11",
                                               "R12"});
  CHECK(rule_text(d0, "r5") == "1+(-1) -> 0");
  CHECK(rule_text(d0, "r6") == "(x+1)+(-1) -> x");
  CHECK(rule_text(d0, "r7") == "x+(-(y+1)) -> (x+(-y))+(-1)");
  CHECK(rule_text(d0, "r11") == "(-x)+(-y) -> -(x+y)");
}

TEST_CASE("the unary and successor systems' rule tables") {
  const System& n1 = get_system("n1");
  CHECK(ids_of(n1) == std::vector<std::string>{"U1", "U2", "U3", "U4"});
  CHECK(rule_text(n1, "U1") == "x+0 -> x");
  CHECK(rule_text(n1, "U2") == "x+(y') -> (x')+y");
  CHECK(rule_text(n1, "U3") == "x*0 -> 0");
  CHECK(rule_text(n1, "U4") == "x*(y') -> x+(x*y)");

  const System& n2 = get_system("n2");
  CHECK(rule_text(n2, "U2'") == "x+(y') -> (x+y)'");
  CHECK(rule_text(n2, "U4'") == "x*(y') -> (x*y)+x");

  const System& z1 = get_system("z1");
  CHECK(ids_of(z1) == std::vector<std::string>{"U1", "U2", "U3", "U4", "U5",
                                               "U6", "U7", "U8", "U9"});
  CHECK(rule_text(z1, "U5") == "-0 -> 0");
  CHECK(rule_text(z1, "U6") == "(-(x'))' -> -x");
  CHECK(rule_text(z1, "U7") == "-(-x) -> x");
  CHECK(rule_text(z1, "U8") == "x+(-y) -> -((-x)+y)");
  CHECK(rule_text(z1, "U9") == "x*(-y) -> -(x*y)");

  const System& n3 = get_system("n3");
  CHECK(ids_of(n3) == std::vector<std::string>{"S1", "S2", "S3", "S4"});
  CHECK(rule_text(n3, "S2") == "x+S(y) -> S(x+y)");
  CHECK(rule_text(n3, "S4") == "x*S(y) -> (x*y)+x");

  const System& n4 = get_system("n4");
  CHECK(rule_text(n4, "S2'") == "x+S(y) -> S(x)+y");
  CHECK(rule_text(n4, "S4'") == "x*S(y) -> x+(x*y)");

  const System& z3 = get_system("z3");
  CHECK(rule_text(z3, "S6") == "S(-S(x)) -> -x");
}

TEST_CASE("the extended systems add predecessor and subtraction rules") {
  const System& z1p = get_system("z1p");
  std::vector<std::string> ids = ids_of(z1p);
  CHECK(std::vector<std::string>(ids.begin(), ids.begin() + 9) ==
        ids_of(get_system("z1")));
  CHECK(std::vector<std::string>(ids.end() - 4, ids.end()) ==
        std::vector<std::string>{"P1", "P2", "P3", "Sub"});
  CHECK(rule_text(z1p, "P1") == "P(0) -> -(0')");
  CHECK(rule_text(z1p, "P2") == "P(x') -> x");
  CHECK(rule_text(z1p, "P3") == "P(-x) -> -(x')");
  CHECK(rule_text(z1p, "Sub") == "x-y -> x+(-y)");

  const System& z3p = get_system("z3p");
  CHECK(rule_text(z3p, "P1") == "P(0) -> -S(0)");
  CHECK(rule_text(z3p, "P2") == "P(S(x)) -> x");
  CHECK(rule_text(z3p, "P3") == "P(-x) -> -S(x)");
  CHECK(rule_text(z3p, "Sub") == "x-y -> x+(-y)");
}

TEST_CASE("weight schemes and views match the signatures") {
  CHECK(get_system("d1").weight_scheme() == WeightScheme::R);
  CHECK(get_system("d0").weight_scheme() == WeightScheme::R);
  CHECK(get_system("n1").weight_scheme() == WeightScheme::U);
  CHECK(get_system("z2").weight_scheme() == WeightScheme::U);
  CHECK(get_system("n3").weight_scheme() == WeightScheme::S);
  CHECK(get_system("z4").weight_scheme() == WeightScheme::S);
  CHECK(get_system("z2p").weight_scheme() == WeightScheme::UExt);
  CHECK(get_system("z4p").weight_scheme() == WeightScheme::SExt);

  CHECK(get_system("d1").view() == View{ViewKind::Ring, true});
  CHECK(get_system("n1").view() == View{ViewKind::Unary, false});
  CHECK(get_system("z1").view() == View{ViewKind::Unary, true});
  CHECK(get_system("n3").view() == View{ViewKind::Successor, false});
  CHECK(get_system("z3p").view() == View{ViewKind::Successor, true});
}

TEST_CASE("every catalog rule is well-formed") {
  for (const SystemInfo& info : list_systems()) {
    const System& sys = get_system(info.id);
    std::set<std::string> seen;
    for (const Rule& r : sys.rules()) {
      CAPTURE(info.id);
      CAPTURE(r.id);
      CHECK(seen.insert(r.id).second);       // ids are unique
      CHECK_FALSE(r.lhs.is_var());           // lhs is not a lone variable
      CHECK(r.lhs.is_linear());              // no repeated lhs variable
      CHECK(r.lhs.signature_valid(sys.signature()));
      CHECK(r.rhs.signature_valid(sys.signature()));
      // every rhs variable is bound on the left
      auto lv = r.lhs.variables();
      for (const std::string& v : r.rhs.variables())
        CHECK(std::find(lv.begin(), lv.end(), v) != lv.end());
    }
  }
}

TEST_CASE("the catalog audit passes and covers the documented overlaps") {
  Report audit = catalog_audit();
  CHECK(audit.ok());
  CHECK(audit.failures() == 0);

  auto has_check = [&](std::string_view needle) {
    for (const CheckResult& c : audit.checks)
      if (c.name.find(needle) != std::string::npos) return c.passed;
    FAIL("no audit check mentions " << needle);
    return false;
  };
  CHECK(has_check("catalog has 16 systems"));
  CHECK(has_check("d2 replaces exactly R2, R3, R6 of d1"));
  CHECK(has_check("d2m differs from d2 only in the product rule"));
  CHECK(has_check("d0 is d1 with R11 split into r5, r6, r7, r11"));
  CHECK(has_check("z1 extends n1"));
  CHECK(has_check("z1p extends z1 with P1, P2, P3 and Sub"));
  CHECK(has_check("n3 is n2 with S for append"));
  CHECK(has_check("z3 is z2 with S for append"));
  CHECK(has_check("n4 is n1 with S for append"));
  CHECK(has_check("z4 is z1 with S for append"));
  CHECK(has_check("z3p is z2p with S for append"));
  CHECK(has_check("z4p is z1p with S for append"));
}
