#pragma once

// The system catalog: sixteen ground-complete rewrite systems that
// compute integer (or natural-number) arithmetic over the ring, unary
// and successor signatures, each normalizing every ground term to the
// canonical form of its value.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ddrs/report.hpp"
#include "ddrs/rewrite.hpp"
#include "ddrs/term.hpp"
#include "ddrs/weights.hpp"

namespace ddrs {

struct UnknownSystemError : std::runtime_error {
  explicit UnknownSystemError(std::string_view id)
      : std::runtime_error("unknown system: " + std::string(id)) {}
};

class System {
 public:
  System(std::string id, std::string description, Signature sig,
         std::vector<Rule> rules);

  const std::string& id() const { return id_; }
  const std::string& description() const { return description_; }
  const Signature& signature() const { return sig_; }
  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t rule_count() const { return rules_.size(); }
  bool integers() const { return sig_.integers(); }
  WeightScheme weight_scheme() const { return scheme_; }
  View view() const;  // canonical-form view matching the signature

  // nullptr when the system has no rule with that id.
  const Rule* find_rule(std::string_view rule_id) const;

 private:
  std::string id_;
  std::string description_;
  Signature sig_;
  std::vector<Rule> rules_;
  WeightScheme scheme_;
};

struct SystemInfo {
  std::string id;
  std::string description;
  std::string signature;
  std::size_t rule_count = 0;
};

// Catalog lookup. Throws UnknownSystemError for ids not in the catalog.
const System& get_system(std::string_view id);

// All systems in catalog order:
//   d0 d1 d2 d2m n1 z1 n2 z2 n3 z3 n4 z4 z1p z2p z3p z4p
std::vector<SystemInfo> list_systems();

bool has_system(std::string_view id);

// Structural invariants of the shipped catalog: per system, distinct
// rule ids, left-linear non-variable left-hand sides, right-hand
// variables bound on the left, expected rule counts; across systems,
// the documented overlaps (d2m differs from d2 in one rule, the
// extended systems start with their base's rules, and the successor
// systems are constructor renamings of their unary counterparts).
Report catalog_audit();

}  // namespace ddrs
