#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ddrs {

// Function symbols used across all signatures. Arities: Zero/One 0;
// Neg/Append/Succ/Pred 1; Plus/Times/Minus 2. Append is the postfix
// tally constructor (written t'), Succ the prefix successor S(t).
enum class Sym : std::uint8_t {
  Zero,
  One,
  Neg,
  Append,
  Succ,
  Pred,
  Plus,
  Times,
  Minus,
};

int arity(Sym s);

// Stable display name used in diagnostics ("0", "1", "-", "'", "S", "P",
// "+", "*", "- (binary)").
std::string_view sym_name(Sym s);

enum class SigKind : std::uint8_t {
  Ring,
  Unary,
  Successor,
  RingExt,
  UnaryExt,
  SuccessorExt,
};

/// A signature is a base symbol family plus a flag saying whether the
/// integer constructors are present. Dropping `integers` removes Neg
/// (and Pred/Minus in the -ext families), which yields the
/// natural-number signatures.
class Signature {
 public:
  static Signature ring();
  static Signature unary(bool integers = true);
  static Signature successor(bool integers = true);
  static Signature ring_ext();
  static Signature unary_ext();
  static Signature successor_ext();

  SigKind kind() const { return kind_; }
  bool integers() const { return integers_; }
  bool is_ext() const;
  // True for the append-based families, where digit-string sugar applies.
  bool unary_view() const;
  bool contains(Sym s) const;
  // Member symbols in declaration order of Sym.
  std::vector<Sym> symbols() const;
  std::string name() const;

  bool operator==(const Signature& o) const {
    return kind_ == o.kind_ && integers_ == o.integers_;
  }

 private:
  Signature(SigKind kind, bool integers) : kind_(kind), integers_(integers) {}
  SigKind kind_;
  bool integers_;
};

/// An immutable first-order term. Copies are cheap (shared structure);
/// equality is structural. There is no empty term.
class Term {
 public:
  static Term zero();
  static Term one();
  static Term neg(Term t);
  static Term append(Term t);
  static Term succ(Term t);
  static Term pred(Term t);
  static Term plus(Term l, Term r);
  static Term times(Term l, Term r);
  static Term minus(Term l, Term r);
  static Term make(Sym s, const std::vector<Term>& children);

  Sym sym() const { return node_->sym; }
  int num_children() const { return arity(node_->sym); }
  Term child(int i) const;  // 0-based
  std::uint32_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }

  bool signature_valid(const Signature& sig) const;

 private:
  struct Node {
    Sym sym;
    std::uint32_t size;
    std::size_t hash;
    std::shared_ptr<const Node> kid[2];
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term build(Sym s, const Term* l, const Term* r);
  std::shared_ptr<const Node> node_;
};

// Total order: node count first, then root symbol, then children
// lexicographically under the same order. Ground-term enumeration emits
// terms in exactly this order.
int term_compare(const Term& a, const Term& b);

struct TermLess {
  bool operator()(const Term& a, const Term& b) const {
    return term_compare(a, b) < 0;
  }
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// A path from the root: 1-based child indices, empty = root. Rendered
/// as "e" for the root or dot-separated indices like "1.2".
class Position {
 public:
  Position() = default;
  explicit Position(std::vector<int> path) : path_(std::move(path)) {}
  static Position root() { return Position(); }
  static Position parse(std::string_view text);

  Position child(int index_1based) const;
  const std::vector<int>& path() const { return path_; }
  std::size_t depth() const { return path_.size(); }
  bool is_root() const { return path_.empty(); }
  std::string str() const;

  bool operator==(const Position& o) const { return path_ == o.path_; }
  bool operator!=(const Position& o) const { return path_ != o.path_; }
  // Lexicographic order; among positions of equal depth this is
  // left-to-right order.
  bool operator<(const Position& o) const { return path_ < o.path_; }

 private:
  std::vector<int> path_;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t offset);
  std::size_t offset;
};

struct SignatureError : std::runtime_error {
  SignatureError(const std::string& msg, std::string symbol, std::size_t offset);
  std::string symbol;
  std::size_t offset;
};

struct PositionError : std::runtime_error {
  explicit PositionError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class Style : std::uint8_t {
  Full,     // every operator application parenthesized
  Minimal,  // only the parentheses the grammar needs
  Compact,  // minimal, with append towers over 0 printed as digit strings
};

Style parse_style(std::string_view name);

Term parse_term(std::string_view text, const Signature& sig);

// Parses over the union of all signatures (every symbol allowed, digit
// sugar enabled). Used by signature-agnostic front ends.
Term parse_term_any(std::string_view text);

std::string render_term(const Term& t, Style style = Style::Minimal);

Term subterm_at(const Term& t, const Position& p);

// Replaces the subtree at p with r; graft_at(t, p, subterm_at(t, p)) == t.
Term graft_at(const Term& t, const Position& p, const Term& r);

}  // namespace ddrs
