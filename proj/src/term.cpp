#include "ddrs/term.hpp"

#include <array>
#include <functional>
#include <utility>

namespace ddrs {

int arity(Sym s) {
  switch (s) {
    case Sym::Zero:
    case Sym::One:
      return 0;
    case Sym::Neg:
    case Sym::Append:
    case Sym::Succ:
    case Sym::Pred:
      return 1;
    case Sym::Plus:
    case Sym::Times:
    case Sym::Minus:
      return 2;
  }
  return 0;  // unreachable
}

std::string_view sym_name(Sym s) {
  switch (s) {
    case Sym::Zero: return "0";
    case Sym::One: return "1";
    case Sym::Neg: return "-";
    case Sym::Append: return "'";
    case Sym::Succ: return "S";
    case Sym::Pred: return "P";
    case Sym::Plus: return "+";
    case Sym::Times: return "*";
    case Sym::Minus: return "- (binary)";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Signature

Signature Signature::ring() { return Signature(SigKind::Ring, true); }
Signature Signature::unary(bool integers) {
  return Signature(SigKind::Unary, integers);
}
Signature Signature::successor(bool integers) {
  return Signature(SigKind::Successor, integers);
}
Signature Signature::ring_ext() { return Signature(SigKind::RingExt, true); }
Signature Signature::unary_ext() { return Signature(SigKind::UnaryExt, true); }
Signature Signature::successor_ext() {
  return Signature(SigKind::SuccessorExt, true);
}

bool Signature::is_ext() const {
  return kind_ == SigKind::RingExt || kind_ == SigKind::UnaryExt ||
         kind_ == SigKind::SuccessorExt;
}

bool Signature::unary_view() const {
  return kind_ == SigKind::Unary || kind_ == SigKind::UnaryExt;
}

bool Signature::contains(Sym s) const {
  switch (s) {
    case Sym::Zero:
    case Sym::Plus:
    case Sym::Times:
      return true;
    case Sym::One:
      return kind_ == SigKind::Ring || kind_ == SigKind::RingExt;
    case Sym::Append:
      return unary_view();
    case Sym::Succ:
      return kind_ == SigKind::Successor || kind_ == SigKind::SuccessorExt;
    case Sym::Neg:
      return integers_;
    case Sym::Pred:
    case Sym::Minus:
      return is_ext();
  }
  return false;
}

std::vector<Sym> Signature::symbols() const {
  std::vector<Sym> out;
  for (Sym s : {Sym::Zero, Sym::One, Sym::Neg, Sym::Append, Sym::Succ,
                Sym::Pred, Sym::Plus, Sym::Times, Sym::Minus})
    if (contains(s)) out.push_back(s);
  return out;
}

std::string Signature::name() const {
  switch (kind_) {
    case SigKind::Ring: return "ring";
    case SigKind::Unary: return "unary";
    case SigKind::Successor: return "successor";
    case SigKind::RingExt: return "ring-ext";
    case SigKind::UnaryExt: return "unary-ext";
    case SigKind::SuccessorExt: return "successor-ext";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Term

Term Term::build(Sym s, const Term* l, const Term* r) {
  auto node = std::make_shared<Node>();
  node->sym = s;
  node->size = 1;
  std::size_t h = std::hash<int>{}(static_cast<int>(s) + 1);
  constexpr std::size_t kMix = 0x9e3779b97f4a7c15ULL;
  if (l) {
    node->size += l->node_->size;
    h ^= l->node_->hash + kMix + (h << 6) + (h >> 2);
    node->kid[0] = l->node_;
  }
  if (r) {
    node->size += r->node_->size;
    h ^= r->node_->hash + kMix + (h << 6) + (h >> 2);
    node->kid[1] = r->node_;
  }
  node->hash = h;
  return Term(std::move(node));
}

Term Term::zero() { return build(Sym::Zero, nullptr, nullptr); }
Term Term::one() { return build(Sym::One, nullptr, nullptr); }
Term Term::neg(Term t) { return build(Sym::Neg, &t, nullptr); }
Term Term::append(Term t) { return build(Sym::Append, &t, nullptr); }
Term Term::succ(Term t) { return build(Sym::Succ, &t, nullptr); }
Term Term::pred(Term t) { return build(Sym::Pred, &t, nullptr); }
Term Term::plus(Term l, Term r) { return build(Sym::Plus, &l, &r); }
Term Term::times(Term l, Term r) { return build(Sym::Times, &l, &r); }
Term Term::minus(Term l, Term r) { return build(Sym::Minus, &l, &r); }

Term Term::make(Sym s, const std::vector<Term>& children) {
  if (static_cast<int>(children.size()) != arity(s))
    throw std::invalid_argument("make: wrong number of children for symbol " +
                                std::string(sym_name(s)));
  switch (arity(s)) {
    case 0: return build(s, nullptr, nullptr);
    case 1: return build(s, &children[0], nullptr);
    default: return build(s, &children[0], &children[1]);
  }
}

Term Term::child(int i) const {
  if (i < 0 || i >= num_children())
    throw std::out_of_range("term child index out of range");
  return Term(node_->kid[i]);
}

bool Term::operator==(const Term& o) const {
  const Node* a = node_.get();
  const Node* b = o.node_.get();
  if (a == b) return true;
  if (a->hash != b->hash || a->size != b->size || a->sym != b->sym)
    return false;
  for (int i = 0; i < arity(a->sym); ++i)
    if (!(Term(node_->kid[i]) == Term(o.node_->kid[i]))) return false;
  return true;
}

bool Term::signature_valid(const Signature& sig) const {
  if (!sig.contains(sym())) return false;
  for (int i = 0; i < num_children(); ++i)
    if (!child(i).signature_valid(sig)) return false;
  return true;
}

int term_compare(const Term& a, const Term& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a.sym() != b.sym())
    return static_cast<int>(a.sym()) < static_cast<int>(b.sym()) ? -1 : 1;
  for (int i = 0; i < a.num_children(); ++i)
    if (int c = term_compare(a.child(i), b.child(i)); c != 0) return c;
  return 0;
}

// ---------------------------------------------------------------------------
// Positions

Position Position::parse(std::string_view text) {
  if (text == "e") return Position();
  std::vector<int> path;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] < '0' || text[i] > '9')
      throw PositionError("bad position '" + std::string(text) + "'");
    int v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + (text[i] - '0');
      if (v > 2) throw PositionError("bad child index in position '" +
                                     std::string(text) + "'");
      ++i;
    }
    if (v < 1)
      throw PositionError("child indices are 1-based in position '" +
                          std::string(text) + "'");
    path.push_back(v);
    if (i < text.size()) {
      if (text[i] != '.')
        throw PositionError("bad position '" + std::string(text) + "'");
      ++i;
      if (i == text.size())
        throw PositionError("trailing '.' in position '" + std::string(text) +
                            "'");
    }
  }
  if (path.empty())
    throw PositionError("empty position (use 'e' for the root)");
  return Position(std::move(path));
}

Position Position::child(int index_1based) const {
  std::vector<int> p = path_;
  p.push_back(index_1based);
  return Position(std::move(p));
}

std::string Position::str() const {
  if (path_.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < path_.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path_[i]);
  }
  return out;
}

ParseError::ParseError(const std::string& msg, std::size_t off)
    : std::runtime_error(msg + " (at offset " + std::to_string(off) + ")"),
      offset(off) {}

SignatureError::SignatureError(const std::string& msg, std::string symbol,
                               std::size_t off)
    : std::runtime_error(msg + " (at offset " + std::to_string(off) + ")"),
      symbol(std::move(symbol)),
      offset(off) {}

Term subterm_at(const Term& t, const Position& p) {
  Term cur = t;
  for (int idx : p.path()) {
    if (idx < 1 || idx > cur.num_children())
      throw PositionError("position " + p.str() + " is not valid for term " +
                          render_term(t));
    cur = cur.child(idx - 1);
  }
  return cur;
}

static Term graft_rec(const Term& t, const std::vector<int>& path,
                      std::size_t at, const Term& r) {
  if (at == path.size()) return r;
  int idx = path[at];
  if (idx < 1 || idx > t.num_children())
    throw PositionError("position is not valid for term " + render_term(t));
  std::vector<Term> kids;
  for (int i = 0; i < t.num_children(); ++i) kids.push_back(t.child(i));
  kids[idx - 1] = graft_rec(kids[idx - 1], path, at + 1, r);
  return Term::make(t.sym(), kids);
}

Term graft_at(const Term& t, const Position& p, const Term& r) {
  return graft_rec(t, p.path(), 0, r);
}

// ---------------------------------------------------------------------------
// Rendering

Style parse_style(std::string_view name) {
  if (name == "full") return Style::Full;
  if (name == "minimal") return Style::Minimal;
  if (name == "compact") return Style::Compact;
  throw std::invalid_argument("unknown style '" + std::string(name) +
                              "' (expected full, minimal or compact)");
}

namespace {

// Binding strength of a node's printed form; parentheses are inserted
// when a child prints weaker than its context requires.
enum Prec : int { kSum = 0, kProd = 1, kPrefix = 2, kPostfix = 3, kAtom = 4 };

Prec prec_of(Sym s) {
  switch (s) {
    case Sym::Plus:
    case Sym::Minus: return kSum;
    case Sym::Times: return kProd;
    case Sym::Neg: return kPrefix;
    case Sym::Append: return kPostfix;
    default: return kAtom;  // 0, 1, S(...), P(...)
  }
}

// Matches a maximal append tower over 0; returns its height or 0.
int tower_height(const Term& t) {
  int h = 0;
  Term cur = t;
  while (cur.sym() == Sym::Append) {
    ++h;
    cur = cur.child(0);
  }
  return cur.sym() == Sym::Zero ? h : 0;
}

void render(const Term& t, Style style, int min_prec, std::string& out) {
  if (style == Style::Compact && t.sym() == Sym::Append) {
    if (int h = tower_height(t); h > 0) {
      out += '0';
      out.append(static_cast<std::size_t>(h), '1');
      return;
    }
  }
  Prec p = prec_of(t.sym());
  bool parens = style == Style::Full ? p != kAtom : p < min_prec;
  if (parens) out += '(';
  // In full style every subexpression is already parenthesized, so no
  // child needs a minimum strength.
  int sub = style == Style::Full ? kSum : 0;
  switch (t.sym()) {
    case Sym::Zero: out += '0'; break;
    case Sym::One: out += '1'; break;
    case Sym::Neg:
      out += '-';
      render(t.child(0), style, style == Style::Full ? sub : kPrefix, out);
      break;
    case Sym::Append:
      render(t.child(0), style, style == Style::Full ? sub : kPostfix, out);
      out += '\'';
      break;
    case Sym::Succ:
      out += "S(";
      render(t.child(0), style, kSum, out);
      out += ')';
      break;
    case Sym::Pred:
      out += "P(";
      render(t.child(0), style, kSum, out);
      out += ')';
      break;
    case Sym::Plus:
    case Sym::Minus:
      render(t.child(0), style, style == Style::Full ? sub : kSum, out);
      out += t.sym() == Sym::Plus ? '+' : '-';
      render(t.child(1), style, style == Style::Full ? sub : kProd, out);
      break;
    case Sym::Times:
      render(t.child(0), style, style == Style::Full ? sub : kProd, out);
      out += '*';
      render(t.child(1), style, style == Style::Full ? sub : kPrefix, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string render_term(const Term& t, Style style) {
  std::string out;
  render(t, style, 0, out);
  return out;
}

}  // namespace ddrs
