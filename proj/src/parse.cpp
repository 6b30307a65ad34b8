#include <cctype>
#include <string>
#include <vector>

#include "ddrs/rewrite.hpp"
#include "ddrs/term.hpp"

// Recursive-descent parser shared by ground terms and rule patterns.
// Grammar (whitespace insignificant):
//   sum     := prod (("+" | "-") prod)*          left-associative
//   prod    := prefix ("*" prefix)*              left-associative
//   prefix  := "-" prefix | postfix
//   postfix := atom ("'")*
//   atom    := "0" | "1" | "S(" sum ")" | "P(" sum ")" | "(" sum ")"
//            | digitstring | variable            (variables: patterns only)
//   digitstring := "0" "1"+                      (unary signatures only)

namespace ddrs {

namespace {

struct TermOps {
  using Out = Term;
  static Out mk(Sym s, std::vector<Out> kids) { return Term::make(s, kids); }
  static Out var(const std::string&) {
    throw std::logic_error("variable in ground-term parse");
  }
};

struct PatternOps {
  using Out = Pattern;
  static Out mk(Sym s, std::vector<Out> kids) { return Pattern::op(s, kids); }
  static Out var(const std::string& name) { return Pattern::var(name); }
};

template <class Ops>
class Parser {
 public:
  using Out = typename Ops::Out;

  Parser(std::string_view text, const Signature* sig, bool allow_vars)
      : text_(text),
        sig_(sig),
        vars_(allow_vars),
        digits_(sig ? sig->unary_view() : true) {}

  Out run() {
    Out t = sum();
    skip_ws();
    if (i_ < text_.size())
      throw ParseError("unexpected trailing input", i_);
    return t;
  }

 private:
  void skip_ws() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_])))
      ++i_;
  }

  char peek() {
    skip_ws();
    return i_ < text_.size() ? text_[i_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }

  void expect(char c, const char* what) {
    if (!eat(c))
      throw ParseError(std::string("expected '") + c + "' " + what, i_);
  }

  // Signature gate; a null signature admits every symbol.
  void need(Sym s, std::size_t off) {
    if (sig_ && !sig_->contains(s))
      throw SignatureError("symbol '" + std::string(sym_name(s)) +
                               "' is not in signature " + sig_->name(),
                           std::string(sym_name(s)), off);
  }

  Out mk1(Sym s, Out a) { return Ops::mk(s, {std::move(a)}); }
  Out mk2(Sym s, Out a, Out b) {
    return Ops::mk(s, {std::move(a), std::move(b)});
  }

  Out sum() {
    Out t = prod();
    for (;;) {
      std::size_t off = (skip_ws(), i_);
      if (eat('+')) {
        t = mk2(Sym::Plus, std::move(t), prod());
      } else if (eat('-')) {
        need(Sym::Minus, off);
        t = mk2(Sym::Minus, std::move(t), prod());
      } else {
        return t;
      }
    }
  }

  Out prod() {
    Out t = prefix();
    while (eat('*')) t = mk2(Sym::Times, std::move(t), prefix());
    return t;
  }

  Out prefix() {
    std::size_t off = (skip_ws(), i_);
    if (eat('-')) {
      need(Sym::Neg, off);
      return mk1(Sym::Neg, prefix());
    }
    return postfix();
  }

  Out postfix() {
    Out t = atom();
    for (;;) {
      std::size_t off = (skip_ws(), i_);
      if (!eat('\'')) return t;
      need(Sym::Append, off);
      t = mk1(Sym::Append, std::move(t));
    }
  }

  Out atom() {
    std::size_t off = (skip_ws(), i_);
    if (i_ >= text_.size()) throw ParseError("expected a term", off);
    char c = text_[i_];
    if (c == '(') {
      ++i_;
      Out t = sum();
      expect(')', "to close '('");
      return t;
    }
    if (c == '0') {
      ++i_;
      if (digits_ && i_ < text_.size() && text_[i_] == '1') {
        need(Sym::Append, i_);
        Out t = Ops::mk(Sym::Zero, {});
        while (i_ < text_.size() && text_[i_] == '1') {
          t = mk1(Sym::Append, std::move(t));
          ++i_;
        }
        return t;
      }
      return Ops::mk(Sym::Zero, {});
    }
    if (c == '1') {
      need(Sym::One, off);
      ++i_;
      return Ops::mk(Sym::One, {});
    }
    if (c == 'S' || c == 'P') {
      Sym s = c == 'S' ? Sym::Succ : Sym::Pred;
      need(s, off);
      ++i_;
      expect('(', c == 'S' ? "after S" : "after P");
      Out t = sum();
      expect(')', c == 'S' ? "to close S(" : "to close P(");
      return mk1(s, std::move(t));
    }
    if (vars_ && c >= 'a' && c <= 'z') {
      std::string name;
      while (i_ < text_.size() &&
             (std::islower(static_cast<unsigned char>(text_[i_])) ||
              std::isdigit(static_cast<unsigned char>(text_[i_])) ||
              text_[i_] == '_'))
        name += text_[i_++];
      return Ops::var(name);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", off);
  }

  std::string_view text_;
  std::size_t i_ = 0;
  const Signature* sig_;
  bool vars_;
  bool digits_;
};

}  // namespace

Term parse_term(std::string_view text, const Signature& sig) {
  return Parser<TermOps>(text, &sig, false).run();
}

Term parse_term_any(std::string_view text) {
  return Parser<TermOps>(text, nullptr, false).run();
}

Pattern parse_pattern(std::string_view text, const Signature& sig) {
  return Parser<PatternOps>(text, &sig, true).run();
}

// ---------------------------------------------------------------------------
// Pattern rendering, in the style of the rule tables: operands of the
// infix and prefix/postfix operators are parenthesized unless they are
// a variable or a constant, e.g. "x+(-y)", "(-(x'))'", "S(-S(x))".

namespace {

void render_pat(const Pattern& p, std::string& out);

void render_operand(const Pattern& p, std::string& out) {
  bool atomic = p.is_var() || p.sym() == Sym::Zero || p.sym() == Sym::One ||
                (!p.is_var() && (p.sym() == Sym::Succ || p.sym() == Sym::Pred));
  if (atomic) {
    render_pat(p, out);
  } else {
    out += '(';
    render_pat(p, out);
    out += ')';
  }
}

void render_pat(const Pattern& p, std::string& out) {
  if (p.is_var()) {
    out += p.var_name();
    return;
  }
  switch (p.sym()) {
    case Sym::Zero: out += '0'; break;
    case Sym::One: out += '1'; break;
    case Sym::Neg:
      out += '-';
      render_operand(p.child(0), out);
      break;
    case Sym::Append:
      render_operand(p.child(0), out);
      out += '\'';
      break;
    case Sym::Succ:
    case Sym::Pred:
      out += p.sym() == Sym::Succ ? "S(" : "P(";
      render_pat(p.child(0), out);
      out += ')';
      break;
    case Sym::Plus:
    case Sym::Minus:
    case Sym::Times:
      render_operand(p.child(0), out);
      out += p.sym() == Sym::Plus ? '+' : p.sym() == Sym::Minus ? '-' : '*';
      render_operand(p.child(1), out);
      break;
  }
}

}  // namespace

std::string render_pattern(const Pattern& p) {
  std::string out;
  render_pat(p, out);
  return out;
}

}  // namespace ddrs
