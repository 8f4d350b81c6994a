#include "ccg/term_io.hpp"

#include <cctype>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "ccg/errors.hpp"

namespace ccg {
namespace {

enum class Tok { Ident, LParen, RParen, Dot, And, Impl, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }

  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      cur_ = {Tok::End, "", start};
      return;
    }
    char c = text_[pos_];
    if (c == '(') { ++pos_; cur_ = {Tok::LParen, "(", start}; return; }
    if (c == ')') { ++pos_; cur_ = {Tok::RParen, ")", start}; return; }
    if (c == '.') { ++pos_; cur_ = {Tok::Dot, ".", start}; return; }
    if (c == '&' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '&') {
      pos_ += 2; cur_ = {Tok::And, "&&", start}; return;
    }
    if (c == '>' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      pos_ += 2; cur_ = {Tok::Impl, ">>", start}; return;
    }
    if (ident_start(c)) {
      ++pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '\'') ++pos_;
      cur_ = {Tok::Ident, std::string(text_.substr(start, pos_ - start)), start};
      return;
    }
    throw SyntaxError("unexpected character '" + std::string(1, c) + "' at position " +
                          std::to_string(start),
                      start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token cur_;
};

bool is_binder_kw(const Token& t) {
  return t.kind == Tok::Ident &&
         (t.text == "lam" || t.text == "forall" || t.text == "exists");
}

class Parser {
public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Term run() {
    Term t = term();
    const Token& rest = lex_.peek();
    if (rest.kind != Tok::End)
      throw SyntaxError("trailing input '" + rest.text + "' at position " +
                            std::to_string(rest.pos),
                        rest.pos);
    return t;
  }

private:
  [[noreturn]] void fail(const std::string& msg, const Token& at) {
    throw SyntaxError(msg + " at position " + std::to_string(at.pos), at.pos);
  }

  Term term() {
    if (is_binder_kw(lex_.peek())) {
      Token kw = lex_.next();
      Token name = lex_.next();
      if (name.kind != Tok::Ident) fail("expected bound variable after '" + kw.text + "'", name);
      if (is_binder_kw(name)) fail("'" + name.text + "' is a reserved word", name);
      Token dot = lex_.next();
      if (dot.kind != Tok::Dot) fail("expected '.' after bound variable", dot);
      env_.push_back(name.text);
      Term body = term();
      env_.pop_back();
      if (kw.text == "lam") return lam(body);
      if (kw.text == "forall") return forall(body);
      return exists(body);
    }
    return impl_chain();
  }

  Term impl_chain() {
    Term left = conj_chain();
    if (lex_.peek().kind == Tok::Impl) {
      lex_.next();
      Term right = is_binder_kw(lex_.peek()) ? term() : impl_chain();
      return app(app(con(">>"), left), right);
    }
    return left;
  }

  Term conj_chain() {
    Term left = app_chain();
    if (lex_.peek().kind == Tok::And) {
      lex_.next();
      Term right = is_binder_kw(lex_.peek()) ? term() : conj_chain();
      return app(app(con("&&"), left), right);
    }
    return left;
  }

  bool starts_atom(const Token& t) const {
    return t.kind == Tok::LParen || (t.kind == Tok::Ident && !is_binder_kw(t));
  }

  Term app_chain() {
    const Token& first = lex_.peek();
    if (!starts_atom(first)) fail("expected a term, got '" + first.text + "'", first);
    Term t = atom();
    while (starts_atom(lex_.peek())) t = app(t, atom());
    return t;
  }

  Term atom() {
    Token t = lex_.next();
    if (t.kind == Tok::LParen) {
      Term inner = term();
      Token close = lex_.next();
      if (close.kind != Tok::RParen) fail("expected ')'", close);
      return inner;
    }
    // innermost binding of the name wins; unbound names are constants
    for (std::size_t i = env_.size(); i-- > 0;)
      if (env_[i] == t.text) return var(static_cast<int>(env_.size() - 1 - i));
    return con(t.text);
  }

  Lexer lex_;
  std::vector<std::string> env_;
};

// ---- printer ---------------------------------------------------------

// precedence contexts, loosest to tightest
constexpr int kPrecTop = 0;   // binder bodies
constexpr int kPrecImpl = 1;  // '>>'
constexpr int kPrecConj = 2;  // '&&'
constexpr int kPrecApp = 3;   // application chain
constexpr int kPrecAtom = 4;  // argument position

void collect_consts(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Const:
      out.insert(t.const_name());
      break;
    case TermKind::App:
      collect_consts(t.fun(), out);
      collect_consts(t.arg(), out);
      break;
    case TermKind::Abs:
    case TermKind::Forall:
    case TermKind::Exists:
      collect_consts(t.scope(), out);
      break;
    default:
      break;
  }
}

bool infix_op(const Term& t, const char* name) {
  return t.kind() == TermKind::App && t.fun().kind() == TermKind::App &&
         t.fun().fun().kind() == TermKind::Const &&
         t.fun().fun().const_name() == name;
}

struct Printer {
  const std::set<std::string>& taken;
  std::vector<std::string> names;  // binder name stack, outermost first
  int next_index = 0;

  std::string fresh_name() {
    for (;;) {
      std::string n = next_index == 0 ? "x" : "x" + std::to_string(next_index);
      ++next_index;
      if (!taken.count(n)) return n;
    }
  }

  void pp(const Term& t, int prec, std::string& out) {
    switch (t.kind()) {
      case TermKind::Const:
        out += t.const_name();
        return;
      case TermKind::Var: {
        int i = t.var_index();
        if (i >= 0 && i < static_cast<int>(names.size()))
          out += names[names.size() - 1 - i];
        else
          out += "?v" + std::to_string(i);  // dangling index, debug only
        return;
      }
      case TermKind::Scoped:
        out += "#c" + std::to_string(t.scoped_id());  // never in final LFs
        return;
      case TermKind::Abs:
      case TermKind::Forall:
      case TermKind::Exists: {
        bool paren = prec > kPrecTop;
        if (paren) out += '(';
        out += t.kind() == TermKind::Abs ? "lam "
               : t.kind() == TermKind::Forall ? "forall "
                                              : "exists ";
        std::string n = fresh_name();
        out += n;
        out += ". ";
        names.push_back(n);
        pp(t.scope(), kPrecTop, out);
        names.pop_back();
        if (paren) out += ')';
        return;
      }
      case TermKind::App: {
        if (infix_op(t, "&&")) {
          bool paren = prec > kPrecConj;
          if (paren) out += '(';
          pp(t.fun().arg(), kPrecConj + 1, out);
          out += " && ";
          pp(t.arg(), kPrecConj, out);
          if (paren) out += ')';
          return;
        }
        if (infix_op(t, ">>")) {
          bool paren = prec > kPrecImpl;
          if (paren) out += '(';
          pp(t.fun().arg(), kPrecImpl + 1, out);
          out += " >> ";
          pp(t.arg(), kPrecImpl, out);
          if (paren) out += ')';
          return;
        }
        bool paren = prec > kPrecApp;
        if (paren) out += '(';
        pp(t.fun(), kPrecApp, out);
        out += ' ';
        pp(t.arg(), kPrecAtom, out);
        if (paren) out += ')';
        return;
      }
    }
  }
};

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).run(); }

std::string print_term(const Term& t) {
  std::set<std::string> consts;
  collect_consts(t, consts);
  Printer p{consts, {}, 0};
  std::string out;
  p.pp(t, kPrecTop, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  return os << (t ? print_term(t) : std::string("<null term>"));
}

}  // namespace ccg
