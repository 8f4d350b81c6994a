#include "ccg/category.hpp"

#include <cctype>
#include <functional>
#include <ostream>

#include "ccg/errors.hpp"

namespace ccg {
namespace {

std::size_t hash_mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

detail::CatNodePtr make_node(detail::CatNode n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x9e3779b97f4a7c15ULL;
  if (n.kind == CatKind::Atomic) {
    h = hash_mix(h, std::hash<std::string>{}(n.name));
  } else {
    h = hash_mix(h, n.arg->hash);
    h = hash_mix(h, n.res->hash);
  }
  n.hash = h;
  return std::make_shared<const detail::CatNode>(std::move(n));
}

}  // namespace

Cat atom(std::string name) {
  detail::CatNode n{CatKind::Atomic};
  n.name = std::move(name);
  return Cat(make_node(std::move(n)));
}

Cat fs(Cat arg, Cat res) {
  detail::CatNode n{CatKind::Fs};
  n.arg = arg.node_;
  n.res = res.node_;
  return Cat(make_node(std::move(n)));
}

Cat bs(Cat arg, Cat res) {
  detail::CatNode n{CatKind::Bs};
  n.arg = arg.node_;
  n.res = res.node_;
  return Cat(make_node(std::move(n)));
}

bool operator==(const Cat& a, const Cat& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind) return false;
  if (a.node_->kind == CatKind::Atomic) return a.node_->name == b.node_->name;
  return a.arg() == b.arg() && a.res() == b.res();
}

bool atomic_type(const Cat& c) { return c.kind() == CatKind::Atomic; }

bool cat_eq(const Cat& a, const Cat& b) { return a == b; }

const std::set<std::string>& builtin_atoms() {
  static const std::set<std::string> atoms{"np", "s", "conj", "noun"};
  return atoms;
}

namespace {

class CatParser {
public:
  CatParser(std::string_view text, const std::set<std::string>& atoms)
      : text_(text), atoms_(atoms) {}

  Cat run() {
    Cat c = chain();
    skip_ws();
    if (pos_ < text_.size())
      fail("trailing input in category", pos_);
    return c;
  }

private:
  [[noreturn]] void fail(const std::string& msg, std::size_t pos) {
    throw SyntaxError(msg + " at position " + std::to_string(pos), pos);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Cat chain() {
    Cat cur = atom_cat();
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) return cur;
      char c = text_[pos_];
      if (c != '/' && c != '\\') return cur;
      ++pos_;
      Cat rhs = atom_cat();
      cur = c == '/' ? fs(rhs, cur) : bs(rhs, cur);
    }
  }

  Cat atom_cat() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a category", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Cat inner = chain();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_')
      fail(std::string("unexpected character '") + c + "' in category", pos_);
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (!atoms_.count(name))
      fail("unknown atomic category '" + name + "'", start);
    return atom(name);
  }

  std::string_view text_;
  const std::set<std::string>& atoms_;
  std::size_t pos_ = 0;
};

void print_rec(const Cat& c, bool arg_position, std::string& out) {
  if (atomic_type(c)) {
    out += c.name();
    return;
  }
  // slashes are left-associative, so only argument positions need parens
  if (arg_position) out += '(';
  print_rec(c.res(), false, out);
  out += c.kind() == CatKind::Fs ? '/' : '\\';
  print_rec(c.arg(), true, out);
  if (arg_position) out += ')';
}

}  // namespace

Cat parse_cat(std::string_view text) { return parse_cat(text, builtin_atoms()); }

Cat parse_cat(std::string_view text, const std::set<std::string>& atoms) {
  return CatParser(text, atoms).run();
}

std::string print_cat(const Cat& c) {
  std::string out;
  print_rec(c, false, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Cat& c) {
  return os << (c ? print_cat(c) : std::string("<null cat>"));
}

}  // namespace ccg
