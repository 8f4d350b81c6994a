#pragma once

#include <iosfwd>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace ccg {

// CCG category trees. A slash node stores the ARGUMENT category first and
// the RESULT second, so `(s\np)/np` is fs(np, bs(np, s)). Printing maps
// fs(arg, res) to `res/arg` and bs(arg, res) to `res\arg`.
enum class CatKind { Atomic, Fs, Bs };

namespace detail {
struct CatNode;
using CatNodePtr = std::shared_ptr<const CatNode>;

struct CatNode {
  CatKind kind;
  std::string name;     // Atomic
  CatNodePtr arg, res;  // Fs / Bs
  std::size_t hash = 0;
};
}  // namespace detail

class Cat {
public:
  Cat() = default;

  CatKind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  Cat arg() const { return Cat(node_->arg); }
  Cat res() const { return Cat(node_->res); }

  std::size_t hash() const { return node_->hash; }
  explicit operator bool() const { return node_ != nullptr; }

  friend bool operator==(const Cat& a, const Cat& b);
  friend bool operator!=(const Cat& a, const Cat& b) { return !(a == b); }

private:
  explicit Cat(detail::CatNodePtr n) : node_(std::move(n)) {}
  detail::CatNodePtr node_;

  friend Cat atom(std::string);
  friend Cat fs(Cat, Cat);
  friend Cat bs(Cat, Cat);
};

Cat atom(std::string name);
Cat fs(Cat arg, Cat res);  // res/arg
Cat bs(Cat arg, Cat res);  // res\arg

bool atomic_type(const Cat& c);
bool cat_eq(const Cat& a, const Cat& b);

// The four atoms of the base grammar; lexicon preambles may declare more.
const std::set<std::string>& builtin_atoms();

// Slash notation. '/' and '\' are left-associative: s\np/np == (s\np)/np.
// Atom names must come from `atoms`; throws SyntaxError otherwise.
Cat parse_cat(std::string_view text);
Cat parse_cat(std::string_view text, const std::set<std::string>& atoms);

// Minimal-parenthesis canonical form; parse_cat(print_cat(c)) == c.
std::string print_cat(const Cat& c);

std::ostream& operator<<(std::ostream& os, const Cat& c);

}  // namespace ccg
