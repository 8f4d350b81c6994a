#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace ccg {

// Object-level logical forms. Binders use nameless (de Bruijn) indices:
// Var{0} refers to the innermost enclosing scope, so alpha-equivalence is
// plain structural equality and substitution is capture-free by
// construction. Forall/Exists are binder nodes like Abs; `&&`, `>>` and
// `and'` stay ordinary constants under App.
enum class TermKind { Const, Var, Scoped, App, Abs, Forall, Exists };

namespace detail {
struct TermNode;
using TermNodePtr = std::shared_ptr<const TermNode>;

struct TermNode {
  TermKind kind;
  std::string name;      // Const
  int index = 0;         // Var
  std::uint64_t id = 0;  // Scoped
  TermNodePtr a, b;      // App: a = function, b = argument; binders: a = scope
  std::size_t hash = 0;  // structural hash, filled in at construction
};
}  // namespace detail

// Immutable value handle; cheap to copy and safe to share across threads.
class Term {
public:
  Term() = default;  // null handle; only containers should see this state

  TermKind kind() const { return node_->kind; }
  const std::string& const_name() const { return node_->name; }
  int var_index() const { return node_->index; }
  std::uint64_t scoped_id() const { return node_->id; }
  Term fun() const { return Term(node_->a); }    // App
  Term arg() const { return Term(node_->b); }    // App
  Term scope() const { return Term(node_->a); }  // Abs / Forall / Exists

  std::size_t hash() const { return node_->hash; }
  explicit operator bool() const { return node_ != nullptr; }

  // alpha-equivalence; structural under nameless indices
  friend bool operator==(const Term& x, const Term& y);
  friend bool operator!=(const Term& x, const Term& y) { return !(x == y); }

private:
  explicit Term(detail::TermNodePtr n) : node_(std::move(n)) {}
  detail::TermNodePtr node_;

  friend Term con(std::string);
  friend Term var(int);
  friend Term scoped_const(std::uint64_t);
  friend Term app(Term, Term);
  friend Term lam(Term);
  friend Term forall(Term);
  friend Term exists(Term);
};

Term con(std::string name);
Term var(int index);
Term scoped_const(std::uint64_t id);
Term app(Term f, Term a);
Term lam(Term scope);
Term forall(Term scope);
Term exists(Term scope);

inline Term app(Term f, Term a, Term b) {
  return app(app(std::move(f), std::move(a)), std::move(b));
}

bool alpha_eq(const Term& a, const Term& b);

// One leftmost-outermost beta step; empty when the term is already
// beta-normal. Total on well-scoped terms.
std::optional<Term> beta_step(const Term& t);

// Full beta-normal form, reducing under binders. Throws NormalizeError when
// more than `fuel` contractions are needed.
inline constexpr int kDefaultNormalizeFuel = 10000;
Term normalize(const Term& t, int fuel = kDefaultNormalizeFuel);

// Add d to every free index >= cutoff.
Term shift(const Term& t, int d, int cutoff = 0);

// Every Var is bound by an enclosing binder inside t.
bool is_closed(const Term& t);

bool contains_scoped(std::uint64_t id, const Term& t);
bool has_scoped(const Term& t);

// Extraction: rebuild lam x. t[x] from t[c]. Every occurrence of
// ScopedConst `id` is replaced by the new bound index, so the scoped
// constant cannot escape into the result.
Term abstract_scoped(std::uint64_t id, const Term& t);

// Session-unique supply of ScopedConst ids. fetch_add keeps ids unique even
// when chart cells run concurrently.
class FreshSource {
public:
  FreshSource() = default;
  FreshSource(const FreshSource&) = delete;
  FreshSource& operator=(const FreshSource&) = delete;
  std::uint64_t issue() { return next_.fetch_add(1, std::memory_order_relaxed); }

private:
  std::atomic<std::uint64_t> next_{1};
};

Term fresh_scoped(FreshSource& src);

}  // namespace ccg
