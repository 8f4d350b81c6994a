#include "ccg/term.hpp"

#include <functional>

#include "ccg/errors.hpp"

namespace ccg {
namespace {

std::size_t hash_mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

detail::TermNodePtr make_node(detail::TermNode n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x9e3779b97f4a7c15ULL;
  switch (n.kind) {
    case TermKind::Const:
      h = hash_mix(h, std::hash<std::string>{}(n.name));
      break;
    case TermKind::Var:
      h = hash_mix(h, static_cast<std::size_t>(n.index) + 1);
      break;
    case TermKind::Scoped:
      h = hash_mix(h, static_cast<std::size_t>(n.id));
      break;
    case TermKind::App:
      h = hash_mix(h, n.a->hash);
      h = hash_mix(h, n.b->hash);
      break;
    case TermKind::Abs:
    case TermKind::Forall:
    case TermKind::Exists:
      h = hash_mix(h, n.a->hash);
      break;
  }
  n.hash = h;
  return std::make_shared<const detail::TermNode>(std::move(n));
}

}  // namespace

Term con(std::string name) {
  detail::TermNode n{TermKind::Const};
  n.name = std::move(name);
  return Term(make_node(std::move(n)));
}

Term var(int index) {
  detail::TermNode n{TermKind::Var};
  n.index = index;
  return Term(make_node(std::move(n)));
}

Term scoped_const(std::uint64_t id) {
  detail::TermNode n{TermKind::Scoped};
  n.id = id;
  return Term(make_node(std::move(n)));
}

Term app(Term f, Term a) {
  detail::TermNode n{TermKind::App};
  n.a = f.node_;
  n.b = a.node_;
  return Term(make_node(std::move(n)));
}

Term lam(Term scope) {
  detail::TermNode n{TermKind::Abs};
  n.a = scope.node_;
  return Term(make_node(std::move(n)));
}

Term forall(Term scope) {
  detail::TermNode n{TermKind::Forall};
  n.a = scope.node_;
  return Term(make_node(std::move(n)));
}

Term exists(Term scope) {
  detail::TermNode n{TermKind::Exists};
  n.a = scope.node_;
  return Term(make_node(std::move(n)));
}

bool operator==(const Term& x, const Term& y) {
  if (x.node_ == y.node_) return true;
  if (!x.node_ || !y.node_) return false;
  if (x.node_->hash != y.node_->hash) return false;
  if (x.node_->kind != y.node_->kind) return false;
  switch (x.node_->kind) {
    case TermKind::Const: return x.node_->name == y.node_->name;
    case TermKind::Var: return x.node_->index == y.node_->index;
    case TermKind::Scoped: return x.node_->id == y.node_->id;
    case TermKind::App: return x.fun() == y.fun() && x.arg() == y.arg();
    case TermKind::Abs:
    case TermKind::Forall:
    case TermKind::Exists: return x.scope() == y.scope();
  }
  return false;
}

bool alpha_eq(const Term& a, const Term& b) { return a == b; }

static bool is_binder(TermKind k) {
  return k == TermKind::Abs || k == TermKind::Forall || k == TermKind::Exists;
}

static Term rebuild_binder(TermKind k, Term scope) {
  switch (k) {
    case TermKind::Abs: return lam(std::move(scope));
    case TermKind::Forall: return forall(std::move(scope));
    default: return exists(std::move(scope));
  }
}

Term shift(const Term& t, int d, int cutoff) {
  switch (t.kind()) {
    case TermKind::Const:
    case TermKind::Scoped:
      return t;
    case TermKind::Var:
      return t.var_index() >= cutoff ? var(t.var_index() + d) : t;
    case TermKind::App: {
      Term f = shift(t.fun(), d, cutoff);
      Term a = shift(t.arg(), d, cutoff);
      if (f == t.fun() && a == t.arg()) return t;
      return app(std::move(f), std::move(a));
    }
    default: {
      Term s = shift(t.scope(), d, cutoff + 1);
      if (s == t.scope()) return t;
      return rebuild_binder(t.kind(), std::move(s));
    }
  }
}

// Replace Var j by s; s is shifted as the walk crosses binders.
static Term subst(const Term& t, int j, const Term& s) {
  switch (t.kind()) {
    case TermKind::Const:
    case TermKind::Scoped:
      return t;
    case TermKind::Var:
      return t.var_index() == j ? s : t;
    case TermKind::App:
      return app(subst(t.fun(), j, s), subst(t.arg(), j, s));
    default:
      return rebuild_binder(t.kind(), subst(t.scope(), j + 1, shift(s, 1)));
  }
}

// (lam. scope) arg  ->  shift down after substituting the shifted argument
static Term contract(const Term& scope, const Term& arg) {
  return shift(subst(scope, 0, shift(arg, 1)), -1);
}

std::optional<Term> beta_step(const Term& t) {
  switch (t.kind()) {
    case TermKind::Const:
    case TermKind::Var:
    case TermKind::Scoped:
      return std::nullopt;
    case TermKind::App: {
      Term f = t.fun();
      if (f.kind() == TermKind::Abs) return contract(f.scope(), t.arg());
      if (auto s = beta_step(f)) return app(std::move(*s), t.arg());
      if (auto s = beta_step(t.arg())) return app(std::move(f), std::move(*s));
      return std::nullopt;
    }
    default:
      if (auto s = beta_step(t.scope()))
        return rebuild_binder(t.kind(), std::move(*s));
      return std::nullopt;
  }
}

Term normalize(const Term& t, int fuel) {
  Term cur = t;
  for (;;) {
    auto next = beta_step(cur);
    if (!next) return cur;
    if (fuel-- <= 0)
      throw NormalizeError("normalize: fuel exhausted (non-terminating LF)");
    cur = std::move(*next);
  }
}

static bool closed_from(const Term& t, int depth) {
  switch (t.kind()) {
    case TermKind::Const:
    case TermKind::Scoped:
      return true;
    case TermKind::Var:
      return t.var_index() >= 0 && t.var_index() < depth;
    case TermKind::App:
      return closed_from(t.fun(), depth) && closed_from(t.arg(), depth);
    default:
      return closed_from(t.scope(), depth + 1);
  }
}

bool is_closed(const Term& t) { return closed_from(t, 0); }

bool contains_scoped(std::uint64_t id, const Term& t) {
  switch (t.kind()) {
    case TermKind::Scoped:
      return t.scoped_id() == id;
    case TermKind::App:
      return contains_scoped(id, t.fun()) || contains_scoped(id, t.arg());
    case TermKind::Abs:
    case TermKind::Forall:
    case TermKind::Exists:
      return contains_scoped(id, t.scope());
    default:
      return false;
  }
}

bool has_scoped(const Term& t) {
  switch (t.kind()) {
    case TermKind::Scoped:
      return true;
    case TermKind::App:
      return has_scoped(t.fun()) || has_scoped(t.arg());
    case TermKind::Abs:
    case TermKind::Forall:
    case TermKind::Exists:
      return has_scoped(t.scope());
    default:
      return false;
  }
}

static Term bind_scoped(const Term& t, std::uint64_t id, int depth) {
  switch (t.kind()) {
    case TermKind::Scoped:
      return t.scoped_id() == id ? var(depth) : t;
    case TermKind::Const:
    case TermKind::Var:
      return t;
    case TermKind::App:
      return app(bind_scoped(t.fun(), id, depth), bind_scoped(t.arg(), id, depth));
    default:
      return rebuild_binder(t.kind(), bind_scoped(t.scope(), id, depth + 1));
  }
}

Term abstract_scoped(std::uint64_t id, const Term& t) {
  return lam(bind_scoped(t, id, 0));
}

Term fresh_scoped(FreshSource& src) { return scoped_const(src.issue()); }

}  // namespace ccg
