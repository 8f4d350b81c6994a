#include "ccg/combinators.hpp"

#include "ccg/errors.hpp"
#include "ccg/term_io.hpp"

namespace ccg {

std::string_view rule_name(RuleLabel r) {
  switch (r) {
    case RuleLabel::Lex: return "lex";
    case RuleLabel::FwdApp: return ">app";
    case RuleLabel::BwdApp: return "<app";
    case RuleLabel::FwdComp: return ">B";
    case RuleLabel::BwdComp: return "<B";
    case RuleLabel::FwdRaise: return ">T";
    case RuleLabel::BwdRaise: return "<T";
    case RuleLabel::Coord: return "coord";
    case RuleLabel::ConjRight: return "conj-right";
  }
  return "?";
}

EdgePtr make_edge(int start, int end, Cat cat, Term lf, RuleLabel rule,
                  EdgePtr left, EdgePtr right) {
  return std::make_shared<const Edge>(Edge{start, end, std::move(cat), std::move(lf),
                                           rule, std::move(left), std::move(right)});
}

static Term require_abs(const Term& t, const char* who) {
  Term n = normalize(t);
  if (n.kind() != TermKind::Abs)
    throw RuleError(std::string(who) + ": functor LF is not an abstraction: " +
                    print_term(n));
  return n;
}

Term sem_apply(const Term& f, const Term& a) {
  require_abs(f, "sem_apply");
  return normalize(app(f, a));
}

Term sem_compose(const Term& f, const Term& g) {
  require_abs(f, "sem_compose");
  require_abs(g, "sem_compose");
  // lam x. f (g x)
  return normalize(lam(app(shift(f, 1), app(shift(g, 1), var(0)))));
}

Term sem_raise(const Term& t) { return lam(app(var(0), shift(t, 1))); }

EdgePtr apply_rule(Dir dir, const EdgePtr& left, const EdgePtr& right) {
  if (dir == Dir::Forward) {
    if (left->cat.kind() != CatKind::Fs) return nullptr;
    if (!cat_eq(right->cat, left->cat.arg())) return nullptr;
    return make_edge(left->start, right->end, left->cat.res(),
                     sem_apply(left->lf, right->lf), RuleLabel::FwdApp, left, right);
  }
  if (right->cat.kind() != CatKind::Bs) return nullptr;
  if (!cat_eq(left->cat, right->cat.arg())) return nullptr;
  return make_edge(left->start, right->end, right->cat.res(),
                   sem_apply(right->lf, left->lf), RuleLabel::BwdApp, left, right);
}

EdgePtr compose_rule(Dir dir, const EdgePtr& left, const EdgePtr& right) {
  if (dir == Dir::Forward) {
    // X/Y:F  Y/Z:G => X/Z
    if (left->cat.kind() != CatKind::Fs || right->cat.kind() != CatKind::Fs) return nullptr;
    if (!cat_eq(left->cat.arg(), right->cat.res())) return nullptr;
    return make_edge(left->start, right->end, fs(right->cat.arg(), left->cat.res()),
                     sem_compose(left->lf, right->lf), RuleLabel::FwdComp, left, right);
  }
  // Y\Z:G  X\Y:F => X\Z
  if (left->cat.kind() != CatKind::Bs || right->cat.kind() != CatKind::Bs) return nullptr;
  if (!cat_eq(right->cat.arg(), left->cat.res())) return nullptr;
  return make_edge(left->start, right->end, bs(left->cat.arg(), right->cat.res()),
                   sem_compose(right->lf, left->lf), RuleLabel::BwdComp, left, right);
}

EdgePtr raise_rule(Dir dir, const EdgePtr& e, const Cat& target) {
  if (!(atomic_type(e->cat) && e->cat.name() == "np")) return nullptr;
  Cat raised = dir == Dir::Forward ? fs(bs(e->cat, target), target)
                                   : bs(fs(e->cat, target), target);
  return make_edge(e->start, e->end, std::move(raised), sem_raise(e->lf),
                   dir == Dir::Forward ? RuleLabel::FwdRaise : RuleLabel::BwdRaise, e);
}

Term coordinate(const Cat& cat, const Term& conj_lf, const Term& left_lf,
                const Term& right_lf, FreshSource& src,
                std::optional<int> depth_bound) {
  if (atomic_type(cat)) return normalize(app(app(conj_lf, left_lf), right_lf));

  if (depth_bound && *depth_bound <= 0)
    throw CoordDepthError("coordinate: depth bound exhausted at category " + print_cat(cat));
  Term lf = normalize(left_lf);
  Term rf = normalize(right_lf);
  if (lf.kind() != TermKind::Abs || rf.kind() != TermKind::Abs)
    throw RuleError("coordinate: conjunct LF of functional category " + print_cat(cat) +
                    " is not an abstraction");

  Term c = fresh_scoped(src);
  Term lt = normalize(app(lf, c));
  Term rt = normalize(app(rf, c));
  std::optional<int> next = depth_bound ? std::optional<int>(*depth_bound - 1) : std::nullopt;
  Term body = coordinate(cat.res(), conj_lf, lt, rt, src, next);
  return abstract_scoped(c.scoped_id(), body);
}

Term phi_oracle(int n, const Term& f, const Term& g, const Term& h) {
  // under n binders, x1..xn are indices n-1..0
  Term gx = shift(g, n);
  Term hx = shift(h, n);
  for (int i = n - 1; i >= 0; --i) {
    gx = app(gx, var(i));
    hx = app(hx, var(i));
  }
  Term body = app(app(shift(f, n), gx), hx);
  for (int i = 0; i < n; ++i) body = lam(body);
  return normalize(body);
}

}  // namespace ccg
