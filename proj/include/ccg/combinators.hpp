#pragma once

#include <memory>
#include <optional>
#include <string_view>

#include "ccg/category.hpp"
#include "ccg/term.hpp"

namespace ccg {

enum class RuleLabel {
  Lex,
  FwdApp,    // >app
  BwdApp,    // <app
  FwdComp,   // >B
  BwdComp,   // <B
  FwdRaise,  // >T
  BwdRaise,  // <T
  Coord,
  ConjRight,  // intermediate `conj X` item
};

std::string_view rule_name(RuleLabel r);

// Chart item: a category/LF pair over a half-open token span, as X:F in the
// rule schemata. LFs on edges are beta-normal, closed and ScopedConst-free.
struct Edge;
using EdgePtr = std::shared_ptr<const Edge>;

struct Edge {
  int start = 0;
  int end = 0;
  Cat cat;
  Term lf;
  RuleLabel rule = RuleLabel::Lex;
  EdgePtr left, right;  // 0-2 children
};

EdgePtr make_edge(int start, int end, Cat cat, Term lf, RuleLabel rule,
                  EdgePtr left = nullptr, EdgePtr right = nullptr);

enum class Dir { Forward, Backward };

// Semantic halves of the rules. sem_apply/sem_compose require functors that
// are object-level abstractions and throw RuleError otherwise.
Term sem_apply(const Term& f, const Term& a);   // normalize(f a)
Term sem_compose(const Term& f, const Term& g); // normalize(lam x. f (g x))
Term sem_raise(const Term& t);                  // lam p. p t

// Function application: X/Y:F  Y:y => X:Fy  (and the backward mirror).
// Null result = categories do not fit.
EdgePtr apply_rule(Dir dir, const EdgePtr& left, const EdgePtr& right);

// Function composition: X/Y:F  Y/Z:G => X/Z:lam x. F (G x)  (and mirror).
EdgePtr compose_rule(Dir dir, const EdgePtr& left, const EdgePtr& right);

// Type raising of np edges onto a target category T:
// forward np:x => T/(T\np):lam p. p x, backward np:x => T\(T/np):lam p. p x.
EdgePtr raise_rule(Dir dir, const EdgePtr& e, const Cat& target);

// Generalized coordination by recursive descent through the category:
// slash case introduces a fresh scoped constant, applies both conjunct LFs
// to it, recurses on the result category and extracts the constant back out;
// atomic case builds conj_lf applied to both conjuncts. The scoped constants
// introduced here never appear in the result.
//
// depth_bound, when set, is the maximum number of slash descents; exceeding
// it throws CoordDepthError. Non-abstraction LFs under a slash category
// throw RuleError.
Term coordinate(const Cat& cat, const Term& conj_lf, const Term& left_lf,
                const Term& right_lf, FreshSource& src,
                std::optional<int> depth_bound = std::nullopt);

// Independent implementation of the Phi-combinator family used to
// cross-check coordinate: builds lam x1...xn. f (g x1...xn) (h x1...xn)
// directly, with no scoped constants, and normalizes.
Term phi_oracle(int n, const Term& f, const Term& g, const Term& h);

}  // namespace ccg
