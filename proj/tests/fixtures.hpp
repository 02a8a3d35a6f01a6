#pragma once

// Shared fixtures: the stock two-variable signature with disjunction and
// positive conjunction, and the commuted-disjunction derivation used across
// the suites.

#include <vector>

#include "dedukt/lambda.hpp"
#include "dedukt/prop.hpp"

namespace fixtures {

using dedukt::Adjective;
namespace prop = dedukt::prop;
namespace lam = dedukt::lam;

inline prop::Signature sig_pl() {
  prop::Signature sig;
  sig.variables = {"A", "B"};
  sig.connectives = {
      prop::ConnectiveDecl{"or",
                           2,
                           {prop::RuleDecl{"left", {Adjective::truth, Adjective::prop}},
                            prop::RuleDecl{"right", {Adjective::prop, Adjective::truth}}}},
      prop::ConnectiveDecl{"and", 2, {prop::RuleDecl{"pair", {Adjective::truth, Adjective::truth}}}},
  };
  return sig;
}

// Same shape with every name primed; header-preserving rename target.
inline prop::Signature sig_pl_renamed() {
  prop::Signature sig;
  sig.variables = {"P", "Q"};
  sig.connectives = {
      prop::ConnectiveDecl{"join",
                           2,
                           {prop::RuleDecl{"inl", {Adjective::truth, Adjective::prop}},
                            prop::RuleDecl{"inr", {Adjective::prop, Adjective::truth}}}},
      prop::ConnectiveDecl{"meet", 2, {prop::RuleDecl{"both", {Adjective::truth, Adjective::truth}}}},
  };
  return sig;
}

inline prop::Proposition pA() { return prop::Proposition::variable("A"); }
inline prop::Proposition pB() { return prop::Proposition::variable("B"); }
inline prop::Proposition pOr(prop::Proposition a, prop::Proposition b) {
  return prop::Proposition::apply("or", {std::move(a), std::move(b)});
}
inline prop::Proposition pAnd(prop::Proposition a, prop::Proposition b) {
  return prop::Proposition::apply("and", {std::move(a), std::move(b)});
}

inline prop::Proof leaf(prop::RuleName rule) { return prop::Proof{std::move(rule), {}}; }

// |- A or B prop, from the two variable axioms.
inline prop::Proof form_or_ab() {
  return prop::Proof{prop::FormRule{"or", {}, {pA(), pB()}},
                     {leaf(prop::VarRule{"A"}), leaf(prop::VarRule{"B"})}};
}

// A or B |- X prop by weakening the closed formation of X.
inline prop::Proof weaken_under_or(const prop::Proposition& x, prop::Proof closed_formation) {
  return prop::Proof{prop::WeakRule{{}, pOr(pA(), pB()), prop::Conclusion{x, Adjective::prop}},
                     {form_or_ab(), std::move(closed_formation)}};
}

// The commuted-disjunction derivation:
//   A or B |- B or A true
// by case analysis on A or B, injecting right/left in the branches.
inline prop::Proof orcomm_proof() {
  const prop::Proposition a = pA(), b = pB();
  const prop::Proposition or_ab = pOr(a, b), or_ba = pOr(b, a);
  const std::vector<prop::Proposition> gamma{or_ab};

  // A or B |- A prop   /   A or B |- B prop
  prop::Proof a_prop = weaken_under_or(a, leaf(prop::VarRule{"A"}));
  prop::Proof b_prop = weaken_under_or(b, leaf(prop::VarRule{"B"}));

  // scrutinee: A or B |- A or B true
  prop::Proof scrutinee = prop::Proof{prop::SelfRule{{}, or_ab}, {form_or_ab()}};

  // A or B, A |- B or A true  via the right injection
  prop::Proof left_branch =
      prop::Proof{prop::IntroRule{"or", "right", {or_ab, a}, {b, a}},
                  {prop::Proof{prop::WeakRule{gamma, a, prop::Conclusion{b, Adjective::prop}},
                               {a_prop, b_prop}},
                   prop::Proof{prop::SelfRule{gamma, a}, {a_prop}}}};

  // A or B, B |- B or A true  via the left injection
  prop::Proof right_branch =
      prop::Proof{prop::IntroRule{"or", "left", {or_ab, b}, {b, a}},
                  {prop::Proof{prop::SelfRule{gamma, b}, {b_prop}},
                   prop::Proof{prop::WeakRule{gamma, b, prop::Conclusion{a, Adjective::prop}},
                               {b_prop, a_prop}}}};

  return prop::Proof{prop::ElimRule{"or", gamma, {a, b}, or_ba},
                     {std::move(scrutinee), std::move(left_branch), std::move(right_branch)}};
}

inline prop::Judgement orcomm_judgement() {
  return prop::judgement({pOr(pA(), pB())}, pOr(pB(), pA()), Adjective::truth);
}

}  // namespace fixtures
