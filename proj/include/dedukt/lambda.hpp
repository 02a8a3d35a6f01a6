#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "dedukt/core.hpp"
#include "dedukt/prop.hpp"

namespace dedukt::lam {

// A lambda-calculus signature is a propositional one plus a countable ordered
// alphabet of term variables, canonically x0, x1, ...
struct Signature {
  prop::Signature base;
  std::string termvar_prefix = "x";

  std::string termvar(std::size_t index) const {
    return termvar_prefix + std::to_string(index);
  }

  void validate() const;

  bool operator==(const Signature&) const = default;
};

using prop::Proposition;

// Terms: a variable; a per-rule constructor applied to one term per
// truth-headed position; or an eliminator with a scrutinee and one branch per
// rule of the connective, each binding one variable per truth-headed position.
class Term {
 public:
  enum class Kind { var, ctor, elim };

  Term() : kind_(Kind::var), head_("?") {}

  static Term var(std::string name);
  static Term ctor(std::string connective, std::string rule, std::vector<Term> args);
  static Term elim(std::string connective, Term scrutinee,
                   std::vector<std::vector<std::string>> binders, std::vector<Term> bodies);

  Kind kind() const { return kind_; }
  bool is_var() const { return kind_ == Kind::var; }

  // var name or connective, depending on kind.
  const std::string& head() const { return head_; }
  const std::string& rule() const { return rule_; }

  const std::vector<Term>& ctor_args() const { return sub_; }

  const Term& scrutinee() const { return sub_[0]; }
  std::size_t branch_count() const { return binders_.size(); }
  const std::vector<std::string>& branch_binders(std::size_t i) const { return binders_[i]; }
  const Term& branch_body(std::size_t i) const { return sub_[i + 1]; }

  bool operator==(const Term&) const = default;

 private:
  Kind kind_;
  std::string head_;
  std::string rule_;
  std::vector<Term> sub_;  // ctor arguments, or [scrutinee, body...] for elim
  std::vector<std::vector<std::string>> binders_;
};

// Free variables; eliminator binders are excluded within their bodies.
std::set<std::string> free_termvars(const Term& t);

struct Binding {
  std::string var;
  Proposition type;

  bool operator==(const Binding&) const = default;
};

// Conclusion of a typing judgement: `P type` when subject is absent,
// `t : P` otherwise.
struct Conclusion {
  std::optional<Term> subject;
  Proposition type;

  bool operator==(const Conclusion&) const = default;
};

// x0:P0, ..., x(n-1):P(n-1) |- t : P   or   ... |- P type.
// Context variables are pairwise distinct and declare every free variable of
// the subject.
struct Judgement {
  std::vector<Binding> context;
  Conclusion conclusion;

  bool operator==(const Judgement&) const = default;
};

Judgement type_decl(std::vector<Binding> context, Proposition type);
Judgement typing(std::vector<Binding> context, Term subject, Proposition type);

bool context_declares(const std::vector<Binding>& context, const std::string& var);

void validate_judgement(const Signature& sig, const Judgement& j);
void validate_term(const Signature& sig, const Term& t);

// ---------------------------------------------------------------------------
// Rule names.

struct VarRule {
  std::string variable;  // propositional variable
  bool operator==(const VarRule&) const = default;
};

struct SelfRule {
  std::vector<Binding> context;
  std::string var;  // fresh for context
  Proposition type;
  bool operator==(const SelfRule&) const = default;
};

struct WeakRule {
  std::vector<Binding> context;
  std::string var;  // fresh for context
  Proposition type;
  Conclusion target;
  bool operator==(const WeakRule&) const = default;
};

struct FormRule {
  std::string connective;
  std::vector<Binding> context;
  std::vector<Proposition> args;
  bool operator==(const FormRule&) const = default;
};

struct IntroRule {
  std::string connective;
  std::string rule;
  std::vector<Binding> context;
  std::vector<Proposition> args;
  std::vector<Term> terms;  // one per truth-headed position, in order
  bool operator==(const IntroRule&) const = default;
};

struct ElimBranch {
  std::vector<std::string> binders;
  Term body;
  bool operator==(const ElimBranch&) const = default;
};

struct ElimRule {
  std::string connective;
  std::vector<Binding> context;
  std::vector<Proposition> args;
  Proposition motive;
  Term scrutinee;
  std::vector<ElimBranch> branches;  // one per rule of the connective, in order
  bool operator==(const ElimRule&) const = default;
};

using RuleName = std::variant<VarRule, SelfRule, WeakRule, FormRule, IntroRule, ElimRule>;
using Proof = ProofTree<RuleName>;

// Expands a rule name:
//   Var(p)                .                          =>  |- p type
//   Self(G,x,P)           G |- P type                =>  G,x:P |- x : P
//   Weak(G,x,P,J)         G |- P type; G |- J        =>  G,x:P |- J
//   Form(c,G,Ps)          G |- Pi type (each i)      =>  G |- c(Ps) type
//   Intro(c,r,G,Ps,ts)    per position i: G |- Pi type   (header prop)
//                                         G |- tk : Pi   (header truth)
//                                                    =>  G |- ctor(ts) : c(Ps)
//   Elim(c,G,Ps,C,s,brs)  G |- s : c(Ps); per rule r in order,
//                         G, binders:filtered Ps |- body_r : C
//                                                    =>  G |- elim(s;brs) : C
// Every produced judgement is validated, so context distinctness and
// declared-variable invariants hold at each node of a checked proof.
Inference<Judgement> instantiate_rule(const Signature& sig, const RuleName& name);

struct Ruleset {
  using judgement_type = Judgement;
  using rule_name_type = RuleName;

  const Signature* signature;

  Inference<Judgement> instantiate(const RuleName& name) const {
    return instantiate_rule(*signature, name);
  }
  static std::string describe(const Judgement& j);
};

Judgement check_proof(const Signature& sig, const Proof& tree);

}  // namespace dedukt::lam

namespace dedukt {

std::string to_text(const lam::Term& t);
std::string to_text(const lam::Judgement& j);
std::string to_text(const lam::RuleName& name);
std::string to_text(const lam::Proof& tree);

}  // namespace dedukt
