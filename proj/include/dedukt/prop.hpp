#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dedukt/core.hpp"

namespace dedukt {

// The qualifier on a judgement's conclusion: a formula is well formed
// ("prop", rendered "type" on the lambda side) or holds ("true").
enum class Adjective { prop, truth };

namespace prop {

// A header tags each argument position of an introduction rule: `truth`
// positions demand proofs, `prop` positions demand formation.
using Header = std::vector<Adjective>;

struct RuleDecl {
  std::string label;
  Header header;

  bool operator==(const RuleDecl&) const = default;
};

struct ConnectiveDecl {
  std::string name;
  std::size_t arity = 0;
  std::vector<RuleDecl> rules;  // declaration order is significant

  bool operator==(const ConnectiveDecl&) const = default;
};

// Connectives with arities, per-connective introduction rules with headers,
// and an alphabet of propositional variables. The data that distinguishes one
// positive propositional logic from another.
struct Signature {
  std::vector<std::string> variables;
  std::vector<ConnectiveDecl> connectives;

  const ConnectiveDecl* find_connective(const std::string& name) const;
  const RuleDecl* find_rule(const std::string& connective, const std::string& label) const;
  bool has_variable(const std::string& name) const;

  // Checks name validity, disjointness, and header lengths; throws
  // std::invalid_argument on violation.
  void validate() const;

  bool operator==(const Signature&) const = default;
};

// Inductive formula syntax: a variable, or a connective applied to exactly
// arity-many formulas.
class Proposition {
 public:
  Proposition() : is_var_(true), head_("?") {}

  static Proposition variable(std::string name);
  static Proposition apply(std::string connective, std::vector<Proposition> args);

  bool is_variable() const { return is_var_; }
  const std::string& head() const { return head_; }
  const std::vector<Proposition>& args() const { return args_; }

  // Nesting depth; a bare variable has depth 1.
  std::size_t depth() const;

  bool operator==(const Proposition&) const = default;

 private:
  bool is_var_;
  std::string head_;
  std::vector<Proposition> args_;
};

// The part of a judgement right of the turnstile.
struct Conclusion {
  Proposition prop;
  Adjective adjective = Adjective::prop;

  bool operator==(const Conclusion&) const = default;
};

// ctx |- P prop  /  ctx |- P true. Contexts are plain ordered lists;
// duplicates are allowed.
struct Judgement {
  std::vector<Proposition> context;
  Conclusion conclusion;

  bool operator==(const Judgement&) const = default;
};

Judgement judgement(std::vector<Proposition> context, Proposition prop, Adjective adjective);

// ---------------------------------------------------------------------------
// Rule names. A name carries every parameter of the rule instance, so
// instantiation is a pure function of (signature, name).

struct VarRule {
  std::string variable;
  bool operator==(const VarRule&) const = default;
};

struct SelfRule {
  std::vector<Proposition> context;
  Proposition prop;
  bool operator==(const SelfRule&) const = default;
};

struct WeakRule {
  std::vector<Proposition> context;
  Proposition prop;
  Conclusion target;
  bool operator==(const WeakRule&) const = default;
};

struct FormRule {
  std::string connective;
  std::vector<Proposition> context;
  std::vector<Proposition> args;
  bool operator==(const FormRule&) const = default;
};

struct IntroRule {
  std::string connective;
  std::string rule;
  std::vector<Proposition> context;
  std::vector<Proposition> args;
  bool operator==(const IntroRule&) const = default;
};

struct ElimRule {
  std::string connective;
  std::vector<Proposition> context;
  std::vector<Proposition> args;
  Proposition motive;
  bool operator==(const ElimRule&) const = default;
};

using RuleName = std::variant<VarRule, SelfRule, WeakRule, FormRule, IntroRule, ElimRule>;
using Proof = ProofTree<RuleName>;

// Well-formedness of syntax against a signature.
void validate_proposition(const Signature& sig, const Proposition& p);
void validate_judgement(const Signature& sig, const Judgement& j);

// Expands a rule name into its premises and conclusion:
//   Var(p)            .                        =>  |- p prop
//   Self(G,P)         G |- P prop              =>  G,P |- P true
//   Weak(G,P,J)       G |- P prop; G |- J      =>  G,P |- J
//   Form(c,G,Ps)      G |- Pi prop (each i)    =>  G |- c(Ps) prop
//   Intro(c,r,G,Ps)   G |- Pi header[i] (each) =>  G |- c(Ps) true
//   Elim(c,G,Ps,C)    G |- c(Ps) true; per rule r of c in declared order,
//                     G ++ [Pi : header_r[i] = truth] |- C true
//                                               =>  G |- C true
// Throws RuleError when the name is ill-formed against the signature.
Inference<Judgement> instantiate_rule(const Signature& sig, const RuleName& name);

// Adapter for the generic checker.
struct Ruleset {
  using judgement_type = Judgement;
  using rule_name_type = RuleName;

  const Signature* signature;

  Inference<Judgement> instantiate(const RuleName& name) const {
    return instantiate_rule(*signature, name);
  }
  static std::string describe(const Judgement& j);
};

// Returns the judgement the tree proves, or throws CheckError.
Judgement check_proof(const Signature& sig, const Proof& tree);

// The positions of a header carrying the truth adjective, in order.
std::vector<std::size_t> truth_positions(const Header& header);

// ---------------------------------------------------------------------------
// Signature morphisms. A morphism renames connectives (preserving arity),
// rule labels (preserving headers, bijectively per connective), and
// variables. Bijectivity of the per-connective label map is what makes
// elimination nodes transportable branch for branch.

class SignatureMorphism {
 public:
  // Throws std::invalid_argument unless the maps are total, arity- and
  // header-preserving, and label maps are bijections onto the target rules.
  static SignatureMorphism make(Signature source, Signature target,
                                std::map<std::string, std::string> connective_map,
                                std::map<std::pair<std::string, std::string>, std::string> rule_map,
                                std::map<std::string, std::string> variable_map);

  static SignatureMorphism identity(const Signature& sig);

  const Signature& source() const { return source_; }
  const Signature& target() const { return target_; }

  const std::string& map_connective(const std::string& c) const;
  const std::string& map_rule(const std::string& c, const std::string& r) const;
  const std::string& map_variable(const std::string& v) const;

  const std::map<std::string, std::string>& connective_map() const { return connective_map_; }
  const std::map<std::pair<std::string, std::string>, std::string>& rule_map() const {
    return rule_map_;
  }
  const std::map<std::string, std::string>& variable_map() const { return variable_map_; }

 private:
  SignatureMorphism() = default;

  Signature source_;
  Signature target_;
  std::map<std::string, std::string> connective_map_;
  std::map<std::pair<std::string, std::string>, std::string> rule_map_;
  std::map<std::string, std::string> variable_map_;
};

// Homomorphic renaming along a morphism. Transported proofs check against
// transported judgements (elimination branches are reordered to the target
// connective's declared rule order).
Proposition transport(const SignatureMorphism& m, const Proposition& p);
Judgement transport(const SignatureMorphism& m, const Judgement& j);
RuleName transport(const SignatureMorphism& m, const RuleName& name);
Proof transport(const SignatureMorphism& m, const Proof& tree);

}  // namespace prop

// Canonical single-line renderings (defined in format.cpp).
std::string to_text(const prop::Proposition& p);
std::string to_text(const prop::Judgement& j);
std::string to_text(const prop::RuleName& name);
std::string to_text(const prop::Proof& tree);

}  // namespace dedukt
