#include "dedukt/lambda.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dedukt::lam {

namespace {

[[noreturn]] void rule_fail(RuleErrorKind kind, const std::string& what) {
  throw RuleError(kind, what);
}

}  // namespace

void Signature::validate() const {
  base.validate();
  if (termvar_prefix.empty() || !std::isalpha(static_cast<unsigned char>(termvar_prefix[0])))
    throw std::invalid_argument("term variable prefix must start with a letter");
  // The canonical alphabet is infinite; keep it disjoint from the
  // propositional variables by shape: a propvar may not look like prefix+digits.
  for (const auto& v : base.variables) {
    if (v.size() <= termvar_prefix.size()) continue;
    if (v.compare(0, termvar_prefix.size(), termvar_prefix) != 0) continue;
    bool digits = true;
    for (std::size_t i = termvar_prefix.size(); i < v.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) digits = false;
    if (digits)
      throw std::invalid_argument("variable '" + v + "' collides with the term alphabet");
  }
}

Term Term::var(std::string name) {
  Term t;
  t.kind_ = Kind::var;
  t.head_ = std::move(name);
  return t;
}

Term Term::ctor(std::string connective, std::string rule, std::vector<Term> args) {
  Term t;
  t.kind_ = Kind::ctor;
  t.head_ = std::move(connective);
  t.rule_ = std::move(rule);
  t.sub_ = std::move(args);
  return t;
}

Term Term::elim(std::string connective, Term scrutinee,
                std::vector<std::vector<std::string>> binders, std::vector<Term> bodies) {
  if (binders.size() != bodies.size())
    throw std::invalid_argument("eliminator needs one body per branch");
  Term t;
  t.kind_ = Kind::elim;
  t.head_ = std::move(connective);
  t.sub_.reserve(bodies.size() + 1);
  t.sub_.push_back(std::move(scrutinee));
  for (auto& b : bodies) t.sub_.push_back(std::move(b));
  t.binders_ = std::move(binders);
  return t;
}

std::set<std::string> free_termvars(const Term& t) {
  std::set<std::string> out;
  switch (t.kind()) {
    case Term::Kind::var:
      out.insert(t.head());
      break;
    case Term::Kind::ctor:
      for (const auto& a : t.ctor_args())
        for (auto& v : free_termvars(a)) out.insert(v);
      break;
    case Term::Kind::elim: {
      for (auto& v : free_termvars(t.scrutinee())) out.insert(v);
      for (std::size_t i = 0; i < t.branch_count(); ++i) {
        std::set<std::string> body = free_termvars(t.branch_body(i));
        for (const auto& b : t.branch_binders(i)) body.erase(b);
        for (auto& v : body) out.insert(v);
      }
      break;
    }
  }
  return out;
}

Judgement type_decl(std::vector<Binding> context, Proposition type) {
  return Judgement{std::move(context), Conclusion{std::nullopt, std::move(type)}};
}

Judgement typing(std::vector<Binding> context, Term subject, Proposition type) {
  return Judgement{std::move(context), Conclusion{std::move(subject), std::move(type)}};
}

bool context_declares(const std::vector<Binding>& context, const std::string& var) {
  for (const auto& b : context)
    if (b.var == var) return true;
  return false;
}

void validate_term(const Signature& sig, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::var:
      return;
    case Term::Kind::ctor: {
      const prop::RuleDecl* decl = sig.base.find_rule(t.head(), t.rule());
      if (!decl) {
        if (!sig.base.find_connective(t.head()))
          rule_fail(RuleErrorKind::unknown_connective,
                    "term constructor over unknown connective '" + t.head() + "'");
        rule_fail(RuleErrorKind::unknown_rule_label,
                  "connective '" + t.head() + "' has no rule '" + t.rule() + "'");
      }
      std::size_t want = prop::truth_positions(decl->header).size();
      if (t.ctor_args().size() != want)
        rule_fail(RuleErrorKind::term_count_mismatch,
                  "constructor '" + t.head() + "." + t.rule() + "' takes " + std::to_string(want) +
                      " term(s), got " + std::to_string(t.ctor_args().size()));
      for (const auto& a : t.ctor_args()) validate_term(sig, a);
      return;
    }
    case Term::Kind::elim: {
      const prop::ConnectiveDecl* c = sig.base.find_connective(t.head());
      if (!c)
        rule_fail(RuleErrorKind::unknown_connective,
                  "eliminator over unknown connective '" + t.head() + "'");
      if (t.branch_count() != c->rules.size())
        rule_fail(RuleErrorKind::branch_count_mismatch,
                  "eliminator of '" + t.head() + "' needs " + std::to_string(c->rules.size()) +
                      " branch(es), got " + std::to_string(t.branch_count()));
      validate_term(sig, t.scrutinee());
      for (std::size_t i = 0; i < t.branch_count(); ++i) {
        const auto& binders = t.branch_binders(i);
        std::size_t want = prop::truth_positions(c->rules[i].header).size();
        if (binders.size() != want)
          rule_fail(RuleErrorKind::binder_count_mismatch,
                    "branch '" + c->rules[i].label + "' of eliminator '" + t.head() + "' binds " +
                        std::to_string(binders.size()) + " variable(s), expected " +
                        std::to_string(want));
        for (std::size_t a = 0; a < binders.size(); ++a)
          for (std::size_t b = a + 1; b < binders.size(); ++b)
            if (binders[a] == binders[b])
              rule_fail(RuleErrorKind::freshness_violation,
                        "branch binders repeat variable '" + binders[a] + "'");
        validate_term(sig, t.branch_body(i));
      }
      return;
    }
  }
}

void validate_judgement(const Signature& sig, const Judgement& j) {
  for (std::size_t i = 0; i < j.context.size(); ++i) {
    prop::validate_proposition(sig.base, j.context[i].type);
    for (std::size_t k = i + 1; k < j.context.size(); ++k)
      if (j.context[i].var == j.context[k].var)
        rule_fail(RuleErrorKind::invalid_judgement,
                  "context declares variable '" + j.context[i].var + "' twice");
  }
  prop::validate_proposition(sig.base, j.conclusion.type);
  if (j.conclusion.subject) {
    validate_term(sig, *j.conclusion.subject);
    for (const auto& v : free_termvars(*j.conclusion.subject))
      if (!context_declares(j.context, v))
        rule_fail(RuleErrorKind::invalid_judgement,
                  "subject mentions undeclared variable '" + v + "'");
  }
}

namespace {

std::vector<Binding> extended(std::vector<Binding> context, const std::string& var,
                              const Proposition& type) {
  context.push_back(Binding{var, type});
  return context;
}

void require_fresh(const std::vector<Binding>& context, const std::string& var) {
  if (context_declares(context, var))
    rule_fail(RuleErrorKind::freshness_violation,
              "variable '" + var + "' already occurs in the context");
}

struct Instantiator {
  const Signature& sig;

  Inference<Judgement> finish(Inference<Judgement> step) const {
    for (const auto& p : step.premises) validate_judgement(sig, p);
    validate_judgement(sig, step.conclusion);
    return step;
  }

  Inference<Judgement> operator()(const VarRule& r) const {
    if (!sig.base.has_variable(r.variable))
      rule_fail(RuleErrorKind::unknown_variable, "unknown variable '" + r.variable + "'");
    return finish({{}, type_decl({}, Proposition::variable(r.variable))});
  }

  Inference<Judgement> operator()(const SelfRule& r) const {
    require_fresh(r.context, r.var);
    return finish({{type_decl(r.context, r.type)},
                   typing(extended(r.context, r.var, r.type), Term::var(r.var), r.type)});
  }

  Inference<Judgement> operator()(const WeakRule& r) const {
    require_fresh(r.context, r.var);
    return finish({{type_decl(r.context, r.type), Judgement{r.context, r.target}},
                   Judgement{extended(r.context, r.var, r.type), r.target}});
  }

  Inference<Judgement> operator()(const FormRule& r) const {
    const prop::ConnectiveDecl* c = sig.base.find_connective(r.connective);
    if (!c)
      rule_fail(RuleErrorKind::unknown_connective, "unknown connective '" + r.connective + "'");
    if (r.args.size() != c->arity)
      rule_fail(RuleErrorKind::arity_mismatch, "formation of '" + r.connective + "' needs " +
                                                   std::to_string(c->arity) + " argument(s)");
    Inference<Judgement> step;
    for (const auto& a : r.args) step.premises.push_back(type_decl(r.context, a));
    step.conclusion = type_decl(r.context, Proposition::apply(c->name, r.args));
    return finish(std::move(step));
  }

  Inference<Judgement> operator()(const IntroRule& r) const {
    const prop::RuleDecl* decl = sig.base.find_rule(r.connective, r.rule);
    if (!decl) {
      if (!sig.base.find_connective(r.connective))
        rule_fail(RuleErrorKind::unknown_connective, "unknown connective '" + r.connective + "'");
      rule_fail(RuleErrorKind::unknown_rule_label,
                "connective '" + r.connective + "' has no rule '" + r.rule + "'");
    }
    if (r.args.size() != decl->header.size())
      rule_fail(RuleErrorKind::arity_mismatch, "introduction over '" + r.connective + "' needs " +
                                                   std::to_string(decl->header.size()) +
                                                   " argument(s)");
    std::vector<std::size_t> truths = prop::truth_positions(decl->header);
    if (r.terms.size() != truths.size())
      rule_fail(RuleErrorKind::term_count_mismatch,
                "introduction rule '" + r.rule + "' of '" + r.connective + "' takes " +
                    std::to_string(truths.size()) + " term(s), got " +
                    std::to_string(r.terms.size()));
    Inference<Judgement> step;
    std::size_t next_term = 0;
    for (std::size_t i = 0; i < r.args.size(); ++i) {
      if (decl->header[i] == Adjective::truth)
        step.premises.push_back(typing(r.context, r.terms[next_term++], r.args[i]));
      else
        step.premises.push_back(type_decl(r.context, r.args[i]));
    }
    step.conclusion = typing(r.context, Term::ctor(r.connective, r.rule, r.terms),
                             Proposition::apply(r.connective, r.args));
    return finish(std::move(step));
  }

  Inference<Judgement> operator()(const ElimRule& r) const {
    const prop::ConnectiveDecl* c = sig.base.find_connective(r.connective);
    if (!c)
      rule_fail(RuleErrorKind::unknown_connective, "unknown connective '" + r.connective + "'");
    if (r.args.size() != c->arity)
      rule_fail(RuleErrorKind::arity_mismatch, "elimination of '" + r.connective + "' needs " +
                                                   std::to_string(c->arity) + " argument(s)");
    if (r.branches.size() != c->rules.size())
      rule_fail(RuleErrorKind::branch_count_mismatch,
                "elimination of '" + r.connective + "' needs " +
                    std::to_string(c->rules.size()) + " branch(es), got " +
                    std::to_string(r.branches.size()));
    Inference<Judgement> step;
    step.premises.push_back(
        typing(r.context, r.scrutinee, Proposition::apply(r.connective, r.args)));
    std::vector<std::vector<std::string>> binders;
    std::vector<Term> bodies;
    for (std::size_t bi = 0; bi < r.branches.size(); ++bi) {
      const auto& branch = r.branches[bi];
      std::vector<std::size_t> truths = prop::truth_positions(c->rules[bi].header);
      if (branch.binders.size() != truths.size())
        rule_fail(RuleErrorKind::binder_count_mismatch,
                  "branch '" + c->rules[bi].label + "' binds " +
                      std::to_string(branch.binders.size()) + " variable(s), expected " +
                      std::to_string(truths.size()));
      std::vector<Binding> branch_context = r.context;
      for (std::size_t k = 0; k < truths.size(); ++k) {
        require_fresh(branch_context, branch.binders[k]);
        branch_context.push_back(Binding{branch.binders[k], r.args[truths[k]]});
      }
      step.premises.push_back(typing(std::move(branch_context), branch.body, r.motive));
      binders.push_back(branch.binders);
      bodies.push_back(branch.body);
    }
    step.conclusion =
        typing(r.context,
               Term::elim(r.connective, r.scrutinee, std::move(binders), std::move(bodies)),
               r.motive);
    return finish(std::move(step));
  }
};

}  // namespace

Inference<Judgement> instantiate_rule(const Signature& sig, const RuleName& name) {
  return std::visit(Instantiator{sig}, name);
}

std::string Ruleset::describe(const Judgement& j) { return to_text(j); }

Judgement check_proof(const Signature& sig, const Proof& tree) {
  return check_deduction(Ruleset{&sig}, tree);
}

}  // namespace dedukt::lam
