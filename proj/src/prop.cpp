#include "dedukt/prop.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dedukt/sexpr.hpp"

namespace dedukt::prop {

namespace {

[[noreturn]] void rule_fail(RuleErrorKind kind, const std::string& what) {
  throw RuleError(kind, what);
}

bool reserved_word(const std::string& name) {
  return name == "prop" || name == "true" || name == "type";
}

void validate_name(const std::string& name, const char* what) {
  if (!sexpr::valid_symbol(name))
    throw std::invalid_argument(std::string(what) + " '" + name + "' is not a valid identifier");
  if (reserved_word(name))
    throw std::invalid_argument(std::string(what) + " '" + name + "' is a reserved word");
}

}  // namespace

const ConnectiveDecl* Signature::find_connective(const std::string& name) const {
  for (const auto& c : connectives)
    if (c.name == name) return &c;
  return nullptr;
}

const RuleDecl* Signature::find_rule(const std::string& connective,
                                     const std::string& label) const {
  const ConnectiveDecl* c = find_connective(connective);
  if (!c) return nullptr;
  for (const auto& r : c->rules)
    if (r.label == label) return &r;
  return nullptr;
}

bool Signature::has_variable(const std::string& name) const {
  return std::find(variables.begin(), variables.end(), name) != variables.end();
}

void Signature::validate() const {
  std::set<std::string> vars;
  for (const auto& v : variables) {
    validate_name(v, "variable");
    if (!vars.insert(v).second) throw std::invalid_argument("duplicate variable '" + v + "'");
  }
  std::set<std::string> conns;
  for (const auto& c : connectives) {
    validate_name(c.name, "connective");
    if (!conns.insert(c.name).second)
      throw std::invalid_argument("duplicate connective '" + c.name + "'");
    if (vars.count(c.name))
      throw std::invalid_argument("name '" + c.name + "' used as both variable and connective");
    std::set<std::string> labels;
    for (const auto& r : c.rules) {
      validate_name(r.label, "rule label");
      if (!labels.insert(r.label).second)
        throw std::invalid_argument("duplicate rule label '" + r.label + "' on '" + c.name + "'");
      if (r.header.size() != c.arity)
        throw std::invalid_argument("header of rule '" + r.label + "' on '" + c.name +
                                    "' has length " + std::to_string(r.header.size()) +
                                    ", arity is " + std::to_string(c.arity));
    }
  }
}

Proposition Proposition::variable(std::string name) {
  Proposition p;
  p.is_var_ = true;
  p.head_ = std::move(name);
  return p;
}

Proposition Proposition::apply(std::string connective, std::vector<Proposition> args) {
  Proposition p;
  p.is_var_ = false;
  p.head_ = std::move(connective);
  p.args_ = std::move(args);
  return p;
}

std::size_t Proposition::depth() const {
  std::size_t best = 0;
  for (const auto& a : args_) best = std::max(best, a.depth());
  return best + 1;
}

Judgement judgement(std::vector<Proposition> context, Proposition prop, Adjective adjective) {
  return Judgement{std::move(context), Conclusion{std::move(prop), adjective}};
}

void validate_proposition(const Signature& sig, const Proposition& p) {
  if (p.is_variable()) {
    if (!sig.has_variable(p.head()))
      rule_fail(RuleErrorKind::unknown_variable, "unknown variable '" + p.head() + "'");
    return;
  }
  const ConnectiveDecl* c = sig.find_connective(p.head());
  if (!c) rule_fail(RuleErrorKind::unknown_connective, "unknown connective '" + p.head() + "'");
  if (p.args().size() != c->arity)
    rule_fail(RuleErrorKind::arity_mismatch,
              "connective '" + p.head() + "' applied to " + std::to_string(p.args().size()) +
                  " argument(s), arity is " + std::to_string(c->arity));
  for (const auto& a : p.args()) validate_proposition(sig, a);
}

void validate_judgement(const Signature& sig, const Judgement& j) {
  for (const auto& p : j.context) validate_proposition(sig, p);
  validate_proposition(sig, j.conclusion.prop);
}

std::vector<std::size_t> truth_positions(const Header& header) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == Adjective::truth) out.push_back(i);
  return out;
}

namespace {

std::vector<Proposition> extended(std::vector<Proposition> context, const Proposition& extra) {
  context.push_back(extra);
  return context;
}

const ConnectiveDecl& lookup_connective(const Signature& sig, const std::string& name) {
  const ConnectiveDecl* c = sig.find_connective(name);
  if (!c) rule_fail(RuleErrorKind::unknown_connective, "unknown connective '" + name + "'");
  return *c;
}

void check_args(const Signature& sig, const ConnectiveDecl& c,
                const std::vector<Proposition>& args) {
  if (args.size() != c.arity)
    rule_fail(RuleErrorKind::arity_mismatch,
              "rule over '" + c.name + "' carries " + std::to_string(args.size()) +
                  " argument(s), arity is " + std::to_string(c.arity));
  for (const auto& a : args) validate_proposition(sig, a);
}

struct Instantiator {
  const Signature& sig;

  Inference<Judgement> operator()(const VarRule& r) const {
    if (!sig.has_variable(r.variable))
      rule_fail(RuleErrorKind::unknown_variable, "unknown variable '" + r.variable + "'");
    return {{}, judgement({}, Proposition::variable(r.variable), Adjective::prop)};
  }

  Inference<Judgement> operator()(const SelfRule& r) const {
    for (const auto& p : r.context) validate_proposition(sig, p);
    validate_proposition(sig, r.prop);
    return {{judgement(r.context, r.prop, Adjective::prop)},
            judgement(extended(r.context, r.prop), r.prop, Adjective::truth)};
  }

  Inference<Judgement> operator()(const WeakRule& r) const {
    for (const auto& p : r.context) validate_proposition(sig, p);
    validate_proposition(sig, r.prop);
    validate_proposition(sig, r.target.prop);
    return {{judgement(r.context, r.prop, Adjective::prop),
             Judgement{r.context, r.target}},
            Judgement{extended(r.context, r.prop), r.target}};
  }

  Inference<Judgement> operator()(const FormRule& r) const {
    const ConnectiveDecl& c = lookup_connective(sig, r.connective);
    for (const auto& p : r.context) validate_proposition(sig, p);
    check_args(sig, c, r.args);
    Inference<Judgement> step;
    for (const auto& a : r.args)
      step.premises.push_back(judgement(r.context, a, Adjective::prop));
    step.conclusion =
        judgement(r.context, Proposition::apply(c.name, r.args), Adjective::prop);
    return step;
  }

  Inference<Judgement> operator()(const IntroRule& r) const {
    const ConnectiveDecl& c = lookup_connective(sig, r.connective);
    const RuleDecl* decl = sig.find_rule(r.connective, r.rule);
    if (!decl)
      rule_fail(RuleErrorKind::unknown_rule_label,
                "connective '" + r.connective + "' has no rule '" + r.rule + "'");
    for (const auto& p : r.context) validate_proposition(sig, p);
    check_args(sig, c, r.args);
    Inference<Judgement> step;
    for (std::size_t i = 0; i < r.args.size(); ++i)
      step.premises.push_back(judgement(r.context, r.args[i], decl->header[i]));
    step.conclusion =
        judgement(r.context, Proposition::apply(c.name, r.args), Adjective::truth);
    return step;
  }

  // The elimination rule of a connective is computed from all of its
  // introduction rules: one scrutinee premise, then one branch premise per
  // rule, extending the context with that rule's truth-headed arguments in
  // position order.
  Inference<Judgement> operator()(const ElimRule& r) const {
    const ConnectiveDecl& c = lookup_connective(sig, r.connective);
    for (const auto& p : r.context) validate_proposition(sig, p);
    check_args(sig, c, r.args);
    validate_proposition(sig, r.motive);
    Inference<Judgement> step;
    step.premises.push_back(
        judgement(r.context, Proposition::apply(c.name, r.args), Adjective::truth));
    for (const auto& decl : c.rules) {
      std::vector<Proposition> branch_context = r.context;
      for (std::size_t i : truth_positions(decl.header)) branch_context.push_back(r.args[i]);
      step.premises.push_back(judgement(std::move(branch_context), r.motive, Adjective::truth));
    }
    step.conclusion = judgement(r.context, r.motive, Adjective::truth);
    return step;
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

// ---------------------------------------------------------------------------
// Morphisms.

SignatureMorphism SignatureMorphism::make(
    Signature source, Signature target, std::map<std::string, std::string> connective_map,
    std::map<std::pair<std::string, std::string>, std::string> rule_map,
    std::map<std::string, std::string> variable_map) {
  source.validate();
  target.validate();
  for (const auto& v : source.variables) {
    auto it = variable_map.find(v);
    if (it == variable_map.end())
      throw std::invalid_argument("morphism does not map variable '" + v + "'");
    if (!target.has_variable(it->second))
      throw std::invalid_argument("morphism maps variable '" + v + "' to unknown '" + it->second +
                                  "'");
  }
  for (const auto& c : source.connectives) {
    auto it = connective_map.find(c.name);
    if (it == connective_map.end())
      throw std::invalid_argument("morphism does not map connective '" + c.name + "'");
    const ConnectiveDecl* image = target.find_connective(it->second);
    if (!image)
      throw std::invalid_argument("morphism maps connective '" + c.name + "' to unknown '" +
                                  it->second + "'");
    if (image->arity != c.arity)
      throw std::invalid_argument("morphism does not preserve arity of '" + c.name + "'");
    if (image->rules.size() != c.rules.size())
      throw std::invalid_argument("morphism cannot be rule-bijective on '" + c.name +
                                  "': rule counts differ");
    std::set<std::string> hit;
    for (const auto& r : c.rules) {
      auto rit = rule_map.find({c.name, r.label});
      if (rit == rule_map.end())
        throw std::invalid_argument("morphism does not map rule '" + r.label + "' of '" + c.name +
                                    "'");
      const RuleDecl* rimage = target.find_rule(image->name, rit->second);
      if (!rimage)
        throw std::invalid_argument("morphism maps rule '" + r.label + "' of '" + c.name +
                                    "' to unknown '" + rit->second + "'");
      if (rimage->header != r.header)
        throw std::invalid_argument("morphism does not preserve the header of rule '" + r.label +
                                    "' of '" + c.name + "'");
      if (!hit.insert(rit->second).second)
        throw std::invalid_argument("morphism is not injective on the rules of '" + c.name + "'");
    }
  }
  SignatureMorphism m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.connective_map_ = std::move(connective_map);
  m.rule_map_ = std::move(rule_map);
  m.variable_map_ = std::move(variable_map);
  return m;
}

SignatureMorphism SignatureMorphism::identity(const Signature& sig) {
  std::map<std::string, std::string> cm, vm;
  std::map<std::pair<std::string, std::string>, std::string> rm;
  for (const auto& c : sig.connectives) {
    cm[c.name] = c.name;
    for (const auto& r : c.rules) rm[{c.name, r.label}] = r.label;
  }
  for (const auto& v : sig.variables) vm[v] = v;
  return make(sig, sig, std::move(cm), std::move(rm), std::move(vm));
}

const std::string& SignatureMorphism::map_connective(const std::string& c) const {
  auto it = connective_map_.find(c);
  if (it == connective_map_.end())
    throw std::invalid_argument("morphism has no image for connective '" + c + "'");
  return it->second;
}

const std::string& SignatureMorphism::map_rule(const std::string& c, const std::string& r) const {
  auto it = rule_map_.find({c, r});
  if (it == rule_map_.end())
    throw std::invalid_argument("morphism has no image for rule '" + r + "' of '" + c + "'");
  return it->second;
}

const std::string& SignatureMorphism::map_variable(const std::string& v) const {
  auto it = variable_map_.find(v);
  if (it == variable_map_.end())
    throw std::invalid_argument("morphism has no image for variable '" + v + "'");
  return it->second;
}

Proposition transport(const SignatureMorphism& m, const Proposition& p) {
  if (p.is_variable()) return Proposition::variable(m.map_variable(p.head()));
  std::vector<Proposition> args;
  args.reserve(p.args().size());
  for (const auto& a : p.args()) args.push_back(transport(m, a));
  return Proposition::apply(m.map_connective(p.head()), std::move(args));
}

namespace {

std::vector<Proposition> transport_context(const SignatureMorphism& m,
                                           const std::vector<Proposition>& ctx) {
  std::vector<Proposition> out;
  out.reserve(ctx.size());
  for (const auto& p : ctx) out.push_back(transport(m, p));
  return out;
}

}  // namespace

Judgement transport(const SignatureMorphism& m, const Judgement& j) {
  return Judgement{transport_context(m, j.context),
                   Conclusion{transport(m, j.conclusion.prop), j.conclusion.adjective}};
}

RuleName transport(const SignatureMorphism& m, const RuleName& name) {
  return std::visit(
      [&m](const auto& r) -> RuleName {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, VarRule>) {
          return VarRule{m.map_variable(r.variable)};
        } else if constexpr (std::is_same_v<T, SelfRule>) {
          return SelfRule{transport_context(m, r.context), transport(m, r.prop)};
        } else if constexpr (std::is_same_v<T, WeakRule>) {
          return WeakRule{transport_context(m, r.context), transport(m, r.prop),
                          Conclusion{transport(m, r.target.prop), r.target.adjective}};
        } else if constexpr (std::is_same_v<T, FormRule>) {
          return FormRule{m.map_connective(r.connective), transport_context(m, r.context),
                          transport_context(m, r.args)};
        } else if constexpr (std::is_same_v<T, IntroRule>) {
          return IntroRule{m.map_connective(r.connective), m.map_rule(r.connective, r.rule),
                           transport_context(m, r.context), transport_context(m, r.args)};
        } else {
          static_assert(std::is_same_v<T, ElimRule>);
          return ElimRule{m.map_connective(r.connective), transport_context(m, r.context),
                          transport_context(m, r.args), transport(m, r.motive)};
        }
      },
      name);
}

Proof transport(const SignatureMorphism& m, const Proof& tree) {
  Proof out;
  out.rule = transport(m, tree.rule);
  out.children.reserve(tree.children.size());
  // Elimination children follow the declared rule order of the connective;
  // a label permutation must reorder the branch subtrees accordingly.
  if (const auto* elim = std::get_if<ElimRule>(&tree.rule);
      elim && !tree.children.empty()) {
    const ConnectiveDecl* src = m.source().find_connective(elim->connective);
    const ConnectiveDecl* dst = m.target().find_connective(m.map_connective(elim->connective));
    out.children.push_back(transport(m, tree.children[0]));
    if (src && dst && tree.children.size() == src->rules.size() + 1) {
      for (const auto& target_rule : dst->rules) {
        for (std::size_t i = 0; i < src->rules.size(); ++i) {
          if (m.map_rule(elim->connective, src->rules[i].label) == target_rule.label) {
            out.children.push_back(transport(m, tree.children[i + 1]));
            break;
          }
        }
      }
      if (out.children.size() == tree.children.size()) return out;
      out.children.resize(1);
    }
    // Malformed tree: fall through and map the remaining children in place.
    for (std::size_t i = 1; i < tree.children.size(); ++i)
      out.children.push_back(transport(m, tree.children[i]));
    return out;
  }
  for (const auto& child : tree.children) out.children.push_back(transport(m, child));
  return out;
}

}  // namespace dedukt::prop
