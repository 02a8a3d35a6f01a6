#include "dedukt/format.hpp"

#include <stdexcept>

namespace dedukt::format {

using sexpr::Node;
using sexpr::ParseError;

namespace {

Node sym(std::string s) { return Node::symbol(std::move(s)); }
Node list(std::vector<Node> items) { return Node::list(std::move(items)); }

[[noreturn]] void fail(const Node& at, std::string expected) {
  throw ParseError(at.line, at.column, std::move(expected));
}

const Node& item(const Node& node, std::size_t i, const std::string& expected) {
  if (!node.is_list() || node.size() <= i) fail(node, expected);
  return node.at(i);
}

std::string head_of(const Node& node) {
  if (node.is_list() && node.size() > 0 && node.at(0).is_symbol()) return node.at(0).sym();
  return {};
}

void expect_form(const Node& node, const std::string& head, std::size_t min_items) {
  if (!node.is_list() || node.size() < min_items || head_of(node) != head)
    fail(node, "(" + head + " ...)");
}

std::string expect_symbol(const Node& node, const std::string& expected) {
  if (!node.is_symbol()) fail(node, expected);
  return node.sym();
}

const char* adjective_keyword(Adjective adj, bool lambda_side) {
  if (adj == Adjective::truth) return "true";
  return lambda_side ? "type" : "prop";
}

Adjective parse_adjective(const Node& node, bool lambda_side) {
  std::string word = expect_symbol(node, "an adjective");
  if (word == "true") return Adjective::truth;
  if (word == "prop") return Adjective::prop;
  if (word == "type" && lambda_side) return Adjective::prop;
  fail(node, lambda_side ? "one of prop, true, type" : "one of prop, true");
}

}  // namespace

// ---------------------------------------------------------------------------
// Propositions.

Node to_sexpr(const prop::Proposition& p) {
  if (p.is_variable()) return sym(p.head());
  std::vector<Node> items;
  items.push_back(sym(p.head()));
  for (const auto& a : p.args()) items.push_back(to_sexpr(a));
  return list(std::move(items));
}

prop::Proposition parse_proposition(const Node& node) {
  if (node.is_symbol()) return prop::Proposition::variable(node.sym());
  if (node.size() == 0 || !node.at(0).is_symbol()) fail(node, "a proposition");
  std::vector<prop::Proposition> args;
  for (std::size_t i = 1; i < node.size(); ++i) args.push_back(parse_proposition(node.at(i)));
  return prop::Proposition::apply(node.at(0).sym(), std::move(args));
}

namespace {

Node context_node(const std::vector<prop::Proposition>& ctx) {
  std::vector<Node> items{sym("ctx")};
  for (const auto& p : ctx) items.push_back(to_sexpr(p));
  return list(std::move(items));
}

std::vector<prop::Proposition> parse_context(const Node& node) {
  expect_form(node, "ctx", 1);
  std::vector<prop::Proposition> out;
  for (std::size_t i = 1; i < node.size(); ++i) out.push_back(parse_proposition(node.at(i)));
  return out;
}

Node conclusion_node(const prop::Conclusion& c) {
  return list({sym("concl"), to_sexpr(c.prop), sym(adjective_keyword(c.adjective, false))});
}

prop::Conclusion parse_conclusion(const Node& node) {
  expect_form(node, "concl", 3);
  if (node.size() != 3) fail(node, "(concl <proposition> <adjective>)");
  return prop::Conclusion{parse_proposition(node.at(1)), parse_adjective(node.at(2), false)};
}

Node args_node(const std::vector<prop::Proposition>& args) {
  std::vector<Node> items{sym("args")};
  for (const auto& p : args) items.push_back(to_sexpr(p));
  return list(std::move(items));
}

std::vector<prop::Proposition> parse_args(const Node& node) {
  expect_form(node, "args", 1);
  std::vector<prop::Proposition> out;
  for (std::size_t i = 1; i < node.size(); ++i) out.push_back(parse_proposition(node.at(i)));
  return out;
}

}  // namespace

Node to_sexpr(const prop::Judgement& j) {
  return list({sym("judgement"), context_node(j.context), conclusion_node(j.conclusion)});
}

prop::Judgement parse_prop_judgement(const Node& node) {
  expect_form(node, "judgement", 3);
  if (node.size() != 3) fail(node, "(judgement (ctx ...) (concl ...))");
  return prop::Judgement{parse_context(node.at(1)), parse_conclusion(node.at(2))};
}

// ---------------------------------------------------------------------------
// Propositional rule names and proofs.

Node to_sexpr(const prop::RuleName& name) {
  return std::visit(
      [](const auto& r) -> Node {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, prop::VarRule>) {
          return list({sym("var"), sym(r.variable)});
        } else if constexpr (std::is_same_v<T, prop::SelfRule>) {
          return list({sym("self"), context_node(r.context), to_sexpr(r.prop)});
        } else if constexpr (std::is_same_v<T, prop::WeakRule>) {
          return list({sym("weak"), context_node(r.context), to_sexpr(r.prop),
                       conclusion_node(r.target)});
        } else if constexpr (std::is_same_v<T, prop::FormRule>) {
          return list({sym("form"), sym(r.connective), context_node(r.context),
                       args_node(r.args)});
        } else if constexpr (std::is_same_v<T, prop::IntroRule>) {
          return list({sym("intro"), sym(r.connective), sym(r.rule), context_node(r.context),
                       args_node(r.args)});
        } else {
          static_assert(std::is_same_v<T, prop::ElimRule>);
          return list({sym("elim"), sym(r.connective), context_node(r.context), args_node(r.args),
                       to_sexpr(r.motive)});
        }
      },
      name);
}

namespace {

prop::RuleName parse_prop_rule(const Node& node) {
  std::string head = head_of(node);
  if (head == "var") {
    if (node.size() != 2) fail(node, "(var <variable>)");
    return prop::VarRule{expect_symbol(node.at(1), "a variable")};
  }
  if (head == "self") {
    if (node.size() != 3) fail(node, "(self (ctx ...) <proposition>)");
    return prop::SelfRule{parse_context(node.at(1)), parse_proposition(node.at(2))};
  }
  if (head == "weak") {
    if (node.size() != 4) fail(node, "(weak (ctx ...) <proposition> (concl ...))");
    return prop::WeakRule{parse_context(node.at(1)), parse_proposition(node.at(2)),
                          parse_conclusion(node.at(3))};
  }
  if (head == "form") {
    if (node.size() != 4) fail(node, "(form <connective> (ctx ...) (args ...))");
    return prop::FormRule{expect_symbol(node.at(1), "a connective"), parse_context(node.at(2)),
                          parse_args(node.at(3))};
  }
  if (head == "intro") {
    if (node.size() != 5) fail(node, "(intro <connective> <rule> (ctx ...) (args ...))");
    return prop::IntroRule{expect_symbol(node.at(1), "a connective"),
                           expect_symbol(node.at(2), "a rule label"), parse_context(node.at(3)),
                           parse_args(node.at(4))};
  }
  if (head == "elim") {
    if (node.size() != 5) fail(node, "(elim <connective> (ctx ...) (args ...) <motive>)");
    return prop::ElimRule{expect_symbol(node.at(1), "a connective"), parse_context(node.at(2)),
                          parse_args(node.at(3)), parse_proposition(node.at(4))};
  }
  fail(node, "a rule head: var, self, weak, form, intro or elim");
}

}  // namespace

Node to_sexpr(const prop::Proof& tree) {
  std::vector<Node> items{sym("proof"), to_sexpr(tree.rule)};
  for (const auto& child : tree.children) items.push_back(to_sexpr(child));
  return list(std::move(items));
}

prop::Proof parse_prop_proof(const Node& node) {
  expect_form(node, "proof", 2);
  prop::Proof tree;
  tree.rule = parse_prop_rule(node.at(1));
  for (std::size_t i = 2; i < node.size(); ++i)
    tree.children.push_back(parse_prop_proof(node.at(i)));
  return tree;
}

// ---------------------------------------------------------------------------
// Signatures.

namespace {

Node connective_node(const prop::ConnectiveDecl& c) {
  std::vector<Node> items{sym("connective"), sym(c.name),
                          list({sym("arity"), sym(std::to_string(c.arity))})};
  for (const auto& r : c.rules) {
    std::vector<Node> header{sym("header")};
    for (Adjective adj : r.header) header.push_back(sym(adjective_keyword(adj, false)));
    items.push_back(list({sym("rule"), sym(r.label), list(std::move(header))}));
  }
  return list(std::move(items));
}

prop::ConnectiveDecl parse_connective(const Node& node) {
  expect_form(node, "connective", 3);
  prop::ConnectiveDecl decl;
  decl.name = expect_symbol(node.at(1), "a connective name");
  const Node& arity = node.at(2);
  expect_form(arity, "arity", 2);
  if (arity.size() != 2 || !arity.at(1).is_symbol()) fail(arity, "(arity <number>)");
  try {
    decl.arity = std::stoul(arity.at(1).sym());
  } catch (const std::exception&) {
    fail(arity.at(1), "a number");
  }
  for (std::size_t i = 3; i < node.size(); ++i) {
    const Node& rule = node.at(i);
    expect_form(rule, "rule", 3);
    if (rule.size() != 3) fail(rule, "(rule <label> (header ...))");
    prop::RuleDecl r;
    r.label = expect_symbol(rule.at(1), "a rule label");
    const Node& header = rule.at(2);
    expect_form(header, "header", 1);
    for (std::size_t k = 1; k < header.size(); ++k)
      r.header.push_back(parse_adjective(header.at(k), false));
    decl.rules.push_back(std::move(r));
  }
  return decl;
}

Node signature_items(const prop::Signature& sig, const std::string* termvar_prefix) {
  std::vector<Node> items{sym("signature")};
  std::vector<Node> vars{sym("vars")};
  for (const auto& v : sig.variables) vars.push_back(sym(v));
  items.push_back(list(std::move(vars)));
  if (termvar_prefix) items.push_back(list({sym("termvars"), sym(*termvar_prefix)}));
  for (const auto& c : sig.connectives) items.push_back(connective_node(c));
  return list(std::move(items));
}

// Shared by both signature parsers; `prefix` collects an optional termvars
// clause.
prop::Signature parse_signature_items(const Node& node, std::string* prefix) {
  expect_form(node, "signature", 1);
  prop::Signature sig;
  bool saw_termvars = false;
  for (std::size_t i = 1; i < node.size(); ++i) {
    const Node& clause = node.at(i);
    std::string head = head_of(clause);
    if (head == "vars") {
      for (std::size_t k = 1; k < clause.size(); ++k)
        sig.variables.push_back(expect_symbol(clause.at(k), "a variable name"));
    } else if (head == "termvars") {
      if (!prefix) fail(clause, "no termvars clause in a propositional signature");
      if (clause.size() != 2) fail(clause, "(termvars <prefix>)");
      *prefix = expect_symbol(clause.at(1), "an alphabet prefix");
      saw_termvars = true;
    } else if (head == "connective") {
      sig.connectives.push_back(parse_connective(clause));
    } else {
      fail(clause, "a signature clause: vars, termvars or connective");
    }
  }
  if (prefix && !saw_termvars) fail(node, "a termvars clause");
  return sig;
}

}  // namespace

Node to_sexpr(const prop::Signature& sig) { return signature_items(sig, nullptr); }

Node to_sexpr(const lam::Signature& sig) {
  return signature_items(sig.base, &sig.termvar_prefix);
}

prop::Signature parse_prop_signature(const Node& node) {
  return parse_signature_items(node, nullptr);
}

lam::Signature parse_lambda_signature(const Node& node) {
  lam::Signature sig;
  sig.base = parse_signature_items(node, &sig.termvar_prefix);
  return sig;
}

// ---------------------------------------------------------------------------
// Terms.

Node to_sexpr(const lam::Term& t) {
  switch (t.kind()) {
    case lam::Term::Kind::var:
      return sym(t.head());
    case lam::Term::Kind::ctor: {
      std::vector<Node> items{sym("ctor"), sym(t.head()), sym(t.rule())};
      for (const auto& a : t.ctor_args()) items.push_back(to_sexpr(a));
      return list(std::move(items));
    }
    case lam::Term::Kind::elim: {
      std::vector<Node> items{sym("elim"), sym(t.head()), to_sexpr(t.scrutinee())};
      for (std::size_t i = 0; i < t.branch_count(); ++i) {
        std::vector<Node> binders;
        for (const auto& b : t.branch_binders(i)) binders.push_back(sym(b));
        items.push_back(
            list({sym("branch"), list(std::move(binders)), to_sexpr(t.branch_body(i))}));
      }
      return list(std::move(items));
    }
  }
  fail(Node(), "a term");
}

lam::Term parse_term(const Node& node) {
  if (node.is_symbol()) return lam::Term::var(node.sym());
  std::string head = head_of(node);
  if (head == "ctor") {
    if (node.size() < 3) fail(node, "(ctor <connective> <rule> <term>...)");
    std::vector<lam::Term> args;
    for (std::size_t i = 3; i < node.size(); ++i) args.push_back(parse_term(node.at(i)));
    return lam::Term::ctor(expect_symbol(node.at(1), "a connective"),
                           expect_symbol(node.at(2), "a rule label"), std::move(args));
  }
  if (head == "elim") {
    if (node.size() < 3) fail(node, "(elim <connective> <scrutinee> (branch ...)...)");
    lam::Term scrutinee = parse_term(node.at(2));
    std::vector<std::vector<std::string>> binders;
    std::vector<lam::Term> bodies;
    for (std::size_t i = 3; i < node.size(); ++i) {
      const Node& branch = node.at(i);
      expect_form(branch, "branch", 3);
      if (branch.size() != 3 || !branch.at(1).is_list())
        fail(branch, "(branch (<variable>...) <term>)");
      std::vector<std::string> names;
      for (const auto& b : branch.at(1).items())
        names.push_back(expect_symbol(b, "a binder variable"));
      binders.push_back(std::move(names));
      bodies.push_back(parse_term(branch.at(2)));
    }
    return lam::Term::elim(expect_symbol(node.at(1), "a connective"), std::move(scrutinee),
                           std::move(binders), std::move(bodies));
  }
  fail(node, "a term: variable, (ctor ...) or (elim ...)");
}

// ---------------------------------------------------------------------------
// Lambda judgements.

namespace {

Node binding_node(const lam::Binding& b) { return list({sym(b.var), to_sexpr(b.type)}); }

Node lam_context_node(const std::vector<lam::Binding>& ctx) {
  std::vector<Node> items{sym("ctx")};
  for (const auto& b : ctx) items.push_back(binding_node(b));
  return list(std::move(items));
}

std::vector<lam::Binding> parse_lam_context(const Node& node) {
  expect_form(node, "ctx", 1);
  std::vector<lam::Binding> out;
  for (std::size_t i = 1; i < node.size(); ++i) {
    const Node& entry = node.at(i);
    if (!entry.is_list() || entry.size() != 2) fail(entry, "(<variable> <proposition>)");
    out.push_back(lam::Binding{expect_symbol(entry.at(0), "a term variable"),
                               parse_proposition(entry.at(1))});
  }
  return out;
}

bool adjective_word(const Node& node) {
  return node.is_symbol() &&
         (node.sym() == "prop" || node.sym() == "true" || node.sym() == "type");
}

Node lam_conclusion_node(const lam::Conclusion& c) {
  if (!c.subject) return list({sym("concl"), to_sexpr(c.type), sym("type")});
  return list({sym("concl"), to_sexpr(*c.subject), to_sexpr(c.type)});
}

lam::Conclusion parse_lam_conclusion(const Node& node) {
  expect_form(node, "concl", 3);
  if (node.size() != 3) fail(node, "(concl <term> <type>) or (concl <type> type)");
  if (adjective_word(node.at(2))) {
    Adjective adj = parse_adjective(node.at(2), true);
    if (adj != Adjective::prop) fail(node.at(2), "the adjective type on a declaration");
    return lam::Conclusion{std::nullopt, parse_proposition(node.at(1))};
  }
  return lam::Conclusion{parse_term(node.at(1)), parse_proposition(node.at(2))};
}

}  // namespace

Node to_sexpr(const lam::Judgement& j) {
  return list({sym("judgement"), lam_context_node(j.context), lam_conclusion_node(j.conclusion)});
}

lam::Judgement parse_lambda_judgement(const Node& node) {
  expect_form(node, "judgement", 3);
  if (node.size() != 3) fail(node, "(judgement (ctx ...) (concl ...))");
  return lam::Judgement{parse_lam_context(node.at(1)), parse_lam_conclusion(node.at(2))};
}

// ---------------------------------------------------------------------------
// Lambda rule names and proofs.

Node to_sexpr(const lam::RuleName& name) {
  return std::visit(
      [](const auto& r) -> Node {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, lam::VarRule>) {
          return list({sym("var"), sym(r.variable)});
        } else if constexpr (std::is_same_v<T, lam::SelfRule>) {
          return list({sym("self"), lam_context_node(r.context), sym(r.var), to_sexpr(r.type)});
        } else if constexpr (std::is_same_v<T, lam::WeakRule>) {
          return list({sym("weak"), lam_context_node(r.context), sym(r.var), to_sexpr(r.type),
                       lam_conclusion_node(r.target)});
        } else if constexpr (std::is_same_v<T, lam::FormRule>) {
          return list({sym("form"), sym(r.connective), lam_context_node(r.context),
                       args_node(r.args)});
        } else if constexpr (std::is_same_v<T, lam::IntroRule>) {
          std::vector<Node> terms{sym("terms")};
          for (const auto& t : r.terms) terms.push_back(to_sexpr(t));
          return list({sym("intro"), sym(r.connective), sym(r.rule), lam_context_node(r.context),
                       args_node(r.args), list(std::move(terms))});
        } else {
          static_assert(std::is_same_v<T, lam::ElimRule>);
          std::vector<Node> items{sym("elim"),           sym(r.connective),
                                  lam_context_node(r.context), args_node(r.args),
                                  to_sexpr(r.motive),    to_sexpr(r.scrutinee)};
          for (const auto& b : r.branches) {
            std::vector<Node> binders;
            for (const auto& v : b.binders) binders.push_back(sym(v));
            items.push_back(list({sym("branch"), list(std::move(binders)), to_sexpr(b.body)}));
          }
          return list(std::move(items));
        }
      },
      name);
}

namespace {

lam::RuleName parse_lam_rule(const Node& node) {
  std::string head = head_of(node);
  if (head == "var") {
    if (node.size() != 2) fail(node, "(var <variable>)");
    return lam::VarRule{expect_symbol(node.at(1), "a variable")};
  }
  if (head == "self") {
    if (node.size() != 4) fail(node, "(self (ctx ...) <variable> <type>)");
    return lam::SelfRule{parse_lam_context(node.at(1)),
                         expect_symbol(node.at(2), "a term variable"),
                         parse_proposition(node.at(3))};
  }
  if (head == "weak") {
    if (node.size() != 5) fail(node, "(weak (ctx ...) <variable> <type> (concl ...))");
    return lam::WeakRule{parse_lam_context(node.at(1)),
                         expect_symbol(node.at(2), "a term variable"),
                         parse_proposition(node.at(3)), parse_lam_conclusion(node.at(4))};
  }
  if (head == "form") {
    if (node.size() != 4) fail(node, "(form <connective> (ctx ...) (args ...))");
    return lam::FormRule{expect_symbol(node.at(1), "a connective"), parse_lam_context(node.at(2)),
                         parse_args(node.at(3))};
  }
  if (head == "intro") {
    if (node.size() != 6)
      fail(node, "(intro <connective> <rule> (ctx ...) (args ...) (terms ...))");
    const Node& terms = node.at(5);
    expect_form(terms, "terms", 1);
    std::vector<lam::Term> ts;
    for (std::size_t i = 1; i < terms.size(); ++i) ts.push_back(parse_term(terms.at(i)));
    return lam::IntroRule{expect_symbol(node.at(1), "a connective"),
                          expect_symbol(node.at(2), "a rule label"),
                          parse_lam_context(node.at(3)), parse_args(node.at(4)), std::move(ts)};
  }
  if (head == "elim") {
    if (node.size() < 6)
      fail(node, "(elim <connective> (ctx ...) (args ...) <motive> <scrutinee> (branch ...)...)");
    lam::ElimRule r;
    r.connective = expect_symbol(node.at(1), "a connective");
    r.context = parse_lam_context(node.at(2));
    r.args = parse_args(node.at(3));
    r.motive = parse_proposition(node.at(4));
    r.scrutinee = parse_term(node.at(5));
    for (std::size_t i = 6; i < node.size(); ++i) {
      const Node& branch = node.at(i);
      expect_form(branch, "branch", 3);
      if (branch.size() != 3 || !branch.at(1).is_list())
        fail(branch, "(branch (<variable>...) <term>)");
      lam::ElimBranch b;
      for (const auto& v : branch.at(1).items())
        b.binders.push_back(expect_symbol(v, "a binder variable"));
      b.body = parse_term(branch.at(2));
      r.branches.push_back(std::move(b));
    }
    return r;
  }
  fail(node, "a rule head: var, self, weak, form, intro or elim");
}

}  // namespace

Node to_sexpr(const lam::Proof& tree) {
  std::vector<Node> items{sym("proof"), to_sexpr(tree.rule)};
  for (const auto& child : tree.children) items.push_back(to_sexpr(child));
  return list(std::move(items));
}

lam::Proof parse_lambda_proof(const Node& node) {
  expect_form(node, "proof", 2);
  lam::Proof tree;
  tree.rule = parse_lam_rule(node.at(1));
  for (std::size_t i = 2; i < node.size(); ++i)
    tree.children.push_back(parse_lambda_proof(node.at(i)));
  return tree;
}

// ---------------------------------------------------------------------------
// Morphisms.

Node to_sexpr(const MorphismDoc& doc) {
  std::vector<Node> items{sym("morphism")};
  for (const auto& [from, to] : doc.connectives)
    items.push_back(list({sym("connective"), sym(from), sym(to)}));
  for (const auto& [conn, rule, to] : doc.rules)
    items.push_back(list({sym("rule"), sym(conn), sym(rule), sym(to)}));
  for (const auto& [from, to] : doc.variables)
    items.push_back(list({sym("var"), sym(from), sym(to)}));
  return list(std::move(items));
}

MorphismDoc parse_morphism(const Node& node) {
  expect_form(node, "morphism", 1);
  MorphismDoc doc;
  for (std::size_t i = 1; i < node.size(); ++i) {
    const Node& clause = node.at(i);
    std::string head = head_of(clause);
    if (head == "connective") {
      if (clause.size() != 3) fail(clause, "(connective <from> <to>)");
      doc.connectives.emplace_back(expect_symbol(clause.at(1), "a connective"),
                                   expect_symbol(clause.at(2), "a connective"));
    } else if (head == "rule") {
      if (clause.size() != 4) fail(clause, "(rule <connective> <from> <to>)");
      doc.rules.emplace_back(expect_symbol(clause.at(1), "a connective"),
                             expect_symbol(clause.at(2), "a rule label"),
                             expect_symbol(clause.at(3), "a rule label"));
    } else if (head == "var") {
      if (clause.size() != 3) fail(clause, "(var <from> <to>)");
      doc.variables.emplace_back(expect_symbol(clause.at(1), "a variable"),
                                 expect_symbol(clause.at(2), "a variable"));
    } else {
      fail(clause, "a morphism clause: connective, rule or var");
    }
  }
  return doc;
}

prop::SignatureMorphism make_morphism(const prop::Signature& source, const prop::Signature& target,
                                      const MorphismDoc& doc) {
  std::map<std::string, std::string> cm, vm;
  std::map<std::pair<std::string, std::string>, std::string> rm;
  for (const auto& [from, to] : doc.connectives) cm[from] = to;
  for (const auto& [conn, rule, to] : doc.rules) rm[{conn, rule}] = to;
  for (const auto& [from, to] : doc.variables) vm[from] = to;
  return prop::SignatureMorphism::make(source, target, std::move(cm), std::move(rm),
                                       std::move(vm));
}

MorphismDoc to_doc(const prop::SignatureMorphism& m) {
  MorphismDoc doc;
  // Emit clauses in the source signature's declaration order.
  for (const auto& c : m.source().connectives) {
    doc.connectives.emplace_back(c.name, m.map_connective(c.name));
    for (const auto& r : c.rules) doc.rules.emplace_back(c.name, r.label, m.map_rule(c.name, r.label));
  }
  for (const auto& v : m.source().variables) doc.variables.emplace_back(v, m.map_variable(v));
  return doc;
}

// ---------------------------------------------------------------------------
// String entry points.

std::string print(const prop::Proposition& p) { return sexpr::print(to_sexpr(p)); }
std::string print(const prop::Judgement& j) { return sexpr::print(to_sexpr(j)); }
std::string print(const prop::Proof& tree) { return sexpr::print(to_sexpr(tree)); }
std::string print(const prop::Signature& sig) { return sexpr::print(to_sexpr(sig)); }
std::string print(const lam::Signature& sig) { return sexpr::print(to_sexpr(sig)); }
std::string print(const lam::Term& t) { return sexpr::print(to_sexpr(t)); }
std::string print(const lam::Judgement& j) { return sexpr::print(to_sexpr(j)); }
std::string print(const lam::Proof& tree) { return sexpr::print(to_sexpr(tree)); }
std::string print(const MorphismDoc& doc) { return sexpr::print(to_sexpr(doc)); }

prop::Proposition parse_proposition(const std::string& text) {
  return parse_proposition(sexpr::parse(text));
}
prop::Judgement parse_prop_judgement(const std::string& text) {
  return parse_prop_judgement(sexpr::parse(text));
}
prop::Proof parse_prop_proof(const std::string& text) {
  return parse_prop_proof(sexpr::parse(text));
}
prop::Signature parse_prop_signature(const std::string& text) {
  return parse_prop_signature(sexpr::parse(text));
}
lam::Signature parse_lambda_signature(const std::string& text) {
  return parse_lambda_signature(sexpr::parse(text));
}
lam::Term parse_term(const std::string& text) { return parse_term(sexpr::parse(text)); }
lam::Judgement parse_lambda_judgement(const std::string& text) {
  return parse_lambda_judgement(sexpr::parse(text));
}
lam::Proof parse_lambda_proof(const std::string& text) {
  return parse_lambda_proof(sexpr::parse(text));
}
MorphismDoc parse_morphism(const std::string& text) { return parse_morphism(sexpr::parse(text)); }

}  // namespace dedukt::format

// Compact renderings used in error messages and as deterministic sort keys.
namespace dedukt {

std::string to_text(const prop::Proposition& p) { return format::print(p); }
std::string to_text(const prop::Judgement& j) { return format::print(j); }
std::string to_text(const prop::RuleName& name) { return sexpr::print(format::to_sexpr(name)); }
std::string to_text(const prop::Proof& tree) { return format::print(tree); }
std::string to_text(const lam::Term& t) { return format::print(t); }
std::string to_text(const lam::Judgement& j) { return format::print(j); }
std::string to_text(const lam::RuleName& name) { return sexpr::print(format::to_sexpr(name)); }
std::string to_text(const lam::Proof& tree) { return format::print(tree); }

}  // namespace dedukt
