#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dedukt {

// One deduction step: an ordered, finite family of premises and a conclusion.
// Premise order is significant; slot i of a rule instance must be discharged
// by child i of the proof node.
template <typename Judgement>
struct Inference {
  std::vector<Judgement> premises;
  Judgement conclusion;
};

// Freely generated deduction: a rule-instance name plus one subtree per
// premise slot. Equality is structural; there is no quotienting.
template <typename RuleName>
struct ProofTree {
  RuleName rule;
  std::vector<ProofTree<RuleName>> children;

  bool operator==(const ProofTree&) const = default;

  std::size_t height() const {
    std::size_t best = 0;
    for (const auto& child : children)
      if (child.height() > best) best = child.height();
    return best + 1;
  }

  std::size_t node_count() const {
    std::size_t n = 1;
    for (const auto& child : children) n += child.node_count();
    return n;
  }
};

template <typename RuleName>
ProofTree<RuleName> make_proof(RuleName rule, std::vector<ProofTree<RuleName>> children = {}) {
  return ProofTree<RuleName>{std::move(rule), std::move(children)};
}

// Reasons a rule name fails to instantiate against a signature.
enum class RuleErrorKind {
  unknown_connective,
  unknown_rule_label,
  unknown_variable,
  arity_mismatch,
  term_count_mismatch,
  branch_count_mismatch,
  binder_count_mismatch,
  freshness_violation,
  invalid_judgement,
};

struct RuleError : std::runtime_error {
  RuleErrorKind kind;

  RuleError(RuleErrorKind kind, const std::string& what) : std::runtime_error(what), kind(kind) {}
};

enum class CheckErrorKind {
  unknown_rule,      // instantiate undefined at this node
  arity_mismatch,    // child count differs from the premise count
  premise_mismatch,  // a child proves the wrong judgement
};

// Path is the list of child indices from the root to the offending node.
struct CheckError : std::runtime_error {
  CheckErrorKind kind;
  std::vector<std::size_t> path;
  std::string expected;
  std::string found;

  CheckError(CheckErrorKind kind, std::vector<std::size_t> path, const std::string& what,
             std::string expected = {}, std::string found = {})
      : std::runtime_error(what),
        kind(kind),
        path(std::move(path)),
        expected(std::move(expected)),
        found(std::move(found)) {}
};

namespace detail {

inline std::string path_text(const std::vector<std::size_t>& path) {
  if (path.empty()) return "root";
  std::string out;
  for (std::size_t i : path) {
    if (!out.empty()) out += '.';
    out += std::to_string(i);
  }
  return out;
}

template <typename Ruleset>
typename Ruleset::judgement_type check_at(const Ruleset& rules,
                                          const ProofTree<typename Ruleset::rule_name_type>& tree,
                                          std::vector<std::size_t>& path) {
  Inference<typename Ruleset::judgement_type> step;
  try {
    step = rules.instantiate(tree.rule);
  } catch (const RuleError& err) {
    throw CheckError(CheckErrorKind::unknown_rule, path,
                     "unknown rule at " + path_text(path) + ": " + err.what());
  }
  if (step.premises.size() != tree.children.size()) {
    throw CheckError(CheckErrorKind::arity_mismatch, path,
                     "arity mismatch at " + path_text(path) + ": rule expects " +
                         std::to_string(step.premises.size()) + " premise(s), proof has " +
                         std::to_string(tree.children.size()) + " child(ren)");
  }
  for (std::size_t i = 0; i < tree.children.size(); ++i) {
    path.push_back(i);
    auto proved = check_at(rules, tree.children[i], path);
    if (!(proved == step.premises[i])) {
      std::string expected = Ruleset::describe(step.premises[i]);
      std::string found = Ruleset::describe(proved);
      throw CheckError(CheckErrorKind::premise_mismatch, path,
                       "premise mismatch at " + path_text(path) + ": expected " + expected +
                           ", found " + found,
                       expected, found);
    }
    path.pop_back();
  }
  return step.conclusion;
}

}  // namespace detail

// Checks a freely generated tree against a ruleset. Returns the unique
// judgement the tree proves; throws CheckError otherwise. Pure: identical
// inputs give identical results.
//
// A Ruleset provides:
//   judgement_type / rule_name_type
//   Inference<judgement_type> instantiate(const rule_name_type&) const  (throws RuleError)
//   static std::string describe(const judgement_type&)
template <typename Ruleset>
typename Ruleset::judgement_type check_deduction(
    const Ruleset& rules, const ProofTree<typename Ruleset::rule_name_type>& tree) {
  std::vector<std::size_t> path;
  return detail::check_at(rules, tree, path);
}

}  // namespace dedukt
