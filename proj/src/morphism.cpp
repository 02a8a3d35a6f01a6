#include "dedukt/morphism.hpp"

#include <algorithm>
#include <map>

#include "dedukt/format.hpp"

namespace dedukt {

lam::Signature extend_signature(const prop::Signature& sig) {
  lam::Signature out;
  out.base = sig;
  out.termvar_prefix = "x";
  return out;
}

prop::Signature erase_signature(const lam::Signature& sig) { return sig.base; }

prop::Judgement erase_judgement(const lam::Judgement& j) {
  std::vector<prop::Proposition> context;
  context.reserve(j.context.size());
  for (const auto& b : j.context) context.push_back(b.type);
  Adjective adj = j.conclusion.subject ? Adjective::truth : Adjective::prop;
  return prop::judgement(std::move(context), j.conclusion.type, adj);
}

namespace {

std::vector<prop::Proposition> erase_context(const std::vector<lam::Binding>& ctx) {
  std::vector<prop::Proposition> out;
  out.reserve(ctx.size());
  for (const auto& b : ctx) out.push_back(b.type);
  return out;
}

prop::Conclusion erase_conclusion(const lam::Conclusion& c) {
  return prop::Conclusion{c.type, c.subject ? Adjective::truth : Adjective::prop};
}

}  // namespace

prop::RuleName erase_rule(const lam::RuleName& name) {
  return std::visit(
      [](const auto& r) -> prop::RuleName {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, lam::VarRule>) {
          return prop::VarRule{r.variable};
        } else if constexpr (std::is_same_v<T, lam::SelfRule>) {
          return prop::SelfRule{erase_context(r.context), r.type};
        } else if constexpr (std::is_same_v<T, lam::WeakRule>) {
          return prop::WeakRule{erase_context(r.context), r.type, erase_conclusion(r.target)};
        } else if constexpr (std::is_same_v<T, lam::FormRule>) {
          return prop::FormRule{r.connective, erase_context(r.context), r.args};
        } else if constexpr (std::is_same_v<T, lam::IntroRule>) {
          return prop::IntroRule{r.connective, r.rule, erase_context(r.context), r.args};
        } else {
          static_assert(std::is_same_v<T, lam::ElimRule>);
          return prop::ElimRule{r.connective, erase_context(r.context), r.args, r.motive};
        }
      },
      name);
}

prop::Proof erase_proof(const lam::Proof& tree) {
  prop::Proof out;
  out.rule = erase_rule(tree.rule);
  out.children.reserve(tree.children.size());
  for (const auto& child : tree.children) out.children.push_back(erase_proof(child));
  return out;
}

// ---------------------------------------------------------------------------
// Annotation: the constructive half. Each node of the propositional proof is
// relabeled with its lambda counterpart; truth conclusions additionally get a
// term built by the case analysis on the final rule.

namespace {

struct Annotator {
  const prop::Signature& sig;
  const lam::Signature& lsig;

  // Positional variable names for a context.
  std::vector<lam::Binding> name_context(const std::vector<prop::Proposition>& ctx) const {
    std::vector<lam::Binding> out;
    out.reserve(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i)
      out.push_back(lam::Binding{lsig.termvar(i), ctx[i]});
    return out;
  }

  struct Result {
    lam::Proof proof;
    lam::Judgement judgement;
  };

  Result annotate_node(const prop::Proof& tree) {
    std::vector<Result> children;
    children.reserve(tree.children.size());
    for (const auto& child : tree.children) children.push_back(annotate_node(child));

    lam::RuleName name = std::visit(
        [&](const auto& r) -> lam::RuleName {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, prop::VarRule>) {
            return lam::VarRule{r.variable};
          } else if constexpr (std::is_same_v<T, prop::SelfRule>) {
            // The term is the variable accompanying the final hypothesis.
            return lam::SelfRule{name_context(r.context), lsig.termvar(r.context.size()),
                                 r.prop};
          } else if constexpr (std::is_same_v<T, prop::WeakRule>) {
            // Recurse into the premise carrying the judgement and reuse its
            // annotated conclusion as the target.
            return lam::WeakRule{name_context(r.context), lsig.termvar(r.context.size()),
                                 r.prop, children.at(1).judgement.conclusion};
          } else if constexpr (std::is_same_v<T, prop::FormRule>) {
            return lam::FormRule{r.connective, name_context(r.context), r.args};
          } else if constexpr (std::is_same_v<T, prop::IntroRule>) {
            // Terms come from the truth-headed premises, in order.
            const prop::RuleDecl* decl = sig.find_rule(r.connective, r.rule);
            if (!decl)
              throw RuleError(RuleErrorKind::unknown_rule_label,
                              "connective '" + r.connective + "' has no rule '" + r.rule + "'");
            std::vector<lam::Term> terms;
            for (std::size_t i : prop::truth_positions(decl->header)) {
              const auto& subject = children.at(i).judgement.conclusion.subject;
              terms.push_back(*subject);
            }
            return lam::IntroRule{r.connective, r.rule, name_context(r.context), r.args,
                                  std::move(terms)};
          } else {
            static_assert(std::is_same_v<T, prop::ElimRule>);
            // Scrutinee term from the first premise; each branch binds the
            // extended context positions and takes its premise's term.
            const prop::ConnectiveDecl* c = sig.find_connective(r.connective);
            if (!c)
              throw RuleError(RuleErrorKind::unknown_connective,
                              "unknown connective '" + r.connective + "'");
            std::vector<lam::ElimBranch> branches;
            for (std::size_t bi = 0; bi < c->rules.size(); ++bi) {
              std::size_t bound = prop::truth_positions(c->rules[bi].header).size();
              lam::ElimBranch branch;
              for (std::size_t k = 0; k < bound; ++k)
                branch.binders.push_back(lsig.termvar(r.context.size() + k));
              branch.body = *children.at(bi + 1).judgement.conclusion.subject;
              branches.push_back(std::move(branch));
            }
            return lam::ElimRule{r.connective,
                                 name_context(r.context),
                                 r.args,
                                 r.motive,
                                 *children.at(0).judgement.conclusion.subject,
                                 std::move(branches)};
          }
        },
        tree.rule);

    Inference<lam::Judgement> step = lam::instantiate_rule(lsig, name);
    Result out;
    out.proof.rule = std::move(name);
    for (auto& child : children) out.proof.children.push_back(std::move(child.proof));
    out.judgement = std::move(step.conclusion);
    return out;
  }
};

}  // namespace

Annotation annotate(const prop::Signature& sig, const prop::Proof& tree) {
  prop::check_proof(sig, tree);  // reject ill-formed input with a path
  Annotation out;
  out.signature = extend_signature(sig);
  Annotator annotator{sig, out.signature};
  auto result = annotator.annotate_node(tree);
  out.proof = std::move(result.proof);
  out.judgement = std::move(result.judgement);
  out.term = out.judgement.conclusion.subject;
  return out;
}

// ---------------------------------------------------------------------------
// Reports.

CorollaryReport corollary_check(const prop::Signature& sig, const search::SearchBudget& budget,
                                const std::optional<prop::Judgement>& focus) {
  CorollaryReport report;
  lam::Signature lsig = extend_signature(sig);

  for (const auto& entry : search::enumerate_provable(lsig, budget)) {
    prop::Judgement target = erase_judgement(entry.judgement);
    if (focus && !(target == *focus)) continue;
    for (const auto& tree : entry.proofs) {
      ++report.erasure_total;
      try {
        prop::Judgement proved = prop::check_proof(sig, erase_proof(tree));
        if (proved == target)
          ++report.erasure_passed;
        else
          report.failures.push_back("erasure of " + to_text(tree) + " proves " + to_text(proved) +
                                    ", expected " + to_text(target));
      } catch (const CheckError& err) {
        report.failures.push_back("erasure of " + to_text(tree) + " fails: " + err.what());
      }
    }
  }

  for (const auto& entry : search::enumerate_provable(sig, budget)) {
    if (focus && !(entry.judgement == *focus)) continue;
    for (const auto& rho : entry.proofs) {
      ++report.annotation_total;
      try {
        Annotation ann = annotate(sig, rho);
        lam::check_proof(ann.signature, ann.proof);
        if (erase_judgement(ann.judgement) == entry.judgement)
          ++report.annotation_passed;
        else
          report.failures.push_back("annotation of " + to_text(rho) +
                                    " erases to the wrong judgement");
      } catch (const std::exception& err) {
        report.failures.push_back("annotation of " + to_text(rho) + " fails: " + err.what());
      }
    }
  }
  return report;
}

InjectivityReport injectivity_report(const lam::Signature& sig,
                                     const search::SearchBudget& budget) {
  InjectivityReport report;
  auto entries = search::enumerate_provable(sig, budget);
  report.judgements = entries.size();

  std::map<std::string, std::pair<prop::Judgement, std::vector<lam::Judgement>>> preimages;
  std::map<std::string, std::pair<std::string, std::size_t>> erasures;

  for (const auto& entry : entries) {
    report.proofs += entry.proofs.size();
    prop::Judgement erased = erase_judgement(entry.judgement);
    auto& slot = preimages[to_text(erased)];
    slot.first = erased;
    slot.second.push_back(entry.judgement);
    if (entry.proofs.size() >= 2)
      report.proof_multiplicities.emplace_back(entry.judgement, entry.proofs.size());
    for (const auto& tree : entry.proofs) {
      std::string image = to_text(erase_proof(tree));
      auto& group = erasures[image];
      group.first = image;
      ++group.second;
    }
  }

  for (auto& [key, slot] : preimages)
    if (slot.second.size() >= 2) report.judgement_preimages.emplace_back(slot.first, slot.second);

  for (auto& [key, group] : erasures) {
    if (group.second >= 2) {
      ++report.erasure_collisions;
      if (report.collision_samples.size() < 5)
        report.collision_samples.emplace_back(group.first, group.second);
    }
  }
  return report;
}

}  // namespace dedukt
