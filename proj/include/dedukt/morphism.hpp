#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dedukt/lambda.hpp"
#include "dedukt/prop.hpp"
#include "dedukt/search.hpp"

namespace dedukt {

// The forgetful translation from the lambda calculus to propositional logic:
// drop the term alphabet, strip variables out of contexts, relabel each rule
// node, discard term payloads. Plus its constructive section: annotating a
// propositional proof with a term and a typing derivation.

lam::Signature extend_signature(const prop::Signature& sig);
prop::Signature erase_signature(const lam::Signature& sig);

// x0:P0, ..., xn-1:Pn-1 |- t : P   becomes   P0, ..., Pn-1 |- P true
// x0:P0, ..., xn-1:Pn-1 |- P type  becomes   P0, ..., Pn-1 |- P prop
prop::Judgement erase_judgement(const lam::Judgement& j);

prop::RuleName erase_rule(const lam::RuleName& name);
prop::Proof erase_proof(const lam::Proof& tree);

struct Annotation {
  lam::Signature signature;
  lam::Judgement judgement;
  lam::Proof proof;
  std::optional<lam::Term> term;  // absent for formation-side conclusions
};

// Builds, from a checking propositional proof, a typing derivation that
// erases back to it node for node. Context variables are named x0, x1, ... by
// position; eliminator branches bind the extended positions. Guarantees
//   erase_proof(result.proof) == tree
//   erase_judgement(result.judgement) == check_proof(sig, tree)
//   erase_signature(result.signature) == sig
// Throws CheckError when the input does not check.
Annotation annotate(const prop::Signature& sig, const prop::Proof& tree);

// ---------------------------------------------------------------------------
// Executable forms of the two theorem directions and of the non-injectivity
// observations, at a given search budget.

struct CorollaryReport {
  std::size_t erasure_total = 0;    // lambda proofs mapped through erase_proof
  std::size_t erasure_passed = 0;
  std::size_t annotation_total = 0;  // provable prop judgements annotated back
  std::size_t annotation_passed = 0;
  std::vector<std::string> failures;

  bool ok() const {
    return erasure_passed == erasure_total && annotation_passed == annotation_total &&
           failures.empty();
  }
};

// Direction 1: every enumerated lambda proof erases to a checking
// propositional proof of the erased judgement. Direction 2: every provable
// propositional judgement annotates to a checking lambda proof whose erasure
// is the original. With `focus`, only judgements erasing to (direction 1) or
// equal to (direction 2) the given one are exercised.
CorollaryReport corollary_check(const prop::Signature& sig, const search::SearchBudget& budget,
                                const std::optional<prop::Judgement>& focus = std::nullopt);

struct InjectivityReport {
  std::size_t judgements = 0;  // provable lambda judgements enumerated
  std::size_t proofs = 0;
  // Propositional judgements with >= 2 provable preimages, with the preimages.
  std::vector<std::pair<prop::Judgement, std::vector<lam::Judgement>>> judgement_preimages;
  // Lambda judgements admitting >= 2 distinct proofs.
  std::vector<std::pair<lam::Judgement, std::size_t>> proof_multiplicities;
  // Distinct lambda proofs erasing to one propositional proof.
  std::size_t erasure_collisions = 0;
  std::vector<std::pair<std::string, std::size_t>> collision_samples;  // (prop proof, group size)
};

// Enumerates lambda proofs within the budget and reports where the erasure
// fails to be injective: multiple provable judgements over one erased
// judgement, judgements with several proofs, and proof-level collisions.
InjectivityReport injectivity_report(const lam::Signature& sig,
                                     const search::SearchBudget& budget);

}  // namespace dedukt
