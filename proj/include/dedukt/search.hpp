#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dedukt/lambda.hpp"
#include "dedukt/prop.hpp"

namespace dedukt::search {

// Bounds for exhaustive enumeration. A proof tree "respects" a budget when
// its height is at most max_depth and every proposition mentioned by any of
// its rule names has depth at most prop_depth; this one uniform rule is
// shared by the goal-directed and the saturating enumerator so their outputs
// agree.
//
// max_context and the alphabet caps (prop_vars / term_vars) bound the space
// of judgements enumerate_provable sweeps, not the interior of a derivation:
// elimination branches may extend contexts past max_context on the way to an
// in-bounds conclusion.
struct SearchBudget {
  std::size_t max_depth = 3;
  std::size_t max_context = 2;
  std::size_t prop_depth = 2;
  std::size_t prop_vars = static_cast<std::size_t>(-1);  // first n signature variables
  std::size_t term_vars = 2;                             // lambda alphabet size

  SearchBudget with_depth(std::size_t d) const {
    SearchBudget b = *this;
    b.max_depth = d;
    return b;
  }
};

// ---------------------------------------------------------------------------
// Goal-directed enumeration. Returns every budget-respecting proof of the
// goal in lexicographic order of the canonical printed form. An empty result
// is an answer, not an error. Sound (every tree checks to the goal) and
// complete within the budget.

std::vector<prop::Proof> enumerate_proofs(const prop::Signature& sig, const prop::Judgement& goal,
                                          const SearchBudget& budget);

std::vector<lam::Proof> enumerate_proofs(const lam::Signature& sig, const lam::Judgement& goal,
                                         const SearchBudget& budget);

// Bounded decidable surrogate for "the goal has a proof".
bool holds(const prop::Signature& sig, const prop::Judgement& goal, std::size_t depth);
bool holds(const lam::Signature& sig, const lam::Judgement& goal, std::size_t depth);

// ---------------------------------------------------------------------------
// Whole-space enumeration.

template <typename Judgement, typename Proof>
struct ProvableEntry {
  Judgement judgement;
  std::vector<Proof> proofs;  // sorted by canonical printed form
};

using PropEntry = ProvableEntry<prop::Judgement, prop::Proof>;
using LambdaEntry = ProvableEntry<lam::Judgement, lam::Proof>;

// Sweeps every judgement inside the budget's context/proposition bounds and
// keeps the provable ones with all their proofs, ordered by canonical
// judgement text.
std::vector<PropEntry> enumerate_provable(const prop::Signature& sig, const SearchBudget& budget);

// Same contract for the lambda side: judgements over the first term_vars
// alphabet names with context length at most max_context. Implemented by
// forward saturation (typing judgements carry terms, so the goal space cannot
// be listed up front).
std::vector<LambdaEntry> enumerate_provable(const lam::Signature& sig, const SearchBudget& budget);

// (judgement, proof count) projections.
std::vector<std::pair<prop::Judgement, std::size_t>> provable_counts(const prop::Signature& sig,
                                                                     const SearchBudget& budget);
std::vector<std::pair<lam::Judgement, std::size_t>> provable_counts(const lam::Signature& sig,
                                                                    const SearchBudget& budget);

// All propositions over the first prop_vars variables with depth at most
// prop_depth, in canonical order. The synthesis pool for rule parameters.
std::vector<prop::Proposition> proposition_pool(const prop::Signature& sig,
                                                const SearchBudget& budget);

}  // namespace dedukt::search
