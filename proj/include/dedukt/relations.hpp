#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dedukt::rel {

// Finite-universe consequence structures. Atoms are indexed 0..n-1 and
// subsets are bitmasks, so every quantifier below is a loop.

using Subset = std::uint32_t;

// A Tarski-style deductive relation: which judgement atoms follow from which
// hypothesis sets.
struct DeductiveRelation {
  std::vector<std::string> universe;
  std::vector<std::vector<bool>> table;  // table[mask][atom]

  bool holds(Subset hypotheses, std::size_t atom) const { return table[hypotheses][atom]; }

  static DeductiveRelation empty(std::vector<std::string> universe);
};

// A hypothesis-list rule: premises |- conclusion, all atoms.
struct HypoRule {
  std::vector<std::size_t> premises;
  std::size_t conclusion = 0;
};

// A deductive system over hypothetical judgements: derivability between a
// finite hypothesis list and an atom. The function must be insensitive to
// hypothesis duplication (our constructors are range-determined, which is
// stronger); rel_from_system relies on that to keep the existential over
// hypothesis lists finite.
struct HypotheticalSystem {
  std::vector<std::string> universe;
  std::function<bool(const std::vector<std::size_t>&, std::size_t)> derivable;
};

// Reachability semantics: an atom is derivable from a hypothesis list when
// saturating the list's range under the rules reaches it.
HypotheticalSystem rule_system(std::vector<std::string> universe, std::vector<HypoRule> rules);

// hypotheses ~> J  iff  some sequence with range inside the hypothesis set
// derives J. Materialized by enumerating duplicate-free sequences.
DeductiveRelation rel_from_system(const HypotheticalSystem& system);

// G |- J  iff  range(G) ~> J.
HypotheticalSystem system_from_rel(const DeductiveRelation& relation);

// Every consequence already follows from a finite sub-hypothesis set. On a
// finite universe this is a tautology; it is still checked literally.
bool is_finitary(const DeductiveRelation& relation);

// Consequences survive hypothesis growth.
bool is_monotonic(const DeductiveRelation& relation);

DeductiveRelation monotone_closure(const DeductiveRelation& relation);

// ---------------------------------------------------------------------------
// Randomized verification of the system/relation adjunction:
//   (i)   G |-_{~>_|-} J  iff  G |- J                 (exhaustive, lists <= 4)
//   (ii)  if ~> is finitary:  D ~> J  implies  D ~>_{|-_~>} J
//   (iii) if ~> is monotonic: D ~>_{|-_~>} J  implies  D ~> J
// Implications (ii)/(iii) follow the statement's proof; its summary display
// swaps the two side conditions.

struct AdjunctionReport {
  std::size_t trials = 0;
  std::size_t iff_checked = 0, iff_passed = 0;
  std::size_t finitary_checked = 0, finitary_passed = 0;
  std::size_t monotonic_checked = 0, monotonic_passed = 0;
  std::vector<std::string> counterexamples;

  bool ok() const {
    return iff_checked == iff_passed && finitary_checked == finitary_passed &&
           monotonic_checked == monotonic_passed && counterexamples.empty();
  }
};

// Runs `trials` rounds over seeded random systems and relations on universes
// of up to 5 atoms; fully deterministic for a given seed.
AdjunctionReport adjunction_check(std::uint64_t seed, std::size_t trials);

// Check helpers shared with the tests: exhaustive versions of the three
// statements for one instance.
bool check_iff(const HypotheticalSystem& system, std::size_t max_len, std::string* counterexample);
bool check_finitary_implication(const DeductiveRelation& relation, std::string* counterexample);
bool check_monotonic_implication(const DeductiveRelation& relation, std::string* counterexample);

}  // namespace dedukt::rel
