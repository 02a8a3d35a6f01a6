#include "dedukt/relations.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace dedukt::rel {

namespace {

Subset full_mask(std::size_t n) { return static_cast<Subset>((1u << n) - 1); }

Subset range_of(const std::vector<std::size_t>& list) {
  Subset mask = 0;
  for (std::size_t atom : list) mask |= (1u << atom);
  return mask;
}

std::string atom_set_text(const DeductiveRelation& r, Subset mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < r.universe.size(); ++i) {
    if (!(mask & (1u << i))) continue;
    if (!first) out += ",";
    first = false;
    out += r.universe[i];
  }
  return out + "}";
}

}  // namespace

DeductiveRelation DeductiveRelation::empty(std::vector<std::string> universe) {
  DeductiveRelation r;
  r.universe = std::move(universe);
  if (r.universe.size() > 16) throw std::invalid_argument("universe too large");
  r.table.assign(std::size_t{1} << r.universe.size(),
                 std::vector<bool>(r.universe.size(), false));
  return r;
}

HypotheticalSystem rule_system(std::vector<std::string> universe, std::vector<HypoRule> rules) {
  std::size_t n = universe.size();
  for (const auto& rule : rules) {
    if (rule.conclusion >= n) throw std::invalid_argument("rule conclusion out of range");
    for (std::size_t p : rule.premises)
      if (p >= n) throw std::invalid_argument("rule premise out of range");
  }
  HypotheticalSystem system;
  system.universe = std::move(universe);
  system.derivable = [rules](const std::vector<std::size_t>& hypotheses, std::size_t goal) {
    Subset reach = range_of(hypotheses);
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& rule : rules) {
        Subset need = range_of(rule.premises);
        Subset bit = Subset{1} << rule.conclusion;
        if ((reach & need) == need && !(reach & bit)) {
          reach |= bit;
          grew = true;
        }
      }
    }
    return (reach & (Subset{1} << goal)) != 0;
  };
  return system;
}

DeductiveRelation rel_from_system(const HypotheticalSystem& system) {
  DeductiveRelation out = DeductiveRelation::empty(system.universe);
  std::size_t n = system.universe.size();
  for (Subset mask = 0; mask <= full_mask(n); ++mask) {
    std::vector<std::size_t> atoms;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) atoms.push_back(i);
    for (std::size_t goal = 0; goal < n; ++goal) {
      bool found = false;
      // Every sequence over the hypothesis set, up to duplication: all
      // orderings of all subsets.
      Subset sub = mask;
      while (!found) {
        std::vector<std::size_t> base;
        for (std::size_t i = 0; i < n; ++i)
          if (sub & (1u << i)) base.push_back(i);
        std::sort(base.begin(), base.end());
        do {
          if (system.derivable(base, goal)) {
            found = true;
            break;
          }
        } while (std::next_permutation(base.begin(), base.end()));
        if (sub == 0) break;
        sub = (sub - 1) & mask;
      }
      out.table[mask][goal] = found;
    }
    if (mask == full_mask(n)) break;  // Subset may be too narrow to overflow safely
  }
  return out;
}

HypotheticalSystem system_from_rel(const DeductiveRelation& relation) {
  HypotheticalSystem system;
  system.universe = relation.universe;
  auto table = relation.table;
  system.derivable = [table](const std::vector<std::size_t>& hypotheses, std::size_t goal) {
    return table[range_of(hypotheses)][goal];
  };
  return system;
}

bool is_finitary(const DeductiveRelation& relation) {
  std::size_t n = relation.universe.size();
  for (Subset mask = 0; mask <= full_mask(n); ++mask) {
    for (std::size_t goal = 0; goal < n; ++goal) {
      if (!relation.holds(mask, goal)) continue;
      bool witnessed = false;
      Subset sub = mask;
      while (true) {  // every subset of a finite set is finite; mask itself qualifies
        if (relation.holds(sub, goal)) {
          witnessed = true;
          break;
        }
        if (sub == 0) break;
        sub = (sub - 1) & mask;
      }
      if (!witnessed) return false;
    }
    if (mask == full_mask(n)) break;
  }
  return true;
}

bool is_monotonic(const DeductiveRelation& relation) {
  std::size_t n = relation.universe.size();
  for (Subset mask = 0; mask <= full_mask(n); ++mask) {
    for (std::size_t goal = 0; goal < n; ++goal) {
      if (!relation.holds(mask, goal)) continue;
      // Grow the hypothesis set one atom at a time.
      for (std::size_t extra = 0; extra < n; ++extra)
        if (!relation.holds(mask | (1u << extra), goal)) return false;
    }
    if (mask == full_mask(n)) break;
  }
  return true;
}

DeductiveRelation monotone_closure(const DeductiveRelation& relation) {
  DeductiveRelation out = DeductiveRelation::empty(relation.universe);
  std::size_t n = relation.universe.size();
  for (Subset mask = 0; mask <= full_mask(n); ++mask) {
    for (std::size_t goal = 0; goal < n; ++goal) {
      bool found = false;
      Subset sub = mask;
      while (true) {
        if (relation.holds(sub, goal)) {
          found = true;
          break;
        }
        if (sub == 0) break;
        sub = (sub - 1) & mask;
      }
      out.table[mask][goal] = found;
    }
    if (mask == full_mask(n)) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Adjunction harness.

namespace {

void all_lists(std::size_t n, std::size_t max_len,
               const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> list;
  std::function<void()> step = [&]() {
    fn(list);
    if (list.size() == max_len) return;
    for (std::size_t i = 0; i < n; ++i) {
      list.push_back(i);
      step();
      list.pop_back();
    }
  };
  step();
}

std::string list_text(const HypotheticalSystem& system, const std::vector<std::size_t>& list) {
  std::string out = "[";
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += ",";
    out += system.universe[list[i]];
  }
  return out + "]";
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 step; keeps per-trial streams independent of scheduling.
  std::uint64_t z = seed + salt * 0x9e3779b97f4a7c15ULL + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<std::string> atom_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("J" + std::to_string(i));
  return names;
}

}  // namespace

bool check_iff(const HypotheticalSystem& system, std::size_t max_len,
               std::string* counterexample) {
  DeductiveRelation induced = rel_from_system(system);
  HypotheticalSystem roundtrip = system_from_rel(induced);
  std::size_t n = system.universe.size();
  bool ok = true;
  all_lists(n, max_len, [&](const std::vector<std::size_t>& list) {
    if (!ok) return;
    for (std::size_t goal = 0; goal < n; ++goal) {
      bool lhs = roundtrip.derivable(list, goal);
      bool rhs = system.derivable(list, goal);
      if (lhs != rhs) {
        ok = false;
        if (counterexample)
          *counterexample = "iff fails at " + list_text(system, list) + " |- " +
                            system.universe[goal] + ": roundtrip=" + (lhs ? "yes" : "no") +
                            " direct=" + (rhs ? "yes" : "no");
        return;
      }
    }
  });
  return ok;
}

bool check_finitary_implication(const DeductiveRelation& relation, std::string* counterexample) {
  DeductiveRelation roundtrip = rel_from_system(system_from_rel(relation));
  std::size_t n = relation.universe.size();
  for (Subset mask = 0; mask <= full_mask(n); ++mask) {
    for (std::size_t goal = 0; goal < n; ++goal) {
      if (relation.holds(mask, goal) && !roundtrip.holds(mask, goal)) {
        if (counterexample)
          *counterexample = "finitary direction fails at " + atom_set_text(relation, mask) +
                            " ~> " + relation.universe[goal];
        return false;
      }
    }
    if (mask == full_mask(n)) break;
  }
  return true;
}

bool check_monotonic_implication(const DeductiveRelation& relation, std::string* counterexample) {
  DeductiveRelation roundtrip = rel_from_system(system_from_rel(relation));
  std::size_t n = relation.universe.size();
  for (Subset mask = 0; mask <= full_mask(n); ++mask) {
    for (std::size_t goal = 0; goal < n; ++goal) {
      if (roundtrip.holds(mask, goal) && !relation.holds(mask, goal)) {
        if (counterexample)
          *counterexample = "monotonic direction fails at " + atom_set_text(relation, mask) +
                            " ~> " + relation.universe[goal];
        return false;
      }
    }
    if (mask == full_mask(n)) break;
  }
  return true;
}

AdjunctionReport adjunction_check(std::uint64_t seed, std::size_t trials) {
  AdjunctionReport report;
  report.trials = trials;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(mix(seed, trial));
    std::size_t n = 1 + static_cast<std::size_t>(rng() % 5);

    // Random rule system; statement (i) is exhaustive over it.
    std::vector<HypoRule> rules;
    std::size_t rule_count = static_cast<std::size_t>(rng() % 7);
    for (std::size_t i = 0; i < rule_count; ++i) {
      HypoRule rule;
      std::size_t premise_count = static_cast<std::size_t>(rng() % 4);
      for (std::size_t k = 0; k < premise_count; ++k)
        rule.premises.push_back(static_cast<std::size_t>(rng() % n));
      rule.conclusion = static_cast<std::size_t>(rng() % n);
      rules.push_back(std::move(rule));
    }
    HypotheticalSystem system = rule_system(atom_names(n), std::move(rules));
    std::string why;
    ++report.iff_checked;
    if (check_iff(system, 4, &why))
      ++report.iff_passed;
    else
      report.counterexamples.push_back("trial " + std::to_string(trial) + ": " + why);

    // Random relation and its monotone closure.
    DeductiveRelation relation = DeductiveRelation::empty(atom_names(n));
    for (auto& row : relation.table)
      for (std::size_t a = 0; a < n; ++a) row[a] = (rng() % 4) == 0;

    const DeductiveRelation closed = monotone_closure(relation);
    for (const DeductiveRelation* r : std::initializer_list<const DeductiveRelation*>{
             &relation, &closed}) {
      if (is_finitary(*r)) {
        ++report.finitary_checked;
        if (check_finitary_implication(*r, &why))
          ++report.finitary_passed;
        else
          report.counterexamples.push_back("trial " + std::to_string(trial) + ": " + why);
      }
      if (is_monotonic(*r)) {
        ++report.monotonic_checked;
        if (check_monotonic_implication(*r, &why))
          ++report.monotonic_passed;
        else
          report.counterexamples.push_back("trial " + std::to_string(trial) + ": " + why);
      }
    }
  }
  return report;
}

}  // namespace dedukt::rel
