#include "dedukt/search.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "dedukt/format.hpp"

namespace dedukt::search {

namespace {

std::size_t allowed_vars(const prop::Signature& sig, const SearchBudget& budget) {
  return std::min(budget.prop_vars, sig.variables.size());
}

bool within(const prop::Proposition& p, std::size_t prop_depth) {
  return p.depth() <= prop_depth;
}

bool within(const std::vector<prop::Proposition>& ps, std::size_t prop_depth) {
  for (const auto& p : ps)
    if (!within(p, prop_depth)) return false;
  return true;
}

bool within(const std::vector<lam::Binding>& ctx, std::size_t prop_depth) {
  for (const auto& b : ctx)
    if (!within(b.type, prop_depth)) return false;
  return true;
}

// The one budget rule both enumerators share: every proposition a rule name
// mentions fits in prop_depth.
bool name_within(const prop::RuleName& name, std::size_t pd) {
  return std::visit(
      [pd](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, prop::VarRule>) {
          return true;
        } else if constexpr (std::is_same_v<T, prop::SelfRule>) {
          return within(r.context, pd) && within(r.prop, pd);
        } else if constexpr (std::is_same_v<T, prop::WeakRule>) {
          return within(r.context, pd) && within(r.prop, pd) && within(r.target.prop, pd);
        } else if constexpr (std::is_same_v<T, prop::FormRule>) {
          return within(r.context, pd) && within(r.args, pd);
        } else if constexpr (std::is_same_v<T, prop::IntroRule>) {
          return within(r.context, pd) && within(r.args, pd);
        } else {
          return within(r.context, pd) && within(r.args, pd) && within(r.motive, pd);
        }
      },
      name);
}

bool name_within(const lam::RuleName& name, std::size_t pd) {
  return std::visit(
      [pd](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, lam::VarRule>) {
          return true;
        } else if constexpr (std::is_same_v<T, lam::SelfRule>) {
          return within(r.context, pd) && within(r.type, pd);
        } else if constexpr (std::is_same_v<T, lam::WeakRule>) {
          return within(r.context, pd) && within(r.type, pd) && within(r.target.type, pd);
        } else if constexpr (std::is_same_v<T, lam::FormRule>) {
          return within(r.context, pd) && within(r.args, pd);
        } else if constexpr (std::is_same_v<T, lam::IntroRule>) {
          return within(r.context, pd) && within(r.args, pd);
        } else {
          return within(r.context, pd) && within(r.args, pd) && within(r.motive, pd);
        }
      },
      name);
}

template <typename Proof>
void sort_canonical(std::vector<Proof>& trees) {
  std::vector<std::pair<std::string, Proof>> keyed;
  keyed.reserve(trees.size());
  for (auto& t : trees) keyed.emplace_back(to_text(t), std::move(t));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  trees.clear();
  for (auto& [key, tree] : keyed) trees.push_back(std::move(tree));
}

// Appends every tree assembled from `name` and one child per premise, where
// slot i draws from options[i].
template <typename Proof, typename Name>
void cross_product(const Name& name, const std::vector<const std::vector<Proof>*>& options,
                   std::vector<Proof>& out) {
  for (const auto* opt : options)
    if (opt->empty()) return;
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    Proof tree;
    tree.rule = name;
    tree.children.reserve(options.size());
    for (std::size_t i = 0; i < options.size(); ++i)
      tree.children.push_back((*options[i])[pick[i]]);
    out.push_back(std::move(tree));
    std::size_t slot = options.size();
    while (slot > 0) {
      --slot;
      if (++pick[slot] < options[slot]->size()) break;
      pick[slot] = 0;
      if (slot == 0) return;
    }
    if (options.empty()) return;
  }
}

}  // namespace

std::vector<prop::Proposition> proposition_pool(const prop::Signature& sig,
                                                const SearchBudget& budget) {
  std::vector<prop::Proposition> pool;
  std::size_t vars = allowed_vars(sig, budget);
  for (std::size_t i = 0; i < vars; ++i)
    pool.push_back(prop::Proposition::variable(sig.variables[i]));
  std::size_t level_start = 0;
  for (std::size_t depth = 2; depth <= budget.prop_depth; ++depth) {
    std::size_t level_end = pool.size();
    for (const auto& c : sig.connectives) {
      std::vector<std::size_t> pick(c.arity, 0);
      if (c.arity == 0) {
        if (depth == 2) pool.push_back(prop::Proposition::apply(c.name, {}));
        continue;
      }
      if (level_end == 0) continue;
      // All argument tuples drawn from shallower levels, at least one from
      // the previous level so each proposition is produced exactly once.
      while (true) {
        bool uses_previous = false;
        for (std::size_t i : pick)
          if (i >= level_start) uses_previous = true;
        if (uses_previous) {
          std::vector<prop::Proposition> args;
          args.reserve(c.arity);
          for (std::size_t i : pick) args.push_back(pool[i]);
          pool.push_back(prop::Proposition::apply(c.name, std::move(args)));
        }
        std::size_t slot = c.arity;
        bool done = false;
        while (slot > 0) {
          --slot;
          if (++pick[slot] < level_end) break;
          pick[slot] = 0;
          if (slot == 0) done = true;
        }
        if (done) break;
      }
    }
    level_start = level_end;
  }
  std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
    return to_text(a) < to_text(b);
  });
  return pool;
}

// ---------------------------------------------------------------------------
// Goal-directed propositional search with memoization on (judgement, depth).

namespace {

class PropSearch {
 public:
  PropSearch(const prop::Signature& sig, const SearchBudget& budget)
      : sig_(sig), budget_(budget), pool_(proposition_pool(sig, budget)) {}

  const std::vector<prop::Proof>& proofs(const prop::Judgement& goal, std::size_t depth) {
    std::string key = to_text(goal) + "#" + std::to_string(depth);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    // Reserve the slot first: depth strictly decreases on recursion, so no
    // cycles, but iterator invalidation matters.
    std::vector<prop::Proof> result = compute(goal, depth);
    sort_canonical(result);
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

 private:
  std::vector<prop::Proof> compute(const prop::Judgement& goal, std::size_t depth) {
    std::vector<prop::Proof> out;
    if (depth == 0) return out;
    for (const auto& name : candidates(goal)) {
      if (!name_within(name, budget_.prop_depth)) continue;
      // Settle the scrutinee before paying for the branch premises; almost
      // every synthesized elimination dies here.
      if (const auto* elim = std::get_if<prop::ElimRule>(&name)) {
        if (depth == 1) continue;
        prop::Judgement scrutinee = prop::judgement(
            elim->context, prop::Proposition::apply(elim->connective, elim->args),
            Adjective::truth);
        if (proofs(scrutinee, depth - 1).empty()) continue;
      }
      Inference<prop::Judgement> step;
      try {
        step = prop::instantiate_rule(sig_, name);
      } catch (const RuleError&) {
        continue;
      }
      if (!(step.conclusion == goal)) continue;
      if (!step.premises.empty() && depth == 1) continue;
      // Left to right, giving up at the first unprovable premise; the
      // scrutinee slot of an elimination then fences off its branches.
      std::vector<const std::vector<prop::Proof>*> options;
      options.reserve(step.premises.size());
      bool dead = false;
      for (const auto& premise : step.premises) {
        const auto& trees = proofs(premise, depth - 1);
        if (trees.empty()) {
          dead = true;
          break;
        }
        options.push_back(&trees);
      }
      if (dead) continue;
      cross_product(name, options, out);
    }
    return out;
  }

  std::vector<prop::RuleName> candidates(const prop::Judgement& goal) const {
    std::vector<prop::RuleName> names;
    const auto& ctx = goal.context;
    const auto& p = goal.conclusion.prop;
    std::vector<prop::Proposition> front(ctx.begin(), ctx.empty() ? ctx.end() : ctx.end() - 1);
    if (goal.conclusion.adjective == Adjective::prop) {
      if (ctx.empty() && p.is_variable()) names.push_back(prop::VarRule{p.head()});
      if (!p.is_variable()) names.push_back(prop::FormRule{p.head(), ctx, p.args()});
      if (!ctx.empty())
        names.push_back(prop::WeakRule{front, ctx.back(), goal.conclusion});
    } else {
      if (!ctx.empty() && ctx.back() == p) names.push_back(prop::SelfRule{front, p});
      if (!ctx.empty())
        names.push_back(prop::WeakRule{front, ctx.back(), goal.conclusion});
      if (!p.is_variable()) {
        const prop::ConnectiveDecl* c = sig_.find_connective(p.head());
        if (c && c->arity == p.args().size())
          for (const auto& r : c->rules)
            names.push_back(prop::IntroRule{c->name, r.label, ctx, p.args()});
      }
      // Eliminations mention an arbitrary connective application; synthesize
      // the arguments from the bounded pool.
      for (const auto& c : sig_.connectives) {
        if (c.arity > 0 && pool_.empty()) continue;
        std::vector<std::size_t> pick(c.arity, 0);
        while (true) {
          std::vector<prop::Proposition> args;
          args.reserve(c.arity);
          for (std::size_t i : pick) args.push_back(pool_[i]);
          names.push_back(prop::ElimRule{c.name, ctx, std::move(args), p});
          if (c.arity == 0) break;
          std::size_t slot = c.arity;
          bool done = false;
          while (slot > 0) {
            --slot;
            if (++pick[slot] < pool_.size()) break;
            pick[slot] = 0;
            if (slot == 0) done = true;
          }
          if (done) break;
        }
      }
    }
    return names;
  }

  const prop::Signature& sig_;
  SearchBudget budget_;
  std::vector<prop::Proposition> pool_;
  std::unordered_map<std::string, std::vector<prop::Proof>> memo_;
};

}  // namespace

std::vector<prop::Proof> enumerate_proofs(const prop::Signature& sig, const prop::Judgement& goal,
                                          const SearchBudget& budget) {
  PropSearch engine(sig, budget);
  return engine.proofs(goal, budget.max_depth);
}

// ---------------------------------------------------------------------------
// Goal-directed lambda search. The subject term steers every rule choice
// except the eliminator's connective arguments, which are synthesized from
// the pool.

namespace {

class LambdaSearch {
 public:
  LambdaSearch(const lam::Signature& sig, const SearchBudget& budget)
      : sig_(sig), budget_(budget), pool_(proposition_pool(sig.base, budget)) {}

  const std::vector<lam::Proof>& proofs(const lam::Judgement& goal, std::size_t depth) {
    std::string key = to_text(goal) + "#" + std::to_string(depth);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<lam::Proof> result = compute(goal, depth);
    sort_canonical(result);
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

 private:
  std::vector<lam::Proof> compute(const lam::Judgement& goal, std::size_t depth) {
    std::vector<lam::Proof> out;
    if (depth == 0) return out;
    for (const auto& name : candidates(goal)) {
      if (!name_within(name, budget_.prop_depth)) continue;
      Inference<lam::Judgement> step;
      try {
        step = lam::instantiate_rule(sig_, name);
      } catch (const RuleError&) {
        continue;
      }
      if (!(step.conclusion == goal)) continue;
      if (!step.premises.empty() && depth == 1) continue;
      std::vector<const std::vector<lam::Proof>*> options;
      options.reserve(step.premises.size());
      bool dead = false;
      for (const auto& premise : step.premises) {
        const auto& trees = proofs(premise, depth - 1);
        if (trees.empty()) {
          dead = true;
          break;
        }
        options.push_back(&trees);
      }
      if (dead) continue;
      cross_product(name, options, out);
    }
    return out;
  }

  std::vector<lam::RuleName> candidates(const lam::Judgement& goal) const {
    std::vector<lam::RuleName> names;
    const auto& ctx = goal.context;
    const auto& type = goal.conclusion.type;
    std::vector<lam::Binding> front(ctx.begin(), ctx.empty() ? ctx.end() : ctx.end() - 1);
    if (!ctx.empty())
      names.push_back(lam::WeakRule{front, ctx.back().var, ctx.back().type, goal.conclusion});
    if (!goal.conclusion.subject) {
      if (ctx.empty() && type.is_variable()) names.push_back(lam::VarRule{type.head()});
      if (!type.is_variable()) names.push_back(lam::FormRule{type.head(), ctx, type.args()});
      return names;
    }
    const lam::Term& subject = *goal.conclusion.subject;
    switch (subject.kind()) {
      case lam::Term::Kind::var:
        if (!ctx.empty() && ctx.back().var == subject.head() && ctx.back().type == type)
          names.push_back(lam::SelfRule{front, subject.head(), type});
        break;
      case lam::Term::Kind::ctor:
        if (!type.is_variable() && type.head() == subject.head())
          names.push_back(lam::IntroRule{subject.head(), subject.rule(), ctx, type.args(),
                                         subject.ctor_args()});
        break;
      case lam::Term::Kind::elim: {
        const prop::ConnectiveDecl* c = sig_.base.find_connective(subject.head());
        if (!c) break;
        if (c->arity > 0 && pool_.empty()) break;
        std::vector<lam::ElimBranch> branches;
        for (std::size_t i = 0; i < subject.branch_count(); ++i)
          branches.push_back(
              lam::ElimBranch{subject.branch_binders(i), subject.branch_body(i)});
        std::vector<std::size_t> pick(c->arity, 0);
        while (true) {
          std::vector<prop::Proposition> args;
          args.reserve(c->arity);
          for (std::size_t i : pick) args.push_back(pool_[i]);
          names.push_back(lam::ElimRule{c->name, ctx, std::move(args), type,
                                        subject.scrutinee(), branches});
          if (c->arity == 0) break;
          std::size_t slot = c->arity;
          bool done = false;
          while (slot > 0) {
            --slot;
            if (++pick[slot] < pool_.size()) break;
            pick[slot] = 0;
            if (slot == 0) done = true;
          }
          if (done) break;
        }
        break;
      }
    }
    return names;
  }

  const lam::Signature& sig_;
  SearchBudget budget_;
  std::vector<prop::Proposition> pool_;
  std::unordered_map<std::string, std::vector<lam::Proof>> memo_;
};

}  // namespace

std::vector<lam::Proof> enumerate_proofs(const lam::Signature& sig, const lam::Judgement& goal,
                                         const SearchBudget& budget) {
  LambdaSearch engine(sig, budget);
  return engine.proofs(goal, budget.max_depth);
}

bool holds(const prop::Signature& sig, const prop::Judgement& goal, std::size_t depth) {
  SearchBudget budget;
  budget.max_depth = depth;
  for (const auto& p : goal.context) budget.prop_depth = std::max(budget.prop_depth, p.depth());
  budget.prop_depth = std::max(budget.prop_depth, goal.conclusion.prop.depth());
  return !enumerate_proofs(sig, goal, budget).empty();
}

bool holds(const lam::Signature& sig, const lam::Judgement& goal, std::size_t depth) {
  SearchBudget budget;
  budget.max_depth = depth;
  for (const auto& b : goal.context) budget.prop_depth = std::max(budget.prop_depth, b.type.depth());
  budget.prop_depth = std::max(budget.prop_depth, goal.conclusion.type.depth());
  return !enumerate_proofs(sig, goal, budget).empty();
}

// ---------------------------------------------------------------------------
// Propositional sweep: the goal space is finite, so run the goal-directed
// engine over all of it with a shared memo.

std::vector<PropEntry> enumerate_provable(const prop::Signature& sig, const SearchBudget& budget) {
  PropSearch engine(sig, budget);
  std::vector<prop::Proposition> pool = proposition_pool(sig, budget);
  std::vector<std::vector<prop::Proposition>> contexts{{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= budget.max_context; ++len) {
    std::size_t level_end = contexts.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (const auto& p : pool) {
        auto ctx = contexts[i];
        ctx.push_back(p);
        contexts.push_back(std::move(ctx));
      }
    level_begin = level_end;
  }
  std::vector<PropEntry> out;
  for (const auto& ctx : contexts)
    for (const auto& p : pool)
      for (Adjective adj : {Adjective::prop, Adjective::truth}) {
        prop::Judgement goal = prop::judgement(ctx, p, adj);
        const auto& trees = engine.proofs(goal, budget.max_depth);
        if (!trees.empty()) out.push_back(PropEntry{std::move(goal), trees});
      }
  std::sort(out.begin(), out.end(), [](const PropEntry& a, const PropEntry& b) {
    return to_text(a.judgement) < to_text(b.judgement);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Lambda sweep. Terms make the goal space unbounded, so reachable judgements
// are discovered by forward saturation (minimal proof heights only); the
// goal-directed engine then recovers the complete proof set of each hit.

namespace {

struct Reached {
  lam::Judgement judgement;
  std::size_t height;
};

class LambdaSweep {
 public:
  LambdaSweep(const lam::Signature& sig, const SearchBudget& budget)
      : sig_(sig), budget_(budget), pool_(proposition_pool(sig.base, budget)) {}

  std::vector<Reached> run() {
    seed_axioms();
    for (std::size_t level = 2; level <= budget_.max_depth; ++level) grow(level);
    return std::vector<Reached>(items_.begin(), items_.end());
  }

 private:
  // Alphabet for synthesized binders.
  std::vector<std::string> alphabet() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < budget_.term_vars; ++i) out.push_back(sig_.termvar(i));
    return out;
  }

  void add(lam::Judgement j, std::size_t height) {
    std::string key = to_text(j);
    if (seen_.count(key)) return;
    seen_.emplace(std::move(key), items_.size());
    items_.push_back(Reached{std::move(j), height});
  }

  void apply_name(const lam::RuleName& name, std::size_t height) {
    if (!name_within(name, budget_.prop_depth)) return;
    Inference<lam::Judgement> step;
    try {
      step = lam::instantiate_rule(sig_, name);
    } catch (const RuleError&) {
      return;
    }
    add(std::move(step.conclusion), height);
  }

  void seed_axioms() {
    std::size_t vars = allowed_vars(sig_.base, budget_);
    for (std::size_t i = 0; i < vars; ++i)
      apply_name(lam::VarRule{sig_.base.variables[i]}, 1);
    // Zero-premise instances of nullary connectives at every synthesizable
    // context.
    bool has_nullary = false;
    for (const auto& c : sig_.base.connectives)
      if (c.arity == 0) has_nullary = true;
    if (!has_nullary) return;
    for (const auto& ctx : synthesized_contexts())
      for (const auto& c : sig_.base.connectives) {
        if (c.arity != 0) continue;
        apply_name(lam::FormRule{c.name, ctx, {}}, 1);
        for (const auto& r : c.rules)
          apply_name(lam::IntroRule{c.name, r.label, ctx, {}, {}}, 1);
      }
  }

  std::vector<std::vector<lam::Binding>> synthesized_contexts() const {
    std::vector<std::vector<lam::Binding>> out{{}};
    std::vector<std::string> names = alphabet();
    std::size_t cap = std::min(budget_.term_vars, budget_.max_context);
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= cap; ++len) {
      std::size_t end = out.size();
      for (std::size_t i = begin; i < end; ++i)
        for (const auto& x : names) {
          if (lam::context_declares(out[i], x)) continue;
          for (const auto& p : pool_) {
            auto ctx = out[i];
            ctx.push_back(lam::Binding{x, p});
            out.push_back(std::move(ctx));
          }
        }
      begin = end;
    }
    return out;
  }

  void grow(std::size_t level) {
    // Indices of judgements by context text, over everything reached so far.
    std::map<std::string, std::vector<std::size_t>> by_context;
    std::size_t count = items_.size();
    for (std::size_t i = 0; i < count; ++i) {
      std::string ctx_key = context_text(items_[i].judgement.context);
      by_context[ctx_key].push_back(i);
    }
    std::vector<std::string> names = alphabet();

    for (const auto& [ctx_key, members] : by_context) {
      const auto& ctx = items_[members.front()].judgement.context;
      // Self / Weak extend the context with a fresh variable.
      if (ctx.size() < budget_.term_vars) {
        for (std::size_t i : members) {
          const Reached& decl = items_[i];
          if (decl.judgement.conclusion.subject) continue;
          for (std::size_t k : members) {
            const Reached& target = items_[k];
            std::size_t h = 1 + std::max(decl.height, target.height);
            if (h != level) continue;
            for (const auto& x : names) {
              if (lam::context_declares(ctx, x)) continue;
              apply_name(lam::WeakRule{ctx, x, decl.judgement.conclusion.type,
                                       target.judgement.conclusion},
                         level);
            }
          }
          if (decl.height + 1 == level)
            for (const auto& x : names) {
              if (lam::context_declares(ctx, x)) continue;
              apply_name(lam::SelfRule{ctx, x, decl.judgement.conclusion.type}, level);
            }
        }
      }
      // Formation and introduction combine premises sharing the context.
      for (const auto& c : sig_.base.connectives) {
        if (c.arity == 0) continue;
        combine_positions(ctx, members, c, level);
      }
      // Eliminations: scrutinee here, branches in extended contexts.
      for (std::size_t i : members) eliminate(items_[i], by_context, level);
    }
  }

  // Enumerates premise tuples for Form (all positions type declarations) and
  // for each Intro rule (truth positions take typings).
  void combine_positions(const std::vector<lam::Binding>& ctx,
                         const std::vector<std::size_t>& members,
                         const prop::ConnectiveDecl& c, std::size_t level) {
    std::vector<std::size_t> decls, typings;
    for (std::size_t i : members) {
      if (items_[i].judgement.conclusion.subject)
        typings.push_back(i);
      else
        decls.push_back(i);
    }
    // Form
    enumerate_tuples(decls, c.arity, [&](const std::vector<std::size_t>& chosen) {
      std::size_t h = 0;
      std::vector<prop::Proposition> args;
      for (std::size_t i : chosen) {
        h = std::max(h, items_[i].height);
        args.push_back(items_[i].judgement.conclusion.type);
      }
      if (h + 1 != level) return;
      apply_name(lam::FormRule{c.name, ctx, std::move(args)}, level);
    });
    // Intro, one rule at a time
    for (const auto& r : c.rules) {
      std::vector<const std::vector<std::size_t>*> slot_options;
      for (Adjective adj : r.header)
        slot_options.push_back(adj == Adjective::truth ? &typings : &decls);
      enumerate_mixed(slot_options, [&](const std::vector<std::size_t>& chosen) {
        std::size_t h = 0;
        std::vector<prop::Proposition> args;
        std::vector<lam::Term> terms;
        for (std::size_t pos = 0; pos < chosen.size(); ++pos) {
          const Reached& item = items_[chosen[pos]];
          h = std::max(h, item.height);
          args.push_back(item.judgement.conclusion.type);
          if (r.header[pos] == Adjective::truth)
            terms.push_back(*item.judgement.conclusion.subject);
        }
        if (h + 1 != level) return;
        apply_name(lam::IntroRule{c.name, r.label, ctx, std::move(args), std::move(terms)},
                   level);
      });
    }
  }

  void eliminate(const Reached& scrutinee,
                 const std::map<std::string, std::vector<std::size_t>>& by_context,
                 std::size_t level) {
    const lam::Judgement& sj = scrutinee.judgement;
    if (!sj.conclusion.subject) return;
    const prop::Proposition& sty = sj.conclusion.type;
    if (sty.is_variable()) return;
    const prop::ConnectiveDecl* c = sig_.base.find_connective(sty.head());
    if (!c || c->arity != sty.args().size()) return;
    // Branch candidates per rule: judgements whose context is exactly the
    // scrutinee's plus the rule's truth-position types, any binder names.
    std::vector<std::vector<std::size_t>> per_rule;
    for (const auto& r : c->rules) {
      std::vector<std::size_t> truths = prop::truth_positions(r.header);
      std::vector<std::size_t> found;
      for (const auto& [ctx_key, members] : by_context) {
        const auto& cand_ctx = items_[members.front()].judgement.context;
        if (cand_ctx.size() != sj.context.size() + truths.size()) continue;
        bool prefix = std::equal(sj.context.begin(), sj.context.end(), cand_ctx.begin(),
                                 [](const lam::Binding& a, const lam::Binding& b) { return a == b; });
        if (!prefix) continue;
        bool tail_ok = true;
        for (std::size_t k = 0; k < truths.size(); ++k)
          if (!(cand_ctx[sj.context.size() + k].type == sty.args()[truths[k]])) tail_ok = false;
        if (!tail_ok) continue;
        for (std::size_t i : members)
          if (items_[i].judgement.conclusion.subject) found.push_back(i);
      }
      per_rule.push_back(std::move(found));
    }
    // Combine one branch per rule with a shared motive.
    std::vector<std::size_t> pick(per_rule.size(), 0);
    for (const auto& opts : per_rule)
      if (opts.empty()) return;
    while (true) {
      std::size_t h = scrutinee.height;
      const prop::Proposition* motive = nullptr;
      bool consistent = true;
      for (std::size_t bi = 0; bi < pick.size(); ++bi) {
        const Reached& branch = items_[per_rule[bi][pick[bi]]];
        h = std::max(h, branch.height);
        if (!motive)
          motive = &branch.judgement.conclusion.type;
        else if (!(*motive == branch.judgement.conclusion.type))
          consistent = false;
      }
      if (consistent && motive && h + 1 == level) {
        std::vector<lam::ElimBranch> branches;
        for (std::size_t bi = 0; bi < pick.size(); ++bi) {
          const Reached& branch = items_[per_rule[bi][pick[bi]]];
          lam::ElimBranch eb;
          for (std::size_t k = sj.context.size(); k < branch.judgement.context.size(); ++k)
            eb.binders.push_back(branch.judgement.context[k].var);
          eb.body = *branch.judgement.conclusion.subject;
          branches.push_back(std::move(eb));
        }
        apply_name(lam::ElimRule{c->name, sj.context, sty.args(), *motive,
                                 *sj.conclusion.subject, std::move(branches)},
                   level);
      }
      if (pick.empty()) return;
      std::size_t slot = pick.size();
      bool done = false;
      while (slot > 0) {
        --slot;
        if (++pick[slot] < per_rule[slot].size()) break;
        pick[slot] = 0;
        if (slot == 0) done = true;
      }
      if (done) return;
    }
  }

  static std::string context_text(const std::vector<lam::Binding>& ctx) {
    std::string out;
    for (const auto& b : ctx) out += b.var + ":" + to_text(b.type) + ";";
    return out;
  }

  template <typename Fn>
  void enumerate_tuples(const std::vector<std::size_t>& options, std::size_t slots, Fn&& fn) {
    if (slots == 0) return;
    if (options.empty()) return;
    std::vector<std::size_t> pick(slots, 0);
    while (true) {
      std::vector<std::size_t> chosen;
      chosen.reserve(slots);
      for (std::size_t i : pick) chosen.push_back(options[i]);
      fn(chosen);
      std::size_t slot = slots;
      bool done = false;
      while (slot > 0) {
        --slot;
        if (++pick[slot] < options.size()) break;
        pick[slot] = 0;
        if (slot == 0) done = true;
      }
      if (done) return;
    }
  }

  template <typename Fn>
  void enumerate_mixed(const std::vector<const std::vector<std::size_t>*>& slot_options,
                       Fn&& fn) {
    for (const auto* opts : slot_options)
      if (opts->empty()) return;
    if (slot_options.empty()) return;
    std::vector<std::size_t> pick(slot_options.size(), 0);
    while (true) {
      std::vector<std::size_t> chosen;
      chosen.reserve(slot_options.size());
      for (std::size_t i = 0; i < slot_options.size(); ++i)
        chosen.push_back((*slot_options[i])[pick[i]]);
      fn(chosen);
      std::size_t slot = slot_options.size();
      bool done = false;
      while (slot > 0) {
        --slot;
        if (++pick[slot] < slot_options[slot]->size()) break;
        pick[slot] = 0;
        if (slot == 0) done = true;
      }
      if (done) return;
    }
  }

  const lam::Signature& sig_;
  SearchBudget budget_;
  std::vector<prop::Proposition> pool_;
  // A deque keeps references stable while new conclusions are appended.
  std::deque<Reached> items_;
  std::unordered_map<std::string, std::size_t> seen_;
};

}  // namespace

std::vector<LambdaEntry> enumerate_provable(const lam::Signature& sig,
                                            const SearchBudget& budget) {
  LambdaSweep sweep(sig, budget);
  std::vector<Reached> reached = sweep.run();
  LambdaSearch engine(sig, budget);
  std::vector<LambdaEntry> out;
  for (const auto& item : reached) {
    if (item.judgement.context.size() > budget.max_context) continue;
    bool shallow = within(item.judgement.context, budget.prop_depth) &&
                   within(item.judgement.conclusion.type, budget.prop_depth);
    if (!shallow) continue;
    const auto& trees = engine.proofs(item.judgement, budget.max_depth);
    if (!trees.empty()) out.push_back(LambdaEntry{item.judgement, trees});
  }
  std::sort(out.begin(), out.end(), [](const LambdaEntry& a, const LambdaEntry& b) {
    return to_text(a.judgement) < to_text(b.judgement);
  });
  return out;
}

std::vector<std::pair<prop::Judgement, std::size_t>> provable_counts(const prop::Signature& sig,
                                                                     const SearchBudget& budget) {
  std::vector<std::pair<prop::Judgement, std::size_t>> out;
  for (auto& entry : enumerate_provable(sig, budget))
    out.emplace_back(entry.judgement, entry.proofs.size());
  return out;
}

std::vector<std::pair<lam::Judgement, std::size_t>> provable_counts(const lam::Signature& sig,
                                                                    const SearchBudget& budget) {
  std::vector<std::pair<lam::Judgement, std::size_t>> out;
  for (auto& entry : enumerate_provable(sig, budget))
    out.emplace_back(entry.judgement, entry.proofs.size());
  return out;
}

}  // namespace dedukt::search
