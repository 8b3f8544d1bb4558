// Test-side oracles and random model generators. The evaluators here read
// model data directly and recurse on the formula; they share no code with
// the library's evaluators.

#ifndef DOXA_TESTS_SUPPORT_H_
#define DOXA_TESTS_SUPPORT_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "doxa/awareness.h"
#include "doxa/belief_base.h"
#include "doxa/doxastic_model.h"
#include "doxa/formula.h"
#include "doxa/random.h"

namespace oracle {

using doxa::Formula;
using doxa::Op;

inline bool truth(const doxa::DoxasticModel& m, std::size_t w, const Formula& f) {
  switch (f.op()) {
    case Op::Atom: {
      auto it = m.valuation().find(f.name());
      return it != m.valuation().end() && it->second.contains(w);
    }
    case Op::Not:
      return !truth(m, w, f.body());
    case Op::And:
      return truth(m, w, f.lhs()) && truth(m, w, f.rhs());
    case Op::Exp:
      return m.doxastic(f.agent(), w).contains(f.body());
    case Op::Box:
      for (std::size_t v : m.notional(f.agent(), w))
        if (!truth(m, v, f.body())) return false;
      return true;
  }
  return false;
}

inline bool truth(const doxa::AwarenessStructure& m, std::size_t s,
                  const doxa::LgaFormula& f) {
  using doxa::LgaOp;
  auto boxed = [&] {
    for (std::size_t t : m.access(f.agent(), s))
      if (!truth(m, t, f.body())) return false;
    return true;
  };
  switch (f.op()) {
    case LgaOp::Atom: {
      auto it = m.valuation().find(f.name());
      return it != m.valuation().end() && it->second.contains(s);
    }
    case LgaOp::Not:
      return !truth(m, s, f.body());
    case LgaOp::And:
      return truth(m, s, f.lhs()) && truth(m, s, f.rhs());
    case LgaOp::B:
      return boxed();
    case LgaOp::A:
      return m.awareness(f.agent(), s).contains(f.body());
    case LgaOp::X:
      return boxed() && m.awareness(f.agent(), s).contains(f.body());
  }
  return false;
}

// L0 truth in a single base: atoms from V, Exp by membership.
inline bool base_truth(const doxa::BeliefBase& b, const Formula& f) {
  switch (f.op()) {
    case Op::Atom:
      return b.valuation().contains(f.name());
    case Op::Not:
      return !base_truth(b, f.body());
    case Op::And:
      return base_truth(b, f.lhs()) && base_truth(b, f.rhs());
    case Op::Exp:
      return b.beliefs(f.agent()).contains(f.body());
    case Op::Box:
      break;
  }
  throw std::logic_error("base_truth on a Box formula");
}

inline bool mab_truth(const doxa::BeliefBase& b,
                      const std::vector<doxa::BeliefBase>& cxt,
                      const Formula& f) {
  switch (f.op()) {
    case Op::Not:
      return !mab_truth(b, cxt, f.body());
    case Op::And:
      return mab_truth(b, cxt, f.lhs()) && mab_truth(b, cxt, f.rhs());
    case Op::Box:
      for (const doxa::BeliefBase& c : cxt) {
        bool alt = std::all_of(b.beliefs(f.agent()).begin(),
                               b.beliefs(f.agent()).end(),
                               [&](const Formula& a) { return base_truth(c, a); });
        if (alt && !mab_truth(c, cxt, f.body())) return false;
      }
      return true;
    default:
      return base_truth(b, f);
  }
}

inline bool mab_truth(const doxa::Mab& m, const Formula& f) {
  return mab_truth(m.base(), m.context(), f);
}

// C1*: N(i,w) inside every ||alpha|| for alpha in D(i,w). C2: N nonempty.
inline bool quasi_conditions(const doxa::DoxasticModel& m) {
  for (int i = 1; i <= m.agents(); ++i)
    for (std::size_t w = 0; w < m.world_count(); ++w) {
      if (m.notional(i, w).empty()) return false;
      for (const Formula& a : m.doxastic(i, w))
        for (std::size_t v : m.notional(i, w))
          if (!truth(m, v, a)) return false;
    }
  return true;
}

// C1 exactly: N(i,w) equals the set of worlds satisfying all of D(i,w).
inline bool exact_conditions(const doxa::DoxasticModel& m) {
  for (int i = 1; i <= m.agents(); ++i)
    for (std::size_t w = 0; w < m.world_count(); ++w) {
      doxa::WorldSet meet;
      for (std::size_t v = 0; v < m.world_count(); ++v) {
        bool all = true;
        for (const Formula& a : m.doxastic(i, w)) all = all && truth(m, v, a);
        if (all) meet.insert(v);
      }
      if (meet.empty() || meet != m.notional(i, w)) return false;
    }
  return true;
}

inline bool serial(const doxa::AwarenessStructure& m) {
  for (int i = 1; i <= m.agents(); ++i)
    for (std::size_t s = 0; s < m.state_count(); ++s)
      if (m.access(i, s).empty()) return false;
  return true;
}

struct RandomModelOptions {
  std::size_t max_worlds = 6;
  int agents = 2;
  int atoms = 3;
  int belief_depth = 2;
  int max_beliefs = 2;
};

inline std::vector<std::string> ids(std::size_t n, const char* prefix) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

// Random doxastic sets, then beliefs are dropped until every intersection is
// nonempty. With `exact` N is the full intersection (an NDM), otherwise a
// random nonempty subset of it (a quasi-NDM).
inline doxa::DoxasticModel random_model(std::mt19937_64& rng,
                                        RandomModelOptions o, bool exact) {
  std::uniform_int_distribution<std::size_t> nw(1, o.max_worlds);
  const std::size_t n = nw(rng);
  doxa::FormulaGenerator gen(rng(), {o.belief_depth, o.agents, o.atoms});
  std::vector<std::vector<std::vector<Formula>>> dox(
      static_cast<std::size_t>(o.agents), std::vector<std::vector<Formula>>(n));
  std::uniform_int_distribution<int> nb(0, o.max_beliefs);
  for (auto& per_agent : dox)
    for (auto& d : per_agent)
      for (int k = nb(rng); k > 0; --k) d.push_back(gen.l0());
  const auto pool = doxa::atom_pool(o.atoms);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::vector<std::string>> val(n);
  for (auto& v : val)
    for (const std::string& p : pool)
      if (coin(rng)) v.push_back(p);

  auto assemble = [&] {
    doxa::DoxasticModel m(o.agents, ids(n, "w"));
    for (std::size_t w = 0; w < n; ++w) {
      for (const std::string& p : val[w]) m.set_true(p, w);
      for (int i = 1; i <= o.agents; ++i)
        for (const Formula& a : dox[static_cast<std::size_t>(i - 1)][w])
          m.add_doxastic(i, w, a);
    }
    return m;
  };
  auto meet = [&](const doxa::DoxasticModel& m, int i, std::size_t w) {
    doxa::WorldSet out;
    for (std::size_t v = 0; v < n; ++v) {
      bool all = true;
      for (const Formula& a : m.doxastic(i, w)) all = all && truth(m, v, a);
      if (all) out.insert(v);
    }
    return out;
  };

  for (bool dropped = true; dropped;) {
    dropped = false;
    doxa::DoxasticModel m = assemble();
    for (int i = 1; i <= o.agents && !dropped; ++i)
      for (std::size_t w = 0; w < n && !dropped; ++w)
        if (meet(m, i, w).empty()) {
          dox[static_cast<std::size_t>(i - 1)][w].pop_back();
          dropped = true;
        }
  }
  doxa::DoxasticModel m = assemble();
  for (int i = 1; i <= o.agents; ++i)
    for (std::size_t w = 0; w < n; ++w) {
      doxa::WorldSet all = meet(m, i, w);
      if (exact) {
        m.set_notional(i, w, all);
        continue;
      }
      doxa::WorldSet pick;
      for (std::size_t v : all)
        if (coin(rng)) pick.insert(v);
      if (pick.empty()) pick.insert(*std::next(all.begin(), static_cast<long>(rng() % all.size())));
      m.set_notional(i, w, pick);
    }
  return m;
}

// Serial structure whose awareness sets mix translated L0 formulas with
// arbitrary awareness-logic formulas.
inline doxa::AwarenessStructure random_awareness(std::mt19937_64& rng,
                                                 RandomModelOptions o) {
  std::uniform_int_distribution<std::size_t> nw(1, o.max_worlds);
  const std::size_t n = nw(rng);
  doxa::AwarenessStructure m(o.agents, ids(n, "s"));
  doxa::FormulaGenerator gen(rng(), {o.belief_depth, o.agents, o.atoms});
  std::bernoulli_distribution coin(0.5);
  for (const std::string& p : doxa::atom_pool(o.atoms))
    for (std::size_t s = 0; s < n; ++s)
      if (coin(rng)) m.set_true(p, s);
  for (int i = 1; i <= o.agents; ++i)
    for (std::size_t s = 0; s < n; ++s) {
      m.add_access(i, s, rng() % n);
      for (std::size_t t = 0; t < n; ++t)
        if (coin(rng) && coin(rng)) m.add_access(i, s, t);
      for (int k = static_cast<int>(rng() % 3); k > 0; --k)
        m.add_awareness(i, s, doxa::translate(gen.l0()));
      if (coin(rng)) m.add_awareness(i, s, doxa::translate(gen.formula()));
      if (coin(rng) && coin(rng))
        m.add_awareness(i, s, doxa::LgaFormula::aware(1, doxa::LgaFormula::atom("p")));
    }
  return m;
}

// Random CMAB: belief bases are drawn independently and kept only when the
// result is consistent; about a third of the time the base lies outside the
// context.
inline doxa::Mab random_cmab(std::mt19937_64& rng, RandomModelOptions o) {
  doxa::FormulaGenerator gen(rng(), {o.belief_depth, o.agents, o.atoms});
  std::bernoulli_distribution coin(0.5);
  const auto pool = doxa::atom_pool(o.atoms);
  auto base = [&] {
    doxa::BeliefBase b(o.agents);
    for (const std::string& p : pool)
      if (coin(rng)) b.set_true(p);
    for (int i = 1; i <= o.agents; ++i)
      for (int k = static_cast<int>(rng() % static_cast<unsigned>(o.max_beliefs + 1)); k > 0; --k)
        b.add_belief(i, gen.l0());
    return b;
  };
  for (;;) {
    std::vector<doxa::BeliefBase> cxt;
    std::size_t n = 1 + rng() % o.max_worlds;
    for (std::size_t k = 0; k < n; ++k) cxt.push_back(base());
    doxa::BeliefBase root = rng() % 3 == 0 ? base() : cxt[rng() % n];
    doxa::Mab m(root, cxt);
    if (doxa::is_cmab(m)) return m;
  }
}

// Brute-force search over every quasi-NDM with at most max_worlds worlds,
// valuations over atoms(f) and doxastic sets drawn from the Exp bodies of f.
// Other L0 formulas in D would only shrink the admissible N.
inline bool naive_satisfiable(const Formula& f, std::size_t max_worlds,
                              int agents) {
  doxa::AtomSet atom_set = doxa::atoms(f);
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  std::vector<std::vector<Formula>> bodies(static_cast<std::size_t>(agents));
  for (const Formula& g : doxa::subformulas(f))
    if (g.op() == Op::Exp) bodies[static_cast<std::size_t>(g.agent() - 1)].push_back(g.body());

  for (std::size_t n = 1; n <= max_worlds; ++n) {
    // Choice points: valuation per world, D per (agent, world), N per
    // (agent, world).
    std::vector<std::size_t> radix;
    for (std::size_t w = 0; w < n; ++w) radix.push_back(std::size_t{1} << atoms.size());
    for (int i = 0; i < agents; ++i)
      for (std::size_t w = 0; w < n; ++w)
        radix.push_back(std::size_t{1} << bodies[static_cast<std::size_t>(i)].size());
    for (int i = 0; i < agents; ++i)
      for (std::size_t w = 0; w < n; ++w) radix.push_back((std::size_t{1} << n) - 1);

    std::vector<std::size_t> digit(radix.size(), 0);
    for (;;) {
      doxa::DoxasticModel m(agents, ids(n, "w"));
      std::size_t k = 0;
      for (std::size_t w = 0; w < n; ++w, ++k)
        for (std::size_t a = 0; a < atoms.size(); ++a)
          if ((digit[k] >> a) & 1u) m.set_true(atoms[a], w);
      for (int i = 1; i <= agents; ++i)
        for (std::size_t w = 0; w < n; ++w, ++k) {
          const auto& b = bodies[static_cast<std::size_t>(i - 1)];
          for (std::size_t a = 0; a < b.size(); ++a)
            if ((digit[k] >> a) & 1u) m.add_doxastic(i, w, b[a]);
        }
      for (int i = 1; i <= agents; ++i)
        for (std::size_t w = 0; w < n; ++w, ++k)
          for (std::size_t v = 0; v < n; ++v)
            if (((digit[k] + 1) >> v) & 1u) m.add_notional(i, w, v);
      if (quasi_conditions(m))
        for (std::size_t w = 0; w < n; ++w)
          if (truth(m, w, f)) return true;

      std::size_t d = 0;
      while (d < digit.size() && ++digit[d] == radix[d]) digit[d++] = 0;
      if (d == digit.size()) break;
    }
  }
  return false;
}

}  // namespace oracle

#endif  // DOXA_TESTS_SUPPORT_H_
