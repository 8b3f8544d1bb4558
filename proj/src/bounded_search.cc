// Bounded model search by type elimination. A type fixes the truth of every
// atom, Exp and Box subformula of the query; everything else in sub(f)
// follows. A type survives while, for each agent, some surviving type can
// serve as a doxastic alternative and every false Box has a falsifying
// alternative.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "doxa/errors.h"
#include "doxa/solver.h"

namespace doxa {

namespace {

using Mask = std::uint64_t;
using Type = std::uint32_t;

constexpr std::size_t kMaxSub = 64;
constexpr std::size_t kMaxPrimes = 20;
constexpr std::size_t kMaxSubsets = 2'000'000;

class TypeSpace {
 public:
  TypeSpace(const Formula& f, int n_agents) : n_agents_(n_agents) {
    FormulaSet sub = subformulas(f);
    if (sub.size() > kMaxSub)
      throw ResourceLimit("bounded search supports at most 64 subformulas");
    sub_.assign(sub.begin(), sub.end());
    for (std::size_t k = 0; k < sub_.size(); ++k) index_[sub_[k]] = k;
    for (std::size_t k = 0; k < sub_.size(); ++k) {
      Op op = sub_[k].op();
      if (op == Op::Atom || op == Op::Exp || op == Op::Box) primes_.push_back(k);
    }
    if (primes_.size() > kMaxPrimes)
      throw ResourceLimit("bounded search supports at most 20 atom/modal subformulas");
    root_ = index_.at(f);
  }

  std::size_t prime_count() const { return primes_.size(); }
  std::size_t type_count() const { return std::size_t{1} << primes_.size(); }
  int agents() const { return n_agents_; }

  // Truth of every subformula under t. sub_ is ordered by size, so children
  // precede parents.
  Mask truth(Type t) const {
    Mask out = 0;
    std::size_t next_prime = 0;
    for (std::size_t k = 0; k < sub_.size(); ++k) {
      bool v = false;
      switch (sub_[k].op()) {
        case Op::Atom:
        case Op::Exp:
        case Op::Box:
          v = (t >> next_prime++) & 1u;
          break;
        case Op::Not:
          v = !bit(out, index_.at(sub_[k].body()));
          break;
        case Op::And:
          v = bit(out, index_.at(sub_[k].lhs())) &&
              bit(out, index_.at(sub_[k].rhs()));
          break;
      }
      if (v) out |= Mask{1} << k;
    }
    return out;
  }

  // Formulas every agent-i alternative of a world with truth `tr` must
  // satisfy, and the Box bodies some alternative must falsify.
  std::pair<Mask, Mask> demands(Mask tr, int agent) const {
    Mask req = 0, neg = 0;
    for (std::size_t k : primes_) {
      const Formula& g = sub_[k];
      if (g.op() == Op::Atom || g.agent() != agent) continue;
      Mask body = Mask{1} << index_.at(g.body());
      if (bit(tr, k))
        req |= body;
      else if (g.op() == Op::Box)
        neg |= body;
    }
    return {req, neg};
  }

  bool satisfies_root(Mask tr) const { return bit(tr, root_); }
  const std::vector<Formula>& sub() const { return sub_; }

  static bool bit(Mask m, std::size_t k) { return (m >> k) & 1u; }

 private:
  int n_agents_;
  std::vector<Formula> sub_;
  std::map<Formula, std::size_t> index_;
  std::vector<std::size_t> primes_;
  std::size_t root_ = 0;
};

// Largest subset of `types` closed under the alternative conditions.
std::vector<Type> eliminate(const TypeSpace& space, const std::vector<Type>& types,
                            const std::vector<Mask>& truth) {
  std::vector<bool> alive(types.size(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= space.agents(); ++i) {
      std::map<std::pair<Mask, Mask>, bool> cache;
      for (std::size_t k = 0; k < types.size(); ++k) {
        if (!alive[k]) continue;
        auto key = space.demands(truth[types[k]], i);
        auto it = cache.find(key);
        if (it == cache.end()) {
          const auto [req, neg] = key;
          bool some = false;
          Mask unmet = neg;
          for (std::size_t u = 0; u < types.size() && (!some || unmet); ++u) {
            if (!alive[u]) continue;
            Mask tu = truth[types[u]];
            if ((tu & req) != req) continue;
            some = true;
            unmet &= tu;
          }
          it = cache.emplace(key, some && unmet == 0).first;
        }
        if (!it->second) {
          alive[k] = false;
          changed = true;
        }
      }
    }
  }
  std::vector<Type> out;
  for (std::size_t k = 0; k < types.size(); ++k)
    if (alive[k]) out.push_back(types[k]);
  return out;
}

// Generated submodel from `root` inside a closed set of types, choosing few
// alternatives and reusing worlds already in the model where possible.
DoxasticModel build(const TypeSpace& space, const std::vector<Type>& closed,
                    Type root, const std::vector<Mask>& truth) {
  std::vector<Type> worlds{root};
  std::map<Type, std::size_t> where{{root, 0}};
  std::vector<std::vector<std::vector<std::size_t>>> edges;

  auto add = [&](Type t) {
    auto [it, inserted] = where.emplace(t, worlds.size());
    if (inserted) worlds.push_back(t);
    return it->second;
  };
  auto find = [&](Mask req, std::optional<std::size_t> falsify) -> Type {
    auto fits = [&](Type u) {
      Mask tu = truth[u];
      return (tu & req) == req && (!falsify || !TypeSpace::bit(tu, *falsify));
    };
    for (Type u : worlds)
      if (fits(u)) return u;
    for (Type u : closed)
      if (fits(u)) return u;
    throw std::logic_error("bounded search: closed type set lost a witness");
  };

  for (std::size_t w = 0; w < worlds.size(); ++w) {
    edges.emplace_back();
    for (int i = 1; i <= space.agents(); ++i) {
      auto [req, neg] = space.demands(truth[worlds[w]], i);
      std::vector<std::size_t> succ;
      if (neg == 0) {
        Type self = worlds[w];
        succ.push_back((truth[self] & req) == req ? w : add(find(req, {})));
      }
      for (std::size_t k = 0; k < space.sub().size(); ++k)
        if (TypeSpace::bit(neg, k)) succ.push_back(add(find(req, k)));
      edges[w].push_back(std::move(succ));
    }
  }

  std::vector<std::string> ids;
  for (std::size_t w = 0; w < worlds.size(); ++w)
    ids.push_back("w" + std::to_string(w));
  DoxasticModel m(space.agents(), ids);
  for (std::size_t w = 0; w < worlds.size(); ++w) {
    Mask tr = truth[worlds[w]];
    for (std::size_t k = 0; k < space.sub().size(); ++k) {
      const Formula& g = space.sub()[k];
      if (!TypeSpace::bit(tr, k)) continue;
      if (g.op() == Op::Atom) m.set_true(g.name(), w);
      if (g.op() == Op::Exp) m.add_doxastic(g.agent(), w, g.body());
    }
    for (int i = 1; i <= space.agents(); ++i)
      for (std::size_t v : edges[w][static_cast<std::size_t>(i - 1)])
        m.add_notional(i, w, v);
  }
  return m;
}

// Smallest generated model over the f-types of a closed set.
std::optional<DoxasticModel> smallest(const TypeSpace& space,
                                      const std::vector<Type>& closed,
                                      const std::vector<Mask>& truth) {
  std::optional<DoxasticModel> best;
  for (Type t : closed) {
    if (!space.satisfies_root(truth[t])) continue;
    DoxasticModel m = build(space, closed, t, truth);
    if (!best || m.world_count() < best->world_count()) best = std::move(m);
  }
  return best;
}

// Calls visit on every k-subset of [0, n) in lexicographic order until it
// returns true or `budget` subsets have been seen. Returns whether visit
// succeeded; `complete` reports whether all subsets were seen.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, std::size_t& budget,
                     bool& complete, Visit visit) {
  std::vector<std::size_t> pick(k);
  for (std::size_t j = 0; j < k; ++j) pick[j] = j;
  while (true) {
    if (budget == 0) {
      complete = false;
      return false;
    }
    --budget;
    if (visit(pick)) return true;
    std::size_t j = k;
    while (j > 0 && pick[j - 1] == n - k + (j - 1)) --j;
    if (j == 0) return false;
    ++pick[j - 1];
    for (std::size_t l = j; l < k; ++l) pick[l] = pick[l - 1] + 1;
  }
}

}  // namespace

BoundedSearchResult bounded_search(const Formula& f, std::size_t max_worlds,
                                   int n_agents) {
  if (max_worlds < 1) throw std::invalid_argument("max_worlds must be >= 1");
  const int agents = std::max({1, n_agents, f.max_agent()});
  TypeSpace space(f, agents);

  BoundedSearchResult result;
  result.prime_count = space.prime_count();
  std::vector<Mask> truth(space.type_count());
  std::vector<Type> all(space.type_count());
  for (std::size_t t = 0; t < all.size(); ++t) {
    all[t] = static_cast<Type>(t);
    truth[t] = space.truth(all[t]);
  }

  std::vector<Type> survivors = eliminate(space, all, truth);
  std::optional<DoxasticModel> found = smallest(space, survivors, truth);
  if (!found) {
    result.exhausted = true;
    return result;
  }

  if (found->world_count() > max_worlds) {
    found.reset();
    std::size_t budget = kMaxSubsets;
    bool complete = true;
    for (std::size_t k = 1; k <= max_worlds && k <= survivors.size() && !found;
         ++k) {
      for_each_subset(survivors.size(), k, budget, complete,
                      [&](const std::vector<std::size_t>& pick) {
                        std::vector<Type> c;
                        for (std::size_t j : pick) c.push_back(survivors[j]);
                        std::vector<Type> closed = eliminate(space, c, truth);
                        if (closed.size() != c.size()) return false;
                        found = smallest(space, closed, truth);
                        if (found && found->world_count() > max_worlds)
                          found.reset();
                        return found.has_value();
                      });
    }
    if (!found) {
      // Every model lives inside the survivors, so an exhausted subset
      // enumeration proves nothing fits within the bound; it does not prove
      // unsatisfiability.
      return result;
    }
  }

  const DoxasticModel& quasi = *found;
  if (!check_conditions(quasi).is_quasi_ndm() || !eval_ndm(quasi, 0, f))
    throw std::logic_error("bounded search produced a bad quasi-NDM for " +
                           print_formula(f));
  DoxasticModel ndm = quasi_to_ndm(quasi, f);
  if (!check_conditions(ndm).is_ndm() || !eval_ndm(ndm, 0, f))
    throw std::logic_error("bounded search produced a bad NDM for " +
                           print_formula(f));
  result.model = PointedModel{std::move(ndm), 0};
  return result;
}

std::optional<PointedModel> bounded_model_search(const Formula& f,
                                                 std::size_t max_worlds,
                                                 int n_agents) {
  return bounded_search(f, max_worlds, n_agents).model;
}

}  // namespace doxa
