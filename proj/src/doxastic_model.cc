#include "doxa/doxastic_model.h"

#include <stdexcept>

#include "doxa/errors.h"
#include "doxa/parser.h"

namespace doxa {

DoxasticModel::DoxasticModel(int n_agents, std::vector<std::string> world_ids)
    : n_agents_(n_agents), ids_(std::move(world_ids)) {
  if (n_agents < 1) throw std::invalid_argument("n_agents must be >= 1");
  if (ids_.empty()) throw std::invalid_argument("a model needs a world");
  for (std::size_t w = 0; w < ids_.size(); ++w)
    if (!index_.emplace(ids_[w], w).second)
      throw std::invalid_argument("duplicate world id '" + ids_[w] + "'");
  doxastic_.resize(ids_.size() * static_cast<std::size_t>(n_agents));
  notional_.resize(ids_.size() * static_cast<std::size_t>(n_agents));
}

const std::string& DoxasticModel::world_id(std::size_t w) const {
  if (w >= ids_.size())
    throw UnknownWorld("no world with index " + std::to_string(w));
  return ids_[w];
}

std::size_t DoxasticModel::index_of(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw UnknownWorld("no world '" + std::string(id) + "'");
  return it->second;
}

std::size_t DoxasticModel::slot(int agent, std::size_t w) const {
  if (agent < 1 || agent > n_agents_)
    throw std::out_of_range("agent " + std::to_string(agent) +
                            " out of range");
  if (w >= ids_.size())
    throw UnknownWorld("no world with index " + std::to_string(w));
  return static_cast<std::size_t>(agent - 1) * ids_.size() + w;
}

void DoxasticModel::add_doxastic(int agent, std::size_t w, Formula alpha) {
  if (!alpha.is_l0())
    throw NotL0Error("doxastic set member contains Box: " +
                     print_formula(alpha));
  doxastic_[slot(agent, w)].insert(std::move(alpha));
}

const FormulaSet& DoxasticModel::doxastic(int agent, std::size_t w) const {
  return doxastic_[slot(agent, w)];
}

void DoxasticModel::set_notional(int agent, std::size_t w, WorldSet worlds) {
  for (std::size_t v : worlds) world_id(v);
  notional_[slot(agent, w)] = std::move(worlds);
}

void DoxasticModel::add_notional(int agent, std::size_t w, std::size_t v) {
  world_id(v);
  notional_[slot(agent, w)].insert(v);
}

const WorldSet& DoxasticModel::notional(int agent, std::size_t w) const {
  return notional_[slot(agent, w)];
}

void DoxasticModel::set_true(const std::string& atom, std::size_t w) {
  world_id(w);
  valuation_[atom].insert(w);
}

bool DoxasticModel::holds(const std::string& atom, std::size_t w) const {
  auto it = valuation_.find(atom);
  return it != valuation_.end() && it->second.contains(w);
}

AtomSet DoxasticModel::true_atoms(std::size_t w) const {
  AtomSet out;
  for (const auto& [atom, worlds] : valuation_)
    if (worlds.contains(w)) out.insert(atom);
  return out;
}

AtomSet DoxasticModel::terminology() const {
  AtomSet out;
  for (const FormulaSet& d : doxastic_) {
    AtomSet a = atoms(d);
    out.insert(a.begin(), a.end());
  }
  return out;
}

std::vector<bool> extension(const DoxasticModel& m, const Formula& f) {
  const std::size_t n = m.world_count();
  std::vector<bool> out(n, false);
  switch (f.op()) {
    case Op::Atom: {
      auto it = m.valuation().find(f.name());
      if (it != m.valuation().end())
        for (std::size_t w : it->second) out[w] = true;
      return out;
    }
    case Op::Not: {
      out = extension(m, f.body());
      out.flip();
      return out;
    }
    case Op::And: {
      std::vector<bool> a = extension(m, f.lhs());
      std::vector<bool> b = extension(m, f.rhs());
      for (std::size_t w = 0; w < n; ++w) out[w] = a[w] && b[w];
      return out;
    }
    case Op::Exp:
      for (std::size_t w = 0; w < n; ++w)
        out[w] = m.doxastic(f.agent(), w).contains(f.body());
      return out;
    case Op::Box: {
      std::vector<bool> body = extension(m, f.body());
      for (std::size_t w = 0; w < n; ++w) {
        bool all = true;
        for (std::size_t v : m.notional(f.agent(), w)) all = all && body[v];
        out[w] = all;
      }
      return out;
    }
  }
  return out;
}

bool eval_ndm(const DoxasticModel& m, std::size_t w, const Formula& f) {
  m.world_id(w);
  return extension(m, f)[w];
}

bool eval_ndm(const DoxasticModel& m, std::string_view w, const Formula& f) {
  return eval_ndm(m, m.index_of(w), f);
}

WorldSet doxastic_truth_set(const DoxasticModel& m, int agent, std::size_t w) {
  std::vector<bool> in(m.world_count(), true);
  for (const Formula& alpha : m.doxastic(agent, w)) {
    std::vector<bool> ext = extension(m, alpha);
    for (std::size_t v = 0; v < in.size(); ++v) in[v] = in[v] && ext[v];
  }
  WorldSet out;
  for (std::size_t v = 0; v < in.size(); ++v)
    if (in[v]) out.insert(v);
  return out;
}

ConditionReport check_conditions(const DoxasticModel& m) {
  ConditionReport r;
  for (int i = 1; i <= m.agents(); ++i) {
    for (std::size_t w = 0; w < m.world_count(); ++w) {
      const std::string where =
          "(" + std::to_string(i) + ", " + m.world_id(w) + ")";
      const WorldSet& n = m.notional(i, w);
      if (n.empty()) {
        r.c2 = false;
        r.violations.push_back("C2: N" + where + " is empty");
      }
      // C1*: each notional world satisfies every doxastic member.
      for (const Formula& alpha : m.doxastic(i, w)) {
        std::vector<bool> ext = extension(m, alpha);
        for (std::size_t v : n) {
          if (!ext[v]) {
            r.c1_star = false;
            r.violations.push_back("C1*: notional world " + m.world_id(v) +
                                   " of " + where + " falsifies " +
                                   print_formula(alpha));
          }
        }
      }
      // C1: and nothing else satisfies all of them.
      WorldSet truth = doxastic_truth_set(m, i, w);
      for (std::size_t v : truth) {
        if (!n.contains(v)) {
          r.c1_exact = false;
          r.violations.push_back("C1: world " + m.world_id(v) +
                                 " satisfies D" + where +
                                 " but is not in N" + where);
        }
      }
    }
  }
  if (!r.c1_star) r.c1_exact = false;
  return r;
}

}  // namespace doxa
