#include "doxa/belief_base.h"

#include <algorithm>
#include <stdexcept>

#include "doxa/errors.h"
#include "doxa/parser.h"

namespace doxa {

BeliefBase::BeliefBase(int n_agents) {
  if (n_agents < 1) throw std::invalid_argument("n_agents must be >= 1");
  beliefs_.resize(static_cast<std::size_t>(n_agents));
}

void BeliefBase::add_belief(int agent, Formula alpha) {
  if (agent < 1 || agent > agents())
    throw std::out_of_range("agent " + std::to_string(agent) +
                            " out of range");
  if (!alpha.is_l0())
    throw NotL0Error("belief base member contains Box: " +
                     print_formula(alpha));
  beliefs_[static_cast<std::size_t>(agent - 1)].insert(std::move(alpha));
}

const FormulaSet& BeliefBase::beliefs(int agent) const {
  if (agent < 1 || agent > agents())
    throw std::out_of_range("agent " + std::to_string(agent) +
                            " out of range");
  return beliefs_[static_cast<std::size_t>(agent - 1)];
}

Mab::Mab(BeliefBase base, std::vector<BeliefBase> context)
    : base_(std::move(base)) {
  for (BeliefBase& b : context) {
    if (b.agents() != base_.agents())
      throw std::invalid_argument("context member has a different agent count");
    if (std::find(context_.begin(), context_.end(), b) == context_.end())
      context_.push_back(std::move(b));
  }
}

Mab Mab::rerooted(const BeliefBase& base) const {
  Mab m = *this;
  m.base_ = base;
  return m;
}

bool eval_base(const BeliefBase& b, const Formula& a) {
  switch (a.op()) {
    case Op::Atom:
      return b.valuation().contains(a.name());
    case Op::Not:
      return !eval_base(b, a.body());
    case Op::And:
      return eval_base(b, a.lhs()) && eval_base(b, a.rhs());
    case Op::Exp:
      return b.beliefs(a.agent()).contains(a.body());
    case Op::Box:
      break;
  }
  throw NotL0Error("eval_base on a formula containing Box: " +
                   print_formula(a));
}

bool is_alternative(const BeliefBase& b, const BeliefBase& b2, int agent) {
  const FormulaSet& held = b.beliefs(agent);
  return std::all_of(held.begin(), held.end(),
                     [&](const Formula& alpha) { return eval_base(b2, alpha); });
}

std::vector<BeliefBase> alternatives(const Mab& m, int agent) {
  std::vector<BeliefBase> out;
  for (const BeliefBase& c : m.context())
    if (is_alternative(m.base(), c, agent)) out.push_back(c);
  return out;
}

namespace {

bool eval_at(const BeliefBase& b, const std::vector<BeliefBase>& cxt,
             const Formula& f) {
  if (f.is_l0()) return eval_base(b, f);
  switch (f.op()) {
    case Op::Not:
      return !eval_at(b, cxt, f.body());
    case Op::And:
      return eval_at(b, cxt, f.lhs()) && eval_at(b, cxt, f.rhs());
    case Op::Box:
      if (f.agent() > b.agents())
        throw std::out_of_range("agent " + std::to_string(f.agent()) +
                                " out of range");
      for (const BeliefBase& c : cxt)
        if (is_alternative(b, c, f.agent()) && !eval_at(c, cxt, f.body()))
          return false;
      return true;
    default:
      break;
  }
  throw std::logic_error("unreachable: non-L0 atom or Exp");
}

}  // namespace

bool eval_mab(const Mab& m, const Formula& f) {
  return eval_at(m.base(), m.context(), f);
}

bool is_cmab(const Mab& m) {
  auto has_alternatives = [&](const BeliefBase& b) {
    for (int i = 1; i <= m.agents(); ++i) {
      bool found = std::any_of(
          m.context().begin(), m.context().end(),
          [&](const BeliefBase& c) { return is_alternative(b, c, i); });
      if (!found) return false;
    }
    return true;
  };
  if (!has_alternatives(m.base())) return false;
  return std::all_of(m.context().begin(), m.context().end(), has_alternatives);
}

}  // namespace doxa
