#ifndef DOXA_BELIEF_BASE_H_
#define DOXA_BELIEF_BASE_H_

#include <vector>

#include "doxa/formula.h"

namespace doxa {

// A multi-agent belief base: one finite set of Box-free formulas per agent,
// plus the atoms true in the actual state.
class BeliefBase {
 public:
  explicit BeliefBase(int n_agents);

  int agents() const { return static_cast<int>(beliefs_.size()); }

  // Agents are 1-based. Throws NotL0Error for formulas containing Box.
  void add_belief(int agent, Formula alpha);
  const FormulaSet& beliefs(int agent) const;

  void set_true(std::string atom) { valuation_.insert(std::move(atom)); }
  const AtomSet& valuation() const { return valuation_; }

  friend bool operator==(const BeliefBase&, const BeliefBase&) = default;

 private:
  std::vector<FormulaSet> beliefs_;
  AtomSet valuation_;
};

// A belief base together with a finite context of belief bases. The base
// need not be a member of its context.
class Mab {
 public:
  Mab(BeliefBase base, std::vector<BeliefBase> context);

  int agents() const { return base_.agents(); }
  const BeliefBase& base() const { return base_; }
  // Structurally deduplicated, first-occurrence order.
  const std::vector<BeliefBase>& context() const { return context_; }

  // Same context, different actual base.
  Mab rerooted(const BeliefBase& base) const;

 private:
  BeliefBase base_;
  std::vector<BeliefBase> context_;
};

// Throws NotL0Error if a contains Box. Exp is structural membership.
bool eval_base(const BeliefBase& b, const Formula& a);

// b2 satisfies every formula agent i holds in b.
bool is_alternative(const BeliefBase& b, const BeliefBase& b2, int agent);

std::vector<BeliefBase> alternatives(const Mab& m, int agent);

bool eval_mab(const Mab& m, const Formula& f);

// Every base of context and the actual base has, for every agent, an
// alternative inside the context.
bool is_cmab(const Mab& m);

}  // namespace doxa

#endif  // DOXA_BELIEF_BASE_H_
