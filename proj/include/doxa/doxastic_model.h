#ifndef DOXA_DOXASTIC_MODEL_H_
#define DOXA_DOXASTIC_MODEL_H_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "doxa/formula.h"

namespace doxa {

using WorldSet = std::set<std::size_t>;

// Kripke-style model with a doxastic set D(i,w) of Box-free formulas and a
// notional set N(i,w) of worlds per agent and world. Whether it is a
// notional doxastic model (C1: N equals the truth set of D) or only a quasi
// one (C1*: N is included in it) is decided by check_conditions; the same
// type carries both.
//
// Worlds are addressed by index; ids are opaque strings kept for I/O.
class DoxasticModel {
 public:
  DoxasticModel(int n_agents, std::vector<std::string> world_ids);

  int agents() const { return n_agents_; }
  std::size_t world_count() const { return ids_.size(); }
  const std::vector<std::string>& world_ids() const { return ids_; }
  const std::string& world_id(std::size_t w) const;
  // Throws UnknownWorld.
  std::size_t index_of(std::string_view id) const;

  void add_doxastic(int agent, std::size_t w, Formula alpha);
  const FormulaSet& doxastic(int agent, std::size_t w) const;

  void set_notional(int agent, std::size_t w, WorldSet worlds);
  void add_notional(int agent, std::size_t w, std::size_t v);
  const WorldSet& notional(int agent, std::size_t w) const;

  void set_true(const std::string& atom, std::size_t w);
  bool holds(const std::string& atom, std::size_t w) const;
  // Atoms with nonempty extension.
  const std::map<std::string, WorldSet>& valuation() const {
    return valuation_;
  }
  // The atoms true at w.
  AtomSet true_atoms(std::size_t w) const;

  // Atoms occurring in some doxastic set.
  AtomSet terminology() const;

 private:
  std::size_t slot(int agent, std::size_t w) const;

  int n_agents_;
  std::vector<std::string> ids_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<FormulaSet> doxastic_;
  std::vector<WorldSet> notional_;
  std::map<std::string, WorldSet> valuation_;
};

// Truth set of f, indexed by world.
std::vector<bool> extension(const DoxasticModel& m, const Formula& f);

// Throws UnknownWorld.
bool eval_ndm(const DoxasticModel& m, std::size_t w, const Formula& f);
bool eval_ndm(const DoxasticModel& m, std::string_view w, const Formula& f);

// The worlds where every member of D(i,w) holds; all worlds if D(i,w) is
// empty.
WorldSet doxastic_truth_set(const DoxasticModel& m, int agent, std::size_t w);

struct ConditionReport {
  bool c1_star = true;
  bool c1_exact = true;
  bool c2 = true;
  std::vector<std::string> violations;

  bool is_quasi_ndm() const { return c1_star && c2; }
  bool is_ndm() const { return c1_exact && c2; }
};

ConditionReport check_conditions(const DoxasticModel& m);

}  // namespace doxa

#endif  // DOXA_DOXASTIC_MODEL_H_
