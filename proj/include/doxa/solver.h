#ifndef DOXA_SOLVER_H_
#define DOXA_SOLVER_H_

#include <cstddef>
#include <optional>
#include <string>

#include "doxa/awareness.h"
#include "doxa/belief_base.h"
#include "doxa/doxastic_model.h"
#include "doxa/formula.h"
#include "doxa/tableau.h"
#include "doxa/transform.h"

namespace doxa {

enum class Verdict { Sat, Unsat, Unknown };
const char* verdict_name(Verdict v);

struct SolverOptions {
  std::size_t node_budget = 1'000'000;
  // 0: the largest agent index mentioned in the formula.
  int n_agents = 0;
};

// Views of one LDA model, all rooted at the same point.
struct LdaViews {
  DoxasticModel quasi;
  DoxasticModel ndm;
  std::size_t world = 0;
  Mab cmab;
};

struct SolverStats {
  std::size_t nodes = 0;
  int max_modal_depth = 0;
  double millis = 0;
};

struct SolverResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<AwarenessStructure> awareness;
  std::size_t root = 0;
  std::optional<LdaViews> views;           // sat_lda only
  std::optional<TableauNode> certificate;  // on UNSAT
  SolverStats stats;
};

// Satisfiability over serial awareness structures. Throws ResourceLimit.
SolverResult tableau_sat(const LgaFormula& f, SolverOptions options = {});

// Satisfiability over CMABs, NDMs and quasi-NDMs via the awareness
// translation. On SAT every view is checked with its own evaluator and class
// validator before returning; a failed check throws std::logic_error.
SolverResult sat_lda(const Formula& f, SolverOptions options = {});

bool valid(const Formula& f, SolverOptions options = {});
// sat_lda(~f): UNSAT means f is valid, SAT carries a countermodel of f.
SolverResult check_validity(const Formula& f, SolverOptions options = {});

// Independent audit of a result for f: re-evaluates f on every attached
// view, re-runs the class validators and replays the certificate. Returns
// an empty string when everything checks out, else the first problem.
std::string audit(const Formula& f, const SolverResult& r);
std::string audit(const LgaFormula& f, const SolverResult& r);

struct BoundedSearchResult {
  std::optional<PointedModel> model;
  // True when the absence of a model is proven, not just unproven within
  // the bound.
  bool exhausted = false;
  std::size_t prime_count = 0;  // atoms, Exp and Box subformulas
};

// Searches quasi-NDMs whose worlds are truth assignments to the atoms, Exp
// and Box subformulas of f, with doxastic sets drawn from the L0
// subformulas of f, and returns one with at most max_worlds worlds
// satisfying f, converted by quasi_to_ndm. Types and subsets are visited in
// a fixed order. Complete once max_worlds >= 2^prime_count.
BoundedSearchResult bounded_search(const Formula& f, std::size_t max_worlds,
                                   int n_agents = 0);
std::optional<PointedModel> bounded_model_search(const Formula& f,
                                                 std::size_t max_worlds,
                                                 int n_agents = 0);

}  // namespace doxa

#endif  // DOXA_SOLVER_H_
