#ifndef DOXA_AXIOMS_H_
#define DOXA_AXIOMS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "doxa/formula.h"
#include "doxa/solver.h"

namespace doxa {

enum class AxiomSchema { K, D, Int };
const char* schema_name(AxiomSchema s);

// Box_i(phi -> psi) -> (Box_i phi -> Box_i psi)
Formula axiom_k(int agent, const Formula& phi, const Formula& psi);
// Box_i phi -> ~Box_i ~phi
Formula axiom_d(int agent, const Formula& phi);
// Exp_i alpha -> Box_i alpha; alpha must be L0 (StratificationError).
Formula axiom_int(int agent, const Formula& alpha);

struct AxiomFailure {
  std::string schema;  // "K", "D", "Int" or "Nec"
  Formula instance;
  std::optional<SolverResult> countermodel;  // absent on resource limit
};

struct AxiomReport {
  int k_checked = 0;
  int d_checked = 0;
  int int_checked = 0;
  int nec_checked = 0;
  int audited = 0;  // solver answers that passed audit()
  std::vector<AxiomFailure> failures;
  std::vector<std::string> audit_problems;
  bool ok() const { return failures.empty() && audit_problems.empty(); }
};

struct AxiomCheckOptions {
  int agents = 2;
  int atoms = 3;
  int nec_library = 50;
  SolverOptions solver;
};

// `trials` random instances of each schema with placeholders of connective
// depth <= depth, then Nec on a library of known validities: each must be
// valid and so must Box_i of it.
AxiomReport check_axiom_schemas(int depth, int trials, std::uint64_t seed,
                                AxiomCheckOptions options = {});

// The validities used for the Nec check.
std::vector<Formula> validity_library(int count, int depth, std::uint64_t seed,
                                      int agents = 2, int atoms = 3);

}  // namespace doxa

#endif  // DOXA_AXIOMS_H_
