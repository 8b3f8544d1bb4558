#include "doxa/axioms.h"

#include <stdexcept>

#include "doxa/errors.h"
#include "doxa/random.h"

namespace doxa {

const char* schema_name(AxiomSchema s) {
  switch (s) {
    case AxiomSchema::K:
      return "K";
    case AxiomSchema::D:
      return "D";
    case AxiomSchema::Int:
      break;
  }
  return "Int";
}

Formula axiom_k(int agent, const Formula& phi, const Formula& psi) {
  return Formula::implication(
      Formula::box(agent, Formula::implication(phi, psi)),
      Formula::implication(Formula::box(agent, phi), Formula::box(agent, psi)));
}

Formula axiom_d(int agent, const Formula& phi) {
  return Formula::implication(
      Formula::box(agent, phi),
      Formula::negation(Formula::box(agent, Formula::negation(phi))));
}

Formula axiom_int(int agent, const Formula& alpha) {
  return Formula::implication(Formula::exp(agent, alpha),
                              Formula::box(agent, alpha));
}

std::vector<Formula> validity_library(int count, int depth, std::uint64_t seed,
                                      int agents, int atoms) {
  FormulaGenerator gen(seed, {depth, agents, atoms});
  std::vector<Formula> out;
  for (int k = 0; static_cast<int>(out.size()) < count; ++k) {
    Formula a = gen.formula();
    Formula b = gen.formula();
    switch (k % 6) {
      case 0:
        out.push_back(Formula::implication(a, a));
        break;
      case 1:
        out.push_back(Formula::disjunction(a, Formula::negation(a)));
        break;
      case 2:
        out.push_back(Formula::implication(Formula::conjunction(a, b), b));
        break;
      case 3:
        out.push_back(axiom_k(gen.agent(), a, b));
        break;
      case 4:
        out.push_back(axiom_d(gen.agent(), a));
        break;
      default:
        out.push_back(axiom_int(gen.agent(), gen.l0()));
        break;
    }
  }
  return out;
}

namespace {

void check(AxiomReport& report, const char* schema, const Formula& f,
           const SolverOptions& options) {
  try {
    SolverResult r = check_validity(f, options);
    if (std::string p = audit(Formula::negation(f), r); !p.empty())
      report.audit_problems.push_back(print_formula(f) + ": " + p);
    else
      ++report.audited;
    if (r.verdict != Verdict::Unsat)
      report.failures.push_back({schema, f, std::move(r)});
  } catch (const ResourceLimit&) {
    report.failures.push_back({schema, f, std::nullopt});
  }
}

}  // namespace

AxiomReport check_axiom_schemas(int depth, int trials, std::uint64_t seed,
                                AxiomCheckOptions options) {
  if (depth < 1 || trials < 1)
    throw std::invalid_argument("depth and trials must be >= 1");
  FormulaGenerator gen(seed, {depth, options.agents, options.atoms});
  AxiomReport report;
  for (int t = 0; t < trials; ++t) {
    Formula phi = gen.formula();
    Formula psi = gen.formula();
    check(report, "K", axiom_k(gen.agent(), phi, psi), options.solver);
    ++report.k_checked;
  }
  for (int t = 0; t < trials; ++t) {
    Formula phi = gen.formula();
    check(report, "D", axiom_d(gen.agent(), phi), options.solver);
    ++report.d_checked;
  }
  for (int t = 0; t < trials; ++t) {
    Formula alpha = gen.l0();
    check(report, "Int", axiom_int(gen.agent(), alpha), options.solver);
    ++report.int_checked;
  }
  for (const Formula& v : validity_library(options.nec_library, depth,
                                           seed ^ 0x9e3779b97f4a7c15ULL,
                                           options.agents, options.atoms)) {
    check(report, "Nec", v, options.solver);
    check(report, "Nec", Formula::box(gen.agent(), v), options.solver);
    ++report.nec_checked;
  }
  return report;
}

}  // namespace doxa
