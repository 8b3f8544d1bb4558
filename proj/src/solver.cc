#include "doxa/solver.h"

#include <chrono>
#include <stdexcept>

#include "doxa/errors.h"

namespace doxa {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Sat:
      return "sat";
    case Verdict::Unsat:
      return "unsat";
    case Verdict::Unknown:
      break;
  }
  return "unknown";
}

namespace {

std::string audit_awareness(const LgaFormula& f, const SolverResult& r) {
  if (r.verdict == Verdict::Sat) {
    if (!r.awareness) return "SAT without a model";
    if (r.root >= r.awareness->state_count()) return "root state out of range";
    if (!r.awareness->is_serial()) return "awareness model is not serial";
    if (!eval_awareness(*r.awareness, r.root, f))
      return "awareness model falsifies the query";
  } else if (r.verdict == Verdict::Unsat) {
    if (!r.certificate) return "UNSAT without a certificate";
    std::string why;
    if (!replay(*r.certificate, f, &why)) return "certificate: " + why;
  }
  return {};
}

std::string audit_views(const Formula& f, const LdaViews& v) {
  if (!check_conditions(v.quasi).is_quasi_ndm())
    return "quasi-NDM view violates C1* or C2";
  if (!eval_ndm(v.quasi, v.world, f)) return "quasi-NDM view falsifies the query";
  if (!check_conditions(v.ndm).is_ndm()) return "NDM view violates C1 or C2";
  if (!eval_ndm(v.ndm, v.world, f)) return "NDM view falsifies the query";
  if (!is_cmab(v.cmab)) return "CMAB view is not a CMAB";
  if (!eval_mab(v.cmab, f)) return "CMAB view falsifies the query";
  return {};
}

}  // namespace

SolverResult tableau_sat(const LgaFormula& f, SolverOptions options) {
  auto start = std::chrono::steady_clock::now();
  TableauResult t = run_tableau(f, {options.node_budget, options.n_agents});
  SolverResult r;
  r.verdict = t.satisfiable ? Verdict::Sat : Verdict::Unsat;
  r.awareness = std::move(t.model);
  r.root = t.root;
  r.certificate = std::move(t.certificate);
  r.stats.nodes = t.stats.nodes;
  r.stats.max_modal_depth = t.stats.max_modal_depth;
  r.stats.millis = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return r;
}

SolverResult sat_lda(const Formula& f, SolverOptions options) {
  auto start = std::chrono::steady_clock::now();
  SolverResult r = tableau_sat(translate(f), options);
  if (r.verdict == Verdict::Sat) {
    DoxasticModel quasi = awareness_to_quasi_ndm(*r.awareness);
    DoxasticModel ndm = quasi_to_ndm(quasi, f);
    Mab cmab = ndm_to_cmab(ndm, r.root);
    r.views = LdaViews{std::move(quasi), std::move(ndm), r.root, std::move(cmab)};
    if (std::string problem = audit_views(f, *r.views); !problem.empty())
      throw std::logic_error("model self-check failed for " +
                             print_formula(f) + ": " + problem);
  }
  r.stats.millis = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return r;
}

SolverResult check_validity(const Formula& f, SolverOptions options) {
  return sat_lda(Formula::negation(f), options);
}

bool valid(const Formula& f, SolverOptions options) {
  return check_validity(f, options).verdict == Verdict::Unsat;
}

std::string audit(const LgaFormula& f, const SolverResult& r) {
  return audit_awareness(f, r);
}

std::string audit(const Formula& f, const SolverResult& r) {
  if (std::string problem = audit_awareness(translate(f), r); !problem.empty())
    return problem;
  if (r.verdict == Verdict::Sat) {
    if (!r.views) return "SAT without LDA views";
    return audit_views(f, *r.views);
  }
  return {};
}

}  // namespace doxa
