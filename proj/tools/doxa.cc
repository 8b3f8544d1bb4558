// Command-line front end. Exit codes: 0 true/SAT/success, 1 false/UNSAT,
// 2 error, 3 resource limit.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "doxa/axioms.h"
#include "doxa/errors.h"
#include "doxa/json_io.h"
#include "doxa/parser.h"
#include "doxa/solver.h"
#include "doxa/transform.h"

namespace {

using doxa::Json;

// Agent indices accepted when --agents is not given.
constexpr int kAgentCeiling = 1024;

std::string slurp(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw doxa::Error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(slurp(path));
  } catch (const Json::parse_error& e) {
    throw doxa::ModelFormatError(path + ": " + e.what());
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw doxa::Error("cannot write " + path);
  out << text << '\n';
}

struct Common {
  std::string formula;
  std::string model = "-";
  std::string output = "-";
  int agents = 0;
  std::size_t budget = 1'000'000;
  std::string world;
  bool lga = false;
};

int agent_limit(const Common& c) { return c.agents > 0 ? c.agents : kAgentCeiling; }

doxa::Formula formula_of(const Common& c) {
  return doxa::parse_formula(c.formula, agent_limit(c));
}

doxa::SolverOptions solver_options(const Common& c) {
  return {c.budget, c.agents};
}

int run_parse(const Common& c) {
  if (c.lga)
    std::cout << doxa::print_lga(doxa::parse_lga(c.formula, agent_limit(c)))
              << '\n';
  else
    std::cout << doxa::print_formula(formula_of(c)) << '\n';
  return 0;
}

int run_mc(const Common& c) {
  Json j = read_json(c.model);
  std::string kind = doxa::model_kind(j);
  bool result = false;
  if (kind == "mab") {
    doxa::Mab m = doxa::mab_from_json(j);
    result = doxa::eval_mab(m, doxa::parse_formula(c.formula, m.agents()));
  } else if (kind == "ndm") {
    doxa::DoxasticModel m = doxa::ndm_from_json(j);
    std::string w = c.world;
    if (w.empty()) w = j.value("designated", m.world_id(0));
    result = doxa::eval_ndm(m, w, doxa::parse_formula(c.formula, m.agents()));
  } else {
    doxa::AwarenessStructure m = doxa::awareness_from_json(j);
    std::string s = c.world.empty() ? m.state_id(0) : c.world;
    result = doxa::eval_awareness(m, s, doxa::parse_lga(c.formula, m.agents()));
  }
  std::cout << (result ? "true" : "false") << '\n';
  return result ? 0 : 1;
}

int report(const Common& c, const doxa::SolverResult& r) {
  emit(c.output, doxa::to_json(r).dump(2));
  return r.verdict == doxa::Verdict::Sat ? 0 : 1;
}

int run_sat(const Common& c) {
  if (c.lga)
    return report(c, doxa::tableau_sat(doxa::parse_lga(c.formula, agent_limit(c)),
                                       solver_options(c)));
  return report(c, doxa::sat_lda(formula_of(c), solver_options(c)));
}

int run_valid(const Common& c) {
  doxa::SolverResult r = doxa::check_validity(formula_of(c), solver_options(c));
  Json j = doxa::to_json(r);
  j["valid"] = r.verdict == doxa::Verdict::Unsat;
  emit(c.output, j.dump(2));
  return r.verdict == doxa::Verdict::Unsat ? 0 : 1;
}

int run_translate(const Common& c) {
  std::cout << doxa::print_lga(doxa::translate(formula_of(c))) << '\n';
  return 0;
}

int run_filtrate(const Common& c) {
  doxa::DoxasticModel m = doxa::ndm_from_json(read_json(c.model));
  doxa::Formula f = doxa::parse_formula(c.formula, m.agents());
  emit(c.output, doxa::to_json(doxa::filtrate(m, doxa::subformulas(f))).dump(2));
  return 0;
}

int run_convert(const Common& c, const std::string& direction) {
  Json j = read_json(c.model);
  Json out;
  if (direction == "mab-ndm") {
    doxa::PointedModel p = doxa::cmab_to_ndm(doxa::mab_from_json(j));
    out = doxa::to_json(p.model);
    out["designated"] = p.model.world_id(p.world);
  } else if (direction == "ndm-mab") {
    doxa::DoxasticModel m = doxa::ndm_from_json(j);
    std::string w = c.world.empty() ? j.value("designated", m.world_id(0)) : c.world;
    out = doxa::to_json(doxa::ndm_to_cmab(m, m.index_of(w)));
  } else if (direction == "ndm-awareness") {
    out = doxa::to_json(doxa::quasi_ndm_to_awareness(doxa::ndm_from_json(j)));
  } else if (direction == "awareness-ndm") {
    doxa::AwarenessStructure a = doxa::awareness_from_json(j);
    // Without a formula, keep every atom the valuation mentions.
    doxa::Formula phi = doxa::Formula::top();
    if (!c.formula.empty()) {
      phi = doxa::parse_formula(c.formula, a.agents());
    } else {
      for (const auto& [atom, states] : a.valuation()) {
        doxa::Formula p = doxa::Formula::atom(atom);
        phi = doxa::Formula::conjunction(
            phi, doxa::Formula::disjunction(p, doxa::Formula::negation(p)));
      }
    }
    out = doxa::to_json(doxa::quasi_to_ndm(doxa::awareness_to_quasi_ndm(a), phi));
  } else {
    throw doxa::Error("unknown direction " + direction);
  }
  emit(c.output, out.dump(2));
  return 0;
}

int run_axioms(int depth, int trials, std::uint64_t seed, const Common& c) {
  doxa::AxiomCheckOptions options;
  options.solver = solver_options(c);
  doxa::AxiomReport r = doxa::check_axiom_schemas(depth, trials, seed, options);
  Json failures = Json::array();
  for (const doxa::AxiomFailure& f : r.failures) {
    Json e{{"schema", f.schema}, {"instance", doxa::print_formula(f.instance)}};
    e["countermodel"] = f.countermodel ? doxa::to_json(*f.countermodel) : Json(nullptr);
    failures.push_back(e);
  }
  Json j{{"K", r.k_checked},       {"D", r.d_checked},
         {"Int", r.int_checked},   {"Nec", r.nec_checked},
         {"audited", r.audited},   {"failures", failures},
         {"audit_problems", r.audit_problems}, {"ok", r.ok()}};
  emit(c.output, j.dump(2));
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit and implicit belief: parser, model checker, solver"};
  app.require_subcommand(1);
  Common c;
  std::string direction;
  int depth = 3, trials = 200;
  std::uint64_t seed = 1;

  auto formula_opt = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("-f,--formula", c.formula, "formula text");
    if (required) o->required();
  };
  auto agents_opt = [&](CLI::App* s) {
    s->add_option("--agents", c.agents,
                  "number of agents (default: largest index in the formula)")
        ->check(CLI::PositiveNumber);
  };
  auto model_opt = [&](CLI::App* s) {
    s->add_option("-m,-i,--model", c.model, "model JSON file, - for stdin");
  };
  auto out_opt = [&](CLI::App* s) {
    s->add_option("-o,--output", c.output, "output file, - for stdout");
  };
  auto budget_opt = [&](CLI::App* s) {
    s->add_option("--budget", c.budget, "tableau node budget");
  };

  auto* parse = app.add_subcommand("parse", "print the canonical form");
  formula_opt(parse, true);
  agents_opt(parse);
  parse->add_flag("--lga", c.lga, "awareness-logic syntax (B, A, X)");

  auto* mc = app.add_subcommand("mc", "evaluate a formula on a model");
  formula_opt(mc, true);
  model_opt(mc);
  mc->add_option("--world", c.world, "world or state id");

  auto* sat = app.add_subcommand("sat", "decide satisfiability");
  formula_opt(sat, true);
  agents_opt(sat);
  budget_opt(sat);
  out_opt(sat);
  sat->add_flag("--lga", c.lga, "awareness-logic input, serial structures");

  auto* val = app.add_subcommand("valid", "decide validity");
  formula_opt(val, true);
  agents_opt(val);
  budget_opt(val);
  out_opt(val);

  auto* tr = app.add_subcommand("translate", "map into awareness logic");
  formula_opt(tr, true);
  agents_opt(tr);

  auto* fil = app.add_subcommand("filtrate", "filtrate an NDM through sub(f)");
  formula_opt(fil, true);
  model_opt(fil);
  out_opt(fil);

  auto* conv = app.add_subcommand("convert", "convert between model formats");
  conv->add_option("direction", direction, "mab-ndm, ndm-mab, ndm-awareness, awareness-ndm")
      ->required()
      ->check(CLI::IsMember({"mab-ndm", "ndm-mab", "ndm-awareness", "awareness-ndm"}));
  model_opt(conv);
  out_opt(conv);
  conv->add_option("--world", c.world, "designated world for ndm-mab");
  formula_opt(conv, false);

  auto* ax = app.add_subcommand("axioms", "check K, D, Int and Nec on random instances");
  ax->add_option("--depth", depth)->check(CLI::PositiveNumber);
  ax->add_option("--trials", trials)->check(CLI::PositiveNumber);
  ax->add_option("--seed", seed);
  budget_opt(ax);
  out_opt(ax);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*parse) return run_parse(c);
    if (*mc) return run_mc(c);
    if (*sat) return run_sat(c);
    if (*val) return run_valid(c);
    if (*tr) return run_translate(c);
    if (*fil) return run_filtrate(c);
    if (*conv) return run_convert(c, direction);
    if (*ax) return run_axioms(depth, trials, seed, c);
  } catch (const doxa::ResourceLimit& e) {
    if (*sat || *val)
      emit(c.output, Json{{"schema", 1}, {"verdict", "unknown"}, {"model", nullptr},
                          {"certificate", nullptr}, {"error", e.what()}}
                         .dump(2));
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
