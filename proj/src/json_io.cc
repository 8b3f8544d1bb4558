#include "doxa/json_io.h"

#include "doxa/errors.h"
#include "doxa/parser.h"

namespace doxa {

namespace {

constexpr ParseOptions kLoad{.allow_reserved = true};

template <typename T>
Json names(const T& set, const std::vector<std::string>& ids) {
  Json a = Json::array();
  for (std::size_t k : set) a.push_back(ids[k]);
  return a;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ModelFormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int agent_count(const Json& j) {
  const Json& a = field(j, "agents");
  if (!a.is_number_integer() || a.get<int>() < 1)
    throw ModelFormatError("\"agents\" must be a positive integer");
  return a.get<int>();
}

int agent_key(const std::string& key, int n) {
  int i = 0;
  try {
    i = std::stoi(key);
  } catch (const std::exception&) {
    throw ModelFormatError("agent key \"" + key + "\" is not a number");
  }
  if (i < 1 || i > n)
    throw ModelFormatError("agent key \"" + key + "\" out of range");
  return i;
}

std::vector<std::string> strings(const Json& j, const char* what) {
  if (!j.is_array()) throw ModelFormatError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const Json& e : j) {
    if (!e.is_string())
      throw ModelFormatError(std::string(what) + " must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

BeliefBase base_from_json(const Json& j, int n) {
  BeliefBase b(n);
  if (j.contains("beliefs")) {
    for (const auto& [key, list] : j.at("beliefs").items()) {
      int i = agent_key(key, n);
      for (const std::string& s : strings(list, "beliefs"))
        b.add_belief(i, parse_formula(s, n, kLoad));
    }
  }
  if (j.contains("valuation"))
    for (const std::string& p : strings(j.at("valuation"), "valuation"))
      b.set_true(p);
  return b;
}

template <typename Model, typename Add>
void per_agent_map(const Json& j, const char* key, int n, const Model& m,
                   Add add) {
  if (!j.contains(key)) return;
  for (const auto& [agent, by_world] : j.at(key).items()) {
    int i = agent_key(agent, n);
    for (const auto& [id, list] : by_world.items())
      for (const std::string& s : strings(list, key)) add(i, m.index_of(id), s);
  }
}

}  // namespace

Json to_json(const BeliefBase& b) {
  Json beliefs = Json::object();
  for (int i = 1; i <= b.agents(); ++i) {
    Json list = Json::array();
    for (const Formula& f : b.beliefs(i)) list.push_back(print_formula(f));
    beliefs[std::to_string(i)] = list;
  }
  return Json{{"beliefs", beliefs}, {"valuation", b.valuation()}};
}

Json to_json(const Mab& m) {
  Json context = Json::array();
  for (const BeliefBase& b : m.context()) context.push_back(to_json(b));
  return Json{{"agents", m.agents()}, {"base", to_json(m.base())},
              {"context", context}};
}

Json to_json(const DoxasticModel& m) {
  const auto& ids = m.world_ids();
  Json dox = Json::object(), notional = Json::object(), val = Json::object();
  for (int i = 1; i <= m.agents(); ++i) {
    Json d = Json::object(), nn = Json::object();
    for (std::size_t w = 0; w < m.world_count(); ++w) {
      Json list = Json::array();
      for (const Formula& f : m.doxastic(i, w)) list.push_back(print_formula(f));
      d[ids[w]] = list;
      nn[ids[w]] = names(m.notional(i, w), ids);
    }
    dox[std::to_string(i)] = d;
    notional[std::to_string(i)] = nn;
  }
  for (const auto& [atom, worlds] : m.valuation()) val[atom] = names(worlds, ids);
  return Json{{"agents", m.agents()}, {"worlds", ids}, {"doxastic", dox},
              {"notional", notional}, {"valuation", val}};
}

Json to_json(const AwarenessStructure& m) {
  const auto& ids = m.state_ids();
  Json access = Json::object(), aware = Json::object(), val = Json::object();
  for (int i = 1; i <= m.agents(); ++i) {
    Json r = Json::object(), a = Json::object();
    for (std::size_t s = 0; s < m.state_count(); ++s) {
      r[ids[s]] = names(m.access(i, s), ids);
      Json list = Json::array();
      for (const LgaFormula& f : m.awareness(i, s)) list.push_back(print_lga(f));
      a[ids[s]] = list;
    }
    access[std::to_string(i)] = r;
    aware[std::to_string(i)] = a;
  }
  for (const auto& [atom, states] : m.valuation()) val[atom] = names(states, ids);
  return Json{{"agents", m.agents()}, {"states", ids}, {"access", access},
              {"awareness", aware}, {"valuation", val}};
}

Json to_json(const FiltrationResult& r) {
  const auto& ids = r.model.world_ids();
  // class_of is keyed by the source world's position.
  Json positions = Json::array();
  for (std::size_t c : r.class_of) positions.push_back(ids[c]);
  Json sigma = Json::array();
  for (const Formula& f : r.sigma) sigma.push_back(print_formula(f));
  return Json{{"model", to_json(r.model)}, {"class_of", positions},
              {"sigma", sigma}};
}

Json to_json(const TableauNode& n) {
  static const char* kRule[] = {"clash", "and", "or", "modal"};
  Json formulas = Json::array();
  for (const Nnf& f : n.formulas) formulas.push_back(print_nnf(f));
  Json j{{"id", n.id},
         {"formulas", formulas},
         {"rule", kRule[static_cast<int>(n.rule)]}};
  if (n.principal) j["principal"] = print_nnf(*n.principal);
  if (n.rule == TableauRule::Modal) j["agent"] = n.agent;
  Json kids = Json::array();
  for (const TableauNode& c : n.children) kids.push_back(to_json(c));
  j["children"] = kids;
  j["status"] = "closed";
  return j;
}

Json to_json(const SolverResult& r) {
  Json j{{"schema", 1}, {"verdict", verdict_name(r.verdict)}};
  if (r.awareness) {
    Json model{{"awareness", to_json(*r.awareness)},
               {"root", r.awareness->state_id(r.root)}};
    if (r.views) {
      model["quasi_ndm"] = to_json(r.views->quasi);
      model["ndm"] = to_json(r.views->ndm);
      model["world"] = r.views->ndm.world_id(r.views->world);
      model["cmab"] = to_json(r.views->cmab);
    }
    j["model"] = model;
  } else {
    j["model"] = nullptr;
  }
  j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  j["stats"] = Json{{"nodes", r.stats.nodes},
                    {"max_modal_depth", r.stats.max_modal_depth},
                    {"millis", r.stats.millis}};
  return j;
}

Mab mab_from_json(const Json& j) {
  int n = agent_count(j);
  BeliefBase base = base_from_json(field(j, "base"), n);
  std::vector<BeliefBase> context;
  const Json& cxt = field(j, "context");
  if (!cxt.is_array()) throw ModelFormatError("\"context\" must be an array");
  for (const Json& b : cxt) context.push_back(base_from_json(b, n));
  return Mab(std::move(base), std::move(context));
}

DoxasticModel ndm_from_json(const Json& j) {
  int n = agent_count(j);
  DoxasticModel m(n, strings(field(j, "worlds"), "worlds"));
  per_agent_map(j, "doxastic", n, m, [&](int i, std::size_t w, const std::string& s) {
    m.add_doxastic(i, w, parse_formula(s, n, kLoad));
  });
  per_agent_map(j, "notional", n, m, [&](int i, std::size_t w, const std::string& s) {
    m.add_notional(i, w, m.index_of(s));
  });
  if (j.contains("valuation"))
    for (const auto& [atom, worlds] : j.at("valuation").items())
      for (const std::string& w : strings(worlds, "valuation"))
        m.set_true(atom, m.index_of(w));
  return m;
}

AwarenessStructure awareness_from_json(const Json& j) {
  int n = agent_count(j);
  AwarenessStructure m(n, strings(field(j, "states"), "states"));
  per_agent_map(j, "access", n, m, [&](int i, std::size_t s, const std::string& t) {
    m.add_access(i, s, m.index_of(t));
  });
  per_agent_map(j, "awareness", n, m, [&](int i, std::size_t s, const std::string& f) {
    m.add_awareness(i, s, parse_lga(f, n, kLoad));
  });
  if (j.contains("valuation"))
    for (const auto& [atom, states] : j.at("valuation").items())
      for (const std::string& s : strings(states, "valuation"))
        m.set_true(atom, m.index_of(s));
  return m;
}

std::string model_kind(const Json& j) {
  if (j.is_object()) {
    if (j.contains("base")) return "mab";
    if (j.contains("worlds")) return "ndm";
    if (j.contains("states")) return "awareness";
  }
  throw ModelFormatError("not a MAB, NDM or awareness document");
}

}  // namespace doxa
