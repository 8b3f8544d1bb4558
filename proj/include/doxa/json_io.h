#ifndef DOXA_JSON_IO_H_
#define DOXA_JSON_IO_H_

#include <string>

#include <json.hpp>

#include "doxa/awareness.h"
#include "doxa/belief_base.h"
#include "doxa/doxastic_model.h"
#include "doxa/solver.h"
#include "doxa/tableau.h"
#include "doxa/transform.h"

namespace doxa {

using Json = nlohmann::ordered_json;

// Model documents. Formulas are strings in the concrete syntax; reserved
// atoms are accepted so that generated models load back. Loading errors
// throw ModelFormatError (or a ParseError for a bad formula).
//
//   MAB:       {"agents", "base": Base, "context": [Base]}
//              Base = {"beliefs": {"1": [..], ...}, "valuation": [atoms]}
//   NDM:       {"agents", "worlds": [ids], "doxastic": {"1": {id: [..]}},
//               "notional": {"1": {id: [ids]}}, "valuation": {atom: [ids]}}
//   awareness: {"agents", "states": [ids], "access": {"1": {id: [ids]}},
//               "awareness": {"1": {id: [..]}}, "valuation": {atom: [ids]}}
Json to_json(const BeliefBase& b);
Json to_json(const Mab& m);
Json to_json(const DoxasticModel& m);
Json to_json(const AwarenessStructure& m);
Json to_json(const FiltrationResult& r);
Json to_json(const TableauNode& n);
// {"schema": 1, "verdict", "model", "certificate", "stats"}
Json to_json(const SolverResult& r);

Mab mab_from_json(const Json& j);
DoxasticModel ndm_from_json(const Json& j);
AwarenessStructure awareness_from_json(const Json& j);

// "mab", "ndm" or "awareness", judged by the keys present.
std::string model_kind(const Json& j);

}  // namespace doxa

#endif  // DOXA_JSON_IO_H_
