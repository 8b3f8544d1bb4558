#include "doxa/transform.h"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "doxa/errors.h"

namespace doxa {

std::string fresh_atom(const std::string& stem, AtomSet& taken) {
  std::string name = stem;
  for (int k = 1; taken.contains(name) || !is_reserved_atom_name(name); ++k)
    name = stem + "_" + std::to_string(k);
  taken.insert(name);
  return name;
}

FiltrationResult filtrate(const DoxasticModel& m, const FormulaSet& sigma) {
  if (!is_subformula_closed(sigma))
    throw SigmaNotClosed("filtration set is not closed under subformulas");

  std::vector<std::vector<bool>> ext;
  ext.reserve(sigma.size());
  for (const Formula& f : sigma) ext.push_back(extension(m, f));

  std::map<std::string, std::vector<std::size_t>> classes;
  std::vector<std::string> profile(m.world_count());
  for (std::size_t w = 0; w < m.world_count(); ++w) {
    for (const std::vector<bool>& e : ext) profile[w] += e[w] ? '1' : '0';
    classes[profile[w]].push_back(w);
  }

  std::vector<std::string> ids;
  std::map<std::string, std::size_t> class_index;
  for (const auto& [p, members] : classes) {
    class_index[p] = ids.size();
    ids.push_back(p);
  }

  FiltrationResult r{DoxasticModel(m.agents(), ids), {}, sigma};
  r.class_of.resize(m.world_count());
  for (std::size_t w = 0; w < m.world_count(); ++w)
    r.class_of[w] = class_index[profile[w]];

  for (const auto& [p, members] : classes) {
    const std::size_t c = class_index[p];
    for (int i = 1; i <= m.agents(); ++i) {
      for (const Formula& alpha : m.doxastic(i, members.front())) {
        if (!sigma.contains(alpha)) continue;
        bool everywhere = std::all_of(
            members.begin(), members.end(), [&](std::size_t v) {
              return m.doxastic(i, v).contains(alpha);
            });
        if (everywhere) r.model.add_doxastic(i, c, alpha);
      }
      WorldSet image;
      for (std::size_t v : members)
        for (std::size_t u : m.notional(i, v)) image.insert(r.class_of[u]);
      r.model.set_notional(i, c, std::move(image));
    }
  }

  for (const std::string& atom : atoms(sigma)) {
    auto it = m.valuation().find(atom);
    if (it == m.valuation().end()) continue;
    for (std::size_t w : it->second) r.model.set_true(atom, r.class_of[w]);
  }
  return r;
}

namespace {

bool is_identifier(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) {
           return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '_';
         });
}

}  // namespace

DoxasticModel quasi_to_ndm(const DoxasticModel& m, const Formula& phi) {
  AtomSet kept = m.terminology();
  AtomSet phi_atoms = atoms(phi);
  kept.insert(phi_atoms.begin(), phi_atoms.end());

  AtomSet taken = kept;
  DoxasticModel out(m.agents(), m.world_ids());
  for (const auto& [atom, worlds] : m.valuation())
    if (kept.contains(atom))
      for (std::size_t w : worlds) out.set_true(atom, w);

  for (int i = 1; i <= m.agents(); ++i) {
    for (std::size_t w = 0; w < m.world_count(); ++w) {
      const std::string& id = m.world_id(w);
      std::string stem = "_f_" + std::to_string(i) + "_" +
                         (is_identifier(id) ? id : "w" + std::to_string(w));
      std::string f = fresh_atom(stem, taken);
      for (const Formula& alpha : m.doxastic(i, w)) out.add_doxastic(i, w, alpha);
      out.add_doxastic(i, w, Formula::atom(f));
      out.set_notional(i, w, m.notional(i, w));
      for (std::size_t v : m.notional(i, w)) out.set_true(f, v);
    }
  }
  return out;
}

PointedModel cmab_to_ndm(const Mab& m) {
  if (!is_cmab(m)) throw NotConsistent("the belief model is not a CMAB");

  std::vector<BeliefBase> bases = m.context();
  auto at = std::find(bases.begin(), bases.end(), m.base());
  const bool base_in_context = at != bases.end();
  std::size_t root = static_cast<std::size_t>(at - bases.begin());
  if (!base_in_context) {
    root = bases.size();
    bases.push_back(m.base());
  }

  std::vector<std::string> ids;
  for (std::size_t k = 0; k < bases.size(); ++k)
    ids.push_back("b" + std::to_string(k));
  DoxasticModel out(m.agents(), ids);

  AtomSet taken;
  for (const BeliefBase& b : bases) {
    taken.insert(b.valuation().begin(), b.valuation().end());
    for (int i = 1; i <= m.agents(); ++i) {
      AtomSet a = atoms(b.beliefs(i));
      taken.insert(a.begin(), a.end());
    }
  }
  std::optional<Formula> guard;
  if (!base_in_context) guard = Formula::atom(fresh_atom("_cxt", taken));

  for (std::size_t k = 0; k < bases.size(); ++k) {
    for (const std::string& p : bases[k].valuation()) out.set_true(p, k);
    if (guard && k != root) out.set_true(guard->name(), k);
    for (int i = 1; i <= m.agents(); ++i) {
      for (const Formula& alpha : bases[k].beliefs(i))
        out.add_doxastic(i, k, alpha);
      if (guard) out.add_doxastic(i, k, *guard);
    }
  }
  // Box-free truth depends on D and V only, so N can be read off now.
  for (std::size_t k = 0; k < bases.size(); ++k)
    for (int i = 1; i <= m.agents(); ++i)
      out.set_notional(i, k, doxastic_truth_set(out, i, k));
  return PointedModel{std::move(out), root};
}

Mab ndm_to_cmab(const DoxasticModel& m, std::size_t w) {
  m.world_id(w);
  ConditionReport report = check_conditions(m);
  if (!report.is_ndm())
    throw ConditionViolation(
        "ndm_to_cmab needs C1 and C2: " +
        (report.violations.empty() ? std::string() : report.violations.front()));

  using Key = std::pair<AtomSet, std::vector<FormulaSet>>;
  std::map<Key, std::size_t> seen;
  std::vector<BeliefBase> context;
  std::size_t root = 0;
  for (std::size_t u = 0; u < m.world_count(); ++u) {
    Key key{m.true_atoms(u), {}};
    for (int i = 1; i <= m.agents(); ++i) key.second.push_back(m.doxastic(i, u));
    auto [it, inserted] = seen.emplace(key, context.size());
    if (inserted) {
      BeliefBase b(m.agents());
      for (const std::string& p : key.first) b.set_true(p);
      for (int i = 1; i <= m.agents(); ++i)
        for (const Formula& alpha : key.second[static_cast<std::size_t>(i - 1)])
          b.add_belief(i, alpha);
      context.push_back(std::move(b));
    }
    if (u == w) root = it->second;
  }
  BeliefBase base = context[root];
  return Mab(std::move(base), std::move(context));
}

}  // namespace doxa
