#ifndef DOXA_AWARENESS_H_
#define DOXA_AWARENESS_H_

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "doxa/doxastic_model.h"
#include "doxa/formula.h"
#include "doxa/parser.h"

namespace doxa {

// B: implicit belief, A: awareness, X: explicit belief (B and A).
enum class LgaOp : unsigned char { Atom, Not, And, B, A, X };

// Formula of the logic of general awareness. No stratification: every
// operator takes an arbitrary argument.
class LgaFormula {
 public:
  static LgaFormula atom(std::string name);
  static LgaFormula negation(LgaFormula f);
  static LgaFormula conjunction(LgaFormula a, LgaFormula b);
  static LgaFormula belief(int agent, LgaFormula body);
  static LgaFormula aware(int agent, LgaFormula body);
  static LgaFormula explicit_belief(int agent, LgaFormula body);

  static LgaFormula top();
  static LgaFormula bottom();
  static LgaFormula disjunction(LgaFormula a, LgaFormula b);
  static LgaFormula implication(LgaFormula a, LgaFormula b);
  static LgaFormula equivalence(LgaFormula a, LgaFormula b);

  LgaOp op() const;
  int agent() const;
  const std::string& name() const;
  const LgaFormula& body() const;
  const LgaFormula& lhs() const;
  const LgaFormula& rhs() const;

  std::size_t size() const;
  int modal_depth() const;  // nesting of B and X
  int max_agent() const;
  bool is_top() const;
  bool is_bottom() const;

  friend bool operator==(const LgaFormula& a, const LgaFormula& b);
  friend std::strong_ordering operator<=>(const LgaFormula& a,
                                          const LgaFormula& b);

 private:
  struct Node;
  static std::strong_ordering compare(const Node* a, const Node* b);
  explicit LgaFormula(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using LgaSet = std::set<LgaFormula>;

// Same grammar as parse_formula with modal keywords B[i], A[i], X[i].
LgaFormula parse_lga(std::string_view text, int n_agents,
                     ParseOptions options = {});
std::string print_lga(const LgaFormula& f);

// Exp becomes X and Box becomes B; the propositional part is kept. Linear in
// the size of f.
LgaFormula translate(const Formula& f);

// Inverse of translate on its image; nullopt for formulas outside it (those
// containing A, or B under X).
std::optional<Formula> untranslate(const LgaFormula& f);

using StateSet = std::set<std::size_t>;

// States with one accessibility relation and one awareness function per
// agent. Seriality is checked by is_serial, not enforced on construction.
class AwarenessStructure {
 public:
  AwarenessStructure(int n_agents, std::vector<std::string> state_ids);

  int agents() const { return n_agents_; }
  std::size_t state_count() const { return ids_.size(); }
  const std::vector<std::string>& state_ids() const { return ids_; }
  const std::string& state_id(std::size_t s) const;
  // Throws UnknownState.
  std::size_t index_of(std::string_view id) const;

  void add_access(int agent, std::size_t s, std::size_t t);
  const StateSet& access(int agent, std::size_t s) const;

  void add_awareness(int agent, std::size_t s, LgaFormula f);
  const LgaSet& awareness(int agent, std::size_t s) const;

  void set_true(const std::string& atom, std::size_t s);
  const std::map<std::string, StateSet>& valuation() const {
    return valuation_;
  }

  bool is_serial() const;

 private:
  std::size_t slot(int agent, std::size_t s) const;

  int n_agents_;
  std::vector<std::string> ids_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<StateSet> access_;
  std::vector<LgaSet> awareness_;
  std::map<std::string, StateSet> valuation_;
};

std::vector<bool> extension(const AwarenessStructure& m, const LgaFormula& f);

// Throws UnknownState.
bool eval_awareness(const AwarenessStructure& m, std::size_t s,
                    const LgaFormula& f);
bool eval_awareness(const AwarenessStructure& m, std::string_view s,
                    const LgaFormula& f);

// R_i(w) = N(i,w), A_i(w) = tr(D(i,w)), same valuation. Throws
// ConditionViolation unless m satisfies C1* and C2.
AwarenessStructure quasi_ndm_to_awareness(const DoxasticModel& m);

// N(i,s) = R_i(s); D(i,s) holds the untranslations of members of A_i(s)
// whose translation is true on all of R_i(s). Awareness members outside the
// image of translate are ignored. Throws NotSerial.
DoxasticModel awareness_to_quasi_ndm(const AwarenessStructure& m);

}  // namespace doxa

#endif  // DOXA_AWARENESS_H_
