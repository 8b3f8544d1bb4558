#ifndef DOXA_TABLEAU_H_
#define DOXA_TABLEAU_H_

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "doxa/awareness.h"

namespace doxa {

// Negation normal form of an awareness-logic formula. Awareness literals
// keep their argument verbatim: A_i is syntactic, so A_i(~~p) and A_i(p) are
// different literals.
enum class NnfOp : unsigned char { Lit, Aware, And, Or, Box, Dia };

class Nnf {
 public:
  static Nnf literal(std::string atom, bool positive);
  static Nnf aware(int agent, LgaFormula f, bool positive);
  static Nnf conjunction(Nnf a, Nnf b);
  static Nnf disjunction(Nnf a, Nnf b);
  static Nnf box(int agent, Nnf body);
  static Nnf diamond(int agent, Nnf body);

  NnfOp op() const;
  bool positive() const;          // Lit, Aware
  const std::string& atom() const;  // Lit
  const LgaFormula& aware_of() const;  // Aware
  int agent() const;              // Aware, Box, Dia
  const Nnf& body() const;        // Box, Dia
  const Nnf& lhs() const;         // And, Or
  const Nnf& rhs() const;         // And, Or
  int modal_depth() const;

  // The complementary literal (Lit and Aware only).
  Nnf complement() const;

  friend bool operator==(const Nnf& a, const Nnf& b);
  friend std::strong_ordering operator<=>(const Nnf& a, const Nnf& b);

 private:
  struct Node;
  static std::strong_ordering compare(const Node* a, const Node* b);
  explicit Nnf(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Nnf to_nnf(const LgaFormula& f);
Nnf to_nnf_negated(const LgaFormula& f);
// [i]a for boxes, <i>a for diamonds, | for disjunction.
std::string print_nnf(const Nnf& f);

using Label = std::set<Nnf>;

enum class TableauRule { Clash, Conj, Disj, Modal };

// One node of a closed tableau. Every leaf is a Clash; Conj and Disj expand
// `principal`; Modal moves to the agent's successor carrying the Box bodies
// plus the body of `principal` (a diamond), or just the Box bodies when
// principal is empty (the seriality successor).
struct TableauNode {
  int id = 0;
  Label formulas;
  TableauRule rule = TableauRule::Clash;
  std::optional<Nnf> principal;
  int agent = 0;
  std::vector<TableauNode> children;
};

struct TableauOptions {
  std::size_t node_budget = 1'000'000;
  // 0: the largest agent index mentioned in the formula.
  int n_agents = 0;
};

struct TableauStats {
  std::size_t nodes = 0;
  int max_modal_depth = 0;
};

struct TableauResult {
  bool satisfiable = false;
  // On SAT: a serial structure whose state `root` satisfies the input.
  std::optional<AwarenessStructure> model;
  std::size_t root = 0;
  // On UNSAT.
  std::optional<TableauNode> certificate;
  TableauStats stats;
};

// Decides satisfiability over serial awareness structures. Throws
// ResourceLimit when the node budget runs out. Every SAT answer is checked
// against eval_awareness and every UNSAT answer is replayed before returning.
TableauResult run_tableau(const LgaFormula& f, TableauOptions options = {});

// Re-derives every rule application of a closed tableau for f. On failure
// returns false and, if why is given, a description of the bad step.
bool replay(const TableauNode& root, const LgaFormula& f,
            std::string* why = nullptr);

std::size_t count_nodes(const TableauNode& root);

}  // namespace doxa

#endif  // DOXA_TABLEAU_H_
