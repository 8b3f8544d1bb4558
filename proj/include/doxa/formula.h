#ifndef DOXA_FORMULA_H_
#define DOXA_FORMULA_H_

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace doxa {

// The five primitive constructors. Everything else (true, false, or,
// implication, equivalence, Poss) is sugar over these.
enum class Op : unsigned char { Atom, Not, And, Exp, Box };

// Immutable formula of the language with explicit (Exp) and implicit (Box)
// belief. Nodes are shared; copying a Formula is cheap.
//
// Every constructor path keeps the stratification invariant: the argument of
// Exp never contains Box.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  // Throws StratificationError if body contains Box.
  static Formula exp(int agent, Formula body);
  static Formula box(int agent, Formula body);

  static Formula top();
  static Formula bottom();
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula equivalence(Formula a, Formula b);
  static Formula poss(int agent, Formula body);

  Op op() const;
  int agent() const;               // Exp and Box only
  const std::string& name() const;  // Atom only
  const Formula& body() const;      // Not, Exp, Box
  const Formula& lhs() const;       // And
  const Formula& rhs() const;       // And

  // No Box anywhere.
  bool is_l0() const;
  std::size_t size() const;
  int modal_depth() const;  // nesting of Box; Exp does not count
  int max_agent() const;

  bool is_top() const;
  bool is_bottom() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  static std::strong_ordering compare(const Node* a, const Node* b);
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using FormulaSet = std::set<Formula>;
using AtomSet = std::set<std::string>;

// Atom names written by users: [a-z][A-Za-z0-9_]*.
bool is_user_atom_name(std::string_view name);
// Names beginning with '_' are reserved for atoms the library introduces
// (fresh atoms, the constant used to encode true).
bool is_reserved_atom_name(std::string_view name);

// The atom true is encoded with.
inline constexpr std::string_view kTopAtom = "_top";

FormulaSet subformulas(const Formula& f);
AtomSet atoms(const Formula& f);
AtomSet atoms(const FormulaSet& fs);
bool is_l0(const Formula& f);

// Subformula-closed check used by filtration.
bool is_subformula_closed(const FormulaSet& fs);

}  // namespace doxa

#endif  // DOXA_FORMULA_H_
