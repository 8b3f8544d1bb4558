#include "doxa/formula.h"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

#include "doxa/errors.h"

namespace doxa {

struct Formula::Node {
  Op op;
  int agent = 0;
  std::string name;
  std::vector<Formula> kids;
  std::size_t size = 1;
  int modal_depth = 0;
  int max_agent = 0;
  bool l0 = true;
};

bool is_user_atom_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

bool is_reserved_atom_name(std::string_view name) {
  if (name.size() < 2 || name[0] != '_') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

Formula Formula::atom(std::string name) {
  if (!is_user_atom_name(name) && !is_reserved_atom_name(name))
    throw std::invalid_argument("invalid atom name '" + name + "'");
  auto n = std::make_shared<Node>();
  n->op = Op::Atom;
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->op = Op::Not;
  n->size = f.node_->size + 1;
  n->modal_depth = f.node_->modal_depth;
  n->max_agent = f.node_->max_agent;
  n->l0 = f.node_->l0;
  n->kids.push_back(std::move(f));
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->op = Op::And;
  n->size = a.node_->size + b.node_->size + 1;
  n->modal_depth = std::max(a.node_->modal_depth, b.node_->modal_depth);
  n->max_agent = std::max(a.node_->max_agent, b.node_->max_agent);
  n->l0 = a.node_->l0 && b.node_->l0;
  n->kids.push_back(std::move(a));
  n->kids.push_back(std::move(b));
  return Formula(std::move(n));
}

Formula Formula::exp(int agent, Formula body) {
  if (agent < 1) throw std::invalid_argument("agent index must be >= 1");
  if (!body.node_->l0)
    throw StratificationError(
        "explicit belief applied to a formula containing Box");
  auto n = std::make_shared<Node>();
  n->op = Op::Exp;
  n->agent = agent;
  n->size = body.node_->size + 1;
  n->modal_depth = body.node_->modal_depth;
  n->max_agent = std::max(agent, body.node_->max_agent);
  n->l0 = true;
  n->kids.push_back(std::move(body));
  return Formula(std::move(n));
}

Formula Formula::box(int agent, Formula body) {
  if (agent < 1) throw std::invalid_argument("agent index must be >= 1");
  auto n = std::make_shared<Node>();
  n->op = Op::Box;
  n->agent = agent;
  n->size = body.node_->size + 1;
  n->modal_depth = body.node_->modal_depth + 1;
  n->max_agent = std::max(agent, body.node_->max_agent);
  n->l0 = false;
  n->kids.push_back(std::move(body));
  return Formula(std::move(n));
}

Formula Formula::top() {
  static const Formula t = [] {
    Formula a = atom(std::string(kTopAtom));
    return negation(conjunction(a, negation(a)));
  }();
  return t;
}

Formula Formula::bottom() {
  static const Formula f = negation(top());
  return f;
}

Formula Formula::disjunction(Formula a, Formula b) {
  return negation(conjunction(negation(std::move(a)), negation(std::move(b))));
}

Formula Formula::implication(Formula a, Formula b) {
  return negation(conjunction(std::move(a), negation(std::move(b))));
}

Formula Formula::equivalence(Formula a, Formula b) {
  return conjunction(implication(a, b), implication(b, a));
}

Formula Formula::poss(int agent, Formula body) {
  return negation(box(agent, negation(std::move(body))));
}

Op Formula::op() const { return node_->op; }
int Formula::agent() const { return node_->agent; }
const std::string& Formula::name() const { return node_->name; }

const Formula& Formula::body() const {
  assert(node_->op == Op::Not || node_->op == Op::Exp || node_->op == Op::Box);
  return node_->kids[0];
}

const Formula& Formula::lhs() const {
  assert(node_->op == Op::And);
  return node_->kids[0];
}

const Formula& Formula::rhs() const {
  assert(node_->op == Op::And);
  return node_->kids[1];
}

bool Formula::is_l0() const { return node_->l0; }
std::size_t Formula::size() const { return node_->size; }
int Formula::modal_depth() const { return node_->modal_depth; }
int Formula::max_agent() const { return node_->max_agent; }

bool Formula::is_top() const {
  if (op() != Op::Not || body().op() != Op::And) return false;
  const Formula& c = body();
  return c.lhs().op() == Op::Atom && c.lhs().name() == kTopAtom &&
         c.rhs().op() == Op::Not && c.rhs().body().op() == Op::Atom &&
         c.rhs().body().name() == kTopAtom;
}

bool Formula::is_bottom() const { return op() == Op::Not && body().is_top(); }

std::strong_ordering Formula::compare(const Node* a, const Node* b) {
  if (a == b) return std::strong_ordering::equal;
  if (auto c = a->size <=> b->size; c != 0) return c;
  if (auto c = a->op <=> b->op; c != 0) return c;
  if (auto c = a->agent <=> b->agent; c != 0) return c;
  if (auto c = a->name.compare(b->name) <=> 0; c != 0) return c;
  for (std::size_t k = 0; k < a->kids.size(); ++k) {
    if (auto c = a->kids[k] <=> b->kids[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool operator==(const Formula& a, const Formula& b) {
  return Formula::compare(a.node_.get(), b.node_.get()) == 0;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  return Formula::compare(a.node_.get(), b.node_.get());
}

namespace {

void collect_subformulas(const Formula& f, FormulaSet& out) {
  if (!out.insert(f).second) return;
  switch (f.op()) {
    case Op::Atom:
      return;
    case Op::Not:
    case Op::Exp:
    case Op::Box:
      collect_subformulas(f.body(), out);
      return;
    case Op::And:
      collect_subformulas(f.lhs(), out);
      collect_subformulas(f.rhs(), out);
      return;
  }
}

void collect_atoms(const Formula& f, AtomSet& out) {
  switch (f.op()) {
    case Op::Atom:
      out.insert(f.name());
      return;
    case Op::Not:
    case Op::Exp:
    case Op::Box:
      collect_atoms(f.body(), out);
      return;
    case Op::And:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
      return;
  }
}

}  // namespace

FormulaSet subformulas(const Formula& f) {
  FormulaSet out;
  collect_subformulas(f, out);
  return out;
}

AtomSet atoms(const Formula& f) {
  AtomSet out;
  collect_atoms(f, out);
  return out;
}

AtomSet atoms(const FormulaSet& fs) {
  AtomSet out;
  for (const Formula& f : fs) collect_atoms(f, out);
  return out;
}

bool is_l0(const Formula& f) { return f.is_l0(); }

bool is_subformula_closed(const FormulaSet& fs) {
  for (const Formula& f : fs) {
    switch (f.op()) {
      case Op::Atom:
        break;
      case Op::Not:
      case Op::Exp:
      case Op::Box:
        if (!fs.contains(f.body())) return false;
        break;
      case Op::And:
        if (!fs.contains(f.lhs()) || !fs.contains(f.rhs())) return false;
        break;
    }
  }
  return true;
}

}  // namespace doxa
