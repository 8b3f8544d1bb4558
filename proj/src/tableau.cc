#include "doxa/tableau.h"

#include <algorithm>
#include <stdexcept>
#include <variant>

#include "doxa/errors.h"

namespace doxa {

struct Nnf::Node {
  NnfOp op;
  bool positive = true;
  int agent = 0;
  std::string atom;
  std::optional<LgaFormula> aware;
  std::vector<Nnf> kids;
  int modal_depth = 0;
};

namespace {

template <typename N>
int kids_depth(const N& n) {
  int d = 0;
  for (const auto& k : n.kids) d = std::max(d, k.modal_depth());
  return d;
}

}  // namespace

Nnf Nnf::literal(std::string atom, bool positive) {
  auto n = std::make_shared<Node>();
  n->op = NnfOp::Lit;
  n->atom = std::move(atom);
  n->positive = positive;
  return Nnf(std::move(n));
}

Nnf Nnf::aware(int agent, LgaFormula f, bool positive) {
  auto n = std::make_shared<Node>();
  n->op = NnfOp::Aware;
  n->agent = agent;
  n->aware = std::move(f);
  n->positive = positive;
  return Nnf(std::move(n));
}

Nnf Nnf::conjunction(Nnf a, Nnf b) {
  auto n = std::make_shared<Node>();
  n->op = NnfOp::And;
  n->kids = {std::move(a), std::move(b)};
  n->modal_depth = kids_depth(*n);
  return Nnf(std::move(n));
}

Nnf Nnf::disjunction(Nnf a, Nnf b) {
  auto n = std::make_shared<Node>();
  n->op = NnfOp::Or;
  n->kids = {std::move(a), std::move(b)};
  n->modal_depth = kids_depth(*n);
  return Nnf(std::move(n));
}

Nnf Nnf::box(int agent, Nnf body) {
  auto n = std::make_shared<Node>();
  n->op = NnfOp::Box;
  n->agent = agent;
  n->kids = {std::move(body)};
  n->modal_depth = kids_depth(*n) + 1;
  return Nnf(std::move(n));
}

Nnf Nnf::diamond(int agent, Nnf body) {
  auto n = std::make_shared<Node>();
  n->op = NnfOp::Dia;
  n->agent = agent;
  n->kids = {std::move(body)};
  n->modal_depth = kids_depth(*n) + 1;
  return Nnf(std::move(n));
}

NnfOp Nnf::op() const { return node_->op; }
bool Nnf::positive() const { return node_->positive; }
const std::string& Nnf::atom() const { return node_->atom; }
const LgaFormula& Nnf::aware_of() const { return *node_->aware; }
int Nnf::agent() const { return node_->agent; }
const Nnf& Nnf::body() const { return node_->kids[0]; }
const Nnf& Nnf::lhs() const { return node_->kids[0]; }
const Nnf& Nnf::rhs() const { return node_->kids[1]; }
int Nnf::modal_depth() const { return node_->modal_depth; }

Nnf Nnf::complement() const {
  if (op() == NnfOp::Lit) return literal(atom(), !positive());
  if (op() == NnfOp::Aware) return aware(agent(), aware_of(), !positive());
  throw std::logic_error("complement of a non-literal");
}

std::strong_ordering Nnf::compare(const Node* a, const Node* b) {
  if (a == b) return std::strong_ordering::equal;
  if (auto c = a->op <=> b->op; c != 0) return c;
  if (auto c = a->positive <=> b->positive; c != 0) return c;
  if (auto c = a->agent <=> b->agent; c != 0) return c;
  if (auto c = a->atom.compare(b->atom) <=> 0; c != 0) return c;
  if (a->aware) {
    if (auto c = *a->aware <=> *b->aware; c != 0) return c;
  }
  if (auto c = a->kids.size() <=> b->kids.size(); c != 0) return c;
  for (std::size_t k = 0; k < a->kids.size(); ++k)
    if (auto c = a->kids[k] <=> b->kids[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

bool operator==(const Nnf& a, const Nnf& b) {
  return Nnf::compare(a.node_.get(), b.node_.get()) == 0;
}

std::strong_ordering operator<=>(const Nnf& a, const Nnf& b) {
  return Nnf::compare(a.node_.get(), b.node_.get());
}

Nnf to_nnf(const LgaFormula& f) {
  switch (f.op()) {
    case LgaOp::Atom:
      return Nnf::literal(f.name(), true);
    case LgaOp::Not:
      return to_nnf_negated(f.body());
    case LgaOp::And:
      return Nnf::conjunction(to_nnf(f.lhs()), to_nnf(f.rhs()));
    case LgaOp::B:
      return Nnf::box(f.agent(), to_nnf(f.body()));
    case LgaOp::A:
      return Nnf::aware(f.agent(), f.body(), true);
    case LgaOp::X:
      return Nnf::conjunction(Nnf::box(f.agent(), to_nnf(f.body())),
                              Nnf::aware(f.agent(), f.body(), true));
  }
  throw std::logic_error("unreachable");
}

Nnf to_nnf_negated(const LgaFormula& f) {
  switch (f.op()) {
    case LgaOp::Atom:
      return Nnf::literal(f.name(), false);
    case LgaOp::Not:
      return to_nnf(f.body());
    case LgaOp::And:
      return Nnf::disjunction(to_nnf_negated(f.lhs()),
                              to_nnf_negated(f.rhs()));
    case LgaOp::B:
      return Nnf::diamond(f.agent(), to_nnf_negated(f.body()));
    case LgaOp::A:
      return Nnf::aware(f.agent(), f.body(), false);
    case LgaOp::X:
      return Nnf::disjunction(
          Nnf::diamond(f.agent(), to_nnf_negated(f.body())),
          Nnf::aware(f.agent(), f.body(), false));
  }
  throw std::logic_error("unreachable");
}

std::string print_nnf(const Nnf& f) {
  switch (f.op()) {
    case NnfOp::Lit:
      return (f.positive() ? "" : "~") + f.atom();
    case NnfOp::Aware:
      return (f.positive() ? "A[" : "~A[") + std::to_string(f.agent()) +
             "] " + print_lga(f.aware_of());
    case NnfOp::And:
      return "(" + print_nnf(f.lhs()) + " & " + print_nnf(f.rhs()) + ")";
    case NnfOp::Or:
      return "(" + print_nnf(f.lhs()) + " | " + print_nnf(f.rhs()) + ")";
    case NnfOp::Box:
      return "[" + std::to_string(f.agent()) + "]" + print_nnf(f.body());
    case NnfOp::Dia:
      return "<" + std::to_string(f.agent()) + ">" + print_nnf(f.body());
  }
  return {};
}

namespace {

bool is_literal(const Nnf& f) {
  return f.op() == NnfOp::Lit || f.op() == NnfOp::Aware;
}

std::optional<Nnf> find_clash(const Label& label) {
  for (const Nnf& f : label)
    if (is_literal(f) && f.positive() && label.contains(f.complement()))
      return f;
  return std::nullopt;
}

Label successor_label(const Label& label, int agent,
                      const std::optional<Nnf>& diamond) {
  Label out;
  for (const Nnf& f : label)
    if (f.op() == NnfOp::Box && f.agent() == agent) out.insert(f.body());
  if (diamond) out.insert(diamond->body());
  return out;
}

// A saturated open node and the open successors it needs, per agent.
struct OpenNode {
  Label label;
  std::vector<std::vector<OpenNode>> successors;  // index agent-1
};

using Outcome = std::variant<OpenNode, TableauNode>;

class Prover {
 public:
  Prover(int n_agents, std::size_t budget)
      : n_agents_(n_agents), budget_(budget) {}

  Outcome expand(Label label, int depth) {
    if (++stats_.nodes > budget_)
      throw ResourceLimit("tableau node budget of " + std::to_string(budget_) +
                          " exhausted");
    stats_.max_modal_depth = std::max(stats_.max_modal_depth, depth);

    if (auto lit = find_clash(label)) {
      TableauNode n;
      n.formulas = std::move(label);
      n.rule = TableauRule::Clash;
      n.principal = *lit;
      return n;
    }

    auto pick = [&](NnfOp op) -> std::optional<Nnf> {
      for (const Nnf& f : label)
        if (f.op() == op) return f;
      return std::nullopt;
    };

    if (auto conj = pick(NnfOp::And)) {
      Label child = label;
      child.erase(*conj);
      child.insert(conj->lhs());
      child.insert(conj->rhs());
      Outcome r = expand(std::move(child), depth);
      if (std::holds_alternative<OpenNode>(r)) return r;
      TableauNode n;
      n.formulas = std::move(label);
      n.rule = TableauRule::Conj;
      n.principal = *conj;
      n.children.push_back(std::get<TableauNode>(std::move(r)));
      return n;
    }

    if (auto disj = pick(NnfOp::Or)) {
      TableauNode n;
      n.rule = TableauRule::Disj;
      n.principal = *disj;
      for (const Nnf& side : {disj->lhs(), disj->rhs()}) {
        Label child = label;
        child.erase(*disj);
        child.insert(side);
        Outcome r = expand(std::move(child), depth);
        if (std::holds_alternative<OpenNode>(r)) return r;
        n.children.push_back(std::get<TableauNode>(std::move(r)));
      }
      n.formulas = std::move(label);
      return n;
    }

    OpenNode open;
    open.successors.resize(static_cast<std::size_t>(n_agents_));
    for (int i = 1; i <= n_agents_; ++i) {
      std::vector<std::optional<Nnf>> moves;
      bool has_box = false;
      for (const Nnf& f : label) {
        if (f.agent() != i) continue;
        if (f.op() == NnfOp::Dia) moves.emplace_back(f);
        if (f.op() == NnfOp::Box) has_box = true;
      }
      if (moves.empty() && has_box) moves.emplace_back(std::nullopt);
      for (const std::optional<Nnf>& move : moves) {
        Outcome r = expand(successor_label(label, i, move), depth + 1);
        if (auto* closed = std::get_if<TableauNode>(&r)) {
          TableauNode n;
          n.formulas = std::move(label);
          n.rule = TableauRule::Modal;
          n.agent = i;
          n.principal = move;
          n.children.push_back(std::move(*closed));
          return n;
        }
        open.successors[static_cast<std::size_t>(i - 1)].push_back(
            std::get<OpenNode>(std::move(r)));
      }
    }
    open.label = std::move(label);
    return open;
  }

  const TableauStats& stats() const { return stats_; }

 private:
  int n_agents_;
  std::size_t budget_;
  TableauStats stats_;
};

void number(TableauNode& n, int& next) {
  n.id = next++;
  for (TableauNode& c : n.children) number(c, next);
}

std::size_t collect_states(const OpenNode& n, std::vector<const OpenNode*>& out) {
  std::size_t me = out.size();
  out.push_back(&n);
  for (const auto& per_agent : n.successors)
    for (const OpenNode& s : per_agent) collect_states(s, out);
  return me;
}

AwarenessStructure build_model(const OpenNode& root, int n_agents) {
  std::vector<const OpenNode*> states;
  collect_states(root, states);
  std::vector<std::string> ids;
  for (std::size_t s = 0; s < states.size(); ++s)
    ids.push_back("s" + std::to_string(s));
  AwarenessStructure m(n_agents, ids);

  // Preorder numbering: walk again to learn each successor's index.
  std::size_t counter = 0;
  auto link = [&](auto&& self, const OpenNode& n) -> std::size_t {
    const std::size_t me = counter++;
    for (int i = 1; i <= n_agents; ++i) {
      const auto& succ = n.successors[static_cast<std::size_t>(i - 1)];
      if (succ.empty()) {
        // Nothing constrains agent i here; a self-loop keeps the relation
        // serial.
        m.add_access(i, me, me);
        continue;
      }
      for (const OpenNode& s : succ) m.add_access(i, me, self(self, s));
    }
    for (const Nnf& f : n.label) {
      if (!f.positive()) continue;
      if (f.op() == NnfOp::Lit) m.set_true(f.atom(), me);
      if (f.op() == NnfOp::Aware) m.add_awareness(f.agent(), me, f.aware_of());
    }
    return me;
  };
  link(link, root);
  return m;
}

bool replay_node(const TableauNode& n, std::string& why) {
  auto fail = [&](const std::string& what) {
    why = "node " + std::to_string(n.id) + ": " + what;
    return false;
  };
  if (n.rule == TableauRule::Clash) {
    if (!n.principal || !is_literal(*n.principal)) return fail("clash without a literal");
    if (!n.children.empty()) return fail("clash node has children");
    if (!n.formulas.contains(*n.principal) ||
        !n.formulas.contains(n.principal->complement()))
      return fail("no complementary pair for " + print_nnf(*n.principal));
    return true;
  }
  if (!n.principal && n.rule != TableauRule::Modal)
    return fail("rule without a principal formula");
  if (n.principal && !n.formulas.contains(*n.principal))
    return fail("principal formula not in the label");

  std::vector<Label> expected;
  switch (n.rule) {
    case TableauRule::Conj: {
      if (n.principal->op() != NnfOp::And) return fail("conj on a non-conjunction");
      Label c = n.formulas;
      c.erase(*n.principal);
      c.insert(n.principal->lhs());
      c.insert(n.principal->rhs());
      expected.push_back(std::move(c));
      break;
    }
    case TableauRule::Disj: {
      if (n.principal->op() != NnfOp::Or) return fail("disj on a non-disjunction");
      for (const Nnf& side : {n.principal->lhs(), n.principal->rhs()}) {
        Label c = n.formulas;
        c.erase(*n.principal);
        c.insert(side);
        expected.push_back(std::move(c));
      }
      break;
    }
    case TableauRule::Modal: {
      if (n.principal && (n.principal->op() != NnfOp::Dia ||
                          n.principal->agent() != n.agent))
        return fail("modal step on a formula that is not a diamond of agent " +
                    std::to_string(n.agent));
      expected.push_back(successor_label(n.formulas, n.agent, n.principal));
      break;
    }
    case TableauRule::Clash:
      break;
  }
  if (expected.size() != n.children.size())
    return fail("wrong number of children");
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (n.children[k].formulas != expected[k])
      return fail("child " + std::to_string(n.children[k].id) +
                  " does not carry the derived label");
    if (!replay_node(n.children[k], why)) return false;
  }
  return true;
}

}  // namespace

TableauResult run_tableau(const LgaFormula& f, TableauOptions options) {
  const int n_agents = std::max({1, options.n_agents, f.max_agent()});
  Prover prover(n_agents, options.node_budget);
  Outcome outcome = prover.expand(Label{to_nnf(f)}, 0);

  TableauResult result;
  result.stats = prover.stats();
  if (auto* open = std::get_if<OpenNode>(&outcome)) {
    result.satisfiable = true;
    result.model = build_model(*open, n_agents);
    result.root = 0;
    if (!result.model->is_serial() ||
        !eval_awareness(*result.model, result.root, f))
      throw std::logic_error("tableau model does not satisfy " + print_lga(f));
    return result;
  }
  TableauNode cert = std::get<TableauNode>(std::move(outcome));
  int next = 0;
  number(cert, next);
  std::string why;
  if (!replay(cert, f, &why))
    throw std::logic_error("tableau certificate does not replay: " + why);
  result.certificate = std::move(cert);
  return result;
}

bool replay(const TableauNode& root, const LgaFormula& f, std::string* why) {
  std::string reason;
  bool ok = root.formulas == Label{to_nnf(f)};
  if (!ok)
    reason = "root label is not the negation normal form of the input";
  else
    ok = replay_node(root, reason);
  if (!ok && why) *why = reason;
  return ok;
}

std::size_t count_nodes(const TableauNode& root) {
  std::size_t n = 1;
  for (const TableauNode& c : root.children) n += count_nodes(c);
  return n;
}

}  // namespace doxa
