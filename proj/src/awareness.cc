#include "doxa/awareness.h"

#include <algorithm>
#include <stdexcept>

#include "doxa/errors.h"
#include "parse_detail.h"

namespace doxa {

struct LgaFormula::Node {
  LgaOp op;
  int agent = 0;
  std::string name;
  std::vector<LgaFormula> kids;
  std::size_t size = 1;
  int modal_depth = 0;
  int max_agent = 0;
};

namespace {

template <typename N>
void inherit(N& n) {
  for (const auto& k : n.kids) {
    n.size += k.size();
    n.modal_depth = std::max(n.modal_depth, k.modal_depth());
    n.max_agent = std::max(n.max_agent, k.max_agent());
  }
}

}  // namespace

LgaFormula LgaFormula::atom(std::string name) {
  if (!is_user_atom_name(name) && !is_reserved_atom_name(name))
    throw std::invalid_argument("invalid atom name '" + name + "'");
  auto n = std::make_shared<Node>();
  n->op = LgaOp::Atom;
  n->name = std::move(name);
  return LgaFormula(std::move(n));
}

LgaFormula LgaFormula::negation(LgaFormula f) {
  auto n = std::make_shared<Node>();
  n->op = LgaOp::Not;
  n->kids.push_back(std::move(f));
  inherit(*n);
  return LgaFormula(std::move(n));
}

LgaFormula LgaFormula::conjunction(LgaFormula a, LgaFormula b) {
  auto n = std::make_shared<Node>();
  n->op = LgaOp::And;
  n->kids.push_back(std::move(a));
  n->kids.push_back(std::move(b));
  inherit(*n);
  return LgaFormula(std::move(n));
}

LgaFormula LgaFormula::belief(int agent, LgaFormula body) {
  if (agent < 1) throw std::invalid_argument("agent index must be >= 1");
  auto n = std::make_shared<Node>();
  n->op = LgaOp::B;
  n->agent = agent;
  n->kids.push_back(std::move(body));
  inherit(*n);
  n->modal_depth += 1;
  n->max_agent = std::max(n->max_agent, agent);
  return LgaFormula(std::move(n));
}

LgaFormula LgaFormula::aware(int agent, LgaFormula body) {
  if (agent < 1) throw std::invalid_argument("agent index must be >= 1");
  auto n = std::make_shared<Node>();
  n->op = LgaOp::A;
  n->agent = agent;
  n->kids.push_back(std::move(body));
  inherit(*n);
  n->max_agent = std::max(n->max_agent, agent);
  return LgaFormula(std::move(n));
}

LgaFormula LgaFormula::explicit_belief(int agent, LgaFormula body) {
  if (agent < 1) throw std::invalid_argument("agent index must be >= 1");
  auto n = std::make_shared<Node>();
  n->op = LgaOp::X;
  n->agent = agent;
  n->kids.push_back(std::move(body));
  inherit(*n);
  n->modal_depth += 1;
  n->max_agent = std::max(n->max_agent, agent);
  return LgaFormula(std::move(n));
}

LgaFormula LgaFormula::top() {
  static const LgaFormula t = [] {
    LgaFormula a = atom(std::string(kTopAtom));
    return negation(conjunction(a, negation(a)));
  }();
  return t;
}

LgaFormula LgaFormula::bottom() {
  static const LgaFormula f = negation(top());
  return f;
}

LgaFormula LgaFormula::disjunction(LgaFormula a, LgaFormula b) {
  return negation(conjunction(negation(std::move(a)), negation(std::move(b))));
}

LgaFormula LgaFormula::implication(LgaFormula a, LgaFormula b) {
  return negation(conjunction(std::move(a), negation(std::move(b))));
}

LgaFormula LgaFormula::equivalence(LgaFormula a, LgaFormula b) {
  return conjunction(implication(a, b), implication(b, a));
}

LgaOp LgaFormula::op() const { return node_->op; }
int LgaFormula::agent() const { return node_->agent; }
const std::string& LgaFormula::name() const { return node_->name; }
const LgaFormula& LgaFormula::body() const { return node_->kids[0]; }
const LgaFormula& LgaFormula::lhs() const { return node_->kids[0]; }
const LgaFormula& LgaFormula::rhs() const { return node_->kids[1]; }
std::size_t LgaFormula::size() const { return node_->size; }
int LgaFormula::modal_depth() const { return node_->modal_depth; }
int LgaFormula::max_agent() const { return node_->max_agent; }

bool LgaFormula::is_top() const {
  if (op() != LgaOp::Not || body().op() != LgaOp::And) return false;
  const LgaFormula& c = body();
  return c.lhs().op() == LgaOp::Atom && c.lhs().name() == kTopAtom &&
         c.rhs().op() == LgaOp::Not && c.rhs().body().op() == LgaOp::Atom &&
         c.rhs().body().name() == kTopAtom;
}

bool LgaFormula::is_bottom() const {
  return op() == LgaOp::Not && body().is_top();
}

std::strong_ordering LgaFormula::compare(const Node* a, const Node* b) {
  if (a == b) return std::strong_ordering::equal;
  if (auto c = a->size <=> b->size; c != 0) return c;
  if (auto c = a->op <=> b->op; c != 0) return c;
  if (auto c = a->agent <=> b->agent; c != 0) return c;
  if (auto c = a->name.compare(b->name) <=> 0; c != 0) return c;
  for (std::size_t k = 0; k < a->kids.size(); ++k)
    if (auto c = a->kids[k] <=> b->kids[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

bool operator==(const LgaFormula& a, const LgaFormula& b) {
  return LgaFormula::compare(a.node_.get(), b.node_.get()) == 0;
}

std::strong_ordering operator<=>(const LgaFormula& a, const LgaFormula& b) {
  return LgaFormula::compare(a.node_.get(), b.node_.get());
}

namespace {

struct LgaTraits {
  using Value = LgaFormula;

  static std::vector<std::string> modal_keywords() { return {"B", "A", "X"}; }

  LgaFormula atom(const std::string& n) { return LgaFormula::atom(n); }
  LgaFormula negation(LgaFormula f) { return LgaFormula::negation(std::move(f)); }
  LgaFormula conjunction(LgaFormula a, LgaFormula b) {
    return LgaFormula::conjunction(std::move(a), std::move(b));
  }
  LgaFormula disjunction(LgaFormula a, LgaFormula b) {
    return LgaFormula::disjunction(std::move(a), std::move(b));
  }
  LgaFormula implication(LgaFormula a, LgaFormula b) {
    return LgaFormula::implication(std::move(a), std::move(b));
  }
  LgaFormula equivalence(LgaFormula a, LgaFormula b) {
    return LgaFormula::equivalence(std::move(a), std::move(b));
  }
  LgaFormula top() { return LgaFormula::top(); }
  LgaFormula bottom() { return LgaFormula::bottom(); }

  LgaFormula modal(const std::string& kw, int agent, LgaFormula body,
                   const detail::Token&) {
    if (kw == "B") return LgaFormula::belief(agent, std::move(body));
    if (kw == "A") return LgaFormula::aware(agent, std::move(body));
    return LgaFormula::explicit_belief(agent, std::move(body));
  }
};

void print_into(const LgaFormula& f, std::string& out) {
  if (f.is_top()) {
    out += "true";
    return;
  }
  if (f.is_bottom()) {
    out += "false";
    return;
  }
  switch (f.op()) {
    case LgaOp::Atom:
      out += f.name();
      return;
    case LgaOp::Not:
      out += '~';
      print_into(f.body(), out);
      return;
    case LgaOp::And:
      out += '(';
      print_into(f.lhs(), out);
      out += " & ";
      print_into(f.rhs(), out);
      out += ')';
      return;
    case LgaOp::B:
    case LgaOp::A:
    case LgaOp::X:
      out += f.op() == LgaOp::B ? "B[" : f.op() == LgaOp::A ? "A[" : "X[";
      out += std::to_string(f.agent());
      out += "] ";
      print_into(f.body(), out);
      return;
  }
}

}  // namespace

LgaFormula parse_lga(std::string_view text, int n_agents,
                     ParseOptions options) {
  if (n_agents < 1) throw std::invalid_argument("n_agents must be >= 1");
  detail::Parser<LgaTraits> parser(text, n_agents, options.allow_reserved,
                                   LgaTraits{});
  return parser.parse();
}

std::string print_lga(const LgaFormula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

LgaFormula translate(const Formula& f) {
  switch (f.op()) {
    case Op::Atom:
      return LgaFormula::atom(f.name());
    case Op::Not:
      return LgaFormula::negation(translate(f.body()));
    case Op::And:
      return LgaFormula::conjunction(translate(f.lhs()), translate(f.rhs()));
    case Op::Exp:
      return LgaFormula::explicit_belief(f.agent(), translate(f.body()));
    case Op::Box:
      return LgaFormula::belief(f.agent(), translate(f.body()));
  }
  throw std::logic_error("unreachable");
}

std::optional<Formula> untranslate(const LgaFormula& f) {
  switch (f.op()) {
    case LgaOp::Atom:
      return Formula::atom(f.name());
    case LgaOp::Not: {
      auto b = untranslate(f.body());
      if (!b) return std::nullopt;
      return Formula::negation(*b);
    }
    case LgaOp::And: {
      auto l = untranslate(f.lhs());
      auto r = untranslate(f.rhs());
      if (!l || !r) return std::nullopt;
      return Formula::conjunction(*l, *r);
    }
    case LgaOp::B: {
      auto b = untranslate(f.body());
      if (!b) return std::nullopt;
      return Formula::box(f.agent(), *b);
    }
    case LgaOp::X: {
      auto b = untranslate(f.body());
      if (!b || !b->is_l0()) return std::nullopt;
      return Formula::exp(f.agent(), *b);
    }
    case LgaOp::A:
      return std::nullopt;
  }
  return std::nullopt;
}

AwarenessStructure::AwarenessStructure(int n_agents,
                                       std::vector<std::string> state_ids)
    : n_agents_(n_agents), ids_(std::move(state_ids)) {
  if (n_agents < 1) throw std::invalid_argument("n_agents must be >= 1");
  if (ids_.empty()) throw std::invalid_argument("a structure needs a state");
  for (std::size_t s = 0; s < ids_.size(); ++s)
    if (!index_.emplace(ids_[s], s).second)
      throw std::invalid_argument("duplicate state id '" + ids_[s] + "'");
  access_.resize(ids_.size() * static_cast<std::size_t>(n_agents));
  awareness_.resize(ids_.size() * static_cast<std::size_t>(n_agents));
}

const std::string& AwarenessStructure::state_id(std::size_t s) const {
  if (s >= ids_.size())
    throw UnknownState("no state with index " + std::to_string(s));
  return ids_[s];
}

std::size_t AwarenessStructure::index_of(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw UnknownState("no state '" + std::string(id) + "'");
  return it->second;
}

std::size_t AwarenessStructure::slot(int agent, std::size_t s) const {
  if (agent < 1 || agent > n_agents_)
    throw std::out_of_range("agent " + std::to_string(agent) +
                            " out of range");
  state_id(s);
  return static_cast<std::size_t>(agent - 1) * ids_.size() + s;
}

void AwarenessStructure::add_access(int agent, std::size_t s, std::size_t t) {
  state_id(t);
  access_[slot(agent, s)].insert(t);
}

const StateSet& AwarenessStructure::access(int agent, std::size_t s) const {
  return access_[slot(agent, s)];
}

void AwarenessStructure::add_awareness(int agent, std::size_t s, LgaFormula f) {
  awareness_[slot(agent, s)].insert(std::move(f));
}

const LgaSet& AwarenessStructure::awareness(int agent, std::size_t s) const {
  return awareness_[slot(agent, s)];
}

void AwarenessStructure::set_true(const std::string& atom, std::size_t s) {
  state_id(s);
  valuation_[atom].insert(s);
}

bool AwarenessStructure::is_serial() const {
  return std::none_of(access_.begin(), access_.end(),
                      [](const StateSet& r) { return r.empty(); });
}

std::vector<bool> extension(const AwarenessStructure& m, const LgaFormula& f) {
  const std::size_t n = m.state_count();
  std::vector<bool> out(n, false);
  switch (f.op()) {
    case LgaOp::Atom: {
      auto it = m.valuation().find(f.name());
      if (it != m.valuation().end())
        for (std::size_t s : it->second) out[s] = true;
      return out;
    }
    case LgaOp::Not:
      out = extension(m, f.body());
      out.flip();
      return out;
    case LgaOp::And: {
      std::vector<bool> a = extension(m, f.lhs());
      std::vector<bool> b = extension(m, f.rhs());
      for (std::size_t s = 0; s < n; ++s) out[s] = a[s] && b[s];
      return out;
    }
    case LgaOp::A:
      for (std::size_t s = 0; s < n; ++s)
        out[s] = m.awareness(f.agent(), s).contains(f.body());
      return out;
    case LgaOp::B:
    case LgaOp::X: {
      std::vector<bool> body = extension(m, f.body());
      for (std::size_t s = 0; s < n; ++s) {
        bool all = true;
        for (std::size_t t : m.access(f.agent(), s)) all = all && body[t];
        out[s] = all;
        if (f.op() == LgaOp::X)
          out[s] = out[s] && m.awareness(f.agent(), s).contains(f.body());
      }
      return out;
    }
  }
  return out;
}

bool eval_awareness(const AwarenessStructure& m, std::size_t s,
                    const LgaFormula& f) {
  m.state_id(s);
  return extension(m, f)[s];
}

bool eval_awareness(const AwarenessStructure& m, std::string_view s,
                    const LgaFormula& f) {
  return eval_awareness(m, m.index_of(s), f);
}

AwarenessStructure quasi_ndm_to_awareness(const DoxasticModel& m) {
  ConditionReport report = check_conditions(m);
  if (!report.is_quasi_ndm())
    throw ConditionViolation(
        "quasi_ndm_to_awareness needs C1* and C2: " +
        (report.violations.empty() ? std::string() : report.violations.front()));
  AwarenessStructure out(m.agents(), m.world_ids());
  for (int i = 1; i <= m.agents(); ++i) {
    for (std::size_t w = 0; w < m.world_count(); ++w) {
      for (std::size_t v : m.notional(i, w)) out.add_access(i, w, v);
      for (const Formula& alpha : m.doxastic(i, w))
        out.add_awareness(i, w, translate(alpha));
    }
  }
  for (const auto& [atom, worlds] : m.valuation())
    for (std::size_t w : worlds) out.set_true(atom, w);
  return out;
}

DoxasticModel awareness_to_quasi_ndm(const AwarenessStructure& m) {
  if (!m.is_serial())
    throw NotSerial("awareness structure has a state without successors");
  DoxasticModel out(m.agents(), m.state_ids());
  for (int i = 1; i <= m.agents(); ++i) {
    for (std::size_t s = 0; s < m.state_count(); ++s) {
      const StateSet& succ = m.access(i, s);
      out.set_notional(i, s, succ);
      for (const LgaFormula& g : m.awareness(i, s)) {
        std::optional<Formula> alpha = untranslate(g);
        if (!alpha || !alpha->is_l0()) continue;
        std::vector<bool> ext = extension(m, g);
        bool believed = std::all_of(succ.begin(), succ.end(),
                                    [&](std::size_t t) { return ext[t]; });
        if (believed) out.add_doxastic(i, s, *alpha);
      }
    }
  }
  for (const auto& [atom, states] : m.valuation())
    for (std::size_t s : states) out.set_true(atom, s);
  return out;
}

}  // namespace doxa
