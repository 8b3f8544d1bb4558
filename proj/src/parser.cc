#include "doxa/parser.h"

#include <vector>

#include "doxa/errors.h"
#include "parse_detail.h"

namespace doxa {

namespace {

struct BeliefTraits {
  using Value = Formula;

  static std::vector<std::string> modal_keywords() {
    return {"Exp", "Box", "Poss"};
  }

  Formula atom(const std::string& name) { return Formula::atom(name); }
  Formula negation(Formula f) { return Formula::negation(std::move(f)); }
  Formula conjunction(Formula a, Formula b) {
    return Formula::conjunction(std::move(a), std::move(b));
  }
  Formula disjunction(Formula a, Formula b) {
    return Formula::disjunction(std::move(a), std::move(b));
  }
  Formula implication(Formula a, Formula b) {
    return Formula::implication(std::move(a), std::move(b));
  }
  Formula equivalence(Formula a, Formula b) {
    return Formula::equivalence(std::move(a), std::move(b));
  }
  Formula top() { return Formula::top(); }
  Formula bottom() { return Formula::bottom(); }

  Formula modal(const std::string& kw, int agent, Formula body,
                const detail::Token& at) {
    if (kw == "Exp") {
      if (!body.is_l0())
        throw StratificationError(
            "the argument of Exp[" + std::to_string(agent) +
                "] must not contain Box or Poss",
            at.line, at.column);
      return Formula::exp(agent, std::move(body));
    }
    if (kw == "Box") return Formula::box(agent, std::move(body));
    return Formula::poss(agent, std::move(body));
  }
};

void print_into(const Formula& f, std::string& out) {
  if (f.is_top()) {
    out += "true";
    return;
  }
  if (f.is_bottom()) {
    out += "false";
    return;
  }
  switch (f.op()) {
    case Op::Atom:
      out += f.name();
      return;
    case Op::Not:
      out += '~';
      print_into(f.body(), out);
      return;
    case Op::And:
      out += '(';
      print_into(f.lhs(), out);
      out += " & ";
      print_into(f.rhs(), out);
      out += ')';
      return;
    case Op::Exp:
    case Op::Box:
      out += f.op() == Op::Exp ? "Exp[" : "Box[";
      out += std::to_string(f.agent());
      out += "] ";
      print_into(f.body(), out);
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text, int n_agents,
                      ParseOptions options) {
  if (n_agents < 1) throw std::invalid_argument("n_agents must be >= 1");
  detail::Parser<BeliefTraits> parser(text, n_agents, options.allow_reserved,
                                      BeliefTraits{});
  return parser.parse();
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

}  // namespace doxa
