#ifndef DOXA_PARSER_H_
#define DOXA_PARSER_H_

#include <string>
#include <string_view>

#include "doxa/formula.h"

namespace doxa {

struct ParseOptions {
  // Accept atoms beginning with '_'. Model files need this to round-trip the
  // fresh atoms the transformations introduce; formulas typed by users
  // should leave it off.
  bool allow_reserved = false;
};

// Grammar, loosest to tightest binding:
//   a <-> b    a -> b (right assoc)    a | b    a & b
//   ~a   Exp[i] a   Box[i] a   Poss[i] a   (a)   atom   true   false
// Throws SyntaxError, StratificationError or AgentRangeError.
Formula parse_formula(std::string_view text, int n_agents,
                      ParseOptions options = {});

// Canonical form; parse_formula(print_formula(f), n) == f.
std::string print_formula(const Formula& f);

}  // namespace doxa

#endif  // DOXA_PARSER_H_
