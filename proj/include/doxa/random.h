#ifndef DOXA_RANDOM_H_
#define DOXA_RANDOM_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "doxa/formula.h"

namespace doxa {

struct GeneratorOptions {
  int max_depth = 3;  // nesting of connectives, not modal depth
  int agents = 2;
  int atoms = 3;      // drawn from p, q, r, s, ...
};

// Seeded formula generator. At depth d > 0 a node is chosen with weights
//   atom 2, not 2, and 2, Exp 1, Box 1
// (Box dropped for L0 output); at depth 0 only atoms. Exp bodies are L0
// formulas of depth d-1. Same seed and options give the same sequence.
class FormulaGenerator {
 public:
  FormulaGenerator(std::uint64_t seed, GeneratorOptions options = {});

  Formula formula();
  Formula formula(int depth);
  Formula l0();
  Formula l0(int depth);

  int agent();
  std::string atom_name();
  std::mt19937_64& engine() { return rng_; }
  const GeneratorOptions& options() const { return options_; }

 private:
  Formula make(int depth, bool allow_box);

  GeneratorOptions options_;
  std::mt19937_64 rng_;
};

std::vector<std::string> atom_pool(int n);

}  // namespace doxa

#endif  // DOXA_RANDOM_H_
