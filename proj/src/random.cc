#include "doxa/random.h"

#include <stdexcept>

namespace doxa {

std::vector<std::string> atom_pool(int n) {
  static const char* kNames[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
  std::vector<std::string> out;
  for (int k = 0; k < n; ++k)
    out.push_back(k < 8 ? kNames[k] : "p" + std::to_string(k));
  return out;
}

FormulaGenerator::FormulaGenerator(std::uint64_t seed, GeneratorOptions options)
    : options_(options), rng_(seed) {
  if (options_.agents < 1 || options_.atoms < 1 || options_.max_depth < 0)
    throw std::invalid_argument("generator needs agents, atoms >= 1");
}

Formula FormulaGenerator::formula() { return make(options_.max_depth, true); }
Formula FormulaGenerator::formula(int depth) { return make(depth, true); }
Formula FormulaGenerator::l0() { return make(options_.max_depth, false); }
Formula FormulaGenerator::l0(int depth) { return make(depth, false); }

int FormulaGenerator::agent() {
  return std::uniform_int_distribution<int>(1, options_.agents)(rng_);
}

std::string FormulaGenerator::atom_name() {
  std::uniform_int_distribution<int> pick(0, options_.atoms - 1);
  return atom_pool(options_.atoms)[static_cast<std::size_t>(pick(rng_))];
}

Formula FormulaGenerator::make(int depth, bool allow_box) {
  if (depth <= 0) return Formula::atom(atom_name());
  std::discrete_distribution<int> kind(
      {2.0, 2.0, 2.0, 1.0, allow_box ? 1.0 : 0.0});
  switch (kind(rng_)) {
    case 0:
      return Formula::atom(atom_name());
    case 1:
      return Formula::negation(make(depth - 1, allow_box));
    case 2: {
      Formula a = make(depth - 1, allow_box);
      Formula b = make(depth - 1, allow_box);
      return Formula::conjunction(std::move(a), std::move(b));
    }
    case 3: {
      int i = agent();
      return Formula::exp(i, make(depth - 1, false));
    }
    default: {
      int i = agent();
      return Formula::box(i, make(depth - 1, true));
    }
  }
}

}  // namespace doxa
