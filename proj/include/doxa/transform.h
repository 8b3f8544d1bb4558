#ifndef DOXA_TRANSFORM_H_
#define DOXA_TRANSFORM_H_

#include <cstddef>
#include <vector>

#include "doxa/belief_base.h"
#include "doxa/doxastic_model.h"
#include "doxa/formula.h"

namespace doxa {

struct FiltrationResult {
  DoxasticModel model;
  // class_of[w] is the world of model that world w of the input maps to.
  std::vector<std::size_t> class_of;
  FormulaSet sigma;
};

// Quotient of m by agreement on sigma. Worlds of the result are named by the
// bit-string of their sigma truth profile (sigma in FormulaSet order).
// Doxastic sets are the class-wide intersection cut down to sigma; notional
// sets are the image of the members' notional sets (smallest filtration);
// atoms outside atoms(sigma) are false everywhere. If m is a quasi-NDM, so is
// the result, and every member of sigma keeps its truth value.
// Throws SigmaNotClosed.
FiltrationResult filtrate(const DoxasticModel& m, const FormulaSet& sigma);

// Pins every notional set down with a fresh atom f(i,w): D'(i,w) = D(i,w) +
// {f(i,w)} and f(i,w) is true exactly on N(i,w). Atoms outside the model's
// terminology and atoms(phi) are dropped. A quasi-NDM becomes an NDM with
// the same truth value for phi at every world.
DoxasticModel quasi_to_ndm(const DoxasticModel& m, const Formula& phi);

struct PointedModel {
  DoxasticModel model;
  std::size_t world;
};

// One world per distinct base of context + {base}. When the base is not a
// context member, a fresh guard atom true exactly at the context worlds is
// added to every doxastic set, so the base world is never notional.
// Throws NotConsistent unless is_cmab(m).
PointedModel cmab_to_ndm(const Mab& m);

// Collapses worlds with equal atoms and doxastic sets, then builds one base
// per remaining world; the context is all of them and the base is the one
// for w. Throws ConditionViolation unless m satisfies C1 and C2.
Mab ndm_to_cmab(const DoxasticModel& m, std::size_t w);

// Reserved-name generator: prefix followed by the first suffix that makes
// the name absent from taken. The name is added to taken.
std::string fresh_atom(const std::string& stem, AtomSet& taken);

}  // namespace doxa

#endif  // DOXA_TRANSFORM_H_
