#include <doctest.h>

#include <random>

#include "doxa/errors.h"
#include "doxa/formula.h"
#include "doxa/parser.h"
#include "doxa/random.h"

using namespace doxa;

namespace {

Formula p = Formula::atom("p");
Formula q = Formula::atom("q");
Formula r = Formula::atom("r");

// Reference enumeration of subformulas, written out by hand.
void collect(const Formula& f, FormulaSet& out) {
  out.insert(f);
  switch (f.op()) {
    case Op::Atom:
      return;
    case Op::And:
      collect(f.lhs(), out);
      collect(f.rhs(), out);
      return;
    default:
      collect(f.body(), out);
  }
}

}  // namespace

TEST_CASE("parse builds the expected trees") {
  CHECK(parse_formula("Exp[1] p", 2) == Formula::exp(1, p));
  CHECK(parse_formula("Box[1] (p & q)", 2) ==
        Formula::box(1, Formula::conjunction(p, q)));
  CHECK(parse_formula("Box[1](p&q)", 2) ==
        Formula::box(1, Formula::conjunction(p, q)));
  CHECK(parse_formula("~p & q", 1) ==
        Formula::conjunction(Formula::negation(p), q));
  CHECK(parse_formula("p & q | r", 1) ==
        Formula::disjunction(Formula::conjunction(p, q), r));
  CHECK(parse_formula("p -> q -> r", 1) ==
        Formula::implication(p, Formula::implication(q, r)));
  CHECK(parse_formula("p <-> q", 1) == Formula::equivalence(p, q));
  CHECK(parse_formula("Poss[2] p", 2) ==
        Formula::negation(Formula::box(2, Formula::negation(p))));
  CHECK(parse_formula("Box[1] p & q", 1) ==
        Formula::conjunction(Formula::box(1, p), q));
}

TEST_CASE("sugar desugars into the core connectives") {
  Formula t = parse_formula("true", 1);
  CHECK(t.is_top());
  CHECK(t.op() == Op::Not);
  CHECK(parse_formula("false", 1).is_bottom());
  CHECK(parse_formula("false", 1) == Formula::negation(Formula::top()));
  CHECK(parse_formula("p | q", 1) ==
        Formula::negation(Formula::conjunction(Formula::negation(p),
                                               Formula::negation(q))));
  CHECK(parse_formula("p -> q", 1) ==
        Formula::negation(Formula::conjunction(p, Formula::negation(q))));
  CHECK(is_l0(parse_formula("Exp[1] true", 1)));
}

TEST_CASE("print gives the canonical form") {
  CHECK(print_formula(Formula::exp(1, p)) == "Exp[1] p");
  CHECK(print_formula(Formula::negation(p)) == "~p");
  CHECK(print_formula(Formula::conjunction(p, q)) == "(p & q)");
  CHECK(print_formula(Formula::top()) == "true");
  CHECK(print_formula(Formula::bottom()) == "false");
  CHECK(print_formula(Formula::box(2, Formula::negation(Formula::exp(1, q)))) ==
        "Box[2] ~Exp[1] q");
}

TEST_CASE("stratification violations are rejected") {
  CHECK_THROWS_AS(parse_formula("Exp[1] Box[2] p", 2), StratificationError);
  CHECK_THROWS_AS(parse_formula("Exp[1] (p & Poss[1] q)", 2), StratificationError);
  CHECK_THROWS_AS(parse_formula("Exp[1] ~Box[1] p", 1), StratificationError);
  CHECK_THROWS_AS(Formula::exp(1, Formula::box(1, p)), StratificationError);
  CHECK_NOTHROW(parse_formula("Exp[1] Exp[2] p", 2));
  try {
    parse_formula("q & Exp[1] Box[1] p", 1);
    FAIL("no error");
  } catch (const StratificationError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("agent indices are range checked") {
  CHECK_THROWS_AS(parse_formula("Box[3] p", 2), AgentRangeError);
  CHECK_THROWS_AS(parse_formula("Box[0] p", 2), AgentRangeError);
  CHECK_THROWS_AS(parse_formula("Box[99999999999999999999] p", 2), AgentRangeError);
  try {
    parse_formula("p &\n  Exp[7] q", 2);
    FAIL("no error");
  } catch (const AgentRangeError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 7);
  }
}

TEST_CASE("syntax errors carry position and expectations") {
  CHECK_THROWS_AS(parse_formula("", 1), SyntaxError);
  CHECK_THROWS_AS(parse_formula("p &", 1), SyntaxError);
  CHECK_THROWS_AS(parse_formula("(p", 1), SyntaxError);
  CHECK_THROWS_AS(parse_formula("p q", 1), SyntaxError);
  CHECK_THROWS_AS(parse_formula("Box p", 1), SyntaxError);
  CHECK_THROWS_AS(parse_formula("p $ q", 1), SyntaxError);
  CHECK_THROWS_AS(parse_formula("P", 1), SyntaxError);
  try {
    parse_formula("p & )", 1);
    FAIL("no error");
  } catch (const SyntaxError& e) {
    CHECK(e.column() == 5);
    CHECK_FALSE(e.expected().empty());
  }
}

TEST_CASE("reserved atoms need opting in") {
  CHECK_THROWS_AS(parse_formula("_f_1_w0", 1), SyntaxError);
  CHECK(parse_formula("_f_1_w0", 1, {.allow_reserved = true}) ==
        Formula::atom("_f_1_w0"));
  CHECK(is_reserved_atom_name("_cxt"));
  CHECK_FALSE(is_user_atom_name("_cxt"));
  CHECK(is_user_atom_name("p_2"));
}

TEST_CASE("subformulas, atoms and L0") {
  Formula bpq = Formula::box(1, Formula::conjunction(p, q));
  CHECK(subformulas(bpq) ==
        FormulaSet{bpq, Formula::conjunction(p, q), p, q});
  CHECK(subformulas(p) == FormulaSet{p});
  CHECK(subformulas(Formula::exp(1, p)) == FormulaSet{Formula::exp(1, p), p});
  CHECK(atoms(Formula::conjunction(p, Formula::negation(q))) == AtomSet{"p", "q"});
  CHECK(atoms(Formula::exp(1, p)) == AtomSet{"p"});
  CHECK(atoms(FormulaSet{Formula::implication(p, q), Formula::box(1, r)}) ==
        AtomSet{"p", "q", "r"});
  CHECK(is_l0(Formula::exp(1, Formula::exp(2, p))));
  CHECK_FALSE(is_l0(Formula::box(1, p)));
  CHECK(is_l0(Formula::conjunction(p, q)));
  CHECK(bpq.modal_depth() == 1);
  CHECK(Formula::exp(1, Formula::exp(2, p)).modal_depth() == 0);
  CHECK(Formula::box(1, Formula::box(2, Formula::exp(1, p))).modal_depth() == 2);
  CHECK(is_subformula_closed(subformulas(bpq)));
  CHECK_FALSE(is_subformula_closed(FormulaSet{bpq}));

  FormulaGenerator gen(7, {5, 2, 3});
  for (int k = 0; k < 200; ++k) {
    Formula f = gen.formula();
    FormulaSet expect;
    collect(f, expect);
    CHECK(subformulas(f) == expect);
  }
}

TEST_CASE("structural identity, not logical equivalence") {
  CHECK(Formula::conjunction(p, q) != Formula::conjunction(q, p));
  CHECK(Formula::conjunction(p, p) != p);
  CHECK(parse_formula("(p & q)", 1) == Formula::conjunction(p, q));
}

TEST_CASE("print then parse is the identity") {
  FormulaGenerator gen(12345, {6, 3, 4});
  for (int k = 0; k < 500; ++k) {
    Formula f = gen.formula();
    std::string text = print_formula(f);
    CHECK_MESSAGE(parse_formula(text, 3) == f, text);
    CHECK(print_formula(parse_formula(text, 3)) == text);
  }
}

TEST_CASE("generator is reproducible") {
  FormulaGenerator a(99), b(99);
  for (int k = 0; k < 50; ++k) CHECK(a.formula() == b.formula());
  FormulaGenerator c(5, {4, 2, 2});
  for (int k = 0; k < 100; ++k) CHECK(is_l0(c.l0()));
}
