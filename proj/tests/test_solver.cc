#include <doctest.h>

#include <random>

#include "doxa/axioms.h"
#include "doxa/errors.h"
#include "doxa/json_io.h"
#include "doxa/parser.h"
#include "doxa/random.h"
#include "doxa/solver.h"
#include "support.h"

using namespace doxa;

namespace {

Formula P(const char* s) { return parse_formula(s, 2); }
LgaFormula L(const char* s) { return parse_lga(s, 2); }

}  // namespace

TEST_CASE("tableau on awareness formulas") {
  CHECK(tableau_sat(L("B[1] false")).verdict == Verdict::Unsat);
  CHECK(tableau_sat(L("X[1] p & ~B[1] p")).verdict == Verdict::Unsat);
  SolverResult r = tableau_sat(L("B[1] p & ~A[1] p"));
  REQUIRE(r.verdict == Verdict::Sat);
  CHECK(r.awareness->state_count() == 2);
  CHECK(audit(L("B[1] p & ~A[1] p"), r).empty());
  CHECK(tableau_sat(L("A[1] p & ~A[1] p")).verdict == Verdict::Unsat);
  // Awareness is syntactic: A(p) and ~A(~~p) coexist.
  CHECK(tableau_sat(L("A[1] p & ~A[1] ~~p")).verdict == Verdict::Sat);
  CHECK(tableau_sat(L("~B[1] p & ~B[1] ~p & B[2] q")).verdict == Verdict::Sat);
}

TEST_CASE("satisfiability in the belief logic") {
  SolverResult r1 = sat_lda(P("Exp[1] p & ~Box[1] p"));
  CHECK(r1.verdict == Verdict::Unsat);
  CHECK(r1.certificate.has_value());
  SolverResult r2 = sat_lda(P("Exp[1] (p & q) & ~Exp[1] (q & p)"));
  REQUIRE(r2.verdict == Verdict::Sat);
  CHECK(r2.views.has_value());
  CHECK(audit(P("Exp[1] (p & q) & ~Exp[1] (q & p)"), r2).empty());
  CHECK(sat_lda(P("Box[1] p & Box[1] ~p")).verdict == Verdict::Unsat);
}

TEST_CASE("validity") {
  CHECK(valid(P("(Box[1] p & Box[1] (p -> q)) -> Box[1] q")));
  CHECK_FALSE(valid(P("Box[1] p -> Exp[1] p")));
  CHECK_FALSE(valid(P("Exp[1] p & Exp[1] q -> Exp[1] (p & q)")));
  CHECK_FALSE(valid(P("Exp[1] (p & q) -> Exp[1] (q & p)")));
  CHECK_FALSE(valid(P("Box[1] p -> Box[1] Box[1] p")));
  CHECK_FALSE(valid(P("Box[1] p -> p")));
  CHECK(valid(P("Exp[1] p -> Box[1] p")));
  CHECK(valid(P("Box[1] (p & q) -> Box[1] (q & p)")));

  SolverResult cm = check_validity(P("Box[1] p -> Exp[1] p"));
  REQUIRE(cm.views.has_value());
  CHECK(oracle::truth(cm.views->ndm, cm.views->world, P("Box[1] p & ~Exp[1] p")));
  CHECK(oracle::mab_truth(cm.views->cmab, P("Box[1] p & ~Exp[1] p")));
}

TEST_CASE("closed tableaux replay and tampering is caught") {
  LgaFormula f = translate(P("Box[1] (p & q) & Poss[1] ~q"));
  SolverResult r = tableau_sat(f);
  REQUIRE(r.verdict == Verdict::Unsat);
  std::string why;
  CHECK(replay(*r.certificate, f, &why));
  CHECK_FALSE(replay(*r.certificate, translate(P("p")), &why));

  TableauNode bad = *r.certificate;
  // Walk to the first leaf and remove its clash.
  TableauNode* n = &bad;
  while (!n->children.empty()) n = &n->children.front();
  n->formulas.erase(n->principal->complement());
  CHECK_FALSE(replay(bad, f, &why));
  CHECK_FALSE(why.empty());

  TableauNode cut = *r.certificate;
  cut.children.clear();
  CHECK_FALSE(replay(cut, f));
}

TEST_CASE("tableau terminates within the input's modal depth") {
  FormulaGenerator gen(2024, {4, 2, 3});
  for (int k = 0; k < 200; ++k) {
    Formula f = gen.formula();
    SolverResult r = sat_lda(f);
    CHECK(r.stats.max_modal_depth <= translate(f).modal_depth());
    CHECK(audit(f, r).empty());
  }
}

TEST_CASE("node budget") {
  Formula f = P("(p | q) & (q | r) & Poss[1] (p | r) & Poss[2] q");
  CHECK_THROWS_AS(sat_lda(f, {.node_budget = 3}), ResourceLimit);
  CHECK_NOTHROW(sat_lda(f, {.node_budget = 100000}));
}

TEST_CASE("bounded model search") {
  auto a = bounded_model_search(P("p"), 1);
  REQUIRE(a.has_value());
  CHECK(a->model.world_count() == 1);

  Formula f = P("Exp[1] p & ~Exp[1] (p & p)");
  auto b = bounded_model_search(f, 2);
  REQUIRE(b.has_value());
  CHECK(eval_ndm(b->model, b->world, f));
  CHECK(b->model.doxastic(1, b->world).contains(P("p")));

  for (std::size_t n : {1u, 2u, 8u}) {
    BoundedSearchResult c = bounded_search(P("Box[1] false"), n);
    CHECK_FALSE(c.model.has_value());
    CHECK(c.exhausted);
  }
  CHECK_THROWS(bounded_model_search(P("p"), 0));

  // Needs two worlds: p here, ~p at the only alternative.
  BoundedSearchResult two = bounded_search(P("p & Box[1] ~p"), 1);
  CHECK_FALSE(two.model.has_value());
  CHECK_FALSE(two.exhausted);
  CHECK(bounded_search(P("p & Box[1] ~p"), 2).model.has_value());
}

TEST_CASE("bounded search agrees with brute-force enumeration") {
  FormulaGenerator gen(777, {3, 1, 2});
  int sat = 0;
  for (int k = 0; k < 120; ++k) {
    Formula f = gen.formula();
    bool naive1 = oracle::naive_satisfiable(f, 1, 1);
    bool naive2 = naive1 || oracle::naive_satisfiable(f, 2, 1);
    CHECK_MESSAGE(bounded_model_search(f, 1, 1).has_value() == naive1, print_formula(f));
    CHECK_MESSAGE(bounded_model_search(f, 2, 1).has_value() == naive2, print_formula(f));
    BoundedSearchResult full = bounded_search(f, 8, 1);
    if (naive2) CHECK(full.model.has_value());
    if (full.exhausted) CHECK_FALSE(naive2);
    CHECK((sat_lda(f).verdict == Verdict::Sat) == (naive2 || full.model.has_value()));
    sat += naive2;
  }
  CHECK(sat > 20);
  CHECK(sat < 120);
}

TEST_CASE("tableau agrees with type elimination") {
  FormulaGenerator gen(31337, {3, 2, 2});
  for (int k = 0; k < 200; ++k) {
    Formula f = gen.formula();
    BoundedSearchResult b = bounded_search(f, 8, 2);
    if (!b.model && !b.exhausted) continue;
    CHECK_MESSAGE((sat_lda(f).verdict == Verdict::Sat) == b.model.has_value(),
                  print_formula(f));
  }
}

TEST_CASE("axiom schemas") {
  CHECK(valid(axiom_k(1, P("p"), P("q"))));
  CHECK(valid(axiom_d(1, P("Exp[2] p"))));
  CHECK(valid(axiom_int(1, P("Exp[2] p"))));
  CHECK_THROWS_AS(axiom_int(1, P("Box[1] p")), StratificationError);
  AxiomReport r = check_axiom_schemas(2, 15, 99);
  CHECK(r.ok());
  CHECK(r.k_checked == 15);
  CHECK(r.nec_checked == 50);
  CHECK(r.audited == 45 + 100);
  for (const Formula& v : validity_library(12, 2, 3)) CHECK(valid(v));
}

TEST_CASE("result JSON") {
  Json sat = to_json(sat_lda(P("Exp[1] p")));
  CHECK(sat["verdict"] == "sat");
  CHECK(sat["model"]["ndm"]["worlds"].is_array());
  CHECK(sat["certificate"].is_null());
  CHECK(sat["stats"]["nodes"].get<int>() > 0);
  Json unsat = to_json(sat_lda(P("Box[1] false")));
  CHECK(unsat["verdict"] == "unsat");
  CHECK(unsat["certificate"]["rule"] == "modal");
  CHECK(unsat["model"].is_null());
}

TEST_CASE("type elimination refutes negated validities") {
  for (const Formula& v : validity_library(60, 2, 17)) {
    Formula neg = Formula::negation(v);
    BoundedSearchResult b = bounded_search(neg, 8, 2);
    CHECK_MESSAGE(b.exhausted, print_formula(v));
    CHECK_FALSE(b.model.has_value());
    CHECK(sat_lda(neg).verdict == Verdict::Unsat);
  }
}

TEST_CASE("tableau agrees with type elimination on deeper formulas") {
  FormulaGenerator gen(99991, {6, 2, 2});
  int checked = 0;
  while (checked < 300) {
    Formula f = gen.formula();
    if (translate(f).modal_depth() > 3) continue;
    ++checked;
    BoundedSearchResult b = bounded_search(f, 64, 2);
    REQUIRE((b.model.has_value() || b.exhausted));
    CHECK_MESSAGE((sat_lda(f).verdict == Verdict::Sat) == b.model.has_value(),
                  print_formula(f));
  }
}
