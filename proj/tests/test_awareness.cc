#include <doctest.h>

#include <random>

#include "doxa/awareness.h"
#include "doxa/errors.h"
#include "doxa/json_io.h"
#include "doxa/parser.h"
#include "doxa/random.h"
#include "support.h"

using namespace doxa;

namespace {

Formula P(const char* s) { return parse_formula(s, 2); }
LgaFormula L(const char* s) { return parse_lga(s, 2); }

}  // namespace

TEST_CASE("awareness syntax") {
  CHECK(L("X[1] p") == LgaFormula::explicit_belief(1, LgaFormula::atom("p")));
  CHECK(L("A[2] B[1] p") ==
        LgaFormula::aware(2, LgaFormula::belief(1, LgaFormula::atom("p"))));
  CHECK(print_lga(L("B[1] (p & ~A[2] q)")) == "B[1] (p & ~A[2] q)");
  CHECK_THROWS_AS(parse_lga("Exp[1] p", 2), SyntaxError);
  CHECK_THROWS_AS(parse_lga("B[3] p", 2), AgentRangeError);
  // No stratification in this language.
  CHECK_NOTHROW(parse_lga("X[1] B[2] p", 2));
  FormulaGenerator gen(4, {5, 2, 3});
  for (int k = 0; k < 200; ++k) {
    LgaFormula f = translate(gen.formula());
    CHECK(parse_lga(print_lga(f), 2) == f);
  }
}

TEST_CASE("translation") {
  CHECK(translate(P("Exp[1] p")) == L("X[1] p"));
  CHECK(translate(P("Box[1] Exp[2] p")) == L("B[1] X[2] p"));
  CHECK(translate(P("p & ~q")) == L("p & ~q"));
  FormulaGenerator gen(21, {5, 2, 3});
  for (int k = 0; k < 300; ++k) {
    Formula f = gen.formula();
    LgaFormula t = translate(f);
    CHECK(untranslate(t) == f);
    CHECK(t.modal_depth() >= f.modal_depth());
  }
  CHECK_FALSE(untranslate(L("A[1] p")).has_value());
  CHECK_FALSE(untranslate(L("X[1] B[1] p")).has_value());
}

TEST_CASE("truth in awareness structures") {
  AwarenessStructure m(1, {"s"});
  m.add_access(1, 0, 0);
  m.set_true("p", 0);
  CHECK(eval_awareness(m, "s", L("B[1] p")));
  CHECK_FALSE(eval_awareness(m, "s", L("A[1] p")));
  CHECK_FALSE(eval_awareness(m, "s", L("X[1] p")));
  m.add_awareness(1, 0, L("p"));
  CHECK(eval_awareness(m, "s", L("X[1] p")));
  CHECK(m.is_serial());
  CHECK_THROWS_AS(eval_awareness(m, "t", L("p")), UnknownState);
  CHECK_THROWS_AS(m.state_id(3), UnknownState);
}

TEST_CASE("explicit belief is belief plus awareness") {
  std::mt19937_64 rng(404);
  FormulaGenerator gen(405, {3, 2, 3});
  for (int k = 0; k < 100; ++k) {
    AwarenessStructure m = oracle::random_awareness(rng, {});
    LgaFormula g = translate(gen.formula());
    int i = 1 + static_cast<int>(rng() % 2);
    LgaFormula x = LgaFormula::explicit_belief(i, g);
    LgaFormula ba = LgaFormula::conjunction(LgaFormula::belief(i, g), LgaFormula::aware(i, g));
    for (std::size_t s = 0; s < m.state_count(); ++s) {
      CHECK(eval_awareness(m, s, x) == eval_awareness(m, s, ba));
      CHECK(eval_awareness(m, s, x) == oracle::truth(m, s, x));
    }
  }
}

TEST_CASE("quasi-NDM to awareness structure") {
  DoxasticModel q(1, {"w"});
  q.add_doxastic(1, 0, P("p"));
  q.set_true("p", 0);
  q.set_notional(1, 0, {0});
  AwarenessStructure a = quasi_ndm_to_awareness(q);
  CHECK(a.awareness(1, 0) == LgaSet{L("p")});
  CHECK(a.access(1, 0) == StateSet{0});

  DoxasticModel bad(1, {"w"});
  CHECK_THROWS_AS(quasi_ndm_to_awareness(bad), ConditionViolation);
}

TEST_CASE("awareness structure to quasi-NDM") {
  AwarenessStructure a(1, {"s", "t"});
  a.add_access(1, 0, 1);
  a.add_access(1, 1, 1);
  a.add_awareness(1, 0, L("p"));
  DoxasticModel q = awareness_to_quasi_ndm(a);
  CHECK(q.doxastic(1, 0).empty());
  CHECK_FALSE(eval_ndm(q, 0, P("Exp[1] p")));
  CHECK_FALSE(eval_awareness(a, 0, L("X[1] p")));

  AwarenessStructure blank(2, {"s"});
  for (int i = 1; i <= 2; ++i) blank.add_access(i, 0, 0);
  DoxasticModel qb = awareness_to_quasi_ndm(blank);
  CHECK(qb.doxastic(1, 0).empty());
  CHECK(check_conditions(qb).is_quasi_ndm());

  AwarenessStructure dead(1, {"s"});
  CHECK_THROWS_AS(awareness_to_quasi_ndm(dead), NotSerial);
}

TEST_CASE("conversions with awareness structures preserve truth") {
  std::mt19937_64 rng(606);
  FormulaGenerator gen(607, {4, 2, 3});
  for (int k = 0; k < 150; ++k) {
    Formula f = gen.formula();
    DoxasticModel q = oracle::random_model(rng, {}, false);
    AwarenessStructure a = quasi_ndm_to_awareness(q);
    CHECK(oracle::serial(a));
    for (std::size_t w = 0; w < q.world_count(); ++w)
      CHECK(oracle::truth(q, w, f) == oracle::truth(a, w, translate(f)));

    AwarenessStructure b = oracle::random_awareness(rng, {});
    DoxasticModel qb = awareness_to_quasi_ndm(b);
    CHECK(oracle::quasi_conditions(qb));
    for (std::size_t s = 0; s < b.state_count(); ++s)
      CHECK(oracle::truth(b, s, translate(f)) == oracle::truth(qb, s, f));
  }
}

TEST_CASE("awareness JSON round trip") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 20; ++k) {
    AwarenessStructure m = oracle::random_awareness(rng, {});
    AwarenessStructure back = awareness_from_json(to_json(m));
    CHECK(back.state_ids() == m.state_ids());
    CHECK(back.valuation() == m.valuation());
    for (int i = 1; i <= m.agents(); ++i)
      for (std::size_t s = 0; s < m.state_count(); ++s) {
        CHECK(back.access(i, s) == m.access(i, s));
        CHECK(back.awareness(i, s) == m.awareness(i, s));
      }
  }
}
