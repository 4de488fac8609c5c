#include <gtest/gtest.h>

#include <random>

#include "scat/error.hpp"
#include "scat/rewrite.hpp"
#include "scat/sample.hpp"
#include "scat/term.hpp"
#include "support.hpp"

using namespace scat;
using scat::test::T;

TEST(Term, ParsesAtomsAndConstructors) {
  Term m = T("min(w+1)");
  EXPECT_TRUE(m.is(Kind::min_fn));
  EXPECT_EQ(m.ordinal(), succ(Ordinal::omega()));
  EXPECT_EQ(T("glue(one, omega(one))"), Term::glue({Term::one(), Term::omega(Term::one())}));
  Term wdg = T("wedge({max(w)} | {min(w+1)})");
  EXPECT_EQ(wdg, Term::wedge({{Term::max_fn(Ordinal::omega())}}, {Term::min_fn(succ(Ordinal::omega()))}));
  EXPECT_EQ(T("3*one"), Term::copies(3, Term::one()));
  EXPECT_EQ(T("  pgl{ one ,omega(one) }"), Term::pgl({Term::omega(Term::one()), Term::one()}));
  EXPECT_EQ(T("wedge({one} | {})"), Term::wedge({{Term::one()}}, {}));
  EXPECT_TRUE(T("idq").is(Kind::id_q));
  EXPECT_TRUE(T("idbaire").is(Kind::id_baire));
  EXPECT_TRUE(T("empty").is(Kind::empty));
}

TEST(Term, RejectsMalformedInput) {
  EXPECT_THROW(T("min(w)"), ParseError);
  EXPECT_THROW(T("min(0)"), ParseError);
  EXPECT_THROW(T("pgl{}"), ParseError);
  EXPECT_THROW(T("wedge({one}, {one} | {})"), ParseError);
  EXPECT_THROW(T("wedge({} | {one})"), ParseError);
  EXPECT_THROW(T("glue(one, idq)"), ParseError);
  EXPECT_THROW(T("glue(one"), ParseError);
  EXPECT_THROW(T("ones"), ParseError);
  EXPECT_THROW(T("one one"), ParseError);
  try {
    T("glue(one, min(w))");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 14u);
  }
}

TEST(Term, ConstructorsEnforceInvariants) {
  EXPECT_THROW(Term::min_fn(Ordinal::omega()), std::invalid_argument);
  EXPECT_THROW(Term::pgl({}), std::invalid_argument);
  EXPECT_THROW(Term::wedge({}, {}), std::invalid_argument);
  EXPECT_THROW(Term::wedge({{}}, {}), std::invalid_argument);
  EXPECT_THROW(Term::wedge({{Term::one()}, {Term::one()}}, {}), std::invalid_argument);
  EXPECT_THROW(Term::omega(Term::id_q()), std::invalid_argument);
  EXPECT_THROW(Term::glue({Term::id_baire()}), std::invalid_argument);
}

TEST(Term, GlueIsAMultisetAndSetsAreSets) {
  Term a = Term::one();
  Term b = Term::omega(Term::one());
  EXPECT_EQ(Term::glue({a, b}), Term::glue({b, a}));
  EXPECT_NE(Term::glue({a, a}), Term::glue({a}));
  EXPECT_EQ(Term::pgl({a, b, a}), Term::pgl({b, a}));
  EXPECT_EQ(Term::wedge({{a}, {b}}, {a, a}), Term::wedge({{b}, {a}}, {a}));
}

TEST(Term, FormatsAndMeasures) {
  EXPECT_EQ(to_string(Term::one()), "one");
  EXPECT_TRUE(syntactic_cmp(Term::empty(), Term::one()) < 0);
  EXPECT_EQ(term_size(Term::glue({Term::one(), Term::one()})), 3u);
  EXPECT_EQ(to_string(T("wedge({max(w)}, {one} | {min(w+1)})")), "wedge({one}, {max(w)} | {min(w+1)})");
  EXPECT_EQ(to_string(T("2*one")), "glue(one, one)");
}

TEST(Term, SyntacticOrderIsTotalAndStructural) {
  std::mt19937 rng(11);
  std::vector<Term> ts;
  for (int i = 0; i < 300; ++i) ts.push_back(random_term(rng, 3));
  for (const Term& a : ts) {
    for (const Term& b : ts) {
      auto ab = syntactic_cmp(a, b);
      auto ba = syntactic_cmp(b, a);
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(ab < 0, ba > 0);
    }
  }
}

TEST(Term, RoundTripsThroughText) {
  std::mt19937 rng(12);
  for (int i = 0; i < 2000; ++i) {
    Term t = random_term_or_sentinel(rng, 4);
    EXPECT_EQ(parse_term(to_string(t)), t) << to_string(t);
    Term n = normalize(t);
    EXPECT_EQ(parse_term(to_string(n)), n) << to_string(n);
  }
}
