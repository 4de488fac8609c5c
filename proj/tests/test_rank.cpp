#include <gtest/gtest.h>

#include <random>

#include "scat/rank.hpp"
#include "scat/rewrite.hpp"
#include "scat/sample.hpp"
#include "support.hpp"

using namespace scat;
using scat::test::T;

namespace {

const Ordinal w = Ordinal::omega();

CbType type(Ordinal r, Degree d) { return CbType{std::move(r), d}; }

// Reference computation straight from the denotations: ranks of gluings are
// suprema, pointed gluings add one, and degrees count top-rank image points,
// with every vertical of a wedge sharing one point and the diagonal adding w.
CbType reference(const Term& t) {
  auto glue_type = [](const std::vector<CbType>& parts) {
    Ordinal r;
    for (const CbType& p : parts) r = std::max(r, p.rank);
    if (!r.is_successor()) return type(r, Degree::fin(0));
    Degree d = Degree::fin(0);
    for (const CbType& p : parts)
      if (p.rank == r) d = d + p.degree;
    return type(r, d);
  };
  auto of = [&](std::span<const Term> xs) {
    std::vector<CbType> out;
    for (const Term& x : xs) out.push_back(reference(x));
    return glue_type(out);
  };
  switch (t.kind()) {
    case Kind::empty: return type(Ordinal(), Degree::fin(0));
    case Kind::one: return type(Ordinal(1), Degree::fin(1));
    case Kind::min_fn: return type(t.ordinal(), Degree::fin(1));
    case Kind::max_fn:
      return type(t.ordinal(), t.ordinal().is_successor() ? Degree::omega() : Degree::fin(0));
    case Kind::glue: return of(t.summands());
    case Kind::omega: {
      CbType b = reference(t.body());
      return type(b.rank, b.rank.is_successor() ? Degree::omega() : Degree::fin(0));
    }
    case Kind::pgl: return type(succ(of(t.members()).rank), Degree::fin(1));
    case Kind::wedge: {
      Ordinal top;
      for (const auto& v : t.verticals()) top = std::max(top, succ(of(v).rank));
      CbType diag = of(t.diagonal());
      Ordinal r = std::max(top, diag.rank);
      Degree d = Degree::fin(top == r ? 1 : 0);
      if (diag.rank == r && diag.degree >= Degree::fin(1)) d = d + Degree::omega();
      return type(r, d);
    }
    default: throw std::logic_error("non-scattered");
  }
}

}  // namespace

TEST(Rank, TypesOfBasicTerms) {
  EXPECT_EQ(cb_type(T("min(w+1)")), type(w + Ordinal(1), Degree::fin(1)));
  EXPECT_EQ(cb_type(T("empty")), type(Ordinal(), Degree::fin(0)));
  EXPECT_EQ(cb_type(T("glue(one, one, one)")), type(Ordinal(1), Degree::fin(3)));
  EXPECT_EQ(cb_type(T("pgl{max(w)}")), type(w + Ordinal(1), Degree::fin(1)));
  EXPECT_EQ(cb_type(T("omega(pgl{max(w)})")), type(w + Ordinal(1), Degree::omega()));
  EXPECT_EQ(cb_type(T("wedge({max(w)} | {min(w+1)})")), type(w + Ordinal(1), Degree::omega()));
  EXPECT_EQ(cb_type(T("max(w)")), type(w, Degree::fin(0)));
  EXPECT_EQ(to_string(cb_type(T("omega(one)"))), "(1, w)");
  EXPECT_THROW(cb_type(T("idq")), std::domain_error);
}

TEST(Rank, SimpleCenteredCompact) {
  EXPECT_TRUE(is_simple(T("pgl{one}")));
  EXPECT_TRUE(is_simple(T("glue(min(w+1), max(w))")));
  EXPECT_FALSE(is_simple(T("omega(one)")));

  EXPECT_TRUE(is_centered(T("pgl{max(w)}")));
  EXPECT_FALSE(is_centered(T("omega(min(w+1))")));
  EXPECT_TRUE(is_centered(T("one")));
  EXPECT_FALSE(is_centered(T("glue(one, pgl{one})")));
  EXPECT_FALSE(is_centered(T("max(w)")));
  EXPECT_FALSE(is_centered(T("empty")));
  EXPECT_THROW(is_centered(T("min(3)")), std::invalid_argument);
  EXPECT_THROW(is_centered(T("glue(one)")), std::invalid_argument);

  EXPECT_TRUE(is_compact_domain(T("min(w^2+1)")));
  EXPECT_FALSE(is_compact_domain(T("omega(one)")));
  EXPECT_TRUE(is_compact_domain(T("glue(min(2), pgl{one})")));
  EXPECT_FALSE(is_compact_domain(T("max(w)")));
  EXPECT_FALSE(is_compact_domain(T("wedge({one} | {one})")));
  EXPECT_TRUE(is_compact_domain(T("wedge({one}, {pgl{one}} | {})")));
}

TEST(Rank, MaxFunctionsMatchTheirExpansion) {
  for (const char* r : {"1", "2", "3", "w+1", "w+2", "w*2+1"}) {
    Ordinal a = parse_ordinal(r);
    EXPECT_EQ(cb_type(max_form(a)), type(a, Degree::omega())) << r;
  }
}

TEST(Rank, AgreesWithReferenceOnRandomTerms) {
  std::mt19937 rng(31337);
  for (int i = 0; i < 5000; ++i) {
    Term t = random_term(rng, 5);
    EXPECT_EQ(cb_type(t), reference(t)) << to_string(t);
    EXPECT_EQ(cb_type(Term::glue({t})), cb_type(t));
    EXPECT_EQ(cb_type(Term::omega(t)).rank, cb_type(t).rank);
    CbType p = cb_type(Term::pgl({t}));
    EXPECT_EQ(p.rank, succ(cb_type(t).rank));
    EXPECT_EQ(p.degree, Degree::fin(1));
    CbType ty = cb_type(t);
    EXPECT_EQ(ty.degree == Degree::fin(0), !ty.rank.is_successor()) << to_string(t);
  }
}

TEST(Rank, RankOneDegreesCountImagePoints) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(cb_type(Term::copies(static_cast<std::size_t>(n), Term::one())).degree,
              Degree::fin(static_cast<std::uint64_t>(n)));
  }
}
