#include <gtest/gtest.h>

#include "scat/compare.hpp"
#include "scat/error.hpp"
#include "scat/oracle.hpp"
#include "support.hpp"

using namespace scat;
using scat::test::T;

namespace {

FiniteFn F(std::string_view s) { return parse_finite_fn(s); }

// Every function {0..a-1} -> {0..b-1} for 1 <= a, b <= max_size.
std::vector<FiniteFn> all_functions(std::size_t max_size) {
  std::vector<FiniteFn> out;
  for (std::size_t a = 1; a <= max_size; ++a) {
    for (std::size_t b = 1; b <= max_size; ++b) {
      std::vector<std::size_t> v(a, 0);
      for (;;) {
        out.push_back(make_finite_fn(a, b, v));
        std::size_t i = 0;
        while (i < a && ++v[i] == b) v[i++] = 0;
        if (i == a) break;
      }
    }
  }
  return out;
}

}  // namespace

TEST(Oracle, BruteForce) {
  EXPECT_TRUE(brute_force_le(F("3 2 0 1 1"), F("5 3 0 1 2 2 2")));
  EXPECT_TRUE(brute_force_le(F("4 3 2 0 1 2"), F("4 3 2 0 1 2")));
  EXPECT_FALSE(brute_force_le(F("3 3 0 1 2"), F("4 2 0 1 1 0")));
}

TEST(Oracle, ImageFormula) {
  EXPECT_TRUE(image_formula_le(F("2 2 0 1"), F("3 3 0 1 2")));
  EXPECT_TRUE(image_formula_le(F("3 3 0 1 2"), F("3 3 2 1 0")));
  EXPECT_FALSE(image_formula_le(F("4 4 0 1 2 3"), F("2 1 0 0")));
}

TEST(Oracle, TermOf) {
  EXPECT_EQ(term_of(F("3 2 1 1 1")), T("one"));
  EXPECT_EQ(term_of(F("4 4 3 1 0 2")), T("4*one"));
  EXPECT_EQ(term_of(F("3 3 0 2 2")), T("2*one"));
}

TEST(Oracle, SerializesAndValidates) {
  EXPECT_EQ(to_string(F(" 3 2  0 1 1 ")), "3 2 0 1 1");
  EXPECT_THROW(F("3 2 0 1"), ParseError);
  EXPECT_THROW(F("3 2 0 1 2"), ParseError);
  EXPECT_THROW(F("0 2"), ParseError);
  EXPECT_THROW(F("1 1 0 0"), ParseError);
  EXPECT_THROW(make_finite_fn(2, 1, {0, 1}), std::invalid_argument);
  EXPECT_THROW(make_finite_fn(2, 2, {0}), std::invalid_argument);
}

TEST(Oracle, FormulaAndEngineAgreeExhaustively) {
  auto fns = all_functions(3);
  for (const FiniteFn& f : fns) {
    for (const FiniteFn& g : fns) {
      bool brute = brute_force_le(f, g);
      ASSERT_EQ(brute, image_formula_le(f, g)) << to_string(f) << " | " << to_string(g);
      Verdict v = compare(term_of(f), term_of(g));
      ASSERT_EQ(v.outcome, brute ? Outcome::le : Outcome::not_le) << to_string(f) << " | " << to_string(g);
    }
  }
}
