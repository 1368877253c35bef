#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fgb/level_function.hpp"
#include "test_util.hpp"

using namespace fgb;
using namespace fgb::testutil;

namespace {
ReducedWord W(const std::string& s, int rank = 2) {
  return ReducedWord::parse(rank, s);
}
BoundaryPoint P(const std::string& s, int rank = 2) {
  return BoundaryPoint::parse(rank, s);
}
RelationSpec R(const std::string& s, int rank = 2) {
  return RelationSpec::parse(rank, s);
}
}  // namespace

TEST_CASE("cylinder indicators") {
  LevelFunction pa = LevelFunction::cylinder_p(W("a"));
  CHECK(pa.level() == 1);
  CHECK(pa.coefficients() == std::vector<Int>{1, 0, 0, 0});
  CHECK(pa.evaluate(P("1|a")) == 1);
  CHECK(LevelFunction::cylinder_p(W("ab")).evaluate(P("a|B")) == 0);
  CHECK_THROWS_AS(LevelFunction::cylinder_p(W("1")), std::invalid_argument);

  LevelFunction qa = LevelFunction::cylinder_q(W("a"));
  CHECK(qa.coefficients() == std::vector<Int>{1, 1, 0, 0});
  CHECK(qa == LevelFunction::cylinder_q(W("A")));
}

TEST_CASE("level-1 cylinders partition the boundary") {
  for (int d : {2, 3}) {
    for (int n = 1; n <= 3; ++n) {
      LevelFunction sum = LevelFunction::constant(d, 0);
      for (const ReducedWord& w : words_of_length(d, n))
        sum = sum + LevelFunction::cylinder_p(w);
      CHECK(sum == LevelFunction::constant(d, 1));
    }
  }
}

TEST_CASE("refinement") {
  LevelFunction pa = LevelFunction::cylinder_p(W("a"));
  LevelFunction r2 = pa.refined(2);
  CHECK(r2.level() == 2);
  // 1 exactly on the three reduced extensions of a.
  int ones = 0;
  auto words = words_of_length(2, 2);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (r2.coefficients()[i] == 1) {
      ++ones;
      CHECK(words[i].at(0) == Letter(1, false));
    }
  }
  CHECK(ones == 3);
  CHECK(pa.refined(1) == pa);
  CHECK(pa.refined(3).coefficients().size() == 36);
  CHECK(r2 == pa);  // same function
  CHECK_THROWS_AS(r2.refined(1), std::invalid_argument);
}

TEST_CASE("evaluation is stable under refinement") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    ReducedWord w = random_nonempty_word(rng, 2, 3);
    LevelFunction f = LevelFunction::cylinder_q(w);
    BoundaryPoint x = random_point(rng, 2, 2, 3);
    CHECK(f.evaluate(x) == f.refined(f.level() + 2).evaluate(x));
  }
}

TEST_CASE("translation") {
  LevelFunction pA = LevelFunction::cylinder_p(W("A"));
  LevelFunction lhs = pA.translated(W("a"));
  LevelFunction rhs =
      LevelFunction::constant(2, 1) - LevelFunction::cylinder_p(W("a"));
  CHECK(lhs == rhs);
  // Check on every level-1 cylinder as well.
  for (const ReducedWord& w : words_of_length(2, 1)) {
    BoundaryPoint x = limit_point(w, Sign::plus);
    CHECK(lhs.evaluate(x) == rhs.evaluate(x));
  }

  LevelFunction qa = LevelFunction::cylinder_q(W("a"));
  CHECK(qa.translated(W("1")) == qa);
  CHECK(qa.translated(W("a")).evaluate(P("1|a")) == 1);
}

TEST_CASE("translation matches the action pointwise") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    ReducedWord g = random_word(rng, 2, i % 5);
    ReducedWord w = random_nonempty_word(rng, 2, 3);
    LevelFunction f = LevelFunction::cylinder_p(w);
    BoundaryPoint x = random_point(rng, 2, 2, 3);
    CHECK(f.translated(g).evaluate(x) == f.evaluate(act(inverse(g), x)));
  }
}

TEST_CASE("translation composes and respects refinement") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 200; ++i) {
    ReducedWord g = random_word(rng, 2, i % 4);
    ReducedWord h = random_word(rng, 2, (i + 1) % 4);
    LevelFunction f =
        LevelFunction::cylinder_q(random_nonempty_word(rng, 2, 2));
    CHECK(f.translated(h).translated(g) == f.translated(multiply(g, h)));
    CHECK(f.refined(f.level() + 1).translated(g) == f.translated(g));
  }
}

TEST_CASE("minimization gives canonical forms") {
  // A level-2 table that is constant on sibling blocks collapses.
  std::vector<Int> table(12, Int(7));
  LevelFunction f = LevelFunction::from_coefficients(2, 2, table);
  CHECK(f.level() == 1);
  CHECK(f == LevelFunction::constant(2, 7));
  CHECK(LevelFunction::constant(2, 0).level() == 1);
}

TEST_CASE("invariance checks") {
  CHECK(is_R_invariant(LevelFunction::cylinder_q(W("a")), R("S")));
  CHECK_FALSE(is_R_invariant(LevelFunction::cylinder_p(W("a")), R("a")));
  CHECK(is_R_invariant(
      LevelFunction::cylinder_q(W("a")).translated(W("b")), R("a")));
  CHECK(is_R_invariant(LevelFunction::constant(2, 5), R("S")));
  CHECK_FALSE(is_R_invariant(LevelFunction::cylinder_q(W("a")), R("ab")));
}

TEST_CASE("invariance agrees with a class-sampling oracle") {
  // Oracle: enumerate translates act(g, w^{+-inf}) for all g up to |g| <=
  // level + 3 plus deeper samples, and compare values directly.
  std::mt19937_64 rng(21);
  for (const std::string& rel : {std::string("S"), std::string("a")}) {
    RelationSpec spec = R(rel);
    for (int i = 0; i < 60; ++i) {
      int level = 1 + i % 2;
      std::vector<Int> table(count_words(2, level));
      for (Int& c : table)
        c = static_cast<int>(rng() % 3) - 1;
      LevelFunction f = LevelFunction::from_coefficients(2, level, table);
      bool oracle = true;
      for (const ReducedWord& w : spec.symmetrized()) {
        BoundaryPoint plus = limit_point(w, Sign::plus);
        BoundaryPoint minus = limit_point(w, Sign::minus);
        for (const ReducedWord& g : words_up_to_length(2, level + 3))
          if (f.evaluate(act(g, plus)) != f.evaluate(act(g, minus)))
            oracle = false;
        for (int k = 0; k < 50; ++k) {
          ReducedWord g = random_word(rng, 2, level + 4 + k % 3);
          if (f.evaluate(act(g, plus)) != f.evaluate(act(g, minus)))
            oracle = false;
        }
      }
      CHECK(is_R_invariant(f, spec) == oracle);
    }
  }
}

TEST_CASE("invariant bases") {
  auto full = invariant_basis(2, 1, R("S"));
  REQUIRE(full.size() == 2);
  CHECK(full[0] == LevelFunction::cylinder_q(W("a")));
  CHECK(full[1] == LevelFunction::cylinder_q(W("b")));

  auto partial = invariant_basis(2, 1, R("a"));
  REQUIRE(partial.size() == 3);
  CHECK(partial[0] == LevelFunction::cylinder_q(W("a")));
  CHECK(partial[1] == LevelFunction::cylinder_p(W("b")));
  CHECK(partial[2] == LevelFunction::cylinder_p(W("B")));

  CHECK(invariant_basis(2, 1, R("none")).size() == 4);
  CHECK(invariant_basis(2, 2, R("S")).size() == 6);

  // Every basis element is invariant, and they span the invariant functions:
  // each random invariant function has constant values on components.
  InvariantBasis b = InvariantBasis::build(2, R("S"));
  for (const LevelFunction& f : invariant_basis(2, 2, R("S")))
    CHECK(is_R_invariant(f, R("S")));
  // q[aa] and the b-translate of q[a] are both constant on glued classes;
  // q[ab] is not (the class of a b^inf separates it).
  LevelFunction g = LevelFunction::cylinder_q(W("aa")) +
                    LevelFunction::cylinder_q(W("a")).translated(W("b"));
  CHECK(is_R_invariant(g, R("S")));
  CHECK(b.function_of(b.coordinates(g)) == g);
  CHECK_FALSE(is_R_invariant(LevelFunction::cylinder_q(W("ab")), R("S")));
}

TEST_CASE("json serialization") {
  CHECK(LevelFunction::cylinder_p(W("a")).to_json() ==
        R"({"d":2,"level":1,"coeffs":{"a":1,"A":0,"b":0,"B":0}})");
  CHECK(LevelFunction::constant(2, -3).to_json() ==
        R"({"d":2,"level":1,"coeffs":{"a":-3,"A":-3,"b":-3,"B":-3}})");
}
