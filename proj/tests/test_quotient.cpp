#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "fgb/quotient.hpp"
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

TEST_CASE("relation spec parsing") {
  CHECK(R("S").words.size() == 2);
  CHECK(R("S", 3).words.size() == 3);
  CHECK(R("a,b") == R("S"));
  CHECK(R("none").is_empty());
  CHECK(R("a").is_generator_subset());
  CHECK_FALSE(R("ab").is_generator_subset());
  CHECK_FALSE(R("A").is_generator_subset());
  CHECK(R("S").is_full_generators());
  CHECK_THROWS_AS(R("1"), std::invalid_argument);
  CHECK_THROWS_AS(R("a,,b"), std::invalid_argument);
  CHECK(R("a,a").words.size() == 1);  // deduplicated
}

TEST_CASE("normalization test") {
  CHECK(is_normalized_for(W("1"), W("a")));
  CHECK(is_normalized_for(W("b"), W("a")));
  CHECK_FALSE(is_normalized_for(W("ba"), W("a")));  // ba a^-1 is shorter
  CHECK_FALSE(is_normalized_for(W("bA"), W("a")));
  CHECK(is_normalized_for(W("ab"), W("a")));
}

TEST_CASE("related on the defining pairs") {
  CHECK(related(P("1|a"), P("1|A"), R("a")));
  CHECK_FALSE(related(P("1|a"), P("1|b"), R("a")));
  CHECK(related(P("b|a"), P("b|A"), R("a")));
  CHECK(related(P("1|a"), P("1|a"), R("none")));  // reflexive
  CHECK_FALSE(related(P("1|a"), P("1|A"), R("none")));
  CHECK_FALSE(related(P("1|a"), P("1|A"), R("b")));
  // Non-generator relation words work through their primitive period.
  CHECK(related(P("1|ab"), P("1|BA"), R("ab")));
  CHECK(related(P("1|ab"), P("1|BA"), R("abab")));
}

TEST_CASE("related is symmetric and invariant under the action") {
  std::mt19937_64 rng(41);
  RelationSpec spec = R("a,b");
  for (int i = 0; i < 300; ++i) {
    BoundaryPoint x = random_point(rng, 2, 2, 3);
    BoundaryPoint y = random_point(rng, 2, 2, 3);
    ReducedWord g = random_word(rng, 2, i % 6);
    bool r = related(x, y, spec);
    CHECK(r == related(y, x, spec));
    CHECK(r == related(act(g, x), act(g, y), spec));
  }
}

TEST_CASE("related is transitive on sampled class members") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    ReducedWord w = random_nonempty_word(rng, 2, 4);
    RelationSpec spec(2, {w});
    ReducedWord g = random_word(rng, 2, 4);
    BoundaryPoint x = act(g, limit_point(w, Sign::plus));
    BoundaryPoint y = act(g, limit_point(w, Sign::minus));
    BoundaryPoint z = act(multiply(g, w), limit_point(w, Sign::plus));
    CHECK(related(x, y, spec));
    CHECK(related(x, z, spec));  // z equals x as a point of the class
    CHECK(related(y, z, spec));
  }
}

TEST_CASE("class_of") {
  CHECK(class_of(P("1|b"), R("a")).points.size() == 1);
  ClassRep glued = class_of(P("1|a"), R("a"));
  REQUIRE(glued.points.size() == 2);
  CHECK(glued.points[0] == P("1|a"));
  CHECK(glued.points[1] == P("1|A"));
  ClassRep shifted = class_of(P("a|b"), R("b"));
  REQUIRE(shifted.points.size() == 2);
  CHECK(std::count(shifted.points.begin(), shifted.points.end(), P("a|B")) == 1);
}

TEST_CASE("classes meeting a level") {
  auto classes = classes_meeting_level(1, R("a"));
  ClassRep base{{P("1|a"), P("1|A")}};
  CHECK(std::count(classes.begin(), classes.end(), base) == 1);
  // Translates that keep a common level-1 prefix are filtered out.
  for (const ClassRep& c : classes)
    CHECK(point_prefix(c.points[0], 1) != point_prefix(c.points[1], 1));
  // Deduplication: g = a, w = a reproduces the base pair.
  CHECK(related(act(W("a"), P("1|a")), P("1|a"), R("a")));

  auto level1_full = classes_meeting_level(1, R("S"));
  CHECK(level1_full.size() == 2);  // {a^inf, a^-inf} and {b^inf, b^-inf}
  for (const ClassRep& c : classes_meeting_level(2, R("S"))) {
    CHECK(c.points.size() == 2);
    CHECK(related(c.points[0], c.points[1], R("S")));
  }
}

TEST_CASE("classes meeting a level is complete for visible gluings") {
  // Brute force: enumerate unnormalized g of length <= 4 and compare the sets
  // of level-2 constraint pairs.
  RelationSpec spec = R("a");
  std::set<std::pair<std::string, std::string>> brute;
  for (const ReducedWord& w : spec.symmetrized()) {
    for (const ReducedWord& g : words_up_to_length(2, 4)) {
      BoundaryPoint x = act(g, limit_point(w, Sign::plus));
      BoundaryPoint y = act(g, limit_point(w, Sign::minus));
      std::string px = point_prefix(x, 2).str(), py = point_prefix(y, 2).str();
      if (px == py) continue;
      brute.insert({std::min(px, py), std::max(px, py)});
    }
  }
  std::set<std::pair<std::string, std::string>> enumerated;
  for (const ClassRep& c : classes_meeting_level(2, spec)) {
    std::string px = point_prefix(c.points[0], 2).str();
    std::string py = point_prefix(c.points[1], 2).str();
    enumerated.insert({std::min(px, py), std::max(px, py)});
  }
  CHECK(brute == enumerated);
}

TEST_CASE("density witness examples") {
  CHECK(density_witness(W("a"), W("b")) == W("aaB"));
  ReducedWord h = density_witness(W("a"), W("A"));
  CHECK(point_prefix(limit_point(h, Sign::plus), 1) == W("a"));
  CHECK(point_prefix(limit_point(h, Sign::minus), 1) == W("A"));
  ReducedWord h2 = density_witness(W("ab"), W("aB"));
  CHECK(point_prefix(limit_point(h2, Sign::plus), 2) == W("ab"));
  CHECK(point_prefix(limit_point(h2, Sign::minus), 2) == W("aB"));
  CHECK_THROWS_AS(density_witness(W("a"), W("a")), std::invalid_argument);
  CHECK_THROWS_AS(density_witness(W("a"), W("ab")), std::invalid_argument);
  CHECK_THROWS_AS(density_witness(W("1"), W("1")), std::invalid_argument);
}

TEST_CASE("density witness properties on random prefixes") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 400; ++i) {
    int len = 1 + i % 6;
    ReducedWord x = random_word(rng, 2, len);
    ReducedWord y = random_word(rng, 2, len);
    if (x == y) continue;
    ReducedWord h = density_witness(x, y);
    // h = x w y^-1 as a geodesic product.
    ReducedWord w = multiply(multiply(inverse(x), h), y);
    CHECK(is_geodesic_concat(x, w, y));
    CHECK(point_prefix(limit_point(h, Sign::plus), x.length()) == x);
    CHECK(point_prefix(limit_point(h, Sign::minus), y.length()) == y);
  }
}

TEST_CASE("separating element examples") {
  auto [g1, s1] = separating_element(P("1|a"), P("1|b"));
  CHECK(g1 == W("1"));
  CHECK(s1.gen == 1);
  CHECK(translated_q_value(g1, s1, P("1|a")) == 1);
  CHECK(translated_q_value(g1, s1, P("1|b")) == 0);

  // Glued points cannot be separated.
  CHECK_THROWS_AS(separating_element(P("a|b"), P("a|B")),
                  std::invalid_argument);

  // Here q[a] alone fails (both points start with a or a^-1), so the
  // constructor must translate deeper.
  BoundaryPoint x = P("a|b"), y = P("A|b");
  auto [g2, s2] = separating_element(x, y);
  CHECK(translated_q_value(W("1"), Letter(1, false), x) ==
        translated_q_value(W("1"), Letter(1, false), y));
  CHECK(translated_q_value(g2, s2, x) != translated_q_value(g2, s2, y));
  CHECK(g2 == W("a"));
  CHECK(s2.gen == 2);
}

TEST_CASE("separating element separates random unglued pairs") {
  std::mt19937_64 rng(53);
  RelationSpec full = RelationSpec::full_generators(2);
  int tested = 0;
  while (tested < 400) {
    BoundaryPoint x = random_point(rng, 2, 3, 3);
    BoundaryPoint y = random_point(rng, 2, 3, 3);
    if (related(x, y, full)) continue;
    ++tested;
    auto [g, s] = separating_element(x, y);
    CHECK(translated_q_value(g, s, x) != translated_q_value(g, s, y));
  }
}
