#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "fgb/boundary.hpp"
#include "fgb/quotient.hpp"
#include "fgb/word.hpp"

namespace fgb {

using Int = boost::multiprecision::cpp_int;

// Locally constant integer-valued function on the boundary, given by one
// exact integer per reduced word of the stored level. Comparison is as
// functions (representations are refined to a common level); the factory
// operations return the minimal-level representation.
class LevelFunction {
 public:
  static LevelFunction constant(int rank, Int value);
  // Takes coefficients indexed like words_of_length(rank, level); minimizes.
  static LevelFunction from_coefficients(int rank, int level,
                                         std::vector<Int> coeffs);
  // Indicator of the cylinder of all streams beginning with w. w != e.
  static LevelFunction cylinder_p(const ReducedWord& w);
  // p[w] + p[w^-1].
  static LevelFunction cylinder_q(const ReducedWord& w);

  int rank() const { return rank_; }
  int level() const { return level_; }
  const std::vector<Int>& coefficients() const { return coeffs_; }

  Int evaluate(const BoundaryPoint& x) const;
  // Same function represented at level m >= level().
  LevelFunction refined(int m) const;
  LevelFunction minimized() const;
  // (g f)(x) = f(g^-1 x); result is minimized.
  LevelFunction translated(const ReducedWord& g) const;

  bool is_constant() const;

  LevelFunction operator+(const LevelFunction& o) const;
  LevelFunction operator-(const LevelFunction& o) const;
  LevelFunction operator-() const;
  LevelFunction operator*(const Int& c) const;

  friend bool operator==(const LevelFunction& f, const LevelFunction& g);
  friend bool operator!=(const LevelFunction& f, const LevelFunction& g) {
    return !(f == g);
  }

  // {"d": .., "level": .., "coeffs": {word: value, ...}} with keys in
  // length-lexicographic order.
  std::string to_json() const;

 private:
  LevelFunction(int rank, int level, std::vector<Int> coeffs)
      : rank_(rank), level_(level), coeffs_(std::move(coeffs)) {}
  int rank_;
  int level_;
  std::vector<Int> coeffs_;
};

// True iff f is constant on every class of the relation; checked against the
// complete finite family of classes meeting the function's level.
bool is_R_invariant(const LevelFunction& f, const RelationSpec& spec);

// Partition of the level-n words into constraint components: functions
// constant on every class are exactly the functions constant on each
// component.
struct InvariantBasis {
  int rank = 0;
  int level = 0;
  long long word_count = 0;
  std::vector<int> component_of;        // word index -> component index
  std::vector<long long> representative;  // component -> least word index
  int count() const { return static_cast<int>(representative.size()); }

  static InvariantBasis build(int level, const RelationSpec& spec);

  // Coordinates of a level-`level` coefficient table in the component basis;
  // throws if the table is not constant on some component.
  std::vector<Int> coordinates(const std::vector<Int>& table) const;
  std::vector<Int> coordinates(const LevelFunction& f) const;
  // Coefficient table of a coordinate vector.
  std::vector<Int> table(const std::vector<Int>& coords) const;
  LevelFunction function_of(const std::vector<Int>& coords) const;
};

// Integer lattice basis of the invariant level-n functions: the component
// indicators, ordered by least member word.
std::vector<LevelFunction> invariant_basis(int d, int n,
                                           const RelationSpec& spec);

}  // namespace fgb
