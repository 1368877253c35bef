#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fgb/boundary.hpp"
#include "fgb/word.hpp"

namespace fgb {

// Finite set W of nonidentity words; induces the equivalence relation gluing
// g w^{+inf} with g w^{-inf} for all g and w in W (closed under inversion).
struct RelationSpec {
  int rank;
  std::vector<ReducedWord> words;  // sorted, deduplicated, identity rejected

  RelationSpec(int r, std::vector<ReducedWord> ws);
  static RelationSpec empty(int rank) { return RelationSpec(rank, {}); }
  static RelationSpec full_generators(int rank);
  // "a,b" for W = {a, b}; the token "S" expands to all generators;
  // "" and "none" give the empty relation (pure diagonal).
  static RelationSpec parse(int rank, const std::string& text);
  std::string str() const;

  bool is_empty() const { return words.empty(); }
  friend bool operator==(const RelationSpec& a, const RelationSpec& b) {
    return a.rank == b.rank && a.words == b.words;
  }
  bool is_full_generators() const;
  // True iff every word is a single uninverted generator.
  bool is_generator_subset() const;
  // Members of W together with their inverses, deduplicated.
  std::vector<ReducedWord> symmetrized() const;
};

// An equivalence class: one point, or the glued pair, sorted.
struct ClassRep {
  std::vector<BoundaryPoint> points;
  std::string str() const;
  friend bool operator==(const ClassRep& a, const ClassRep& b) {
    return a.points == b.points;
  }
  friend bool operator<(const ClassRep& a, const ClassRep& b);
};

// |g| <= |g w^k| for all k; such g leave the first |g|-|w| letters of both
// g w^{+inf} and g w^{-inf} untouched.
bool is_normalized_for(const ReducedWord& g, const ReducedWord& w);

bool related(const BoundaryPoint& x, const BoundaryPoint& y,
             const RelationSpec& spec);

ClassRep class_of(const BoundaryPoint& x, const RelationSpec& spec);

// All two-element classes whose points differ within their first n letters,
// deduplicated and sorted. Complete: any class visible to a level-n function
// arises from a normalized g with |g| < n + |w|.
std::vector<ClassRep> classes_meeting_level(int n, const RelationSpec& spec);

// h = x w y^-1 with geodesic junctions and the least admissible w; the limits
// of h extend x forwards and y backwards. Requires |x| = |y|, x != y, both
// nonempty.
ReducedWord density_witness(const ReducedWord& x, const ReducedWord& y);

// (g, s) such that the translated indicator g q[s] takes different values at
// x and y. Requires x, y not glued by the full-generator relation.
std::pair<ReducedWord, Letter> separating_element(const BoundaryPoint& x,
                                                  const BoundaryPoint& y);

// Value of the translated two-sided cylinder indicator (g q[s])(x); evaluated
// through the action, independently of the cylinder-function machinery.
int translated_q_value(const ReducedWord& g, const Letter& s,
                       const BoundaryPoint& x);

}  // namespace fgb
