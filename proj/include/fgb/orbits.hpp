#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgb/boundary.hpp"
#include "fgb/quotient.hpp"
#include "fgb/word.hpp"

namespace fgb {

// Conjugacy key of the primitive period, symmetrized under inversion; equal
// keys iff the periods are conjugate up to inversion.
ReducedWord orbit_key(const BoundaryPoint& x);

// Every eventually periodic point is fixed by some nontrivial element; the
// witness u v u^-1 for the canonical form (u, v).
ReducedWord stabilizer_witness(const BoundaryPoint& x);
bool in_X(const BoundaryPoint& x, const RelationSpec& spec);

// Membership in the glued locus: the class of x has two elements, i.e. the
// period of x is conjugate (up to inversion) to a relation generator.
bool in_Y(const BoundaryPoint& x, const RelationSpec& spec);

// Whether some group element moves the class of x to the class of y in the
// glued quotient; for points of the glued locus this is decided by the orbit
// key and witnessed by an explicit translator.
struct OrbitDecision {
  bool same = false;
  std::optional<ReducedWord> translator;
};
OrbitDecision same_orbit(const BoundaryPoint& x, const BoundaryPoint& y,
                         const RelationSpec& spec);

// Number of orbits in the glued locus, with a verification pass over all
// translates act(g, s^{+inf}), |g| <= check_bound.
struct OrbitCount {
  int count = 0;
  std::vector<BoundaryPoint> representatives;
  long long points_verified = 0;
};
OrbitCount orbit_count(const RelationSpec& spec, int check_bound);

}  // namespace fgb
