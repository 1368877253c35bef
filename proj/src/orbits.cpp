#include "fgb/orbits.hpp"

#include <stdexcept>

namespace fgb {

ReducedWord orbit_key(const BoundaryPoint& x) {
  ReducedWord a = conjugacy_key(x.period());
  ReducedWord b = conjugacy_key(inverse(x.period()));
  return a < b ? a : b;
}

ReducedWord stabilizer_witness(const BoundaryPoint& x) {
  // u v u^-1 is reduced: the canonical form forbids both junction
  // cancellations, and it fixes u v^inf.
  ReducedWord w =
      multiply(multiply(x.preperiod(), x.period()), inverse(x.preperiod()));
  if (w.length() !=
      2 * x.preperiod().length() + x.period().length())
    throw std::logic_error("stabilizer witness is not a geodesic conjugate");
  return w;
}

bool in_X(const BoundaryPoint& x, const RelationSpec& spec) {
  if (x.rank() != spec.rank) throw std::invalid_argument("in_X: rank mismatch");
  ReducedWord g = stabilizer_witness(x);
  if (!is_fixed(g, x)) throw std::logic_error("stabilizer witness failed");
  return true;  // every representable point is eventually periodic
}

bool in_Y(const BoundaryPoint& x, const RelationSpec& spec) {
  if (x.rank() != spec.rank) throw std::invalid_argument("in_Y: rank mismatch");
  const ReducedWord key = orbit_key(x);
  for (const ReducedWord& w : spec.words) {
    auto [a, c] = cyclic_reduce(w);
    ReducedWord p = primitive_root(c).first;
    ReducedWord pk = conjugacy_key(p);
    ReducedWord pki = conjugacy_key(inverse(p));
    if (key == (pk < pki ? pk : pki)) return true;
  }
  return false;
}

OrbitDecision same_orbit(const BoundaryPoint& x, const BoundaryPoint& y,
                         const RelationSpec& spec) {
  if (!in_Y(x, spec) || !in_Y(y, spec))
    throw std::invalid_argument("same_orbit: points outside the glued locus");
  OrbitDecision d;
  if (orbit_key(x) != orbit_key(y)) return d;
  // Equal keys filter; the actual decision transports y's class onto x's by
  // the preperiod quotient and verifies through the relation.
  ReducedWord g = multiply(x.preperiod(), inverse(y.preperiod()));
  if (!related(act(g, y), x, spec)) {
    throw std::logic_error("orbit key matched but transport failed");
  }
  d.same = true;
  d.translator = g;
  return d;
}

OrbitCount orbit_count(const RelationSpec& spec, int check_bound) {
  if (spec.is_empty())
    throw std::invalid_argument("orbit_count: empty relation set");
  if (!spec.is_generator_subset())
    throw std::invalid_argument(
        "orbit_count: relation must be a subset of the generators");
  OrbitCount out;
  for (const ReducedWord& s : spec.words) {
    BoundaryPoint p = limit_point(s, Sign::plus);
    bool fresh = true;
    for (const BoundaryPoint& rep : out.representatives)
      if (same_orbit(p, rep, spec).same) fresh = false;
    if (fresh) out.representatives.push_back(p);
  }
  out.count = static_cast<int>(out.representatives.size());
  for (const ReducedWord& s : spec.words) {
    BoundaryPoint p = limit_point(s, Sign::plus);
    for (const ReducedWord& g : words_up_to_length(spec.rank, check_bound)) {
      BoundaryPoint moved = act(g, p);
      bool covered = false;
      for (const BoundaryPoint& rep : out.representatives)
        if (same_orbit(moved, rep, spec).same) {
          covered = true;
          break;
        }
      if (!covered)
        throw std::logic_error("translate escaped the counted orbits");
      ++out.points_verified;
    }
  }
  return out;
}

}  // namespace fgb
