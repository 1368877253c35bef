#pragma once

#include <string>
#include <utility>

#include "fgb/word.hpp"

namespace fgb {

enum class Sign { plus, minus };

// Eventually periodic point of the boundary of the free group: the infinite
// reduced word u v v v ... in canonical form. Canonical means:
//   - v nonempty, cyclically reduced, primitive;
//   - the stream u v v ... is reduced at every junction;
//   - u is empty or ends in a letter different from the last letter of v
//     (otherwise the preperiod could be shortened by rotating the period).
// The canonical pair (u, v) is unique per infinite word, so structural
// equality is point equality.
class BoundaryPoint {
 public:
  // Canonicalizes (rotates the period, shortens the preperiod, replaces the
  // period by its primitive root). Throws if the stream u v v ... is not a
  // reduced infinite word.
  static BoundaryPoint make(const ReducedWord& preperiod,
                            const ReducedWord& period);

  const ReducedWord& preperiod() const { return preperiod_; }
  const ReducedWord& period() const { return period_; }
  int rank() const { return preperiod_.rank(); }

  // Text form "u|v" with "1" for the empty preperiod, e.g. "a|b" = a b^inf.
  static BoundaryPoint parse(int rank, const std::string& text);
  std::string str() const;

  friend bool operator==(const BoundaryPoint& x, const BoundaryPoint& y) {
    return x.preperiod_ == y.preperiod_ && x.period_ == y.period_;
  }
  friend bool operator!=(const BoundaryPoint& x, const BoundaryPoint& y) {
    return !(x == y);
  }
  friend bool operator<(const BoundaryPoint& x, const BoundaryPoint& y) {
    if (x.preperiod_ != y.preperiod_) return x.preperiod_ < y.preperiod_;
    return x.period_ < y.period_;
  }

 private:
  BoundaryPoint(ReducedWord u, ReducedWord v)
      : preperiod_(std::move(u)), period_(std::move(v)) {}
  ReducedWord preperiod_;
  ReducedWord period_;
};

// Limit of (w^n) for sign plus, of (w^-n) for sign minus. w != e.
BoundaryPoint limit_point(const ReducedWord& w, Sign sign);

// Left translation: the canonical form of the reduced infinite word g.x.
BoundaryPoint act(const ReducedWord& g, const BoundaryPoint& x);

// First n letters of the infinite word.
ReducedWord point_prefix(const BoundaryPoint& x, std::size_t n);

// (w^{+inf}, w^{-inf}); these are the two fixed points of w and are distinct.
std::pair<BoundaryPoint, BoundaryPoint> fixed_points(const ReducedWord& g);

bool is_fixed(const ReducedWord& g, const BoundaryPoint& x);

}  // namespace fgb
