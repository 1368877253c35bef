#include "fgb/boundary.hpp"

#include <stdexcept>

namespace fgb {

namespace {

// Rotate the period one step to the right and drop the matching last letter
// of the preperiod: u'x . (v'x)^inf == u' . (xv')^inf.
void shorten_preperiod(std::vector<Letter>& u, std::vector<Letter>& v) {
  while (!u.empty() && u.back() == v.back()) {
    u.pop_back();
    v.insert(v.begin(), v.back());
    v.pop_back();
  }
}

}  // namespace

BoundaryPoint BoundaryPoint::make(const ReducedWord& preperiod,
                                  const ReducedWord& period) {
  require_same_rank(preperiod, period);
  if (period.empty())
    throw std::invalid_argument("boundary point needs a nonempty period");
  if (!is_cyclically_reduced(period))
    throw std::invalid_argument("period cycle \"" + period.str() +
                                "\" is not reduced");
  if (!preperiod.empty() && preperiod.back().is_inverse_of(period.front()))
    throw std::invalid_argument("preperiod-period junction of \"" +
                                preperiod.str() + "|" + period.str() +
                                "\" cancels");
  ReducedWord root = primitive_root(period).first;
  std::vector<Letter> u = preperiod.letters();
  std::vector<Letter> v = root.letters();
  shorten_preperiod(u, v);
  return BoundaryPoint(ReducedWord(preperiod.rank(), std::move(u)),
                       ReducedWord(preperiod.rank(), std::move(v)));
}

BoundaryPoint BoundaryPoint::parse(int rank, const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos || text.find('|', bar + 1) != std::string::npos)
    throw std::invalid_argument("boundary point text must be \"u|v\"");
  ReducedWord u = ReducedWord::parse(rank, text.substr(0, bar));
  ReducedWord v = ReducedWord::parse(rank, text.substr(bar + 1));
  return make(u, v);
}

std::string BoundaryPoint::str() const {
  return preperiod_.str() + "|" + period_.str();
}

BoundaryPoint limit_point(const ReducedWord& w, Sign sign) {
  if (w.empty()) throw std::invalid_argument("limit_point: empty word");
  if (sign == Sign::minus) return limit_point(inverse(w), Sign::plus);
  auto [a, c] = cyclic_reduce(w);
  return BoundaryPoint::make(a, primitive_root(c).first);
}

BoundaryPoint act(const ReducedWord& g, const BoundaryPoint& x) {
  if (g.rank() != x.rank())
    throw std::invalid_argument("act: rank mismatch");
  if (g.empty()) return x;
  // Cancellation against g consumes at most |g| letters of the stream, so a
  // prefix ending on a period boundary beyond |g| pins the result.
  const std::size_t vlen = x.period().length();
  const std::size_t periods = g.length() / vlen + 2;
  std::vector<Letter> head = x.preperiod().letters();
  for (std::size_t i = 0; i < periods; ++i)
    head.insert(head.end(), x.period().letters().begin(),
                x.period().letters().end());
  ReducedWord merged = multiply(g, ReducedWord(g.rank(), std::move(head)));
  return BoundaryPoint::make(merged, x.period());
}

ReducedWord point_prefix(const BoundaryPoint& x, std::size_t n) {
  std::vector<Letter> out;
  out.reserve(n);
  const auto& u = x.preperiod().letters();
  const auto& v = x.period().letters();
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(i < u.size() ? u[i] : v[(i - u.size()) % v.size()]);
  return ReducedWord(x.rank(), std::move(out));
}

std::pair<BoundaryPoint, BoundaryPoint> fixed_points(const ReducedWord& g) {
  if (g.empty()) throw std::invalid_argument("fixed_points: empty word");
  BoundaryPoint plus = limit_point(g, Sign::plus);
  BoundaryPoint minus = limit_point(g, Sign::minus);
  if (plus == minus) throw std::logic_error("coincident limit points");
  return {plus, minus};
}

bool is_fixed(const ReducedWord& g, const BoundaryPoint& x) {
  if (g.empty()) throw std::invalid_argument("is_fixed: empty word");
  return act(g, x) == x;
}

}  // namespace fgb
