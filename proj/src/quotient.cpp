#include "fgb/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fgb {

RelationSpec::RelationSpec(int r, std::vector<ReducedWord> ws) : rank(r) {
  if (rank < 2) throw std::invalid_argument("rank must be at least 2");
  for (const ReducedWord& w : ws) {
    if (w.rank() != rank)
      throw std::invalid_argument("relation word rank mismatch");
    if (w.empty())
      throw std::invalid_argument("identity is not allowed in a relation set");
  }
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  words = std::move(ws);
}

RelationSpec RelationSpec::full_generators(int rank) {
  std::vector<ReducedWord> ws;
  for (int g = 1; g <= rank; ++g)
    ws.emplace_back(rank, std::vector<Letter>{Letter(g, false)});
  return RelationSpec(rank, std::move(ws));
}

RelationSpec RelationSpec::parse(int rank, const std::string& text) {
  if (text.empty() || text == "none") return RelationSpec::empty(rank);
  if (text == "S") return full_generators(rank);
  std::vector<ReducedWord> ws;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw std::invalid_argument("empty token in relation list");
    ws.push_back(ReducedWord::parse(rank, tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return RelationSpec(rank, std::move(ws));
}

std::string RelationSpec::str() const {
  if (words.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) s.push_back(',');
    s += words[i].str();
  }
  return s;
}

bool RelationSpec::is_full_generators() const {
  return is_generator_subset() && static_cast<int>(words.size()) == rank;
}

bool RelationSpec::is_generator_subset() const {
  for (const ReducedWord& w : words)
    if (w.length() != 1 || w.front().inverted) return false;
  return true;
}

std::vector<ReducedWord> RelationSpec::symmetrized() const {
  std::vector<ReducedWord> out = words;
  for (const ReducedWord& w : words) out.push_back(inverse(w));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string ClassRep::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) s.push_back(',');
    s += points[i].str();
  }
  s.push_back('}');
  return s;
}

bool operator<(const ClassRep& a, const ClassRep& b) {
  return a.points < b.points;
}

bool is_normalized_for(const ReducedWord& g, const ReducedWord& w) {
  // The minimum of |g w^k| over k is attained within |k| <= |g| + 2, since
  // each extra period past the cancellation range only adds letters.
  const long long span = static_cast<long long>(g.length()) + 2;
  ReducedWord fwd = g, bwd = g;
  for (long long k = 1; k <= span; ++k) {
    fwd = multiply(fwd, w);
    bwd = multiply(bwd, inverse(w));
    if (fwd.length() < g.length() || bwd.length() < g.length()) return false;
  }
  return true;
}

namespace {

// If the canonical period of x is a rotation of the period of base, the
// translation candidate moving base to x; alignment is unique because
// primitive periods have trivial rotation symmetry.
bool alignment_candidate(const BoundaryPoint& x, const BoundaryPoint& base,
                         ReducedWord* g_out) {
  const ReducedWord& p = base.period();
  const ReducedWord& v = x.period();
  if (p.length() != v.length()) return false;
  for (std::size_t j = 0; j < p.length(); ++j) {
    if (rotate_left(p, j) == v) {
      // x = u_x (p[j:] p[:j])^inf = (u_x p[j:]) p^inf.
      std::vector<Letter> u = x.preperiod().letters();
      for (std::size_t i = j; i < p.length(); ++i) u.push_back(p.at(i));
      ReducedWord head(x.rank(), std::move(u));
      *g_out = multiply(head, inverse(base.preperiod()));
      return true;
    }
  }
  return false;
}

}  // namespace

bool related(const BoundaryPoint& x, const BoundaryPoint& y,
             const RelationSpec& spec) {
  if (x.rank() != spec.rank || y.rank() != spec.rank)
    throw std::invalid_argument("related: rank mismatch");
  if (x == y) return true;
  for (const ReducedWord& w : spec.symmetrized()) {
    BoundaryPoint plus = limit_point(w, Sign::plus);
    BoundaryPoint minus = limit_point(w, Sign::minus);
    ReducedWord g(spec.rank);
    if (alignment_candidate(x, plus, &g) && act(g, plus) == x &&
        act(g, minus) == y)
      return true;
    if (alignment_candidate(x, minus, &g) && act(g, minus) == x &&
        act(g, plus) == y)
      return true;
  }
  return false;
}

ClassRep class_of(const BoundaryPoint& x, const RelationSpec& spec) {
  if (x.rank() != spec.rank)
    throw std::invalid_argument("class_of: rank mismatch");
  std::vector<BoundaryPoint> pts{x};
  for (const ReducedWord& w : spec.symmetrized()) {
    BoundaryPoint plus = limit_point(w, Sign::plus);
    BoundaryPoint minus = limit_point(w, Sign::minus);
    ReducedWord g(spec.rank);
    if (alignment_candidate(x, plus, &g) && act(g, plus) == x) {
      BoundaryPoint partner = act(g, minus);
      if (std::find(pts.begin(), pts.end(), partner) == pts.end())
        pts.push_back(partner);
    }
    if (alignment_candidate(x, minus, &g) && act(g, minus) == x) {
      BoundaryPoint partner = act(g, plus);
      if (std::find(pts.begin(), pts.end(), partner) == pts.end())
        pts.push_back(partner);
    }
  }
  std::sort(pts.begin(), pts.end());
  if (pts.size() > 2)
    throw std::logic_error("equivalence class with more than two points");
  return ClassRep{std::move(pts)};
}

std::vector<ClassRep> classes_meeting_level(int n, const RelationSpec& spec) {
  if (n < 1) throw std::invalid_argument("level must be at least 1");
  std::set<ClassRep> seen;
  for (const ReducedWord& w : spec.symmetrized()) {
    BoundaryPoint plus = limit_point(w, Sign::plus);
    BoundaryPoint minus = limit_point(w, Sign::minus);
    const int bound = n + static_cast<int>(w.length());
    for (const ReducedWord& g : words_up_to_length(spec.rank, bound - 1)) {
      if (!is_normalized_for(g, w)) continue;
      BoundaryPoint x = act(g, plus);
      BoundaryPoint y = act(g, minus);
      if (point_prefix(x, n) == point_prefix(y, n)) continue;
      ClassRep rep{{x, y}};
      std::sort(rep.points.begin(), rep.points.end());
      seen.insert(std::move(rep));
    }
  }
  return std::vector<ClassRep>(seen.begin(), seen.end());
}

ReducedWord density_witness(const ReducedWord& x, const ReducedWord& y) {
  require_same_rank(x, y);
  if (x.empty() || y.empty())
    throw std::invalid_argument("density_witness: words must be nonempty");
  if (x.length() != y.length())
    throw std::invalid_argument("density_witness: |x| != |y|");
  if (x == y) throw std::invalid_argument("density_witness: x = y");
  for (int len = 1; len <= 2; ++len) {
    for (const ReducedWord& w : words_of_length(x.rank(), len)) {
      if (!is_geodesic_concat(x, w, y)) continue;
      ReducedWord h = multiply(multiply(x, w), inverse(y));
      if (point_prefix(limit_point(h, Sign::plus), x.length()) == x &&
          point_prefix(limit_point(h, Sign::minus), y.length()) == y)
        return h;
    }
  }
  throw std::logic_error("no density witness of length <= 2");
}

int translated_q_value(const ReducedWord& g, const Letter& s,
                       const BoundaryPoint& x) {
  BoundaryPoint shifted = act(inverse(g), x);
  return point_prefix(shifted, 1).front().gen == s.gen ? 1 : 0;
}

namespace {

// First index (0-based) where the streams of x and y disagree. Two distinct
// canonical points must disagree within the preperiods plus one common period
// window.
std::size_t first_disagreement(const BoundaryPoint& x, const BoundaryPoint& y) {
  std::size_t lcm = std::lcm(x.period().length(), y.period().length());
  std::size_t bound =
      std::max(x.preperiod().length(), y.preperiod().length()) + 2 * lcm + 2;
  ReducedWord px = point_prefix(x, bound);
  ReducedWord py = point_prefix(y, bound);
  for (std::size_t i = 0; i < bound; ++i)
    if (px.at(i) != py.at(i)) return i;
  throw std::logic_error("distinct points with identical streams");
}

// Separator when the stream of x is not eventually a single letter: cut just
// before the first letter change after the disagreement.
std::pair<ReducedWord, Letter> separate_by_letter_change(
    const BoundaryPoint& x, const BoundaryPoint& y) {
  std::size_t n = first_disagreement(x, y);
  std::size_t window =
      x.preperiod().length() + 2 * x.period().length() + n + 2;
  ReducedWord px = point_prefix(x, window);
  std::size_t m = n + 1;
  // Terminates inside the window: a primitive period of length >= 2 contains
  // two distinct letters.
  while (px.at(m) == px.at(n)) {
    ++m;
    if (m >= window) throw std::logic_error("constant stream past the window");
  }
  std::vector<Letter> head(px.letters().begin(), px.letters().begin() + m);
  return {ReducedWord(x.rank(), std::move(head)),
          Letter(px.at(m).gen, false)};
}

}  // namespace

std::pair<ReducedWord, Letter> separating_element(const BoundaryPoint& x,
                                                  const BoundaryPoint& y) {
  if (x.rank() != y.rank())
    throw std::invalid_argument("separating_element: rank mismatch");
  if (related(x, y, RelationSpec::full_generators(x.rank())))
    throw std::invalid_argument(
        "separating_element: points are glued by the generator relation");
  if (x.period().length() >= 2) return separate_by_letter_change(x, y);
  if (y.period().length() >= 2) return separate_by_letter_change(y, x);
  // Both eventually a single letter: translate by the longer preperiod.
  const BoundaryPoint& a = x.preperiod().length() >= y.preperiod().length()
                               ? x
                               : y;
  return {a.preperiod(), Letter(a.period().front().gen, false)};
}

}  // namespace fgb
