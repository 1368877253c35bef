#include "fgb/level_function.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace fgb {

namespace {

void check_same_rank(const LevelFunction& f, int rank, const char* what) {
  if (f.rank() != rank)
    throw std::invalid_argument(std::string(what) + ": rank mismatch");
}

std::vector<Int> refine_table(int rank, int from, int to,
                              const std::vector<Int>& coeffs) {
  // Children of the word at index j occupy the contiguous index block
  // [j*(2d-1), (j+1)*(2d-1)) one level down, except at level 0 -> 1.
  std::vector<Int> cur = coeffs;
  for (int lvl = from; lvl < to; ++lvl) {
    const long long fan = (lvl == 0) ? 2LL * rank : 2LL * rank - 1;
    std::vector<Int> next(cur.size() * fan);
    for (std::size_t j = 0; j < cur.size(); ++j)
      for (long long c = 0; c < fan; ++c) next[j * fan + c] = cur[j];
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

LevelFunction LevelFunction::constant(int rank, Int value) {
  if (rank < 2) throw std::invalid_argument("rank must be at least 2");
  return LevelFunction(
      rank, 1, std::vector<Int>(static_cast<std::size_t>(2 * rank), value));
}

LevelFunction LevelFunction::from_coefficients(int rank, int level,
                                               std::vector<Int> coeffs) {
  if (level < 1) throw std::invalid_argument("level must be at least 1");
  if (static_cast<long long>(coeffs.size()) != count_words(rank, level))
    throw std::invalid_argument("coefficient count does not match level");
  return LevelFunction(rank, level, std::move(coeffs)).minimized();
}

LevelFunction LevelFunction::cylinder_p(const ReducedWord& w) {
  if (w.empty())
    throw std::invalid_argument(
        "cylinder_p: empty word (use a constant function)");
  const int level = static_cast<int>(w.length());
  std::vector<Int> coeffs(static_cast<std::size_t>(count_words(w.rank(), level)),
                          Int(0));
  coeffs[static_cast<std::size_t>(word_index(w))] = 1;
  return LevelFunction(w.rank(), level, std::move(coeffs));
}

LevelFunction LevelFunction::cylinder_q(const ReducedWord& w) {
  return cylinder_p(w) + cylinder_p(inverse(w));
}

Int LevelFunction::evaluate(const BoundaryPoint& x) const {
  if (x.rank() != rank_)
    throw std::invalid_argument("evaluate: rank mismatch");
  return coeffs_[static_cast<std::size_t>(
      word_index(point_prefix(x, static_cast<std::size_t>(level_))))];
}

LevelFunction LevelFunction::refined(int m) const {
  if (m < level_)
    throw std::invalid_argument("refine: target level below current level");
  if (m == level_) return *this;
  return LevelFunction(rank_, m, refine_table(rank_, level_, m, coeffs_));
}

LevelFunction LevelFunction::minimized() const {
  int level = level_;
  std::vector<Int> coeffs = coeffs_;
  while (level > 1) {
    const long long fan = 2LL * rank_ - 1;
    bool collapsible = true;
    for (std::size_t j = 0; collapsible && j * fan < coeffs.size(); ++j)
      for (long long c = 1; c < fan; ++c)
        if (coeffs[j * fan + c] != coeffs[j * fan]) {
          collapsible = false;
          break;
        }
    if (!collapsible) break;
    std::vector<Int> parent(coeffs.size() / fan);
    for (std::size_t j = 0; j < parent.size(); ++j)
      parent[j] = coeffs[j * fan];
    coeffs = std::move(parent);
    --level;
  }
  return LevelFunction(rank_, level, std::move(coeffs));
}

LevelFunction LevelFunction::translated(const ReducedWord& g) const {
  if (g.rank() != rank_)
    throw std::invalid_argument("translate: rank mismatch");
  if (g.empty()) return minimized();
  const int m = level_ + static_cast<int>(g.length());
  const ReducedWord gi = inverse(g);
  std::vector<Int> out(static_cast<std::size_t>(count_words(rank_, m)));
  for (const ReducedWord& P : words_of_length(rank_, m)) {
    // (g f) is constant on the cylinder of P with value f at the level-n
    // prefix of g^-1 P; that prefix survives since |g^-1 P| >= m - |g|.
    ReducedWord shifted = multiply(gi, P);
    std::vector<Letter> head(shifted.letters().begin(),
                             shifted.letters().begin() + level_);
    out[static_cast<std::size_t>(word_index(P))] =
        coeffs_[static_cast<std::size_t>(
            word_index(ReducedWord(rank_, std::move(head))))];
  }
  return LevelFunction(rank_, m, std::move(out)).minimized();
}

bool LevelFunction::is_constant() const {
  LevelFunction m = minimized();
  for (const Int& c : m.coeffs_)
    if (c != m.coeffs_.front()) return false;
  return true;
}

LevelFunction LevelFunction::operator+(const LevelFunction& o) const {
  check_same_rank(o, rank_, "add");
  const int m = std::max(level_, o.level_);
  std::vector<Int> a = refined(m).coeffs_;
  const std::vector<Int> b = o.refined(m).coeffs_;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return LevelFunction(rank_, m, std::move(a)).minimized();
}

LevelFunction LevelFunction::operator-(const LevelFunction& o) const {
  return *this + (-o);
}

LevelFunction LevelFunction::operator-() const {
  std::vector<Int> a = coeffs_;
  for (Int& c : a) c = -c;
  return LevelFunction(rank_, level_, std::move(a));
}

LevelFunction LevelFunction::operator*(const Int& c) const {
  std::vector<Int> a = coeffs_;
  for (Int& x : a) x *= c;
  return LevelFunction(rank_, level_, std::move(a)).minimized();
}

bool operator==(const LevelFunction& f, const LevelFunction& g) {
  if (f.rank_ != g.rank_) return false;
  const int m = std::max(f.level_, g.level_);
  return f.refined(m).coeffs_ == g.refined(m).coeffs_;
}

std::string LevelFunction::to_json() const {
  nlohmann::ordered_json j;
  j["d"] = rank_;
  j["level"] = level_;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  const auto words = words_of_length(rank_, level_);
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Int& c = coeffs_[i];
    if (c < std::numeric_limits<long long>::min() ||
        c > std::numeric_limits<long long>::max())
      throw std::overflow_error("coefficient too large for JSON output");
    coeffs[words[i].str()] = static_cast<long long>(c);
  }
  j["coeffs"] = std::move(coeffs);
  return j.dump();
}

bool is_R_invariant(const LevelFunction& f, const RelationSpec& spec) {
  if (f.rank() != spec.rank)
    throw std::invalid_argument("is_R_invariant: rank mismatch");
  for (const ClassRep& cls : classes_meeting_level(f.level(), spec))
    if (f.evaluate(cls.points[0]) != f.evaluate(cls.points[1])) return false;
  return true;
}

InvariantBasis InvariantBasis::build(int level, const RelationSpec& spec) {
  InvariantBasis b;
  b.rank = spec.rank;
  b.level = level;
  b.word_count = count_words(spec.rank, level);
  // Union-find over level words; each class meeting the level glues the two
  // prefix cylinders.
  std::vector<long long> parent(static_cast<std::size_t>(b.word_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](long long i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  for (const ClassRep& cls : classes_meeting_level(level, spec)) {
    long long i = find(word_index(point_prefix(cls.points[0], level)));
    long long j = find(word_index(point_prefix(cls.points[1], level)));
    if (i != j) parent[std::max(i, j)] = std::min(i, j);
  }
  b.component_of.assign(static_cast<std::size_t>(b.word_count), -1);
  for (long long i = 0; i < b.word_count; ++i) {
    long long root = find(i);
    if (b.component_of[root] < 0) {
      b.component_of[root] = static_cast<int>(b.representative.size());
      b.representative.push_back(root);
    }
    b.component_of[i] = b.component_of[root];
  }
  return b;
}

std::vector<Int> InvariantBasis::coordinates(
    const std::vector<Int>& table) const {
  if (static_cast<long long>(table.size()) != word_count)
    throw std::invalid_argument("coordinates: table size mismatch");
  std::vector<Int> coords(representative.size());
  for (std::size_t k = 0; k < representative.size(); ++k)
    coords[k] = table[static_cast<std::size_t>(representative[k])];
  for (long long i = 0; i < word_count; ++i)
    if (table[i] != coords[static_cast<std::size_t>(component_of[i])])
      throw std::invalid_argument(
          "function is not constant on an invariance component");
  return coords;
}

std::vector<Int> InvariantBasis::coordinates(const LevelFunction& f) const {
  return coordinates(f.refined(level).coefficients());
}

std::vector<Int> InvariantBasis::table(const std::vector<Int>& coords) const {
  if (static_cast<int>(coords.size()) != count())
    throw std::invalid_argument("table: coordinate size mismatch");
  std::vector<Int> t(static_cast<std::size_t>(word_count));
  for (long long i = 0; i < word_count; ++i)
    t[i] = coords[static_cast<std::size_t>(component_of[i])];
  return t;
}

LevelFunction InvariantBasis::function_of(
    const std::vector<Int>& coords) const {
  return LevelFunction::from_coefficients(rank, level, table(coords));
}

std::vector<LevelFunction> invariant_basis(int d, int n,
                                           const RelationSpec& spec) {
  if (spec.rank != d)
    throw std::invalid_argument("invariant_basis: rank mismatch");
  InvariantBasis b = InvariantBasis::build(n, spec);
  std::vector<LevelFunction> out;
  out.reserve(b.representative.size());
  for (int k = 0; k < b.count(); ++k) {
    std::vector<Int> coords(b.count(), Int(0));
    coords[k] = 1;
    out.push_back(b.function_of(coords));
  }
  return out;
}

}  // namespace fgb
