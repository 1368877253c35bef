#include "fgb/ktheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace fgb {

namespace {

ReducedWord generator_word(int rank, int gen, bool inverted = false) {
  return ReducedWord(rank, {Letter(gen, inverted)});
}

std::string generator_name(int gen) {
  return std::string(1, static_cast<char>('a' + gen - 1));
}

// Level-(n+1) word index -> level-n word index of the leading prefix of
// s^-1 P; the prefix survives since |s^-1 P| >= n.
std::vector<long long> shift_prefix_map(int rank, int n, const ReducedWord& s) {
  const auto words = words_of_length(rank, n + 1);
  const ReducedWord si = inverse(s);
  std::vector<long long> map(words.size());
  for (std::size_t k = 0; k < words.size(); ++k) {
    ReducedWord shifted = multiply(si, words[k]);
    std::vector<Letter> head(shifted.letters().begin(),
                             shifted.letters().begin() + n);
    map[k] = word_index(ReducedWord(rank, std::move(head)));
  }
  return map;
}

IntMatrix restricted_eta(const InvariantBasis& dom, const InvariantBasis& cod,
                         const RelationSpec& spec) {
  const int d = spec.rank;
  const long long fan = 2LL * d - 1;
  IntMatrix tau(cod.count(), d * dom.count());
  std::vector<Int> table(static_cast<std::size_t>(cod.word_count));
  for (int g = 1; g <= d; ++g) {
    const std::vector<long long> shift =
        shift_prefix_map(d, dom.level, generator_word(d, g));
    for (int i = 0; i < dom.count(); ++i) {
      for (long long P = 0; P < cod.word_count; ++P) {
        const int ref = dom.component_of[static_cast<std::size_t>(P / fan)];
        const int trans = dom.component_of[static_cast<std::size_t>(shift[P])];
        table[P] = Int((ref == i ? 1 : 0) - (trans == i ? 1 : 0));
      }
      std::vector<Int> coords;
      try {
        coords = cod.coordinates(table);
      } catch (const std::invalid_argument&) {
        throw std::logic_error(
            "restricted map image fails codomain invariance");
      }
      const int col = (g - 1) * dom.count() + i;
      for (int r = 0; r < cod.count(); ++r) tau.at(r, col) = coords[r];
    }
  }
  return tau;
}

IntMatrix negated(const IntMatrix& m) {
  IntMatrix r = m;
  for (Int& x : r.data) x = -x;
  return r;
}

// Rows spanning the projection of ker[A | B] onto the A-block coordinates:
// the pullback {v : A v in column lattice of B}.
IntMatrix pullback_rows(const IntMatrix& A, const IntMatrix& B) {
  IntMatrix K = kernel_lattice(A.hstacked(negated(B)));
  IntMatrix rows(K.cols, A.cols);
  for (int j = 0; j < K.cols; ++j)
    for (int i = 0; i < A.cols; ++i) rows.at(j, i) = K.at(i, j);
  return lattice::canonical(rows);
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json data = nlohmann::json::array();
  for (const Int& x : m.data) data.push_back(x.str());
  return nlohmann::json{{"rows", m.rows}, {"cols", m.cols}, {"data", data}};
}

std::optional<IntMatrix> matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("data"))
    return std::nullopt;
  IntMatrix m(j["rows"].get<int>(), j["cols"].get<int>());
  const auto& data = j["data"];
  if (data.size() != m.data.size()) return std::nullopt;
  for (std::size_t i = 0; i < m.data.size(); ++i)
    m.data[i] = Int(data[i].get<std::string>());
  return m;
}

long long to_small(const Int& x) {
  return static_cast<long long>(x);
}

}  // namespace

IntMatrix eta_matrix(int d, int n) {
  RelationSpec none = RelationSpec::empty(d);
  return restricted_eta(InvariantBasis::build(n, none),
                        InvariantBasis::build(n + 1, none), none);
}

IntMatrix tau_matrix(int d, int n, const RelationSpec& spec) {
  if (spec.rank != d) throw std::invalid_argument("tau_matrix: rank mismatch");
  return restricted_eta(InvariantBasis::build(n, spec),
                        InvariantBasis::build(n + 1, spec), spec);
}

LevelFunction eta_apply(const std::vector<LevelFunction>& tuple) {
  if (tuple.empty()) throw std::invalid_argument("eta_apply: empty tuple");
  const int d = tuple.front().rank();
  if (static_cast<int>(tuple.size()) != d)
    throw std::invalid_argument("eta_apply: one entry per generator required");
  LevelFunction acc = LevelFunction::constant(d, 0);
  for (int g = 1; g <= d; ++g) {
    const LevelFunction& f = tuple[g - 1];
    acc = acc + (f - f.translated(generator_word(d, g)));
  }
  return acc;
}

bool verify_recurrence(int d, const Letter& s, int k) {
  if (k < 2) throw std::invalid_argument("verify_recurrence: k must be >= 2");
  if (s.gen < 1 || s.gen > d)
    throw std::invalid_argument("verify_recurrence: letter outside rank");
  const ReducedWord sw(d, {s});
  const ReducedWord swi = inverse(sw);
  auto q = [&](int m) { return LevelFunction::cylinder_q(power(sw, m)); };
  if (k == 2) {
    LevelFunction rhs = q(1).translated(sw) + q(1).translated(swi) + q(1) -
                        LevelFunction::constant(d, 2);
    return q(2) == rhs;
  }
  LevelFunction rhs =
      q(k - 1).translated(sw) + q(k - 1).translated(swi) - q(k - 2);
  return q(k) == rhs;
}

std::vector<LevelFunction> standard_preimage(int d,
                                             const std::vector<long long>& n) {
  if (static_cast<int>(n.size()) != d)
    throw std::invalid_argument("standard_preimage: one coefficient per generator");
  long long total = std::accumulate(n.begin(), n.end(), 0LL);
  if (total % (d - 1) != 0)
    throw std::invalid_argument(
        "standard_preimage: coefficient sum not divisible by d-1");
  const long long m = total / (d - 1);
  std::vector<LevelFunction> tuple;
  for (int g = 1; g <= d; ++g)
    tuple.push_back(
        LevelFunction::cylinder_p(generator_word(d, g, true)) * Int(n[g - 1] - m));
  return tuple;
}

std::optional<std::vector<Int>> membership_in_image(const std::vector<Int>& b,
                                                    const IntMatrix& A) {
  if (static_cast<int>(b.size()) != A.rows)
    throw std::invalid_argument("membership_in_image: dimension mismatch");
  return ColumnSpaceSolver(A).solve(b);
}

EtaMembership eta_membership(const LevelFunction& f, int domain_level,
                             const DiskCache&) {
  const int d = f.rank();
  if (f.level() > domain_level + 1)
    throw std::invalid_argument(
        "eta_membership: function level exceeds the image level");
  // Solvers are reused across queries at the same (rank, level).
  static std::mutex mu;
  static std::map<std::pair<int, int>, ColumnSpaceSolver> solvers;
  const ColumnSpaceSolver* solver = nullptr;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(d, domain_level);
    auto it = solvers.find(key);
    if (it == solvers.end())
      it = solvers.emplace(key, ColumnSpaceSolver(eta_matrix(d, domain_level)))
               .first;
    solver = &it->second;
  }
  EtaMembership result;
  auto x = solver->solve(f.refined(domain_level + 1).coefficients());
  if (!x) return result;
  result.member = true;
  const long long block = count_words(d, domain_level);
  for (int g = 0; g < d; ++g) {
    std::vector<Int> coeffs(x->begin() + g * block,
                            x->begin() + (g + 1) * block);
    result.preimage.push_back(
        LevelFunction::from_coefficients(d, domain_level, std::move(coeffs)));
  }
  return result;
}

Int sigma_residue(const LevelFunction& f) {
  const int mod = f.rank() - 1;
  if (mod == 1) return 0;
  Int sum = 0;
  for (const Int& c : f.coefficients()) sum += c;
  Int r = sum % mod;
  if (r < 0) r += mod;
  return r;
}

AbelianPresentation AbelianPresentation::quotient_by_rows(
    int ambient, const IntMatrix& rows) {
  if (rows.cols != ambient && rows.rows != 0)
    throw std::invalid_argument("presentation: relation width mismatch");
  AbelianPresentation p;
  p.ambient = ambient;
  IntMatrix canon = lattice::canonical(
      rows.rows == 0 ? IntMatrix(0, ambient) : rows);
  p.relations = canon;
  p.snf_ = smith_normal_form(canon.rows == 0 ? IntMatrix(ambient, 0)
                                             : canon.transposed(),
                             /*need_U=*/true);
  p.free_rank = ambient - p.snf_.rank;
  for (const Int& d : p.snf_.invariant_factors)
    if (d > 1) p.torsion.push_back(d);
  return p;
}

std::vector<Int> AbelianPresentation::normal_form(
    const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != ambient)
    throw std::invalid_argument("normal_form: dimension mismatch");
  std::vector<Int> y = snf_.U.apply(v);
  std::vector<Int> free_part, torsion_part;
  for (int i = 0; i < ambient; ++i) {
    const Int d = i < static_cast<int>(snf_.invariant_factors.size())
                      ? snf_.invariant_factors[i]
                      : Int(0);
    if (d == 1) continue;
    if (d == 0) {
      free_part.push_back(y[i]);
    } else {
      Int r = y[i] % d;
      if (r < 0) r += d;
      torsion_part.push_back(r);
    }
  }
  free_part.insert(free_part.end(), torsion_part.begin(), torsion_part.end());
  return free_part;
}

bool AbelianPresentation::is_trivial_class(const std::vector<Int>& v) const {
  for (const Int& c : normal_form(v))
    if (c != 0) return false;
  return true;
}

Int AbelianPresentation::order_of(const std::vector<Int>& v) const {
  std::vector<Int> y = snf_.U.apply(v);
  Int order = 1;
  for (int i = 0; i < ambient; ++i) {
    const Int d = i < static_cast<int>(snf_.invariant_factors.size())
                      ? snf_.invariant_factors[i]
                      : Int(0);
    if (d == 1) continue;
    if (d == 0) {
      if (y[i] != 0) return 0;
      continue;
    }
    Int r = y[i] % d;
    if (r < 0) r += d;
    if (r != 0) order = lcm(order, d / gcd(d, r));
  }
  return order;
}

namespace {

struct MarkSet {
  std::vector<std::string> names;
  std::vector<LevelFunction> functions;
};

MarkSet collect_marks(int d, const RelationSpec& spec) {
  MarkSet marks;
  marks.names.push_back("1");
  marks.functions.push_back(LevelFunction::constant(d, 1));
  for (int g = 1; g <= d; ++g) {
    marks.names.push_back("q[" + generator_name(g) + "]");
    marks.functions.push_back(
        LevelFunction::cylinder_q(generator_word(d, g)));
  }
  const bool proper_subset = spec.is_generator_subset() && !spec.is_empty() &&
                             !spec.is_full_generators();
  if (proper_subset) {
    std::vector<bool> in_w(d + 1, false);
    for (const ReducedWord& w : spec.words) in_w[w.front().gen] = true;
    for (int g = 1; g <= d; ++g)
      if (!in_w[g]) {
        marks.names.push_back("p[" + generator_name(g) + "]");
        marks.functions.push_back(
            LevelFunction::cylinder_p(generator_word(d, g)));
      }
  }
  return marks;
}

std::vector<std::string> designated_basis(int d, const RelationSpec& spec) {
  if (!spec.is_generator_subset() || spec.is_empty()) return {};
  if (spec.is_full_generators()) {
    std::vector<std::string> names;
    for (int g = 1; g <= d; ++g) names.push_back("q[" + generator_name(g) + "]");
    return names;
  }
  // Unit, the indicators of untouched generators, and q over the relation set
  // minus its largest member.
  std::vector<bool> in_w(d + 1, false);
  for (const ReducedWord& w : spec.words) in_w[w.front().gen] = true;
  int largest = 0;
  for (int g = 1; g <= d; ++g)
    if (in_w[g]) largest = g;
  std::vector<std::string> names{"1"};
  for (int g = 1; g <= d; ++g)
    if (!in_w[g]) names.push_back("p[" + generator_name(g) + "]");
  for (int g = 1; g <= d; ++g)
    if (in_w[g] && g != largest) names.push_back("q[" + generator_name(g) + "]");
  return names;
}

}  // namespace

KGroupResult pv_k_groups(int d, const RelationSpec& spec, int max_level,
                         const KGroupOptions& opts) {
  if (d < 2) throw std::invalid_argument("pv_k_groups: rank must be >= 2");
  if (max_level < 2)
    throw std::invalid_argument("pv_k_groups: max_level must be >= 2");
  if (spec.rank != d) throw std::invalid_argument("pv_k_groups: rank mismatch");
  const int L = max_level;
  const int M = L - 1;
  DiskCache cache(opts.cache_dir);
  auto tick = [&](int level) {
    if (opts.keep_going && !opts.keep_going(level))
      throw std::runtime_error("pv_k_groups: interrupted");
  };

  std::vector<InvariantBasis> basis(L + 1);
  for (int n = 1; n <= L; ++n) {
    tick(n);
    basis[n] = InvariantBasis::build(n, spec);
  }

  // Refinement in component coordinates, one step per level.
  std::vector<IntMatrix> step(L);
  for (int n = 1; n < L; ++n) {
    IntMatrix m(basis[n + 1].count(), basis[n].count());
    std::vector<Int> table(static_cast<std::size_t>(basis[n + 1].word_count));
    const long long fan = 2LL * d - 1;
    for (int i = 0; i < basis[n].count(); ++i) {
      for (long long P = 0; P < basis[n + 1].word_count; ++P)
        table[P] =
            basis[n].component_of[static_cast<std::size_t>(P / fan)] == i ? 1
                                                                          : 0;
      std::vector<Int> coords = basis[n + 1].coordinates(table);
      for (int r = 0; r < basis[n + 1].count(); ++r) m.at(r, i) = coords[r];
    }
    step[n] = std::move(m);
  }

  const IntMatrix tau = restricted_eta(basis[M], basis[L], spec);

  // Marked classes, in component coordinates at every level where they are
  // representable.
  MarkSet marks = collect_marks(d, spec);
  std::vector<bool> representable(marks.names.size(), true);
  std::vector<std::vector<std::vector<Int>>> mark_coords(
      marks.names.size());  // mark -> level -> coords
  for (std::size_t k = 0; k < marks.names.size(); ++k) {
    mark_coords[k].resize(M + 1);
    for (int n = 1; n <= M && representable[k]; ++n) {
      try {
        mark_coords[k][n] = basis[n].coordinates(marks.functions[k]);
      } catch (const std::invalid_argument&) {
        representable[k] = false;  // not constant on the glued classes
      }
    }
  }

  // Relation lattice per level: pull the deepest image back along refinement.
  std::vector<IntMatrix> cumulative(M + 1);
  cumulative[M] = step[M];
  for (int n = M - 1; n >= 1; --n)
    cumulative[n] = cumulative[n + 1].multiplied(step[n]);
  std::vector<IntMatrix> rel(M + 1);
  const std::string tau_digest = DiskCache::fingerprint(tau.serialized());
  for (int n = 1; n <= M; ++n) {
    tick(n);
    const std::string key = "rellat-d" + std::to_string(d) + "-rel_" +
                            spec.str() + "-L" + std::to_string(L) + "-n" +
                            std::to_string(n) + "-" +
                            DiskCache::fingerprint(cumulative[n].serialized() +
                                                   "#" + tau_digest);
    if (auto hit = cache.load(key)) {
      if (auto m = matrix_from_json(*hit)) {
        rel[n] = std::move(*m);
        continue;
      }
    }
    rel[n] = pullback_rows(cumulative[n], tau);
    cache.store(key, matrix_to_json(rel[n]));
  }

  // Comparison maps between consecutive presentations.
  int comparisons = 0, isomorphisms_at_tail = 0;
  for (int n = 1; n < M; ++n) {
    for (int r = 0; r < rel[n].rows; ++r)
      if (!lattice::contains(rel[n + 1], step[n].apply(rel[n].row_vector(r))))
        throw std::logic_error("refinement does not preserve relations");
    for (std::size_t k = 0; k < marks.names.size(); ++k)
      if (representable[k] &&
          step[n].apply(mark_coords[k][n]) != mark_coords[k][n + 1])
        throw std::logic_error("refinement does not preserve marked classes");
    const IntMatrix image_rows = step[n].transposed();
    IntMatrix gens(image_rows.rows + rel[n + 1].rows, step[n].rows);
    for (int r = 0; r < image_rows.rows; ++r)
      for (int c = 0; c < gens.cols; ++c) gens.at(r, c) = image_rows.at(r, c);
    for (int r = 0; r < rel[n + 1].rows; ++r)
      for (int c = 0; c < gens.cols; ++c)
        gens.at(image_rows.rows + r, c) = rel[n + 1].at(r, c);
    const bool surjective =
        lattice::canonical(gens) == IntMatrix::identity(step[n].rows);
    const bool injective =
        pullback_rows(step[n], rel[n + 1].rows == 0
                                   ? IntMatrix(step[n].rows, 0)
                                   : rel[n + 1].transposed()) == rel[n];
    ++comparisons;
    if (surjective && injective)
      ++isomorphisms_at_tail;
    else
      isomorphisms_at_tail = 0;
  }

  KGroupResult result;
  result.d = d;
  result.relation = spec;
  result.level_used = L;
  result.stabilized = comparisons >= 2 && isomorphisms_at_tail >= 2;
  result.k0 = AbelianPresentation::quotient_by_rows(basis[M].count(), rel[M]);

  // K1 from the kernel of the deepest restricted map.
  const IntMatrix ker = kernel_lattice(tau);
  result.k1_free_rank = ker.cols;
  IntMatrix constants(d, tau.cols);
  for (int g = 0; g < d; ++g)
    for (int i = 0; i < basis[M].count(); ++i)
      constants.at(g, g * basis[M].count() + i) = 1;
  result.k1_constant_basis = lattice::equal(ker.transposed(), constants);

  // Designated basis and class coordinates at the reported level.
  std::vector<std::string> basis_names = designated_basis(d, spec);
  auto mark_vector = [&](const std::string& name) -> const std::vector<Int>* {
    for (std::size_t k = 0; k < marks.names.size(); ++k)
      if (marks.names[k] == name && representable[k]) return &mark_coords[k][M];
    return nullptr;
  };
  if (!basis_names.empty()) {
    IntMatrix bmat(basis[M].count(), static_cast<int>(basis_names.size()));
    bool all_present = true;
    for (std::size_t j = 0; j < basis_names.size(); ++j) {
      const std::vector<Int>* v = mark_vector(basis_names[j]);
      if (!v) {
        all_present = false;
        break;
      }
      for (int i = 0; i < bmat.rows; ++i) bmat.at(i, j) = (*v)[i];
    }
    if (all_present) {
      IntMatrix gens(bmat.cols + rel[M].rows, bmat.rows);
      const IntMatrix bt = bmat.transposed();
      for (int r = 0; r < bt.rows; ++r)
        for (int c = 0; c < bt.cols; ++c) gens.at(r, c) = bt.at(r, c);
      for (int r = 0; r < rel[M].rows; ++r)
        for (int c = 0; c < gens.cols; ++c)
          gens.at(bt.rows + r, c) = rel[M].at(r, c);
      const bool spans =
          lattice::canonical(gens) == IntMatrix::identity(bmat.rows);
      const IntMatrix torsionless = pullback_rows(
          bmat,
          rel[M].rows == 0 ? IntMatrix(bmat.rows, 0) : rel[M].transposed());
      const bool independent = torsionless.rows == 0;
      result.basis_valid = spans && independent;
      if (result.basis_valid) result.basis_names = basis_names;
    }
  }

  ColumnSpaceSolver* in_basis = nullptr;
  IntMatrix basis_and_rel;
  std::optional<ColumnSpaceSolver> solver_store;
  if (result.basis_valid) {
    IntMatrix bmat(basis[M].count(), static_cast<int>(result.basis_names.size()));
    for (std::size_t j = 0; j < result.basis_names.size(); ++j) {
      const std::vector<Int>* v = mark_vector(result.basis_names[j]);
      for (int i = 0; i < bmat.rows; ++i) bmat.at(i, j) = (*v)[i];
    }
    basis_and_rel = bmat.hstacked(
        rel[M].rows == 0 ? IntMatrix(bmat.rows, 0) : rel[M].transposed());
    solver_store.emplace(basis_and_rel);
    in_basis = &*solver_store;
  }
  auto class_coords = [&](const std::vector<Int>& v) {
    if (!result.basis_valid) return result.k0.normal_form(v);
    auto sol = in_basis->solve(v);
    if (!sol) throw std::logic_error("valid basis failed to express a class");
    return std::vector<Int>(sol->begin(),
                            sol->begin() + result.basis_names.size());
  };

  for (std::size_t k = 0; k < marks.names.size(); ++k) {
    if (!representable[k]) continue;
    if (marks.names[k] == "1") {
      result.unit_coords = class_coords(mark_coords[k][M]);
      result.unit_order = result.k0.order_of(mark_coords[k][M]);
    } else {
      result.marked.emplace_back(marks.names[k],
                                 class_coords(mark_coords[k][M]));
    }
    result.mark_vectors.emplace_back(marks.names[k], mark_coords[k][M]);
  }
  return result;
}

std::string KGroupResult::to_json() const {
  nlohmann::ordered_json j;
  j["d"] = d;
  if (relation.is_empty()) {
    j["relation"] = "none";
  } else {
    nlohmann::ordered_json words = nlohmann::ordered_json::array();
    for (const ReducedWord& w : relation.words) words.push_back(w.str());
    j["relation"] = std::move(words);
  }
  j["level_used"] = level_used;
  j["stabilized"] = stabilized;
  nlohmann::ordered_json torsion = nlohmann::ordered_json::array();
  for (const Int& t : k0.torsion) torsion.push_back(to_small(t));
  j["K0"] = {{"free_rank", k0.free_rank}, {"torsion", std::move(torsion)}};
  if (basis_valid) {
    nlohmann::ordered_json names = nlohmann::ordered_json::array();
    for (const std::string& n : basis_names) names.push_back(n);
    j["basis"] = std::move(names);
  } else {
    j["basis"] = nullptr;
  }
  nlohmann::ordered_json unit = nlohmann::ordered_json::array();
  for (const Int& c : unit_coords) unit.push_back(to_small(c));
  j["unit"] = std::move(unit);
  nlohmann::ordered_json marks_json = nlohmann::ordered_json::object();
  for (const auto& [name, coords] : marked) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Int& c : coords) arr.push_back(to_small(c));
    marks_json[name] = std::move(arr);
  }
  j["marked"] = std::move(marks_json);
  j["K1"] = {{"free_rank", k1_free_rank}};
  if (relation.is_empty()) j["unit_order"] = to_small(unit_order);
  return j.dump();
}

std::string KGroupResult::to_tsv() const {
  auto join = [](const std::vector<Int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s.push_back(',');
      s += v[i].str();
    }
    return s;
  };
  std::string out = "class\tcoords\n";
  out += "1\t" + join(unit_coords) + "\n";
  for (const auto& [name, coords] : marked)
    out += name + "\t" + join(coords) + "\n";
  return out;
}

}  // namespace fgb
