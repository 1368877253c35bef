#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgb/cache.hpp"
#include "fgb/intmatrix.hpp"
#include "fgb/level_function.hpp"

namespace fgb {

// Matrix of (f_s)_{s in S} |-> sum_s (f_s - s f_s) from level-n coefficient
// tuples to level-(n+1) coefficients. Columns are ordered generator-major,
// then by word index; rows by word index.
IntMatrix eta_matrix(int d, int n);

// The same map restricted to relation-invariant functions, in the component
// bases of levels n and n+1. Throws if an image fails codomain invariance
// (which would be an implementation bug, not a mathematical possibility).
IntMatrix tau_matrix(int d, int n, const RelationSpec& spec);

// sum_s (f_s - s f_s) applied to an explicit tuple, one entry per generator.
LevelFunction eta_apply(const std::vector<LevelFunction>& tuple);

// q[s^2] = s q[s] + s^-1 q[s] + q[s] - 2 and, for k > 2,
// q[s^k] = s q[s^(k-1)] + s^-1 q[s^(k-1)] - q[s^(k-2)], as exact equalities
// of functions.
bool verify_recurrence(int d, const Letter& s, int k);

// The tuple ((n(s) - m) p[s^-1])_s for sum n(s) = (d-1) m; its image under
// eta is sum n(s) q[s]. Requires the divisibility.
std::vector<LevelFunction> standard_preimage(int d,
                                             const std::vector<long long>& n);

struct EtaMembership {
  bool member = false;
  std::vector<LevelFunction> preimage;  // per generator; empty unless member
};

// Exact lattice membership of f in the image of eta on level-`domain_level`
// tuples, with an explicit preimage on success.
EtaMembership eta_membership(const LevelFunction& f, int domain_level,
                             const DiskCache& cache = DiskCache());

// Is b in the column lattice of A? Returns a preimage when so.
std::optional<std::vector<Int>> membership_in_image(const std::vector<Int>& b,
                                                    const IntMatrix& A);

// Sum of all coefficients mod (d-1), in [0, d-1). Stable under refinement
// (each cylinder splits into 2d-1 = 1 mod (d-1) children) and vanishing on
// the image of eta; identically zero for d = 2.
Int sigma_residue(const LevelFunction& f);

// Finitely presented abelian group Z^ambient / (row lattice of `relations`).
struct AbelianPresentation {
  int ambient = 0;
  IntMatrix relations;  // canonical HNF rows
  int free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, in divisibility order

  static AbelianPresentation quotient_by_rows(int ambient,
                                              const IntMatrix& rows);

  // Coordinates [free..., torsion...] of the class of v; torsion entries are
  // reduced into [0, factor).
  std::vector<Int> normal_form(const std::vector<Int>& v) const;
  bool is_trivial_class(const std::vector<Int>& v) const;
  // Order of the class of v in the group; 0 means infinite.
  Int order_of(const std::vector<Int>& v) const;

 private:
  SmithForm snf_;  // of relations^T
};

struct KGroupOptions {
  std::string cache_dir;
  // Called before each level's lattice work; return false to abort.
  std::function<bool(int)> keep_going;
};

struct KGroupResult {
  int d = 0;
  RelationSpec relation = RelationSpec::empty(2);
  int level_used = 0;
  bool stabilized = false;
  AbelianPresentation k0;
  std::vector<std::string> basis_names;  // designated K0 basis, if any
  bool basis_valid = false;
  std::vector<Int> unit_coords;
  std::vector<std::pair<std::string, std::vector<Int>>> marked;
  std::vector<std::pair<std::string, std::vector<Int>>> mark_vectors;  // in the level lattice
  int k1_free_rank = 0;
  bool k1_constant_basis = false;
  Int unit_order = 0;

  std::string to_json() const;
  std::string to_tsv() const;
};

// Level-truncated quotient presentations of the cylinder lattice by the image
// of the restricted map, with comparison maps between consecutive levels.
// Relations at every level are pulled back from the deepest computed image so
// that each presentation sees all relations expressible within max_level;
// `stabilized` reports whether the last two comparison maps are isomorphisms
// preserving the marked classes.
KGroupResult pv_k_groups(int d, const RelationSpec& spec, int max_level,
                         const KGroupOptions& opts = KGroupOptions());

}  // namespace fgb
