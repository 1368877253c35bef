#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace fgb {

using Int = boost::multiprecision::cpp_int;

// Dense matrix over the integers; exact arithmetic only.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> data;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * c) {}

  Int& at(int r, int c) { return data[std::size_t(r) * cols + c]; }
  const Int& at(int r, int c) const { return data[std::size_t(r) * cols + c]; }

  static IntMatrix identity(int n);
  IntMatrix transposed() const;
  IntMatrix multiplied(const IntMatrix& o) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;  // this * v
  IntMatrix hstacked(const IntMatrix& o) const;
  std::vector<Int> column(int j) const;
  std::vector<Int> row_vector(int i) const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }

  std::string serialized() const;  // stable text form, used for cache keys
};

// U * A * V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithForm {
  IntMatrix U, D, V;
  std::vector<Int> invariant_factors;  // full diagonal of D
  int rank = 0;                        // number of nonzero factors
  bool has_U = true;
};

// Deterministic: pivots by least nonzero magnitude, row-major tiebreak.
SmithForm smith_normal_form(const IntMatrix& A, bool need_U = true);

// Solve A x = b exactly given the Smith decomposition of A.
std::optional<std::vector<Int>> smith_solve(const SmithForm& S,
                                            const std::vector<Int>& b);

// Columns form a Z-basis of {v : A v = 0}.
IntMatrix kernel_lattice(const IntMatrix& A);

// Row-style Hermite normal form of the row span: canonical basis, pivots
// positive, entries above each pivot reduced into [0, pivot).
IntMatrix hnf_rows(const IntMatrix& A);

// Exact determinant (Bareiss); requires a square matrix.
Int determinant(const IntMatrix& A);

// Row-reduction workspace for one matrix A, answering column-space and kernel
// queries: built from the HNF of [A^T | I].
class ColumnSpaceSolver {
 public:
  explicit ColumnSpaceSolver(const IntMatrix& A);

  // x with A x = b, if any.
  std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;
  bool contains(const std::vector<Int>& b) const;
  // Z-basis of {v : A v = 0}, as matrix columns.
  const IntMatrix& kernel() const { return kernel_; }
  int rank() const { return rank_; }
  // Canonical HNF basis of the column space, rows = generators.
  IntMatrix column_space_hnf() const;

 private:
  int m_ = 0;  // ambient dimension (rows of A)
  int n_ = 0;  // number of generators (cols of A)
  int rank_ = 0;
  IntMatrix reduced_;  // rank_ rows of [h | t], h in Z^m echelon, h = A t
  std::vector<int> pivot_col_;
  IntMatrix kernel_;
};

// Lattices as row-generator matrices over a common ambient dimension.
namespace lattice {

// Canonical form; equal lattices give equal matrices.
IntMatrix canonical(const IntMatrix& generators);
bool contains(const IntMatrix& canonical_basis, const std::vector<Int>& v);
bool equal(const IntMatrix& gens_a, const IntMatrix& gens_b);

}  // namespace lattice

}  // namespace fgb
