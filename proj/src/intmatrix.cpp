#include "fgb/intmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fgb {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::multiplied(const IntMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != cols)
    throw std::invalid_argument("vector length mismatch");
  std::vector<Int> r(rows);
  for (int i = 0; i < rows; ++i) {
    Int acc = 0;
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != 0) acc += at(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

IntMatrix IntMatrix::hstacked(const IntMatrix& o) const {
  if (rows != o.rows) throw std::invalid_argument("row count mismatch");
  IntMatrix r(rows, cols + o.cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols; ++j) r.at(i, cols + j) = o.at(i, j);
  }
  return r;
}

std::vector<Int> IntMatrix::column(int j) const {
  std::vector<Int> c(rows);
  for (int i = 0; i < rows; ++i) c[i] = at(i, j);
  return c;
}

std::vector<Int> IntMatrix::row_vector(int i) const {
  return std::vector<Int>(data.begin() + std::size_t(i) * cols,
                          data.begin() + std::size_t(i + 1) * cols);
}

bool IntMatrix::is_zero() const {
  for (const Int& x : data)
    if (x != 0) return false;
  return true;
}

std::string IntMatrix::serialized() const {
  std::ostringstream os;
  os << rows << "x" << cols << ":";
  for (const Int& x : data) os << x << ",";
  return os.str();
}

namespace {

void row_sub(IntMatrix& m, int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int j = 0; j < m.cols; ++j) m.at(dst, j) -= q * m.at(src, j);
}

void row_swap(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void row_negate(IntMatrix& m, int r) {
  for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
}

void col_sub(IntMatrix& m, int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int i = 0; i < m.rows; ++i) m.at(i, dst) -= q * m.at(i, src);
}

void col_swap(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

void col_negate(IntMatrix& m, int c) {
  for (int i = 0; i < m.rows; ++i) m.at(i, c) = -m.at(i, c);
}

Int floor_div(const Int& a, const Int& b) {
  // b > 0; round toward minus infinity.
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace

namespace {

// One row-echelon reduction sweep (least-magnitude pivots, remainders swapped
// up, entries above each pivot reduced into [0, pivot)), mirrored on U.
// Returns whether anything changed. Keeping every entry reduced against the
// pivots is what bounds coefficient growth here.
bool hermite_sweep_rows(IntMatrix& D, IntMatrix* U) {
  bool changed = false;
  int r = 0;
  for (int c = 0; c < D.cols && r < D.rows; ++c) {
    for (;;) {
      int best = -1;
      for (int i = r; i < D.rows; ++i)
        if (D.at(i, c) != 0 &&
            (best < 0 || abs(D.at(i, c)) < abs(D.at(best, c))))
          best = i;
      if (best < 0) break;
      if (best != r) {
        row_swap(D, r, best);
        if (U) row_swap(*U, r, best);
        changed = true;
      }
      bool clear = true;
      for (int i = r + 1; i < D.rows; ++i) {
        if (D.at(i, c) == 0) continue;
        Int q = D.at(i, c) / D.at(r, c);
        row_sub(D, i, r, q);
        if (U) row_sub(*U, i, r, q);
        changed = true;
        if (D.at(i, c) != 0) clear = false;
      }
      if (clear) break;
    }
    if (D.at(r, c) == 0) continue;
    if (D.at(r, c) < 0) {
      row_negate(D, r);
      if (U) row_negate(*U, r);
      changed = true;
    }
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(D.at(i, c), D.at(r, c));
      if (q != 0) {
        row_sub(D, i, r, q);
        if (U) row_sub(*U, i, r, q);
        changed = true;
      }
    }
    ++r;
  }
  return changed;
}

bool hermite_sweep_cols(IntMatrix& D, IntMatrix& V) {
  bool changed = false;
  int c = 0;
  for (int r = 0; r < D.rows && c < D.cols; ++r) {
    for (;;) {
      int best = -1;
      for (int j = c; j < D.cols; ++j)
        if (D.at(r, j) != 0 &&
            (best < 0 || abs(D.at(r, j)) < abs(D.at(r, best))))
          best = j;
      if (best < 0) break;
      if (best != c) {
        col_swap(D, c, best);
        col_swap(V, c, best);
        changed = true;
      }
      bool clear = true;
      for (int j = c + 1; j < D.cols; ++j) {
        if (D.at(r, j) == 0) continue;
        Int q = D.at(r, j) / D.at(r, c);
        col_sub(D, j, c, q);
        col_sub(V, j, c, q);
        changed = true;
        if (D.at(r, j) != 0) clear = false;
      }
      if (clear) break;
    }
    if (D.at(r, c) == 0) continue;
    if (D.at(r, c) < 0) {
      col_negate(D, c);
      col_negate(V, c);
      changed = true;
    }
    for (int j = 0; j < c; ++j) {
      Int q = floor_div(D.at(r, j), D.at(r, c));
      if (q != 0) {
        col_sub(D, j, c, q);
        col_sub(V, j, c, q);
        changed = true;
      }
    }
    ++c;
  }
  return changed;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A, bool need_U) {
  SmithForm s;
  s.D = A;
  s.has_U = true;
  (void)need_U;  // tracking U is cheap with the sweep reductions
  IntMatrix utrack = IntMatrix::identity(A.rows);
  s.V = IntMatrix::identity(A.cols);
  IntMatrix& D = s.D;
  IntMatrix* U = &utrack;

  // Alternate row and column reduction until both are stable; the only
  // simultaneous fixed points are diagonal matrices.
  for (int pass = 0;; ++pass) {
    bool rows_changed = hermite_sweep_rows(D, U);
    bool cols_changed = hermite_sweep_cols(D, s.V);
    if (!rows_changed && !cols_changed) break;
    if (pass > 10000) throw std::logic_error("diagonalization did not settle");
  }

  const int bound = std::min(A.rows, A.cols);
  // Push zero diagonal entries to the end.
  for (int i = 0, next = 0; i < bound; ++i) {
    if (D.at(i, i) == 0) continue;
    if (i != next) {
      row_swap(D, next, i);
      row_swap(*U, next, i);
      col_swap(D, next, i);
      col_swap(s.V, next, i);
    }
    ++next;
  }
  // Divisibility chain: fold each later diagonal entry into the earlier one
  // through a 2x2 gcd block; entries stay within lcm of the pair.
  for (int i = 0; i < bound; ++i) {
    if (D.at(i, i) == 0) break;
    for (int j = i + 1; j < bound; ++j) {
      if (D.at(j, j) == 0) break;
      if (D.at(j, j) % D.at(i, i) == 0) continue;
      col_sub(D, i, j, Int(-1));  // col i += col j, making the block 2x2
      col_sub(s.V, i, j, Int(-1));
      for (;;) {
        // Euclid on the block: clear (j,i) then (i,j).
        if (D.at(j, i) != 0) {
          Int q = D.at(j, i) / D.at(i, i);
          row_sub(D, j, i, q);
          row_sub(*U, j, i, q);
          if (D.at(j, i) != 0) {
            row_swap(D, i, j);
            row_swap(*U, i, j);
            continue;
          }
        }
        if (D.at(i, j) != 0) {
          Int q = D.at(i, j) / D.at(i, i);
          col_sub(D, j, i, q);
          col_sub(s.V, j, i, q);
          if (D.at(i, j) != 0) {
            col_swap(D, i, j);
            col_swap(s.V, i, j);
            continue;
          }
        }
        break;
      }
      if (D.at(i, i) < 0) {
        row_negate(D, i);
        row_negate(*U, i);
      }
      if (D.at(j, j) < 0) {
        row_negate(D, j);
        row_negate(*U, j);
      }
    }
  }
  s.U = std::move(utrack);
  s.invariant_factors.resize(bound);
  for (int i = 0; i < bound; ++i) s.invariant_factors[i] = D.at(i, i);
  s.rank = 0;
  for (int i = 0; i < bound; ++i)
    if (D.at(i, i) != 0) ++s.rank;
  return s;
}

std::optional<std::vector<Int>> smith_solve(const SmithForm& S,
                                            const std::vector<Int>& b) {
  if (!S.has_U) throw std::invalid_argument("smith_solve needs U");
  std::vector<Int> y = S.U.apply(b);
  std::vector<Int> x(S.V.rows, Int(0));
  for (int i = 0; i < S.D.rows; ++i) {
    const Int d = i < static_cast<int>(S.invariant_factors.size())
                      ? S.invariant_factors[i]
                      : Int(0);
    if (d == 0) {
      if (y[i] != 0) return std::nullopt;
    } else {
      if (y[i] % d != 0) return std::nullopt;
      x[i] = y[i] / d;
    }
  }
  return S.V.apply(x);
}

IntMatrix hnf_rows(const IntMatrix& A) {
  IntMatrix H = A;
  int r = 0;
  for (int c = 0; c < H.cols && r < H.rows; ++c) {
    // Euclidean elimination below row r in column c.
    for (;;) {
      int best = -1;
      for (int i = r; i < H.rows; ++i)
        if (H.at(i, c) != 0 && (best < 0 || abs(H.at(i, c)) < abs(H.at(best, c))))
          best = i;
      if (best < 0) break;
      row_swap(H, r, best);
      bool clear = true;
      for (int i = r + 1; i < H.rows; ++i) {
        if (H.at(i, c) == 0) continue;
        row_sub(H, i, r, H.at(i, c) / H.at(r, c));
        if (H.at(i, c) != 0) clear = false;
      }
      if (clear) break;
    }
    if (H.at(r, c) == 0) continue;
    if (H.at(r, c) < 0) row_negate(H, r);
    for (int i = 0; i < r; ++i)
      row_sub(H, i, r, floor_div(H.at(i, c), H.at(r, c)));
    ++r;
  }
  IntMatrix out(r, H.cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < H.cols; ++j) out.at(i, j) = H.at(i, j);
  return out;
}

Int determinant(const IntMatrix& A) {
  if (A.rows != A.cols) throw std::invalid_argument("determinant: not square");
  const int n = A.rows;
  if (n == 0) return 1;
  IntMatrix M = A;
  Int sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (M.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (M.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      row_swap(M, k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        M.at(i, j) = (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
    prev = M.at(k, k);
  }
  return sign * M.at(n - 1, n - 1);
}

ColumnSpaceSolver::ColumnSpaceSolver(const IntMatrix& A) : m_(A.rows), n_(A.cols) {
  // Row-reduce [A^T | I]; rows keep the identity h = A t.
  IntMatrix W = A.transposed().hstacked(IntMatrix::identity(n_));
  int r = 0;
  for (int c = 0; c < m_ && r < n_; ++c) {
    for (;;) {
      int best = -1;
      for (int i = r; i < n_; ++i)
        if (W.at(i, c) != 0 && (best < 0 || abs(W.at(i, c)) < abs(W.at(best, c))))
          best = i;
      if (best < 0) break;
      row_swap(W, r, best);
      bool clear = true;
      for (int i = r + 1; i < n_; ++i) {
        if (W.at(i, c) == 0) continue;
        row_sub(W, i, r, W.at(i, c) / W.at(r, c));
        if (W.at(i, c) != 0) clear = false;
      }
      if (clear) break;
    }
    if (W.at(r, c) == 0) continue;
    if (W.at(r, c) < 0) row_negate(W, r);
    for (int i = 0; i < r; ++i)
      row_sub(W, i, r, floor_div(W.at(i, c), W.at(r, c)));
    pivot_col_.push_back(c);
    ++r;
  }
  rank_ = r;
  reduced_ = IntMatrix(r, m_ + n_);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m_ + n_; ++j) reduced_.at(i, j) = W.at(i, j);
  // Rows past the rank have zero h-part: their t-parts span the kernel.
  kernel_ = IntMatrix(n_, n_ - r);
  for (int i = r; i < n_; ++i)
    for (int j = 0; j < n_; ++j) kernel_.at(j, i - r) = W.at(i, m_ + j);
}

std::optional<std::vector<Int>> ColumnSpaceSolver::solve(
    const std::vector<Int>& b) const {
  if (static_cast<int>(b.size()) != m_)
    throw std::invalid_argument("solve: dimension mismatch");
  std::vector<Int> v = b;
  std::vector<Int> x(n_, Int(0));
  for (int i = 0; i < rank_; ++i) {
    const int p = pivot_col_[i];
    if (v[p] == 0) continue;
    if (v[p] % reduced_.at(i, p) != 0) return std::nullopt;
    Int q = v[p] / reduced_.at(i, p);
    for (int j = 0; j < m_; ++j) v[j] -= q * reduced_.at(i, j);
    for (int j = 0; j < n_; ++j) x[j] += q * reduced_.at(i, m_ + j);
  }
  for (const Int& c : v)
    if (c != 0) return std::nullopt;
  return x;
}

bool ColumnSpaceSolver::contains(const std::vector<Int>& b) const {
  return solve(b).has_value();
}

IntMatrix ColumnSpaceSolver::column_space_hnf() const {
  IntMatrix rows(rank_, m_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < m_; ++j) rows.at(i, j) = reduced_.at(i, j);
  return rows;
}

IntMatrix kernel_lattice(const IntMatrix& A) {
  return ColumnSpaceSolver(A).kernel();
}

namespace lattice {

IntMatrix canonical(const IntMatrix& generators) { return hnf_rows(generators); }

bool contains(const IntMatrix& basis, const std::vector<Int>& v) {
  if (static_cast<int>(v.size()) != basis.cols)
    throw std::invalid_argument("lattice contains: dimension mismatch");
  std::vector<Int> w = v;
  int row = 0;
  for (int c = 0; c < basis.cols && row < basis.rows; ++c) {
    if (basis.at(row, c) == 0) continue;
    if (w[c] != 0) {
      if (w[c] % basis.at(row, c) != 0) return false;
      Int q = w[c] / basis.at(row, c);
      for (int j = 0; j < basis.cols; ++j) w[j] -= q * basis.at(row, j);
    }
    ++row;
  }
  for (const Int& c : w)
    if (c != 0) return false;
  return true;
}

bool equal(const IntMatrix& gens_a, const IntMatrix& gens_b) {
  return canonical(gens_a) == canonical(gens_b);
}

}  // namespace lattice

}  // namespace fgb
