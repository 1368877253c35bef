#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fgb/intmatrix.hpp"

using namespace fgb;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()),
              rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

void check_smith_postconditions(const IntMatrix& A, const SmithForm& s) {
  CHECK(s.U.multiplied(A).multiplied(s.V) == s.D);
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
  const int bound = std::min(A.rows, A.cols);
  for (int i = 0; i < s.D.rows; ++i)
    for (int j = 0; j < s.D.cols; ++j)
      if (i != j) CHECK(s.D.at(i, j) == 0);
  for (int i = 0; i + 1 < bound; ++i) {
    CHECK(s.D.at(i, i) >= 0);
    if (s.D.at(i, i) == 0)
      CHECK(s.D.at(i + 1, i + 1) == 0);
    else
      CHECK(s.D.at(i + 1, i + 1) % s.D.at(i, i) == 0);
  }
}

}  // namespace

TEST_CASE("smith normal form on fixed examples") {
  IntMatrix diag = from_rows({{2, 0}, {0, 3}});
  SmithForm s1 = smith_normal_form(diag);
  CHECK(s1.invariant_factors == std::vector<Int>{1, 6});
  check_smith_postconditions(diag, s1);

  IntMatrix zero(3, 2);
  SmithForm s2 = smith_normal_form(zero);
  CHECK(s2.invariant_factors == std::vector<Int>{0, 0});
  CHECK(s2.rank == 0);

  IntMatrix m = from_rows({{0, -1, -1}, {-1, 0, -1}, {-1, -1, 0}});
  SmithForm s3 = smith_normal_form(m);
  CHECK(s3.invariant_factors == std::vector<Int>{1, 1, 2});
  CHECK(abs(determinant(m)) == 2);
  check_smith_postconditions(m, s3);
}

TEST_CASE("smith normal form self-verification on random matrices") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 300; ++iter) {
    int r = 1 + static_cast<int>(rng() % 8);
    int c = 1 + static_cast<int>(rng() % 8);
    IntMatrix A(r, c);
    for (Int& x : A.data) x = static_cast<long long>(rng() % 101) - 50;
    SmithForm s = smith_normal_form(A);
    check_smith_postconditions(A, s);
    IntMatrix K = kernel_lattice(A);
    CHECK(K.cols == c - s.rank);
    if (K.cols > 0) CHECK(A.multiplied(K).is_zero());
  }
}

TEST_CASE("kernel examples") {
  CHECK(kernel_lattice(IntMatrix::identity(4)).cols == 0);
  IntMatrix row = from_rows({{1, 1}});
  IntMatrix k = kernel_lattice(row);
  REQUIRE(k.cols == 1);
  CHECK(abs(k.at(0, 0)) == 1);
  CHECK(k.at(0, 0) + k.at(1, 0) == 0);
}

TEST_CASE("smith solve") {
  IntMatrix A = from_rows({{2, 0}, {0, 3}, {1, 1}});
  SmithForm s = smith_normal_form(A);
  auto x = smith_solve(s, {2, 3, 2});
  REQUIRE(x.has_value());
  CHECK(A.apply(*x) == std::vector<Int>{2, 3, 2});
  CHECK_FALSE(smith_solve(s, {1, 0, 0}).has_value());
}

TEST_CASE("column space solver matches smith solve") {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 200; ++iter) {
    int r = 1 + static_cast<int>(rng() % 6);
    int c = 1 + static_cast<int>(rng() % 6);
    IntMatrix A(r, c);
    for (Int& x : A.data) x = static_cast<long long>(rng() % 11) - 5;
    ColumnSpaceSolver solver(A);
    SmithForm s = smith_normal_form(A);
    CHECK(solver.rank() == s.rank);
    for (int probe = 0; probe < 5; ++probe) {
      std::vector<Int> b(r);
      for (Int& x : b) x = static_cast<long long>(rng() % 9) - 4;
      auto via_solver = solver.solve(b);
      auto via_smith = smith_solve(s, b);
      CHECK(via_solver.has_value() == via_smith.has_value());
      if (via_solver) CHECK(A.apply(*via_solver) == b);
    }
    IntMatrix K = solver.kernel();
    if (K.cols > 0) CHECK(A.multiplied(K).is_zero());
    CHECK(K.cols == c - solver.rank());
  }
}

TEST_CASE("hermite form canonicalizes lattices") {
  IntMatrix a = from_rows({{2, 1}, {0, 3}});
  IntMatrix b = from_rows({{2, 4}, {2, 1}, {4, 2}});  // same row lattice
  CHECK(lattice::equal(a, b));
  CHECK(hnf_rows(a) == hnf_rows(b));
  CHECK_FALSE(lattice::equal(a, from_rows({{1, 0}, {0, 1}})));
  CHECK(lattice::contains(hnf_rows(a), {2, 4}));
  CHECK_FALSE(lattice::contains(hnf_rows(a), {1, 0}));
}

TEST_CASE("hermite form properties on random lattices") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    int r = 1 + static_cast<int>(rng() % 5);
    int c = 1 + static_cast<int>(rng() % 5);
    IntMatrix A(r, c);
    for (Int& x : A.data) x = static_cast<long long>(rng() % 21) - 10;
    IntMatrix H = hnf_rows(A);
    // Every original row lies in the lattice of H and vice versa.
    for (int i = 0; i < A.rows; ++i)
      CHECK(lattice::contains(H, A.row_vector(i)));
    IntMatrix H2 = hnf_rows(A.hstacked(IntMatrix(r, 0)));  // identical input
    CHECK(H == H2);
    // Shuffled generators produce the same canonical form.
    IntMatrix doubled(2 * r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        doubled.at(i, j) = A.at(r - 1 - i, j);
        doubled.at(r + i, j) = A.at(i, j);
      }
    CHECK(hnf_rows(doubled) == H);
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix::identity(5)) == 1);
  CHECK(determinant(from_rows({{2, 3}, {1, 4}})) == 5);
  CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == 0);
}
