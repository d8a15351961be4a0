#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "atlas/matrix.hpp"

namespace atlas {

/// U * A * V = D with U, V unimodular and D diagonal, nonnegative, each entry
/// dividing the next.
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;

  int rank() const {
    int r = 0;
    int n = std::min(D.rows(), D.cols());
    for (int i = 0; i < n; ++i)
      if (D(i, i) != 0) ++r;
    return r;
  }

  std::vector<i64> torsion_orders() const {
    std::vector<i64> t;
    int n = std::min(D.rows(), D.cols());
    for (int i = 0; i < n; ++i)
      if (D(i, i) > 1) t.push_back(D(i, i));
    return t;
  }
};

namespace detail {

inline void swap_rows(IntegerMatrix& m, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
inline void swap_cols(IntegerMatrix& m, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[a] += q * row[b]
inline void add_row(IntegerMatrix& m, int a, int b, i64 q) {
  for (int j = 0; j < m.cols(); ++j)
    m(a, j) = checked_add(m(a, j), checked_mul(q, m(b, j)));
}
inline void add_col(IntegerMatrix& m, int a, int b, i64 q) {
  for (int i = 0; i < m.rows(); ++i)
    m(i, a) = checked_add(m(i, a), checked_mul(q, m(i, b)));
}
inline void negate_row(IntegerMatrix& m, int a) {
  for (int j = 0; j < m.cols(); ++j) m(a, j) = checked_neg(m(a, j));
}

}  // namespace detail

/// Deterministic Smith normal form by elementary operations with
/// smallest-|pivot| selection (ties broken by position).
inline SmithDecomposition smith_normal_form(const IntegerMatrix& A) {
  using namespace detail;
  const int m = A.rows(), n = A.cols();
  SmithDecomposition s{IntegerMatrix::identity(m), A, IntegerMatrix::identity(n)};
  IntegerMatrix& D = s.D;
  IntegerMatrix& U = s.U;
  IntegerMatrix& V = s.V;

  const int steps = std::min(m, n);
  for (int k = 0; k < steps; ++k) {
    for (;;) {
      // pick the nonzero entry of smallest magnitude in the trailing block
      int pi = -1, pj = -1;
      i64 best = 0;
      for (int i = k; i < m; ++i)
        for (int j = k; j < n; ++j) {
          i64 v = checked_abs(D(i, j));
          if (v != 0 && (pi < 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) break;  // trailing block is zero
      if (pi != k) {
        swap_rows(D, k, pi);
        swap_rows(U, k, pi);
      }
      if (pj != k) {
        swap_cols(D, k, pj);
        swap_cols(V, k, pj);
      }
      bool clean = true;
      for (int i = k + 1; i < m; ++i) {
        if (D(i, k) == 0) continue;
        i64 q = checked_neg(floor_div(D(i, k), D(k, k)));
        if (q != 0) {
          add_row(D, i, k, q);
          add_row(U, i, k, q);
        }
        if (D(i, k) != 0) clean = false;
      }
      for (int j = k + 1; j < n; ++j) {
        if (D(k, j) == 0) continue;
        i64 q = checked_neg(floor_div(D(k, j), D(k, k)));
        if (q != 0) {
          add_col(D, j, k, q);
          add_col(V, j, k, q);
        }
        if (D(k, j) != 0) clean = false;
      }
      if (!clean) continue;  // remainders became new, smaller pivots
      // pivot must divide the whole trailing block
      int bi = -1, bj = -1;
      for (int i = k + 1; i < m && bi < 0; ++i)
        for (int j = k + 1; j < n; ++j)
          if (D(i, j) % D(k, k) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      add_row(D, k, bi, 1);
      add_row(U, k, bi, 1);
      (void)bj;
    }
  }
  for (int k = 0; k < steps; ++k)
    if (D(k, k) < 0) {
      negate_row(D, k);
      negate_row(U, k);
    }
  return s;
}

/// (free rank, torsion orders) of the cokernel data used for component counts:
/// free rank is cols - rank, torsion the nonunit diagonal of the Smith form.
struct CokernelInvariants {
  int free_rank = 0;
  std::vector<i64> torsion_orders;

  i64 torsion_product() const {
    i64 p = 1;
    for (i64 t : torsion_orders) p = checked_mul(p, t);
    return p;
  }
};

inline CokernelInvariants cokernel_invariants(const IntegerMatrix& A) {
  SmithDecomposition s = smith_normal_form(A);
  return {A.cols() - s.rank(), s.torsion_orders()};
}

/// Solution of A*x = b (mod Z^rows) over real x.
struct ModLatticeSolution {
  bool solvable = false;
  RatVec particular;              // one solution when solvable
  std::vector<IntVec> kernel_basis;  // integer basis of ker(A) over the reals
};

inline ModLatticeSolution solve_mod_lattice(const IntegerMatrix& A, const RatVec& b) {
  if (static_cast<int>(b.size()) != A.rows()) throw domain_error("solve_mod_lattice shape mismatch");
  SmithDecomposition s = smith_normal_form(A);
  const int m = A.rows(), n = A.cols();
  RatVec ub = s.U.apply(b);

  ModLatticeSolution out;
  out.solvable = true;
  RatVec y(n, Rational(0));
  for (int i = 0; i < m; ++i) {
    i64 d = (i < std::min(m, n)) ? s.D(i, i) : 0;
    if (d == 0) {
      if (!ub[i].is_integer()) {
        out.solvable = false;
        break;
      }
    } else if (i < n) {
      y[i] = ub[i] / Rational(d);
    }
  }
  if (out.solvable) out.particular = s.V.apply(y);
  for (int j = 0; j < n; ++j) {
    bool zero_col = j >= std::min(m, n) || s.D(j, j) == 0;
    if (!zero_col) continue;
    IntVec col(n);
    for (int i = 0; i < n; ++i) col[i] = s.V(i, j);
    out.kernel_basis.push_back(col);
  }
  return out;
}

/// Rank over Q by exact Gaussian elimination.
inline int rational_rank(const IntegerMatrix& A) {
  int m = A.rows(), n = A.cols();
  std::vector<RatVec> rows(m, RatVec(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = Rational(A(i, j));
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int p = -1;
    for (int i = rank; i < m; ++i)
      if (!rows[i][col].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[rank], rows[p]);
    for (int i = 0; i < m; ++i) {
      if (i == rank || rows[i][col].is_zero()) continue;
      Rational f = rows[i][col] / rows[rank][col];
      for (int j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Exact solve of M*x = b over Q (M given column-wise); nullopt if inconsistent.
inline std::optional<RatVec> solve_rational(std::vector<RatVec> cols, RatVec b) {
  const int n = static_cast<int>(b.size());
  const int k = static_cast<int>(cols.size());
  // augmented row reduction
  std::vector<RatVec> rows(n, RatVec(k + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) rows[i][j] = cols[j][i];
    rows[i][k] = b[i];
  }
  std::vector<int> pivot_col(n, -1);
  int rank = 0;
  for (int col = 0; col < k && rank < n; ++col) {
    int p = -1;
    for (int i = rank; i < n; ++i)
      if (!rows[i][col].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[rank], rows[p]);
    Rational inv = Rational(1) / rows[rank][col];
    for (int j = col; j <= k; ++j) rows[rank][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == rank || rows[i][col].is_zero()) continue;
      Rational f = rows[i][col];
      for (int j = col; j <= k; ++j) rows[i][j] -= f * rows[rank][j];
    }
    pivot_col[rank] = col;
    ++rank;
  }
  for (int i = rank; i < n; ++i)
    if (!rows[i][k].is_zero()) return std::nullopt;
  RatVec x(k, Rational(0));
  for (int i = 0; i < rank; ++i) x[pivot_col[i]] = rows[i][k];
  return x;
}

}  // namespace atlas
