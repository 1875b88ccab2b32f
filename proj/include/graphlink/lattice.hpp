#ifndef GRAPHLINK_LATTICE_HPP
#define GRAPHLINK_LATTICE_HPP

#include <utility>
#include <vector>

#include "graphlink/rational.hpp"

namespace graphlink {

inline MatZ identity_matrix(int n) {
  MatZ m(n, VecZ(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline MatZ transpose(const MatZ& m) {
  if (m.empty()) return {};
  MatZ t(m[0].size(), VecZ(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

inline VecZ mat_vec(const MatZ& m, const VecZ& v) {
  VecZ out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw Error("matrix/vector size mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

inline VecQ mat_vec(const MatZ& m, const VecQ& v) {
  VecQ out(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw Error("matrix/vector size mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += Rat(m[i][j]) * v[j];
  }
  return out;
}

inline MatZ mat_mul(const MatZ& a, const MatZ& b) {
  if (a.empty() || b.empty()) return {};
  MatZ out(a.size(), VecZ(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b.size()) throw Error("matrix size mismatch");
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j)
        out[i][j] += a[i][k] * b[k][j];
  }
  return out;
}

struct HnfResult {
  MatZ h;      // row HNF of the input
  MatZ u;      // unimodular, u * input = h
  MatZ u_inv;  // inverse of u
  int rank = 0;
  std::vector<int> pivot_cols;
};

/// Row-style Hermite normal form with transform tracking: pivots positive,
/// entries above each pivot reduced into [0, pivot).
inline HnfResult row_hnf(const MatZ& input) {
  HnfResult res;
  res.h = input;
  const int rows = static_cast<int>(input.size());
  const int cols = rows ? static_cast<int>(input[0].size()) : 0;
  res.u = identity_matrix(rows);
  res.u_inv = identity_matrix(rows);
  MatZ& h = res.h;
  MatZ& u = res.u;
  MatZ& ui = res.u_inv;

  // elementary row ops applied to (h, u) with the inverse op folded into ui
  auto swap_rows = [&](int i, int j) {
    std::swap(h[i], h[j]);
    std::swap(u[i], u[j]);
    for (int k = 0; k < rows; ++k) std::swap(ui[k][i], ui[k][j]);
  };
  auto negate_row = [&](int i) {
    for (auto& x : h[i]) x = -x;
    for (auto& x : u[i]) x = -x;
    for (int k = 0; k < rows; ++k) ui[k][i] = -ui[k][i];
  };
  auto add_multiple = [&](int dst, int src, const Int& m) {
    // row_dst += m * row_src ; columns of the inverse get col_src -= m * col_dst
    for (int k = 0; k < cols; ++k) h[dst][k] += m * h[src][k];
    for (int k = 0; k < rows; ++k) u[dst][k] += m * u[src][k];
    for (int k = 0; k < rows; ++k) ui[k][src] -= m * ui[k][dst];
  };

  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    // gcd elimination below position (row, col)
    for (;;) {
      int nz = -1;
      for (int i = row; i < rows; ++i)
        if (h[i][col] != 0 && (nz == -1 || abs(h[i][col]) < abs(h[nz][col])))
          nz = i;
      if (nz == -1) break;
      if (nz != row) swap_rows(row, nz);
      bool clean = true;
      for (int i = row + 1; i < rows; ++i) {
        if (h[i][col] == 0) continue;
        Int q = h[i][col] / h[row][col];  // truncated division is fine here
        add_multiple(i, row, -q);
        if (h[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (h[row][col] == 0) continue;
    if (h[row][col] < 0) negate_row(row);
    // reduce entries above the pivot into [0, pivot)
    for (int i = 0; i < row; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][col].get_mpz_t(), h[row][col].get_mpz_t());
      if (q != 0) add_multiple(i, row, -q);
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

/// Basis of the integer kernel {x : m x = 0}, returned as rows.
/// Kernels are saturated lattices by construction.
inline MatZ kernel_basis(const MatZ& m, int ncols) {
  if (m.empty()) return identity_matrix(ncols);
  // row-reduce the transpose: u * m^T = h; zero rows of h give kernel rows
  HnfResult r = row_hnf(transpose(m));
  MatZ out;
  for (std::size_t i = r.rank; i < r.u.size(); ++i) out.push_back(r.u[i]);
  return out;
}

/// Canonical (HNF) basis, as rows, of the saturation of the span of the
/// given rows: span_Q(rows) intersected with Z^n.
inline MatZ saturation_basis(const MatZ& rows, int ncols) {
  MatZ k = kernel_basis(rows, ncols);
  MatZ sat = kernel_basis(k, ncols);
  return row_hnf(sat).h;  // canonicalize; sat rows are independent
}

/// Extends a basis B (rows) of a saturated lattice to a unimodular matrix
/// whose first |B| rows are B.
inline MatZ complete_to_unimodular(const MatZ& basis, int ncols) {
  const int k = static_cast<int>(basis.size());
  if (k == 0) return identity_matrix(ncols);
  // U * B^T = (T; 0) with T unimodular because the lattice is saturated.
  HnfResult r = row_hnf(transpose(basis));
  if (r.rank != k) throw Error("basis rows are dependent");
  // rows of the completion: basis rows, then the last ncols-k rows of U^{-T}
  MatZ ui_t = transpose(r.u_inv);
  MatZ out = basis;
  for (int i = k; i < ncols; ++i) out.push_back(ui_t[i]);
  return out;
}

inline Int determinant(const MatZ& m) {
  // fraction-free Gaussian elimination (Bareiss)
  const int n = static_cast<int>(m.size());
  MatZ a = m;
  Int prev = 1, sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap = i;
          break;
        }
      if (swap == -1) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return n == 0 ? sign : Int(sign * a[n - 1][n - 1]);
}

/// Inverse of a unimodular integer matrix (throws if |det| != 1).
inline MatZ unimodular_inverse(const MatZ& m) {
  const int n = static_cast<int>(m.size());
  HnfResult r = row_hnf(m);
  if (r.rank != n) throw Error("matrix is singular");
  // h is upper triangular with positive pivots; unimodular means h == I
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (r.h[i][j] != (i == j ? 1 : 0)) throw Error("matrix is not unimodular");
  return r.u;
}

}  // namespace graphlink

#endif  // GRAPHLINK_LATTICE_HPP
