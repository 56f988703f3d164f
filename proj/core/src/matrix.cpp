#include "sfk/matrix.hpp"

#include <stdexcept>

namespace sfk {

IMat IMat::identity(std::size_t n) {
  IMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat IMat::from_rows(const std::vector<IVec>& rows) {
  IMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IMat imat_mul(const IMat& x, const IMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("imat_mul: dimension mismatch");
  IMat r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

IVec imat_apply(const IMat& m, const IVec& v) {
  if (m.cols != v.size()) throw std::invalid_argument("imat_apply: dimension mismatch");
  IVec r(m.rows, Int(0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

IMat imat_add(const IMat& x, const IMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("imat_add: shape");
  IMat r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

IMat imat_sub(const IMat& x, const IMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("imat_sub: shape");
  IMat r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

IMat imat_neg(const IMat& x) {
  IMat r = x;
  for (auto& e : r.a) e = -e;
  return r;
}

IMat imat_hstack(const IMat& x, const IMat& y) {
  if (x.rows != y.rows) throw std::invalid_argument("imat_hstack: row mismatch");
  IMat r(x.rows, x.cols + y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (std::size_t j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
  }
  return r;
}

Int imat_det(const IMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("imat_det: not square");
  // Fraction-free via rational elimination; result is exact.
  QMat q = QMat::from_integer(m);
  Rat d = qmat_det(q);
  if (d.get_den() != 1) throw std::logic_error("integer determinant not integral");
  return d.get_num();
}

IVec SmithResult::diag() const {
  IVec d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(S.at(i, i));
  return d;
}

namespace {

void row_swap(IMat& m, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}
void col_swap(IMat& m, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}
// row i -= q * row t
void row_axpy(IMat& m, std::size_t i, std::size_t t, const Int& q) {
  for (std::size_t c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(t, c);
}
void col_axpy(IMat& m, std::size_t j, std::size_t t, const Int& q) {
  for (std::size_t r = 0; r < m.rows; ++r) m.at(r, j) -= q * m.at(r, t);
}
void row_add(IMat& m, std::size_t dst, std::size_t src) {
  for (std::size_t c = 0; c < m.cols; ++c) m.at(dst, c) += m.at(src, c);
}
void row_negate(IMat& m, std::size_t i) {
  for (std::size_t c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithResult smith_normal_form(const IMat& A) {
  SmithResult res;
  res.S = A;
  res.U = IMat::identity(A.rows);
  res.V = IMat::identity(A.cols);
  IMat& S = res.S;
  IMat& U = res.U;
  IMat& V = res.V;

  std::size_t t = 0;
  while (t < A.rows && t < A.cols) {
    // Bring a minimal nonzero entry of the trailing block to (t,t).
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < A.rows; ++i)
      for (std::size_t j = t; j < A.cols; ++j) {
        if (S.at(i, j) == 0) continue;
        if (!found ||
            mpz_cmpabs(S.at(i, j).get_mpz_t(), S.at(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    if (pi != t) {
      row_swap(S, pi, t);
      row_swap(U, pi, t);
    }
    if (pj != t) {
      col_swap(S, pj, t);
      col_swap(V, pj, t);
    }

    for (;;) {
      if (S.at(t, t) < 0) {
        row_negate(S, t);
        row_negate(U, t);
      }
      // Clear column t under the pivot.
      bool restart = false;
      for (std::size_t i = t + 1; i < A.rows; ++i) {
        if (S.at(i, t) == 0) continue;
        Int q = fdiv(S.at(i, t), S.at(t, t));
        row_axpy(S, i, t, q);
        row_axpy(U, i, t, q);
        if (S.at(i, t) != 0) {  // remainder became the smaller pivot
          row_swap(S, i, t);
          row_swap(U, i, t);
          restart = true;
          break;
        }
      }
      if (restart) continue;
      // Clear row t right of the pivot.
      for (std::size_t j = t + 1; j < A.cols; ++j) {
        if (S.at(t, j) == 0) continue;
        Int q = fdiv(S.at(t, j), S.at(t, t));
        col_axpy(S, j, t, q);
        col_axpy(V, j, t, q);
        if (S.at(t, j) != 0) {
          col_swap(S, j, t);
          col_swap(V, j, t);
          restart = true;
          break;
        }
      }
      if (restart) continue;
      // Enforce the divisibility chain: pivot must divide the whole block.
      bool fixed = true;
      for (std::size_t i = t + 1; i < A.rows && fixed; ++i)
        for (std::size_t j = t + 1; j < A.cols && fixed; ++j)
          if (S.at(i, j) % S.at(t, t) != 0) {
            row_add(S, t, i);
            row_add(U, t, i);
            fixed = false;
          }
      if (fixed) break;
    }
    ++t;
  }
  res.rank = t;
  return res;
}

std::optional<IVec> solve_z(const IMat& A, const IVec& b) {
  if (b.size() != A.rows) throw std::invalid_argument("solve_z: rhs size");
  SmithResult snf = smith_normal_form(A);
  IVec ub = imat_apply(snf.U, b);
  IVec y(A.cols, Int(0));
  for (std::size_t i = 0; i < A.rows; ++i) {
    if (i < snf.rank) {
      if (ub[i] % snf.S.at(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / snf.S.at(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return imat_apply(snf.V, y);
}

IMat kernel_z(const IMat& A) {
  SmithResult snf = smith_normal_form(A);
  IMat k(A.cols, A.cols - snf.rank);
  for (std::size_t j = snf.rank; j < A.cols; ++j)
    for (std::size_t i = 0; i < A.cols; ++i) k.at(i, j - snf.rank) = snf.V.at(i, j);
  return k;
}

IVec cokernel_invariants(const IMat& A, std::size_t ambient) {
  if (A.rows != ambient) throw std::invalid_argument("cokernel_invariants: ambient mismatch");
  SmithResult snf = smith_normal_form(A);
  IVec inv;
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (snf.S.at(i, i) != 1) inv.push_back(snf.S.at(i, i));
  for (std::size_t i = snf.rank; i < ambient; ++i) inv.push_back(0);
  return inv;
}

IVec abelian_quotient_invariants(const IMat& zgens, const IMat& bgens) {
  if (zgens.rows != bgens.rows)
    throw std::invalid_argument("abelian_quotient_invariants: ambient mismatch");
  if (zgens.cols == 0) {
    for (std::size_t j = 0; j < bgens.cols; ++j)
      for (std::size_t i = 0; i < bgens.rows; ++i)
        if (bgens.at(i, j) != 0)
          throw std::invalid_argument("abelian_quotient_invariants: B not inside trivial Z");
    return {};
  }
  IMat syz = kernel_z(zgens);
  IMat rels(zgens.cols, syz.cols + bgens.cols);
  for (std::size_t i = 0; i < syz.rows; ++i)
    for (std::size_t j = 0; j < syz.cols; ++j) rels.at(i, j) = syz.at(i, j);
  for (std::size_t j = 0; j < bgens.cols; ++j) {
    IVec col(bgens.rows);
    for (std::size_t i = 0; i < bgens.rows; ++i) col[i] = bgens.at(i, j);
    auto u = solve_z(zgens, col);
    if (!u) throw std::invalid_argument("abelian_quotient_invariants: B not inside span(Z)");
    for (std::size_t i = 0; i < zgens.cols; ++i) rels.at(i, syz.cols + j) = (*u)[i];
  }
  return cokernel_invariants(rels, zgens.cols);
}

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows) {
  QMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

QMat QMat::from_integer(const IMat& m) {
  QMat q(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) q.a[i] = Rat(m.a[i]);
  return q;
}

QMat qmat_mul(const QMat& x, const QMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("qmat_mul: dimension mismatch");
  QMat r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

QVec qmat_apply(const QMat& m, const QVec& v) {
  if (m.cols != v.size()) throw std::invalid_argument("qmat_apply: dimension mismatch");
  QVec r(m.rows, Rat(0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

namespace {

// In-place reduced row echelon form; returns pivot column of each pivot row.
std::vector<std::size_t> rref(QMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    Rat inv = 1 / m.at(row, col);
    for (std::size_t c = 0; c < m.cols; ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rat f = m.at(r, col);
      for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rat qmat_det(const QMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("qmat_det: not square");
  QMat w = m;
  Rat det = 1;
  for (std::size_t col = 0; col < w.cols; ++col) {
    std::size_t sel = col;
    while (sel < w.rows && w.at(sel, col) == 0) ++sel;
    if (sel == w.rows) return Rat(0);
    if (sel != col) {
      for (std::size_t c = 0; c < w.cols; ++c) std::swap(w.at(sel, c), w.at(col, c));
      det = -det;
    }
    det *= w.at(col, col);
    Rat inv = 1 / w.at(col, col);
    for (std::size_t r = col + 1; r < w.rows; ++r) {
      if (w.at(r, col) == 0) continue;
      Rat f = w.at(r, col) * inv;
      for (std::size_t c = col; c < w.cols; ++c) w.at(r, c) -= f * w.at(col, c);
    }
  }
  return det;
}

std::optional<QMat> qmat_inverse(const QMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("qmat_inverse: not square");
  QMat aug(m.rows, 2 * m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() != m.rows) return std::nullopt;
  for (std::size_t i = 0; i < m.rows; ++i)
    if (pivots[i] != i) return std::nullopt;
  QMat inv(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
  return inv;
}

QSolveResult solve_q(const QMat& A, const QVec& b) {
  if (b.size() != A.rows) throw std::invalid_argument("solve_q: rhs size");
  QMat aug(A.rows, A.cols + 1);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  auto pivots = rref(aug);
  QSolveResult res;
  if (!pivots.empty() && pivots.back() == A.cols) {
    res.solvable = false;  // row [0 ... 0 | 1]
    return res;
  }
  res.solvable = true;
  res.particular = qvec_zero(A.cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) res.particular[pivots[r]] = aug.at(r, A.cols);
  std::vector<bool> is_pivot(A.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t j = 0; j < A.cols; ++j) {
    if (is_pivot[j]) continue;
    QVec k = qvec_zero(A.cols);
    k[j] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) k[pivots[r]] = -aug.at(r, j);
    res.kernel.push_back(std::move(k));
  }
  return res;
}

}  // namespace sfk
