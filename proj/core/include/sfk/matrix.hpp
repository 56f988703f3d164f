#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sfk/rational.hpp"

namespace sfk {

/// Dense integer matrix. Row-major, exact GMP entries.
struct IMat {
  std::size_t rows = 0, cols = 0;
  IVec a;

  IMat() = default;
  IMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}

  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static IMat identity(std::size_t n);
  static IMat from_rows(const std::vector<IVec>& rows);

  bool operator==(const IMat&) const = default;
};

IMat imat_mul(const IMat& x, const IMat& y);
IVec imat_apply(const IMat& m, const IVec& v);
IMat imat_add(const IMat& x, const IMat& y);
IMat imat_sub(const IMat& x, const IMat& y);
IMat imat_neg(const IMat& x);
IMat imat_hstack(const IMat& x, const IMat& y);
Int imat_det(const IMat& m);

/// U * A * V = S with U, V unimodular and S diagonal, S(0,0) | S(1,1) | ...
struct SmithResult {
  IMat U, S, V;
  std::size_t rank = 0;
  IVec diag() const;
};
SmithResult smith_normal_form(const IMat& A);

/// Integer solution of A x = b, or nullopt when none exists over Z.
std::optional<IVec> solve_z(const IMat& A, const IVec& b);

/// Columns form a basis of { x in Z^cols : A x = 0 }.
IMat kernel_z(const IMat& A);

/// Invariant factors of Z^ambient / column-span(A): nontrivial torsion in
/// divisibility order, then one 0 per free factor.
IVec cokernel_invariants(const IMat& A, std::size_t ambient);

/// Invariant factors of <columns of zgens> / <columns of bgens>.
/// Precondition: the b-span lies inside the z-span (throws otherwise).
IVec abelian_quotient_invariants(const IMat& zgens, const IMat& bgens);

/// Dense rational matrix.
struct QMat {
  std::size_t rows = 0, cols = 0;
  QVec a;

  QMat() = default;
  QMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

  Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static QMat identity(std::size_t n);
  static QMat from_rows(const std::vector<QVec>& rows);
  static QMat from_integer(const IMat& m);

  bool operator==(const QMat&) const = default;
};

QMat qmat_mul(const QMat& x, const QMat& y);
QVec qmat_apply(const QMat& m, const QVec& v);
Rat qmat_det(const QMat& m);
std::optional<QMat> qmat_inverse(const QMat& m);

/// Solution of A x = b over the rationals with every free variable pinned to
/// zero, plus a basis of the homogeneous solution space.
struct QSolveResult {
  bool solvable = false;
  QVec particular;
  std::vector<QVec> kernel;
};
QSolveResult solve_q(const QMat& A, const QVec& b);

}  // namespace sfk
