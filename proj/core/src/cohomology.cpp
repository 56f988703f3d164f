#include "sfk/cohomology.hpp"

#include <stdexcept>

namespace sfk {

namespace {

// Coordinates of the normalized bar complex: degree-d cochains vanish when
// any argument is the identity, so tuples range over the q-1 non-identity
// elements. A tuple (a1..ad) with entries in 1..q-1 and coefficient slot i
// gets column index ((flat tuple) * k + i).

struct BarIndex {
  int q, k;
  int nontriv() const { return q - 1; }
  std::size_t dim(int degree) const {
    std::size_t d = 1;
    for (int i = 0; i < degree; ++i) d *= nontriv();
    return d * k;
  }
  std::size_t flat1(int a) const { return a - 1; }
  std::size_t flat2(int a, int b) const { return flat1(a) * nontriv() + flat1(b); }
  std::size_t flat3(int a, int b, int c) const { return flat2(a, b) * nontriv() + flat1(c); }
};

// Moduli relation columns for N copies of the module.
IMat moduli_relations(const CoefModule& A, std::size_t copies) {
  std::vector<std::size_t> torsion;
  for (int i = 0; i < A.rank; ++i)
    if (A.moduli[i] != 0) torsion.push_back(i);
  IMat R(copies * A.rank, copies * torsion.size());
  std::size_t col = 0;
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t t : torsion) R.at(c * A.rank + t, col++) = A.moduli[t];
  return R;
}

// delta^0: A -> C^1, (delta a)(alpha) = phi(alpha) a - a.
IMat build_d0(const FiniteGroup& Q, const CoefModule& A) {
  BarIndex ix{Q.order, A.rank};
  IMat D(ix.dim(1), A.rank);
  for (int a = 1; a < Q.order; ++a) {
    std::size_t row = ix.flat1(a) * A.rank;
    for (int i = 0; i < A.rank; ++i) {
      for (int j = 0; j < A.rank; ++j) D.at(row + i, j) += A.action[a].at(i, j);
      D.at(row + i, i) -= 1;
    }
  }
  return D;
}

// delta^1: C^1 -> C^2,
// (delta l)(a,b) = l(a) + phi(a) l(b) - l(ab), with l(1) = 0.
IMat build_d1(const FiniteGroup& Q, const CoefModule& A) {
  BarIndex ix{Q.order, A.rank};
  IMat D(ix.dim(2), ix.dim(1));
  auto add_id = [&](std::size_t row, int g, const Int& s) {
    if (g == 0) return;  // normalized: l(1) = 0
    std::size_t col = ix.flat1(g) * A.rank;
    for (int i = 0; i < A.rank; ++i) D.at(row + i, col + i) += s;
  };
  for (int a = 1; a < Q.order; ++a)
    for (int b = 1; b < Q.order; ++b) {
      std::size_t row = ix.flat2(a, b) * A.rank;
      add_id(row, a, 1);
      add_id(row, Q.op(a, b), -1);
      // + phi(a) l(b)
      std::size_t col = ix.flat1(b) * A.rank;
      for (int i = 0; i < A.rank; ++i)
        for (int j = 0; j < A.rank; ++j) D.at(row + i, col + j) += A.action[a].at(i, j);
    }
  return D;
}

// delta^2: C^2 -> C^3,
// (delta f)(a,b,c) = phi(a) f(b,c) - f(ab,c) + f(a,bc) - f(a,b).
IMat build_d2(const FiniteGroup& Q, const CoefModule& A) {
  BarIndex ix{Q.order, A.rank};
  IMat D(ix.dim(3), ix.dim(2));
  auto add_id = [&](std::size_t row, int g, int h, const Int& s) {
    if (g == 0 || h == 0) return;  // normalized cochains vanish there
    std::size_t col = ix.flat2(g, h) * A.rank;
    for (int i = 0; i < A.rank; ++i) D.at(row + i, col + i) += s;
  };
  for (int a = 1; a < Q.order; ++a)
    for (int b = 1; b < Q.order; ++b)
      for (int c = 1; c < Q.order; ++c) {
        std::size_t row = ix.flat3(a, b, c) * A.rank;
        std::size_t col = ix.flat2(b, c) * A.rank;
        for (int i = 0; i < A.rank; ++i)
          for (int j = 0; j < A.rank; ++j) D.at(row + i, col + j) += A.action[a].at(i, j);
        add_id(row, Q.op(a, b), c, -1);
        add_id(row, a, Q.op(b, c), 1);
        add_id(row, a, b, -1);
      }
  return D;
}

// Generators of the subgroup { x : D x = 0 mod target moduli }: the
// x-projection of the integer kernel of [D | -R_target].
IMat kernel_mod_relations(const IMat& D, const IMat& rtarget) {
  IMat stacked = imat_hstack(D, imat_neg(rtarget));
  IMat K = kernel_z(stacked);
  IMat Z(D.cols, K.cols);
  for (std::size_t i = 0; i < D.cols; ++i)
    for (std::size_t j = 0; j < K.cols; ++j) Z.at(i, j) = K.at(i, j);
  return Z;
}

IVec homology_invariants(const IMat& dout, const IMat& rtarget, const IMat& din,
                         const IMat& rhere) {
  IMat Z = kernel_mod_relations(dout, rtarget);
  IMat B = imat_hstack(din, rhere);
  return abelian_quotient_invariants(Z, B);
}

}  // namespace

IVec h2_invariant_factors(const FiniteGroup& Q, const CoefModule& A) {
  if (Q.order == 1 || A.rank == 0) return {};
  BarIndex ix{Q.order, A.rank};
  return homology_invariants(build_d2(Q, A), moduli_relations(A, ix.dim(3) / A.rank),
                             build_d1(Q, A), moduli_relations(A, ix.dim(2) / A.rank));
}

IVec h1_invariant_factors(const FiniteGroup& Q, const CoefModule& A) {
  if (Q.order == 1 || A.rank == 0) return {};
  BarIndex ix{Q.order, A.rank};
  return homology_invariants(build_d1(Q, A), moduli_relations(A, ix.dim(2) / A.rank),
                             build_d0(Q, A), moduli_relations(A, ix.dim(1) / A.rank));
}

CoboundingWitness solve_coboundary(const FiniteGroup& Q, const CoefModule& A,
                                   const Cochain2& f) {
  CoboundingWitness out;
  if (Q.order == 1 || A.rank == 0) {
    out.lam = Cochain1::zero(Q, A);
    return out;
  }
  BarIndex ix{Q.order, A.rank};
  IMat D1 = build_d1(Q, A);
  IMat R2 = moduli_relations(A, ix.dim(2) / A.rank);
  IMat sys = imat_hstack(D1, R2);
  IVec rhs(ix.dim(2), Int(0));
  for (int a = 1; a < Q.order; ++a)
    for (int b = 1; b < Q.order; ++b) {
      std::size_t row = ix.flat2(a, b) * A.rank;
      for (int i = 0; i < A.rank; ++i) rhs[row + i] = f.at(a, b)[i];
    }
  auto sol = solve_z(sys, rhs);
  if (!sol) {
    out.reason = "no integral solution: the system delta lambda = f is unsolvable over the module";
    return out;
  }
  Cochain1 lam = Cochain1::zero(Q, A);
  for (int a = 1; a < Q.order; ++a) {
    IVec v(A.rank);
    for (int i = 0; i < A.rank; ++i) v[i] = (*sol)[ix.flat1(a) * A.rank + i];
    lam.at(a) = A.reduce(std::move(v));
  }
  out.lam = std::move(lam);
  return out;
}

CoboundingWitness cohomologous(const FiniteGroup& Q, const CoefModule& A, const Cochain2& f1,
                               const Cochain2& f2) {
  if (f1.q != f2.q || f1.rank != f2.rank)
    throw std::invalid_argument("cohomologous: mismatched bases");
  return solve_coboundary(Q, A, cochain2_sub(A, f2, f1));
}

}  // namespace sfk
