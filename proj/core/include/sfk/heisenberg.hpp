#pragma once

#include <optional>
#include <vector>

#include "sfk/matrix.hpp"

namespace sfk {

/// (z, x, y) stands for the unitriangular matrix [[1,x,z],[0,1,y],[0,0,1]].
struct Heis {
  Rat z, x, y;
  bool operator==(const Heis&) const = default;
};

inline Heis heis_identity() { return Heis{0, 0, 0}; }

/// (z',x',y') (z,x,y) = (z' + z + x' y, x' + x, y' + y).
Heis heis_mul(const Heis& g, const Heis& h);
Heis heis_inv(const Heis& g);

QMat heis_to_matrix(const Heis& g);
/// Requires an exact unitriangular 3x3 matrix.
Heis heis_from_matrix(const QMat& m);

/// alpha = (0,1,0), beta = (0,0,1), gamma = (1/p,0,0); [alpha,beta] = gamma^p.
struct HeisLattice {
  Heis alpha, beta, gamma;
  Int p;
};
HeisLattice lattice_generators(const Int& p);

enum class HeisGen { alpha, beta, gamma };

/// The tabulated action: alpha.(z,x,y) = (z+y, x+1, y), beta.(z,x,y) =
/// (z, x, y+1), gamma.(z,x,y) = (z + 1/p, x, y).
Heis eq21_action(HeisGen g, const Int& p, const Heis& q);

struct LeftMultCheck {
  bool ok = true;
  HeisGen gen = HeisGen::alpha;
  Heis point;
};
/// Verifies eq21_action(g, q) = heis_mul(g, q) on every sample point.
LeftMultCheck action_is_left_mult(const Int& p, const std::vector<Heis>& samples);

/// x -> b + A x.
struct AffineMap {
  QMat A;
  QVec b;
};
QVec affine_apply(const AffineMap& m, const QVec& x);
AffineMap affine_compose(const AffineMap& m1, const AffineMap& m2);
AffineMap affine_inverse(const AffineMap& m);

struct ConjugacyResult {
  bool ok = true;
  int witness = -1;
};
/// cand gens1[i] cand^-1 = gens2[i], exactly, for every i.
ConjugacyResult conjugate_verify(const std::vector<AffineMap>& gens1,
                                 const std::vector<AffineMap>& gens2, const AffineMap& cand);

}  // namespace sfk
