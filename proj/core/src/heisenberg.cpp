#include "sfk/heisenberg.hpp"

#include <stdexcept>

namespace sfk {

Heis heis_mul(const Heis& g, const Heis& h) {
  return Heis{g.z + h.z + g.x * h.y, g.x + h.x, g.y + h.y};
}

Heis heis_inv(const Heis& g) { return Heis{-g.z + g.x * g.y, -g.x, -g.y}; }

QMat heis_to_matrix(const Heis& g) {
  QMat m = QMat::identity(3);
  m.at(0, 1) = g.x;
  m.at(0, 2) = g.z;
  m.at(1, 2) = g.y;
  return m;
}

Heis heis_from_matrix(const QMat& m) {
  if (m.rows != 3 || m.cols != 3) throw std::invalid_argument("heis_from_matrix: need 3x3");
  if (m.at(0, 0) != 1 || m.at(1, 1) != 1 || m.at(2, 2) != 1 || m.at(1, 0) != 0 ||
      m.at(2, 0) != 0 || m.at(2, 1) != 0)
    throw std::invalid_argument("heis_from_matrix: not unitriangular");
  return Heis{m.at(0, 2), m.at(0, 1), m.at(1, 2)};
}

HeisLattice lattice_generators(const Int& p) {
  if (p == 0) throw std::invalid_argument("lattice_generators: p must be nonzero");
  return HeisLattice{Heis{0, 1, 0}, Heis{0, 0, 1}, Heis{Rat(Int(1), p), 0, 0}, p};
}

Heis eq21_action(HeisGen g, const Int& p, const Heis& q) {
  switch (g) {
    case HeisGen::alpha:
      return Heis{q.z + q.y, q.x + 1, q.y};
    case HeisGen::beta:
      return Heis{q.z, q.x, q.y + 1};
    case HeisGen::gamma:
      if (p == 0) throw std::invalid_argument("eq21_action: p must be nonzero");
      return Heis{q.z + Rat(Int(1), p), q.x, q.y};
  }
  throw std::logic_error("eq21_action: unreachable");
}

LeftMultCheck action_is_left_mult(const Int& p, const std::vector<Heis>& samples) {
  HeisLattice lat = lattice_generators(p);
  const std::pair<HeisGen, Heis> gens[] = {{HeisGen::alpha, lat.alpha},
                                           {HeisGen::beta, lat.beta},
                                           {HeisGen::gamma, lat.gamma}};
  for (const auto& q : samples)
    for (const auto& [tag, g] : gens)
      if (!(eq21_action(tag, p, q) == heis_mul(g, q))) return LeftMultCheck{false, tag, q};
  return LeftMultCheck{};
}

QVec affine_apply(const AffineMap& m, const QVec& x) {
  return qvec_add(m.b, qmat_apply(m.A, x));
}

AffineMap affine_compose(const AffineMap& m1, const AffineMap& m2) {
  if (m1.A.cols != m2.A.rows) throw std::invalid_argument("affine_compose: dimension mismatch");
  return AffineMap{qmat_mul(m1.A, m2.A), qvec_add(m1.b, qmat_apply(m1.A, m2.b))};
}

AffineMap affine_inverse(const AffineMap& m) {
  auto inv = qmat_inverse(m.A);
  if (!inv) throw std::invalid_argument("affine_inverse: linear part not invertible");
  return AffineMap{*inv, qvec_neg(qmat_apply(*inv, m.b))};
}

ConjugacyResult conjugate_verify(const std::vector<AffineMap>& gens1,
                                 const std::vector<AffineMap>& gens2, const AffineMap& cand) {
  if (gens1.size() != gens2.size())
    throw std::invalid_argument("conjugate_verify: generator lists must match in length");
  AffineMap cinv = affine_inverse(cand);
  for (std::size_t i = 0; i < gens1.size(); ++i) {
    AffineMap got = affine_compose(cand, affine_compose(gens1[i], cinv));
    if (!(got.A == gens2[i].A) || !(got.b == gens2[i].b))
      return ConjugacyResult{false, static_cast<int>(i)};
  }
  return ConjugacyResult{};
}

}  // namespace sfk
