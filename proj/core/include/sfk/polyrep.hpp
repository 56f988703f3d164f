#pragma once

#include <string>

#include "sfk/group.hpp"
#include "sfk/poly.hpp"

namespace sfk {

/// Block ranks of a torsion-free central series, most central block first;
/// coordinates are grouped accordingly.
struct CentralSeriesSpec {
  std::vector<int> ranks;  // k_1, ..., k_c
  int total() const;
  int block_of(int coord) const;
};

struct ShapeCheck {
  bool ok = true;
  int component = -1;
  std::string reason;
};

/// Canonical block shape: the level-i block is a unimodular-linear function
/// of its own variables plus a polynomial in the less central blocks; more
/// central variables never appear in less central components.
ShapeCheck canonical_shape_check(const PolyMap& p, const CentralSeriesSpec& series);

/// A 2-step nilpotent lattice: central rank k1, abelianized rank k2,
/// commutator pairings B (one k2 x k2 integer matrix per central
/// coordinate), central coordinate shifts 1/denom[s].
struct TwoStepData {
  int k1 = 0, k2 = 0;
  std::vector<IMat> B;
  IVec denom;
};

struct TwoStepRep {
  TwoStepData data;
  std::vector<PolyMap> gens;  // e_1..e_k2 then c_1..c_k1
  FpPresentation pres;        // the induced presentation, relators verified
  CentralSeriesSpec series;
};

/// Degree <= 2 canonical representation: central generators are the
/// translations by 1/d_s, coset generator e_i acts by
/// (z, t) -> (z + B row-i contraction of t, t + e_i). Verifies the shape and
/// all induced relators; throws when B is inconsistent.
TwoStepRep construct_2step_rep(const TwoStepData& data);

struct RepCheck {
  bool ok = true;
  int relator = -1;        // failing relator index, or
  int central_pair = -1;   // failing (central gen, other gen) packed as c * ngens + other
  std::string witness;
};

/// Every relator must compose symbolically to the identity tuple; generators
/// carrying a central marker must commute with all generators. Throws when a
/// presentation generator has no assigned map or lacks an inverse.
RepCheck verify_rep(const std::vector<PolyMap>& gens, const FpPresentation& pres);

struct PolyConjResult {
  bool ok = true;
  int generator = -1;
};

/// cand^-1 o rep1[g] o cand = rep2[g] symbolically for every generator; cand
/// must carry a stored inverse.
PolyConjResult conjugacy_verify(const std::vector<PolyMap>& rep1,
                                const std::vector<PolyMap>& rep2, const PolyMap& cand);

/// Evaluates a (possibly signed) word in the generators.
PolyMap word_map(const std::vector<PolyMap>& gens, const std::vector<int>& word, int dim);

}  // namespace sfk
