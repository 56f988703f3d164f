#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfk/matrix.hpp"
#include "sfk/rational.hpp"

namespace sfk {

/// A finite group as a validated multiplication table. Element 0 is always
/// the identity; construction canonicalizes.
struct FiniteGroup {
  int order = 1;
  std::vector<std::vector<int>> mult;  // mult[a][b] = ab
  std::vector<int> inv;

  int op(int a, int b) const { return mult[a][b]; }
  int inverse(int a) const { return inv[a]; }
  int power(int a, long n) const;
  int element_order(int a) const;
  bool is_abelian() const;
};

struct GroupResult {
  std::optional<FiniteGroup> group;
  std::string error;          // names the failed axiom
  std::vector<int> witness;   // offending triple / element
  bool ok() const { return group.has_value(); }
};

FiniteGroup build_cyclic(int n);
FiniteGroup build_abelian(const std::vector<int>& moduli);
GroupResult validate_group(const std::vector<std::vector<int>>& mult);

/// map[q] is the image in P; checks map[ab] = map[a]map[b] and map[1] = 1.
bool is_homomorphism(const FiniteGroup& Q, const FiniteGroup& P, const std::vector<int>& map);

/// A subgroup re-indexed as a FiniteGroup, with embed[i] the parent element.
struct Subgroup {
  FiniteGroup group;
  std::vector<int> embed;
};
Subgroup subgroup_from_elements(const FiniteGroup& Q, std::vector<int> elements);

/// Finite Q-set: perm[alpha][w] is the image point of w.
struct PermAction {
  int points = 0;
  std::vector<std::vector<int>> perm;

  int apply(int alpha, int w) const { return perm[alpha][w]; }
};

struct ActionResult {
  std::optional<PermAction> action;
  std::string error;
  std::pair<int, int> witness{-1, -1};
  bool ok() const { return action.has_value(); }
};
ActionResult validate_perm_action(const FiniteGroup& Q, int points,
                                  const std::vector<std::vector<int>>& perm);
PermAction trivial_action(const FiniteGroup& Q, int points);

struct OrbitReport {
  std::vector<std::vector<int>> orbits;       // partition of W
  std::vector<std::vector<int>> stabilizers;  // per point, sorted element list
};
OrbitReport orbits_and_stabilizers(const FiniteGroup& Q, const PermAction& act);

/// Finitely generated abelian coefficient group Z^r / (moduli), with a
/// Q-action by matrices. moduli[i] == 0 marks a free factor.
struct CoefModule {
  int rank = 0;
  IVec moduli;                // length rank
  std::vector<IMat> action;   // per group element, rank x rank

  IVec reduce(IVec v) const;
  IVec apply(int alpha, const IVec& v) const;
  IVec zero() const { return IVec(rank, Int(0)); }
  bool is_free() const;
  bool trivial_action_p() const;
  /// Number of elements; nullopt when some factor is infinite.
  std::optional<Int> size() const;
  /// Enumerates all elements of a finite module.
  std::vector<IVec> enumerate() const;
};

struct ModuleResult {
  std::optional<CoefModule> module;
  std::string error;
  std::pair<int, int> witness{-1, -1};  // violated pair, or (matrix index, -1)
  bool ok() const { return module.has_value(); }
};
ModuleResult validate_module(const FiniteGroup& Q, int rank, IVec moduli,
                             std::vector<IMat> action);
CoefModule trivial_module(const FiniteGroup& Q, int rank, IVec moduli);

/// Words are sequences of signed 1-based generator indices: +k is generator
/// k-1, -k its inverse.
struct FpPresentation {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> relators;
  std::vector<int> central;  // generator indices declared central

  bool valid() const;  // every relator references declared generators
};

/// Presentation data {g; b; (alpha_j, beta_j)} of a Seifert 3-orbifold group.
struct SeifertSymbol {
  int genus = 0;
  Int b = 0;
  std::vector<std::pair<Int, Int>> cones;  // alpha_j >= 2, beta_j
};

/// Generators x_i, y_i (i <= g), w_j (j <= p), z; relators w_j^a_j z^b_j and
/// w_1..w_p [x_1,y_1]..[x_g,y_g] z^-b; z marked central.
FpPresentation seifert_presentation(const SeifertSymbol& sym);

}  // namespace sfk
