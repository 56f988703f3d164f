#pragma once

#include <optional>
#include <string>
#include <utility>

#include "sfk/extension.hpp"

namespace sfk {

/// An element (lam, mat, perm) of M(W,Q^k) x| (GL(k,Q) x Sym(W)), acting on
/// Q^k x W by (x, w) -> (mat x - lam(perm w), perm w).
struct UniversalElement {
  std::vector<QVec> lam;  // per point of W
  QMat mat;
  std::vector<int> perm;

  int k() const { return static_cast<int>(mat.rows); }
  int points() const { return static_cast<int>(perm.size()); }
  bool operator==(const UniversalElement&) const = default;
};

UniversalElement u_identity(int k, int points);
std::pair<QVec, int> u_apply(const UniversalElement& e, const QVec& x, int w);
/// Group law: (l1,a1,h1)(l2,a2,h2) = (l1 + a1 o l2 o h1^-1, a1 a2, h1 h2).
UniversalElement u_compose(const UniversalElement& e1, const UniversalElement& e2);
UniversalElement u_inverse(const UniversalElement& e);
/// Conjugation by a pure gauge element lam0 in M(W,Q^k).
UniversalElement u_conjugate_by_gauge(const std::vector<QVec>& lam0, const UniversalElement& e);

/// theta: pi -> TOP(Q^k x W) for E = A x_{(f,phi)} Q with free A read over
/// the rationals. Stores the solved lambda with delta lambda = f, so that
/// theta(a, alpha) = (w -> -a - lambda(alpha)(w), phi(alpha), rho(alpha)).
struct ConstructedAction {
  ExtensionData E;
  PermAction rho;
  FnCochain1 lambda;

  UniversalElement theta(const ExtElement& x) const;
};

/// Solves the conjugating cochain by averaging and verifies, exhaustively:
/// the compatibility identity for all |Q|^2 pairs and all w, translations on
/// the A-part, and the homomorphism property on a bounded box of module
/// parts. Throws std::invalid_argument / std::logic_error on failure.
ConstructedAction construct_theta(const ExtensionData& E, const PermAction& rho, int box = 2);

struct FiberOrbit {
  int representative = 0;
  std::vector<int> orbit;
  std::vector<int> stabilizer;  // parent-group element indices
  bool typical = false;
  ExtensionData pi_w;  // pullback along Q_w -> Q
};
struct FiberReport {
  std::vector<FiberOrbit> orbits;
};
FiberReport fiber_analysis(const ConstructedAction& act);

/// Kernel of alpha -> (phi(alpha), rho(alpha)); injective iff trivial.
struct InjectivityResult {
  bool injective = false;
  int witness = -1;  // non-identity kernel element when not injective
};
InjectivityResult injectivity_check(const FiniteGroup& Q, const CoefModule& A,
                                    const PermAction& rho);

/// Searches for lam0 in M(W,Q^k) with theta2 = mu(lam0) o theta1. The
/// witness is the least-coordinates solution (free variables zero) of the
/// rational linear system; it is unique only up to twist-invariant maps.
enum class EquivStatus { found, none, rigidity_regime };
struct EquivResult {
  EquivStatus status = EquivStatus::none;
  std::vector<QVec> lam0;
  std::string reason;
};
EquivResult strict_equiv(const ConstructedAction& act1, const ConstructedAction& act2,
                         int box = 2);

}  // namespace sfk
