#pragma once

#include <optional>
#include <string>

#include "sfk/cohomology.hpp"

namespace sfk {

/// The extension E = A x_{(f,phi)} Q presented by a validated cocycle.
struct ExtensionData {
  FiniteGroup Q;
  CoefModule A;  // carries phi
  Cochain2 f;
};

/// Validates the cocycle; throws std::invalid_argument with the witness.
ExtensionData make_extension(FiniteGroup Q, CoefModule A, Cochain2 f);

struct ExtElement {
  IVec a;
  int alpha = 0;
  bool operator==(const ExtElement&) const = default;
};

ExtElement ext_identity(const ExtensionData& E);
ExtElement ext_element(const ExtensionData& E, IVec a, int alpha);

/// (a, alpha) (b, beta) = (a + phi(alpha) b + f(alpha, beta), alpha beta).
ExtElement ext_mul(const ExtensionData& E, const ExtElement& x, const ExtElement& y);
ExtElement ext_inv(const ExtensionData& E, const ExtElement& x);

/// Least n <= bound with x^n = 1, or nullopt ("exceeds bound").
std::optional<int> torsion_order(const ExtensionData& E, const ExtElement& x, int bound);

/// Pushout along an injective, equivariant eps: A -> A'; the caller supplies
/// the extended operator phi' inside Aprime. New cocycle eps o f.
ExtensionData pushout(const ExtensionData& E, const IMat& eps, const CoefModule& Aprime);

/// Pullback along a verified homomorphism rho: Qnew -> Q of the base.
ExtensionData pullback(const ExtensionData& E, const FiniteGroup& Qnew,
                       const std::vector<int>& rho);

/// Congruence test. The witness satisfies delta lambda = f1 - f2, so that
/// (a, alpha) -> (a + lambda(alpha), alpha) is an isomorphism E1 -> E2.
struct CongruenceWitness {
  std::optional<Cochain1> lam;
  std::string reason;
  bool congruent() const { return lam.has_value(); }
};
CongruenceWitness congruent(const ExtensionData& E1, const ExtensionData& E2);

/// Theorem-style mapping solver for abelian kernels: finds lambda: Q -> A'
/// with ibar o f - thetabar^* f' = delta lambda, giving the homomorphism
/// theta(a, alpha) = (ibar(a) + lambda(alpha), thetabar(alpha)).
struct MapWitness {
  std::optional<Cochain1> lam;  // valued in E'.A
  std::string reason;
  bool found() const { return lam.has_value(); }
};
MapWitness map_extension(const ExtensionData& E, const ExtensionData& Eprime, const IMat& ibar,
                         const std::vector<int>& thetabar);
ExtElement map_apply(const ExtensionData& E, const ExtensionData& Eprime, const IMat& ibar,
                     const std::vector<int>& thetabar, const Cochain1& lam,
                     const ExtElement& x);

/// Derived predicate: [E2] - [E1] lies in Ker(i_* : H^2(Q;A) -> H^2(Q;A'))
/// iff ibar o (f2 - f1) cobounds over A' with the action phi' o thetabar.
bool in_pushforward_kernel(const ExtensionData& E1, const ExtensionData& E2,
                           const ExtensionData& Eprime, const IMat& ibar,
                           const std::vector<int>& thetabar);

}  // namespace sfk
