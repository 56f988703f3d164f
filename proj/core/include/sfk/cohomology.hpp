#pragma once

#include <optional>
#include <string>

#include "sfk/cochain.hpp"

namespace sfk {

/// Invariant factors of H^2_phi(Q;A) / H^1_phi(Q;A) computed from the
/// normalized bar complex over Z with moduli relations appended; entry 0
/// denotes a free factor, nontrivial torsion comes in divisibility order.
IVec h2_invariant_factors(const FiniteGroup& Q, const CoefModule& A);
IVec h1_invariant_factors(const FiniteGroup& Q, const CoefModule& A);

struct CoboundingWitness {
  std::optional<Cochain1> lam;
  std::string reason;  // set when no solution exists
  bool found() const { return lam.has_value(); }
};

/// Solves delta lambda = f2 - f1 over the module (Smith normal form with
/// congruence rows for finite moduli). The certificate of no solution is the
/// unsolvable diagonal position.
CoboundingWitness cohomologous(const FiniteGroup& Q, const CoefModule& A, const Cochain2& f1,
                               const Cochain2& f2);

/// Solves delta lambda = f for a single cochain (lambda(1) = 0 enforced).
CoboundingWitness solve_coboundary(const FiniteGroup& Q, const CoefModule& A, const Cochain2& f);

}  // namespace sfk
