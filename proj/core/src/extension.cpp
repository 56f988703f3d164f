#include "sfk/extension.hpp"

#include <stdexcept>

namespace sfk {

namespace {

IVec ivec_add(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// Pulls a cocycle over P back along rho: Qnew -> P, or pushes it through an
// integer matrix; both re-reduced by the target module.
Cochain2 transport_cochain(const FiniteGroup& Qnew, const CoefModule& Atarget,
                           const Cochain2& f, const std::vector<int>& rho, const IMat* eps) {
  Cochain2 out = Cochain2::zero(Qnew, Atarget);
  for (int a = 0; a < Qnew.order; ++a)
    for (int b = 0; b < Qnew.order; ++b) {
      const IVec& src = f.at(rho[a], rho[b]);
      out.at(a, b) = Atarget.reduce(eps ? imat_apply(*eps, src) : src);
    }
  return out;
}

}  // namespace

ExtensionData make_extension(FiniteGroup Q, CoefModule A, Cochain2 f) {
  auto check = is_cocycle(Q, A, f);
  if (!check.ok) {
    std::string what = check.failure == CocycleCheck::Failure::normalization
                           ? "normalization fails at ("
                           : "cocycle condition fails at (";
    what += std::to_string(check.witness[0]) + "," + std::to_string(check.witness[1]);
    if (check.witness[2] >= 0) what += "," + std::to_string(check.witness[2]);
    throw std::invalid_argument("make_extension: " + what + ")");
  }
  return ExtensionData{std::move(Q), std::move(A), std::move(f)};
}

ExtElement ext_identity(const ExtensionData& E) { return ExtElement{E.A.zero(), 0}; }

ExtElement ext_element(const ExtensionData& E, IVec a, int alpha) {
  if (static_cast<int>(a.size()) != E.A.rank || alpha < 0 || alpha >= E.Q.order)
    throw std::invalid_argument("ext_element: out of range");
  return ExtElement{E.A.reduce(std::move(a)), alpha};
}

ExtElement ext_mul(const ExtensionData& E, const ExtElement& x, const ExtElement& y) {
  IVec part = ivec_add(ivec_add(x.a, E.A.apply(x.alpha, y.a)), E.f.at(x.alpha, y.alpha));
  return ExtElement{E.A.reduce(std::move(part)), E.Q.op(x.alpha, y.alpha)};
}

ExtElement ext_inv(const ExtensionData& E, const ExtElement& x) {
  int ai = E.Q.inverse(x.alpha);
  // Solve (a,alpha)(b,alpha^-1) = 1: b = -phi(alpha^-1)(a + f(alpha,alpha^-1)).
  IVec t = ivec_add(x.a, E.f.at(x.alpha, ai));
  IVec b = E.A.apply(ai, t);
  for (auto& e : b) e = -e;
  ExtElement inv{E.A.reduce(std::move(b)), ai};
  ExtElement id = ext_identity(E);
  if (!(ext_mul(E, x, inv) == id) || !(ext_mul(E, inv, x) == id))
    throw std::logic_error("ext_inv: verification failed");
  return inv;
}

std::optional<int> torsion_order(const ExtensionData& E, const ExtElement& x, int bound) {
  if (bound < 1) throw std::invalid_argument("torsion_order: bound must be >= 1");
  ExtElement id = ext_identity(E);
  ExtElement p = x;
  for (int n = 1; n <= bound; ++n) {
    if (p == id) return n;
    p = ext_mul(E, p, x);
  }
  return std::nullopt;
}

ExtensionData pushout(const ExtensionData& E, const IMat& eps, const CoefModule& Aprime) {
  if (eps.rows != static_cast<std::size_t>(Aprime.rank) ||
      eps.cols != static_cast<std::size_t>(E.A.rank))
    throw std::invalid_argument("pushout: eps shape mismatch");
  // Injectivity of eps as a module map: its kernel must vanish in A.
  IMat rprime(Aprime.rank, 0);
  {
    std::vector<std::size_t> torsion;
    for (int i = 0; i < Aprime.rank; ++i)
      if (Aprime.moduli[i] != 0) torsion.push_back(i);
    rprime = IMat(Aprime.rank, torsion.size());
    for (std::size_t j = 0; j < torsion.size(); ++j)
      rprime.at(torsion[j], j) = Aprime.moduli[torsion[j]];
  }
  IMat stacked = imat_hstack(eps, imat_neg(rprime));
  IMat K = kernel_z(stacked);
  for (std::size_t j = 0; j < K.cols; ++j)
    for (int i = 0; i < E.A.rank; ++i) {
      Int v = mod_reduce(K.at(i, j), E.A.moduli[i]);
      if (v != 0) throw std::invalid_argument("pushout: eps is not injective on the module");
    }
  // Equivariance eps o phi(alpha) = phi'(alpha) o eps, checked mod A' moduli.
  for (int a = 0; a < E.Q.order; ++a) {
    IMat lhs = imat_mul(eps, E.A.action[a]);
    IMat rhs = imat_mul(Aprime.action[a], eps);
    for (int i = 0; i < Aprime.rank; ++i)
      for (int j = 0; j < E.A.rank; ++j)
        if (mod_reduce(lhs.at(i, j) - rhs.at(i, j), Aprime.moduli[i]) != 0)
          throw std::invalid_argument("pushout: eps is not equivariant at element " +
                                      std::to_string(a));
  }
  std::vector<int> id(E.Q.order);
  for (int i = 0; i < E.Q.order; ++i) id[i] = i;
  return make_extension(E.Q, Aprime, transport_cochain(E.Q, Aprime, E.f, id, &eps));
}

ExtensionData pullback(const ExtensionData& E, const FiniteGroup& Qnew,
                       const std::vector<int>& rho) {
  if (!is_homomorphism(Qnew, E.Q, rho))
    throw std::invalid_argument("pullback: rho is not a homomorphism");
  CoefModule A = E.A;
  A.action.clear();
  for (int a = 0; a < Qnew.order; ++a) A.action.push_back(E.A.action[rho[a]]);
  return make_extension(Qnew, std::move(A), transport_cochain(Qnew, E.A, E.f, rho, nullptr));
}

CongruenceWitness congruent(const ExtensionData& E1, const ExtensionData& E2) {
  if (E1.Q.mult != E2.Q.mult || E1.A.rank != E2.A.rank || E1.A.moduli != E2.A.moduli ||
      E1.A.action != E2.A.action)
    throw std::invalid_argument("congruent: extensions must share (Q, A, phi)");
  CongruenceWitness out;
  // delta lambda = f1 - f2 makes (a,alpha) -> (a + lambda(alpha), alpha) a
  // homomorphism E1 -> E2.
  auto sol = cohomologous(E1.Q, E1.A, E2.f, E1.f);
  if (!sol.found()) {
    out.reason = sol.reason;
    return out;
  }
  out.lam = std::move(*sol.lam);
  return out;
}

MapWitness map_extension(const ExtensionData& E, const ExtensionData& Eprime, const IMat& ibar,
                         const std::vector<int>& thetabar) {
  MapWitness out;
  if (!is_homomorphism(E.Q, Eprime.Q, thetabar))
    throw std::invalid_argument("map_extension: thetabar is not a homomorphism");
  if (ibar.rows != static_cast<std::size_t>(Eprime.A.rank) ||
      ibar.cols != static_cast<std::size_t>(E.A.rank))
    throw std::invalid_argument("map_extension: ibar shape mismatch");
  // Equivariance ibar o phi(alpha) = phi'(thetabar alpha) o ibar.
  for (int a = 0; a < E.Q.order; ++a) {
    IMat lhs = imat_mul(ibar, E.A.action[a]);
    IMat rhs = imat_mul(Eprime.A.action[thetabar[a]], ibar);
    for (int i = 0; i < Eprime.A.rank; ++i)
      for (int j = 0; j < E.A.rank; ++j)
        if (mod_reduce(lhs.at(i, j) - rhs.at(i, j), Eprime.A.moduli[i]) != 0)
          throw std::invalid_argument("map_extension: ibar is not equivariant at element " +
                                      std::to_string(a));
  }
  // Module over Q with the action phi' o thetabar.
  CoefModule Aq = Eprime.A;
  Aq.action.clear();
  for (int a = 0; a < E.Q.order; ++a) Aq.action.push_back(Eprime.A.action[thetabar[a]]);

  Cochain2 g = Cochain2::zero(E.Q, Aq);
  for (int a = 0; a < E.Q.order; ++a)
    for (int b = 0; b < E.Q.order; ++b) {
      IVec lhs = imat_apply(ibar, E.f.at(a, b));
      const IVec& rhs = Eprime.f.at(thetabar[a], thetabar[b]);
      IVec diff(Aq.rank);
      for (int i = 0; i < Aq.rank; ++i) diff[i] = lhs[i] - rhs[i];
      g.at(a, b) = Aq.reduce(std::move(diff));
    }
  auto sol = solve_coboundary(E.Q, Aq, g);
  if (!sol.found()) {
    out.reason = sol.reason;
    return out;
  }
  out.lam = std::move(*sol.lam);
  return out;
}

ExtElement map_apply(const ExtensionData& E, const ExtensionData& Eprime, const IMat& ibar,
                     const std::vector<int>& thetabar, const Cochain1& lam,
                     const ExtElement& x) {
  IVec part = ivec_add(imat_apply(ibar, x.a), lam.at(x.alpha));
  return ExtElement{Eprime.A.reduce(std::move(part)), thetabar[x.alpha]};
}

bool in_pushforward_kernel(const ExtensionData& E1, const ExtensionData& E2,
                           const ExtensionData& Eprime, const IMat& ibar,
                           const std::vector<int>& thetabar) {
  if (E1.Q.mult != E2.Q.mult)
    throw std::invalid_argument("in_pushforward_kernel: base groups differ");
  CoefModule Aq = Eprime.A;
  Aq.action.clear();
  for (int a = 0; a < E1.Q.order; ++a) Aq.action.push_back(Eprime.A.action[thetabar[a]]);
  Cochain2 g = Cochain2::zero(E1.Q, Aq);
  for (int a = 0; a < E1.Q.order; ++a)
    for (int b = 0; b < E1.Q.order; ++b) {
      IVec d(E1.A.rank);
      for (int i = 0; i < E1.A.rank; ++i) d[i] = E2.f.at(a, b)[i] - E1.f.at(a, b)[i];
      g.at(a, b) = Aq.reduce(imat_apply(ibar, d));
    }
  return solve_coboundary(E1.Q, Aq, g).found();
}

}  // namespace sfk
