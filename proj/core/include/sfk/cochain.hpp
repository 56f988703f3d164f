#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sfk/group.hpp"

namespace sfk {

/// Normalized 2-cochain f: Q x Q -> A, written additively; f(1,.) = f(.,1) = 0.
struct Cochain2 {
  int q = 0;
  int rank = 0;
  std::vector<IVec> v;  // index a*q + b

  IVec& at(int a, int b) { return v[a * q + b]; }
  const IVec& at(int a, int b) const { return v[a * q + b]; }
  static Cochain2 zero(const FiniteGroup& Q, const CoefModule& A);
};

/// Normalized 1-cochain lambda: Q -> A with lambda(1) = 0.
struct Cochain1 {
  int q = 0;
  int rank = 0;
  std::vector<IVec> v;

  IVec& at(int a) { return v[a]; }
  const IVec& at(int a) const { return v[a]; }
  static Cochain1 zero(const FiniteGroup& Q, const CoefModule& A);
};

/// Rejects un-normalized input (it is not silently normalized) and reduces
/// entries mod the moduli.
Cochain2 make_cochain2(const FiniteGroup& Q, const CoefModule& A, std::vector<IVec> values);
Cochain1 make_cochain1(const FiniteGroup& Q, const CoefModule& A, std::vector<IVec> values);

struct CocycleCheck {
  bool ok = false;
  enum class Failure { none, normalization, cocycle } failure = Failure::none;
  std::array<int, 3> witness{-1, -1, -1};
};

/// Checks f(alpha,1) = f(1,beta) = 0 and
/// f(alpha,beta) + f(alpha beta,gamma) = phi(alpha) f(beta,gamma) + f(alpha,beta gamma).
CocycleCheck is_cocycle(const FiniteGroup& Q, const CoefModule& A, const Cochain2& f);

/// delta lambda(alpha,beta) = lambda(alpha) + phi(alpha) lambda(beta) - lambda(alpha beta).
Cochain2 coboundary(const FiniteGroup& Q, const CoefModule& A, const Cochain1& lam);

Cochain2 cochain2_add(const CoefModule& A, const Cochain2& f, const Cochain2& g);
Cochain2 cochain2_sub(const CoefModule& A, const Cochain2& f, const Cochain2& g);
Cochain2 cochain2_neg(const CoefModule& A, const Cochain2& f);
bool cochain2_eq(const Cochain2& f, const Cochain2& g);

/// Central twist g.f = g + f entrywise; g must be a cocycle.
Cochain2 central_twist(const FiniteGroup& Q, const CoefModule& A, const Cochain2& g,
                       const Cochain2& f);

/// Crossed homomorphism check over the module: eta(ab) = eta(a) + phi(a) eta(b).
struct CrossedCheck {
  bool ok = false;
  std::pair<int, int> witness{-1, -1};
};
CrossedCheck is_crossed_hom(const FiniteGroup& Q, const CoefModule& A, const Cochain1& eta);

/// Rational representation of a finite group: validated hom Q -> GL(k,Q).
struct RatRep {
  int k = 0;
  std::vector<QMat> mats;  // per group element
};
std::optional<RatRep> make_rat_rep(const FiniteGroup& Q, std::vector<QMat> mats);
CrossedCheck is_crossed_hom_rat(const FiniteGroup& Q, const RatRep& rep,
                                const std::vector<QVec>& eta);

/// Principal part of a crossed homomorphism over a rationally-acting finite
/// group: d = (1/|Q|) sum eta(psi), with eta(psi) = d - psi d verified for
/// every psi. Throws std::invalid_argument when eta is not a crossed hom.
QVec principal_part(const FiniteGroup& Q, const RatRep& rep, const std::vector<QVec>& eta);

/// Non-abelian 1-cocycles eta: Q -> C for a finite C, as verification only.
/// phi[alpha] is the automorphism of C as an element map.
bool is_automorphism_table(const FiniteGroup& C, const std::vector<int>& map);
CrossedCheck is_crossed_hom_nonab(const FiniteGroup& Q, const FiniteGroup& C,
                                  const std::vector<std::vector<int>>& phi,
                                  const std::vector<int>& eta);
/// Searches the supplied candidate set for c with eta2(a) = c eta1(a) phi(a)(c^-1).
std::optional<int> crossed_cohomologous_nonab(const FiniteGroup& Q, const FiniteGroup& C,
                                              const std::vector<std::vector<int>>& phi,
                                              const std::vector<int>& eta1,
                                              const std::vector<int>& eta2,
                                              const std::vector<int>& candidates);

/// Twist data for function-valued cochains: Q acts on maps W -> Q^k by
/// (alpha . m)(w) = phi(alpha) m(rho(alpha)^-1 w).
struct FnTwist {
  int k = 0;
  int points = 0;
  std::vector<QMat> mat;               // rational reading of phi
  std::vector<std::vector<int>> perm;  // rho
  std::vector<std::vector<int>> perm_inv;
};
FnTwist make_fn_twist(const FiniteGroup& Q, const CoefModule& A, const PermAction& rho);

/// Function-valued 1- and 2-cochains with values in W -> Q^k.
struct FnCochain1 {
  int q = 0, k = 0, points = 0;
  std::vector<std::vector<QVec>> v;  // [alpha][w]
  const QVec& at(int a, int w) const { return v[a][w]; }
  QVec& at(int a, int w) { return v[a][w]; }
  static FnCochain1 zero(int q, int k, int points);
};
struct FnCochain2 {
  int q = 0, k = 0, points = 0;
  std::vector<std::vector<QVec>> v;  // [a*q+b][w]
  const QVec& at(int a, int b, int w) const { return v[a * q + b][w]; }
  QVec& at(int a, int b, int w) { return v[a * q + b][w]; }
  static FnCochain2 zero(int q, int k, int points);
  /// Constant-in-w extension of an integer cochain, read over the rationals.
  static FnCochain2 constant(const FiniteGroup& Q, const Cochain2& f, int points);
};

CocycleCheck fn_is_cocycle(const FiniteGroup& Q, const FnTwist& tw, const FnCochain2& f);
FnCochain2 fn_coboundary(const FiniteGroup& Q, const FnTwist& tw, const FnCochain1& lam);
bool fn2_eq(const FnCochain2& f, const FnCochain2& g);

/// Constructive coboundary solver: lambda(alpha) = (1/|Q|) sum_gamma f(alpha,gamma),
/// with delta lambda = f verified exactly over all pairs and points.
/// Throws std::invalid_argument when f is not a function-valued cocycle.
FnCochain1 averaging_cobound(const FiniteGroup& Q, const FnTwist& tw, const FnCochain2& f);

}  // namespace sfk
