#include "sfk/engine.hpp"

#include <stdexcept>

namespace sfk {

UniversalElement u_identity(int k, int points) {
  UniversalElement e;
  e.lam.assign(points, qvec_zero(k));
  e.mat = QMat::identity(k);
  e.perm.resize(points);
  for (int w = 0; w < points; ++w) e.perm[w] = w;
  return e;
}

std::pair<QVec, int> u_apply(const UniversalElement& e, const QVec& x, int w) {
  if (static_cast<int>(x.size()) != e.k() || w < 0 || w >= e.points())
    throw std::invalid_argument("u_apply: dimension mismatch");
  int wp = e.perm[w];
  return {qvec_sub(qmat_apply(e.mat, x), e.lam[wp]), wp};
}

UniversalElement u_compose(const UniversalElement& e1, const UniversalElement& e2) {
  if (e1.k() != e2.k() || e1.points() != e2.points())
    throw std::invalid_argument("u_compose: dimension mismatch");
  int n = e1.points();
  std::vector<int> hinv(n);
  for (int w = 0; w < n; ++w) hinv[e1.perm[w]] = w;
  UniversalElement r;
  r.mat = qmat_mul(e1.mat, e2.mat);
  r.perm.resize(n);
  for (int w = 0; w < n; ++w) r.perm[w] = e1.perm[e2.perm[w]];
  r.lam.resize(n);
  for (int w = 0; w < n; ++w)
    r.lam[w] = qvec_add(e1.lam[w], qmat_apply(e1.mat, e2.lam[hinv[w]]));
  return r;
}

UniversalElement u_inverse(const UniversalElement& e) {
  auto minv = qmat_inverse(e.mat);
  if (!minv) throw std::invalid_argument("u_inverse: matrix part not invertible");
  int n = e.points();
  UniversalElement r;
  r.mat = *minv;
  r.perm.resize(n);
  for (int w = 0; w < n; ++w) r.perm[e.perm[w]] = w;
  r.lam.resize(n);
  // (l,a,h)^-1 = (-a^-1 o l o h, a^-1, h^-1)
  for (int w = 0; w < n; ++w) r.lam[w] = qvec_neg(qmat_apply(*minv, e.lam[e.perm[w]]));
  return r;
}

UniversalElement u_conjugate_by_gauge(const std::vector<QVec>& lam0, const UniversalElement& e) {
  UniversalElement g;
  g.lam = lam0;
  g.mat = QMat::identity(e.k());
  g.perm.resize(e.points());
  for (int w = 0; w < e.points(); ++w) g.perm[w] = w;
  return u_compose(g, u_compose(e, u_inverse(g)));
}

UniversalElement ConstructedAction::theta(const ExtElement& x) const {
  int n = rho.points;
  UniversalElement e;
  e.mat = QMat::from_integer(E.A.action[x.alpha]);
  e.perm = rho.perm[x.alpha];
  e.lam.resize(n);
  QVec av = to_rational(x.a);
  for (int w = 0; w < n; ++w) e.lam[w] = qvec_neg(qvec_add(av, lambda.v[x.alpha][w]));
  return e;
}

namespace {

std::vector<IVec> box_vectors(int rank, int box) {
  // All integer vectors with coordinates in [-box, box].
  std::vector<IVec> out;
  IVec cur(rank, Int(-box));
  if (rank == 0) return {IVec{}};
  for (;;) {
    out.push_back(cur);
    int i = 0;
    while (i < rank) {
      cur[i] += 1;
      if (cur[i] <= box) break;
      cur[i] = -box;
      ++i;
    }
    if (i == rank) break;
  }
  return out;
}

}  // namespace

ConstructedAction construct_theta(const ExtensionData& E, const PermAction& rho, int box) {
  if (!E.A.is_free())
    throw std::invalid_argument("construct_theta: fiber must be free (moduli all 0)");
  FnTwist tw = make_fn_twist(E.Q, E.A, rho);
  FnCochain2 F = FnCochain2::constant(E.Q, E.f, rho.points);
  FnCochain1 lambda = averaging_cobound(E.Q, tw, F);  // delta lambda = F, verified

  ConstructedAction act{E, rho, std::move(lambda)};

  // Compatibility identity, all pairs and points:
  // f(a,b) = phi(a) lambda(b)(rho(a)^-1 w) + lambda(a)(w) - lambda(ab)(w).
  for (int a = 0; a < E.Q.order; ++a)
    for (int b = 0; b < E.Q.order; ++b)
      for (int w = 0; w < rho.points; ++w) {
        QVec lhs = to_rational(E.f.at(a, b));
        QVec rhs = qvec_add(
            qmat_apply(tw.mat[a], act.lambda.v[b][tw.perm_inv[a][w]]),
            qvec_sub(act.lambda.v[a][w], act.lambda.v[E.Q.op(a, b)][w]));
        if (!qvec_is_zero(qvec_sub(lhs, rhs)))
          throw std::logic_error("construct_theta: compatibility identity failed");
      }

  // theta restricted to A is translation by a on the first factor.
  for (const IVec& a : box_vectors(E.A.rank, 1)) {
    UniversalElement e = act.theta(ExtElement{a, 0});
    if (e.mat != QMat::identity(E.A.rank)) throw std::logic_error("construct_theta: theta|A twists");
    for (int w = 0; w < rho.points; ++w) {
      if (e.perm[w] != w) throw std::logic_error("construct_theta: theta|A moves W");
      if (!qvec_is_zero(qvec_add(e.lam[w], to_rational(a))))
        throw std::logic_error("construct_theta: theta|A is not translation");
    }
  }

  // Homomorphism on all Q-pairs with module parts from the box.
  auto boxv = box_vectors(E.A.rank, box);
  for (int a = 0; a < E.Q.order; ++a)
    for (int b = 0; b < E.Q.order; ++b)
      for (const IVec& va : boxv)
        for (const IVec& vb : boxv) {
          ExtElement x{va, a}, y{vb, b};
          UniversalElement lhs = u_compose(act.theta(x), act.theta(y));
          UniversalElement rhs = act.theta(ext_mul(E, x, y));
          if (!(lhs == rhs)) throw std::logic_error("construct_theta: not a homomorphism");
        }
  return act;
}

FiberReport fiber_analysis(const ConstructedAction& act) {
  FiberReport rep;
  OrbitReport orb = orbits_and_stabilizers(act.E.Q, act.rho);
  for (const auto& orbit : orb.orbits) {
    FiberOrbit fo;
    fo.representative = orbit.front();
    fo.orbit = orbit;
    fo.stabilizer = orb.stabilizers[fo.representative];
    fo.typical = fo.stabilizer.size() == 1;
    Subgroup qw = subgroup_from_elements(act.E.Q, fo.stabilizer);
    fo.pi_w = pullback(act.E, qw.group, qw.embed);
    rep.orbits.push_back(std::move(fo));
  }
  return rep;
}

InjectivityResult injectivity_check(const FiniteGroup& Q, const CoefModule& A,
                                    const PermAction& rho) {
  auto acts_trivially = [&](int alpha) {
    for (int w = 0; w < rho.points; ++w)
      if (rho.perm[alpha][w] != w) return false;
    for (int i = 0; i < A.rank; ++i)
      for (int j = 0; j < A.rank; ++j) {
        Int d = A.action[alpha].at(i, j) - (i == j ? 1 : 0);
        if (mod_reduce(d, A.moduli[i]) != 0) return false;
      }
    return true;
  };
  for (int alpha = 1; alpha < Q.order; ++alpha)
    if (acts_trivially(alpha)) return InjectivityResult{false, alpha};
  return InjectivityResult{true, -1};
}

EquivResult strict_equiv(const ConstructedAction& act1, const ConstructedAction& act2, int box) {
  EquivResult res;
  if (act1.E.Q.mult != act2.E.Q.mult || act1.E.A.rank != act2.E.A.rank ||
      act1.E.A.action != act2.E.A.action || !cochain2_eq(act1.E.f, act2.E.f))
    throw std::invalid_argument("strict_equiv: actions must share the extension data");
  if (act1.rho.perm != act2.rho.perm) {
    res.status = EquivStatus::rigidity_regime;
    res.reason =
        "base actions differ; conjugacy, if any, needs a full (lam,a,h) Seifert automorphism";
    return res;
  }
  const FiniteGroup& Q = act1.E.Q;
  int k = act1.E.A.rank, n = act1.rho.points;
  // theta2 = mu(lam0) o theta1 on the gauge part:
  // lambda2(a) = lambda1(a) + phi(a) lam0 rho(a)^-1 - lam0 for every a.
  std::size_t unknowns = static_cast<std::size_t>(k) * n;
  std::size_t rows = static_cast<std::size_t>(Q.order) * n * k;
  QMat Am(rows, unknowns);
  QVec bv = qvec_zero(rows);
  FnTwist tw = make_fn_twist(Q, act1.E.A, act1.rho);
  std::size_t r = 0;
  for (int a = 0; a < Q.order; ++a)
    for (int w = 0; w < n; ++w) {
      int wsrc = tw.perm_inv[a][w];
      for (int i = 0; i < k; ++i, ++r) {
        for (int j = 0; j < k; ++j) Am.at(r, wsrc * k + j) += tw.mat[a].at(i, j);
        Am.at(r, w * k + i) -= 1;
        bv[r] = act2.lambda.v[a][w][i] - act1.lambda.v[a][w][i];
      }
    }
  auto sol = solve_q(Am, bv);
  if (!sol.solvable) {
    res.status = EquivStatus::none;
    res.reason = "no gauge conjugacy: the linear system is inconsistent";
    return res;
  }
  std::vector<QVec> lam0(n, qvec_zero(k));
  for (int w = 0; w < n; ++w)
    for (int i = 0; i < k; ++i) lam0[w][i] = sol.particular[w * k + i];
  // Verify the conjugation identity on a box of elements.
  auto boxv = [&] {
    std::vector<IVec> out;
    IVec cur(k, Int(-box));
    if (k == 0) return std::vector<IVec>{IVec{}};
    for (;;) {
      out.push_back(cur);
      int i = 0;
      while (i < k) {
        cur[i] += 1;
        if (cur[i] <= box) break;
        cur[i] = -box;
        ++i;
      }
      if (i == k) break;
    }
    return out;
  }();
  for (int a = 0; a < Q.order; ++a)
    for (const IVec& va : boxv) {
      ExtElement x{va, a};
      if (!(u_conjugate_by_gauge(lam0, act1.theta(x)) == act2.theta(x)))
        throw std::logic_error("strict_equiv: witness verification failed");
    }
  res.status = EquivStatus::found;
  res.lam0 = std::move(lam0);
  return res;
}

}  // namespace sfk
