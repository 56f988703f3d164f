#include "sfk/cochain.hpp"

#include <stdexcept>

namespace sfk {

namespace {

IVec ivec_add(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
IVec ivec_sub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
bool ivec_zero(const IVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

}  // namespace

Cochain2 Cochain2::zero(const FiniteGroup& Q, const CoefModule& A) {
  Cochain2 f;
  f.q = Q.order;
  f.rank = A.rank;
  f.v.assign(static_cast<std::size_t>(Q.order) * Q.order, A.zero());
  return f;
}

Cochain1 Cochain1::zero(const FiniteGroup& Q, const CoefModule& A) {
  Cochain1 l;
  l.q = Q.order;
  l.rank = A.rank;
  l.v.assign(Q.order, A.zero());
  return l;
}

Cochain2 make_cochain2(const FiniteGroup& Q, const CoefModule& A, std::vector<IVec> values) {
  if (values.size() != static_cast<std::size_t>(Q.order) * Q.order)
    throw std::invalid_argument("make_cochain2: table must be |Q| x |Q|");
  Cochain2 f;
  f.q = Q.order;
  f.rank = A.rank;
  f.v.reserve(values.size());
  for (auto& e : values) {
    if (static_cast<int>(e.size()) != A.rank)
      throw std::invalid_argument("make_cochain2: value rank mismatch");
    f.v.push_back(A.reduce(std::move(e)));
  }
  for (int a = 0; a < Q.order; ++a)
    if (!ivec_zero(f.at(a, 0)) || !ivec_zero(f.at(0, a)))
      throw std::invalid_argument("make_cochain2: not normalized (f(1,.) = f(.,1) = 0 required)");
  return f;
}

Cochain1 make_cochain1(const FiniteGroup& Q, const CoefModule& A, std::vector<IVec> values) {
  if (values.size() != static_cast<std::size_t>(Q.order))
    throw std::invalid_argument("make_cochain1: table must have |Q| entries");
  Cochain1 l;
  l.q = Q.order;
  l.rank = A.rank;
  l.v.reserve(values.size());
  for (auto& e : values) {
    if (static_cast<int>(e.size()) != A.rank)
      throw std::invalid_argument("make_cochain1: value rank mismatch");
    l.v.push_back(A.reduce(std::move(e)));
  }
  if (!ivec_zero(l.at(0)))
    throw std::invalid_argument("make_cochain1: not normalized (lambda(1) = 0 required)");
  return l;
}

CocycleCheck is_cocycle(const FiniteGroup& Q, const CoefModule& A, const Cochain2& f) {
  CocycleCheck res;
  for (int a = 0; a < Q.order; ++a)
    if (!ivec_zero(A.reduce(f.at(a, 0))) || !ivec_zero(A.reduce(f.at(0, a)))) {
      res.failure = CocycleCheck::Failure::normalization;
      res.witness = {a, 0, -1};
      return res;
    }
  for (int a = 0; a < Q.order; ++a)
    for (int b = 0; b < Q.order; ++b)
      for (int c = 0; c < Q.order; ++c) {
        IVec lhs = ivec_add(f.at(a, b), f.at(Q.op(a, b), c));
        IVec rhs = ivec_add(A.apply(a, f.at(b, c)), f.at(a, Q.op(b, c)));
        if (!ivec_zero(A.reduce(ivec_sub(lhs, rhs)))) {
          res.failure = CocycleCheck::Failure::cocycle;
          res.witness = {a, b, c};
          return res;
        }
      }
  res.ok = true;
  return res;
}

Cochain2 coboundary(const FiniteGroup& Q, const CoefModule& A, const Cochain1& lam) {
  Cochain2 d = Cochain2::zero(Q, A);
  for (int a = 0; a < Q.order; ++a)
    for (int b = 0; b < Q.order; ++b)
      d.at(a, b) = A.reduce(
          ivec_sub(ivec_add(lam.at(a), A.apply(a, lam.at(b))), lam.at(Q.op(a, b))));
  return d;
}

Cochain2 cochain2_add(const CoefModule& A, const Cochain2& f, const Cochain2& g) {
  if (f.q != g.q || f.rank != g.rank) throw std::invalid_argument("cochain2_add: mismatched bases");
  Cochain2 r = f;
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = A.reduce(ivec_add(f.v[i], g.v[i]));
  return r;
}

Cochain2 cochain2_sub(const CoefModule& A, const Cochain2& f, const Cochain2& g) {
  if (f.q != g.q || f.rank != g.rank) throw std::invalid_argument("cochain2_sub: mismatched bases");
  Cochain2 r = f;
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = A.reduce(ivec_sub(f.v[i], g.v[i]));
  return r;
}

Cochain2 cochain2_neg(const CoefModule& A, const Cochain2& f) {
  Cochain2 r = f;
  for (auto& e : r.v) {
    for (auto& x : e) x = -x;
    e = A.reduce(std::move(e));
  }
  return r;
}

bool cochain2_eq(const Cochain2& f, const Cochain2& g) {
  return f.q == g.q && f.rank == g.rank && f.v == g.v;
}

Cochain2 central_twist(const FiniteGroup& Q, const CoefModule& A, const Cochain2& g,
                       const Cochain2& f) {
  if (g.q != f.q || g.rank != f.rank)
    throw std::invalid_argument("central_twist: mismatched bases");
  if (!is_cocycle(Q, A, g).ok) throw std::invalid_argument("central_twist: g is not a cocycle");
  return cochain2_add(A, g, f);
}

CrossedCheck is_crossed_hom(const FiniteGroup& Q, const CoefModule& A, const Cochain1& eta) {
  CrossedCheck res;
  for (int a = 0; a < Q.order; ++a)
    for (int b = 0; b < Q.order; ++b) {
      IVec lhs = eta.at(Q.op(a, b));
      IVec rhs = ivec_add(eta.at(a), A.apply(a, eta.at(b)));
      if (!ivec_zero(A.reduce(ivec_sub(lhs, rhs)))) {
        res.witness = {a, b};
        return res;
      }
    }
  res.ok = true;
  return res;
}

std::optional<RatRep> make_rat_rep(const FiniteGroup& Q, std::vector<QMat> mats) {
  if (static_cast<int>(mats.size()) != Q.order) return std::nullopt;
  std::size_t k = mats.empty() ? 0 : mats[0].rows;
  for (const auto& m : mats)
    if (m.rows != k || m.cols != k) return std::nullopt;
  if (mats[0] != QMat::identity(k)) return std::nullopt;
  for (int a = 0; a < Q.order; ++a) {
    if (!qmat_inverse(mats[a])) return std::nullopt;
    for (int b = 0; b < Q.order; ++b)
      if (mats[Q.op(a, b)] != qmat_mul(mats[a], mats[b])) return std::nullopt;
  }
  return RatRep{static_cast<int>(k), std::move(mats)};
}

CrossedCheck is_crossed_hom_rat(const FiniteGroup& Q, const RatRep& rep,
                                const std::vector<QVec>& eta) {
  CrossedCheck res;
  if (eta.size() != static_cast<std::size_t>(Q.order))
    throw std::invalid_argument("is_crossed_hom_rat: eta must be total");
  for (int a = 0; a < Q.order; ++a)
    for (int b = 0; b < Q.order; ++b) {
      QVec rhs = qvec_add(eta[a], qmat_apply(rep.mats[a], eta[b]));
      if (!qvec_is_zero(qvec_sub(eta[Q.op(a, b)], rhs))) {
        res.witness = {a, b};
        return res;
      }
    }
  res.ok = true;
  return res;
}

QVec principal_part(const FiniteGroup& Q, const RatRep& rep, const std::vector<QVec>& eta) {
  auto check = is_crossed_hom_rat(Q, rep, eta);
  if (!check.ok)
    throw std::invalid_argument("principal_part: eta is not a crossed homomorphism at pair (" +
                                std::to_string(check.witness.first) + "," +
                                std::to_string(check.witness.second) + ")");
  QVec d = qvec_zero(rep.k);
  for (int a = 0; a < Q.order; ++a) d = qvec_add(d, eta[a]);
  d = qvec_scale(Rat(1, Q.order), d);
  for (int a = 0; a < Q.order; ++a) {
    QVec want = qvec_sub(d, qmat_apply(rep.mats[a], d));
    if (!qvec_is_zero(qvec_sub(eta[a], want)))
      throw std::logic_error("principal_part: postcondition eta(psi) = d - psi d failed");
  }
  return d;
}

bool is_automorphism_table(const FiniteGroup& C, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != C.order) return false;
  std::vector<bool> seen(C.order, false);
  for (int x : map) {
    if (x < 0 || x >= C.order || seen[x]) return false;
    seen[x] = true;
  }
  return is_homomorphism(C, C, map);
}

CrossedCheck is_crossed_hom_nonab(const FiniteGroup& Q, const FiniteGroup& C,
                                  const std::vector<std::vector<int>>& phi,
                                  const std::vector<int>& eta) {
  CrossedCheck res;
  if (phi.size() != static_cast<std::size_t>(Q.order) ||
      eta.size() != static_cast<std::size_t>(Q.order))
    throw std::invalid_argument("is_crossed_hom_nonab: tables must be total over Q");
  for (int a = 0; a < Q.order; ++a)
    if (!is_automorphism_table(C, phi[a]))
      throw std::invalid_argument("is_crossed_hom_nonab: phi[" + std::to_string(a) +
                                  "] is not an automorphism");
  for (int a = 0; a < Q.order; ++a)
    for (int b = 0; b < Q.order; ++b)
      if (eta[Q.op(a, b)] != C.op(eta[a], phi[a][eta[b]])) {
        res.witness = {a, b};
        return res;
      }
  res.ok = true;
  return res;
}

std::optional<int> crossed_cohomologous_nonab(const FiniteGroup& Q, const FiniteGroup& C,
                                              const std::vector<std::vector<int>>& phi,
                                              const std::vector<int>& eta1,
                                              const std::vector<int>& eta2,
                                              const std::vector<int>& candidates) {
  for (int c : candidates) {
    bool all = true;
    for (int a = 0; a < Q.order && all; ++a)
      all = eta2[a] == C.op(C.op(c, eta1[a]), phi[a][C.inverse(c)]);
    if (all) return c;
  }
  return std::nullopt;
}

FnTwist make_fn_twist(const FiniteGroup& Q, const CoefModule& A, const PermAction& rho) {
  if (!A.is_free())
    throw std::invalid_argument("make_fn_twist: module must be free (moduli all 0)");
  if (static_cast<int>(rho.perm.size()) != Q.order)
    throw std::invalid_argument("make_fn_twist: action size mismatch");
  FnTwist tw;
  tw.k = A.rank;
  tw.points = rho.points;
  tw.mat.reserve(Q.order);
  for (int a = 0; a < Q.order; ++a) tw.mat.push_back(QMat::from_integer(A.action[a]));
  tw.perm = rho.perm;
  tw.perm_inv.assign(Q.order, std::vector<int>(rho.points));
  for (int a = 0; a < Q.order; ++a)
    for (int w = 0; w < rho.points; ++w) tw.perm_inv[a][rho.perm[a][w]] = w;
  return tw;
}

FnCochain1 FnCochain1::zero(int q, int k, int points) {
  FnCochain1 l;
  l.q = q;
  l.k = k;
  l.points = points;
  l.v.assign(q, std::vector<QVec>(points, qvec_zero(k)));
  return l;
}

FnCochain2 FnCochain2::zero(int q, int k, int points) {
  FnCochain2 f;
  f.q = q;
  f.k = k;
  f.points = points;
  f.v.assign(static_cast<std::size_t>(q) * q, std::vector<QVec>(points, qvec_zero(k)));
  return f;
}

FnCochain2 FnCochain2::constant(const FiniteGroup& Q, const Cochain2& f, int points) {
  FnCochain2 out = FnCochain2::zero(Q.order, f.rank, points);
  for (int a = 0; a < Q.order; ++a)
    for (int b = 0; b < Q.order; ++b) {
      QVec val = to_rational(f.at(a, b));
      for (int w = 0; w < points; ++w) out.at(a, b, w) = val;
    }
  return out;
}

namespace {

// (alpha . m)(w) = phi(alpha) m(rho(alpha)^-1 w), the conjugation action on
// the gauge group of maps W -> Q^k.
QVec twisted_value(const FnTwist& tw, int alpha, const std::vector<QVec>& m, int w) {
  return qmat_apply(tw.mat[alpha], m[tw.perm_inv[alpha][w]]);
}

}  // namespace

CocycleCheck fn_is_cocycle(const FiniteGroup& Q, const FnTwist& tw, const FnCochain2& f) {
  CocycleCheck res;
  for (int a = 0; a < Q.order; ++a)
    for (int w = 0; w < tw.points; ++w)
      if (!qvec_is_zero(f.at(a, 0, w)) || !qvec_is_zero(f.at(0, a, w))) {
        res.failure = CocycleCheck::Failure::normalization;
        res.witness = {a, 0, -1};
        return res;
      }
  for (int a = 0; a < Q.order; ++a)
    for (int b = 0; b < Q.order; ++b)
      for (int c = 0; c < Q.order; ++c)
        for (int w = 0; w < tw.points; ++w) {
          QVec lhs = qvec_add(f.at(a, b, w), f.at(Q.op(a, b), c, w));
          QVec rhs = qvec_add(twisted_value(tw, a, f.v[b * f.q + c], w),
                              f.at(a, Q.op(b, c), w));
          if (!qvec_is_zero(qvec_sub(lhs, rhs))) {
            res.failure = CocycleCheck::Failure::cocycle;
            res.witness = {a, b, c};
            return res;
          }
        }
  res.ok = true;
  return res;
}

FnCochain2 fn_coboundary(const FiniteGroup& Q, const FnTwist& tw, const FnCochain1& lam) {
  FnCochain2 d = FnCochain2::zero(Q.order, tw.k, tw.points);
  for (int a = 0; a < Q.order; ++a)
    for (int b = 0; b < Q.order; ++b)
      for (int w = 0; w < tw.points; ++w)
        d.at(a, b, w) = qvec_sub(qvec_add(lam.v[a][w], twisted_value(tw, a, lam.v[b], w)),
                                 lam.v[Q.op(a, b)][w]);
  return d;
}

bool fn2_eq(const FnCochain2& f, const FnCochain2& g) {
  return f.q == g.q && f.k == g.k && f.points == g.points && f.v == g.v;
}

FnCochain1 averaging_cobound(const FiniteGroup& Q, const FnTwist& tw, const FnCochain2& f) {
  auto check = fn_is_cocycle(Q, tw, f);
  if (!check.ok)
    throw std::invalid_argument("averaging_cobound: input is not a function-valued cocycle");
  FnCochain1 lam = FnCochain1::zero(Q.order, tw.k, tw.points);
  Rat inv_order(1, Q.order);
  for (int a = 0; a < Q.order; ++a)
    for (int w = 0; w < tw.points; ++w) {
      QVec s = qvec_zero(tw.k);
      for (int c = 0; c < Q.order; ++c) s = qvec_add(s, f.at(a, c, w));
      lam.v[a][w] = qvec_scale(inv_order, s);
    }
  if (!fn2_eq(fn_coboundary(Q, tw, lam), f))
    throw std::logic_error("averaging_cobound: postcondition delta lambda = f failed");
  return lam;
}

}  // namespace sfk
