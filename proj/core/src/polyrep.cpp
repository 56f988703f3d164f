#include "sfk/polyrep.hpp"

#include <stdexcept>

namespace sfk {

int CentralSeriesSpec::total() const {
  int t = 0;
  for (int k : ranks) t += k;
  return t;
}

int CentralSeriesSpec::block_of(int coord) const {
  int off = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (coord < off + ranks[i]) return static_cast<int>(i);
    off += ranks[i];
  }
  throw std::invalid_argument("CentralSeriesSpec::block_of: coordinate out of range");
}

ShapeCheck canonical_shape_check(const PolyMap& p, const CentralSeriesSpec& series) {
  if (series.total() != p.dim)
    throw std::invalid_argument("canonical_shape_check: series ranks must sum to the dimension");
  int nblocks = static_cast<int>(series.ranks.size());
  std::vector<int> block(p.dim);
  for (int i = 0; i < p.dim; ++i) block[i] = series.block_of(i);

  int off = 0;
  for (int bi = 0; bi < nblocks; ++bi) {
    int k = series.ranks[bi];
    QMat linear(k, k);
    for (int c = 0; c < k; ++c) {
      int comp = off + c;
      for (const auto& [e, coef] : p.comp[comp].terms()) {
        int own_deg = 0, own_var = -1;
        for (int v = 0; v < p.dim; ++v) {
          if (e[v] == 0) continue;
          if (block[v] < bi)
            return ShapeCheck{false, comp,
                              "component depends on a more central block variable"};
          if (block[v] == bi) {
            own_deg += static_cast<int>(e[v]);
            own_var = v;
            if (e[v] > 1 || own_deg > 1)
              return ShapeCheck{false, comp, "own-block variables must enter linearly"};
          }
        }
        if (own_deg == 1) {
          for (int v = 0; v < p.dim; ++v)
            if (e[v] != 0 && block[v] != bi)
              return ShapeCheck{false, comp,
                                "own-block variable multiplied by another block"};
          linear.at(c, own_var - off) = coef;
        }
      }
    }
    Rat det = qmat_det(linear);
    if (det != 1 && det != -1)
      return ShapeCheck{false, off, "own-block linear part is not unimodular"};
    off += k;
  }
  return ShapeCheck{};
}

PolyMap word_map(const std::vector<PolyMap>& gens, const std::vector<int>& word, int dim) {
  PolyMap acc = poly_identity(dim);
  for (int s : word) {
    if (s == 0 || std::abs(s) > static_cast<int>(gens.size()))
      throw std::invalid_argument("word_map: letter out of range");
    const PolyMap& g = gens[std::abs(s) - 1];
    acc = poly_compose(acc, s > 0 ? g : polymap_inverse(g));
  }
  return acc;
}

RepCheck verify_rep(const std::vector<PolyMap>& gens, const FpPresentation& pres) {
  if (gens.size() != pres.generators.size())
    throw std::invalid_argument("verify_rep: every presentation generator needs a map");
  if (!pres.valid()) throw std::invalid_argument("verify_rep: malformed presentation");
  int dim = gens.empty() ? 0 : gens[0].dim;
  for (const auto& g : gens) {
    if (g.dim != dim) throw std::invalid_argument("verify_rep: mixed dimensions");
    if (!g.has_inverse()) throw std::invalid_argument("verify_rep: generator without inverse");
  }
  RepCheck res;
  for (std::size_t r = 0; r < pres.relators.size(); ++r) {
    PolyMap w = word_map(gens, pres.relators[r], dim);
    if (!polymap_is_identity(w)) {
      res.ok = false;
      res.relator = static_cast<int>(r);
      std::string s;
      for (int x : pres.relators[r]) s += (s.empty() ? "" : " ") + std::to_string(x);
      res.witness = "relator [" + s + "] does not compose to the identity";
      return res;
    }
  }
  for (int c : pres.central)
    for (std::size_t h = 0; h < gens.size(); ++h) {
      if (static_cast<std::size_t>(c) == h) continue;
      if (!polymap_eq(poly_compose(gens[c], gens[h]), poly_compose(gens[h], gens[c]))) {
        res.ok = false;
        res.central_pair = c * static_cast<int>(gens.size()) + static_cast<int>(h);
        res.witness = "central generator " + pres.generators[c] + " does not commute with " +
                      pres.generators[h];
        return res;
      }
    }
  return res;
}

TwoStepRep construct_2step_rep(const TwoStepData& data) {
  if (data.k1 < 0 || data.k2 < 0) throw std::invalid_argument("construct_2step_rep: bad ranks");
  if (static_cast<int>(data.B.size()) != data.k1 ||
      static_cast<int>(data.denom.size()) != data.k1)
    throw std::invalid_argument("construct_2step_rep: need one pairing and denominator per central rank");
  for (const auto& b : data.B)
    if (b.rows != static_cast<std::size_t>(data.k2) || b.cols != static_cast<std::size_t>(data.k2))
      throw std::invalid_argument("construct_2step_rep: pairing shape mismatch");
  for (const auto& d : data.denom)
    if (d <= 0) throw std::invalid_argument("construct_2step_rep: denominators must be positive");

  int K = data.k1 + data.k2;
  // Coordinates: z_1..z_k1 (central), then t_1..t_k2.
  TwoStepRep rep;
  rep.data = data;
  rep.series.ranks = {data.k1, data.k2};
  if (data.k1 == 0) rep.series.ranks = {data.k2};
  if (data.k2 == 0) rep.series.ranks = {data.k1};

  auto var = [&](int i) { return Poly::variable(K, i); };

  // Coset generator e_i: z_s += sum_j (B_s)_{ij} t_j, t_i += 1.
  for (int i = 0; i < data.k2; ++i) {
    PolyMap g, ginv;
    g.dim = ginv.dim = K;
    for (int s = 0; s < data.k1; ++s) {
      Poly li(K), li_shift(K);  // L_i(t) and L_i(t - e_i)
      for (int j = 0; j < data.k2; ++j) {
        Rat c(data.B[s].at(i, j));
        if (c == 0) continue;
        li = li + var(data.k1 + j).scaled(c);
        Poly tj = var(data.k1 + j);
        if (j == i) tj = tj - Poly::constant(K, Rat(1));
        li_shift = li_shift + tj.scaled(c);
      }
      g.comp.push_back(var(s) + li);
      ginv.comp.push_back(var(s) - li_shift);
    }
    for (int j = 0; j < data.k2; ++j) {
      Poly shift = Poly::constant(K, Rat(j == i ? 1 : 0));
      g.comp.push_back(var(data.k1 + j) + shift);
      ginv.comp.push_back(var(data.k1 + j) - shift);
    }
    rep.gens.push_back(with_inverse(std::move(g), std::move(ginv.comp)));
  }
  // Central generator c_s: z_s += 1/d_s.
  for (int s = 0; s < data.k1; ++s) {
    PolyMap g, ginv;
    g.dim = ginv.dim = K;
    for (int c = 0; c < K; ++c) {
      Poly shift = Poly::constant(K, c == s ? Rat(Int(1), data.denom[s]) : Rat(0));
      g.comp.push_back(var(c) + shift);
      ginv.comp.push_back(var(c) - shift);
    }
    rep.gens.push_back(with_inverse(std::move(g), std::move(ginv.comp)));
  }

  // Induced presentation: [e_i, e_j] = prod_s c_s^{d_s ((B_s)_ij - (B_s)_ji)},
  // central generators commute with everything.
  FpPresentation pres;
  for (int i = 1; i <= data.k2; ++i) pres.generators.push_back("e" + std::to_string(i));
  for (int s = 1; s <= data.k1; ++s) pres.generators.push_back("c" + std::to_string(s));
  for (int s = 0; s < data.k1; ++s) pres.central.push_back(data.k2 + s);
  for (int i = 0; i < data.k2; ++i)
    for (int j = i + 1; j < data.k2; ++j) {
      // e_i e_j e_i^-1 e_j^-1 c^{-exponents}
      std::vector<int> rel = {i + 1, j + 1, -(i + 1), -(j + 1)};
      for (int s = 0; s < data.k1; ++s) {
        Int e = data.denom[s] * (data.B[s].at(i, j) - data.B[s].at(j, i));
        long n = e.get_si();
        for (long t = 0; t < std::abs(n); ++t)
          rel.push_back(n > 0 ? -(data.k2 + s + 1) : (data.k2 + s + 1));
      }
      pres.relators.push_back(std::move(rel));
    }
  rep.pres = std::move(pres);

  auto shape_ok = [&](const PolyMap& m) { return canonical_shape_check(m, rep.series).ok; };
  for (const auto& g : rep.gens)
    if (!shape_ok(g)) throw std::logic_error("construct_2step_rep: shape check failed");
  RepCheck check = verify_rep(rep.gens, rep.pres);
  if (!check.ok)
    throw std::invalid_argument("construct_2step_rep: inconsistent pairing data: " +
                                check.witness);
  return rep;
}

PolyConjResult conjugacy_verify(const std::vector<PolyMap>& rep1,
                                const std::vector<PolyMap>& rep2, const PolyMap& cand) {
  if (rep1.size() != rep2.size())
    throw std::invalid_argument("conjugacy_verify: generator lists must match in length");
  if (!cand.has_inverse()) throw std::invalid_argument("conjugacy_verify: cand needs an inverse");
  PolyMap cinv = polymap_inverse(cand);
  for (std::size_t i = 0; i < rep1.size(); ++i) {
    PolyMap got = poly_compose(cinv, poly_compose(rep1[i], cand));
    if (!polymap_eq(got, rep2[i])) return PolyConjResult{false, static_cast<int>(i)};
  }
  return PolyConjResult{};
}

}  // namespace sfk
