#include "sfk/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sfk {

int FiniteGroup::power(int a, long n) const {
  int r = 0;
  if (n < 0) {
    a = inverse(a);
    n = -n;
  }
  for (long i = 0; i < n; ++i) r = op(r, a);
  return r;
}

int FiniteGroup::element_order(int a) const {
  int x = a, n = 1;
  while (x != 0) {
    x = op(x, a);
    ++n;
  }
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

FiniteGroup build_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("build_cyclic: order must be >= 1");
  FiniteGroup g;
  g.order = n;
  g.mult.assign(n, std::vector<int>(n));
  g.inv.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g.mult[i][j] = (i + j) % n;
    g.inv[i] = (n - i) % n;
  }
  return g;
}

FiniteGroup build_abelian(const std::vector<int>& moduli) {
  for (int m : moduli)
    if (m < 1) throw std::invalid_argument("build_abelian: factors must be >= 1");
  int n = 1;
  for (int m : moduli) n *= m;
  auto decode = [&](int e) {
    std::vector<int> d(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      d[i] = e % moduli[i];
      e /= moduli[i];
    }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int e = 0;
    for (std::size_t i = moduli.size(); i-- > 0;) e = e * moduli[i] + d[i];
    return e;
  };
  FiniteGroup g;
  g.order = n;
  g.mult.assign(n, std::vector<int>(n));
  g.inv.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    auto da = decode(a);
    for (int b = 0; b < n; ++b) {
      auto db = decode(b);
      std::vector<int> s(moduli.size());
      for (std::size_t i = 0; i < moduli.size(); ++i) s[i] = (da[i] + db[i]) % moduli[i];
      g.mult[a][b] = encode(s);
    }
    std::vector<int> ia(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) ia[i] = (moduli[i] - da[i]) % moduli[i];
    g.inv[a] = encode(ia);
  }
  return g;
}

GroupResult validate_group(const std::vector<std::vector<int>>& mult) {
  GroupResult res;
  int n = static_cast<int>(mult.size());
  if (n == 0) {
    res.error = "empty table";
    return res;
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(mult[i].size()) != n) {
      res.error = "table not square";
      res.witness = {i};
      return res;
    }
    for (int j = 0; j < n; ++j)
      if (mult[i][j] < 0 || mult[i][j] >= n) {
        res.error = "entry out of range";
        res.witness = {i, j};
        return res;
      }
  }
  // Locate a two-sided identity.
  int e = -1;
  for (int c = 0; c < n; ++c) {
    bool id = true;
    for (int x = 0; x < n && id; ++x) id = mult[c][x] == x && mult[x][c] == x;
    if (id) {
      e = c;
      break;
    }
  }
  if (e < 0) {
    res.error = "no identity";
    return res;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]]) {
          res.error = "non-associative triple";
          res.witness = {a, b, c};
          return res;
        }
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mult[a][b] == e && mult[b][a] == e) {
        inv[a] = b;
        break;
      }
    if (inv[a] < 0) {
      res.error = "missing inverse";
      res.witness = {a};
      return res;
    }
  }
  // Canonicalize: relabel so the identity is element 0.
  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  if (e != 0) std::swap(relabel[0], relabel[e]);
  std::vector<int> inverse_label(n);
  for (int i = 0; i < n; ++i) inverse_label[relabel[i]] = i;

  FiniteGroup g;
  g.order = n;
  g.mult.assign(n, std::vector<int>(n));
  g.inv.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g.mult[a][b] = inverse_label[mult[relabel[a]][relabel[b]]];
  for (int a = 0; a < n; ++a) g.inv[a] = inverse_label[inv[relabel[a]]];
  res.group = std::move(g);
  return res;
}

bool is_homomorphism(const FiniteGroup& Q, const FiniteGroup& P, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != Q.order) return false;
  for (int x : map)
    if (x < 0 || x >= P.order) return false;
  if (map[0] != 0) return false;
  for (int a = 0; a < Q.order; ++a)
    for (int b = 0; b < Q.order; ++b)
      if (map[Q.op(a, b)] != P.op(map[a], map[b])) return false;
  return true;
}

Subgroup subgroup_from_elements(const FiniteGroup& Q, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements[0] != 0)
    throw std::invalid_argument("subgroup must contain the identity");
  std::vector<int> pos(Q.order, -1);
  for (std::size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<int>(i);
  int n = static_cast<int>(elements.size());
  FiniteGroup g;
  g.order = n;
  g.mult.assign(n, std::vector<int>(n));
  g.inv.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int prod = Q.op(elements[i], elements[j]);
      if (pos[prod] < 0) throw std::invalid_argument("element set not closed under product");
      g.mult[i][j] = pos[prod];
    }
    int inv = Q.inverse(elements[i]);
    if (pos[inv] < 0) throw std::invalid_argument("element set not closed under inverse");
    g.inv[i] = pos[inv];
  }
  return Subgroup{std::move(g), std::move(elements)};
}

ActionResult validate_perm_action(const FiniteGroup& Q, int points,
                                  const std::vector<std::vector<int>>& perm) {
  ActionResult res;
  if (static_cast<int>(perm.size()) != Q.order) {
    res.error = "one permutation per group element required";
    return res;
  }
  for (int a = 0; a < Q.order; ++a) {
    if (static_cast<int>(perm[a].size()) != points) {
      res.error = "permutation length mismatch";
      res.witness = {a, -1};
      return res;
    }
    std::vector<bool> seen(points, false);
    for (int w = 0; w < points; ++w) {
      int img = perm[a][w];
      if (img < 0 || img >= points || seen[img]) {
        res.error = "not a permutation";
        res.witness = {a, w};
        return res;
      }
      seen[img] = true;
    }
  }
  for (int w = 0; w < points; ++w)
    if (perm[0][w] != w) {
      res.error = "identity must act trivially";
      res.witness = {0, w};
      return res;
    }
  for (int a = 0; a < Q.order; ++a)
    for (int b = 0; b < Q.order; ++b)
      for (int w = 0; w < points; ++w)
        if (perm[Q.op(a, b)][w] != perm[a][perm[b][w]]) {
          res.error = "not a homomorphism";
          res.witness = {a, b};
          return res;
        }
  res.action = PermAction{points, perm};
  return res;
}

PermAction trivial_action(const FiniteGroup& Q, int points) {
  std::vector<int> id(points);
  std::iota(id.begin(), id.end(), 0);
  return PermAction{points, std::vector<std::vector<int>>(Q.order, id)};
}

OrbitReport orbits_and_stabilizers(const FiniteGroup& Q, const PermAction& act) {
  OrbitReport rep;
  rep.stabilizers.resize(act.points);
  for (int w = 0; w < act.points; ++w)
    for (int a = 0; a < Q.order; ++a)
      if (act.apply(a, w) == w) rep.stabilizers[w].push_back(a);
  std::vector<bool> seen(act.points, false);
  for (int w = 0; w < act.points; ++w) {
    if (seen[w]) continue;
    std::vector<int> orbit;
    for (int a = 0; a < Q.order; ++a) {
      int img = act.apply(a, w);
      if (!seen[img]) {
        seen[img] = true;
        orbit.push_back(img);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    rep.orbits.push_back(std::move(orbit));
  }
  return rep;
}

IVec CoefModule::reduce(IVec v) const {
  for (int i = 0; i < rank; ++i) v[i] = mod_reduce(v[i], moduli[i]);
  return v;
}

IVec CoefModule::apply(int alpha, const IVec& v) const {
  return reduce(imat_apply(action[alpha], v));
}

bool CoefModule::is_free() const {
  for (const auto& m : moduli)
    if (m != 0) return false;
  return true;
}

bool CoefModule::trivial_action_p() const {
  IMat id = IMat::identity(rank);
  for (const auto& m : action) {
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        if (mod_reduce(m.at(i, j) - id.at(i, j), moduli[i]) != 0) return false;
  }
  return true;
}

std::optional<Int> CoefModule::size() const {
  Int n = 1;
  for (const auto& m : moduli) {
    if (m == 0) return std::nullopt;
    n *= m;
  }
  return n;
}

std::vector<IVec> CoefModule::enumerate() const {
  auto n = size();
  if (!n) throw std::invalid_argument("enumerate: module is infinite");
  std::vector<IVec> out;
  IVec cur(rank, Int(0));
  for (Int c = 0; c < *n; ++c) {
    out.push_back(cur);
    for (int i = 0; i < rank; ++i) {
      cur[i] += 1;
      if (cur[i] < moduli[i]) break;
      cur[i] = 0;
    }
  }
  return out;
}

ModuleResult validate_module(const FiniteGroup& Q, int rank, IVec moduli,
                             std::vector<IMat> action) {
  ModuleResult res;
  if (rank < 0 || static_cast<int>(moduli.size()) != rank) {
    res.error = "moduli length must equal rank";
    return res;
  }
  for (const auto& m : moduli)
    if (m < 0) {
      res.error = "moduli must be non-negative";
      return res;
    }
  if (static_cast<int>(action.size()) != Q.order) {
    res.error = "one matrix per group element required";
    return res;
  }
  for (int a = 0; a < Q.order; ++a)
    if (action[a].rows != static_cast<std::size_t>(rank) ||
        action[a].cols != static_cast<std::size_t>(rank)) {
      res.error = "matrix shape mismatch";
      res.witness = {a, -1};
      return res;
    }

  auto congruent = [&](const IMat& x, const IMat& y) {
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        if (mod_reduce(x.at(i, j) - y.at(i, j), moduli[i]) != 0) return false;
    return true;
  };

  if (!congruent(action[0], IMat::identity(rank))) {
    res.error = "identity must act as the identity matrix";
    res.witness = {0, -1};
    return res;
  }
  // Torsion cannot map into a free factor, and images of torsion generators
  // must stay torsion of compatible order.
  for (int a = 0; a < Q.order; ++a)
    for (int j = 0; j < rank; ++j) {
      if (moduli[j] == 0) continue;
      for (int i = 0; i < rank; ++i) {
        Int v = moduli[j] * action[a].at(i, j);
        if (moduli[i] == 0 ? v != 0 : v % moduli[i] != 0) {
          res.error = "matrix does not preserve moduli congruences";
          res.witness = {a, -1};
          return res;
        }
      }
    }
  // Invertibility on the free part: determinant +-1 of the free-free block.
  std::vector<int> free_idx;
  for (int i = 0; i < rank; ++i)
    if (moduli[i] == 0) free_idx.push_back(i);
  for (int a = 0; a < Q.order; ++a) {
    if (free_idx.empty()) break;
    IMat blk(free_idx.size(), free_idx.size());
    for (std::size_t i = 0; i < free_idx.size(); ++i)
      for (std::size_t j = 0; j < free_idx.size(); ++j)
        blk.at(i, j) = action[a].at(free_idx[i], free_idx[j]);
    Int d = imat_det(blk);
    if (d != 1 && d != -1) {
      res.error = "free part not invertible (determinant not +-1)";
      res.witness = {a, -1};
      return res;
    }
  }
  for (int a = 0; a < Q.order; ++a)
    for (int b = 0; b < Q.order; ++b)
      if (!congruent(action[Q.op(a, b)], imat_mul(action[a], action[b]))) {
        res.error = "action is not a homomorphism";
        res.witness = {a, b};
        return res;
      }
  res.module = CoefModule{rank, std::move(moduli), std::move(action)};
  return res;
}

CoefModule trivial_module(const FiniteGroup& Q, int rank, IVec moduli) {
  auto res = validate_module(Q, rank, std::move(moduli),
                             std::vector<IMat>(Q.order, IMat::identity(rank)));
  return *res.module;
}

bool FpPresentation::valid() const {
  int n = static_cast<int>(generators.size());
  for (const auto& rel : relators)
    for (int s : rel)
      if (s == 0 || s > n || s < -n) return false;
  for (int c : central)
    if (c < 0 || c >= n) return false;
  return true;
}

FpPresentation seifert_presentation(const SeifertSymbol& sym) {
  if (sym.genus < 0) throw std::invalid_argument("seifert_presentation: genus must be >= 0");
  for (const auto& [alpha, beta] : sym.cones)
    if (alpha < 2) throw std::invalid_argument("seifert_presentation: alpha_j must be >= 2");

  FpPresentation p;
  for (int i = 1; i <= sym.genus; ++i) {
    p.generators.push_back("x" + std::to_string(i));
    p.generators.push_back("y" + std::to_string(i));
  }
  for (std::size_t j = 1; j <= sym.cones.size(); ++j)
    p.generators.push_back("w" + std::to_string(j));
  p.generators.push_back("z");
  int z = static_cast<int>(p.generators.size());  // 1-based index of z
  p.central.push_back(z - 1);

  auto push_power = [](std::vector<int>& word, int gen, const Int& e) {
    long n = e.get_si();
    for (long i = 0; i < std::abs(n); ++i) word.push_back(n > 0 ? gen : -gen);
  };

  // w_j^alpha_j z^beta_j
  for (std::size_t j = 0; j < sym.cones.size(); ++j) {
    int w = 2 * sym.genus + static_cast<int>(j) + 1;
    std::vector<int> rel;
    push_power(rel, w, sym.cones[j].first);
    push_power(rel, z, sym.cones[j].second);
    p.relators.push_back(std::move(rel));
  }
  // w_1 ... w_p [x_1,y_1] ... [x_g,y_g] z^-b
  std::vector<int> rel;
  for (std::size_t j = 0; j < sym.cones.size(); ++j)
    rel.push_back(2 * sym.genus + static_cast<int>(j) + 1);
  for (int i = 0; i < sym.genus; ++i) {
    int x = 2 * i + 1, y = 2 * i + 2;
    rel.insert(rel.end(), {x, y, -x, -y});
  }
  push_power(rel, z, -sym.b);
  if (!rel.empty()) p.relators.push_back(std::move(rel));
  return p;
}

}  // namespace sfk
