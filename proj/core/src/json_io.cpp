#include "sfk/json_io.hpp"

#include <sstream>

namespace sfk {

namespace {

const json& need(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "/" + key, "missing field");
  return *it;
}

int small_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<int>();
}

}  // namespace

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

Int int_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      throw SchemaError(path, "not an integer literal");
    return v;
  }
  throw SchemaError(path, "expected an exact integer (number or decimal string)");
}

json rat_to_json(const Rat& v) { return json(v.get_str()); }

Rat rat_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(path, e.what());
    }
  }
  throw SchemaError(path, "expected a rational as \"p/q\"");
}

json group_to_json(const FiniteGroup& g) {
  return json{{"order", g.order}, {"mult", g.mult}};
}

FiniteGroup group_from_json(const json& j, const std::string& path) {
  const json& mult = need(j, "mult", path);
  if (!mult.is_array()) throw SchemaError(path + "/mult", "expected a square table");
  std::vector<std::vector<int>> table;
  for (std::size_t r = 0; r < mult.size(); ++r) {
    const json& row = mult[r];
    if (!row.is_array() || row.size() != mult.size())
      throw SchemaError(path + "/mult/" + std::to_string(r), "table is not square");
    std::vector<int> rr;
    for (std::size_t c = 0; c < row.size(); ++c)
      rr.push_back(small_int(row[c], path + "/mult/" + std::to_string(r) + "/" +
                                         std::to_string(c)));
    table.push_back(std::move(rr));
  }
  if (j.contains("order") &&
      small_int(j["order"], path + "/order") != static_cast<int>(table.size()))
    throw SchemaError(path + "/order", "order disagrees with the mult table");
  auto res = validate_group(table);
  if (!res.ok()) throw SchemaError(path + "/mult", res.error);
  return *res.group;
}

json module_to_json(const CoefModule& a) {
  json act = json::object();
  for (std::size_t e = 0; e < a.action.size(); ++e) {
    json rows = json::array();
    for (int i = 0; i < a.rank; ++i) {
      json row = json::array();
      for (int c = 0; c < a.rank; ++c) row.push_back(int_to_json(a.action[e].at(i, c)));
      rows.push_back(std::move(row));
    }
    act[std::to_string(e)] = std::move(rows);
  }
  json moduli = json::array();
  for (const auto& m : a.moduli) moduli.push_back(int_to_json(m));
  return json{{"rank", a.rank}, {"moduli", moduli}, {"action", act}};
}

CoefModule module_from_json(const FiniteGroup& q, const json& j, const std::string& path) {
  int rank = small_int(need(j, "rank", path), path + "/rank");
  const json& jm = need(j, "moduli", path);
  if (!jm.is_array() || static_cast<int>(jm.size()) != rank)
    throw SchemaError(path + "/moduli", "expected rank-many moduli");
  IVec moduli;
  for (std::size_t i = 0; i < jm.size(); ++i)
    moduli.push_back(int_from_json(jm[i], path + "/moduli/" + std::to_string(i)));

  std::vector<IMat> action(q.order, IMat::identity(rank));
  if (j.contains("action")) {
    const json& ja = j["action"];
    if (!ja.is_object()) throw SchemaError(path + "/action", "expected an object keyed by element");
    for (auto it = ja.begin(); it != ja.end(); ++it) {
      int e;
      try {
        e = std::stoi(it.key());
      } catch (...) {
        throw SchemaError(path + "/action/" + it.key(), "key must be an element index");
      }
      if (e < 0 || e >= q.order)
        throw SchemaError(path + "/action/" + it.key(), "element index out of range");
      const json& rows = it.value();
      if (!rows.is_array() || static_cast<int>(rows.size()) != rank)
        throw SchemaError(path + "/action/" + it.key(), "expected a rank x rank matrix");
      IMat m(rank, rank);
      for (int r = 0; r < rank; ++r) {
        const json& row = rows[r];
        if (!row.is_array() || static_cast<int>(row.size()) != rank)
          throw SchemaError(path + "/action/" + it.key(), "expected a rank x rank matrix");
        for (int c = 0; c < rank; ++c)
          m.at(r, c) = int_from_json(row[c], path + "/action/" + it.key());
      }
      action[e] = std::move(m);
    }
  }
  auto res = validate_module(q, rank, std::move(moduli), std::move(action));
  if (!res.ok()) throw SchemaError(path, res.error);
  return *res.module;
}

json action_to_json(const PermAction& a) {
  json perm = json::object();
  for (std::size_t e = 0; e < a.perm.size(); ++e) perm[std::to_string(e)] = a.perm[e];
  return json{{"points", a.points}, {"perm", perm}};
}

PermAction action_from_json(const FiniteGroup& q, const json& j, const std::string& path) {
  const json& jp = need(j, "perm", path);
  if (!jp.is_object()) throw SchemaError(path + "/perm", "expected an object keyed by element");
  int points = -1;
  if (j.contains("points")) points = small_int(j["points"], path + "/points");
  std::vector<std::vector<int>> perm(q.order);
  bool seen_any = false;
  for (auto it = jp.begin(); it != jp.end(); ++it) {
    int e;
    try {
      e = std::stoi(it.key());
    } catch (...) {
      throw SchemaError(path + "/perm/" + it.key(), "key must be an element index");
    }
    if (e < 0 || e >= q.order)
      throw SchemaError(path + "/perm/" + it.key(), "element index out of range");
    if (!it.value().is_array())
      throw SchemaError(path + "/perm/" + it.key(), "expected a permutation array");
    std::vector<int> p;
    for (std::size_t i = 0; i < it.value().size(); ++i)
      p.push_back(small_int(it.value()[i], path + "/perm/" + it.key()));
    if (points < 0) points = static_cast<int>(p.size());
    perm[e] = std::move(p);
    seen_any = true;
  }
  if (!seen_any) throw SchemaError(path + "/perm", "empty permutation table");
  for (int e = 0; e < q.order; ++e)
    if (perm[e].empty()) {
      if (e == 0) {  // identity may be omitted
        perm[e].resize(points);
        for (int w = 0; w < points; ++w) perm[e][w] = w;
      } else {
        throw SchemaError(path + "/perm/" + std::to_string(e), "missing permutation");
      }
    }
  auto res = validate_perm_action(q, points, perm);
  if (!res.ok()) throw SchemaError(path + "/perm", res.error);
  return *res.action;
}

json cochain2_to_json(const Cochain2& f) {
  json values = json::object();
  for (int a = 0; a < f.q; ++a)
    for (int b = 0; b < f.q; ++b) {
      json v = json::array();
      bool nonzero = false;
      for (const auto& x : f.at(a, b)) {
        if (x != 0) nonzero = true;
        v.push_back(int_to_json(x));
      }
      if (nonzero) values[std::to_string(a) + "," + std::to_string(b)] = std::move(v);
    }
  return json{{"degree", 2}, {"values", values}};
}

Cochain2 cochain2_from_json(const FiniteGroup& q, const CoefModule& a, const json& j,
                            const std::string& path) {
  const json& jv = need(j, "values", path);
  if (!jv.is_object()) throw SchemaError(path + "/values", "expected a table keyed by \"a,b\"");
  std::vector<IVec> table(static_cast<std::size_t>(q.order) * q.order, a.zero());
  for (auto it = jv.begin(); it != jv.end(); ++it) {
    std::istringstream key(it.key());
    int x = -1, y = -1;
    char comma = 0;
    key >> x >> comma >> y;
    if (comma != ',' || x < 0 || x >= q.order || y < 0 || y >= q.order)
      throw SchemaError(path + "/values/" + it.key(), "key must be \"a,b\" with element indices");
    const json& vec = it.value();
    if (!vec.is_array() || static_cast<int>(vec.size()) != a.rank)
      throw SchemaError(path + "/values/" + it.key(), "expected a rank-length vector");
    IVec v;
    for (std::size_t i = 0; i < vec.size(); ++i)
      v.push_back(int_from_json(vec[i], path + "/values/" + it.key()));
    table[x * q.order + y] = std::move(v);
  }
  try {
    return make_cochain2(q, a, std::move(table));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

json cochain1_to_json(const Cochain1& l) {
  json values = json::object();
  for (int a = 0; a < l.q; ++a) {
    json v = json::array();
    bool nonzero = false;
    for (const auto& x : l.at(a)) {
      if (x != 0) nonzero = true;
      v.push_back(int_to_json(x));
    }
    if (nonzero) values[std::to_string(a)] = std::move(v);
  }
  return json{{"degree", 1}, {"values", values}};
}

Cochain1 cochain1_from_json(const FiniteGroup& q, const CoefModule& a, const json& j,
                            const std::string& path) {
  const json& jv = need(j, "values", path);
  if (!jv.is_object()) throw SchemaError(path + "/values", "expected a table keyed by element");
  std::vector<IVec> table(q.order, a.zero());
  for (auto it = jv.begin(); it != jv.end(); ++it) {
    int x;
    try {
      x = std::stoi(it.key());
    } catch (...) {
      throw SchemaError(path + "/values/" + it.key(), "key must be an element index");
    }
    if (x < 0 || x >= q.order)
      throw SchemaError(path + "/values/" + it.key(), "element index out of range");
    const json& vec = it.value();
    if (!vec.is_array() || static_cast<int>(vec.size()) != a.rank)
      throw SchemaError(path + "/values/" + it.key(), "expected a rank-length vector");
    IVec v;
    for (std::size_t i = 0; i < vec.size(); ++i)
      v.push_back(int_from_json(vec[i], path + "/values/" + it.key()));
    table[x] = std::move(v);
  }
  try {
    return make_cochain1(q, a, std::move(table));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

json extension_to_json(const ExtensionData& e) {
  return json{{"Q", group_to_json(e.Q)},
              {"module", module_to_json(e.A)},
              {"cocycle", cochain2_to_json(e.f)}};
}

ExtensionData extension_from_json(const json& j, const std::string& path) {
  FiniteGroup q = group_from_json(need(j, "Q", path), path + "/Q");
  CoefModule a = module_from_json(q, need(j, "module", path), path + "/module");
  Cochain2 f = cochain2_from_json(q, a, need(j, "cocycle", path), path + "/cocycle");
  try {
    return make_extension(std::move(q), std::move(a), std::move(f));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path + "/cocycle", e.what());
  }
}

json fn1_to_json(const FnCochain1& l) {
  json values = json::object();
  for (int a = 0; a < l.q; ++a) {
    json per_point = json::array();
    for (int w = 0; w < l.points; ++w) {
      json v = json::array();
      for (const auto& x : l.v[a][w]) v.push_back(rat_to_json(x));
      per_point.push_back(std::move(v));
    }
    values[std::to_string(a)] = std::move(per_point);
  }
  return json{{"k", l.k}, {"points", l.points}, {"values", values}};
}

FnCochain1 fn1_from_json(const json& j, const std::string& path) {
  int k = small_int(need(j, "k", path), path + "/k");
  int points = small_int(need(j, "points", path), path + "/points");
  const json& jv = need(j, "values", path);
  if (!jv.is_object()) throw SchemaError(path + "/values", "expected an object keyed by element");
  int q = static_cast<int>(jv.size());
  FnCochain1 l = FnCochain1::zero(q, k, points);
  for (auto it = jv.begin(); it != jv.end(); ++it) {
    int a;
    try {
      a = std::stoi(it.key());
    } catch (...) {
      throw SchemaError(path + "/values/" + it.key(), "key must be an element index");
    }
    if (a < 0 || a >= q) throw SchemaError(path + "/values/" + it.key(), "index out of range");
    const json& pts = it.value();
    if (!pts.is_array() || static_cast<int>(pts.size()) != points)
      throw SchemaError(path + "/values/" + it.key(), "expected one vector per point");
    for (int w = 0; w < points; ++w) {
      const json& vec = pts[w];
      if (!vec.is_array() || static_cast<int>(vec.size()) != k)
        throw SchemaError(path + "/values/" + it.key(), "expected k-length vectors");
      for (int i = 0; i < k; ++i)
        l.v[a][w][i] = rat_from_json(vec[i], path + "/values/" + it.key());
    }
  }
  return l;
}

json symbol_to_json(const SeifertSymbol& s) {
  json cones = json::array();
  for (const auto& [a, b] : s.cones) cones.push_back(json::array({int_to_json(a), int_to_json(b)}));
  return json{{"genus", s.genus}, {"b", int_to_json(s.b)}, {"cones", cones}};
}

SeifertSymbol symbol_from_json(const json& j, const std::string& path) {
  SeifertSymbol s;
  s.genus = small_int(need(j, "genus", path), path + "/genus");
  s.b = int_from_json(need(j, "b", path), path + "/b");
  if (j.contains("cones")) {
    const json& jc = j["cones"];
    if (!jc.is_array()) throw SchemaError(path + "/cones", "expected an array of pairs");
    for (std::size_t i = 0; i < jc.size(); ++i) {
      const json& pr = jc[i];
      if (!pr.is_array() || pr.size() != 2)
        throw SchemaError(path + "/cones/" + std::to_string(i), "expected [alpha, beta]");
      s.cones.emplace_back(int_from_json(pr[0], path + "/cones"),
                           int_from_json(pr[1], path + "/cones"));
    }
  }
  if (s.genus < 0) throw SchemaError(path + "/genus", "genus must be >= 0");
  for (const auto& [a, b] : s.cones)
    if (a < 2) throw SchemaError(path + "/cones", "every alpha_j must be >= 2");
  return s;
}

SeifertSymbol symbol_from_string(const std::string& text) {
  // "g;b;(a1,b1),(a2,b2),..."  with an optional empty cone section.
  SeifertSymbol s;
  std::istringstream in(text);
  char sep = 0;
  if (!(in >> s.genus >> sep) || sep != ';')
    throw std::invalid_argument("symbol: expected \"g;b;(a1,b1),...\"");
  long b;
  if (!(in >> b >> sep) || sep != ';')
    throw std::invalid_argument("symbol: expected \"g;b;(a1,b1),...\"");
  s.b = b;
  for (;;) {
    char c = 0;
    if (!(in >> c)) break;
    if (c == ',') continue;
    if (c != '(') throw std::invalid_argument("symbol: expected '(' in cone list");
    long alpha, beta;
    char comma = 0, close = 0;
    if (!(in >> alpha >> comma >> beta >> close) || comma != ',' || close != ')')
      throw std::invalid_argument("symbol: malformed cone pair");
    s.cones.emplace_back(alpha, beta);
  }
  if (s.genus < 0) throw std::invalid_argument("symbol: genus must be >= 0");
  for (const auto& [a, bb] : s.cones)
    if (a < 2) throw std::invalid_argument("symbol: every alpha_j must be >= 2");
  return s;
}

json invariant_report_to_json(const SeifertSymbol& s, const InvariantReport& r) {
  const char* base = r.base_type == BaseType::hyperbolic   ? "hyperbolic"
                     : r.base_type == BaseType::euclidean ? "euclidean"
                                                          : "spherical";
  json out{{"symbol", symbol_to_json(s)},
           {"e", rat_to_json(r.e)},
           {"chi", rat_to_json(r.chi)},
           {"L", int_to_json(r.L)},
           {"pushforward", rat_to_json(r.pushforward)},
           {"infinite_order", r.has_infinite_order},
           {"base_type", base},
           {"psl_realizable", r.psl_realizable}};
  if (r.deformation_valid)
    out["deformation"] = json{{"h1_rank", r.h1_rank}, {"teich_dim", r.teich_dim}};
  else
    out["deformation"] = "outside the hyperbolic regime";
  return out;
}

json heis_to_json(const Heis& h) {
  return json{{"z", rat_to_json(h.z)}, {"x", rat_to_json(h.x)}, {"y", rat_to_json(h.y)}};
}

Heis heis_from_json(const json& j, const std::string& path) {
  return Heis{rat_from_json(need(j, "z", path), path + "/z"),
              rat_from_json(need(j, "x", path), path + "/x"),
              rat_from_json(need(j, "y", path), path + "/y")};
}

json poly_to_json(const Poly& p) {
  json monomials = json::array();
  for (const auto& [e, c] : p.terms()) {
    json exps = json::array();
    for (unsigned x : e) exps.push_back(x);
    monomials.push_back(json{{"coef", rat_to_json(c)}, {"exps", exps}});
  }
  return json{{"monomials", monomials}};
}

Poly poly_from_json(int nvars, const json& j, const std::string& path) {
  const json& jm = need(j, "monomials", path);
  if (!jm.is_array()) throw SchemaError(path + "/monomials", "expected an array");
  Poly p(nvars);
  for (std::size_t i = 0; i < jm.size(); ++i) {
    std::string mp = path + "/monomials/" + std::to_string(i);
    Rat c = rat_from_json(need(jm[i], "coef", mp), mp + "/coef");
    const json& je = need(jm[i], "exps", mp);
    if (!je.is_array() || static_cast<int>(je.size()) != nvars)
      throw SchemaError(mp + "/exps", "expected one exponent per variable");
    Poly::Exps e;
    for (const auto& x : je) {
      if (!x.is_number_integer() || x.get<long>() < 0)
        throw SchemaError(mp + "/exps", "exponents must be non-negative integers");
      e.push_back(x.get<unsigned>());
    }
    p.add_term(e, c);
  }
  return p;
}

json polymap_to_json(const PolyMap& p) {
  json comps = json::array();
  for (const auto& c : p.comp) comps.push_back(poly_to_json(c));
  json out{{"dim", p.dim}, {"components", comps}};
  if (p.inverse) {
    json inv = json::array();
    for (const auto& c : *p.inverse) inv.push_back(poly_to_json(c));
    out["inverse"] = std::move(inv);
  }
  return out;
}

PolyMap polymap_from_json(const json& j, const std::string& path) {
  int dim = small_int(need(j, "dim", path), path + "/dim");
  const json& jc = need(j, "components", path);
  if (!jc.is_array() || static_cast<int>(jc.size()) != dim)
    throw SchemaError(path + "/components", "expected dim components");
  PolyMap p;
  p.dim = dim;
  for (int i = 0; i < dim; ++i)
    p.comp.push_back(poly_from_json(dim, jc[i], path + "/components/" + std::to_string(i)));
  if (j.contains("inverse")) {
    const json& ji = j["inverse"];
    if (!ji.is_array() || static_cast<int>(ji.size()) != dim)
      throw SchemaError(path + "/inverse", "expected dim components");
    std::vector<Poly> inv;
    for (int i = 0; i < dim; ++i)
      inv.push_back(poly_from_json(dim, ji[i], path + "/inverse/" + std::to_string(i)));
    try {
      p = with_inverse(std::move(p), std::move(inv));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(path + "/inverse", e.what());
    }
  }
  return p;
}

json presentation_to_json(const FpPresentation& p) {
  return json{{"generators", p.generators}, {"relators", p.relators}, {"central", p.central}};
}

FpPresentation presentation_from_json(const json& j, const std::string& path) {
  FpPresentation p;
  const json& jg = need(j, "generators", path);
  if (!jg.is_array()) throw SchemaError(path + "/generators", "expected an array of names");
  for (const auto& g : jg) {
    if (!g.is_string()) throw SchemaError(path + "/generators", "names must be strings");
    p.generators.push_back(g.get<std::string>());
  }
  if (j.contains("relators")) {
    const json& jr = j["relators"];
    if (!jr.is_array()) throw SchemaError(path + "/relators", "expected an array of words");
    for (std::size_t r = 0; r < jr.size(); ++r) {
      if (!jr[r].is_array())
        throw SchemaError(path + "/relators/" + std::to_string(r), "expected a word");
      std::vector<int> word;
      for (const auto& s : jr[r])
        word.push_back(small_int(s, path + "/relators/" + std::to_string(r)));
      p.relators.push_back(std::move(word));
    }
  }
  if (j.contains("central")) {
    const json& jc = j["central"];
    if (!jc.is_array()) throw SchemaError(path + "/central", "expected generator indices");
    for (const auto& c : jc) p.central.push_back(small_int(c, path + "/central"));
  }
  if (!p.valid()) throw SchemaError(path, "relator references an undeclared generator");
  return p;
}

json universal_to_json(const UniversalElement& e) {
  json lam = json::array();
  for (const auto& v : e.lam) {
    json vv = json::array();
    for (const auto& x : v) vv.push_back(rat_to_json(x));
    lam.push_back(std::move(vv));
  }
  json mat = json::array();
  for (std::size_t i = 0; i < e.mat.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < e.mat.cols; ++j) row.push_back(rat_to_json(e.mat.at(i, j)));
    mat.push_back(std::move(row));
  }
  return json{{"lam", lam}, {"mat", mat}, {"perm", e.perm}};
}

json fiber_report_to_json(const FiberReport& r) {
  json orbits = json::array();
  for (const auto& o : r.orbits) {
    orbits.push_back(json{{"representative", o.representative},
                          {"orbit", o.orbit},
                          {"stabilizer", o.stabilizer},
                          {"typical", o.typical},
                          {"stabilizer_order", o.stabilizer.size()},
                          {"pullback", extension_to_json(o.pi_w)}});
  }
  return json{{"orbits", orbits}};
}

}  // namespace sfk
