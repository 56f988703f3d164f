#include "sfk/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace sfk::cli {

namespace {

json read_payload(const std::string& json_file, std::istream& in) {
  try {
    if (!json_file.empty()) {
      std::ifstream f(json_file);
      if (!f) throw std::invalid_argument("cannot open --json file: " + json_file);
      return json::parse(f);
    }
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("/", std::string("JSON parse error: ") + e.what());
  }
}

FiniteGroup group_from_spec(const std::string& spec) {
  if (spec.rfind("cyclic:", 0) == 0) return build_cyclic(std::stoi(spec.substr(7)));
  if (spec == "klein") return build_abelian({2, 2});
  if (spec.rfind("abelian:", 0) == 0) {
    std::vector<int> moduli;
    std::stringstream ss(spec.substr(8));
    std::string part;
    while (std::getline(ss, part, 'x')) moduli.push_back(std::stoi(part));
    return build_abelian(moduli);
  }
  throw std::invalid_argument("unknown group spec '" + spec +
                              "' (use cyclic:n, klein, abelian:m1xm2x...)");
}

CoefModule module_from_spec(const FiniteGroup& q, const std::string& spec) {
  if (spec == "trivial-Z") return trivial_module(q, 1, {Int(0)});
  if (spec.rfind("trivial-Z:", 0) == 0)
    return trivial_module(q, 1, {Int(std::stol(spec.substr(10)))});
  if (spec == "sign-Z") {
    // Each element acts by the determinant of its sign: generators of even
    // order flip. Defined for cyclic groups via element parity.
    std::vector<IMat> action;
    for (int e = 0; e < q.order; ++e) {
      IMat m(1, 1);
      m.at(0, 0) = q.element_order(e) == 2 || (q.order % 2 == 0 && e % 2 == 1) ? -1 : 1;
      action.push_back(m);
    }
    auto res = validate_module(q, 1, {Int(0)}, std::move(action));
    if (!res.ok()) throw std::invalid_argument("sign-Z is not a module for this group: " + res.error);
    return *res.module;
  }
  throw std::invalid_argument("unknown module spec '" + spec +
                              "' (use trivial-Z, trivial-Z:m, sign-Z, or a JSON payload)");
}

json echo_options(const CommandRequest& req) {
  return json{{"seed", req.seed}, {"box", req.box}, {"samples", req.samples}};
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen);
  }
  Rat rational(long span = 20, long maxden = 12) {
    return Rat(Int(integer(-span, span)), Int(integer(1, maxden)));
  }
  Heis heis_point() { return Heis{rational(), rational(), rational()}; }
};

RunResult run_group(const CommandRequest& req, std::istream&) {
  RunResult out;
  if (req.verb == "cyclic") {
    int n = static_cast<int>(req.p);
    out.report = json{{"command", "group cyclic"}, {"n", n}, {"group", group_to_json(build_cyclic(n))}};
    return out;
  }
  if (req.verb == "presentation") {
    SeifertSymbol sym = symbol_from_string(req.symbol_text);
    out.report = json{{"command", "group presentation"},
                      {"symbol", symbol_to_json(sym)},
                      {"presentation", presentation_to_json(seifert_presentation(sym))}};
    return out;
  }
  if (req.verb == "validate") {
    const json& jm = req.payload.contains("mult") ? req.payload["mult"] : req.payload;
    if (!jm.is_array()) throw SchemaError("/mult", "expected a square table");
    std::vector<std::vector<int>> table;
    for (std::size_t r = 0; r < jm.size(); ++r) {
      if (!jm[r].is_array() || jm[r].size() != jm.size())
        throw SchemaError("/mult/" + std::to_string(r), "table is not square");
      std::vector<int> row;
      for (const auto& e : jm[r]) {
        if (!e.is_number_integer()) throw SchemaError("/mult", "entries must be integers");
        row.push_back(e.get<int>());
      }
      table.push_back(std::move(row));
    }
    auto res = validate_group(table);
    if (!res.ok()) {
      out.exit_code = 1;
      out.report = json{{"command", "group validate"}, {"ok", false}, {"error", res.error},
                        {"witness", res.witness}};
      return out;
    }
    out.report = json{{"command", "group validate"}, {"ok", true},
                      {"group", group_to_json(*res.group)}};
    return out;
  }
  if (req.verb == "orbits") {
    FiniteGroup q = group_from_json(req.payload.at("group"), "/group");
    PermAction act = action_from_json(q, req.payload.at("action"), "/action");
    OrbitReport rep = orbits_and_stabilizers(q, act);
    json orbits = json::array();
    for (const auto& o : rep.orbits) orbits.push_back(o);
    json stabs = json::array();
    for (const auto& s : rep.stabilizers) stabs.push_back(s);
    out.report = json{{"command", "group orbits"}, {"orbits", orbits}, {"stabilizers", stabs}};
    return out;
  }
  throw std::invalid_argument("unknown group verb");
}

RunResult run_cocycle(const CommandRequest& req, std::istream&) {
  RunResult out;
  FiniteGroup q = group_from_json(req.payload.at("group"), "/group");
  CoefModule a = module_from_json(q, req.payload.at("module"), "/module");
  if (req.verb == "check") {
    Cochain2 f = cochain2_from_json(q, a, req.payload.at("cocycle"), "/cocycle");
    auto res = is_cocycle(q, a, f);
    out.report = json{{"command", "cocycle check"}, {"ok", res.ok}};
    if (!res.ok) {
      out.exit_code = 1;
      out.report["failure"] = res.failure == CocycleCheck::Failure::normalization
                                  ? "normalization"
                                  : "cocycle-identity";
      out.report["witness"] = res.witness;
    }
    return out;
  }
  if (req.verb == "cobound") {
    Cochain1 l = cochain1_from_json(q, a, req.payload.at("cochain"), "/cochain");
    out.report = json{{"command", "cocycle cobound"},
                      {"coboundary", cochain2_to_json(coboundary(q, a, l))}};
    return out;
  }
  if (req.verb == "cohomologous") {
    Cochain2 f1 = cochain2_from_json(q, a, req.payload.at("f1"), "/f1");
    Cochain2 f2 = cochain2_from_json(q, a, req.payload.at("f2"), "/f2");
    auto res = cohomologous(q, a, f1, f2);
    if (!res.found()) {
      out.exit_code = 1;
      out.report = json{{"command", "cocycle cohomologous"}, {"cohomologous", false},
                        {"reason", res.reason}};
      return out;
    }
    out.report = json{{"command", "cocycle cohomologous"}, {"cohomologous", true},
                      {"lambda", cochain1_to_json(*res.lam)}};
    return out;
  }
  if (req.verb == "average") {
    PermAction rho = action_from_json(q, req.payload.at("action"), "/action");
    Cochain2 f = cochain2_from_json(q, a, req.payload.at("cocycle"), "/cocycle");
    FnTwist tw = make_fn_twist(q, a, rho);
    FnCochain2 F = FnCochain2::constant(q, f, rho.points);
    auto chk = fn_is_cocycle(q, tw, F);
    if (!chk.ok) {
      out.exit_code = 1;
      out.report = json{{"command", "cocycle average"}, {"ok", false},
                        {"failure", "not a cocycle"}, {"witness", chk.witness}};
      return out;
    }
    FnCochain1 lam = averaging_cobound(q, tw, F);
    out.report = json{{"command", "cocycle average"}, {"ok", true},
                      {"lambda", fn1_to_json(lam)}};
    return out;
  }
  throw std::invalid_argument("unknown cocycle verb");
}

RunResult run_h2(const CommandRequest& req, std::istream&) {
  RunResult out;
  FiniteGroup q;
  CoefModule a;
  json resolved;
  if (!req.group_spec.empty()) {
    q = group_from_spec(req.group_spec);
    a = module_from_spec(q, req.module_spec.empty() ? "trivial-Z" : req.module_spec);
    resolved = json{{"group", req.group_spec},
                    {"module", req.module_spec.empty() ? "trivial-Z" : req.module_spec}};
  } else {
    q = group_from_json(req.payload.at("group"), "/group");
    a = module_from_json(q, req.payload.at("module"), "/module");
    resolved = json{{"group", group_to_json(q)}, {"module", module_to_json(a)}};
  }
  IVec inv = req.degree == 1 ? h1_invariant_factors(q, a) : h2_invariant_factors(q, a);
  json factors = json::array();
  for (const auto& d : inv) factors.push_back(int_to_json(d));
  out.report = json{{"command", "h2"}, {"degree", req.degree}, {"input", resolved},
                    {"invariant_factors", factors}};
  return out;
}

json ext_element_to_json(const ExtElement& e) {
  json a = json::array();
  for (const auto& x : e.a) a.push_back(int_to_json(x));
  return json{{"a", a}, {"alpha", e.alpha}};
}

ExtElement ext_element_from_json(const ExtensionData& E, const json& j, const std::string& path) {
  const json& ja = j.contains("a") ? j["a"] : throw SchemaError(path + "/a", "missing field");
  if (!ja.is_array() || static_cast<int>(ja.size()) != E.A.rank)
    throw SchemaError(path + "/a", "expected a rank-length vector");
  IVec v;
  for (const auto& x : ja) v.push_back(int_from_json(x, path + "/a"));
  int alpha = j.value("alpha", -1);
  if (alpha < 0 || alpha >= E.Q.order) throw SchemaError(path + "/alpha", "element out of range");
  return ext_element(E, std::move(v), alpha);
}

IMat imat_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!j.is_array() || j.size() != rows) throw SchemaError(path, "matrix row count mismatch");
  IMat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw SchemaError(path + "/" + std::to_string(r), "matrix column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = int_from_json(j[r][c], path);
  }
  return m;
}

RunResult run_ext(const CommandRequest& req, std::istream&) {
  RunResult out;
  if (req.verb == "congruent") {
    ExtensionData e1 = extension_from_json(req.payload.at("e1"), "/e1");
    ExtensionData e2 = extension_from_json(req.payload.at("e2"), "/e2");
    auto res = congruent(e1, e2);
    if (!res.congruent()) {
      out.exit_code = 1;
      out.report = json{{"command", "ext congruent"}, {"congruent", false}, {"reason", res.reason}};
    } else {
      out.report = json{{"command", "ext congruent"}, {"congruent", true},
                        {"lambda", cochain1_to_json(*res.lam)}};
    }
    return out;
  }
  ExtensionData E = extension_from_json(req.payload.at("extension"), "/extension");
  if (req.verb == "mul") {
    ExtElement x = ext_element_from_json(E, req.payload.at("x"), "/x");
    ExtElement y = ext_element_from_json(E, req.payload.at("y"), "/y");
    out.report = json{{"command", "ext mul"},
                      {"product", ext_element_to_json(ext_mul(E, x, y))}};
    return out;
  }
  if (req.verb == "inv") {
    ExtElement x = ext_element_from_json(E, req.payload.at("x"), "/x");
    out.report = json{{"command", "ext inv"},
                      {"inverse", ext_element_to_json(ext_inv(E, x))}};
    return out;
  }
  if (req.verb == "order") {
    ExtElement x = ext_element_from_json(E, req.payload.at("x"), "/x");
    int bound = req.payload.value("bound", 64);
    auto n = torsion_order(E, x, bound);
    out.report = json{{"command", "ext order"}, {"bound", bound}};
    if (n)
      out.report["order"] = *n;
    else
      out.report["order"] = "exceeds bound";
    return out;
  }
  if (req.verb == "pushout") {
    FiniteGroup q = E.Q;
    CoefModule ap = module_from_json(q, req.payload.at("target_module"), "/target_module");
    IMat eps = imat_from_json(req.payload.at("eps"), ap.rank, E.A.rank, "/eps");
    ExtensionData res = pushout(E, eps, ap);
    out.report = json{{"command", "ext pushout"}, {"extension", extension_to_json(res)}};
    return out;
  }
  if (req.verb == "pullback") {
    FiniteGroup qn = group_from_json(req.payload.at("Qnew"), "/Qnew");
    const json& jr = req.payload.at("rho");
    if (!jr.is_array() || static_cast<int>(jr.size()) != qn.order)
      throw SchemaError("/rho", "expected one image per Qnew element");
    std::vector<int> rho;
    for (const auto& x : jr) rho.push_back(x.get<int>());
    ExtensionData res = pullback(E, qn, rho);
    out.report = json{{"command", "ext pullback"}, {"extension", extension_to_json(res)}};
    return out;
  }
  if (req.verb == "map") {
    ExtensionData Ep = extension_from_json(req.payload.at("target"), "/target");
    IMat ibar = imat_from_json(req.payload.at("ibar"), Ep.A.rank, E.A.rank, "/ibar");
    const json& jt = req.payload.at("thetabar");
    if (!jt.is_array() || static_cast<int>(jt.size()) != E.Q.order)
      throw SchemaError("/thetabar", "expected one image per element");
    std::vector<int> tb;
    for (const auto& x : jt) tb.push_back(x.get<int>());
    auto res = map_extension(E, Ep, ibar, tb);
    if (!res.found()) {
      out.exit_code = 1;
      out.report = json{{"command", "ext map"}, {"found", false}, {"reason", res.reason}};
    } else {
      out.report = json{{"command", "ext map"}, {"found", true},
                        {"lambda", cochain1_to_json(*res.lam)}};
    }
    return out;
  }
  throw std::invalid_argument("unknown ext verb");
}

RunResult run_seifert(const CommandRequest& req, std::istream&) {
  RunResult out;
  ExtensionData E = extension_from_json(req.payload.at("extension"), "/extension");
  PermAction rho = action_from_json(E.Q, req.payload.at("action"), "/action");
  ConstructedAction act = construct_theta(E, rho, req.box);
  if (req.verb == "construct") {
    FiberReport fibers = fiber_analysis(act);
    auto inj = injectivity_check(E.Q, E.A, rho);
    json verification{{"compatibility_pairs", E.Q.order * E.Q.order * rho.points},
                      {"homomorphism_box", req.box},
                      {"ok", true},
                      {"injective", inj.injective}};
    if (!inj.injective) verification["kernel_witness"] = inj.witness;
    out.report = json{{"command", "seifert construct"},
                      {"lambda", fn1_to_json(act.lambda)},
                      {"verification", verification},
                      {"fibers", fiber_report_to_json(fibers)}};
    return out;
  }
  if (req.verb == "equiv") {
    const json& jg = req.payload.at("gauge");
    if (!jg.is_array() || static_cast<int>(jg.size()) != rho.points)
      throw SchemaError("/gauge", "expected one k-vector per point");
    std::vector<QVec> gauge;
    for (std::size_t w = 0; w < jg.size(); ++w) {
      if (!jg[w].is_array() || static_cast<int>(jg[w].size()) != E.A.rank)
        throw SchemaError("/gauge/" + std::to_string(w), "expected a k-vector");
      QVec v;
      for (const auto& x : jg[w]) v.push_back(rat_from_json(x, "/gauge"));
      gauge.push_back(std::move(v));
    }
    ConstructedAction act2 = act;
    // Conjugate the stored cochain: lambda2(a) = lambda(a) + lam0 - phi(a) lam0 rho(a)^-1.
    FnTwist tw = make_fn_twist(E.Q, E.A, rho);
    for (int a = 0; a < E.Q.order; ++a)
      for (int w = 0; w < rho.points; ++w)
        act2.lambda.v[a][w] =
            qvec_sub(qvec_add(act.lambda.v[a][w], gauge[w]),
                     qmat_apply(tw.mat[a], gauge[tw.perm_inv[a][w]]));
    auto res = strict_equiv(act, act2, req.box);
    json witness = json::array();
    for (const auto& v : res.lam0) {
      json vv = json::array();
      for (const auto& x : v) vv.push_back(rat_to_json(x));
      witness.push_back(std::move(vv));
    }
    out.report = json{{"command", "seifert equiv"},
                      {"status", res.status == EquivStatus::found ? "found" : "none"},
                      {"witness", witness}};
    if (res.status != EquivStatus::found) out.exit_code = 1;
    return out;
  }
  throw std::invalid_argument("unknown seifert verb");
}

RunResult run_heis(const CommandRequest& req, std::istream&) {
  RunResult out;
  if (req.verb == "mul") {
    Heis g = heis_from_json(req.payload.at("g"), "/g");
    Heis h = heis_from_json(req.payload.at("h"), "/h");
    out.report = json{{"command", "heis mul"}, {"product", heis_to_json(heis_mul(g, h))}};
    return out;
  }
  if (req.verb == "verify") {
    Int p(req.p);
    if (p == 0) throw std::invalid_argument("heis verify: --p must be nonzero");
    Rng rng(req.seed);
    HeisLattice lat = lattice_generators(p);
    // Lattice relations.
    Heis comm = heis_mul(heis_mul(lat.alpha, lat.beta),
                         heis_mul(heis_inv(lat.alpha), heis_inv(lat.beta)));
    Heis gp = heis_identity();
    for (Int i = 0; i < abs(p); ++i) gp = heis_mul(gp, p > 0 ? lat.gamma : heis_inv(lat.gamma));
    bool relations = comm == gp;
    auto commutes = [](const Heis& a, const Heis& b) {
      return heis_mul(a, b) == heis_mul(b, a);
    };
    relations = relations && commutes(lat.alpha, lat.gamma) && commutes(lat.beta, lat.gamma);
    // Left multiplication against the tabulated action on seeded points.
    std::vector<Heis> samples;
    for (int i = 0; i < req.samples; ++i) samples.push_back(rng.heis_point());
    auto lm = action_is_left_mult(p, samples);
    // Group law against the 3x3 matrix model.
    bool matrix_ok = true;
    for (int i = 0; i < req.samples && matrix_ok; ++i) {
      Heis g = rng.heis_point(), h = rng.heis_point();
      matrix_ok = heis_from_matrix(qmat_mul(heis_to_matrix(g), heis_to_matrix(h))) ==
                  heis_mul(g, h);
    }
    bool ok = relations && lm.ok && matrix_ok;
    out.report = json{{"command", "heis verify"},
                      {"p", req.p},
                      {"options", echo_options(req)},
                      {"relations", relations ? "pass" : "fail"},
                      {"left-mult", lm.ok ? "pass" : "fail"},
                      {"matrix-model", matrix_ok ? "pass" : "fail"}};
    if (!ok) out.exit_code = 1;
    return out;
  }
  throw std::invalid_argument("unknown heis verb");
}

RunResult run_invariants(const CommandRequest& req, std::ostream& stream_out) {
  RunResult out;
  if (req.verb == "enumerate") {
    long count = 0;
    enumerate_symbols(req.bounds, [&](const SeifertSymbol& sym) {
      stream_out << invariant_report_to_json(sym, geometry_report(sym)).dump() << "\n";
      ++count;
    });
    out.report = json{{"command", "invariants enumerate"}, {"symbols", count}};
    return out;
  }
  SeifertSymbol sym = symbol_from_string(req.symbol_text);
  out.report = invariant_report_to_json(sym, geometry_report(sym));
  out.report["command"] = "invariants";
  return out;
}

RunResult run_polyrep(const CommandRequest& req, std::istream&) {
  RunResult out;
  if (req.verb == "build") {
    TwoStepData data;
    data.k1 = req.payload.value("k1", -1);
    data.k2 = req.payload.value("k2", -1);
    if (data.k1 < 0 || data.k2 < 0) throw SchemaError("/k1", "need k1 and k2");
    const json& jb = req.payload.at("B");
    if (!jb.is_array() || static_cast<int>(jb.size()) != data.k1)
      throw SchemaError("/B", "expected one k2 x k2 pairing per central coordinate");
    for (int s = 0; s < data.k1; ++s)
      data.B.push_back(imat_from_json(jb[s], data.k2, data.k2, "/B/" + std::to_string(s)));
    const json& jd = req.payload.at("denom");
    if (!jd.is_array() || static_cast<int>(jd.size()) != data.k1)
      throw SchemaError("/denom", "expected one denominator per central coordinate");
    for (const auto& d : jd) data.denom.push_back(int_from_json(d, "/denom"));
    TwoStepRep rep = construct_2step_rep(data);
    json gens = json::array();
    for (const auto& g : rep.gens) gens.push_back(polymap_to_json(g));
    out.report = json{{"command", "polyrep build"},
                      {"generators", gens},
                      {"presentation", presentation_to_json(rep.pres)}};
    return out;
  }
  if (req.verb == "verify") {
    FpPresentation pres = presentation_from_json(req.payload.at("presentation"), "/presentation");
    const json& jg = req.payload.at("generators");
    if (!jg.is_array() || jg.size() != pres.generators.size())
      throw SchemaError("/generators", "expected one map per presentation generator");
    std::vector<PolyMap> gens;
    for (std::size_t i = 0; i < jg.size(); ++i)
      gens.push_back(polymap_from_json(jg[i], "/generators/" + std::to_string(i)));
    for (const auto& g : gens)
      if (!g.has_inverse()) throw SchemaError("/generators", "every generator needs an inverse");
    auto res = verify_rep(gens, pres);
    out.report = json{{"command", "polyrep verify"}, {"ok", res.ok}};
    if (!res.ok) {
      out.exit_code = 1;
      out.report["witness"] = res.witness;
      if (res.relator >= 0) out.report["relator"] = res.relator;
    }
    return out;
  }
  if (req.verb == "conjcheck") {
    auto read_rep = [&](const char* key) {
      const json& jr = req.payload.at(key);
      if (!jr.is_array()) throw SchemaError(std::string("/") + key, "expected an array of maps");
      std::vector<PolyMap> rep;
      for (std::size_t i = 0; i < jr.size(); ++i)
        rep.push_back(polymap_from_json(jr[i], std::string("/") + key + "/" + std::to_string(i)));
      return rep;
    };
    std::vector<PolyMap> rep1 = read_rep("rep1"), rep2 = read_rep("rep2");
    PolyMap cand = polymap_from_json(req.payload.at("cand"), "/cand");
    auto res = conjugacy_verify(rep1, rep2, cand);
    out.report = json{{"command", "polyrep conjcheck"}, {"ok", res.ok}};
    if (!res.ok) {
      out.exit_code = 1;
      out.report["witness_generator"] = res.generator;
    }
    return out;
  }
  throw std::invalid_argument("unknown polyrep verb");
}

}  // namespace

ParseResult parse_request(const std::vector<std::string>& argv, std::istream& stdin_stream) {
  ParseResult out;
  CLI::App app{"exact-arithmetic toolkit for group extensions, Seifert constructions, "
               "orbifold invariants and polynomial representations"};
  app.require_subcommand(1);

  CommandRequest req;
  std::string json_file;
  bool needs_payload = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", req.seed, "random seed for sampled checks")->capture_default_str();
    cmd->add_option("--box", req.box, "coordinate box for exhaustive module-part checks")
        ->capture_default_str();
    cmd->add_option("--samples", req.samples, "sample count for randomized checks")
        ->capture_default_str();
    cmd->add_flag("-v,--verbose", req.verbosity, "verbosity");
    cmd->add_option("--json", json_file, "read the JSON payload from a file instead of stdin");
  };

  auto* group = app.add_subcommand("group", "finite groups, actions, presentations");
  auto* group_cyclic = group->add_subcommand("cyclic", "build the cyclic group Z_n");
  group_cyclic->add_option("--n", req.p, "order")->required();
  auto* group_validate = group->add_subcommand("validate", "validate a multiplication table");
  auto* group_orbits = group->add_subcommand("orbits", "orbits and stabilizers of an action");
  auto* group_pres = group->add_subcommand("presentation", "Seifert symbol presentation");
  group_pres->add_option("--symbol", req.symbol_text, "symbol \"g;b;(a1,b1),...\"")->required();
  for (auto* c : {group_cyclic, group_validate, group_orbits, group_pres}) add_common(c);

  auto* cocycle = app.add_subcommand("cocycle", "factor sets and coboundaries");
  for (const char* verb : {"check", "cobound", "cohomologous", "average"})
    add_common(cocycle->add_subcommand(verb));

  auto* h2 = app.add_subcommand("h2", "cohomology invariant factors");
  h2->add_option("--group", req.group_spec, "group spec: cyclic:n, klein, abelian:m1xm2");
  h2->add_option("--module", req.module_spec, "module spec: trivial-Z, trivial-Z:m, sign-Z");
  h2->add_option("--degree", req.degree, "cohomology degree (1 or 2)")->capture_default_str();
  add_common(h2);

  auto* ext = app.add_subcommand("ext", "extension groups and their maps");
  for (const char* verb : {"mul", "inv", "order", "congruent", "pushout", "pullback", "map"})
    add_common(ext->add_subcommand(verb));

  auto* seifert = app.add_subcommand("seifert", "the injective Seifert construction");
  for (const char* verb : {"construct", "equiv"}) add_common(seifert->add_subcommand(verb));

  auto* heis = app.add_subcommand("heis", "Heisenberg lattice arithmetic");
  auto* heis_verify = heis->add_subcommand("verify", "verify lattice relations and the action");
  heis_verify->add_option("--p", req.p, "central denominator (nonzero)")->required();
  auto* heis_mul_cmd = heis->add_subcommand("mul", "multiply two elements");
  add_common(heis_verify);
  add_common(heis_mul_cmd);

  auto* invariants = app.add_subcommand("invariants", "Seifert 3-orbifold invariants");
  invariants->add_option("--symbol", req.symbol_text, "symbol \"g;b;(a1,b1),...\"");
  auto* inv_enum = invariants->add_subcommand("enumerate", "stream reports for all symbols");
  inv_enum->add_option("--max-genus", req.bounds.max_genus)->capture_default_str();
  inv_enum->add_option("--max-cones", req.bounds.max_cones)->capture_default_str();
  inv_enum->add_option("--max-alpha", req.bounds.max_alpha)->capture_default_str();
  inv_enum->add_option("--max-b", req.bounds.max_abs_b)->capture_default_str();
  inv_enum->add_option("--max-beta", req.bounds.max_abs_beta)->capture_default_str();
  add_common(invariants);

  auto* polyrep = app.add_subcommand("polyrep", "canonical polynomial representations");
  for (const char* verb : {"build", "verify", "conjcheck"})
    add_common(polyrep->add_subcommand(verb));

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out.help = true;
    out.help_text = app.help();
    return out;
  } catch (const CLI::ParseError& e) {
    out.exit_code = 2;
    out.diagnostic = e.what();
    return out;
  }

  auto* chosen = app.get_subcommands().front();
  req.command = chosen->get_name();
  if (!chosen->get_subcommands().empty()) req.verb = chosen->get_subcommands().front()->get_name();

  if (req.command == "invariants") {
    req.verb = req.verb.empty() ? "report" : req.verb;
    if (req.verb == "report" && req.symbol_text.empty()) {
      out.exit_code = 2;
      out.diagnostic = "invariants: --symbol is required (or use the enumerate subcommand)";
      return out;
    }
  }
  if (req.command == "group" || req.command == "cocycle" || req.command == "ext" ||
      req.command == "seifert" || req.command == "polyrep" || req.command == "heis") {
    if (req.verb.empty()) {
      out.exit_code = 2;
      out.diagnostic = req.command + ": a subcommand is required";
      return out;
    }
  }

  needs_payload =
      (req.command == "group" && (req.verb == "validate" || req.verb == "orbits")) ||
      req.command == "cocycle" || req.command == "ext" || req.command == "seifert" ||
      (req.command == "heis" && req.verb == "mul") || req.command == "polyrep" ||
      (req.command == "h2" && req.group_spec.empty());
  if (needs_payload) {
    try {
      req.payload = read_payload(json_file, stdin_stream);
    } catch (const SchemaError& e) {
      out.exit_code = 2;
      out.diagnostic = e.what();
      return out;
    } catch (const std::invalid_argument& e) {
      out.exit_code = 2;
      out.diagnostic = e.what();
      return out;
    }
  }
  out.requests.push_back(std::move(req));
  return out;
}

RunResult run(const CommandRequest& req, std::ostream& stream_out) {
  try {
    if (req.command == "group") return run_group(req, std::cin);
    if (req.command == "cocycle") return run_cocycle(req, std::cin);
    if (req.command == "h2") return run_h2(req, std::cin);
    if (req.command == "ext") return run_ext(req, std::cin);
    if (req.command == "seifert") return run_seifert(req, std::cin);
    if (req.command == "heis") return run_heis(req, std::cin);
    if (req.command == "invariants") return run_invariants(req, stream_out);
    if (req.command == "polyrep") return run_polyrep(req, std::cin);
    RunResult out;
    out.exit_code = 2;
    out.report = json{{"error", "unknown command " + req.command}};
    return out;
  } catch (const SchemaError& e) {
    return RunResult{2, json{{"error", e.what()}, {"path", e.path}}};
  } catch (const json::exception& e) {
    return RunResult{2, json{{"error", std::string("payload: ") + e.what()}}};
  } catch (const std::invalid_argument& e) {
    return RunResult{2, json{{"error", e.what()}}};
  } catch (const std::logic_error& e) {
    return RunResult{3, json{{"error", std::string("internal inconsistency: ") + e.what()}}};
  }
}

int main_entry(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  ParseResult parsed = parse_request(args, in);
  if (parsed.help) {
    out << parsed.help_text;
    return 0;
  }
  if (parsed.exit_code != 0) {
    err << parsed.diagnostic << "\n";
    return parsed.exit_code;
  }
  int code = 0;
  for (const auto& req : parsed.requests) {
    RunResult res = run(req, out);
    out << res.report.dump(2) << "\n";
    code = std::max(code, res.exit_code);
  }
  return code;
}

}  // namespace sfk::cli
