#pragma once

#include <nlohmann/json.hpp>

#include "sfk/engine.hpp"
#include "sfk/heisenberg.hpp"
#include "sfk/invariants.hpp"
#include "sfk/polyrep.hpp"

namespace sfk {

using json = nlohmann::json;

/// Thrown by the readers with the JSON path of the first schema violation.
struct SchemaError : std::runtime_error {
  std::string path;
  SchemaError(std::string p, const std::string& what)
      : std::runtime_error(p + ": " + what), path(std::move(p)) {}
};

json int_to_json(const Int& v);
Int int_from_json(const json& j, const std::string& path);
json rat_to_json(const Rat& v);  // always a "p/q" string
Rat rat_from_json(const json& j, const std::string& path);

json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j, const std::string& path = "/group");

json module_to_json(const CoefModule& a);
CoefModule module_from_json(const FiniteGroup& q, const json& j,
                            const std::string& path = "/module");

json action_to_json(const PermAction& a);
PermAction action_from_json(const FiniteGroup& q, const json& j,
                            const std::string& path = "/action");

json cochain2_to_json(const Cochain2& f);
Cochain2 cochain2_from_json(const FiniteGroup& q, const CoefModule& a, const json& j,
                            const std::string& path = "/cocycle");
json cochain1_to_json(const Cochain1& l);
Cochain1 cochain1_from_json(const FiniteGroup& q, const CoefModule& a, const json& j,
                            const std::string& path = "/cochain");

json extension_to_json(const ExtensionData& e);
ExtensionData extension_from_json(const json& j, const std::string& path = "/extension");

json fn1_to_json(const FnCochain1& l);
FnCochain1 fn1_from_json(const json& j, const std::string& path);

json symbol_to_json(const SeifertSymbol& s);
SeifertSymbol symbol_from_json(const json& j, const std::string& path = "/symbol");
/// Text form "g;b;(a1,b1),(a2,b2),...".
SeifertSymbol symbol_from_string(const std::string& text);
json invariant_report_to_json(const SeifertSymbol& s, const InvariantReport& r);

json heis_to_json(const Heis& h);
Heis heis_from_json(const json& j, const std::string& path);

json poly_to_json(const Poly& p);
Poly poly_from_json(int nvars, const json& j, const std::string& path);
json polymap_to_json(const PolyMap& p);
PolyMap polymap_from_json(const json& j, const std::string& path);

json presentation_to_json(const FpPresentation& p);
FpPresentation presentation_from_json(const json& j, const std::string& path = "/presentation");

json universal_to_json(const UniversalElement& e);
json fiber_report_to_json(const FiberReport& r);

}  // namespace sfk
