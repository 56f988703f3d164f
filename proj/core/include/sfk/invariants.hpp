#pragma once

#include <functional>

#include "sfk/group.hpp"

namespace sfk {

/// e = -(b + sum beta_j / alpha_j).
Rat euler_number(const SeifertSymbol& sym);
/// chi = (2 - 2g) - sum (1 - 1/alpha_j).
Rat base_euler_char(const SeifertSymbol& sym);
/// (L, L e) with L = lcm of the cone orders (1 when there are none).
std::pair<Int, Rat> pushforward_class(const SeifertSymbol& sym);
/// The extension class has infinite order iff e != 0.
bool infinite_order(const SeifertSymbol& sym);

enum class BaseType { hyperbolic, euclidean, spherical };

struct InvariantReport {
  Rat e;
  Rat chi;
  Int L;
  Rat pushforward;
  bool has_infinite_order = false;
  BaseType base_type = BaseType::spherical;
  bool psl_realizable = false;  // hyperbolic base and e != 0
  int h1_rank = 0;              // 2g
  int teich_dim = 0;            // 6g - 6 + 2p
  bool deformation_valid = false;  // the dimension formulas assume chi < 0
};
InvariantReport geometry_report(const SeifertSymbol& sym);

struct DeformationDims {
  int h1_rank;      // 2g
  int teich_dim;    // 6g - 6 + 2p
  int fiber_genus;  // torus fiber T^{2g}
};
/// Rejects non-hyperbolic symbols (chi >= 0).
DeformationDims deformation_dims(const SeifertSymbol& sym);

/// |e| agreement, the invariant the presentation normalization moves keep.
bool same_abs_euler(const SeifertSymbol& s1, const SeifertSymbol& s2);

struct SymbolBounds {
  int max_genus = 2;
  int max_cones = 3;
  long max_alpha = 5;
  long max_abs_b = 3;
  long max_abs_beta = 3;
};
/// Streams every symbol within the bounds (cone lists canonically sorted).
void enumerate_symbols(const SymbolBounds& bounds,
                       const std::function<void(const SeifertSymbol&)>& fn);

}  // namespace sfk
