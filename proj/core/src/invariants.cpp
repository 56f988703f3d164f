#include "sfk/invariants.hpp"

#include <stdexcept>

namespace sfk {

namespace {

void check_symbol(const SeifertSymbol& sym) {
  if (sym.genus < 0) throw std::invalid_argument("symbol: genus must be >= 0");
  for (const auto& [alpha, beta] : sym.cones)
    if (alpha < 2) throw std::invalid_argument("symbol: every alpha_j must be >= 2");
}

}  // namespace

Rat euler_number(const SeifertSymbol& sym) {
  check_symbol(sym);
  Rat s(sym.b);
  for (const auto& [alpha, beta] : sym.cones) s += Rat(beta, alpha);
  return -s;
}

Rat base_euler_char(const SeifertSymbol& sym) {
  check_symbol(sym);
  Rat chi(2 - 2 * sym.genus);
  for (const auto& [alpha, beta] : sym.cones) chi -= Rat(1) - Rat(Int(1), alpha);
  return chi;
}

std::pair<Int, Rat> pushforward_class(const SeifertSymbol& sym) {
  check_symbol(sym);
  Int l = 1;
  for (const auto& [alpha, beta] : sym.cones) {
    Int g;
    mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), alpha.get_mpz_t());
    l = g;
  }
  return {l, Rat(l) * euler_number(sym)};
}

bool infinite_order(const SeifertSymbol& sym) { return euler_number(sym) != 0; }

InvariantReport geometry_report(const SeifertSymbol& sym) {
  InvariantReport rep;
  rep.e = euler_number(sym);
  rep.chi = base_euler_char(sym);
  auto [l, push] = pushforward_class(sym);
  rep.L = l;
  rep.pushforward = push;
  rep.has_infinite_order = rep.e != 0;
  rep.base_type = rep.chi < 0   ? BaseType::hyperbolic
                  : rep.chi > 0 ? BaseType::spherical
                                : BaseType::euclidean;
  rep.psl_realizable = rep.base_type == BaseType::hyperbolic && rep.e != 0;
  int g = sym.genus, p = static_cast<int>(sym.cones.size());
  rep.h1_rank = 2 * g;
  rep.teich_dim = 6 * g - 6 + 2 * p;
  rep.deformation_valid = rep.base_type == BaseType::hyperbolic;
  return rep;
}

DeformationDims deformation_dims(const SeifertSymbol& sym) {
  if (base_euler_char(sym) >= 0)
    throw std::invalid_argument("deformation_dims: symbol must have hyperbolic base (chi < 0)");
  int g = sym.genus, p = static_cast<int>(sym.cones.size());
  return DeformationDims{2 * g, 6 * g - 6 + 2 * p, 2 * g};
}

bool same_abs_euler(const SeifertSymbol& s1, const SeifertSymbol& s2) {
  return abs(euler_number(s1)) == abs(euler_number(s2));
}

void enumerate_symbols(const SymbolBounds& bounds,
                       const std::function<void(const SeifertSymbol&)>& fn) {
  std::vector<std::pair<Int, Int>> cone_menu;
  for (long a = 2; a <= bounds.max_alpha; ++a)
    for (long b = -bounds.max_abs_beta; b <= bounds.max_abs_beta; ++b)
      cone_menu.emplace_back(a, b);

  // Cone lists are multisets: emit nondecreasing index sequences only.
  std::vector<std::pair<Int, Int>> cones;
  std::function<void(std::size_t, int, const SeifertSymbol&)> rec =
      [&](std::size_t from, int remaining, const SeifertSymbol& base) {
        SeifertSymbol sym = base;
        sym.cones = cones;
        fn(sym);
        if (remaining == 0) return;
        for (std::size_t i = from; i < cone_menu.size(); ++i) {
          cones.push_back(cone_menu[i]);
          rec(i, remaining - 1, base);
          cones.pop_back();
        }
      };
  for (int g = 0; g <= bounds.max_genus; ++g)
    for (long b = -bounds.max_abs_b; b <= bounds.max_abs_b; ++b) {
      SeifertSymbol base;
      base.genus = g;
      base.b = b;
      rec(0, bounds.max_cones, base);
    }
}

}  // namespace sfk
