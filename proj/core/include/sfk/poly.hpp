#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sfk/rational.hpp"

namespace sfk {

/// Multivariate polynomial over Q in canonical sparse form: exponent vector
/// -> nonzero coefficient. Equality is coefficient-wise.
class Poly {
 public:
  using Exps = std::vector<unsigned>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const std::map<Exps, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // total degree; -1 for the zero polynomial

  void add_term(const Exps& e, const Rat& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Rat& c) const;
  bool operator==(const Poly&) const = default;

  Rat eval(const QVec& x) const;
  /// Substitution: this(args[0], ..., args[n-1]), exact and symbolic.
  Poly substitute(const std::vector<Poly>& args) const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_ = 0;
  std::map<Exps, Rat> terms_;
};

/// A tuple of K polynomials in K variables, with an optional verified
/// polynomial inverse.
struct PolyMap {
  int dim = 0;
  std::vector<Poly> comp;
  std::optional<std::vector<Poly>> inverse;

  bool has_inverse() const { return inverse.has_value(); }
};

PolyMap poly_identity(int dim);
bool polymap_is_identity(const PolyMap& p);
bool polymap_eq(const PolyMap& p, const PolyMap& q);

/// Symbolic composite P o Q; the inverse is propagated when both maps carry
/// one.
PolyMap poly_compose(const PolyMap& p, const PolyMap& q);

/// Attaches an inverse after checking both composites equal the identity.
PolyMap with_inverse(PolyMap p, std::vector<Poly> inverse);
PolyMap polymap_inverse(const PolyMap& p);

QVec polymap_eval(const PolyMap& p, const QVec& x);

}  // namespace sfk
