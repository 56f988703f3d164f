#include "sfk/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace sfk {

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Exps(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("Poly::variable: index out of range");
  Poly p(nvars);
  Exps e(nvars, 0);
  e[i] = 1;
  p.add_term(e, Rat(1));
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (unsigned x : e) t += static_cast<int>(x);
    if (t > d) d = t;
  }
  return d;
}

void Poly::add_term(const Exps& e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("Poly::add_term: exponent arity mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: arity mismatch");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: arity mismatch");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, c * k);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: arity mismatch");
  Poly r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exps e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

Rat Poly::eval(const QVec& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("Poly::eval: arity");
  Rat s(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

Poly Poly::substitute(const std::vector<Poly>& args) const {
  if (static_cast<int>(args.size()) != nvars_)
    throw std::invalid_argument("Poly::substitute: arity mismatch");
  int out_vars = args.empty() ? 0 : args[0].nvars();
  for (const auto& a : args)
    if (a.nvars() != out_vars) throw std::invalid_argument("Poly::substitute: ragged arguments");
  Poly result(out_vars);
  // Cache powers of each argument as exponents stay small at desk scale.
  std::vector<std::vector<Poly>> powers(nvars_);
  for (int i = 0; i < nvars_; ++i) powers[i].push_back(Poly::constant(out_vars, Rat(1)));
  auto power = [&](int i, unsigned e) -> const Poly& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * args[i]);
    return powers[i][e];
  };
  for (const auto& [e, c] : terms_) {
    Poly t = Poly::constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) t = t * power(i, e[i]);
    result = result + t;
  }
  return result;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << "*";
      if (static_cast<std::size_t>(i) < names.size())
        os << names[i];
      else
        os << "v" << i;
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

PolyMap poly_identity(int dim) {
  PolyMap p;
  p.dim = dim;
  for (int i = 0; i < dim; ++i) p.comp.push_back(Poly::variable(dim, i));
  p.inverse = p.comp;
  return p;
}

bool polymap_is_identity(const PolyMap& p) {
  for (int i = 0; i < p.dim; ++i)
    if (!(p.comp[i] == Poly::variable(p.dim, i))) return false;
  return true;
}

bool polymap_eq(const PolyMap& p, const PolyMap& q) {
  return p.dim == q.dim && p.comp == q.comp;
}

namespace {

std::vector<Poly> compose_components(const std::vector<Poly>& outer,
                                     const std::vector<Poly>& inner) {
  std::vector<Poly> out;
  out.reserve(outer.size());
  for (const auto& c : outer) out.push_back(c.substitute(inner));
  return out;
}

}  // namespace

PolyMap poly_compose(const PolyMap& p, const PolyMap& q) {
  if (p.dim != q.dim) throw std::invalid_argument("poly_compose: dimension mismatch");
  PolyMap r;
  r.dim = p.dim;
  r.comp = compose_components(p.comp, q.comp);
  if (p.inverse && q.inverse) r.inverse = compose_components(*q.inverse, *p.inverse);
  return r;
}

PolyMap with_inverse(PolyMap p, std::vector<Poly> inverse) {
  if (static_cast<int>(inverse.size()) != p.dim)
    throw std::invalid_argument("with_inverse: component count mismatch");
  PolyMap id = poly_identity(p.dim);
  if (compose_components(p.comp, inverse) != id.comp ||
      compose_components(inverse, p.comp) != id.comp)
    throw std::invalid_argument("with_inverse: composition is not the identity");
  p.inverse = std::move(inverse);
  return p;
}

PolyMap polymap_inverse(const PolyMap& p) {
  if (!p.inverse) throw std::invalid_argument("polymap_inverse: no stored inverse");
  PolyMap r;
  r.dim = p.dim;
  r.comp = *p.inverse;
  r.inverse = p.comp;
  return r;
}

QVec polymap_eval(const PolyMap& p, const QVec& x) {
  QVec out;
  out.reserve(p.comp.size());
  for (const auto& c : p.comp) out.push_back(c.eval(x));
  return out;
}

}  // namespace sfk
