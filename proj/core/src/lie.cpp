#include "gsv/lie.hpp"

#include "gsv/error.hpp"

namespace gsv {

char kind_letter(Kind k) {
  switch (k) {
    case Kind::L: return 'L';
    case Kind::M: return 'M';
    case Kind::Y: return 'Y';
  }
  return '?';
}

std::string to_string(const Generator& g) {
  return std::string(1, kind_letter(g.kind)) + "(" + g.index.to_string() + ")";
}

bool Algebra::valid(const Generator& g) const {
  const ElementClass cls = gp_->classify(g.index);
  return g.kind == Kind::Y ? cls == ElementClass::InG1 : cls == ElementClass::InG;
}

void Algebra::validate(const Generator& g) const {
  if (valid(g)) return;
  const char* domain = g.kind == Kind::Y ? "G1" : "G";
  throw Error(ErrorCode::IndexDomain, to_string(g) + " not in " + domain);
}

LieElement Algebra::element(const Generator& g, const Rational& coeff) const {
  LieElement e(*this);
  e.add_term(g, coeff);
  return e;
}

LieElement Algebra::zero() const { return LieElement(*this); }

Rational LieElement::coefficient(const Generator& g) const {
  const auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LieElement::add_term(const Generator& g, const Rational& coeff) {
  if (coeff.is_zero()) return;
  alg_.validate(g);
  auto [it, inserted] = terms_.try_emplace(g, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LieElement::require_compatible(const LieElement& o) const {
  if (!alg_.compatible(o.alg_))
    throw Error(ErrorCode::MixedPresentation, "operands belong to different algebras");
}

LieElement& LieElement::operator+=(const LieElement& o) {
  require_compatible(o);
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  require_compatible(o);
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, c] : terms_) c *= s;
  return *this;
}

std::optional<std::pair<Generator, Rational>> bracket_basis(const Generator& a, const Generator& b) {
  const Rational& u = a.index;
  const Rational& v = b.index;
  switch (a.kind) {
    case Kind::L:
      switch (b.kind) {
        case Kind::L: {
          Rational c = v - u;
          if (c.is_zero()) return std::nullopt;
          return std::pair{L(u + v), std::move(c)};
        }
        case Kind::M:
          if (v.is_zero()) return std::nullopt;
          return std::pair{M(u + v), v};
        case Kind::Y:
          // [L_u, Y_x] = (x - u/2) Y_{u+x}; x - u/2 != 0 since x is not in G
          return std::pair{Y(u + v), v - u / Rational(2)};
      }
      break;
    case Kind::M:
      if (b.kind == Kind::L) {
        if (u.is_zero()) return std::nullopt;
        return std::pair{M(u + v), -u};
      }
      return std::nullopt;
    case Kind::Y:
      switch (b.kind) {
        case Kind::L:
          return std::pair{Y(u + v), -(u - v / Rational(2))};
        case Kind::M:
          return std::nullopt;
        case Kind::Y: {
          Rational c = v - u;
          if (c.is_zero()) return std::nullopt;
          return std::pair{M(u + v), std::move(c)};
        }
      }
      break;
  }
  return std::nullopt;
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  if (!a.algebra().compatible(b.algebra()))
    throw Error(ErrorCode::MixedPresentation, "bracket of elements from different algebras");
  LieElement out(a.algebra());
  for (const auto& [ga, ca] : a.terms())
    for (const auto& [gb, cb] : b.terms())
      if (auto r = bracket_basis(ga, gb)) out.add_term(r->first, ca * cb * r->second);
  return out;
}

std::map<Rational, LieElement> grade_decompose(const LieElement& e) {
  std::map<Rational, LieElement> out;
  for (const auto& [g, c] : e.terms()) {
    auto it = out.try_emplace(g.index, e.algebra()).first;
    it->second.add_term(g, c);
  }
  return out;
}

LieElement jacobi_residual(const Algebra& alg, const Generator& a, const Generator& b, const Generator& c) {
  const LieElement ea = alg.element(a), eb = alg.element(b), ec = alg.element(c);
  LieElement r = bracket(bracket(ea, eb), ec);
  r += bracket(bracket(eb, ec), ea);
  r += bracket(bracket(ec, ea), eb);
  return r;
}

IdealMembership ideal_membership(const LieElement& e) {
  for (const auto& [g, c] : e.terms())
    if (g.kind == Kind::L) return IdealMembership::NotInI;
  return IdealMembership::InI;
}

}  // namespace gsv
