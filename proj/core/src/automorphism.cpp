#include "gsv/automorphism.hpp"

#include <sstream>

#include "gsv/error.hpp"

namespace gsv {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

LieElement apply_to_generator(const Algebra& alg, const Primitive& p, const Generator& g) {
  const GroupPresentation& gp = alg.group();
  return std::visit(
      overloaded{
          [&](const Diagonal& d) {
            Rational f = d.chi.eval(g.index, gp);
            if (g.kind == Kind::M) f *= d.s * d.s;
            if (g.kind == Kind::Y) f *= d.s;
            return alg.element(g, f);
          },
          [&](const Scale& s) {
            return alg.element(Generator{g.kind, s.a * g.index}, s.a.inverse());
          },
          [&](const Cocycle& c) {
            LieElement out = alg.element(g);
            if (g.kind == Kind::L) out.add_term(M(g.index), c.lambda * g.index);
            return out;
          },
          [&](const Inner& in) {
            const LieElement e = alg.element(g);
            const LieElement once = bracket(in.x, e);
            LieElement out = e + once;
            out += Rational(1, 2) * bracket(in.x, once);
            return out;
          },
      },
      p);
}

bool is_identity(const Primitive& p) {
  return std::visit(overloaded{
                        [](const Diagonal& d) { return d.chi.t() == Rational(1) && d.s == Rational(1); },
                        [](const Scale& s) { return s.a == Rational(1); },
                        [](const Cocycle& c) { return c.lambda.is_zero(); },
                        [](const Inner& in) { return in.x.is_zero(); },
                    },
                    p);
}

// Merges q into p when both belong to the same closed family.
bool try_merge(const GroupPresentation& gp, Primitive& p, const Primitive& q) {
  if (auto* d1 = std::get_if<Diagonal>(&p)) {
    if (const auto* d2 = std::get_if<Diagonal>(&q)) {
      d1->chi = Character::make(d1->chi.t() * d2->chi.t(), gp);
      d1->s *= d2->s;
      return true;
    }
  } else if (auto* s1 = std::get_if<Scale>(&p)) {
    if (const auto* s2 = std::get_if<Scale>(&q)) {
      s1->a *= s2->a;
      return true;
    }
  } else if (auto* c1 = std::get_if<Cocycle>(&p)) {
    if (const auto* c2 = std::get_if<Cocycle>(&q)) {
      c1->lambda += c2->lambda;
      return true;
    }
  }
  return false;
}

std::vector<Primitive> normalize(const GroupPresentation& gp, const std::vector<Primitive>& chain) {
  std::vector<Primitive> out;
  for (const Primitive& p : chain) {
    if (is_identity(p)) continue;
    if (!out.empty() && try_merge(gp, out.back(), p)) {
      if (is_identity(out.back())) out.pop_back();
      continue;
    }
    out.push_back(p);
  }
  return out;
}

Primitive inverse_of(const GroupPresentation& gp, const Primitive& p) {
  return std::visit(overloaded{
                        [&](const Diagonal& d) -> Primitive {
                          return Diagonal{Character::make(d.chi.t().inverse(), gp), d.s.inverse()};
                        },
                        [](const Scale& s) -> Primitive { return Scale{s.a.inverse()}; },
                        [](const Cocycle& c) -> Primitive { return Cocycle{-c.lambda}; },
                        [](const Inner& in) -> Primitive { return Inner{-in.x}; },
                    },
                    p);
}

}  // namespace

LieElement apply_primitive(const Algebra& alg, const Primitive& p, const LieElement& e) {
  LieElement out(alg);
  for (const auto& [g, c] : e.terms()) out += c * apply_to_generator(alg, p, g);
  return out;
}

Automorphism Automorphism::identity(Algebra alg) { return Automorphism(std::move(alg), {}); }

Automorphism Automorphism::diagonal(Algebra alg, const Rational& t, const Rational& s) {
  if (s.is_zero()) throw Error(ErrorCode::DivisionByZero, "diagonal automorphism needs s != 0");
  Character chi = Character::make(t, alg.group());
  return Automorphism(std::move(alg), {Diagonal{std::move(chi), s}});
}

Automorphism Automorphism::scale(Algebra alg, const Rational& a) {
  if (!member_S(a, alg.group()))
    throw Error(ErrorCode::NotInScaleGroup, a.to_string() + " does not satisfy aG = G, aT = T");
  return Automorphism(std::move(alg), {Scale{a}});
}

Automorphism Automorphism::cocycle(Algebra alg, const Rational& lambda) {
  return Automorphism(std::move(alg), {Cocycle{lambda}});
}

Automorphism Automorphism::inner(const LieElement& x) {
  if (ideal_membership(x) != IdealMembership::InI)
    throw Error(ErrorCode::NotInIdeal, "exp(ad x) needs x in I = M + Y (ad x is not nilpotent otherwise)");
  return Automorphism(x.algebra(), {Inner{x}});
}

LieElement Automorphism::apply(const Generator& g) const { return apply(alg_.element(g)); }

LieElement Automorphism::apply(const LieElement& e) const {
  if (!alg_.compatible(e.algebra()))
    throw Error(ErrorCode::MixedPresentation, "automorphism applied to an element of another algebra");
  LieElement out = e;
  for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) out = apply_primitive(alg_, *it, out);
  return out;
}

Automorphism compose(const Automorphism& theta1, const Automorphism& theta2) {
  if (!theta1.alg_.compatible(theta2.alg_))
    throw Error(ErrorCode::MixedPresentation, "composition of automorphisms of different algebras");
  std::vector<Primitive> chain = theta1.chain_;
  chain.insert(chain.end(), theta2.chain_.begin(), theta2.chain_.end());
  return Automorphism(theta1.alg_, normalize(theta1.alg_.group(), chain));
}

Automorphism invert(const Automorphism& theta) {
  std::vector<Primitive> chain;
  for (auto it = theta.chain_.rbegin(); it != theta.chain_.rend(); ++it)
    chain.push_back(inverse_of(theta.alg_.group(), *it));
  return Automorphism(theta.alg_, std::move(chain));
}

Automorphism conjugate(const Automorphism& by, const Automorphism& target) {
  return compose(compose(by, target), invert(by));
}

std::optional<Primitive> conjugate_in_family(const Algebra& alg, const Primitive& by, const Primitive& target) {
  const GroupPresentation& gp = alg.group();
  if (const auto* in = std::get_if<Inner>(&target)) return Inner{apply_primitive(alg, by, in->x)};
  if (const auto* sc = std::get_if<Scale>(&by)) {
    if (const auto* d = std::get_if<Diagonal>(&target)) {
      // phi_a sigma phi_a^{-1} has character x -> chi(x / a)
      const Rational t = d->chi.eval(gp.generator() / (Rational(2) * sc->a), gp);
      return Diagonal{Character::make(t, gp), d->s};
    }
    if (const auto* c = std::get_if<Cocycle>(&target)) return Cocycle{c->lambda / sc->a};
    if (std::holds_alternative<Scale>(target)) return target;
  }
  if (const auto* d = std::get_if<Diagonal>(&by)) {
    if (const auto* c = std::get_if<Cocycle>(&target)) return Cocycle{d->s * d->s * c->lambda};
    if (std::holds_alternative<Diagonal>(target)) return target;
  }
  if (std::holds_alternative<Cocycle>(by) && std::holds_alternative<Cocycle>(target)) return target;
  return std::nullopt;
}

Automorphism exp_ad(const LieElement& x) {
  if (x.is_zero()) return Automorphism::identity(x.algebra());
  return Automorphism::inner(x);
}

std::vector<Residual> hom_residual(const Algebra& source, const BasisMap& map,
                                   std::span<const std::pair<Generator, Generator>> pairs) {
  std::vector<Residual> out;
  for (const auto& [x, y] : pairs) {
    const LieElement xy = bracket(source.element(x), source.element(y));
    const LieElement fx = map(x);
    LieElement lhs(fx.algebra());
    for (const auto& [g, c] : xy.terms()) lhs += c * map(g);
    LieElement r = lhs - bracket(fx, map(y));
    if (!r.is_zero()) out.push_back({x, y, std::move(r)});
  }
  return out;
}

std::vector<Residual> hom_residual(const Automorphism& theta, std::span<const std::pair<Generator, Generator>> pairs) {
  return hom_residual(theta.algebra(), [&](const Generator& g) { return theta.apply(g); }, pairs);
}

bool validate_cocycle(const std::map<Rational, Rational>& table, std::span<const Rational> window) {
  auto at = [&](const Rational& u) -> const Rational& {
    const auto it = table.find(u);
    if (it == table.end()) throw Error(ErrorCode::MissingEntry, "cocycle table has no entry for " + u.to_string());
    return it->second;
  };
  for (const Rational& u : window) {
    if (at(-u) != -at(u)) return false;
    for (const Rational& v : window)
      if ((v - u) * at(u + v) != v * at(v) - u * at(u)) return false;
  }
  return true;
}

ShapeReport automorphism_shape(const Automorphism& theta, std::span<const Rational> window) {
  const Algebra& alg = theta.algebra();
  const Rational alpha = alg.group().alpha();
  ShapeReport rep;
  auto fail = [&](std::string why) {
    rep.ok = false;
    rep.detail = std::move(why);
    return rep;
  };
  auto fix_scale = [&](const Rational& image_index, const Rational& index) {
    const Rational a = image_index / index;
    if (!rep.a) rep.a = a;
    return *rep.a == a;
  };

  for (const Rational& u : window) {
    const LieElement img = theta.apply(M(u));
    if (img.size() != 1 || img.terms().begin()->first.kind != Kind::M)
      return fail("image of M(" + u.to_string() + ") is not a single M-term");
    const auto& [g, c] = *img.terms().begin();
    if (!u.is_zero() && !fix_scale(g.index, u)) return fail("inconsistent scale at M(" + u.to_string() + ")");
    if (u.is_zero() && !g.index.is_zero()) return fail("M(0) not mapped into F M(0)");
    rep.b[u] = c;
  }
  for (const Rational& u : window) {
    const Rational x = alpha + u;
    const LieElement img = theta.apply(Y(x));
    std::optional<std::pair<Generator, Rational>> ypart;
    for (const auto& [g, c] : img.terms()) {
      if (g.kind == Kind::L) return fail("image of Y(" + x.to_string() + ") has an L-term");
      if (g.kind == Kind::Y) {
        if (ypart) return fail("image of Y(" + x.to_string() + ") has several Y-terms");
        ypart = std::pair{g, c};
      }
    }
    if (!ypart) return fail("image of Y(" + x.to_string() + ") has no Y-term");
    if (!fix_scale(ypart->first.index, x)) return fail("inconsistent scale at Y(" + x.to_string() + ")");
    rep.c[u] = ypart->second;
  }
  for (const Rational& u : window) {
    const LieElement img = theta.apply(L(u));
    std::optional<std::pair<Generator, Rational>> lpart;
    for (const auto& [g, c] : img.terms()) {
      if (g.kind != Kind::L) continue;
      if (lpart) return fail("image of L(" + u.to_string() + ") has several L-terms");
      lpart = std::pair{g, c};
    }
    if (!lpart) return fail("image of L(" + u.to_string() + ") has no L-term");
    if (!u.is_zero() && !fix_scale(lpart->first.index, u))
      return fail("inconsistent scale at L(" + u.to_string() + ")");
    if (u.is_zero() && !lpart->first.index.is_zero()) return fail("L(0) image has L-part off weight 0");
    rep.l[u] = lpart->second;
  }
  rep.ok = true;
  return rep;
}

bool same_action(const Automorphism& lhs, const Automorphism& rhs, std::span<const Generator> window) {
  for (const Generator& g : window)
    if (lhs.apply(g) != rhs.apply(g)) return false;
  return true;
}

LieElement Isomorphism::apply(const Generator& g) const {
  return target_.element(Generator{g.kind, a_ * g.index}, a_.inverse());
}

LieElement Isomorphism::apply(const LieElement& e) const {
  LieElement out = target_.zero();
  for (const auto& [g, c] : e.terms()) out += c * apply(g);
  return out;
}

std::optional<Isomorphism> build_isomorphism(const Algebra& source, const Algebra& target) {
  const auto a = iso_scale(source.group(), target.group());
  if (!a) return std::nullopt;
  return Isomorphism(source, target, *a);
}

}  // namespace gsv
