#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gsv/group.hpp"
#include "gsv/lie.hpp"

namespace gsv {

/// sigma_b^chi with b = s^2: L_u -> chi(u) L_u, M_u -> s^2 chi(u) M_u,
/// Y_x -> s chi(x) Y_x.
struct Diagonal {
  Character chi;
  Rational s;
};

/// phi_a for a in S(G, T): X_u -> a^{-1} X_{au} for every kind.
struct Scale {
  Rational a;
};

/// L_u -> L_u + lambda*u*M_u, M and Y fixed.
struct Cocycle {
  Rational lambda;
};

/// exp(ad x) for x in I = M + Y; (ad x)^3 = 0 so the series stops after the
/// quadratic term.
struct Inner {
  LieElement x;
};

using Primitive = std::variant<Diagonal, Scale, Cocycle, Inner>;

/// Composable chain of primitive automorphisms. The chain [p1, ..., pn]
/// denotes p1 o ... o pn, i.e. pn is applied first.
class Automorphism {
 public:
  static Automorphism identity(Algebra alg);
  static Automorphism diagonal(Algebra alg, const Rational& t, const Rational& s);
  static Automorphism scale(Algebra alg, const Rational& a);
  static Automorphism cocycle(Algebra alg, const Rational& lambda);
  /// Throws NotInIdeal when x has an L-term.
  static Automorphism inner(const LieElement& x);

  const Algebra& algebra() const { return alg_; }
  const std::vector<Primitive>& chain() const { return chain_; }
  bool is_identity() const { return chain_.empty(); }

  LieElement apply(const Generator& g) const;
  LieElement apply(const LieElement& e) const;

 private:
  friend Automorphism compose(const Automorphism&, const Automorphism&);
  friend Automorphism invert(const Automorphism&);

  Automorphism(Algebra alg, std::vector<Primitive> chain) : alg_(std::move(alg)), chain_(std::move(chain)) {}

  Algebra alg_;
  std::vector<Primitive> chain_;
};

inline LieElement apply_aut(const Automorphism& theta, const LieElement& e) { return theta.apply(e); }

LieElement apply_primitive(const Algebra& alg, const Primitive& p, const LieElement& e);

/// theta1 o theta2. Adjacent primitives of the same family are merged by
/// sigma_{b1}^{chi1} sigma_{b2}^{chi2} = sigma_{b1 b2}^{chi1 chi2}, phi_a phi_b = phi_{ab} and
/// phi_(a) phi_(b) = phi_(a+b); identities are dropped.
Automorphism compose(const Automorphism& theta1, const Automorphism& theta2);
Automorphism invert(const Automorphism& theta);

/// by o target o by^{-1} as a chain.
Automorphism conjugate(const Automorphism& by, const Automorphism& target);

/// Closed-form member of target's family equal to by o target o by^{-1},
/// for the pairs where that family is normalised by `by`: (Scale, Diagonal),
/// (Scale or Diagonal, Cocycle) and (anything, Inner). Empty otherwise.
std::optional<Primitive> conjugate_in_family(const Algebra& alg, const Primitive& by, const Primitive& target);

Automorphism exp_ad(const LieElement& x);

struct Residual {
  Generator x;
  Generator y;
  LieElement value;
};

using BasisMap = std::function<LieElement(const Generator&)>;

/// theta([x,y]) - [theta(x), theta(y)] for each pair; only nonzero ones are reported.
std::vector<Residual> hom_residual(const Automorphism& theta, std::span<const std::pair<Generator, Generator>> pairs);
/// Same for an arbitrary linear map given on basis symbols of `source`.
std::vector<Residual> hom_residual(const Algebra& source, const BasisMap& map,
                                   std::span<const std::pair<Generator, Generator>> pairs);

/// Checks (v-u) a_{u+v} = v a_v - u a_u and a_{-u} = -a_u for u, v in window.
/// Throws MissingEntry when the table lacks a needed index.
bool validate_cocycle(const std::map<Rational, Rational>& table, std::span<const Rational> window);

/// Coefficients read off an automorphism on a window of G:
///   theta(M_u) = b_u M_{au},  theta(Y_{alpha+u}) = c_u Y_{a(alpha+u)} + (M-terms),
///   theta(L_u) = l_u L_{au} + (M- and Y-terms).
struct ShapeReport {
  std::optional<Rational> a;
  std::map<Rational, Rational> b;
  std::map<Rational, Rational> c;
  std::map<Rational, Rational> l;
  bool ok = false;
  std::string detail;
};

ShapeReport automorphism_shape(const Automorphism& theta, std::span<const Rational> window);

/// Action equality on the listed basis symbols.
bool same_action(const Automorphism& lhs, const Automorphism& rhs, std::span<const Generator> window);

/// The explicit map L_u -> a^{-1} L'_{au}, M_u -> a^{-1} M'_{au}, Y_x -> a^{-1} Y'_{ax}.
class Isomorphism {
 public:
  Isomorphism(Algebra source, Algebra target, Rational a)
      : source_(std::move(source)), target_(std::move(target)), a_(std::move(a)) {}

  const Algebra& source() const { return source_; }
  const Algebra& target() const { return target_; }
  const Rational& scale() const { return a_; }

  LieElement apply(const Generator& g) const;
  LieElement apply(const LieElement& e) const;

 private:
  Algebra source_;
  Algebra target_;
  Rational a_;
};

std::optional<Isomorphism> build_isomorphism(const Algebra& source, const Algebra& target);

}  // namespace gsv
