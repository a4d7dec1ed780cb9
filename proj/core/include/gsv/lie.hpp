#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "gsv/group.hpp"
#include "gsv/rational.hpp"

namespace gsv {

enum class Kind { L, M, Y };

/// Basis symbol L_u, M_u (u in G) or Y_x (x in alpha + G). Y symbols carry
/// their absolute weight x rather than the offset from alpha.
struct Generator {
  Kind kind = Kind::L;
  Rational index;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend std::strong_ordering operator<=>(const Generator&, const Generator&) = default;
};

inline Generator L(Rational u) { return {Kind::L, std::move(u)}; }
inline Generator M(Rational u) { return {Kind::M, std::move(u)}; }
inline Generator Y(Rational x) { return {Kind::Y, std::move(x)}; }

std::string to_string(const Generator& g);
char kind_letter(Kind k);

class LieElement;

/// Shared handle on the algebra gsv[G, alpha] of a presentation.
class Algebra {
 public:
  explicit Algebra(GroupPresentation gp) : gp_(std::make_shared<const GroupPresentation>(std::move(gp))) {}

  const GroupPresentation& group() const { return *gp_; }

  bool valid(const Generator& g) const;
  /// Throws IndexDomain when the index does not belong to the kind's domain.
  void validate(const Generator& g) const;

  LieElement element(const Generator& g, const Rational& coeff = Rational(1)) const;
  LieElement zero() const;

  /// Same G and G1, so elements may be combined (the order is irrelevant here).
  bool compatible(const Algebra& other) const {
    return gp_ == other.gp_ || gp_->same_algebra(*other.gp_);
  }

 private:
  std::shared_ptr<const GroupPresentation> gp_;
};

/// Finite linear combination of basis symbols with nonzero rational
/// coefficients, iterated in canonical (kind, index) order.
class LieElement {
 public:
  using Terms = std::map<Generator, Rational>;

  explicit LieElement(Algebra alg) : alg_(std::move(alg)) {}

  const Algebra& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Generator& g) const;

  /// Adds coeff * g; g is validated against the algebra.
  void add_term(const Generator& g, const Rational& coeff);

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& s);

  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& s, LieElement a) { return a *= s; }
  LieElement operator-() const { return Rational(-1) * *this; }

  friend bool operator==(const LieElement& a, const LieElement& b) { return a.terms_ == b.terms_; }

 private:
  void require_compatible(const LieElement& o) const;

  Algebra alg_;
  Terms terms_;
};

/// [a, b] of two basis symbols as a single scaled symbol, or nothing when
/// the bracket vanishes. Inputs are assumed valid.
std::optional<std::pair<Generator, Rational>> bracket_basis(const Generator& a, const Generator& b);

/// Bilinear bracket. Throws MixedPresentation for operands of different algebras.
LieElement bracket(const LieElement& a, const LieElement& b);

/// ad(L_0)-weight of a symbol: its index.
inline const Rational& weight(const Generator& g) { return g.index; }

/// Components of e by T-weight; their sum is e.
std::map<Rational, LieElement> grade_decompose(const LieElement& e);

/// [[a,b],c] + [[b,c],a] + [[c,a],b].
LieElement jacobi_residual(const Algebra& alg, const Generator& a, const Generator& b, const Generator& c);

enum class IdealMembership { InI, NotInI };

/// I = M + Y is the maximal ideal; e is in I iff it has no L-term.
IdealMembership ideal_membership(const LieElement& e);

}  // namespace gsv
