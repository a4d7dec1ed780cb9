#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsv/rational.hpp"

namespace gsv {

enum class OrderDirection { Natural, Reversed };
enum class ElementClass { InG, InG1, Outside };
enum class Density { Dense, Discrete };

/// Rank-one subgroup G = g * Z[1/p : p in P] of Q together with
/// alpha = m*g/2 (m odd), so that alpha is not in G while 2*alpha is.
/// T = G u (alpha + G) = (g/2) * Z[1/P] carries a total order compatible
/// with addition: the natural order of Q or its reverse.
class GroupPresentation {
 public:
  const Rational& generator() const { return g_; }
  const std::vector<long>& primes() const { return primes_; }
  long m() const { return m_; }
  OrderDirection direction() const { return direction_; }
  Rational alpha() const { return Rational(m_) * g_ / Rational(2); }

  /// q in Z[1/P]: the reduced denominator has no prime factor outside P.
  bool in_localization(const Rational& q) const;
  ElementClass classify(const Rational& x) const;
  bool in_T(const Rational& x) const { return classify(x) != ElementClass::Outside; }

  std::strong_ordering compare(const Rational& x, const Rational& y) const;
  bool positive(const Rational& x) const { return compare(x, Rational(0)) > 0; }
  bool negative(const Rational& x) const { return compare(x, Rational(0)) < 0; }
  /// x mapped so that the chosen order becomes the natural order of Q.
  Rational oriented(const Rational& x) const { return direction_ == OrderDirection::Natural ? x : -x; }
  /// The order-positive generator g/2 of T (up to units of Z[1/P]).
  Rational half_step() const { return oriented(g_ / Rational(2)); }

  Density density() const { return primes_.empty() ? Density::Discrete : Density::Dense; }

  /// Some y in T with 0 < y < eps in the chosen order, when one exists.
  std::optional<Rational> positive_element_below(const Rational& eps) const;

  /// G and alpha + G coincide with those of `other` (the order is ignored).
  bool same_algebra(const GroupPresentation& other) const;

  std::string describe() const;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;

 private:
  friend GroupPresentation make_group(const Rational&, std::vector<long>, long, OrderDirection);
  GroupPresentation() = default;

  Rational g_;
  std::vector<long> primes_;
  long m_ = 1;
  OrderDirection direction_ = OrderDirection::Natural;
};

/// Validates and builds a presentation. Errors: NonPositiveGenerator,
/// EvenPrimeInverted, InvalidPrimeSet (non-prime or repeated entry), EvenM.
GroupPresentation make_group(const Rational& g, std::vector<long> primes, long m,
                             OrderDirection dir = OrderDirection::Natural);

/// G = Z, alpha = 1/2: the Schroedinger-Virasoro algebra.
GroupPresentation standard_group();

inline ElementClass classify(const Rational& x, const GroupPresentation& gp) { return gp.classify(x); }
inline std::strong_ordering order_cmp(const Rational& x, const Rational& y, const GroupPresentation& gp) {
  return gp.compare(x, y);
}
inline Density order_density(const GroupPresentation& gp) { return gp.density(); }

/// A homomorphism T -> Q*, determined by its value t at g/2. With inverted
/// primes only t = +1 or -1 has all the roots needed to stay inside Q.
class Character {
 public:
  static Character make(const Rational& t, const GroupPresentation& gp);
  static Character trivial() { return Character(Rational(1)); }

  const Rational& t() const { return t_; }
  Rational eval(const Rational& x, const GroupPresentation& gp) const;

  friend bool operator==(const Character&, const Character&) = default;

 private:
  explicit Character(Rational t) : t_(std::move(t)) {}
  Rational t_;
};

inline Rational char_eval(const Character& chi, const Rational& x, const GroupPresentation& gp) {
  return chi.eval(x, gp);
}

/// The scale a with aG = G' and aT = T' (canonically g'/g), if one exists.
std::optional<Rational> iso_scale(const GroupPresentation& gp, const GroupPresentation& other);

/// a in S(G, T) = {a : aG = G, aT = T}; for rank-one G these are the signed
/// units of Z[1/P]. Throws ZeroScale for a = 0.
bool member_S(const Rational& a, const GroupPresentation& gp);

std::string to_string(OrderDirection dir);
std::string to_string(ElementClass cls);
std::string to_string(Density d);

}  // namespace gsv
