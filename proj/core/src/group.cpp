#include "gsv/group.hpp"

#include <algorithm>
#include <sstream>

#include "gsv/error.hpp"

namespace gsv {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Removes every factor of the primes in `primes` from n.
BigInt strip(BigInt n, const std::vector<long>& primes) {
  for (long p : primes) {
    const BigInt bp(p);
    while (n % bp == 0) n /= bp;
  }
  return n;
}

}  // namespace

GroupPresentation make_group(const Rational& g, std::vector<long> primes, long m, OrderDirection dir) {
  if (g.sign() <= 0)
    throw Error(ErrorCode::NonPositiveGenerator, "generator g must be positive, got " + g.to_string());
  std::sort(primes.begin(), primes.end());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (primes[i] == 2)
      throw Error(ErrorCode::EvenPrimeInverted, "2 cannot be inverted: 2*alpha in G would force alpha in G");
    if (!is_prime(primes[i]))
      throw Error(ErrorCode::InvalidPrimeSet, std::to_string(primes[i]) + " is not a prime");
    if (i > 0 && primes[i] == primes[i - 1])
      throw Error(ErrorCode::InvalidPrimeSet, "prime " + std::to_string(primes[i]) + " listed twice");
  }
  if (m % 2 == 0) throw Error(ErrorCode::EvenM, "m must be odd, got " + std::to_string(m));

  GroupPresentation gp;
  gp.g_ = g;
  gp.primes_ = std::move(primes);
  gp.m_ = m;
  gp.direction_ = dir;
  return gp;
}

GroupPresentation standard_group() { return make_group(Rational(1), {}, 1); }

bool GroupPresentation::in_localization(const Rational& q) const {
  return strip(q.denominator(), primes_) == 1;
}

ElementClass GroupPresentation::classify(const Rational& x) const {
  if (in_localization(x / g_)) return ElementClass::InG;
  if (in_localization((x - alpha()) / g_)) return ElementClass::InG1;
  return ElementClass::Outside;
}

std::strong_ordering GroupPresentation::compare(const Rational& x, const Rational& y) const {
  return direction_ == OrderDirection::Natural ? x <=> y : y <=> x;
}

std::optional<Rational> GroupPresentation::positive_element_below(const Rational& eps) const {
  const Rational bound = oriented(eps);
  if (bound.sign() <= 0) return std::nullopt;
  Rational y = g_ / Rational(2);
  if (primes_.empty()) {
    if (y < bound) return oriented(y);
    return std::nullopt;
  }
  const Rational p(primes_.front());
  while (!(y < bound)) y /= p;
  return oriented(y);
}

bool GroupPresentation::same_algebra(const GroupPresentation& other) const {
  if (primes_ != other.primes_) return false;
  const Rational ratio = other.g_ / g_;
  return in_localization(ratio) && in_localization(ratio.inverse());
}

std::string GroupPresentation::describe() const {
  std::ostringstream os;
  os << "G = " << g_ << "*Z";
  if (!primes_.empty()) {
    os << "[";
    for (std::size_t i = 0; i < primes_.size(); ++i) os << (i ? "," : "") << "1/" << primes_[i];
    os << "]";
  }
  os << ", alpha = " << alpha() << ", order " << to_string(direction_);
  return os.str();
}

Character Character::make(const Rational& t, const GroupPresentation& gp) {
  if (t.is_zero()) throw Error(ErrorCode::DivisionByZero, "character value t must be nonzero");
  if (!gp.primes().empty() && t.abs() != Rational(1))
    throw Error(ErrorCode::UnrepresentableRoot,
                "with inverted primes only t = 1 or t = -1 define characters into Q, got t = " + t.to_string());
  return Character(t);
}

Rational Character::eval(const Rational& x, const GroupPresentation& gp) const {
  if (!gp.in_T(x)) throw Error(ErrorCode::IndexOutsideT, x.to_string() + " is not in T");
  // x = (g/2) * e with e in Z[1/P]; chi(x) = t^e.
  const Rational e = Rational(2) * x / gp.generator();
  if (e.is_integer()) return t_.pow(e.numerator().get_si());
  if (t_.abs() != Rational(1))
    throw Error(ErrorCode::UnrepresentableRoot, "t^(" + e.to_string() + ") is not rational");
  if (t_ == Rational(1)) return Rational(1);
  // every p in P is odd, so (-1)^(k/p^j) = (-1)^k
  return e.numerator() % 2 == 0 ? Rational(1) : Rational(-1);
}

std::optional<Rational> iso_scale(const GroupPresentation& gp, const GroupPresentation& other) {
  if (gp.primes() != other.primes()) return std::nullopt;
  return other.generator() / gp.generator();
}

bool member_S(const Rational& a, const GroupPresentation& gp) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroScale, "scale a must be nonzero");
  return gp.in_localization(a) && gp.in_localization(a.inverse());
}

std::string to_string(OrderDirection dir) { return dir == OrderDirection::Natural ? "natural" : "reversed"; }

std::string to_string(ElementClass cls) {
  switch (cls) {
    case ElementClass::InG: return "InG";
    case ElementClass::InG1: return "InG1";
    case ElementClass::Outside: return "Outside";
  }
  return "Outside";
}

std::string to_string(Density d) { return d == Density::Dense ? "Dense" : "Discrete"; }

}  // namespace gsv
