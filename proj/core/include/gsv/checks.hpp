#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gsv/automorphism.hpp"
#include "gsv/lie.hpp"
#include "gsv/verma.hpp"

namespace gsv {

struct CheckOptions {
  long window = 5;           // |index| bound for exhaustive sweeps
  std::size_t samples = 200;  // random cases per sampled property
  std::uint64_t seed = 0;
  int max_denominator_exponent = 2;  // per inverted prime, dense instances
};

struct CheckResult {
  explicit CheckResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> violations;  // first few, for reports

  bool passed() const { return failures == 0; }
  void record(bool ok, const std::string& what);
  void merge(const CheckResult& other);
};

/// Deterministic sampler over T. Uses raw 64-bit draws so streams are the same
/// on every standard library.
class Sampler {
 public:
  Sampler(const GroupPresentation& gp, std::uint64_t seed, int max_exp = 2) : gp_(gp), rng_(seed), max_exp_(max_exp) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return below(2) == 0; }

  /// A denominator made of inverted primes with exponents up to max_exp.
  long denominator();
  /// Element of G with |x| <= bound * g.
  Rational in_G(long bound);
  /// Element of G_1 with |x| <= bound * g.
  Rational in_G1(long bound);
  /// Positive (in the chosen order) element of G with magnitude <= bound * g.
  Rational positive_G(long bound);
  /// Positive element of G_1 with magnitude <= bound * g.
  Rational positive_G1(long bound);
  Generator generator(long bound);
  Generator generator_of(Kind kind, long bound);
  Generator ideal_generator(long bound);
  Rational nonzero_rational(long bound);

 private:
  const GroupPresentation& gp_;
  std::mt19937_64 rng_;
  int max_exp_;
};

/// All generators with |index| <= window on the (g/2)-lattice.
std::vector<Generator> window_generators(const GroupPresentation& gp, long window);
/// G-indices u with |u| <= window on the g-lattice.
std::vector<Rational> window_indices(const GroupPresentation& gp, long window);

CheckResult check_jacobi(const Algebra& alg, const CheckOptions& opt);
/// Ideal, center, grading and nilpotency properties of I = M + Y.
CheckResult check_ideal(const Algebra& alg, const CheckOptions& opt);
/// M_j on L-strings (length drop) and L_j on M-strings (exact sum and vanishing).
CheckResult check_string_actions(const Algebra& alg, const CheckOptions& opt);
/// Y-strings are killed by Y above the top part (and at it when c = 0).
CheckResult check_y_vanishing(const Algebra& alg, const CheckOptions& opt);
/// M_j lowers length.
CheckResult check_filtration(const Algebra& alg, const CheckOptions& opt);
/// Hom-residuals of all families and random chains, composition laws,
/// conjugation closure and the shape of chains.
CheckResult check_relations(const Algebra& alg, const CheckOptions& opt);
/// Cocycle identities on an explicit table.
CheckResult check_cocycle_table(const std::map<Rational, Rational>& table, std::span<const Rational> window);

/// A random chain of the four families of length <= max_len.
Automorphism random_chain(const Algebra& alg, Sampler& s, std::size_t max_len);
Automorphism random_primitive(const Algebra& alg, Sampler& s, int family);

}  // namespace gsv
