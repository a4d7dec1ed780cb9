#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gsv/group.hpp"
#include "gsv/lie.hpp"
#include "gsv/rational.hpp"

namespace gsv {

/// (c, h): M_0 acts on the highest weight vector by c, L_0 by h.
struct HighestWeight {
  Rational c{1};
  Rational h{0};
};

/// Normal-ordered basis word L_{-i1}..L_{-ir} M_{-j1}..M_{-js} Y_{alpha-k1}..Y_{alpha-kt} v_h
/// with 0 < i1 <= .. <= ir, 0 < j1 <= .. <= js, alpha < k1 <= .. <= kt in the
/// chosen order. Stored as its factor list; the depth
/// sum(i) + sum(j) + sum(k - alpha) is cached.
class PBWMonomial {
 public:
  PBWMonomial() = default;

  const std::vector<Generator>& factors() const { return factors_; }
  const Rational& depth() const { return depth_; }
  bool is_highest() const { return factors_.empty(); }
  /// Number of L-factors.
  std::size_t length() const;

  std::vector<Rational> l_parts() const;
  std::vector<Rational> m_parts() const;
  /// The k values of the Y-factors Y_{alpha-k}.
  std::vector<Rational> y_parts(const Rational& alpha) const;

  friend bool operator==(const PBWMonomial& a, const PBWMonomial& b) { return a.factors_ == b.factors_; }
  friend bool operator<(const PBWMonomial& a, const PBWMonomial& b) { return a.factors_ < b.factors_; }

 private:
  friend class VermaModule;
  PBWMonomial(std::vector<Generator> factors, Rational depth)
      : factors_(std::move(factors)), depth_(std::move(depth)) {}

  std::vector<Generator> factors_;
  Rational depth_;
};

/// Canonical order: by depth, then lexicographically on the L-, M- and
/// Y-parts, all measured in the chosen order of T.
struct MonomialLess {
  OrderDirection direction = OrderDirection::Natural;
  bool operator()(const PBWMonomial& a, const PBWMonomial& b) const;
};

class VermaVector {
 public:
  using Terms = std::map<PBWMonomial, Rational, MonomialLess>;

  explicit VermaVector(OrderDirection dir = OrderDirection::Natural) : terms_(MonomialLess{dir}) {}

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const PBWMonomial& m) const;

  void add_term(const PBWMonomial& m, const Rational& coeff);
  VermaVector& operator+=(const VermaVector& o);
  VermaVector& operator-=(const VermaVector& o);
  VermaVector& operator*=(const Rational& s);

  friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
  friend VermaVector operator-(VermaVector a, const VermaVector& b) { return a -= b; }
  friend VermaVector operator*(const Rational& s, VermaVector a) { return a *= s; }

  friend bool operator==(const VermaVector& a, const VermaVector& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Finite window used when the order is dense: depths are capped at
/// max_depth and every index must lie on (g/2) * (1/N) Z with
/// N = prod p^cap_p.
struct Truncation {
  Rational max_depth;
  std::map<long, int> lattice_caps;
};

/// The evenly spaced sub-lattice of T a computation runs on; `unit` is its
/// order-positive generator.
struct Lattice {
  Rational unit;
  std::optional<Rational> max_depth;

  bool contains(const Rational& x) const { return (x / unit).is_integer(); }
  /// depth / unit when it is a nonnegative integer.
  std::optional<long> units(const Rational& depth) const;
};

/// Throws DenseWithoutTruncation, InvalidTruncation.
Lattice make_lattice(const GroupPresentation& gp, const std::optional<Truncation>& trunc);

struct Reduction {
  std::vector<Generator> word;  // applied right to left
  Rational scalar;
};

struct SubmoduleDims {
  std::size_t dim_N = 0;
  std::size_t dim_V = 0;
  std::size_t codim = 0;
};

/// The Verma module V(c, h). Operations are exact; the module memoises the
/// action of generators on basis words (the cache is internally locked).
class VermaModule {
 public:
  VermaModule(Algebra alg, HighestWeight hw);

  const Algebra& algebra() const { return alg_; }
  const GroupPresentation& group() const { return alg_.group(); }
  const HighestWeight& highest_weight() const { return hw_; }

  /// Basis word from its parts (each list is sorted into normal order).
  /// Throws IndexDomain for parts outside G, non-positive i/j, or k <= alpha.
  PBWMonomial monomial(std::vector<Rational> l, std::vector<Rational> m, std::vector<Rational> k) const;

  VermaVector zero() const { return VermaVector(group().direction()); }
  VermaVector highest() const;
  VermaVector vector(const PBWMonomial& m, const Rational& coeff = Rational(1)) const;

  Rational monomial_weight(const PBWMonomial& m) const { return hw_.h - m.depth(); }

  VermaVector act(const Generator& g, const VermaVector& v) const;
  /// word[0] (word[1] (... word[n-1] v)).
  VermaVector act_word(std::span<const Generator> word, const VermaVector& v) const;

  /// Depth shared by all terms, or nothing for zero / non-homogeneous vectors.
  std::optional<Rational> depth_of(const VermaVector& v) const;

  std::vector<PBWMonomial> weight_basis(const Rational& depth, const std::optional<Truncation>& trunc = {}) const;

  /// Positive generators of weight at most `depth`; the others map the
  /// depth's weight space to zero.
  std::vector<Generator> raising_operators(const Rational& depth, const std::optional<Truncation>& trunc = {}) const;

  /// Basis of the joint kernel of all raising operators on the weight space.
  std::vector<VermaVector> singular_vectors(const Rational& depth, const std::optional<Truncation>& trunc = {}) const;

  /// Word W and kappa != 0 with W.v = kappa v_h. Requires c != 0 and v
  /// nonzero and homogeneous.
  Reduction reduce_to_highest(const VermaVector& v) const;

  /// Dimensions inside the weight space at `depth` of the submodule
  /// generated by `generators`.
  SubmoduleDims submodule_weight_dim(std::span<const VermaVector> generators, const Rational& depth,
                                     const std::optional<Truncation>& trunc = {}) const;

  /// {M_{-u} v_h, Y_{alpha-k} v_h} of depth at most `depth`, plus L_{-u} v_h when h = 0:
  /// the generators of the maximal submodule N(0, h).
  std::vector<VermaVector> maximal_submodule_generators(const Rational& depth,
                                                        const std::optional<Truncation>& trunc = {}) const;

  /// Coordinates of v on `basis`; throws InvalidTruncation if v has a term outside it.
  std::vector<Rational> coordinates(const VermaVector& v, std::span<const PBWMonomial> basis) const;

  std::size_t cache_size() const;

 private:
  VermaVector act_monomial(const Generator& g, const PBWMonomial& m) const;
  PBWMonomial make_monomial(std::vector<Generator> factors) const;
  bool normal_before(const Generator& a, const Generator& b) const;
  Rational factor_depth(const Generator& g) const;

  Algebra alg_;
  HighestWeight hw_;
  Rational alpha_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<Generator, PBWMonomial>, VermaVector> cache_;
};

/// Number of L-factors in the longest term. Throws ZeroVector.
std::size_t length_of(const VermaVector& v);

/// (-1)^r (i + i1)(i - i1 + i2) ... (i - i1 - ... - i_{r-1} + i_r) h with i = sum of parts:
/// the coefficient of v_h in L_i L_{-i1} ... L_{-ir} v_h.
Rational l_string_scalar(std::span<const Rational> parts, const Rational& h);

/// Number of weakly increasing sequences of positive G-elements (on the
/// lattice) summing to depth.
std::uint64_t count_L_partitions(const Rational& depth, const GroupPresentation& gp,
                                 const std::optional<Truncation>& trunc = {});

}  // namespace gsv
