#pragma once

// Slow reference implementations written straight from the defining
// formulas. They share nothing with the library except Rational and the
// group presentation, so agreement with the engine is a real cross-check.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gsv/group.hpp"
#include "gsv/rational.hpp"

namespace oracle {

using gsv::Rational;

struct Sym {
  char kind;  // 'L', 'M', 'Y'
  Rational idx;
  friend bool operator==(const Sym&, const Sym&) = default;
  friend auto operator<=>(const Sym&, const Sym&) = default;
};

using Word = std::vector<Sym>;
using Poly = std::map<Word, Rational>;

/// Bracket of two basis symbols as a list of (symbol, coefficient).
std::vector<std::pair<Sym, Rational>> bracket(const Sym& a, const Sym& b);

/// word . v_h in V(c, h), reduced by swapping adjacent letters until every
/// word is a sorted product of lowering letters. `natural` selects the order.
Poly act(const Word& word, const Rational& c, const Rational& h, bool natural = true);

/// Number of multisets of lowering letters with the given depth, found by
/// listing every candidate index on the lattice step and classifying it.
std::uint64_t weight_space_dim(const gsv::GroupPresentation& gp, const Rational& step, const Rational& depth);

/// Coefficient of q^n in prod_{k >= 1} 1 / (1 - q^k).
std::uint64_t partitions(long n);

}  // namespace oracle
