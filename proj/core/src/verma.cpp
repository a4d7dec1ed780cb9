#include "gsv/verma.hpp"

#include <algorithm>
#include <functional>

#include "gsv/error.hpp"
#include "gsv/linalg.hpp"

namespace gsv {

// ---------------------------------------------------------------------------
// PBWMonomial / VermaVector

std::size_t PBWMonomial::length() const {
  return static_cast<std::size_t>(
      std::count_if(factors_.begin(), factors_.end(), [](const Generator& g) { return g.kind == Kind::L; }));
}

std::vector<Rational> PBWMonomial::l_parts() const {
  std::vector<Rational> out;
  for (const Generator& g : factors_)
    if (g.kind == Kind::L) out.push_back(-g.index);
  return out;
}

std::vector<Rational> PBWMonomial::m_parts() const {
  std::vector<Rational> out;
  for (const Generator& g : factors_)
    if (g.kind == Kind::M) out.push_back(-g.index);
  return out;
}

std::vector<Rational> PBWMonomial::y_parts(const Rational& alpha) const {
  std::vector<Rational> out;
  for (const Generator& g : factors_)
    if (g.kind == Kind::Y) out.push_back(alpha - g.index);
  return out;
}

bool MonomialLess::operator()(const PBWMonomial& a, const PBWMonomial& b) const {
  const bool natural = direction == OrderDirection::Natural;
  auto less = [natural](const Rational& x, const Rational& y) { return natural ? x < y : y < x; };
  if (a.depth() != b.depth()) return less(a.depth(), b.depth());
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  for (Kind kind : {Kind::L, Kind::M, Kind::Y}) {
    auto ia = std::find_if(fa.begin(), fa.end(), [kind](const Generator& g) { return g.kind == kind; });
    auto ib = std::find_if(fb.begin(), fb.end(), [kind](const Generator& g) { return g.kind == kind; });
    for (;; ++ia, ++ib) {
      const bool ea = ia == fa.end() || ia->kind != kind;
      const bool eb = ib == fb.end() || ib->kind != kind;
      if (ea || eb) {
        if (ea != eb) return ea;
        break;
      }
      // parts are the negated indices
      if (ia->index != ib->index) return less(-ia->index, -ib->index);
    }
  }
  return false;
}

Rational VermaVector::coefficient(const PBWMonomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void VermaVector::add_term(const PBWMonomial& m, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VermaVector& VermaVector::operator+=(const VermaVector& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

VermaVector& VermaVector::operator-=(const VermaVector& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

VermaVector& VermaVector::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// Lattice

std::optional<long> Lattice::units(const Rational& depth) const {
  const Rational q = depth / unit;
  if (!q.is_integer() || q.sign() < 0 || !q.numerator().fits_slong_p()) return std::nullopt;
  return q.numerator().get_si();
}

Lattice make_lattice(const GroupPresentation& gp, const std::optional<Truncation>& trunc) {
  Lattice lat;
  BigInt n = 1;
  if (trunc) {
    if (!gp.positive(trunc->max_depth))
      throw Error(ErrorCode::InvalidTruncation, "truncation depth must be positive in the chosen order");
    for (const auto& [p, cap] : trunc->lattice_caps) {
      if (std::find(gp.primes().begin(), gp.primes().end(), p) == gp.primes().end())
        throw Error(ErrorCode::InvalidTruncation, "lattice cap for " + std::to_string(p) + ", which is not inverted");
      if (cap < 0) throw Error(ErrorCode::InvalidTruncation, "negative lattice cap for " + std::to_string(p));
      BigInt pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(cap));
      n *= pk;
    }
    lat.max_depth = trunc->max_depth;
  } else if (gp.density() == Density::Dense) {
    throw Error(ErrorCode::DenseWithoutTruncation,
                "weight spaces are infinite-dimensional for a dense order; supply a truncation");
  }
  lat.unit = gp.half_step() / Rational(n);
  return lat;
}

namespace {

// Weakly increasing sequences of positive integers of the given parity
// (even: 2,4,..; odd: 1,3,..) summing to `total`.
void parity_partitions(long total, bool even, long min_part, std::vector<long>& cur,
                       std::vector<std::vector<long>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  long start = std::max(min_part, even ? 2L : 1L);
  if ((start % 2 == 0) != even) ++start;
  for (long p = start; p <= total; p += 2) {
    cur.push_back(p);
    parity_partitions(total - p, even, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<long>> parity_partitions(long total, bool even) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  parity_partitions(total, even, 0, cur, out);
  return out;
}

void check_depth(const GroupPresentation& gp, const Lattice& lat, const Rational& depth) {
  if (lat.max_depth && gp.compare(depth, *lat.max_depth) > 0)
    throw Error(ErrorCode::DepthBeyondTruncation,
                "depth " + depth.to_string() + " exceeds the truncation depth " + lat.max_depth->to_string());
}

}  // namespace

// ---------------------------------------------------------------------------
// VermaModule

VermaModule::VermaModule(Algebra alg, HighestWeight hw)
    : alg_(std::move(alg)), hw_(std::move(hw)), alpha_(alg_.group().alpha()) {}

bool VermaModule::normal_before(const Generator& a, const Generator& b) const {
  if (a.kind != b.kind) return a.kind < b.kind;
  return group().compare(a.index, b.index) > 0;
}

Rational VermaModule::factor_depth(const Generator& g) const { return -g.index; }

PBWMonomial VermaModule::make_monomial(std::vector<Generator> factors) const {
  Rational depth(0);
  for (const Generator& g : factors) depth += factor_depth(g);
  return PBWMonomial(std::move(factors), std::move(depth));
}

PBWMonomial VermaModule::monomial(std::vector<Rational> l, std::vector<Rational> m, std::vector<Rational> k) const {
  const GroupPresentation& gp = group();
  auto by_order = [&](const Rational& a, const Rational& b) { return gp.compare(a, b) < 0; };
  std::sort(l.begin(), l.end(), by_order);
  std::sort(m.begin(), m.end(), by_order);
  std::sort(k.begin(), k.end(), by_order);
  std::vector<Generator> factors;
  for (const Rational& i : l) {
    if (!gp.positive(i)) throw Error(ErrorCode::IndexDomain, "L-part " + i.to_string() + " is not positive");
    factors.push_back(L(-i));
  }
  for (const Rational& j : m) {
    if (!gp.positive(j)) throw Error(ErrorCode::IndexDomain, "M-part " + j.to_string() + " is not positive");
    factors.push_back(M(-j));
  }
  for (const Rational& kk : k) {
    if (gp.compare(kk, alpha_) <= 0)
      throw Error(ErrorCode::IndexDomain, "Y-part k = " + kk.to_string() + " must exceed alpha");
    factors.push_back(Y(alpha_ - kk));
  }
  for (const Generator& g : factors) alg_.validate(g);
  return make_monomial(std::move(factors));
}

VermaVector VermaModule::highest() const { return vector(PBWMonomial{}); }

VermaVector VermaModule::vector(const PBWMonomial& m, const Rational& coeff) const {
  VermaVector v = zero();
  v.add_term(m, coeff);
  return v;
}

VermaVector VermaModule::act_monomial(const Generator& g, const PBWMonomial& m) const {
  const GroupPresentation& gp = group();
  const auto& f = m.factors();

  if (g.index.is_zero()) {
    // Only L_0 and M_0 have weight 0; both act diagonally on basis words.
    return vector(m, g.kind == Kind::L ? monomial_weight(m) : hw_.c);
  }
  const bool lowering = gp.negative(g.index);
  if (f.empty()) {
    if (!lowering) return zero();
    return vector(make_monomial({g}));
  }
  if (lowering && !normal_before(f.front(), g)) {
    std::vector<Generator> factors;
    factors.reserve(f.size() + 1);
    factors.push_back(g);
    factors.insert(factors.end(), f.begin(), f.end());
    return vector(make_monomial(std::move(factors)));
  }

  auto key = std::pair{g, m};
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }

  // g f0 rest = f0 (g rest) + [g, f0] rest
  const Generator& f0 = f.front();
  const PBWMonomial rest = make_monomial(std::vector<Generator>(f.begin() + 1, f.end()));
  VermaVector out = zero();
  const VermaVector inner = act_monomial(g, rest);
  for (const auto& [mono, c] : inner.terms()) {
    VermaVector moved = act_monomial(f0, mono);
    moved *= c;
    out += moved;
  }
  if (auto br = bracket_basis(g, f0)) {
    VermaVector extra = act_monomial(br->first, rest);
    extra *= br->second;
    out += extra;
  }

  std::lock_guard lock(cache_mutex_);
  cache_.emplace(std::move(key), out);
  return out;
}

VermaVector VermaModule::act(const Generator& g, const VermaVector& v) const {
  alg_.validate(g);
  VermaVector out = zero();
  for (const auto& [m, c] : v.terms()) {
    VermaVector part = act_monomial(g, m);
    part *= c;
    out += part;
  }
  return out;
}

VermaVector VermaModule::act_word(std::span<const Generator> word, const VermaVector& v) const {
  VermaVector out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = act(*it, out);
  return out;
}

std::optional<Rational> VermaModule::depth_of(const VermaVector& v) const {
  if (v.is_zero()) return std::nullopt;
  const Rational& d = v.terms().begin()->first.depth();
  for (const auto& [m, c] : v.terms())
    if (m.depth() != d) return std::nullopt;
  return d;
}

std::vector<PBWMonomial> VermaModule::weight_basis(const Rational& depth, const std::optional<Truncation>& trunc) const {
  const Lattice lat = make_lattice(group(), trunc);
  check_depth(group(), lat, depth);
  const auto n = lat.units(depth);
  if (!n) return {};

  std::vector<PBWMonomial> out;
  for (long a = 0; a <= *n; a += 2) {
    const auto lparts = parity_partitions(a, true);
    for (long b = 0; a + b <= *n; b += 2) {
      const auto mparts = parity_partitions(b, true);
      const auto yparts = parity_partitions(*n - a - b, false);
      for (const auto& lp : lparts)
        for (const auto& mp : mparts)
          for (const auto& yp : yparts) {
            std::vector<Generator> factors;
            for (long e : lp) factors.push_back(L(-Rational(e) * lat.unit));
            for (long e : mp) factors.push_back(M(-Rational(e) * lat.unit));
            for (long e : yp) factors.push_back(Y(-Rational(e) * lat.unit));
            out.push_back(make_monomial(std::move(factors)));
          }
    }
  }
  std::sort(out.begin(), out.end(), MonomialLess{group().direction()});
  return out;
}

std::vector<Generator> VermaModule::raising_operators(const Rational& depth, const std::optional<Truncation>& trunc) const {
  const Lattice lat = make_lattice(group(), trunc);
  const auto n = lat.units(depth);
  std::vector<Generator> out;
  if (!n) return out;
  for (long e = 1; e <= *n; ++e) {
    const Rational x = Rational(e) * lat.unit;
    if (e % 2 == 0) {
      out.push_back(L(x));
      out.push_back(M(x));
    } else {
      out.push_back(Y(x));
    }
  }
  return out;
}

std::vector<Rational> VermaModule::coordinates(const VermaVector& v, std::span<const PBWMonomial> basis) const {
  std::map<PBWMonomial, std::size_t, MonomialLess> index(MonomialLess{group().direction()});
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  std::vector<Rational> out(basis.size(), Rational(0));
  for (const auto& [m, c] : v.terms()) {
    const auto it = index.find(m);
    if (it == index.end())
      throw Error(ErrorCode::InvalidTruncation, "vector has a term outside the truncated weight space");
    out[it->second] = c;
  }
  return out;
}

std::vector<VermaVector> VermaModule::singular_vectors(const Rational& depth, const std::optional<Truncation>& trunc) const {
  const std::vector<PBWMonomial> basis = weight_basis(depth, trunc);
  if (basis.empty()) return {};
  const std::vector<Generator> ops = raising_operators(depth, trunc);

  std::vector<linalg::Row> rows;
  for (const Generator& op : ops) {
    std::map<PBWMonomial, linalg::Row, MonomialLess> block(MonomialLess{group().direction()});
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const VermaVector image = act_monomial(op, basis[col]);
      for (const auto& [m, c] : image.terms()) {
        auto it = block.try_emplace(m, basis.size(), Rational(0)).first;
        it->second[col] = c;
      }
    }
    for (auto& [m, row] : block) rows.push_back(std::move(row));
  }

  std::vector<VermaVector> out;
  for (const linalg::Row& x : linalg::nullspace(rows, basis.size())) {
    VermaVector v = zero();
    for (std::size_t i = 0; i < basis.size(); ++i) v.add_term(basis[i], x[i]);
    out.push_back(std::move(v));
  }
  return out;
}

Reduction VermaModule::reduce_to_highest(const VermaVector& v) const {
  if (v.is_zero()) throw Error(ErrorCode::ZeroVector, "cannot reduce the zero vector");
  if (hw_.c.is_zero())
    throw Error(ErrorCode::CZero, "c = 0: M_0 kills the highest weight vector and V(0, h) is reducible");
  if (!depth_of(v)) throw Error(ErrorCode::NonHomogeneous, "vector is not a weight vector");

  const GroupPresentation& gp = group();
  auto max_of = [&](const Rational& a, const Rational& b) { return gp.compare(a, b) >= 0 ? a : b; };
  auto count_kind = [](const PBWMonomial& m, Kind k) {
    return static_cast<std::size_t>(
        std::count_if(m.factors().begin(), m.factors().end(), [k](const Generator& g) { return g.kind == k; }));
  };
  auto max_count = [&](const VermaVector& w, Kind k) {
    std::size_t best = 0;
    for (const auto& [m, c] : w.terms()) best = std::max(best, count_kind(m, k));
    return best;
  };

  std::vector<Generator> applied;
  VermaVector cur = v;
  auto step = [&](const Generator& op, Kind kind, std::size_t before) {
    applied.push_back(op);
    cur = act(op, cur);
    if (cur.is_zero() || max_count(cur, kind) >= before)
      throw std::logic_error("reduction made no progress at " + to_string(op));
  };

  // M at the largest last L-part among the longest terms drops the length by one.
  for (std::size_t l = max_count(cur, Kind::L); l > 0; l = max_count(cur, Kind::L)) {
    std::optional<Rational> j;
    for (const auto& [m, c] : cur.terms()) {
      if (count_kind(m, Kind::L) != l) continue;
      const Rational last = m.l_parts().back();
      j = j ? max_of(*j, last) : last;
    }
    step(M(*j), Kind::L, l);
  }
  // Y_{k0 - alpha} with k0 the largest k pairs off one Y-factor via M_0 = c.
  for (std::size_t t = max_count(cur, Kind::Y); t > 0; t = max_count(cur, Kind::Y)) {
    std::optional<Rational> k0;
    for (const auto& [m, c] : cur.terms()) {
      const auto ks = m.y_parts(alpha_);
      if (!ks.empty()) k0 = k0 ? max_of(*k0, ks.back()) : ks.back();
    }
    step(Y(*k0 - alpha_), Kind::Y, t);
  }
  // Final phase: L at the largest M-part removes one M-factor.
  for (std::size_t s = max_count(cur, Kind::M); s > 0; s = max_count(cur, Kind::M)) {
    std::optional<Rational> j0;
    for (const auto& [m, c] : cur.terms()) {
      const auto js = m.m_parts();
      if (!js.empty()) j0 = j0 ? max_of(*j0, js.back()) : js.back();
    }
    step(L(*j0), Kind::M, s);
  }

  if (cur.size() != 1 || !cur.terms().begin()->first.is_highest())
    throw std::logic_error("reduction did not end on the highest weight vector");
  return Reduction{std::vector<Generator>(applied.rbegin(), applied.rend()), cur.terms().begin()->second};
}

std::vector<VermaVector> VermaModule::maximal_submodule_generators(const Rational& depth,
                                                                   const std::optional<Truncation>& trunc) const {
  const Lattice lat = make_lattice(group(), trunc);
  check_depth(group(), lat, depth);
  const auto n = lat.units(depth);
  std::vector<VermaVector> out;
  if (!n) return out;
  for (long e = 1; e <= *n; ++e) {
    const Rational idx = -Rational(e) * lat.unit;
    if (e % 2 == 0) {
      if (hw_.h.is_zero()) out.push_back(vector(make_monomial({L(idx)})));
      out.push_back(vector(make_monomial({M(idx)})));
    } else {
      out.push_back(vector(make_monomial({Y(idx)})));
    }
  }
  return out;
}

SubmoduleDims VermaModule::submodule_weight_dim(std::span<const VermaVector> generators, const Rational& depth,
                                                const std::optional<Truncation>& trunc) const {
  const GroupPresentation& gp = group();
  const Lattice lat = make_lattice(gp, trunc);
  check_depth(gp, lat, depth);
  const auto target = lat.units(depth);
  if (!target) return {};

  // Homogeneous components of the generators, keyed by depth in lattice units.
  std::map<long, std::vector<VermaVector>, std::greater<>> pending;
  for (const VermaVector& g : generators) {
    std::map<long, VermaVector> parts;
    for (const auto& [m, c] : g.terms()) {
      for (const Generator& f : m.factors())
        if (!lat.contains(f.index))
          throw Error(ErrorCode::InvalidTruncation, "generator term " + to_string(f) + " lies off the lattice");
      const auto u = lat.units(m.depth());
      auto it = parts.try_emplace(*u, zero()).first;
      it->second.add_term(m, c);
    }
    for (auto& [u, part] : parts) pending[u].push_back(std::move(part));
  }

  auto spanning_basis = [&](long units, const std::vector<VermaVector>& vs) {
    const Rational d = Rational(units) * lat.unit;
    const std::vector<PBWMonomial> basis = weight_basis(d, trunc);
    std::vector<linalg::Row> rows;
    for (const VermaVector& w : vs) rows.push_back(coordinates(w, basis));
    const linalg::Echelon e = linalg::echelon(rows, basis.size());
    std::vector<VermaVector> out;
    for (const auto& row : e.rows) {
      VermaVector w = zero();
      for (std::size_t i = 0; i < basis.size(); ++i) w.add_term(basis[i], Rational(row[i]));
      out.push_back(std::move(w));
    }
    return out;
  };

  // U(g_+) closure, deepest first: raising operators strictly decrease depth.
  std::map<long, std::vector<VermaVector>> closed;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const long d = node.key();
    std::vector<VermaVector> basis = spanning_basis(d, node.mapped());
    if (basis.empty()) continue;
    for (const Generator& op : raising_operators(Rational(d) * lat.unit, trunc)) {
      const long shift = *lat.units(op.index);
      for (const VermaVector& w : basis) {
        VermaVector r = act(op, w);
        if (!r.is_zero()) pending[d - shift].push_back(std::move(r));
      }
    }
    closed[d] = std::move(basis);
  }

  // U(g_-) images landing at the target depth.
  const std::vector<PBWMonomial> target_basis = weight_basis(depth, trunc);
  std::vector<linalg::Row> rows;
  for (const auto& [d, basis] : closed) {
    if (d > *target) continue;
    const std::vector<PBWMonomial> words = weight_basis(Rational(*target - d) * lat.unit, trunc);
    for (const PBWMonomial& word : words)
      for (const VermaVector& w : basis) {
        const VermaVector r = act_word(word.factors(), w);
        if (!r.is_zero()) rows.push_back(coordinates(r, target_basis));
      }
  }
  SubmoduleDims dims;
  dims.dim_V = target_basis.size();
  dims.dim_N = linalg::rank(rows, target_basis.size());
  dims.codim = dims.dim_V - dims.dim_N;
  return dims;
}

std::size_t VermaModule::cache_size() const {
  std::lock_guard lock(cache_mutex_);
  return cache_.size();
}

// ---------------------------------------------------------------------------
// free functions

std::size_t length_of(const VermaVector& v) {
  if (v.is_zero()) throw Error(ErrorCode::ZeroVector, "length of the zero vector is undefined");
  std::size_t best = 0;
  for (const auto& [m, c] : v.terms()) best = std::max(best, m.length());
  return best;
}

Rational l_string_scalar(std::span<const Rational> parts, const Rational& h) {
  Rational total(0);
  for (const Rational& p : parts) total += p;
  Rational out = parts.size() % 2 == 0 ? Rational(1) : Rational(-1);
  Rational consumed(0);
  for (const Rational& p : parts) {
    out *= total - consumed + p;
    consumed += p;
  }
  return out * h;
}

std::uint64_t count_L_partitions(const Rational& depth, const GroupPresentation& gp,
                                 const std::optional<Truncation>& trunc) {
  const Lattice lat = make_lattice(gp, trunc);
  check_depth(gp, lat, depth);
  const auto n = lat.units(depth);
  if (!n || *n % 2 != 0) return 0;
  // L-parts are the even multiples of the unit: ordinary partitions of n/2.
  const long k = *n / 2;
  std::vector<std::uint64_t> p(static_cast<std::size_t>(k) + 1, 0);
  p[0] = 1;
  for (long part = 1; part <= k; ++part)
    for (long s = part; s <= k; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  return p[static_cast<std::size_t>(k)];
}

}  // namespace gsv
