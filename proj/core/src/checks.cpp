#include "gsv/checks.hpp"

#include <algorithm>
#include <memory>

#include "gsv/error.hpp"
#include "gsv/text.hpp"

namespace gsv {

void CheckResult::record(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  ++failures;
  if (violations.size() < 5) violations.push_back(what);
}

void CheckResult::merge(const CheckResult& other) {
  cases += other.cases;
  failures += other.failures;
  for (const auto& v : other.violations)
    if (violations.size() < 5) violations.push_back(v);
}

// ---------------------------------------------------------------------------
// Sampler

long Sampler::denominator() {
  long den = 1;
  for (long p : gp_.primes()) {
    const long e = between(0, max_exp_);
    for (long i = 0; i < e; ++i) den *= p;
  }
  return den;
}

Rational Sampler::in_G(long bound) {
  const long den = denominator();
  return gp_.generator() * Rational(between(-bound * den, bound * den), den);
}

Rational Sampler::in_G1(long bound) {
  const long den = denominator();
  // (g/2) k / den with k odd is exactly G_1 on this lattice
  long k = between(-2 * bound * den, 2 * bound * den - 1);
  if (k % 2 == 0) ++k;
  return gp_.generator() * Rational(k, 2 * den);
}

Rational Sampler::positive_G(long bound) {
  const long den = denominator();
  return gp_.oriented(gp_.generator() * Rational(between(1, bound * den), den));
}

Rational Sampler::positive_G1(long bound) {
  const long den = denominator();
  return gp_.oriented(gp_.generator() * Rational(2 * between(1, bound * den) - 1, 2 * den));
}

Generator Sampler::generator_of(Kind kind, long bound) {
  return Generator{kind, kind == Kind::Y ? in_G1(bound) : in_G(bound)};
}

Generator Sampler::generator(long bound) { return generator_of(static_cast<Kind>(below(3)), bound); }

Generator Sampler::ideal_generator(long bound) { return generator_of(coin() ? Kind::M : Kind::Y, bound); }

Rational Sampler::nonzero_rational(long bound) {
  const long n = between(1, bound);
  return Rational(coin() ? n : -n, between(1, bound));
}

std::vector<Generator> window_generators(const GroupPresentation& gp, long window) {
  std::vector<Generator> out;
  const Rational half = gp.generator() / Rational(2);
  for (long k = 0;; ++k) {
    if (half * Rational(k) > Rational(window)) break;
    for (long s : {k, -k}) {
      const Rational x = half * Rational(s);
      if (s % 2 == 0) {
        out.push_back(L(x));
        out.push_back(M(x));
      } else {
        out.push_back(Y(x));
      }
      if (k == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> window_indices(const GroupPresentation& gp, long window) {
  std::vector<Rational> out;
  for (long k = 0; gp.generator() * Rational(k) <= Rational(window); ++k) {
    out.push_back(gp.generator() * Rational(k));
    if (k != 0) out.push_back(gp.generator() * Rational(-k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// random automorphisms

Automorphism random_primitive(const Algebra& alg, Sampler& s, int family) {
  const GroupPresentation& gp = alg.group();
  switch (family) {
    case 0: {
      Rational t = gp.primes().empty() ? s.nonzero_rational(3) : Rational(s.coin() ? 1 : -1);
      return Automorphism::diagonal(alg, t, s.nonzero_rational(3));
    }
    case 1: {
      Rational a(s.coin() ? 1 : -1);
      for (long p : gp.primes()) a *= Rational(p).pow(s.between(-1, 1));
      return Automorphism::scale(alg, a);
    }
    case 2:
      return Automorphism::cocycle(alg, s.nonzero_rational(4));
    default: {
      LieElement x = alg.zero();
      const long n = s.between(1, 2);
      for (long i = 0; i < n; ++i) x.add_term(s.ideal_generator(3), s.nonzero_rational(3));
      return exp_ad(x);
    }
  }
}

Automorphism random_chain(const Algebra& alg, Sampler& s, std::size_t max_len) {
  Automorphism out = Automorphism::identity(alg);
  const long len = s.between(1, static_cast<long>(max_len));
  for (long i = 0; i < len; ++i) out = compose(out, random_primitive(alg, s, static_cast<int>(s.below(4))));
  return out;
}

namespace {

std::string describe_triple(const Generator& a, const Generator& b, const Generator& c) {
  return to_string(a) + ", " + to_string(b) + ", " + to_string(c);
}

LieElement ad(const LieElement& x, const LieElement& e) { return bracket(x, e); }

// One module per (c, h) pair; raising/lowering identities are checked on all.
std::vector<std::unique_ptr<VermaModule>> test_modules(const Algebra& alg) {
  std::vector<std::unique_ptr<VermaModule>> out;
  for (const auto& hw : {HighestWeight{Rational(1), Rational(0)}, HighestWeight{Rational(0), Rational(2)},
                         HighestWeight{Rational(-3, 2), Rational(1, 3)}})
    out.push_back(std::make_unique<VermaModule>(alg, hw));
  return out;
}

std::vector<Rational> positives(Sampler& s, long count, long bound) {
  std::vector<Rational> out;
  for (long i = 0; i < count; ++i) out.push_back(s.positive_G(bound));
  return out;
}

std::vector<Rational> y_parts(Sampler& s, const Rational& alpha, long count, long bound) {
  std::vector<Rational> out;
  for (long i = 0; i < count; ++i) out.push_back(alpha + s.positive_G1(bound));
  return out;
}

Automorphism from_primitive(const Algebra& alg, const Primitive& p) {
  if (const auto* d = std::get_if<Diagonal>(&p)) return Automorphism::diagonal(alg, d->chi.t(), d->s);
  if (const auto* sc = std::get_if<Scale>(&p)) return Automorphism::scale(alg, sc->a);
  if (const auto* c = std::get_if<Cocycle>(&p)) return Automorphism::cocycle(alg, c->lambda);
  return exp_ad(std::get<Inner>(p).x);
}

std::vector<std::pair<Generator, Generator>> random_pairs(Sampler& s, std::size_t n, long bound) {
  std::vector<std::pair<Generator, Generator>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(s.generator(bound), s.generator(bound));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// suites

CheckResult check_jacobi(const Algebra& alg, const CheckOptions& opt) {
  CheckResult res{"jacobi"};
  const auto gens = window_generators(alg.group(), opt.window);
  for (const Generator& a : gens)
    for (const Generator& b : gens)
      for (const Generator& c : gens) res.record(jacobi_residual(alg, a, b, c).is_zero(), describe_triple(a, b, c));

  Sampler s(alg.group(), opt.seed, opt.max_denominator_exponent);
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const Generator a = s.generator(opt.window), b = s.generator(opt.window), c = s.generator(opt.window);
    res.record(jacobi_residual(alg, a, b, c).is_zero(), describe_triple(a, b, c));
  }
  return res;
}

CheckResult check_ideal(const Algebra& alg, const CheckOptions& opt) {
  CheckResult res{"ideal"};
  Sampler s(alg.group(), opt.seed, opt.max_denominator_exponent);
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const Generator x = s.generator(opt.window), y = s.ideal_generator(opt.window);
    res.record(ideal_membership(bracket(alg.element(x), alg.element(y))) == IdealMembership::InI,
               "[" + to_string(x) + ", " + to_string(y) + "] leaves I");
  }

  const auto gens = window_generators(alg.group(), opt.window);
  const LieElement m0 = alg.element(M(Rational(0)));
  for (const Generator& g : gens)
    res.record(bracket(m0, alg.element(g)).is_zero(), "M(0) does not commute with " + to_string(g));

  for (const Generator& x : gens)
    for (const Generator& y : gens) {
      const LieElement b = bracket(alg.element(x), alg.element(y));
      const bool graded = std::all_of(b.terms().begin(), b.terms().end(),
                                      [&](const auto& t) { return t.first.index == x.index + y.index; });
      res.record(graded, "[" + to_string(x) + ", " + to_string(y) + "] off weight");
    }

  for (std::size_t i = 0; i < opt.samples; ++i) {
    LieElement x = alg.zero();
    const long n = s.between(1, 3);
    for (long k = 0; k < n; ++k) x.add_term(s.ideal_generator(opt.window), s.nonzero_rational(4));
    const LieElement e = alg.element(s.generator(opt.window));
    res.record(ad(x, ad(x, ad(x, e))).is_zero(), "(ad " + text::format(x) + ")^3 nonzero");
  }
  return res;
}

CheckResult check_string_actions(const Algebra& alg, const CheckOptions& opt) {
  CheckResult res{"string-actions"};
  Sampler s(alg.group(), opt.seed, opt.max_denominator_exponent);
  const auto modules = test_modules(alg);
  const Rational alpha = alg.group().alpha();
  const long bound = 3;

  for (std::size_t n = 0; n < opt.samples; ++n) {
    const VermaModule& mod = *modules[s.below(modules.size())];

    // M_j on L-strings, modulo length r - 2.
    {
      const long r = s.between(1, 3);
      const PBWMonomial mono = mod.monomial(positives(s, r, bound), positives(s, s.between(0, 2), bound),
                                            y_parts(s, alpha, s.between(0, 2), bound));
      const Rational j = s.positive_G(bound);
      const auto is = mono.l_parts();
      std::vector<Generator> tail_factors(mono.factors().begin() + r, mono.factors().end());
      const VermaVector tail = mod.act_word(tail_factors, mod.highest());

      VermaVector diff = mod.act(M(j), mod.vector(mono));
      for (long p = 0; p < r; ++p) {
        std::vector<Generator> word;
        for (long q = 0; q < r; ++q)
          if (q != p) word.push_back(L(-is[static_cast<std::size_t>(q)]));
        word.push_back(M(j - is[static_cast<std::size_t>(p)]));
        VermaVector term = mod.act_word(word, tail);
        term *= j;
        diff += term;  // the right-hand side carries -j
      }
      const bool ok = diff.is_zero() || static_cast<long>(length_of(diff)) <= r - 2;
      res.record(ok, "M(" + j.to_string() + ") on " + text::format(mod.vector(mono)));
    }

    // L_j on M-strings: exact sum, and zero above the largest part.
    {
      const long r = s.between(1, 3);
      const auto is = positives(s, r, bound);
      const Rational top = *std::max_element(is.begin(), is.end(), [&](const Rational& a, const Rational& b) {
        return alg.group().compare(a, b) < 0;
      });
      const Rational j = s.coin() ? s.positive_G(bound) : top + s.positive_G(bound);
      const PBWMonomial mono = mod.monomial({}, is, {});
      const VermaVector lhs = mod.act(L(j), mod.vector(mono));
      VermaVector rhs = mod.zero();
      for (long p = 0; p < r; ++p) {
        std::vector<Generator> word;
        for (long q = 0; q < r; ++q)
          if (q != p) word.push_back(M(-is[static_cast<std::size_t>(q)]));
        word.push_back(M(j - is[static_cast<std::size_t>(p)]));
        VermaVector term = mod.act_word(word, mod.highest());
        term *= -is[static_cast<std::size_t>(p)];
        rhs += term;
      }
      res.record(lhs == rhs, "L(" + j.to_string() + ") on " + text::format(mod.vector(mono)));
      if (alg.group().compare(j, top) > 0)
        res.record(lhs.is_zero(), "L(" + j.to_string() + ") above the top part on " + text::format(mod.vector(mono)));
    }
  }
  return res;
}

CheckResult check_y_vanishing(const Algebra& alg, const CheckOptions& opt) {
  CheckResult res{"y-vanishing"};
  Sampler s(alg.group(), opt.seed, opt.max_denominator_exponent);
  const auto modules = test_modules(alg);
  const Rational alpha = alg.group().alpha();
  for (std::size_t n = 0; n < opt.samples; ++n) {
    const VermaModule& mod = *modules[s.below(modules.size())];
    const PBWMonomial mono = mod.monomial({}, {}, y_parts(s, alpha, s.between(1, 3), 3));
    const Rational kt = mono.y_parts(alpha).back();
    const Rational j = kt + s.positive_G(2);
    res.record(mod.act(Y(j - alpha), mod.vector(mono)).is_zero(),
               "Y(" + (j - alpha).to_string() + ") on " + text::format(mod.vector(mono)));
    if (mod.highest_weight().c.is_zero())
      res.record(mod.act(Y(kt - alpha), mod.vector(mono)).is_zero(),
                 "c = 0: Y(" + (kt - alpha).to_string() + ") on " + text::format(mod.vector(mono)));
  }
  return res;
}

CheckResult check_filtration(const Algebra& alg, const CheckOptions& opt) {
  CheckResult res{"filtration"};
  Sampler s(alg.group(), opt.seed, opt.max_denominator_exponent);
  const auto modules = test_modules(alg);
  const Rational alpha = alg.group().alpha();
  for (std::size_t n = 0; n < opt.samples; ++n) {
    const VermaModule& mod = *modules[s.below(modules.size())];
    VermaVector v = mod.zero();
    const long terms = s.between(1, 3);
    for (long t = 0; t < terms; ++t) {
      const PBWMonomial m = mod.monomial(positives(s, s.between(0, 3), 3), positives(s, s.between(0, 2), 3),
                                         y_parts(s, alpha, s.between(0, 2), 3));
      v.add_term(m, s.nonzero_rational(5));
    }
    if (v.is_zero()) continue;
    const std::size_t r = length_of(v);
    const Rational j = s.positive_G(3);
    const VermaVector w = mod.act(M(j), v);
    res.record(w.is_zero() || (r >= 1 && length_of(w) <= r - 1), "M(" + j.to_string() + ") on " + text::format(v));
  }
  return res;
}

CheckResult check_relations(const Algebra& alg, const CheckOptions& opt) {
  CheckResult res{"relations"};
  const GroupPresentation& gp = alg.group();
  Sampler s(gp, opt.seed, opt.max_denominator_exponent);
  const long w = std::min<long>(opt.window, 4);
  const auto window = window_generators(gp, w);
  const auto indices = window_indices(gp, w);
  static constexpr const char* kFamily[] = {"diagonal", "scale", "cocycle", "inner"};

  auto residual_ok = [&](const Automorphism& theta) {
    const auto pairs = random_pairs(s, opt.samples, w);
    return hom_residual(theta, pairs).empty();
  };

  for (int family = 0; family < 4; ++family)
    for (int k = 0; k < 3; ++k) {
      const Automorphism theta = random_primitive(alg, s, family);
      res.record(residual_ok(theta), std::string(kFamily[family]) + " " + text::format(theta) + " is not a homomorphism");
    }
  for (int k = 0; k < 50; ++k) {
    const Automorphism theta = random_chain(alg, s, 4);
    res.record(residual_ok(theta), "chain " + text::format(theta) + " is not a homomorphism");
    res.record(automorphism_shape(theta, indices).ok, "chain " + text::format(theta) + " has the wrong shape");
    res.record(same_action(compose(theta, invert(theta)), Automorphism::identity(alg), window),
               "chain " + text::format(theta) + " times its inverse is not the identity");
  }

  // composition laws: same-family products collapse to one primitive with the product parameters
  for (int family = 0; family < 3; ++family)
    for (int k = 0; k < 10; ++k) {
      const Automorphism a = random_primitive(alg, s, family), b = random_primitive(alg, s, family);
      const Automorphism ab = compose(a, b);
      bool ok = ab.chain().size() <= 1;
      for (const Generator& g : window) ok = ok && ab.apply(g) == a.apply(b.apply(g));
      if (ok && ab.chain().size() == 1) {
        const Primitive& pa = a.chain().front();
        const Primitive& pb = b.chain().front();
        const Primitive& pab = ab.chain().front();
        if (family == 0) {
          const auto &da = std::get<Diagonal>(pa), &db = std::get<Diagonal>(pb), &d = std::get<Diagonal>(pab);
          ok = d.chi.t() == da.chi.t() * db.chi.t() && d.s == da.s * db.s;
        } else if (family == 1) {
          ok = std::get<Scale>(pab).a == std::get<Scale>(pa).a * std::get<Scale>(pb).a;
        } else {
          ok = std::get<Cocycle>(pab).lambda == std::get<Cocycle>(pa).lambda + std::get<Cocycle>(pb).lambda;
        }
      }
      res.record(ok, std::string(kFamily[family]) + " law fails for " + text::format(a) + " and " + text::format(b));
    }

  // conjugation closure
  const std::pair<int, int> cases[] = {{1, 0}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 3}};
  for (const auto& [by_family, target_family] : cases)
    for (int k = 0; k < 5; ++k) {
      const Automorphism by = random_primitive(alg, s, by_family);
      const Automorphism target = random_primitive(alg, s, target_family);
      const auto fam = conjugate_in_family(alg, by.chain().front(), target.chain().front());
      const bool ok = fam && fam->index() == target.chain().front().index() &&
                      same_action(conjugate(by, target), from_primitive(alg, *fam), window);
      res.record(ok, text::format(by) + " conjugating " + text::format(target) + " leaves the family");
    }
  for (int k = 0; k < 10; ++k) {
    const Automorphism by = random_chain(alg, s, 4);
    const Automorphism target = random_primitive(alg, s, 3);
    const Automorphism expected = exp_ad(by.apply(std::get<Inner>(target.chain().front()).x));
    res.record(same_action(conjugate(by, target), expected, window),
               text::format(by) + " conjugating " + text::format(target) + " is not inner");
  }
  return res;
}

CheckResult check_cocycle_table(const std::map<Rational, Rational>& table, std::span<const Rational> window) {
  CheckResult res{"cocycle"};
  res.record(validate_cocycle(table, window), "table violates the cocycle identities");
  return res;
}

}  // namespace gsv
