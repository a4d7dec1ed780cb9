#include <gtest/gtest.h>

#include "gsv/error.hpp"
#include "gsv/group.hpp"
#include "test_support.hpp"

using namespace gsv;
using gsv::test::Rng;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Syntax;
}

}  // namespace

TEST(MakeGroup, StandardInstance) {
  const auto gp = make_group(Rational(1), {}, 1);
  EXPECT_EQ(gp.alpha(), Rational(1, 2));
  EXPECT_EQ(gp.classify(gp.alpha()), ElementClass::InG1);
  EXPECT_EQ(gp.classify(Rational(2) * gp.alpha()), ElementClass::InG);
  EXPECT_EQ(gp, standard_group());
}

TEST(MakeGroup, InvertedThree) {
  const auto gp = make_group(Rational(1), {3}, 1);
  EXPECT_EQ(gp.alpha(), Rational(1, 2));
  EXPECT_EQ(gp.density(), Density::Dense);
  EXPECT_EQ(gp.classify(Rational(1, 3)), ElementClass::InG);
}

TEST(MakeGroup, Rejections) {
  EXPECT_EQ(code_of([] { make_group(Rational(1), {2}, 1); }), ErrorCode::EvenPrimeInverted);
  EXPECT_EQ(code_of([] { make_group(Rational(1), {}, 2); }), ErrorCode::EvenM);
  EXPECT_EQ(code_of([] { make_group(Rational(0), {}, 1); }), ErrorCode::NonPositiveGenerator);
  EXPECT_EQ(code_of([] { make_group(Rational(-1), {}, 1); }), ErrorCode::NonPositiveGenerator);
  EXPECT_EQ(code_of([] { make_group(Rational(1), {9}, 1); }), ErrorCode::InvalidPrimeSet);
  EXPECT_EQ(code_of([] { make_group(Rational(1), {3, 3}, 1); }), ErrorCode::InvalidPrimeSet);
}

TEST(Classify, Examples) {
  const auto std_gp = standard_group();
  EXPECT_EQ(classify(Rational(3), std_gp), ElementClass::InG);
  EXPECT_EQ(classify(Rational(-5, 2), std_gp), ElementClass::InG1);
  EXPECT_EQ(classify(Rational(1, 3), std_gp), ElementClass::Outside);
  EXPECT_EQ(classify(Rational(1, 3), test::dense()), ElementClass::InG);
  EXPECT_EQ(classify(Rational(1, 6), test::dense()), ElementClass::InG1);
  EXPECT_EQ(classify(Rational(1, 5), test::dense()), ElementClass::Outside);
}

TEST(Classify, NonUnitGeneratorAndOddM) {
  const auto gp = make_group(Rational(2), {}, 3);
  EXPECT_EQ(gp.alpha(), Rational(3));
  EXPECT_EQ(gp.classify(Rational(3)), ElementClass::InG1);
  EXPECT_EQ(gp.classify(Rational(1)), ElementClass::InG1);
  EXPECT_EQ(gp.classify(Rational(4)), ElementClass::InG);
  EXPECT_EQ(gp.classify(Rational(1, 2)), ElementClass::Outside);
  EXPECT_EQ(gp.density(), Density::Discrete);
}

TEST(Order, Examples) {
  const auto nat = standard_group();
  const auto rev = make_group(Rational(1), {}, 1, OrderDirection::Reversed);
  EXPECT_EQ(order_cmp(Rational(1, 2), Rational(1), nat), std::strong_ordering::less);
  EXPECT_EQ(order_cmp(Rational(1, 2), Rational(1), rev), std::strong_ordering::greater);
  EXPECT_EQ(order_cmp(Rational(7, 2), Rational(7, 2), rev), std::strong_ordering::equal);
}

TEST(Order, Density) {
  EXPECT_EQ(order_density(standard_group()), Density::Discrete);
  EXPECT_EQ(order_density(test::dense()), Density::Dense);
  EXPECT_EQ(order_density(make_group(Rational(2), {}, 3)), Density::Discrete);
}

TEST(Character, Examples) {
  const auto std_gp = standard_group();
  EXPECT_EQ(char_eval(Character::make(Rational(3), std_gp), Rational(3, 2), std_gp), Rational(27));
  const auto d = test::dense();
  EXPECT_EQ(char_eval(Character::make(Rational(-1), d), Rational(1, 6), d), Rational(-1));
  EXPECT_EQ(char_eval(Character::make(Rational(-1), d), Rational(1, 3), d), Rational(1));
  EXPECT_EQ(char_eval(Character::make(Rational(5, 7), std_gp), Rational(0), std_gp), Rational(1));
  EXPECT_EQ(char_eval(Character::make(Rational(2), std_gp), Rational(-1), std_gp), Rational(1, 4));
}

TEST(Character, Rejections) {
  const auto std_gp = standard_group();
  EXPECT_EQ(code_of([&] { Character::make(Rational(2), test::dense()); }), ErrorCode::UnrepresentableRoot);
  EXPECT_EQ(code_of([&] { Character::make(Rational(0), std_gp); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([&] { Character::trivial().eval(Rational(1, 3), std_gp); }), ErrorCode::IndexOutsideT);
}

TEST(IsoScale, Examples) {
  const auto std_gp = standard_group();
  EXPECT_EQ(iso_scale(std_gp, make_group(Rational(2), {}, 1)), Rational(2));
  EXPECT_FALSE(iso_scale(std_gp, test::dense()).has_value());
  EXPECT_EQ(iso_scale(std_gp, std_gp), Rational(1));
  EXPECT_EQ(iso_scale(std_gp, make_group(Rational(3), {}, 1)), Rational(3));
}

TEST(MemberS, Examples) {
  EXPECT_TRUE(member_S(Rational(-1), standard_group()));
  EXPECT_FALSE(member_S(Rational(2), standard_group()));
  EXPECT_TRUE(member_S(Rational(3), test::dense()));
  EXPECT_TRUE(member_S(Rational(-1, 9), test::dense()));
  EXPECT_FALSE(member_S(Rational(5), test::dense()));
  EXPECT_EQ(code_of([] { member_S(Rational(0), standard_group()); }), ErrorCode::ZeroScale);
}

TEST(GroupProperty, ClassificationRespectsAddition) {
  for (const auto& gp : {test::discrete(), test::dense()}) {
    Rng rng(1);
    for (int i = 0; i < 200; ++i) {
      const Rational x = rng.half_lattice(gp, 6), y = rng.half_lattice(gp, 6);
      const auto cx = gp.classify(x), cy = gp.classify(y);
      ASSERT_NE(cx, ElementClass::Outside);
      const auto expected = cx == cy ? ElementClass::InG : ElementClass::InG1;
      EXPECT_EQ(gp.classify(x + y), expected) << x << " + " << y;
    }
  }
}

TEST(GroupProperty, TIsHalfGeneratorLattice) {
  // T = (g/2) Z[1/P]: membership agrees with a denominator test
  for (const auto& gp : {test::discrete(), test::dense(), make_group(Rational(3, 5), {5, 7}, -3)}) {
    Rng rng(2);
    for (int i = 0; i < 200; ++i) {
      const Rational q = rng.small_rational(30);
      const bool expected = test::in_localization(q / (gp.generator() / Rational(2)), gp.primes());
      EXPECT_EQ(gp.in_T(q), expected) << q;
      if (expected) {
        const bool in_g = test::in_localization(q / gp.generator(), gp.primes());
        EXPECT_EQ(gp.classify(q) == ElementClass::InG, in_g) << q;
      }
    }
    EXPECT_EQ(gp.classify(gp.alpha()), ElementClass::InG1);
  }
}

TEST(GroupProperty, OrderCompatibleWithAddition) {
  for (const auto dir : {OrderDirection::Natural, OrderDirection::Reversed}) {
    const auto gp = make_group(Rational(1), {3}, 1, dir);
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
      const Rational x = rng.half_lattice(gp, 5), y = rng.half_lattice(gp, 5), z = rng.half_lattice(gp, 5);
      EXPECT_EQ(gp.compare(x, y), gp.compare(x + z, y + z));
      EXPECT_EQ(gp.compare(x, y), 0 <=> gp.compare(y, x));
    }
  }
}

TEST(GroupProperty, CharacterMultiplicative) {
  Rng rng(4);
  const auto d = test::dense();
  const auto s = test::discrete();
  for (int i = 0; i < 200; ++i) {
    const auto chi_d = Character::make(Rational(rng.coin() ? 1 : -1), d);
    const Rational x = rng.half_lattice(d, 4), y = rng.half_lattice(d, 4);
    EXPECT_EQ(chi_d.eval(x + y, d), chi_d.eval(x, d) * chi_d.eval(y, d));

    Rational t = rng.small_rational(3);
    if (t.is_zero()) t = Rational(2);
    const auto chi_s = Character::make(t, s);
    const Rational a = rng.half_lattice(s, 4), b = rng.half_lattice(s, 4);
    EXPECT_EQ(chi_s.eval(a + b, s), chi_s.eval(a, s) * chi_s.eval(b, s));
  }
}

TEST(GroupProperty, IsoScaleInverseAndScaleGroupClosure) {
  const auto base = test::dense();
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const Rational g2(rng.between(1, 20), rng.between(1, 20));
    const auto other = make_group(g2, {3}, 2 * rng.between(-3, 3) + 1);
    const auto a = iso_scale(base, other);
    const auto b = iso_scale(other, base);
    ASSERT_TRUE(a && b);
    EXPECT_EQ(*a * *b, Rational(1));
  }
  const Rational units[] = {Rational(3), Rational(-1, 3), Rational(9), Rational(-1), Rational(1, 27)};
  for (const Rational& a : units)
    for (const Rational& b : units) {
      ASSERT_TRUE(member_S(a, base) && member_S(b, base));
      EXPECT_TRUE(member_S(a * b, base));
    }
}

TEST(GroupProperty, DensityDichotomy) {
  const auto s = test::discrete();
  // nothing of T strictly between 0 and g/2 on a fine sweep
  for (long k = 1; k < 600; ++k) {
    const Rational y(k, 1200);
    if (s.in_T(y)) ADD_FAILURE() << y;
  }
  const auto d = test::dense();
  for (const Rational& eps : {Rational(1), Rational(1, 10), Rational(1, 1000), Rational(1, 100000)}) {
    const auto y = d.positive_element_below(eps);
    ASSERT_TRUE(y);
    EXPECT_TRUE(d.in_T(*y));
    EXPECT_GT(*y, Rational(0));
    EXPECT_LT(*y, eps);
  }
  EXPECT_FALSE(s.positive_element_below(Rational(1, 2)).has_value());
}
