#include <gtest/gtest.h>

#include "gsv/checks.hpp"
#include "test_support.hpp"

using namespace gsv;

namespace {

using R = Rational;

std::vector<Algebra> instances() { return {Algebra(test::discrete()), Algebra(test::dense())}; }

}  // namespace

TEST(Checks, AllSuitesPass) {
  CheckOptions opt;
  opt.window = 3;
  opt.samples = 60;
  for (const Algebra& alg : instances()) {
    for (const CheckResult& r : {check_jacobi(alg, opt), check_ideal(alg, opt), check_string_actions(alg, opt),
                                 check_y_vanishing(alg, opt), check_filtration(alg, opt), check_relations(alg, opt)}) {
      EXPECT_TRUE(r.passed()) << r.name << ": " << (r.violations.empty() ? "" : r.violations.front());
      EXPECT_GT(r.cases, 0u) << r.name;
    }
  }
}

TEST(Checks, CocycleTable) {
  std::vector<R> w;
  std::map<R, R> linear, square;
  for (long u = -6; u <= 6; ++u) {
    linear[R(u)] = R(-2) * R(u);
    square[R(u)] = R(u * u);
  }
  for (long u = -3; u <= 3; ++u) w.emplace_back(u);
  EXPECT_TRUE(check_cocycle_table(linear, w).passed());
  EXPECT_FALSE(check_cocycle_table(square, w).passed());
}

TEST(Checks, RecordKeepsFirstViolations) {
  CheckResult r("x");
  for (int i = 0; i < 20; ++i) r.record(i % 2 == 0, "case " + std::to_string(i));
  EXPECT_EQ(r.cases, 20u);
  EXPECT_EQ(r.failures, 10u);
  EXPECT_LE(r.violations.size(), 5u);
  EXPECT_EQ(r.violations.front(), "case 1");
  CheckResult total("t");
  total.merge(r);
  EXPECT_FALSE(total.passed());
}

TEST(Sampler, DeterministicBySeed) {
  const GroupPresentation gp = test::dense();
  Sampler a(gp, 9), b(gp, 9), c(gp, 10);
  bool differs = false;
  for (int i = 0; i < 50; ++i) {
    const Generator x = a.generator(4);
    EXPECT_EQ(x, b.generator(4));
    differs = differs || !(x == c.generator(4));
  }
  EXPECT_TRUE(differs);
}

TEST(Sampler, DrawsStayInDomain) {
  for (const auto& gp : {test::discrete(), test::dense(), make_group(R(1), {}, 1, OrderDirection::Reversed)}) {
    Sampler s(gp, 3);
    for (int i = 0; i < 200; ++i) {
      EXPECT_EQ(gp.classify(s.in_G(4)), ElementClass::InG);
      EXPECT_EQ(gp.classify(s.in_G1(4)), ElementClass::InG1);
      EXPECT_TRUE(gp.positive(s.positive_G(4)));
      EXPECT_TRUE(gp.positive(s.positive_G1(4)));
      const Generator g = s.ideal_generator(4);
      EXPECT_NE(g.kind, Kind::L);
      EXPECT_FALSE(s.nonzero_rational(5).is_zero());
    }
  }
}

TEST(Window, Sizes) {
  EXPECT_EQ(window_indices(test::discrete(), 2).size(), 5u);
  // L, M on 5 integers and Y on 4 half-integers
  EXPECT_EQ(window_generators(test::discrete(), 2).size(), 14u);
}

TEST(Checks, SameSeedSameReport) {
  CheckOptions opt;
  opt.window = 2;
  opt.samples = 30;
  opt.seed = 17;
  const Algebra alg(test::dense());
  const CheckResult a = check_relations(alg, opt), b = check_relations(alg, opt);
  EXPECT_EQ(a.cases, b.cases);
  EXPECT_EQ(a.violations, b.violations);
}
