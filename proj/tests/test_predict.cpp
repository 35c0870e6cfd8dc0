#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace hkmono;
using hkmono::test::halves;

namespace {
std::vector<std::optional<std::size_t>> values(const NuTable& t) {
  std::vector<std::optional<std::size_t>> out;
  for (const auto& e : t.entries) out.push_back(e.value);
  return out;
}

LLVComponent even(std::vector<long> mu) {
  LLVComponent c;
  for (long x : mu) c.mu.push_back(HalfInt::from_int(x));
  return c;
}

bool has_rule(const std::vector<Violation>& v, const std::string& rule) {
  for (const auto& x : v)
    if (x.rule == rule) return true;
  return false;
}
}  // namespace

TEST(Validate, VerbitskyOnlyIsClean) {
  for (std::size_t b2 : {3u, 4u, 5u, 7u, 23u}) EXPECT_TRUE(validate_decomposition(verbitsky_only(3, b2)).empty()) << b2;
}

TEST(Validate, Violations) {
  auto d = verbitsky_only(3, 7);
  LLVComponent mixed;
  mixed.mu = halves({2, 1, 0, 0});
  d.components.push_back(mixed);
  EXPECT_TRUE(has_rule(validate_decomposition(d), "parity"));

  LLVDecomposition missing{3, 7, {even({2, 0, 0, 0})}};
  EXPECT_TRUE(has_rule(validate_decomposition(missing), "verbitsky"));

  auto wrong_rank = verbitsky_only(3, 7);
  wrong_rank.components.push_back(even({1, 0}));
  EXPECT_TRUE(has_rule(validate_decomposition(wrong_rank), "rank"));

  auto not_dominant = verbitsky_only(3, 7);
  not_dominant.components.push_back(even({1, 2, 0, 0}));
  EXPECT_TRUE(has_rule(validate_decomposition(not_dominant), "dominance"));

  auto too_big = verbitsky_only(2, 7);
  too_big.components.push_back(even({3, 0, 0, 0}));
  EXPECT_TRUE(has_rule(validate_decomposition(too_big), "degree-range"));

  auto bound = verbitsky_only(3, 7);
  bound.components.push_back(even({2, 1, 1, 0}));
  EXPECT_TRUE(validate_decomposition(bound).empty());
  EXPECT_TRUE(has_rule(validate_decomposition(bound, true), "weight-bound"));
}

TEST(WeightBoundCondition, Examples) {
  EXPECT_TRUE(gklr_condition(verbitsky_only(4, 7)));
  auto d = verbitsky_only(3, 7);
  d.components.push_back(even({2, 1, 1, 0}));
  EXPECT_FALSE(gklr_condition(d));
  auto z = verbitsky_only(3, 7);
  auto zero = even({0, 0, 0, 0});
  zero.mult = 5;
  z.components.push_back(zero);
  EXPECT_TRUE(gklr_condition(z));
}

TEST(PredictEven, VerbitskyOnly) {
  auto d = verbitsky_only(3, 7);
  using V = std::vector<std::optional<std::size_t>>;
  EXPECT_EQ(values(predict_nu_even(d, ReductionType::I)), (V{0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(values(predict_nu_even(d, ReductionType::II)), (V{0, 1, 2, 3, 2, 1, 0}));
  EXPECT_EQ(values(predict_nu_even(d, ReductionType::III)), (V{0, 2, 4, 6, 4, 2, 0}));
  for (auto t : {ReductionType::I, ReductionType::II, ReductionType::III})
    EXPECT_TRUE(check_table_invariants(predict_nu_even(d, t)).empty());
}

TEST(PredictEven, TypeIIIWithExtraComponents) {
  auto d = verbitsky_only(3, 7);
  d.components.push_back(even({1, 1, 0, 0}));
  d.components.push_back(even({2, 0, 0, 0}));
  auto t = predict_nu_even(d, ReductionType::III, 2);
  for (std::size_t i = 0; i <= 3; ++i) EXPECT_EQ(t.at_degree(2 * i).value, 2 * i);
}

TEST(PredictEven, TypeIIMatchesSymPowers) {
  for (std::size_t b2 : {5u, 6u, 7u}) {
    auto n = normal_form({ReductionType::II, b2}).matrix();
    auto t = predict_nu_even(verbitsky_only(3, b2), ReductionType::II);
    for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(t.at_degree(2 * i).value, nilpotency_index(induced_sym_power(n, i)));
  }
}

TEST(PredictOdd, KummerFixture) {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto f = deformation_type("Kumn", n);
    EXPECT_EQ(predict_nu_odd(f, ReductionType::I).at_degree(3).value, 0u);
    EXPECT_EQ(predict_nu_odd(f, ReductionType::II).at_degree(3).value, 1u);
    auto three = predict_nu_odd(f, ReductionType::III);
    EXPECT_EQ(three.at_degree(3).value, 1u);
    EXPECT_EQ(three.at_degree(2 * (n - 1) + 1).value, 2 * n - 3);
    EXPECT_TRUE(check_table_invariants(three).empty());
  }
  EXPECT_THROW(predict_nu_odd(deformation_type("K3n", 2), ReductionType::II), ValidationError);
}

TEST(PredictOdd, ExplicitSpinComponent) {
  LLVDecomposition d = verbitsky_only(3, 7);
  LLVComponent c;
  c.mu = halves({3, 1, 1, 1});
  c.parity = DegreeParity::Odd;
  d.components.push_back(c);
  EXPECT_EQ(predict_nu_odd(d, ReductionType::I).at_degree(3).value, 0u);
  EXPECT_EQ(predict_nu_odd(d, ReductionType::II).at_degree(3).value, 1u);
  auto three = predict_nu_odd(d, ReductionType::III);
  EXPECT_EQ(three.at_degree(3).value, 1u);
  EXPECT_EQ(three.at_degree(5).value, 3u);
  EXPECT_TRUE(check_table_invariants(three).empty());
  EXPECT_THROW(predict_nu_odd(verbitsky_only(3, 7), ReductionType::II), ValidationError);
}

TEST(Fixtures, Data) {
  EXPECT_EQ(deformation_type("K3n", 3).b2, 23u);
  EXPECT_EQ(deformation_type("Kumn", 2).b2, 7u);
  EXPECT_EQ(deformation_type("OG6").n, 3u);
  EXPECT_EQ(deformation_type("OG6").b2, 8u);
  EXPECT_EQ(deformation_type("OG10").b2, 24u);
  EXPECT_THROW(deformation_type("K3n", 1), ValidationError);
  EXPECT_THROW(deformation_type("XYZ"), InputError);
  EXPECT_EQ(weyl_dimension(kum_h3_weight()), 8);
}

TEST(Criterion, Examples) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t b2 : {5u, 6u, 7u}) {
      auto r = theorem71_check(verbitsky_only(n, b2));
      EXPECT_TRUE(r.condition1 && r.condition2 && r.agree) << n << " " << b2;
    }
  auto d = verbitsky_only(3, 7);
  d.components.push_back(even({2, 1, 1, 0}));
  auto r = theorem71_check(d);
  EXPECT_FALSE(r.condition1);
  EXPECT_FALSE(r.condition2);
  EXPECT_TRUE(r.agree);

  auto z = verbitsky_only(3, 6);
  auto zero = even({0, 0, 0, 0});
  zero.mult = 3;
  z.components.push_back(zero);
  auto rz = theorem71_check(z);
  EXPECT_TRUE(rz.condition1 && rz.condition2 && rz.agree);
  EXPECT_THROW(theorem71_check(verbitsky_only(2, 4)), ValidationError);
}
