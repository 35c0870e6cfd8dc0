#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace hkmono;
using hkmono::test::halves;

namespace {
const RootSystemBD B2{Family::B, 2}, B3{Family::B, 3}, D2{Family::D, 2}, D3{Family::D, 3};

std::vector<std::string> names(const std::vector<Constituent>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs)
    for (BigInt k = 0; k < c.mult; ++k) out.push_back(c.weight.str());
  return out;
}
}  // namespace

TEST(RootSystem, FromDimension) {
  EXPECT_EQ(orthogonal_root_system(7), B3);
  EXPECT_EQ(orthogonal_root_system(6), D3);
  EXPECT_EQ(D3.vector_dim(), 6u);
  EXPECT_EQ(positive_roots(B3).size(), 9u);
  EXPECT_EQ(positive_roots(D3).size(), 6u);
}

TEST(Dominance, Examples) {
  EXPECT_TRUE(is_dominant(halves({4, 2, 0}), B3));
  EXPECT_TRUE(is_dominant(halves({2, 2, -2}), D3));
  EXPECT_FALSE(is_dominant(halves({2, 2, -2}), B3));
  EXPECT_FALSE(is_dominant(halves({2, 4}), B2));
  EXPECT_THROW(HighestWeight(B2, halves({2, 1})), ValidationError);
  EXPECT_THROW(HighestWeight(B2, halves({2})), InputError);
}

TEST(Parity, Examples) {
  EXPECT_TRUE(parity_check(HighestWeight::from_ints(B3, {2, 1, 0}), false));
  EXPECT_TRUE(parity_check(HighestWeight(B3, halves({1, 1, 1})), true));
  EXPECT_FALSE(parity_check(HighestWeight(B3, halves({1, 1, 1})), false));
}

TEST(WeylOrbitMax, Examples) {
  for (long n = 0; n <= 5; ++n) {
    EXPECT_EQ(weyl_orbit_max(HighestWeight::from_ints(B3, {n, 0, 0}), {1, 1, 0}), HalfInt::from_int(n));
    EXPECT_EQ(weyl_orbit_max(HighestWeight::from_ints(D3, {n, 0, 0}), {1, 1, 0}), HalfInt::from_int(n));
  }
  EXPECT_EQ(weyl_orbit_max(HighestWeight::from_ints(B3, {3, 2, 1}), {0, 0, 0}), HalfInt());
  EXPECT_EQ(weyl_orbit_max(HighestWeight::from_ints(D2, {1, 1}), {1, -1}), HalfInt());
  EXPECT_EQ(weyl_orbit_max(HighestWeight::from_ints(B2, {1, 1}), {1, -1}), HalfInt::from_int(2));
}

TEST(NuOnIrrep, Examples) {
  for (long n = 0; n <= 4; ++n)
    EXPECT_EQ(nu_on_irrep(HighestWeight::from_ints(B3, {n, 0, 0}), {1, 1, 0}), HalfInt::from_int(n));
  EXPECT_EQ(nu_on_irrep(HighestWeight(B3, halves({1, 1, 1})), {2, 0, 0}), HalfInt::from_int(1));
  EXPECT_EQ(nu_on_irrep(HighestWeight::from_ints(B3, {0, 0, 0}), {2, 0, 0}), HalfInt());
}

TEST(Multiplicities, Standard) {
  for (std::size_t r = 1; r <= 4; ++r) {
    RootSystemBD rs{Family::B, r};
    std::vector<long> l(r, 0);
    l[0] = 1;
    auto w = HighestWeight::from_ints(rs, l);
    auto ch = weight_multiplicities(w);
    EXPECT_EQ(ch.size(), 2u);
    for (const auto& [mu, m] : ch) EXPECT_EQ(m, 1);
    EXPECT_EQ(character_dimension(ch, rs), BigInt(2 * r + 1));
    EXPECT_EQ(weyl_dimension(w), BigInt(2 * r + 1));
  }
}

TEST(Multiplicities, AdjointAndSpin) {
  auto adj = HighestWeight::from_ints(B3, {1, 1, 0});
  auto ch = weight_multiplicities(adj);
  EXPECT_EQ(ch.at(Doubled{0, 0, 0}), 3);
  EXPECT_EQ(character_dimension(ch, B3), 21);
  EXPECT_EQ(weyl_dimension(adj), 21);

  auto spin = HighestWeight(B3, halves({1, 1, 1}));
  auto sc = weight_multiplicities(spin);
  ASSERT_EQ(sc.size(), 1u);
  EXPECT_EQ(sc.begin()->second, 1);
  EXPECT_EQ(character_dimension(sc, B3), 8);
  EXPECT_EQ(orbit_size(Doubled{1, 1, 1}, B3), 8);
}

TEST(Multiplicities, WeylDimensionAgreesWithFreudenthal) {
  for (auto fam : {Family::B, Family::D})
    for (std::size_t r = 2; r <= 4; ++r) {
      RootSystemBD rs{fam, r};
      for (const auto& l : std::vector<std::vector<long>>{{2, 0, 0, 0}, {2, 1, 0, 0}, {1, 1, 1, 0}, {3, 1, 1, 1}}) {
        std::vector<long> c(l.begin(), l.begin() + r);
        auto w = HighestWeight::from_ints(rs, c);
        EXPECT_EQ(character_dimension(weight_multiplicities(w), rs), weyl_dimension(w)) << w.str();
      }
    }
}

TEST(Peel, SymSquareOfStandard) {
  // Sym^2 of the 7-dim module = (2,0,0) + (0,0,0)
  auto ch = dominant_part(power_character(standard_module_weights(B3), 2, true), B3);
  EXPECT_EQ(names(peel_character(ch, B3)), (std::vector<std::string>{"(2,0,0)", "(0,0,0)"}));
  // wedge^2 of the 6-dim module of D3 = adjoint (1,1,0)
  auto w2 = dominant_part(power_character(standard_module_weights(D3), 2, false), D3);
  EXPECT_EQ(names(peel_character(w2, D3)), (std::vector<std::string>{"(1,1,0)"}));
  // wedge^3 of the 6-dim module of D3 splits as (1,1,1) + (1,1,-1)
  auto w3 = dominant_part(power_character(standard_module_weights(D3), 3, false), D3);
  auto n3 = names(peel_character(w3, D3));
  std::sort(n3.begin(), n3.end());
  EXPECT_EQ(n3, (std::vector<std::string>{"(1,1,-1)", "(1,1,1)"}));
}

TEST(Branch, VerbitskyTwo) {
  auto g = grade_and_branch(HighestWeight::from_ints(B3, {2, 0, 0}), B2);
  std::map<long, std::vector<std::string>> got;
  for (const auto& [grade, cs] : g) got[grade.twice() / 2] = names(cs);
  std::map<long, std::vector<std::string>> want{
      {-2, {"(0,0)"}}, {-1, {"(1,0)"}}, {0, {"(2,0)", "(0,0)"}}, {1, {"(1,0)"}}, {2, {"(0,0)"}}};
  EXPECT_EQ(got, want);
}

TEST(Branch, TrivialWeight) {
  auto g = grade_and_branch(HighestWeight::from_ints(B3, {0, 0, 0}), B2);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.begin()->first, HalfInt());
  EXPECT_EQ(names(g.begin()->second), (std::vector<std::string>{"(0,0)"}));
}

TEST(Branch, DimensionsAddUp) {
  for (auto mu : {std::vector<long>{3, 0, 0, 0}, {2, 1, 1, 0}, {2, 2, 0, 0}}) {
    RootSystemBD amb{Family::B, 4}, tgt{Family::B, 3};
    auto w = HighestWeight::from_ints(amb, mu);
    BigInt total = 0;
    for (const auto& [grade, cs] : grade_and_branch(w, tgt))
      for (const auto& c : cs) total += c.mult * weyl_dimension(c.weight);
    EXPECT_EQ(total, weyl_dimension(w)) << w.str();
  }
  // D ambient to D target, spin type
  RootSystemBD amb{Family::D, 4}, tgt{Family::D, 3};
  auto w = HighestWeight(amb, halves({3, 1, 1, 1}));
  BigInt total = 0;
  for (const auto& [grade, cs] : grade_and_branch(w, tgt))
    for (const auto& c : cs) total += c.mult * weyl_dimension(c.weight);
  EXPECT_EQ(total, weyl_dimension(w));
}

TEST(Branch, MirrorNormalization) {
  RootSystemBD amb{Family::D, 4}, tgt{Family::D, 3};
  auto g = grade_and_branch(HighestWeight::from_ints(amb, {2, 1, 1, 0}), tgt);
  bool saw_pair = false;
  for (const auto& [grade, cs] : g)
    for (const auto& n : normalize_mirrors(cs)) {
      EXPECT_GE(n.weight.coords().back(), HalfInt());
      saw_pair = saw_pair || n.mirror_pair;
    }
  EXPECT_TRUE(saw_pair);
}
