#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace hkmono;

namespace {
Vector degree2(const GradedFrobeniusAlgebra&, std::initializer_list<long> xs) { return toy_degree2(hkmono::test::vec(xs)); }
}  // namespace

TEST(ToyAlgebra, Structure) {
  auto q = bbf_model(5);
  auto a = mukai_toy_algebra(q);
  EXPECT_EQ(a.dim(), 7u);
  EXPECT_EQ(a.indices_of_degree(0).size(), 1u);
  EXPECT_EQ(a.indices_of_degree(2).size(), 5u);
  EXPECT_EQ(a.indices_of_degree(4).size(), 1u);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      Vector p = a.multiply(a.basis(i + 1), a.basis(j + 1));
      Vector want(7);
      want[6] = q.gram()(i, j);
      EXPECT_EQ(p, want);
    }
  Vector x = degree2(a, {1, 2, 0, 3, 1});
  EXPECT_EQ(a.multiply(a.basis(0), x), x);
  EXPECT_THROW(mukai_toy_algebra(QuadraticSpace(RationalMatrix(2, 2))), ValidationError);
}

TEST(HardLefschetz, Examples) {
  auto a = mukai_toy_algebra(bbf_model(4));
  EXPECT_TRUE(has_hl(degree2(a, {1, 0, 1, 0}), a));
  EXPECT_FALSE(has_hl(degree2(a, {1, 0, 0, 0}), a));
  EXPECT_FALSE(has_hl(Vector(6), a));
}

TEST(Sl2, CompletionAndScaling) {
  auto a = mukai_toy_algebra(bbf_model(4));
  Vector x = degree2(a, {1, 0, 1, 0});
  auto t = sl2_complete(x, a);
  EXPECT_EQ(commutator(t.e, t.f), t.h);
  EXPECT_EQ(t.h, a.degree_operator());
  Vector x3 = x;
  for (auto& c : x3) c *= 3;
  auto t3 = sl2_complete(x3, a);
  EXPECT_EQ(t3.f, t.f * make_rational(1, 3));
  EXPECT_THROW(sl2_complete(degree2(a, {1, 0, 0, 0}), a), ValidationError);
}

TEST(TotalLie, SingleSampleIsSl2) {
  auto a = mukai_toy_algebra(bbf_model(4));
  EXPECT_EQ(total_lie_algebra(a, {degree2(a, {1, 0, 1, 0})}).dim(), 3u);
}

TEST(TotalLie, MatchesSoOfCompletion) {
  for (std::size_t b2 = 3; b2 <= 6; ++b2) {
    auto q = bbf_model(b2);
    auto a = mukai_toy_algebra(q);
    auto g = total_lie_algebra(a);
    EXPECT_EQ(g.dim(), (b2 + 2) * (b2 + 1) / 2) << b2;
    auto mukai = mukai_form_in_toy_order(q);
    for (const auto& x : g.basis) EXPECT_TRUE(is_in_so(x, mukai));
  }
}

TEST(Psi, Examples) {
  auto c = mukai_completion(bbf_model(4));
  EXPECT_TRUE(psi_matrix(Vector(4), c).is_zero());
  auto h = psi_h(c);
  EXPECT_EQ(h(c.v_index, c.v_index), Rational(-2));
  EXPECT_EQ(h(c.w_index, c.w_index), Rational(2));
  EXPECT_EQ(h.nonzeros(), 2u);
  EXPECT_TRUE(is_in_so(h, c.total));
  Vector e1 = hkmono::test::vec({1, 0, 0, 0});
  auto p = psi_matrix(e1, c);
  EXPECT_EQ(p(0, c.v_index), Rational(1));
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(p(c.w_index, j), c.base.gram()(0, j));
  EXPECT_TRUE(is_in_so(p, c.total));
  EXPECT_EQ(commutator(h, p), p * Rational(2));
}

TEST(Psi, MatchesToyAction) {
  // psi(e_x) is the multiplication operator e_x of the toy algebra, reordered
  auto q = bbf_model(5);
  auto a = mukai_toy_algebra(q);
  auto c = mukai_completion(q);
  Vector x = hkmono::test::vec({2, -1, 0, 1, 3});
  auto e = a.left_multiplication(toy_degree2(x));
  auto p = psi_matrix(x, c);
  // toy order (v, base, w) against completion order (base, v, w)
  auto idx = [&](std::size_t toy) { return toy == 0 ? c.v_index : (toy == 6 ? c.w_index : toy - 1); };
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(p(idx(i), idx(j)), e(i, j)) << i << "," << j;
}

TEST(Verbitsky, GradedModel) {
  auto one = verbitsky_graded_model(bbf_model(5), 1);
  ASSERT_EQ(one.size(), 3u);
  EXPECT_EQ(one[0].dim, 1);
  EXPECT_EQ(one[1].dim, 5);
  EXPECT_EQ(one[2].dim, 1);
  EXPECT_EQ(verbitsky_graded_model(bbf_model(5), 2)[2].dim, 15);
  EXPECT_EQ(verbitsky_graded_model(bbf_model(23), 2)[2].dim, 276);
  auto three = verbitsky_graded_model(bbf_model(7), 3);
  for (std::size_t i = 0; i <= 6; ++i) EXPECT_EQ(three[i].dim, three[6 - i].dim);
}

TEST(Verbitsky, AgreesWithBranching) {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto q = bbf_model(5);
    auto model = verbitsky_graded_model(q, n);
    auto amb = orthogonal_root_system(7), tgt = orthogonal_root_system(5);
    std::vector<long> mu(amb.rank, 0);
    mu[0] = static_cast<long>(n);
    auto g = grade_and_branch(HighestWeight::from_ints(amb, mu), tgt);
    for (std::size_t i = 0; i <= 2 * n; ++i) {
      HalfInt grade = HalfInt::from_int(static_cast<long>(i) - static_cast<long>(n));
      BigInt dim = 0;
      for (const auto& c : g.at(grade)) dim += c.mult * weyl_dimension(c.weight);
      EXPECT_EQ(dim, model[i].dim) << n << " " << i;
    }
  }
}
