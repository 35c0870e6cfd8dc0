#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace hkmono;
using hkmono::test::mat;

namespace {

Rational det(RationalMatrix m) {
  // cofactor-free: product of pivots from exact elimination
  const std::size_t n = m.rows();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

}  // namespace

TEST(StandardGram, EvenOddAndSmallest) {
  EXPECT_EQ(standard_bbf_gram(2, false).gram(), mat({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
  auto odd = standard_bbf_gram(2, true);
  EXPECT_EQ(odd.dim(), 5u);
  EXPECT_EQ(odd.gram()(4, 4), Rational(1));
  EXPECT_EQ(odd.gram().block(0, 0, 4, 4), standard_bbf_gram(2, false).gram());
  auto plane = standard_bbf_gram(1, false);
  EXPECT_EQ(plane.dim(), 2u);
  EXPECT_EQ(rank(plane.gram()), 2u);
  EXPECT_THROW(standard_bbf_gram(0, false), ValidationError);
}

TEST(QuadraticSpace, RejectsBadGram) {
  EXPECT_THROW(QuadraticSpace(mat({{1, 2}, {3, 4}})), ValidationError);
  EXPECT_THROW(QuadraticSpace(mat({{1, 1}, {1, 1}})), ValidationError);
  EXPECT_THROW(QuadraticSpace(mat({{1, 1, 0}})), InputError);
}

TEST(MukaiCompletion, DeterminantAndDims) {
  auto c = mukai_completion(standard_bbf_gram(2, false));
  EXPECT_EQ(c.total.dim(), 6u);
  Rational d = det(c.total.gram());
  EXPECT_TRUE(d == 1 || d == -1);
  EXPECT_EQ(c.total.gram()(c.v_index, c.w_index), Rational(kMukaiPlanePairing));
  EXPECT_EQ(c.total.gram()(c.v_index, c.v_index), Rational(0));
  EXPECT_EQ(c.total.gram()(c.w_index, c.w_index), Rational(0));

  auto one = mukai_completion(QuadraticSpace(mat({{2}})));
  EXPECT_EQ(one.total.dim(), 3u);
  EXPECT_EQ(mukai_completion(standard_bbf_gram(11, true)).total.dim(), 25u);
  EXPECT_EQ(mukai_completion(bbf_model(23)).total.dim(), 25u);
}

TEST(IsInSo, Examples) {
  auto q = standard_bbf_gram(2, true);
  EXPECT_TRUE(is_in_so(RationalMatrix(5, 5), q));
  EXPECT_FALSE(is_in_so(RationalMatrix::identity(5), q));
  for (std::size_t b2 = 5; b2 <= 12; ++b2) {
    auto n = normal_form({ReductionType::II, b2});
    EXPECT_TRUE(is_in_so(n.matrix(), bbf_model(b2))) << b2;
  }
}

TEST(SoBasis, Dimensions) {
  EXPECT_EQ(so_basis(standard_bbf_gram(1, false)).size(), 1u);
  EXPECT_EQ(so_basis(standard_bbf_gram(2, true)).size(), 10u);
  auto q6 = mukai_completion(standard_bbf_gram(2, false)).total;
  auto basis = so_basis(q6);
  EXPECT_EQ(basis.size(), 15u);
  std::vector<Vector> flat;
  for (const auto& b : basis) {
    EXPECT_TRUE(is_in_so(b, q6));
    flat.push_back(flatten(b));
  }
  EXPECT_EQ(span_rank(flat, 36), 15u);
}

TEST(QuadraticSpace, ComplementAndRestriction) {
  auto q = standard_bbf_gram(2, true);
  Vector ell(5);
  ell[4] = 1;
  auto comp = q.orthogonal_complement({ell});
  EXPECT_EQ(comp.size(), 4u);
  for (const auto& v : comp) EXPECT_EQ(q.pair(v, ell), Rational(0));
  EXPECT_EQ(q.restricted(comp).dim(), 4u);
}
