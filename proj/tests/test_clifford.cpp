#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace hkmono;
using hkmono::test::mat;

namespace {

CliffordAlgebra diagonal_algebra(std::initializer_list<long> squares) {
  RationalMatrix g(squares.size(), squares.size());
  std::size_t i = 0;
  for (long s : squares) {
    g(i, i) = s;
    ++i;
  }
  return CliffordAlgebra(QuadraticSpace(g));
}

std::map<int, std::size_t> to_small(const BigProfile& p) {
  std::map<int, std::size_t> out;
  for (const auto& [k, v] : p) out[k] = v.get_ui();
  return out;
}

}  // namespace

TEST(Clifford, Dimensions) {
  auto cl = diagonal_algebra({1, 2, 3});
  EXPECT_EQ(cl.dim(), 8u);
  EXPECT_EQ(cl.parity_indices(false).size(), 4u);
  EXPECT_EQ(cl.degree_indices(2).size(), 3u);
  EXPECT_THROW(CliffordAlgebra(bbf_model(13)), ValidationError);
}

TEST(Clifford, Products) {
  auto cl = diagonal_algebra({3, 5, 7});
  auto e1 = cl.generator(0), e2 = cl.generator(1), e3 = cl.generator(2);
  auto sq = cl.multiply(e1, e1);
  EXPECT_EQ(sq, [&] {
    auto o = cl.one();
    o[0] = 3;
    return o;
  }());
  auto e12 = cl.multiply(e1, e2);
  EXPECT_EQ(e12, cl.basis_element(0b011));
  auto e21 = cl.multiply(e2, e1);
  for (auto& x : e21) x = -x;
  EXPECT_EQ(e21, e12);
  auto e23 = cl.multiply(e2, e3);
  auto prod = cl.multiply(e12, e23);
  auto want = cl.basis_element(0b101);
  want[0b101] = 5;
  EXPECT_EQ(prod, want);
}

TEST(Clifford, NonOrthogonalRelations) {
  CliffordAlgebra cl(standard_bbf_gram(2, true));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      auto s = cl.multiply(cl.generator(i), cl.generator(j));
      auto t = cl.multiply(cl.generator(j), cl.generator(i));
      for (std::size_t k = 0; k < s.size(); ++k) s[k] += t[k];
      auto want = Vector(cl.dim());
      want[0] = cl.base().gram()(i, j) * 2;
      EXPECT_EQ(s, want);
    }
}

TEST(Clifford, RegularRepresentations) {
  CliffordAlgebra plane(standard_bbf_gram(1, false));
  EXPECT_EQ(plane.left_regular_rep(plane.one()), RationalMatrix::identity(4));
  auto e1 = plane.generator(0);
  auto l = plane.left_regular_rep(e1);
  EXPECT_EQ(l * l, RationalMatrix::identity(4) * plane.base().gram()(0, 0));
  auto cl = diagonal_algebra({1, -1, 2});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      auto a = cl.left_regular_rep(cl.generator(i)), b = cl.right_regular_rep(cl.generator(j));
      EXPECT_EQ(a * b, b * a);
    }
}

TEST(Clifford, CommutantOfRightMultiplications) {
  for (std::size_t m = 2; m <= 6; ++m) {
    CliffordAlgebra cl(bbf_model(m));
    EXPECT_EQ(cl.right_commutant_dim(), cl.dim()) << m;
  }
  EXPECT_EQ(diagonal_algebra({1, 2, 3, 5}).right_commutant_dim(), 16u);
}

TEST(Clifford, DerivationAction) {
  CliffordAlgebra cl(bbf_model(5));
  EXPECT_TRUE(cl.so_derivation_action(RationalMatrix(5, 5)).is_zero());
  auto n = normal_form({ReductionType::II, 5}).matrix();
  auto d = cl.so_derivation_action(n);
  // on degree-1 elements it is N itself
  for (std::size_t i = 0; i < 5; ++i) {
    Vector image = d * cl.generator(i);
    EXPECT_EQ(image, cl.vector_element(n.column(i)));
  }
  EXPECT_THROW(cl.so_derivation_action(RationalMatrix::identity(5)), ValidationError);
}

TEST(Clifford, BridgeTypeThreeSmall) {
  auto p = primitive_part(normal_form({ReductionType::III, 4}));
  CliffordAlgebra cl(*p.space());
  auto h = jm_cocharacter(p).h;
  EXPECT_EQ(cl.even_eigen_dims(h), (std::map<int, std::size_t>{{-2, 1}, {0, 2}, {2, 1}}));
}

TEST(Clifford, BridgeMatchesCombinatorics) {
  for (auto t : {ReductionType::II, ReductionType::III})
    for (std::size_t b2 = 5; b2 <= 8; ++b2) {
      auto p = primitive_part(normal_form({t, b2}));
      CliffordAlgebra cl(*p.space());
      auto beta = graded_dims(p);
      EXPECT_EQ(cl.even_eigen_dims(jm_cocharacter(p).h), to_small(wedge_eigen_multiset(beta, SubsetParity::Even)))
          << to_string(t) << " " << b2;
    }
}

TEST(Spin, Dimensions) {
  EXPECT_EQ(spin_rep(standard_bbf_gram(1, false)).dim, 2u);
  auto s7 = spin_rep(standard_bbf_gram(3, true));
  EXPECT_EQ(s7.dim, 8u);
  EXPECT_TRUE(s7.verify_relations());
  EXPECT_EQ(s7.image_dim(true), 64u);
  auto s6 = spin_rep(bbf_model(6));
  EXPECT_EQ(s6.dim, 8u);
  EXPECT_TRUE(s6.verify_relations());
  EXPECT_EQ(s6.image_dim(false), 64u);
  EXPECT_EQ(s6.image_dim(true), 32u);
}

TEST(Spin, HalfSpinSplitting) {
  auto s6 = spin_rep(bbf_model(6));
  auto n = normal_form({ReductionType::III, 6}).matrix();
  auto x = s6.so_action(n);
  EXPECT_EQ(s6.half(x, false).rows(), 4u);
  EXPECT_EQ(s6.half(x, true).rows(), 4u);
  EXPECT_THROW(s6.half(s6.generators[0], false), ValidationError);
}

TEST(Spin, TypeNuOnSevenDimensionalSpin) {
  auto s = spin_rep(bbf_model(7));
  std::vector<std::size_t> got;
  for (auto t : {ReductionType::I, ReductionType::II, ReductionType::III})
    got.push_back(nilpotency_index(s.so_action(normal_form({t, 7}).matrix())));
  EXPECT_EQ(got, (std::vector<std::size_t>{0, 1, 1}));
}

TEST(Spin, IsLieAlgebraMap) {
  auto q = bbf_model(7);
  auto s = spin_rep(q);
  auto basis = so_basis(q);
  for (std::size_t i = 0; i < basis.size(); i += 5)
    for (std::size_t j = 1; j < basis.size(); j += 7)
      EXPECT_EQ(commutator(s.so_action(basis[i]), s.so_action(basis[j])), s.so_action(commutator(basis[i], basis[j])));
}

TEST(Spin, AgreesWithHalfIntegerWeights) {
  for (std::size_t b2 = 5; b2 <= 9; ++b2) {
    auto s = spin_rep(bbf_model(b2));
    auto rs = orthogonal_root_system(b2);
    std::vector<HalfInt> half(rs.rank, HalfInt::from_twice(1));
    for (auto t : {ReductionType::II, ReductionType::III}) {
      auto n = normal_form({t, b2});
      auto cochar = jm_cocharacter(n).coords;
      auto x = s.so_action(n.matrix());
      if (b2 % 2 == 0) {
        x = s.half(x, false);
      }
      // for even b2 the upper half carries one of the two half-spin weights
      std::size_t want = nu_on_irrep(HighestWeight(rs, half), cochar).twice() / 2;
      if (b2 % 2 == 0) {
        auto mirror = half;
        mirror.back() = HalfInt::from_twice(-1);
        std::size_t other = nu_on_irrep(HighestWeight(rs, mirror), cochar).twice() / 2;
        std::size_t got = nilpotency_index(x);
        EXPECT_TRUE(got == want || got == other) << b2;
      } else {
        EXPECT_EQ(nilpotency_index(x), want) << b2;
      }
    }
  }
}

TEST(Spin, RejectsFormsWithoutSplitting) {
  EXPECT_THROW(spin_rep(QuadraticSpace(mat({{1, 0}, {0, 1}}))), ValidationError);
}
