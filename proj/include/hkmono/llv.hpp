#ifndef HKMONO_LLV_HPP
#define HKMONO_LLV_HPP

// Graded Frobenius algebras, Lefschetz sl2-triples, and the Lie algebra they generate.

#include "hkmono/matrix.hpp"
#include "hkmono/quad_space.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hkmono {

/// Commutative graded algebra with even degrees 0..2d, one-dimensional top piece, and a
/// full structure tensor on a homogeneous basis.
class GradedFrobeniusAlgebra {
 public:
  /// products[a][b] = coordinates of basis_a * basis_b.
  GradedFrobeniusAlgebra(std::size_t d, std::vector<int> degrees, std::vector<std::vector<Vector>> products)
      : d_(d), degrees_(std::move(degrees)), products_(std::move(products)) {
    const std::size_t n = degrees_.size();
    if (products_.size() != n) throw InputError("structure tensor size does not match the basis");
    std::size_t top_count = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (degrees_[a] < 0 || degrees_[a] > static_cast<int>(2 * d_) || degrees_[a] % 2)
        throw ValidationError("basis degrees must be even and within [0, 2d]");
      if (degrees_[a] == static_cast<int>(2 * d_)) {
        top_ = a;
        ++top_count;
      }
      if (products_[a].size() != n) throw InputError("structure tensor size does not match the basis");
      for (std::size_t b = 0; b < n; ++b) {
        if (products_[a][b].size() != n) throw InputError("structure tensor size does not match the basis");
        for (std::size_t c = 0; c < n; ++c)
          if (sgn(products_[a][b][c]) != 0 && degrees_[c] != degrees_[a] + degrees_[b])
            throw ValidationError("multiplication is not graded");
      }
    }
    if (top_count != 1) throw ValidationError("top degree piece must be one-dimensional");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (multiply(multiply(basis(a), basis(b)), basis(c)) != multiply(basis(a), multiply(basis(b), basis(c))))
            throw ValidationError("multiplication is not associative");
    if (rank(pairing_matrix()) != n) throw ValidationError("Frobenius pairing is degenerate");
  }

  std::size_t d() const { return d_; }
  std::size_t dim() const { return degrees_.size(); }
  const std::vector<int>& degrees() const { return degrees_; }

  Vector basis(std::size_t a) const {
    Vector e(dim());
    e.at(a) = 1;
    return e;
  }

  Vector multiply(const Vector& x, const Vector& y) const {
    Vector out(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
      if (sgn(x[a]) == 0) continue;
      for (std::size_t b = 0; b < dim(); ++b) {
        if (sgn(y[b]) == 0) continue;
        Rational s = x[a] * y[b];
        for (std::size_t c = 0; c < dim(); ++c)
          if (sgn(products_[a][b][c]) != 0) out[c] += s * products_[a][b][c];
      }
    }
    return out;
  }

  /// (x, y) -> top coefficient of x y.
  RationalMatrix pairing_matrix() const {
    RationalMatrix p(dim(), dim());
    for (std::size_t a = 0; a < dim(); ++a)
      for (std::size_t b = 0; b < dim(); ++b) p(a, b) = products_[a][b][top_];
    return p;
  }

  RationalMatrix left_multiplication(const Vector& x) const {
    RationalMatrix m(dim(), dim());
    for (std::size_t b = 0; b < dim(); ++b) {
      Vector col = multiply(x, basis(b));
      for (std::size_t c = 0; c < dim(); ++c) m(c, b) = col[c];
    }
    return m;
  }

  /// h acting by (i - d) on the degree-i piece.
  RationalMatrix degree_operator() const {
    RationalMatrix h(dim(), dim());
    for (std::size_t a = 0; a < dim(); ++a) h(a, a) = degrees_[a] - static_cast<int>(d_);
    return h;
  }

  std::vector<std::size_t> indices_of_degree(int deg) const {
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; a < dim(); ++a)
      if (degrees_[a] == deg) idx.push_back(a);
    return idx;
  }

  bool is_homogeneous_of_degree(const Vector& x, int deg) const {
    if (x.size() != dim()) return false;
    for (std::size_t a = 0; a < dim(); ++a)
      if (sgn(x[a]) != 0 && degrees_[a] != deg) return false;
    return true;
  }

 private:
  std::size_t d_;
  std::vector<int> degrees_;
  std::vector<std::vector<Vector>> products_;
  std::size_t top_ = 0;
};

/// Degree-4 algebra E v + H2 + E w with x y = q(x, y) w. Basis order: v, base, w.
inline GradedFrobeniusAlgebra mukai_toy_algebra(const QuadraticSpace& q) {
  const std::size_t b = q.dim();
  const std::size_t n = b + 2;
  std::vector<int> degrees(n, 2);
  degrees.front() = 0;
  degrees.back() = 4;
  std::vector<std::vector<Vector>> prod(n, std::vector<Vector>(n, Vector(n)));
  for (std::size_t a = 0; a < n; ++a) {
    prod[0][a][a] = 1;
    prod[a][0][a] = 1;
  }
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) prod[1 + i][1 + j][n - 1] = q.gram()(i, j);
  return GradedFrobeniusAlgebra(2, std::move(degrees), std::move(prod));
}

/// The Mukai-completed form written in the toy algebra's basis order (v, base, w).
inline QuadraticSpace mukai_form_in_toy_order(const QuadraticSpace& q) {
  const std::size_t b = q.dim();
  RationalMatrix g(b + 2, b + 2);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) g(1 + i, 1 + j) = q.gram()(i, j);
  g(0, b + 1) = kMukaiPlanePairing;
  g(b + 1, 0) = kMukaiPlanePairing;
  return QuadraticSpace(std::move(g));
}

/// Degree-2 vector of the toy algebra from base coordinates.
inline Vector toy_degree2(const Vector& x) {
  Vector v(x.size() + 2);
  for (std::size_t i = 0; i < x.size(); ++i) v[1 + i] = x[i];
  return v;
}

/// Hard Lefschetz: e_x^i is bijective from degree d - i to degree d + i for i = 1..d.
inline bool has_hl(const Vector& x, const GradedFrobeniusAlgebra& a) {
  if (!a.is_homogeneous_of_degree(x, 2)) throw ValidationError("Lefschetz element must have degree 2");
  const int d = static_cast<int>(a.d());
  RationalMatrix e = a.left_multiplication(x);
  RationalMatrix p = RationalMatrix::identity(a.dim());
  for (int i = 1; i <= d; ++i) {
    p = p * e;
    auto src = a.indices_of_degree(d - i);
    auto dst = a.indices_of_degree(d + i);
    if (src.size() != dst.size()) return false;
    if (src.empty()) continue;
    RationalMatrix block(dst.size(), src.size());
    for (std::size_t r = 0; r < dst.size(); ++r)
      for (std::size_t c = 0; c < src.size(); ++c) block(r, c) = p(dst[r], src[c]);
    if (rank(block) != src.size()) return false;
  }
  return true;
}

struct Sl2Triple {
  RationalMatrix e;
  RationalMatrix h;
  RationalMatrix f;
};

/// Solves [e, f] = h and [f, h] = 2f for f, with e = e_x and h the degree operator.
inline Sl2Triple sl2_complete(const Vector& x, const GradedFrobeniusAlgebra& a) {
  if (!has_hl(x, a)) throw ValidationError("element does not satisfy Hard Lefschetz");
  const std::size_t n = a.dim();
  RationalMatrix e = a.left_multiplication(x);
  RationalMatrix h = a.degree_operator();
  // unknown f, flattened row-major: f(i,j) -> i*n + j
  RationalMatrix sys(2 * n * n, n * n);
  Vector rhs(2 * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t r1 = i * n + j, r2 = n * n + i * n + j;
      rhs[r1] = h(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        // (e f - f e)(i,j) = sum_k e(i,k) f(k,j) - f(i,k) e(k,j)
        if (sgn(e(i, k)) != 0) sys(r1, k * n + j) += e(i, k);
        if (sgn(e(k, j)) != 0) sys(r1, i * n + k) -= e(k, j);
        // (f h - h f - 2f)(i,j)
        if (sgn(h(k, j)) != 0) sys(r2, i * n + k) += h(k, j);
        if (sgn(h(i, k)) != 0) sys(r2, k * n + j) -= h(i, k);
      }
      sys(r2, i * n + j) -= 2;
    }
  auto sol = solve(sys, rhs);
  if (!sol) throw ValidationError("sl2 completion has no solution");
  if (!kernel_basis(sys).empty()) throw ValidationError("sl2 completion is not unique");
  Sl2Triple t{e, h, unflatten(*sol, n, n)};
  if (commutator(t.e, t.f) != t.h || commutator(t.f, t.h) != t.f * Rational(2) ||
      commutator(t.e, t.h) != t.e * Rational(-2))
    throw ValidationError("sl2 relations fail");
  return t;
}

/// Degree-2 samples with Hard Lefschetz: an anchor, then each basis vector shifted by a
/// multiple of the anchor until Lefschetz holds.
inline std::vector<Vector> default_hl_samples(const GradedFrobeniusAlgebra& a) {
  auto idx = a.indices_of_degree(2);
  std::vector<Vector> cand;
  for (std::size_t i : idx) cand.push_back(a.basis(i));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      Vector s = a.basis(idx[i]);
      s[idx[j]] = 1;
      cand.push_back(s);
    }
  std::optional<Vector> anchor;
  for (const auto& c : cand)
    if (has_hl(c, a)) {
      anchor = c;
      break;
    }
  if (!anchor) throw ValidationError("no Hard Lefschetz element among the sample candidates");
  std::vector<Vector> out{*anchor};
  for (std::size_t i : idx)
    for (int c = 0; c <= 3; ++c) {
      Vector s = a.basis(i);
      for (std::size_t k = 0; k < s.size(); ++k) s[k] += (*anchor)[k] * c;
      if (has_hl(s, a)) {
        out.push_back(std::move(s));
        break;
      }
    }
  return out;
}

struct TotalLieAlgebra {
  std::vector<RationalMatrix> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Lie algebra generated by the sl2-triples of the samples, closed under brackets.
inline TotalLieAlgebra total_lie_algebra(const GradedFrobeniusAlgebra& a, const std::vector<Vector>& samples) {
  const std::size_t n = a.dim();
  SubspaceBasis span(n * n);
  std::vector<RationalMatrix> elems;
  auto add = [&](const RationalMatrix& m) {
    if (span.insert(flatten(m))) elems.push_back(m);
  };
  for (const auto& x : samples) {
    auto t = sl2_complete(x, a);
    add(t.e);
    add(t.h);
    add(t.f);
  }
  const std::size_t cap = n * n;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      add(commutator(elems[i], elems[j]));
      if (elems.size() > cap) throw ValidationError("closure exceeded dim End(A)");
    }
  }
  return TotalLieAlgebra{std::move(elems)};
}

inline TotalLieAlgebra total_lie_algebra(const GradedFrobeniusAlgebra& a) {
  return total_lie_algebra(a, default_hl_samples(a));
}

/// psi(e_x) on the completion, basis order base, v, w: v -> x, y -> q(x, y) w, w -> 0.
inline RationalMatrix psi_matrix(const Vector& x, const MukaiCompletion& c) {
  const std::size_t b = c.base.dim();
  if (x.size() != b) throw InputError("psi_matrix: vector length does not match the base");
  RationalMatrix m(b + 2, b + 2);
  for (std::size_t i = 0; i < b; ++i) m(i, c.v_index) = x[i];
  Vector gx = c.base.gram() * x;
  for (std::size_t j = 0; j < b; ++j) m(c.w_index, j) = gx[j];
  return m;
}

/// psi(h) = diag(0, .., 0, -2, 2).
inline RationalMatrix psi_h(const MukaiCompletion& c) {
  RationalMatrix m(c.total.dim(), c.total.dim());
  m(c.v_index, c.v_index) = -2;
  m(c.w_index, c.w_index) = 2;
  return m;
}

struct VerbitskyPiece {
  std::size_t degree;     // 2i
  std::size_t sym_power;  // min(i, 2n - i)
  BigInt dim;
};

/// Degree 2i carries Sym^{min(i, 2n-i)} of the degree-2 space.
inline std::vector<VerbitskyPiece> verbitsky_graded_model(const QuadraticSpace& q, std::size_t n) {
  if (n < 1) throw ValidationError("verbitsky_graded_model requires n >= 1");
  std::vector<VerbitskyPiece> out;
  for (std::size_t i = 0; i <= 2 * n; ++i) {
    std::size_t k = std::min(i, 2 * n - i);
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), q.dim() + k - 1, k);
    out.push_back({2 * i, k, c});
  }
  return out;
}

}  // namespace hkmono

#endif
