#ifndef HKMONO_QUAD_SPACE_HPP
#define HKMONO_QUAD_SPACE_HPP

#include "hkmono/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hkmono {

/// Finite-dimensional rational space with a nondegenerate symmetric bilinear form,
/// given by its Gram matrix in the standard basis.
class QuadraticSpace {
 public:
  explicit QuadraticSpace(RationalMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_square()) throw InputError("Gram matrix must be square");
    if (gram_ != gram_.transpose()) throw ValidationError("Gram matrix is not symmetric");
    if (rank(gram_) != gram_.rows()) throw ValidationError("bilinear form is degenerate");
  }

  std::size_t dim() const { return gram_.rows(); }
  const RationalMatrix& gram() const { return gram_; }

  Rational pair(const Vector& x, const Vector& y) const { return dot(x, gram_ * y); }

  QuadraticSpace scaled(const Rational& c) const {
    if (sgn(c) == 0) throw ValidationError("cannot scale a form by zero");
    return QuadraticSpace(gram_ * c);
  }

  /// Basis of the orthogonal complement of span(vs).
  std::vector<Vector> orthogonal_complement(const std::vector<Vector>& vs) const {
    if (vs.empty()) {
      std::vector<Vector> all;
      for (std::size_t i = 0; i < dim(); ++i) {
        Vector e(dim());
        e[i] = 1;
        all.push_back(std::move(e));
      }
      return all;
    }
    std::vector<Vector> rows;
    for (const auto& v : vs) rows.push_back(gram_ * v);
    return kernel_basis(RationalMatrix::from_rows(dim(), rows));
  }

  /// Form restricted to span(basis), as a new space in that basis.
  QuadraticSpace restricted(const std::vector<Vector>& basis) const {
    RationalMatrix b = RationalMatrix::from_columns(dim(), basis);
    return QuadraticSpace(b.transpose() * gram_ * b);
  }

 private:
  RationalMatrix gram_;
};

/// The block form [[0, I_r], [I_r, 0]] (and an extra diagonal 1 when odd), in the basis
/// e_1..e_r, e'_1..e'_r (, e_{r+1}).
inline QuadraticSpace standard_bbf_gram(std::size_t r, bool odd) {
  if (r == 0) throw ValidationError("standard_bbf_gram requires r >= 1");
  const std::size_t d = 2 * r + (odd ? 1 : 0);
  RationalMatrix g(d, d);
  for (std::size_t i = 0; i < r; ++i) {
    g(i, r + i) = 1;
    g(r + i, i) = 1;
  }
  if (odd) g(2 * r, 2 * r) = 1;
  return QuadraticSpace(std::move(g));
}

/// The model space of second cohomology with the given b2 (r = floor(b2/2)).
inline QuadraticSpace bbf_model(std::size_t b2) {
  if (b2 < 2) throw ValidationError("b2 must be at least 2");
  return standard_bbf_gram(b2 / 2, b2 % 2 == 1);
}

/// The base extended by a hyperbolic plane spanned by v and w. Basis order: base, v, w.
///
/// The plane is taken with <v,w> = -1. With this sign the operators
/// v -> x, y -> <x,y> w, w -> 0 are skew for the total form, which is what makes the
/// degree-raising operators of the Lefschetz algebra land in the orthogonal algebra.
struct MukaiCompletion {
  QuadraticSpace base;
  QuadraticSpace total;
  std::size_t v_index;
  std::size_t w_index;
};

inline constexpr long kMukaiPlanePairing = -1;

inline MukaiCompletion mukai_completion(const QuadraticSpace& q) {
  const std::size_t d = q.dim();
  RationalMatrix g(d + 2, d + 2);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = q.gram()(i, j);
  g(d, d + 1) = kMukaiPlanePairing;
  g(d + 1, d) = kMukaiPlanePairing;
  return MukaiCompletion{q, QuadraticSpace(std::move(g)), d, d + 1};
}

/// True iff N^T G + G N = 0.
inline bool is_in_so(const RationalMatrix& n, const QuadraticSpace& q) {
  if (!n.is_square() || n.rows() != q.dim()) throw InputError("is_in_so: operator size does not match the space");
  return (n.transpose() * q.gram() + q.gram() * n).is_zero();
}

/// Basis G^{-1}(E_ij - E_ji), i < j, of the orthogonal Lie algebra of the form.
inline std::vector<RationalMatrix> so_basis(const QuadraticSpace& q) {
  const std::size_t d = q.dim();
  RationalMatrix ginv = inverse(q.gram());
  std::vector<RationalMatrix> out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      RationalMatrix y(d, d);
      y(i, j) = 1;
      y(j, i) = -1;
      out.push_back(ginv * y);
    }
  return out;
}

}  // namespace hkmono

#endif
