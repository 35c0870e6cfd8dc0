#ifndef HKMONO_NILPOTENT_HPP
#define HKMONO_NILPOTENT_HPP

// Nilpotent operators: nilpotency index, monodromy weight filtration, graded
// dimensions, Jacobson-Morozov cocharacters, and the reduction-type normal forms.

#include "hkmono/powers.hpp"
#include "hkmono/quad_space.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hkmono {

enum class ReductionType { I, II, III };

inline std::string to_string(ReductionType t) {
  switch (t) {
    case ReductionType::I: return "I";
    case ReductionType::II: return "II";
    case ReductionType::III: return "III";
  }
  return "?";
}

inline ReductionType parse_reduction_type(const std::string& s) {
  if (s == "I") return ReductionType::I;
  if (s == "II") return ReductionType::II;
  if (s == "III") return ReductionType::III;
  throw InputError("unknown reduction type '" + s + "' (expected I, II or III)");
}

/// Nilpotency index of the degree-2 operator for each reduction type.
inline std::size_t expected_nu(ReductionType t) {
  return t == ReductionType::I ? 0 : (t == ReductionType::II ? 1 : 2);
}

/// Exact nilpotent matrix, optionally tied to a form it must be skew for.
class NilpotentOperator {
 public:
  explicit NilpotentOperator(RationalMatrix m, std::optional<QuadraticSpace> space = std::nullopt)
      : matrix_(std::move(m)), space_(std::move(space)) {
    if (!matrix_.is_square()) throw InputError("operator must be square");
    nu_ = nilpotency_index(matrix_);  // throws if not nilpotent
    if (space_) {
      if (space_->dim() != matrix_.rows()) throw InputError("operator size does not match the quadratic space");
      if (!is_in_so(matrix_, *space_)) throw ValidationError("operator is not skew for the given form");
      // so of a 2-dimensional nondegenerate space is a torus: only the zero nilpotent lives there.
      if (space_->dim() == 2 && !matrix_.is_zero())
        throw ValidationError("nonzero nilpotent in so of a 2-dimensional space");
    }
  }

  const RationalMatrix& matrix() const { return matrix_; }
  const std::optional<QuadraticSpace>& space() const { return space_; }
  std::size_t dim() const { return matrix_.rows(); }
  std::size_t nu() const { return nu_; }

 private:
  RationalMatrix matrix_;
  std::optional<QuadraticSpace> space_;
  std::size_t nu_ = 0;
};

inline std::size_t nu(const NilpotentOperator& n) { return n.nu(); }

/// Number of Jordan blocks of each size s >= 1.
inline std::map<std::size_t, std::size_t> jordan_block_sizes(const RationalMatrix& n) {
  auto rk = power_ranks(n);
  std::map<std::size_t, std::size_t> blocks;
  for (std::size_t s = 1; s + 1 < rk.size(); ++s) {
    long c = static_cast<long>(rk[s - 1]) - 2 * static_cast<long>(rk[s]) + static_cast<long>(rk[s + 1]);
    if (c > 0) blocks[s] = static_cast<std::size_t>(c);
  }
  return blocks;
}

using GradedDims = std::map<int, std::size_t>;

/// r_i = dim gr_i of the weight filtration, read off from the rank sequence of powers.
inline GradedDims graded_dims(const NilpotentOperator& n) {
  GradedDims r;
  for (auto [s, count] : jordan_block_sizes(n.matrix()))
    for (int w = static_cast<int>(s) - 1; w >= -(static_cast<int>(s) - 1); w -= 2) r[w] += count;
  return r;
}

/// A Jordan chain top, N^0 top .. N^(length-1) top.
struct JordanChain {
  Vector top;
  std::size_t length;
};

/// Chain tops adapted to the kernel flag of N, longest first.
inline std::vector<JordanChain> jordan_chains(const NilpotentOperator& n) {
  const std::size_t d = n.dim();
  const std::size_t top_len = n.nu() + 1;
  std::vector<RationalMatrix> powers{RationalMatrix::identity(d)};
  for (std::size_t j = 1; j <= top_len; ++j) powers.push_back(powers.back() * n.matrix());
  std::vector<std::vector<Vector>> kernels(top_len + 1);
  for (std::size_t j = 1; j <= top_len; ++j) kernels[j] = kernel_basis(powers[j]);

  std::vector<JordanChain> chains;
  for (std::size_t s = top_len; s >= 1; --s) {
    SubspaceBasis span(d);
    for (const auto& v : kernels[s - 1]) span.insert(v);
    for (const auto& c : chains) span.insert(powers[c.length - s] * c.top);
    for (const auto& u : kernels[s])
      if (span.insert(u)) chains.push_back({u, s});
  }
  return chains;
}

/// Increasing filtration M_lo .. M_hi (lo = -(nu+1), hi = nu), M_lo = 0 and M_hi = V.
struct WeightFiltration {
  int lo = 0;
  int hi = 0;
  std::vector<std::vector<Vector>> subspaces;  // subspaces[i - lo] is a basis of M_i
  GradedDims graded;

  const std::vector<Vector>& at(int i) const {
    static const std::vector<Vector> empty;
    if (i < lo) return empty;
    if (i > hi) return subspaces.back();
    return subspaces[static_cast<std::size_t>(i - lo)];
  }
  std::size_t dim_at(int i) const { return at(i).size(); }
};

inline WeightFiltration weight_filtration(const NilpotentOperator& n) {
  const int nu = static_cast<int>(n.nu());
  WeightFiltration f;
  f.lo = -(nu + 1);
  f.hi = nu;
  // basis vectors with their chain weight; N lowers the weight by 2
  std::vector<std::pair<int, Vector>> weighted;
  for (const auto& c : jordan_chains(n)) {
    Vector v = c.top;
    for (std::size_t j = 0; j < c.length; ++j) {
      weighted.emplace_back(static_cast<int>(c.length) - 1 - 2 * static_cast<int>(j), v);
      v = n.matrix() * v;
    }
  }
  for (int i = f.lo; i <= f.hi; ++i) {
    std::vector<Vector> basis;
    for (const auto& [w, v] : weighted)
      if (w <= i) basis.push_back(v);
    f.subspaces.push_back(std::move(basis));
  }
  for (int i = f.lo + 1; i <= f.hi; ++i) {
    std::size_t r = f.dim_at(i) - f.dim_at(i - 1);
    if (r > 0) f.graded[i] = r;
  }
  return f;
}

/// Checks N M_i in M_{i-2}, and that N^i induces gr_i -> gr_{-i} bijectively for i >= 0.
inline bool verify_weight_filtration(const NilpotentOperator& n, const WeightFiltration& f) {
  const std::size_t d = n.dim();
  auto contained = [&](const std::vector<Vector>& vs, const std::vector<Vector>& in) {
    SubspaceBasis s(d);
    for (const auto& v : in) s.insert(v);
    for (const auto& v : vs)
      if (!s.contains(v)) return false;
    return true;
  };
  for (int i = f.lo; i <= f.hi; ++i) {
    std::vector<Vector> image;
    for (const auto& v : f.at(i)) image.push_back(n.matrix() * v);
    if (!contained(image, f.at(i - 2))) return false;
  }
  if (f.dim_at(f.lo) != 0 || f.dim_at(f.hi) != d) return false;
  RationalMatrix p = RationalMatrix::identity(d);
  for (int i = 0; i <= f.hi; ++i) {
    if (i > 0) p = p * n.matrix();
    std::size_t ri = f.dim_at(i) - f.dim_at(i - 1);
    std::size_t rmi = f.dim_at(-i) - f.dim_at(-i - 1);
    if (ri != rmi) return false;
    SubspaceBasis s(d);
    for (const auto& v : f.at(-i - 1)) s.insert(v);
    std::size_t base = s.size();
    for (const auto& v : f.at(i)) {
      Vector img = p * v;
      s.insert(img);
    }
    if (!contained(s.vectors(), f.at(-i))) return false;
    if (s.size() - base != rmi) return false;
  }
  return true;
}

/// Output of the Jacobson-Morozov construction.
struct JmCocharacter {
  std::vector<int> eigenvalues;  // multiset, descending
  std::vector<int> coords;       // positive eigenvalues, descending, zero padded to rank floor(d/2)
  RationalMatrix h;              // semisimple, [h, N] = 2N, skew for the form
};

namespace detail {

/// Adjoint involution X -> -G^{-1} X^T G; so(G) is its fixed locus.
inline RationalMatrix so_involution(const RationalMatrix& x, const QuadraticSpace& q, const RationalMatrix& ginv) {
  return -(ginv * x.transpose() * q.gram());
}

}  // namespace detail

/// Semisimple h with [h, N] = 2N inside so(q), eigenvalue -w on chain vectors of weight w.
///
/// The chain-diagonal h0 satisfies [h0, N] = 2N and lies in the image of ad N, but need not
/// be skew. Averaging with the adjoint involution keeps both properties and lands in so(q),
/// so the result is the neutral element of an sl2-triple of so(q) through N.
inline JmCocharacter jm_cocharacter(const NilpotentOperator& n) {
  if (!n.space()) throw ValidationError("jm_cocharacter requires the operator's quadratic space");
  const std::size_t d = n.dim();
  std::vector<Vector> cols;
  std::vector<Rational> diag;
  std::vector<int> eig;
  for (const auto& c : jordan_chains(n)) {
    Vector v = c.top;
    for (std::size_t j = 0; j < c.length; ++j) {
      int w = static_cast<int>(c.length) - 1 - 2 * static_cast<int>(j);
      cols.push_back(v);
      diag.emplace_back(-w);
      eig.push_back(-w);
      v = n.matrix() * v;
    }
  }
  RationalMatrix p = RationalMatrix::from_columns(d, cols);
  RationalMatrix h0 = p * RationalMatrix::diagonal(diag) * inverse(p);
  RationalMatrix ginv = inverse(n.space()->gram());
  RationalMatrix h = (h0 + detail::so_involution(h0, *n.space(), ginv)) * Rational(1, 2);

  std::sort(eig.begin(), eig.end(), std::greater<>());
  JmCocharacter out{eig, {}, h};
  for (int e : eig)
    if (e > 0) out.coords.push_back(e);
  out.coords.resize(std::max(out.coords.size(), d / 2), 0);
  return out;
}

/// Multiplicity of each eigenvalue of a diagonalizable h with the given candidate spectrum,
/// computed as kernel dimensions; throws if the eigenspaces do not fill the space.
inline std::map<int, std::size_t> integer_eigenspace_dims(const RationalMatrix& h, const std::vector<int>& candidates) {
  std::map<int, std::size_t> dims;
  std::size_t total = 0;
  for (int lam : candidates) {
    if (dims.count(lam)) continue;
    RationalMatrix shifted = h - RationalMatrix::identity(h.rows()) * Rational(lam);
    std::size_t k = h.rows() - rank(shifted);
    if (k > 0) dims[lam] = k;
    total += k;
  }
  if (total != h.rows()) throw ValidationError("operator is not diagonalizable over the candidate spectrum");
  return dims;
}

struct NormalFormTag {
  ReductionType type;
  std::size_t b2;
};

inline void validate_tag(const NormalFormTag& tag) {
  std::size_t min_b2 = tag.type == ReductionType::I ? 3 : (tag.type == ReductionType::II ? 5 : 4);
  if (tag.b2 < min_b2)
    throw ValidationError("Type " + to_string(tag.type) + " normal form requires b2 >= " + std::to_string(min_b2));
}

/// Normalized monodromy operator on the model form of the given b2.
/// Basis order e_1..e_r, e'_1..e'_r (, e_{r+1}).
inline NilpotentOperator normal_form(const NormalFormTag& tag) {
  validate_tag(tag);
  QuadraticSpace q = bbf_model(tag.b2);
  const std::size_t d = tag.b2;
  const std::size_t r = d / 2;
  RationalMatrix n(d, d);
  const std::size_t e1 = 0, e2 = 1, f1 = r, f2 = r + 1;  // f_i denotes e'_i
  switch (tag.type) {
    case ReductionType::I:
      break;
    case ReductionType::II:
      n(f2, e1) = 1;   // e1 -> e'2
      n(f1, e2) = -1;  // e2 -> -e'1
      break;
    case ReductionType::III:
      n(e2, e1) = 1;   // e1 -> e2 + e'2
      n(f2, e1) = 1;
      n(f1, e2) = -1;  // e2 -> -e'1
      n(f1, f2) = -1;  // e'2 -> -e'1
      break;
  }
  return NilpotentOperator(std::move(n), std::move(q));
}

/// Restriction of N to the orthogonal complement of an anisotropic vector in ker N,
/// i.e. a primitive part. The vector is chosen among kernel basis vectors and their
/// pairwise sums.
inline NilpotentOperator primitive_part(const NilpotentOperator& n) {
  if (!n.space()) throw ValidationError("primitive_part requires a quadratic space");
  const QuadraticSpace& q = *n.space();
  auto ker = kernel_basis(n.matrix());
  std::optional<Vector> ell;
  for (std::size_t i = 0; i < ker.size() && !ell; ++i) {
    if (sgn(q.pair(ker[i], ker[i])) != 0) ell = ker[i];
    for (std::size_t j = i + 1; j < ker.size() && !ell; ++j) {
      Vector s = ker[i];
      for (std::size_t k = 0; k < s.size(); ++k) s[k] += ker[j][k];
      if (sgn(q.pair(s, s)) != 0) ell = s;
    }
  }
  if (!ell) throw ValidationError("no anisotropic invariant vector found");
  auto basis = q.orthogonal_complement({*ell});
  QuadraticSpace sub = q.restricted(basis);
  RationalMatrix b = RationalMatrix::from_columns(q.dim(), basis);
  // coordinates of N b_j in the basis b
  RationalMatrix nb = n.matrix() * b;
  RationalMatrix restricted(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto x = solve(b, nb.column(j));
    if (!x) throw ValidationError("complement is not invariant");
    for (std::size_t i = 0; i < basis.size(); ++i) restricted(i, j) = (*x)[i];
  }
  return NilpotentOperator(std::move(restricted), std::move(sub));
}

}  // namespace hkmono

#endif
