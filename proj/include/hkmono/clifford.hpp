#ifndef HKMONO_CLIFFORD_HPP
#define HKMONO_CLIFFORD_HPP

// Clifford algebras of rational quadratic spaces in an orthogonal subset basis, their
// regular representations, and spin modules built on a maximal isotropic subspace.

#include "hkmono/matrix.hpp"
#include "hkmono/powers.hpp"
#include "hkmono/quad_space.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <optional>
#include <string>
#include <vector>

namespace hkmono {

inline constexpr std::size_t kMaxCliffordGenerators = 12;

namespace detail {

/// Columns F with F^T G F diagonal. Isotropic leftovers are fixed by adding a partner.
inline RationalMatrix orthogonal_basis(const QuadraticSpace& q, std::vector<Rational>& diag) {
  const std::size_t m = q.dim();
  std::vector<Vector> work;
  for (std::size_t i = 0; i < m; ++i) {
    Vector e(m);
    e[i] = 1;
    work.push_back(std::move(e));
  }
  std::vector<Vector> out;
  diag.clear();
  while (!work.empty()) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < work.size() && !pick; ++i)
      if (sgn(q.pair(work[i], work[i])) != 0) pick = i;
    if (!pick) {
      for (std::size_t i = 0; i < work.size() && !pick; ++i)
        for (std::size_t j = i + 1; j < work.size() && !pick; ++j)
          if (sgn(q.pair(work[i], work[j])) != 0) {
            for (std::size_t k = 0; k < m; ++k) work[i][k] += work[j][k];
            pick = i;
          }
    }
    if (!pick) throw ValidationError("orthogonalization failed: form is degenerate");
    Vector f = work[*pick];
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(*pick));
    Rational qf = q.pair(f, f);
    for (auto& w : work) {
      Rational c = q.pair(w, f) / qf;
      if (sgn(c) == 0) continue;
      for (std::size_t k = 0; k < m; ++k) w[k] -= c * f[k];
    }
    out.push_back(std::move(f));
    diag.push_back(qf);
  }
  return RationalMatrix::from_columns(m, out);
}

/// Sign and scalar of e_S e_T = coef * e_{S xor T} for orthogonal generators.
inline Rational monomial_product(std::uint32_t s, std::uint32_t t, const std::vector<Rational>& q) {
  int swaps = 0;
  for (std::uint32_t rest = t; rest; rest &= rest - 1) {
    int b = std::countr_zero(rest);
    swaps += std::popcount(s >> (b + 1));
  }
  Rational c = (swaps % 2) ? -1 : 1;
  for (std::uint32_t both = s & t; both; both &= both - 1) c *= q[static_cast<std::size_t>(std::countr_zero(both))];
  return c;
}

inline std::optional<Rational> rational_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  BigInt n = x.get_num(), d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Rational r;
  mpz_sqrt(r.get_num().get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(r.get_den().get_mpz_t(), d.get_mpz_t());
  r.canonicalize();
  return r;
}

}  // namespace detail

/// Cl(V, q) with basis e_S, S a subset of an orthogonal basis f_1..f_m of V (bitmask index).
class CliffordAlgebra {
 public:
  using Element = Vector;

  explicit CliffordAlgebra(QuadraticSpace base) : base_(std::move(base)) {
    if (base_.dim() > kMaxCliffordGenerators)
      throw ValidationError("explicit Clifford algebras are limited to " + std::to_string(kMaxCliffordGenerators) +
                            " generators; use the combinatorial path for larger spaces");
    frame_ = detail::orthogonal_basis(base_, q_);
    frame_inv_ = inverse(frame_);
  }

  const QuadraticSpace& base() const { return base_; }
  std::size_t generators() const { return base_.dim(); }
  std::size_t dim() const { return std::size_t{1} << generators(); }
  const std::vector<Rational>& orthogonal_squares() const { return q_; }
  /// Columns: the orthogonal frame in the coordinates of the base.
  const RationalMatrix& frame() const { return frame_; }

  Element one() const { return basis_element(0); }
  Element basis_element(std::uint32_t mask) const {
    Element e(dim());
    e.at(mask) = 1;
    return e;
  }
  /// Image of a vector of V (base coordinates).
  Element vector_element(const Vector& v) const {
    if (v.size() != generators()) throw InputError("vector length does not match the Clifford base");
    Vector c = frame_inv_ * v;
    Element e(dim());
    for (std::size_t k = 0; k < c.size(); ++k) e[std::size_t{1} << k] = c[k];
    return e;
  }
  /// Image of the i-th standard basis vector of the base.
  Element generator(std::size_t i) const {
    Vector v(generators());
    v.at(i) = 1;
    return vector_element(v);
  }

  Element multiply(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element out(dim());
    for (std::uint32_t s = 0; s < dim(); ++s) {
      if (sgn(a[s]) == 0) continue;
      for (std::uint32_t t = 0; t < dim(); ++t) {
        if (sgn(b[t]) == 0) continue;
        out[s ^ t] += a[s] * b[t] * detail::monomial_product(s, t, q_);
      }
    }
    return out;
  }

  RationalMatrix left_regular_rep(const Element& x) const { return regular(x, true); }
  RationalMatrix right_regular_rep(const Element& x) const { return regular(x, false); }

  /// Quadratic element phi(A) with [phi(A), v] = A v, for A in so(q) in base coordinates.
  Element so_element(const RationalMatrix& a) const {
    if (!is_in_so(a, base_)) throw ValidationError("operator is not skew for the Clifford base form");
    RationalMatrix ap = frame_inv_ * a * frame_;
    Element phi(dim());
    for (std::size_t i = 0; i < generators(); ++i)
      for (std::size_t j = i + 1; j < generators(); ++j)
        if (sgn(ap(i, j)) != 0) phi[(std::size_t{1} << i) | (std::size_t{1} << j)] += ap(i, j) / (q_[j] * 2);
    return phi;
  }

  /// Derivation action of A in so(q) on Cl, as ad(phi(A)); preserves the subset size.
  RationalMatrix so_derivation_action(const RationalMatrix& a) const {
    Element phi = so_element(a);
    return left_regular_rep(phi) - right_regular_rep(phi);
  }

  /// Indices of the basis subsets with the requested size parity.
  std::vector<std::size_t> parity_indices(bool odd) const {
    std::vector<std::size_t> idx;
    for (std::size_t s = 0; s < dim(); ++s)
      if ((std::popcount(s) % 2 == 1) == odd) idx.push_back(s);
    return idx;
  }
  std::vector<std::size_t> degree_indices(std::size_t k) const {
    std::vector<std::size_t> idx;
    for (std::size_t s = 0; s < dim(); ++s)
      if (static_cast<std::size_t>(std::popcount(s)) == k) idx.push_back(s);
    return idx;
  }

  /// Eigenvalue dims of the derivation action of a semisimple a in so(q) with integer
  /// spectrum on Cl+, computed block by block on each subset size.
  std::map<int, std::size_t> even_eigen_dims(const RationalMatrix& a) const {
    const int m = static_cast<int>(generators());
    std::vector<int> range;
    for (int x = -2 * m; x <= 2 * m; ++x) range.push_back(x);
    std::vector<int> spectrum;
    for (const auto& [lam, mult] : eigen_dims_(a, range))
      for (std::size_t i = 0; i < mult; ++i) spectrum.push_back(lam);
    // achievable[k] = sums of k eigenvalues taken from distinct positions
    std::vector<std::set<int>> achievable(spectrum.size() + 1);
    achievable[0].insert(0);
    for (int lam : spectrum)
      for (std::size_t k = spectrum.size(); k-- > 0;)
        for (int x : achievable[k]) achievable[k + 1].insert(x + lam);

    const RationalMatrix d = so_derivation_action(a);
    std::map<int, std::size_t> out;
    for (std::size_t k = 0; k <= generators(); k += 2) {
      auto idx = degree_indices(k);
      RationalMatrix block(idx.size(), idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) block(i, j) = d(idx[i], idx[j]);
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c : idx)
          if (static_cast<std::size_t>(std::popcount(static_cast<std::uint32_t>(r))) != k && sgn(d(r, c)) != 0)
            throw ValidationError("derivation action does not preserve the subset size");
      std::vector<int> cands(achievable[k].begin(), achievable[k].end());
      for (const auto& [lam, mult] : eigen_dims_(block, cands)) out[lam] += mult;
    }
    return out;
  }

  /// Dimension of the commutant of all right multiplications by generators, found by
  /// propagating the monomial relations entrywise.
  std::size_t right_commutant_dim() const {
    if (generators() > 8) throw ValidationError("commutant check is limited to at most 8 generators");
    const std::size_t n = dim();
    const std::size_t nodes = n * n;
    std::vector<std::size_t> parent(nodes);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<Rational> ratio(nodes, Rational(1));  // X[node] = ratio[node] * X[root]
    std::vector<char> dead(nodes, 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) -> std::size_t {
      if (parent[x] == x) return x;
      std::size_t p = parent[x];
      std::size_t root = find(p);
      ratio[x] *= ratio[p];
      parent[x] = root;
      return root;
    };
    // relation X[x] = c * X[y]
    auto unite = [&](std::size_t x, std::size_t y, const Rational& c) {
      std::size_t rx = find(x), ry = find(y);
      if (rx == ry) {
        if (ratio[x] != c * ratio[y]) dead[rx] = 1;
        return;
      }
      // X[rx] = X[x]/ratio[x] = c*ratio[y]/ratio[x] * X[ry]
      parent[rx] = ry;
      ratio[rx] = c * ratio[y] / ratio[x];
      if (dead[rx]) dead[ry] = 1;
    };
    for (std::size_t k = 0; k < generators(); ++k) {
      const std::uint32_t bit = std::uint32_t{1} << k;
      std::vector<Rational> sigma(n);
      for (std::uint32_t b = 0; b < n; ++b) sigma[b] = detail::monomial_product(b, bit, q_);
      // R e_b = sigma_b e_{b^bit}; XR = RX gives X[a^bit][b] * sigma_{a^bit} = X[a][b^bit] * sigma_b
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) unite((a ^ bit) * n + b, a * n + (b ^ bit), sigma[b] / sigma[a ^ bit]);
    }
    std::size_t count = 0;
    for (std::size_t x = 0; x < nodes; ++x)
      if (find(x) == x && !dead[x]) ++count;
    return count;
  }

 private:
  static std::map<int, std::size_t> eigen_dims_(const RationalMatrix& h, const std::vector<int>& candidates) {
    std::map<int, std::size_t> dims;
    std::size_t total = 0;
    for (int lam : candidates) {
      if (total == h.rows()) break;
      std::size_t k = h.rows() - rank(h - RationalMatrix::identity(h.rows()) * Rational(lam));
      if (k > 0) dims[lam] = k;
      total += k;
    }
    if (total != h.rows()) throw ValidationError("operator is not diagonalizable over the integers");
    return dims;
  }

  void check(const Element& a) const {
    if (a.size() != dim()) throw InputError("Clifford element from a different algebra");
  }

  RationalMatrix regular(const Element& x, bool left) const {
    check(x);
    RationalMatrix m(dim(), dim());
    for (std::uint32_t s = 0; s < dim(); ++s) {
      if (sgn(x[s]) == 0) continue;
      for (std::uint32_t t = 0; t < dim(); ++t) {
        Rational c = left ? detail::monomial_product(s, t, q_) : detail::monomial_product(t, s, q_);
        m(s ^ t, t) += x[s] * c;
      }
    }
    return m;
  }

  QuadraticSpace base_;
  std::vector<Rational> q_;
  RationalMatrix frame_;
  RationalMatrix frame_inv_;
};

/// The spin module on the exterior algebra of a maximal isotropic subspace U.
struct SpinModule {
  QuadraticSpace base;
  std::size_t dim = 0;
  std::vector<RationalMatrix> generators;  // images of the standard basis vectors of the base
  RationalMatrix parity;                   // (-1)^degree on the exterior algebra of U

  /// rho(phi(A)) = 1/4 sum_ij A_ij rho(e_i) rho(e^j), e^j the dual basis.
  RationalMatrix so_action(const RationalMatrix& a) const {
    if (!is_in_so(a, base)) throw ValidationError("operator is not skew for the spin module's form");
    const std::size_t m = base.dim();
    RationalMatrix ginv = inverse(base.gram());
    std::vector<RationalMatrix> dual;
    for (std::size_t j = 0; j < m; ++j) {
      RationalMatrix d(dim, dim);
      for (std::size_t k = 0; k < m; ++k)
        if (sgn(ginv(k, j)) != 0) d = d + generators[k] * ginv(k, j);
      dual.push_back(std::move(d));
    }
    RationalMatrix out(dim, dim);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (sgn(a(i, j)) != 0) out = out + generators[i] * dual[j] * a(i, j);
    return out * Rational(1, 4);
  }

  /// v w + w v = 2 <v, w> on all pairs of generators.
  bool verify_relations() const {
    const std::size_t m = base.dim();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        RationalMatrix ac = generators[i] * generators[j] + generators[j] * generators[i];
        if (ac != RationalMatrix::identity(dim) * (base.gram()(i, j) * 2)) return false;
      }
    return true;
  }

  /// Rank of the span of all products of generators (the image of Cl or of Cl+).
  std::size_t image_dim(bool even_only) const {
    const std::size_t m = base.dim();
    SubspaceBasis span(dim * dim);
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << m); ++s) {
      if (even_only && std::popcount(s) % 2) continue;
      RationalMatrix p = RationalMatrix::identity(dim);
      for (std::size_t k = 0; k < m; ++k)
        if (s & (std::uint32_t{1} << k)) p = p * generators[k];
      span.insert(flatten(p));
    }
    return span.size();
  }

  /// Restriction of an even operator to the +1 (even) or -1 (odd) half of the module.
  RationalMatrix half(const RationalMatrix& x, bool odd_half) const {
    std::vector<std::size_t> idx;
    for (std::size_t t = 0; t < dim; ++t)
      if ((parity(t, t) < 0) == odd_half) idx.push_back(t);
    RationalMatrix out(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) out(a, b) = x(idx[a], idx[b]);
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b)
        if ((parity(a, a) < 0) != (parity(b, b) < 0) && sgn(x(a, b)) != 0)
          throw ValidationError("operator does not preserve the half-spin splitting");
    return out;
  }
};

namespace detail {

/// Pairs diagonal entries into hyperbolic planes (-q_i/q_j a rational square), leaving one
/// entry with square value when the count is odd. Backtracking over choices.
inline bool pair_diagonal(const std::vector<Rational>& q, std::vector<char>& used,
                          std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::size_t i = 0;
  while (i < q.size() && used[i]) ++i;
  if (i == q.size()) return true;
  used[i] = 1;
  for (std::size_t j = i + 1; j < q.size(); ++j) {
    if (used[j] || !rational_sqrt(-q[i] / q[j])) continue;
    used[j] = 1;
    pairs.emplace_back(i, j);
    if (pair_diagonal(q, used, pairs)) return true;
    pairs.pop_back();
    used[j] = 0;
  }
  used[i] = 0;
  return false;
}

}  // namespace detail

/// Spin module of Cl(q): dimension 2^floor(m/2). Requires a rational maximal isotropic
/// splitting, and for odd m a leftover vector whose square is a rational square.
inline SpinModule spin_rep(const QuadraticSpace& q) {
  const std::size_t m = q.dim();
  if (m == 0) throw ValidationError("spin_rep of a zero space");
  if (m > kMaxCliffordGenerators) throw ValidationError("spin modules are limited to 12 generators");
  std::vector<Rational> diag;
  RationalMatrix frame = detail::orthogonal_basis(q, diag);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::optional<std::size_t> leftover;
  std::vector<char> used(m, 0);
  bool ok = false;
  if (m % 2 == 0) {
    ok = detail::pair_diagonal(diag, used, pairs);
  } else {
    for (std::size_t z = 0; z < m && !ok; ++z) {
      if (!detail::rational_sqrt(diag[z])) continue;
      std::fill(used.begin(), used.end(), 0);
      pairs.clear();
      used[z] = 1;
      if (detail::pair_diagonal(diag, used, pairs)) {
        ok = true;
        leftover = z;
      }
    }
  }
  if (!ok) throw ValidationError("no rational isotropic splitting found for the spin module");

  const std::size_t r = pairs.size();
  const std::size_t dim = std::size_t{1} << r;
  // new basis x_1..x_r, y_1..y_r (, z) in frame coordinates
  std::vector<Vector> cols(m, Vector(m));
  std::vector<RationalMatrix> rho(m, RationalMatrix(dim, dim));
  RationalMatrix parity(dim, dim);
  for (std::uint32_t t = 0; t < dim; ++t) parity(t, t) = std::popcount(t) % 2 ? -1 : 1;
  for (std::size_t a = 0; a < r; ++a) {
    auto [i, j] = pairs[a];
    Rational s = *detail::rational_sqrt(-diag[i] / diag[j]);
    cols[a][i] = 1;
    cols[a][j] = s;
    cols[r + a][i] = 1 / (diag[i] * 2);
    cols[r + a][j] = -s / (diag[i] * 2);
    const std::uint32_t bit = std::uint32_t{1} << a;
    for (std::uint32_t t = 0; t < dim; ++t) {
      long sign = std::popcount(t & (bit - 1)) % 2 ? -1 : 1;
      if (!(t & bit)) rho[a](t | bit, t) = sign;
      else rho[r + a](t ^ bit, t) = 2 * sign;
    }
  }
  if (leftover) {
    cols[2 * r][*leftover] = 1;
    rho[2 * r] = parity * *detail::rational_sqrt(diag[*leftover]);
  }
  // b = frame * cols, and e_k = sum_l (b^{-1})_{lk} b_l
  RationalMatrix b = frame * RationalMatrix::from_columns(m, cols);
  RationalMatrix binv = inverse(b);
  SpinModule out{q, dim, {}, parity};
  for (std::size_t k = 0; k < m; ++k) {
    RationalMatrix g(dim, dim);
    for (std::size_t l = 0; l < m; ++l)
      if (sgn(binv(l, k)) != 0) g = g + rho[l] * binv(l, k);
    out.generators.push_back(std::move(g));
  }
  if (!out.verify_relations()) throw ValidationError("spin module fails the Clifford relations");
  return out;
}

}  // namespace hkmono

#endif
