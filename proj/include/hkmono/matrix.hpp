#ifndef HKMONO_MATRIX_HPP
#define HKMONO_MATRIX_HPP

#include "hkmono/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hkmono {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw InputError("matrix entry count does not match shape");
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static RationalMatrix zero(std::size_t rows, std::size_t cols) { return RationalMatrix(rows, cols); }
  static RationalMatrix diagonal(std::span<const Rational> d) {
    RationalMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static RationalMatrix from_columns(std::size_t rows, std::span<const Vector> cols) {
    RationalMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw InputError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }
  static RationalMatrix from_rows(std::size_t cols, std::span<const Vector> rows) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InputError("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Rational> entries() const { return data_; }

  Vector column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vector row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
  }
  std::size_t nonzeros() const {
    return static_cast<std::size_t>(
        std::count_if(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) != 0; }));
  }
  Rational trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    RationalMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  RationalMatrix& operator+=(const RationalMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  RationalMatrix& operator-=(const RationalMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  RationalMatrix& operator*=(const Rational& c) {
    for (auto& x : data_) x *= c;
    return *this;
  }
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& c) { return a *= c; }
  friend RationalMatrix operator*(const Rational& c, RationalMatrix a) { return a *= c; }
  RationalMatrix operator-() const { return (*this) * Rational(-1); }

  /// Product that skips zero entries; the operators here are typically very sparse.
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    std::vector<std::vector<std::size_t>> b_nz(b.rows_);
    for (std::size_t k = 0; k < b.rows_; ++k)
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) b_nz[k].push_back(j);
    Rational t;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j : b_nz[k]) {
          t = aik * b(k, j);
          c(i, j) += t;
        }
      }
    return c;
  }

  friend Vector operator*(const RationalMatrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw InputError("matrix-vector shape mismatch");
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) out[i] += a(i, k) * v[k];
    return out;
  }

 private:
  void check_same_shape(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

inline RationalMatrix matrix_power(const RationalMatrix& a, std::size_t k) {
  RationalMatrix p = RationalMatrix::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) p = p * a;
  return p;
}

inline bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

inline Rational dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

namespace detail {

using IntRow = std::vector<BigInt>;

/// Clears denominators row by row and divides out the content.
inline IntRow integer_row(std::span<const Rational> row) {
  BigInt l = 1;
  for (const auto& x : row)
    if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntRow out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j)
    if (sgn(row[j]) != 0) out[j] = row[j].get_num() * (l / row[j].get_den());
  return out;
}

inline void remove_content(IntRow& row) {
  BigInt g = 0;
  for (const auto& x : row)
    if (sgn(x) != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return;
    }
  if (g > 1)
    for (auto& x : row)
      if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

/// Fraction-free row echelon form over Z. Rows with a zero in the pivot column are
/// left untouched, and every updated row is divided by its content, which keeps
/// coefficient growth in check without a global Bareiss divisor.
struct Echelon {
  std::vector<IntRow> rows;         // nonzero echelon rows
  std::vector<std::size_t> pivots;  // pivot column of each row
};

inline Echelon fraction_free_echelon(const RationalMatrix& m) {
  std::vector<IntRow> work;
  work.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    IntRow r = integer_row(m.entries().subspan(i * m.cols(), m.cols()));
    remove_content(r);
    work.push_back(std::move(r));
  }
  Echelon e;
  std::size_t next = 0;
  BigInt a, b, g;
  for (std::size_t col = 0; col < m.cols() && next < work.size(); ++col) {
    std::size_t piv = work.size();
    std::size_t best_size = 0;
    for (std::size_t i = next; i < work.size(); ++i)
      if (sgn(work[i][col]) != 0) {
        std::size_t sz = mpz_sizeinbase(work[i][col].get_mpz_t(), 2);
        if (piv == work.size() || sz < best_size) {
          piv = i;
          best_size = sz;
        }
      }
    if (piv == work.size()) continue;
    std::swap(work[next], work[piv]);
    const IntRow& p = work[next];
    std::vector<std::size_t> p_nz;
    for (std::size_t j = col; j < m.cols(); ++j)
      if (sgn(p[j]) != 0) p_nz.push_back(j);
    for (std::size_t i = next + 1; i < work.size(); ++i) {
      IntRow& r = work[i];
      if (sgn(r[col]) == 0) continue;
      mpz_gcd(g.get_mpz_t(), p[col].get_mpz_t(), r[col].get_mpz_t());
      mpz_divexact(a.get_mpz_t(), p[col].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), r[col].get_mpz_t(), g.get_mpz_t());
      // r <- a*r - b*p
      if (a != 1)
        for (std::size_t j = col; j < m.cols(); ++j)
          if (sgn(r[j]) != 0) r[j] *= a;
      for (std::size_t j : p_nz) mpz_submul(r[j].get_mpz_t(), b.get_mpz_t(), p[j].get_mpz_t());
      remove_content(r);
    }
    e.pivots.push_back(col);
    ++next;
  }
  work.resize(next);
  e.rows = std::move(work);
  return e;
}

}  // namespace detail

/// Exact rank over Q.
inline std::size_t rank(const RationalMatrix& m) { return detail::fraction_free_echelon(m).pivots.size(); }

/// Basis of ker M (column vectors). Size is cols - rank(M).
inline std::vector<Vector> kernel_basis(const RationalMatrix& m) {
  auto e = detail::fraction_free_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(m.cols());
    x[free] = 1;
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
      const auto& row = e.rows[k];
      Rational s = 0;
      for (std::size_t j = e.pivots[k] + 1; j < m.cols(); ++j)
        if (sgn(row[j]) != 0 && sgn(x[j]) != 0) s += Rational(row[j]) * x[j];
      x[e.pivots[k]] = -s / Rational(row[e.pivots[k]]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

/// One solution of M x = b, or nullopt when the system is inconsistent.
inline std::optional<Vector> solve(const RationalMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side length mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto e = detail::fraction_free_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = e.pivots.size(); k-- > 0;) {
    const auto& row = e.rows[k];
    Rational s = Rational(row[m.cols()]);
    for (std::size_t j = e.pivots[k] + 1; j < m.cols(); ++j)
      if (sgn(row[j]) != 0 && sgn(x[j]) != 0) s -= Rational(row[j]) * x[j];
    x[e.pivots[k]] = s / Rational(row[e.pivots[k]]);
  }
  return x;
}

/// Inverse of a square matrix; throws ValidationError when singular.
inline RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector e(n);
    e[j] = 1;
    auto x = solve(m, e);
    if (!x) throw ValidationError("matrix is singular");
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*x)[i];
  }
  return inv;
}

/// Rank of a family of vectors.
inline std::size_t span_rank(std::span<const Vector> vs, std::size_t dim) {
  if (vs.empty()) return 0;
  return rank(RationalMatrix::from_rows(dim, vs));
}

/// Incrementally maintained basis of a subspace, kept in reduced echelon form so that
/// membership tests are a single reduction pass.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t dim) : dim_(dim) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<Vector>& vectors() const { return original_; }

  /// Residual of v after reduction against the current basis.
  Vector reduce(Vector v) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Rational& c = v[pivots_[k]];
      if (sgn(c) == 0) continue;
      Rational coef = c;
      for (std::size_t j : support_[k]) v[j] -= coef * basis_[k][j];
    }
    return v;
  }
  bool contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

  /// Adds v if independent; returns whether the span grew.
  bool insert(const Vector& v) {
    if (v.size() != dim_) throw InputError("subspace vector length mismatch");
    Vector r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && sgn(r[p]) == 0) ++p;
    if (p == dim_) return false;
    Rational inv = 1 / r[p];
    for (auto& x : r)
      if (sgn(x) != 0) x *= inv;
    std::vector<std::size_t> supp;
    for (std::size_t j = 0; j < dim_; ++j)
      if (sgn(r[j]) != 0) supp.push_back(j);
    // keep existing rows reduced at the new pivot
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      Rational c = basis_[k][p];
      if (sgn(c) == 0) continue;
      for (std::size_t j : supp) basis_[k][j] -= c * r[j];
      support_[k].clear();
      for (std::size_t j = 0; j < dim_; ++j)
        if (sgn(basis_[k][j]) != 0) support_[k].push_back(j);
    }
    basis_.push_back(std::move(r));
    pivots_.push_back(p);
    support_.push_back(std::move(supp));
    original_.push_back(v);
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::size_t>> support_;
  std::vector<Vector> original_;
};

/// Flattens a matrix into a row-major vector.
inline Vector flatten(const RationalMatrix& m) { return Vector(m.entries().begin(), m.entries().end()); }

inline RationalMatrix unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  return RationalMatrix(rows, cols, v);
}

}  // namespace hkmono

#endif
