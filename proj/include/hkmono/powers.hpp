#ifndef HKMONO_POWERS_HPP
#define HKMONO_POWERS_HPP

// Functorial constructions on operators: derivation actions on symmetric and
// exterior powers, plus the nilpotency index used throughout.

#include "hkmono/matrix.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace hkmono {

using IndexTuple = std::vector<std::size_t>;

/// Nondecreasing k-tuples over {0..n-1}, lexicographic order (monomial basis of Sym^k).
inline std::vector<IndexTuple> multiset_tuples(std::size_t n, std::size_t k) {
  std::vector<IndexTuple> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  if (n == 0) return out;
  IndexTuple t(k, 0);
  while (true) {
    out.push_back(t);
    std::size_t p = k;
    while (p > 0 && t[p - 1] == n - 1) --p;
    if (p == 0) break;
    ++t[p - 1];
    for (std::size_t q = p; q < k; ++q) t[q] = t[p - 1];
  }
  return out;
}

/// Strictly increasing k-tuples over {0..n-1}, lexicographic order (basis of the k-th wedge).
inline std::vector<IndexTuple> subset_tuples(std::size_t n, std::size_t k) {
  std::vector<IndexTuple> out;
  if (k > n) return out;
  IndexTuple t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    std::size_t p = k;
    while (p > 0 && t[p - 1] == n - k + p - 1) --p;
    if (p == 0) break;
    ++t[p - 1];
    for (std::size_t q = p; q < k; ++q) t[q] = t[q - 1] + 1;
  }
  return out;
}

/// Derivation (Leibniz) action of N on Sym^k of its domain, in the monomial basis.
inline RationalMatrix induced_sym_power(const RationalMatrix& n, std::size_t k) {
  if (!n.is_square()) throw InputError("induced_sym_power: operator must be square");
  const std::size_t m = n.rows();
  auto basis = multiset_tuples(m, k);
  std::map<IndexTuple, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  RationalMatrix out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& mono = basis[col];
    for (std::size_t p = 0; p < k; ++p) {
      if (p > 0 && mono[p] == mono[p - 1]) {
        // repeated factor: same contribution as position p-1, handled via multiplicity below
        continue;
      }
      std::size_t mult = 1;
      while (p + mult < k && mono[p + mult] == mono[p]) ++mult;
      for (std::size_t i = 0; i < m; ++i) {
        const Rational& c = n(i, mono[p]);
        if (sgn(c) == 0) continue;
        IndexTuple img = mono;
        img[p] = i;
        std::sort(img.begin(), img.end());
        out(index.at(img), col) += c * static_cast<long>(mult);
      }
    }
  }
  return out;
}

/// Derivation action of N on the k-th exterior power, basis of increasing index tuples,
/// Koszul sign from sorting the replaced factor into place.
inline RationalMatrix induced_wedge_power(const RationalMatrix& n, std::size_t k) {
  if (!n.is_square()) throw InputError("induced_wedge_power: operator must be square");
  const std::size_t m = n.rows();
  if (k > m) throw InputError("induced_wedge_power: degree exceeds dimension");
  auto basis = subset_tuples(m, k);
  std::map<IndexTuple, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  RationalMatrix out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& s = basis[col];
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t i = 0; i < m; ++i) {
        const Rational& c = n(i, s[p]);
        if (sgn(c) == 0) continue;
        if (i != s[p] && std::find(s.begin(), s.end(), i) != s.end()) continue;
        IndexTuple img = s;
        img[p] = i;
        // bubble img[p] into sorted position, counting transpositions
        long sign = 1;
        std::size_t q = p;
        while (q > 0 && img[q - 1] > img[q]) {
          std::swap(img[q - 1], img[q]);
          sign = -sign;
          --q;
        }
        while (q + 1 < k && img[q] > img[q + 1]) {
          std::swap(img[q], img[q + 1]);
          sign = -sign;
          ++q;
        }
        out(index.at(img), col) += c * sign;
      }
    }
  }
  return out;
}

/// Smallest m with N^(m+1) = 0; throws ValidationError if N is not nilpotent.
inline std::size_t nilpotency_index(const RationalMatrix& n) {
  if (!n.is_square()) throw InputError("nilpotency index of a non-square matrix");
  if (n.is_zero()) return 0;
  RationalMatrix p = n;
  for (std::size_t m = 1; m <= n.rows(); ++m) {
    p = p * n;
    if (p.is_zero()) return m;
  }
  throw ValidationError("not nilpotent");
}

/// Ranks of N^0, N^1, ..., N^(dim+1).
inline std::vector<std::size_t> power_ranks(const RationalMatrix& n) {
  std::vector<std::size_t> ranks{n.rows()};
  RationalMatrix p = RationalMatrix::identity(n.rows());
  for (std::size_t s = 1; s <= n.rows() + 1; ++s) {
    p = p * n;
    ranks.push_back(p.is_zero() ? 0 : rank(p));
  }
  return ranks;
}

}  // namespace hkmono

#endif
