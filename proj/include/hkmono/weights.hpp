#ifndef HKMONO_WEIGHTS_HPP
#define HKMONO_WEIGHTS_HPP

// Root-system combinatorics for the orthogonal families B_r = so(2r+1) and
// D_r = so(2r): dominance, Weyl-orbit maximization, Freudenthal multiplicities,
// and branching so(N+2) -> so(N) graded by the first coordinate.

#include "hkmono/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

namespace hkmono {

enum class Family { B, D };

inline std::string to_string(Family f) { return f == Family::B ? "B" : "D"; }

inline Family parse_family(const std::string& s) {
  if (s == "B") return Family::B;
  if (s == "D") return Family::D;
  throw InputError("unknown root system family '" + s + "' (expected B or D)");
}

struct RootSystemBD {
  Family family;
  std::size_t rank;

  /// Dimension of the defining module: 2r+1 for B, 2r for D.
  std::size_t vector_dim() const { return 2 * rank + (family == Family::B ? 1 : 0); }
  auto operator<=>(const RootSystemBD&) const = default;
};

/// so(d) as a root system.
inline RootSystemBD orthogonal_root_system(std::size_t d) {
  if (d < 2) throw ValidationError("so(d) needs d >= 2");
  return RootSystemBD{d % 2 == 1 ? Family::B : Family::D, d / 2};
}

/// Weight coordinates in the epsilon basis, stored doubled.
using Doubled = std::vector<std::int64_t>;

inline Doubled to_doubled(const std::vector<HalfInt>& c) {
  Doubled d;
  for (auto h : c) d.push_back(h.twice());
  return d;
}
inline std::vector<HalfInt> from_doubled(const Doubled& d) {
  std::vector<HalfInt> c;
  for (auto x : d) c.push_back(HalfInt::from_twice(x));
  return c;
}

inline std::string format_weight(const Doubled& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += HalfInt::from_twice(d[i]).str();
  }
  return s + ")";
}

namespace detail {

inline bool same_parity_class(const Doubled& c) {
  for (std::size_t i = 1; i < c.size(); ++i)
    if (((c[i] - c[0]) % 2) != 0) return false;
  return true;
}

inline std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

}  // namespace detail

/// Dominance plus the half-integrality and integer-difference conditions.
inline bool is_dominant(const Doubled& c, const RootSystemBD& rs) {
  if (c.size() != rs.rank) throw InputError("weight length does not match the rank");
  if (!detail::same_parity_class(c)) return false;
  const std::size_t r = rs.rank;
  if (rs.family == Family::B) {
    for (std::size_t i = 0; i + 1 < r; ++i)
      if (c[i] < c[i + 1]) return false;
    return r == 0 || c[r - 1] >= 0;
  }
  if (r == 1) return true;
  for (std::size_t i = 0; i + 2 < r; ++i)
    if (c[i] < c[i + 1]) return false;
  return c[r - 2] >= detail::abs64(c[r - 1]);
}

inline bool is_dominant(const std::vector<HalfInt>& c, const RootSystemBD& rs) { return is_dominant(to_doubled(c), rs); }

/// A dominant weight together with its root system.
class HighestWeight {
 public:
  HighestWeight(RootSystemBD rs, std::vector<HalfInt> coords) : rs_(rs), coords_(std::move(coords)) {
    if (coords_.size() != rs.rank) throw InputError("weight length does not match the rank");
    if (!detail::same_parity_class(to_doubled(coords_)))
      throw ValidationError("weight mixes integer and half-integer coordinates: " + format_weight(to_doubled(coords_)));
    if (!is_dominant(coords_, rs_)) throw ValidationError("weight is not dominant: " + format_weight(to_doubled(coords_)));
  }
  static HighestWeight from_ints(RootSystemBD rs, std::vector<long> ints) {
    std::vector<HalfInt> c;
    for (long x : ints) c.push_back(HalfInt::from_int(x));
    return HighestWeight(rs, std::move(c));
  }

  const RootSystemBD& root_system() const { return rs_; }
  const std::vector<HalfInt>& coords() const { return coords_; }
  Doubled doubled() const { return to_doubled(coords_); }
  bool is_integral() const { return coords_.empty() || coords_[0].is_integer(); }
  std::string str() const { return format_weight(doubled()); }
  bool operator==(const HighestWeight&) const = default;

 private:
  RootSystemBD rs_;
  std::vector<HalfInt> coords_;
};

/// Even (all integer) or odd (all strictly half-integer) coordinates.
inline bool parity_check(const HighestWeight& w, bool odd_degree) {
  if (w.coords().empty()) return !odd_degree;
  return odd_degree ? !w.is_integral() : w.is_integral();
}

/// Positive roots as integer coefficient vectors in the epsilon basis.
inline std::vector<std::vector<int>> positive_roots(const RootSystemBD& rs) {
  std::vector<std::vector<int>> roots;
  const std::size_t r = rs.rank;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      std::vector<int> a(r, 0), b(r, 0);
      a[i] = 1;
      a[j] = -1;
      b[i] = 1;
      b[j] = 1;
      roots.push_back(a);
      roots.push_back(b);
    }
  if (rs.family == Family::B)
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<int> a(r, 0);
      a[i] = 1;
      roots.push_back(a);
    }
  return roots;
}

/// 2 rho: (2r-1, 2r-3, .., 1) for B and (2r-2, .., 0) for D.
inline Doubled rho_doubled(const RootSystemBD& rs) {
  Doubled p(rs.rank);
  for (std::size_t i = 0; i < rs.rank; ++i) {
    auto k = static_cast<std::int64_t>(rs.rank - i);
    p[i] = rs.family == Family::B ? 2 * k - 1 : 2 * (k - 1);
  }
  return p;
}

/// Dominant element of the Weyl orbit.
inline Doubled dominant_representative(Doubled c, const RootSystemBD& rs) {
  bool odd_negatives = false;
  bool has_zero = false;
  for (auto& x : c) {
    if (x < 0) odd_negatives = !odd_negatives;
    if (x == 0) has_zero = true;
    x = detail::abs64(x);
  }
  std::sort(c.begin(), c.end(), std::greater<>());
  if (rs.family == Family::D && !has_zero && odd_negatives && !c.empty()) c.back() = -c.back();
  return c;
}

/// max over the Weyl group of <w(lambda), h>, in doubled units of lambda.
///
/// Sorted |lambda| against sorted |h| is optimal over all signed permutations. For D only
/// even sign changes are allowed; when no coordinate of either vector vanishes and the
/// optimal signing has the wrong parity, the smallest product in the pairing flips.
inline HalfInt weyl_orbit_max(const Doubled& lambda, const std::vector<std::int64_t>& h, const RootSystemBD& rs) {
  if (lambda.size() != rs.rank || h.size() != rs.rank) throw InputError("weyl_orbit_max: length does not match the rank");
  if (!is_dominant(lambda, rs)) throw ValidationError("weyl_orbit_max: weight is not dominant");
  Doubled la(lambda), ha(h);
  bool neg = false;
  bool any_zero = false;
  for (auto& x : la) {
    if (x < 0) neg = !neg;
    if (x == 0) any_zero = true;
    x = detail::abs64(x);
  }
  for (auto& x : ha) {
    if (x < 0) neg = !neg;
    if (x == 0) any_zero = true;
    x = detail::abs64(x);
  }
  std::sort(la.begin(), la.end(), std::greater<>());
  std::sort(ha.begin(), ha.end(), std::greater<>());
  std::int64_t total = 0;
  std::int64_t smallest = -1;
  for (std::size_t i = 0; i < la.size(); ++i) {
    std::int64_t p = la[i] * ha[i];
    total += p;
    if (smallest < 0 || p < smallest) smallest = p;
  }
  if (rs.family == Family::D && !any_zero && neg && !la.empty()) total -= 2 * smallest;
  return HalfInt::from_twice(total);
}

inline HalfInt weyl_orbit_max(const HighestWeight& lambda, const std::vector<int>& h) {
  std::vector<std::int64_t> hh(h.begin(), h.end());
  return weyl_orbit_max(lambda.doubled(), hh, lambda.root_system());
}

/// Nilpotency index of the image of a nilpotent on the irreducible module V_lambda,
/// given the eigenvalue cocharacter of its Jacobson-Morozov h: the largest h-weight.
inline HalfInt nu_on_irrep(const HighestWeight& lambda, const std::vector<int>& cocharacter) {
  return weyl_orbit_max(lambda, cocharacter);
}

/// Weyl dimension formula.
inline BigInt weyl_dimension(const HighestWeight& lambda) {
  const auto& rs = lambda.root_system();
  Doubled l = lambda.doubled();
  Doubled p = rho_doubled(rs);
  Rational dim = 1;
  for (const auto& a : positive_roots(rs)) {
    std::int64_t num = 0, den = 0;
    for (std::size_t i = 0; i < rs.rank; ++i) {
      num += (l[i] + p[i]) * a[i];
      den += p[i] * a[i];
    }
    dim *= make_rational(static_cast<long>(num), static_cast<long>(den));
  }
  if (dim.get_den() != 1) throw ValidationError("Weyl dimension formula gave a non-integer");
  return dim.get_num();
}

/// Size of the Weyl orbit of a dominant weight.
inline BigInt orbit_size(const Doubled& dominant, const RootSystemBD& rs) {
  std::map<std::int64_t, std::size_t> counts;
  std::size_t nonzero = 0;
  for (auto x : dominant) {
    counts[detail::abs64(x)]++;
    if (x != 0) ++nonzero;
  }
  BigInt perms;
  mpz_fac_ui(perms.get_mpz_t(), dominant.size());
  for (auto [v, c] : counts) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), c);
    perms /= f;
  }
  std::size_t sign_bits = nonzero;
  if (rs.family == Family::D && nonzero == dominant.size() && nonzero > 0) sign_bits -= 1;
  return perms << static_cast<mp_bitcnt_t>(sign_bits);
}

namespace detail {

/// Simple-root coordinates of lambda - mu, or nothing if not in the nonnegative cone.
inline std::optional<std::vector<std::int64_t>> simple_root_coords(const Doubled& lambda, const Doubled& mu,
                                                                   const RootSystemBD& rs) {
  const std::size_t r = rs.rank;
  std::vector<std::int64_t> d(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::int64_t diff = lambda[i] - mu[i];
    if (diff % 2 != 0) return std::nullopt;
    d[i] = diff / 2;
  }
  std::vector<std::int64_t> c(r);
  if (rs.family == Family::B) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      s += d[k];
      if (s < 0) return std::nullopt;
      c[k] = s;
    }
    return c;
  }
  if (r == 1) {
    if (d[0] != 0) return std::nullopt;
    return c;
  }
  std::int64_t s = 0;
  for (std::size_t k = 0; k + 2 < r; ++k) {
    s += d[k];
    if (s < 0) return std::nullopt;
    c[k] = s;
  }
  std::int64_t s_last = s + d[r - 2];
  if (((s_last + d[r - 1]) % 2) != 0) return std::nullopt;
  c[r - 1] = (s_last + d[r - 1]) / 2;
  c[r - 2] = (s_last - d[r - 1]) / 2;
  if (c[r - 1] < 0 || c[r - 2] < 0) return std::nullopt;
  return c;
}

inline void enumerate_dominant(const Doubled& lambda, const RootSystemBD& rs, Doubled& cur,
                               std::vector<Doubled>& out) {
  const std::size_t r = rs.rank;
  const std::size_t i = cur.size();
  if (i == r) {
    if (simple_root_coords(lambda, cur, rs)) out.push_back(cur);
    return;
  }
  const std::int64_t parity = ((lambda[0] % 2) + 2) % 2;
  std::int64_t upper = i == 0 ? abs64(lambda[0]) : cur[i - 1];
  std::int64_t lower = parity;
  if (rs.family == Family::D && i + 1 == r) lower = r == 1 ? lambda[0] : -upper;
  if (rs.family == Family::D && r == 1) upper = lambda[0];
  for (std::int64_t x = upper; x >= lower; x -= 2) {
    cur.push_back(x);
    // partial-sum pruning on the leading coordinates
    bool ok = true;
    std::size_t check_upto = rs.family == Family::B ? cur.size() : std::min(cur.size(), r >= 2 ? r - 2 : 0);
    std::int64_t s = 0;
    for (std::size_t k = 0; k < check_upto; ++k) {
      s += (lambda[k] - cur[k]) / 2;
      if (s < 0) {
        ok = false;
        break;
      }
    }
    if (ok) enumerate_dominant(lambda, rs, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Dominant weights mu <= lambda (same lattice coset), i.e. the dominant weights of V_lambda.
inline std::vector<Doubled> dominant_weights_below(const Doubled& lambda, const RootSystemBD& rs) {
  std::vector<Doubled> out;
  Doubled cur;
  if (rs.rank == 0) return {Doubled{}};
  detail::enumerate_dominant(lambda, rs, cur, out);
  return out;
}

using DominantCharacter = std::map<Doubled, BigInt>;

namespace detail {

inline std::mutex& multiplicity_cache_mutex() {
  static std::mutex m;
  return m;
}
inline std::map<std::tuple<int, std::size_t, Doubled>, DominantCharacter>& multiplicity_cache() {
  static std::map<std::tuple<int, std::size_t, Doubled>, DominantCharacter> cache;
  return cache;
}

inline std::int64_t dot(const Doubled& a, const Doubled& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline DominantCharacter freudenthal(const Doubled& lambda, const RootSystemBD& rs) {
  auto dominant = dominant_weights_below(lambda, rs);
  // process by increasing height of lambda - mu
  std::vector<std::pair<std::int64_t, Doubled>> order;
  for (auto& mu : dominant) {
    auto c = simple_root_coords(lambda, mu, rs);
    order.emplace_back(std::accumulate(c->begin(), c->end(), std::int64_t{0}), mu);
  }
  std::sort(order.begin(), order.end());
  const Doubled rho = rho_doubled(rs);
  const auto roots = positive_roots(rs);
  auto shifted_norm = [&](const Doubled& w) {
    Doubled s(w);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += rho[i];
    return dot(s, s);
  };
  const std::int64_t top = shifted_norm(lambda);
  DominantCharacter mult;
  for (const auto& [height, mu] : order) {
    if (height == 0) {
      mult[mu] = 1;
      continue;
    }
    BigInt numerator = 0;
    for (const auto& a : roots) {
      for (std::int64_t k = 1;; ++k) {
        Doubled nu(mu);
        std::int64_t pairing = 0;
        for (std::size_t i = 0; i < nu.size(); ++i) {
          nu[i] += 2 * k * a[i];
          pairing += nu[i] * a[i];
        }
        auto it = mult.find(dominant_representative(nu, rs));
        if (it == mult.end()) break;
        numerator += it->second * static_cast<long>(pairing);
      }
    }
    std::int64_t denom = top - shifted_norm(mu);
    BigInt m = numerator * 4;
    if (denom <= 0 || m % denom != 0) throw ValidationError("Freudenthal recursion produced a non-integer multiplicity");
    m /= denom;
    if (m < 0) throw ValidationError("Freudenthal recursion produced a negative multiplicity");
    mult[mu] = m;
  }
  return mult;
}

}  // namespace detail

/// Multiplicities of the dominant weights of V_lambda (memoized, thread-safe).
inline DominantCharacter weight_multiplicities(const HighestWeight& lambda) {
  const auto& rs = lambda.root_system();
  auto key = std::make_tuple(static_cast<int>(rs.family), rs.rank, lambda.doubled());
  {
    std::lock_guard<std::mutex> lock(detail::multiplicity_cache_mutex());
    auto it = detail::multiplicity_cache().find(key);
    if (it != detail::multiplicity_cache().end()) return it->second;
  }
  DominantCharacter result = detail::freudenthal(lambda.doubled(), rs);
  std::lock_guard<std::mutex> lock(detail::multiplicity_cache_mutex());
  detail::multiplicity_cache().emplace(key, result);
  return result;
}

/// Total dimension from the dominant multiplicities and orbit sizes.
inline BigInt character_dimension(const DominantCharacter& ch, const RootSystemBD& rs) {
  BigInt total = 0;
  for (const auto& [w, m] : ch) total += m * orbit_size(w, rs);
  return total;
}

/// One irreducible constituent of a decomposition.
struct Constituent {
  HighestWeight weight;
  BigInt mult;
};

/// Splits a W-invariant character (given on dominant weights) into irreducibles by
/// repeatedly removing the character of a maximal weight. Throws on a negative residual.
inline std::vector<Constituent> peel_character(DominantCharacter ch, const RootSystemBD& rs) {
  const Doubled rho = rho_doubled(rs);
  std::vector<Constituent> out;
  while (true) {
    for (auto it = ch.begin(); it != ch.end();) it = (it->second == 0) ? ch.erase(it) : std::next(it);
    if (ch.empty()) break;
    const Doubled* best = nullptr;
    std::int64_t best_norm = 0;
    for (const auto& [w, m] : ch) {
      if (m < 0) throw ValidationError("character peeling hit a negative multiplicity at " + format_weight(w));
      Doubled s(w);
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += rho[i];
      std::int64_t n = detail::dot(s, s);
      if (!best || n > best_norm || (n == best_norm && w > *best)) {
        best = &w;
        best_norm = n;
      }
    }
    HighestWeight hw(rs, from_doubled(*best));
    BigInt count = ch.at(*best);
    for (const auto& [w, m] : weight_multiplicities(hw)) {
      auto it = ch.find(w);
      BigInt sub = m * count;
      if (it == ch.end()) throw ValidationError("character peeling: weight " + format_weight(w) + " missing");
      it->second -= sub;
      if (it->second < 0) throw ValidationError("character peeling hit a negative multiplicity at " + format_weight(w));
    }
    out.push_back({hw, count});
  }
  std::sort(out.begin(), out.end(), [](const Constituent& a, const Constituent& b) {
    return a.weight.doubled() > b.weight.doubled();
  });
  return out;
}

/// The grade of an ambient weight is minus its first coordinate; the grade g piece sits in
/// cohomological degree 2n + 2g.
using GradedBranching = std::map<HalfInt, std::vector<Constituent>>;

/// Character of V_mu graded by the first coordinate, restricted to target-dominant
/// weights of the remaining coordinates.
inline std::map<HalfInt, DominantCharacter> graded_target_character(const HighestWeight& mu, const RootSystemBD& target) {
  const auto& amb = mu.root_system();
  if (amb.family != target.family || amb.rank != target.rank + 1)
    throw ValidationError("branching requires so(N+2) -> so(N) of the same family");
  std::map<HalfInt, DominantCharacter> graded;
  for (const auto& [nu, m] : weight_multiplicities(mu)) {
    bool has_zero = false;
    bool odd_neg = false;
    for (auto x : nu) {
      if (x == 0) has_zero = true;
      if (x < 0) odd_neg = !odd_neg;
    }
    Doubled absv;
    for (auto x : nu) absv.push_back(detail::abs64(x));
    std::sort(absv.begin(), absv.end(), std::greater<>());
    std::vector<std::int64_t> values(absv);
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (auto a : values) {
      Doubled rest(absv);
      rest.erase(std::find(rest.begin(), rest.end(), a));
      bool rest_has_zero = std::find(rest.begin(), rest.end(), 0) != rest.end();
      for (int s : {1, -1}) {
        if (a == 0 && s == -1) continue;
        std::int64_t x = s * a;
        HalfInt grade = HalfInt::from_twice(-x);
        if (target.family == Family::B || rest.empty() || rest_has_zero) {
          graded[grade][rest] += m;
        } else if (has_zero) {
          // the moved coordinate was the zero: both signs of the last entry occur
          graded[grade][rest] += m;
          Doubled mirror(rest);
          mirror.back() = -mirror.back();
          graded[grade][mirror] += m;
        } else {
          // sign product over all coordinates is fixed along a D orbit
          bool need_neg = odd_neg != (s < 0);
          Doubled w(rest);
          if (need_neg) w.back() = -w.back();
          graded[grade][w] += m;
        }
      }
    }
  }
  return graded;
}

/// Decomposition of V_mu (ambient so(N+2)) into so(N)-irreducibles in each grade.
inline GradedBranching grade_and_branch(const HighestWeight& mu, const RootSystemBD& target) {
  GradedBranching out;
  for (auto& [g, ch] : graded_target_character(mu, target)) out[g] = peel_character(ch, target);
  return out;
}

/// Merges D-type labels (..., x) and (..., -x) into (..., |x|), recording whether both occurred.
struct NormalizedConstituent {
  HighestWeight weight;
  BigInt mult;
  bool mirror_pair;  // both (..., x) and (..., -x) appeared, x != 0
};

inline std::vector<NormalizedConstituent> normalize_mirrors(const std::vector<Constituent>& cs) {
  std::map<Doubled, std::pair<BigInt, int>> acc;  // mult, sign mask
  std::map<Doubled, RootSystemBD> rs_of;
  for (const auto& c : cs) {
    Doubled w = c.weight.doubled();
    int mask = 1;
    if (!w.empty() && w.back() < 0) {
      w.back() = -w.back();
      mask = 2;
    }
    auto& slot = acc[w];
    slot.first += c.mult;
    slot.second |= mask;
    rs_of.emplace(w, c.weight.root_system());
  }
  std::vector<NormalizedConstituent> out;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    out.push_back({HighestWeight(rs_of.at(it->first), from_doubled(it->first)), it->second.first, it->second.second == 3});
  return out;
}

// ---- characters of explicit modules, used for cross-checks ----

/// Full character: every weight with multiplicity.
using FullCharacter = std::map<Doubled, BigInt>;

/// Weights of the defining module: +-e_i, and 0 for B.
inline std::vector<Doubled> standard_module_weights(const RootSystemBD& rs) {
  std::vector<Doubled> ws;
  for (std::size_t i = 0; i < rs.rank; ++i)
    for (int s : {1, -1}) {
      Doubled w(rs.rank, 0);
      w[i] = 2 * s;
      ws.push_back(w);
    }
  if (rs.family == Family::B) ws.emplace_back(rs.rank, 0);
  return ws;
}

/// Character of Sym^k (allow_repeats) or the k-th wedge of a module with the given weights.
inline FullCharacter power_character(const std::vector<Doubled>& weights, std::size_t k, bool allow_repeats) {
  const std::size_t r = weights.empty() ? 0 : weights[0].size();
  // dp[j] = character of degree-j products of the weights seen so far
  std::vector<FullCharacter> dp(k + 1);
  dp[0][Doubled(r, 0)] = 1;
  for (const auto& w : weights) {
    std::vector<FullCharacter> next = dp;
    for (std::size_t j = 0; j < k; ++j) {
      const FullCharacter& src = allow_repeats ? next[j] : dp[j];
      for (const auto& [v, m] : src) {
        Doubled s(v);
        for (std::size_t i = 0; i < r; ++i) s[i] += w[i];
        next[j + 1][s] += m;
      }
    }
    dp = std::move(next);
  }
  return dp[k];
}

inline DominantCharacter dominant_part(const FullCharacter& ch, const RootSystemBD& rs) {
  DominantCharacter out;
  for (const auto& [w, m] : ch)
    if (m != 0 && is_dominant(w, rs)) out[w] = m;
  return out;
}

}  // namespace hkmono

#endif
