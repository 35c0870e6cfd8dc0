#ifndef HKMONO_REDUCTION_HPP
#define HKMONO_REDUCTION_HPP

// Graded-dimension bookkeeping for Clifford algebras and endomorphism algebras, and the
// exhaustive consistency check between a degree-2 profile and a Clifford-module profile.

#include "hkmono/rational.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <exception>
#include <vector>

namespace hkmono {

/// Graded piece dimensions, index -> dim.
using GradedProfile = std::map<int, std::size_t>;
using BigProfile = std::map<int, BigInt>;

enum class SubsetParity { Even, All };

inline bool is_symmetric(const GradedProfile& p) {
  for (const auto& [i, c] : p) {
    if (c == 0) continue;
    auto it = p.find(-i);
    if (it == p.end() || it->second != c) return false;
  }
  return true;
}

inline std::size_t profile_total(const GradedProfile& p) {
  std::size_t t = 0;
  for (const auto& [i, c] : p) t += c;
  return t;
}

inline BigProfile drop_zeros(BigProfile p) {
  std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
  return p;
}

/// Counts of subset sums of the multiset beta, over even-size subsets or all subsets:
/// coefficients of prod_j (1 + t x^{beta_j}).
inline BigProfile wedge_eigen_multiset(const GradedProfile& beta, SubsetParity parity) {
  // by_parity[p][e] = number of subsets of size parity p with sum e
  std::map<int, BigInt> even{{0, 1}}, odd;
  for (const auto& [value, count] : beta)
    for (std::size_t c = 0; c < count; ++c) {
      std::map<int, BigInt> ne(even), no(odd);
      for (const auto& [e, k] : even) no[e + value] += k;
      for (const auto& [e, k] : odd) ne[e + value] += k;
      even = std::move(ne);
      odd = std::move(no);
    }
  if (parity == SubsetParity::All)
    for (const auto& [e, k] : odd) even[e] += k;
  return drop_zeros(even);
}

/// Graded dims of End(H) from those of H: gr_i = sum_{a - b = i} s_a s_b.
inline BigProfile end_graded_dims(const GradedProfile& s) {
  if (!is_symmetric(s)) throw ValidationError("end_graded_dims requires a symmetric profile");
  BigProfile out;
  for (const auto& [a, x] : s)
    for (const auto& [b, y] : s) out[a - b] += BigInt(static_cast<unsigned long>(x)) * static_cast<unsigned long>(y);
  return drop_zeros(out);
}

/// Degree-2 candidate built from a1 strings of length 1, a2 of length 2, a3 of length 3.
struct StringCounts {
  std::size_t a1 = 0, a2 = 0, a3 = 0;
  GradedProfile profile() const {
    GradedProfile p;
    if (a3) p[2] = p[-2] = a3;
    if (a2) p[1] = p[-1] = a2;
    if (a1 + a3) p[0] = a1 + a3;
    return p;
  }
};

/// Clifford-module side: s_1 = s_{-1}, s_0 with 2 s_1 + s_0 = m.
struct ModuleProfile {
  BigInt m;
  BigInt s1;
  BigInt s0;
  Rational ratio() const { return Rational(s1) / Rational(m); }
};

inline BigProfile module_end_dims(const ModuleProfile& a) {
  BigProfile out;
  out[2] = out[-2] = a.s1 * a.s1;
  out[1] = out[-1] = a.s1 * a.s0 * 2;
  out[0] = a.s0 * a.s0 + a.s1 * a.s1 * 2;
  return drop_zeros(out);
}

struct ReductionCase {
  std::string label;  // "a", "b", "c", "d", or "other"
  StringCounts strings;
  GradedProfile x_profile;
  BigProfile clifford_dims;
  std::optional<ModuleProfile> module;  // set when consistent
  bool consistent = false;
};

struct ReductionReport {
  std::size_t b2 = 0;
  std::size_t primitive_dim = 0;  // b2 - 1
  BigInt module_dim;              // m
  SubsetParity parity = SubsetParity::Even;
  std::vector<ReductionCase> consistent;
  std::vector<ReductionCase> rejected;

  std::vector<std::string> consistent_labels() const {
    std::vector<std::string> out;
    for (const auto& c : consistent) out.push_back(c.label);
    return out;
  }
};

inline std::string case_label(const StringCounts& s) {
  if (s.a2 == 0 && s.a3 == 0) return "a";
  if (s.a2 == 2 && s.a3 == 0) return "b";
  if (s.a2 == 0 && s.a3 == 1) return "c";
  if (s.a2 == 1 && s.a3 == 0) return "d";
  return "other";
}

/// Labels the degree-2 classification predicts for this b2.
inline std::vector<std::string> expected_case_labels(std::size_t b2) {
  if (b2 == 4) return {"a", "c"};
  return {"a", "b", "c"};
}

/// All degree-2 string profiles on b2 - 1 dimensions with weights in [-2, 2], each checked
/// against every module profile of the matching Clifford dimension.
inline ReductionReport enumerate_reduction_cases(std::size_t b2) {
  if (b2 < 4) throw ValidationError("enumerate_reduction_cases requires b2 >= 4");
  if (b2 > 64) throw ValidationError("b2 too large for enumeration");
  ReductionReport rep;
  rep.b2 = b2;
  rep.primitive_dim = b2 - 1;
  const bool even = b2 % 2 == 0;
  rep.parity = even ? SubsetParity::Even : SubsetParity::All;
  rep.module_dim = BigInt(1) << static_cast<mp_bitcnt_t>(even ? (b2 - 2) / 2 : (b2 - 1) / 2);
  const std::size_t d = b2 - 1;

  for (std::size_t a3 = 0; 3 * a3 <= d; ++a3)
    for (std::size_t a2 = 0; 3 * a3 + 2 * a2 <= d; ++a2) {
      StringCounts s{d - 3 * a3 - 2 * a2, a2, a3};
      ReductionCase c;
      c.strings = s;
      c.label = case_label(s);
      c.x_profile = s.profile();
      c.clifford_dims = wedge_eigen_multiset(c.x_profile, rep.parity);
      // gr_2 = s1^2 bounds the search
      const BigInt& m = rep.module_dim;
      for (BigInt s1 = 0; 2 * s1 <= m; ++s1) {
        ModuleProfile a{m, s1, m - 2 * s1};
        if (module_end_dims(a) == c.clifford_dims) {
          c.module = a;
          c.consistent = true;
          break;
        }
        auto it = c.clifford_dims.find(2);
        BigInt top = it == c.clifford_dims.end() ? BigInt(0) : it->second;
        if (s1 * s1 > top) break;
      }
      (c.consistent ? rep.consistent : rep.rejected).push_back(std::move(c));
    }
  auto by_label = [](const ReductionCase& x, const ReductionCase& y) {
    return std::tie(x.label, x.strings.a3, x.strings.a2) < std::tie(y.label, y.strings.a3, y.strings.a2);
  };
  std::sort(rep.consistent.begin(), rep.consistent.end(), by_label);
  std::sort(rep.rejected.begin(), rep.rejected.end(), by_label);
  return rep;
}

/// Enumerations for b2 in [lo, hi], computed on up to `jobs` threads, returned in order.
inline std::vector<ReductionReport> enumerate_reduction_range(std::size_t lo, std::size_t hi, std::size_t jobs = 1) {
  if (lo > hi) throw InputError("empty b2 range");
  std::vector<ReductionReport> out(hi - lo + 1);
  std::vector<std::exception_ptr> errors(out.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < out.size(); i = next++) {
      try {
        out[i] = enumerate_reduction_cases(lo + i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::max<std::size_t>(jobs, 1); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace hkmono

#endif
