#ifndef HKMONO_PREDICT_HPP
#define HKMONO_PREDICT_HPP

// Nilpotency predictions per cohomological degree from an LLV-type decomposition, the
// Type II criterion, and fixtures for the known deformation types.

#include "hkmono/nilpotent.hpp"
#include "hkmono/weights.hpp"

#include <atomic>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace hkmono {

enum class DegreeParity { Even, Odd };

inline std::string to_string(DegreeParity p) { return p == DegreeParity::Even ? "even" : "odd"; }

inline DegreeParity parse_degree_parity(const std::string& s) {
  if (s == "even") return DegreeParity::Even;
  if (s == "odd") return DegreeParity::Odd;
  throw InputError("unknown parity '" + s + "' (expected even or odd)");
}

/// Raw coordinates are kept so that invalid input can be reported rather than rejected.
struct LLVComponent {
  std::vector<HalfInt> mu;
  BigInt mult = 1;
  DegreeParity parity = DegreeParity::Even;
};

struct LLVDecomposition {
  std::size_t n = 1;
  std::size_t b2 = 3;
  std::vector<LLVComponent> components;

  RootSystemBD ambient() const { return orthogonal_root_system(b2 + 2); }
  RootSystemBD target() const { return orthogonal_root_system(b2); }
};

/// The Verbitsky component (n, 0, .., 0) alone.
inline LLVDecomposition verbitsky_only(std::size_t n, std::size_t b2) {
  LLVDecomposition d{n, b2, {}};
  std::vector<HalfInt> mu(d.ambient().rank, HalfInt());
  mu[0] = HalfInt::from_int(static_cast<long>(n));
  d.components.push_back({mu, 1, DegreeParity::Even});
  return d;
}

struct Violation {
  std::size_t component;  // index, or npos for whole-decomposition rules
  std::string rule;
  std::string detail;
};

/// Empty iff every invariant holds. With known_type_bound, also enforces mu0+mu1+mu2 <= n
/// on even components.
inline std::vector<Violation> validate_decomposition(const LLVDecomposition& d, bool known_type_bound = false) {
  std::vector<Violation> out;
  constexpr auto npos = static_cast<std::size_t>(-1);
  if (d.n < 1) out.push_back({npos, "range", "n must be at least 1"});
  if (d.b2 < 3) {
    out.push_back({npos, "range", "b2 must be at least 3"});
    return out;
  }
  const RootSystemBD amb = d.ambient();
  bool verbitsky = false;
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    const auto& c = d.components[k];
    if (c.mu.size() != amb.rank) {
      out.push_back({k, "rank", "expected " + std::to_string(amb.rank) + " coordinates"});
      continue;
    }
    Doubled dbl = to_doubled(c.mu);
    const std::string w = format_weight(dbl);
    if (c.mult < 1) out.push_back({k, "multiplicity", w + " has multiplicity below 1"});
    if (!detail::same_parity_class(dbl)) {
      out.push_back({k, "parity", w + " mixes integer and half-integer coordinates"});
      continue;
    }
    if (!is_dominant(dbl, amb)) {
      out.push_back({k, "dominance", w + " is not dominant for " + to_string(amb.family) + std::to_string(amb.rank)});
      continue;
    }
    bool integral = c.mu[0].is_integer();
    if (integral != (c.parity == DegreeParity::Even))
      out.push_back({k, "parity", w + " is labeled " + to_string(c.parity) + " but has " +
                                      (integral ? "integer" : "half-integer") + " coordinates"});
    if (c.mu[0].twice() > 2 * static_cast<std::int64_t>(d.n))
      out.push_back({k, "degree-range", w + " has mu0 > n and would reach negative degree"});
    bool is_v = integral && c.mu[0] == HalfInt::from_int(static_cast<long>(d.n));
    for (std::size_t i = 1; i < c.mu.size(); ++i)
      if (c.mu[i] != HalfInt()) is_v = false;
    if (is_v) verbitsky = true;
    if (known_type_bound && integral) {
      HalfInt s = c.mu[0];
      if (c.mu.size() > 1) s = s + c.mu[1];
      if (c.mu.size() > 2) s = s + c.mu[2].abs();
      if (s > HalfInt::from_int(static_cast<long>(d.n))) out.push_back({k, "weight-bound", w + " has mu0+mu1+mu2 > n"});
    }
  }
  if (!verbitsky) out.push_back({npos, "verbitsky", "component (n, 0, .., 0) is missing"});
  return out;
}

inline void require_valid(const LLVDecomposition& d) {
  auto v = validate_decomposition(d);
  if (!v.empty()) throw ValidationError("invalid decomposition: " + v.front().rule + ": " + v.front().detail);
}

/// Positive eigenvalue coordinates of the normal form's Jacobson-Morozov h.
inline std::vector<int> type_cocharacter(ReductionType t, std::size_t b2) {
  auto coords = jm_cocharacter(normal_form({t, b2})).coords;
  coords.resize(b2 / 2, 0);
  return coords;
}

/// mu0 + mu1 + mu2 <= n on every even component.
inline bool gklr_condition(const LLVDecomposition& d) {
  require_valid(d);
  for (const auto& c : d.components) {
    if (c.parity != DegreeParity::Even) continue;
    HalfInt s = c.mu[0];
    if (c.mu.size() > 1) s = s + c.mu[1];
    if (c.mu.size() > 2) s = s + c.mu[2].abs();
    if (s > HalfInt::from_int(static_cast<long>(d.n))) return false;
  }
  return true;
}

struct NuEntry {
  std::size_t degree = 0;
  std::optional<std::size_t> value;  // absent when only a bound is known
  std::optional<std::size_t> bound;
  std::string source;                // computed, duality, type-I, equality, bound-only, spin, vanishing
  bool within_bound = true;
};

struct NuTable {
  ReductionType type = ReductionType::I;
  std::size_t n = 0;
  DegreeParity parity = DegreeParity::Even;
  std::vector<NuEntry> entries;

  const NuEntry& at_degree(std::size_t deg) const {
    for (const auto& e : entries)
      if (e.degree == deg) return e;
    throw ValidationError("no table entry for degree " + std::to_string(deg));
  }
};

namespace detail {

inline std::size_t to_index(HalfInt v) {
  if (!v.is_integer() || v.twice() < 0) throw ValidationError("nilpotency value is not a nonnegative integer");
  return static_cast<std::size_t>(v.twice() / 2);
}

/// Branchings of the selected components, computed in parallel, in input order.
inline std::vector<GradedBranching> branch_components(const LLVDecomposition& d, DegreeParity parity, std::size_t jobs) {
  std::vector<const LLVComponent*> sel;
  for (const auto& c : d.components)
    if (c.parity == parity) sel.push_back(&c);
  std::vector<GradedBranching> out(sel.size());
  std::vector<std::exception_ptr> errs(sel.size());
  std::atomic<std::size_t> next{0};
  const RootSystemBD amb = d.ambient(), tgt = d.target();
  auto worker = [&] {
    for (std::size_t i = next++; i < sel.size(); i = next++) {
      try {
        out[i] = grade_and_branch(HighestWeight(amb, sel[i]->mu), tgt);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::max<std::size_t>(jobs, 1); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

/// max of nu_on_irrep over constituents in the given grade, 0 if none.
inline std::size_t max_nu_at(const std::vector<GradedBranching>& branches, HalfInt grade, const std::vector<int>& cochar) {
  std::size_t best = 0;
  for (const auto& b : branches) {
    auto it = b.find(grade);
    if (it == b.end()) continue;
    for (const auto& c : it->second) best = std::max(best, to_index(nu_on_irrep(c.weight, cochar)));
  }
  return best;
}

}  // namespace detail

/// nu(N_{2i}) for every even degree 0..4n; the upper half is mirrored from the lower.
inline NuTable predict_nu_even(const LLVDecomposition& d, ReductionType t, std::size_t jobs = 1) {
  require_valid(d);
  NuTable table{t, d.n, DegreeParity::Even, {}};
  std::vector<GradedBranching> branches;
  std::vector<int> cochar;
  if (t != ReductionType::I) {
    branches = detail::branch_components(d, DegreeParity::Even, jobs);
    cochar = type_cocharacter(t, d.b2);
  }
  for (std::size_t i = 0; i <= d.n; ++i) {
    NuEntry e;
    e.degree = 2 * i;
    e.bound = 2 * i;
    if (t == ReductionType::I) {
      e.value = 0;
      e.source = "type-I";
    } else {
      HalfInt grade = HalfInt::from_int(static_cast<long>(i) - static_cast<long>(d.n));
      e.value = detail::max_nu_at(branches, grade, cochar);
      e.source = "computed";
    }
    e.within_bound = *e.value <= *e.bound;
    table.entries.push_back(e);
  }
  for (std::size_t i = d.n + 1; i <= 2 * d.n; ++i) {
    NuEntry e = table.entries[2 * d.n - i];
    e.degree = 2 * i;
    e.source = "duality";
    table.entries.push_back(e);
  }
  return table;
}

/// nu(N_{2i+1}) from explicitly supplied odd components.
inline NuTable predict_nu_odd(const LLVDecomposition& d, ReductionType t, std::size_t jobs = 1) {
  require_valid(d);
  bool any = false;
  for (const auto& c : d.components) any = any || c.parity == DegreeParity::Odd;
  if (!any) throw ValidationError("odd predictions requested but no odd components were supplied");
  auto branches = detail::branch_components(d, DegreeParity::Odd, jobs);
  auto cochar = type_cocharacter(t, d.b2);
  NuTable table{t, d.n, DegreeParity::Odd, {}};
  for (std::size_t i = 0; i < d.n; ++i) {
    NuEntry e;
    e.degree = 2 * i + 1;
    HalfInt grade = HalfInt::from_twice(static_cast<std::int64_t>(2 * i + 1) - 2 * static_cast<std::int64_t>(d.n));
    e.value = detail::max_nu_at(branches, grade, cochar);
    e.source = "computed";
    if (i >= 1) {
      e.bound = 2 * i - 1;
      e.within_bound = *e.value <= *e.bound;
    } else {
      e.within_bound = *e.value == 0;
    }
    table.entries.push_back(e);
  }
  for (std::size_t i = d.n; i < 2 * d.n; ++i) {
    NuEntry e = table.entries[2 * d.n - 1 - i];
    e.degree = 2 * i + 1;
    e.source = "duality";
    table.entries.push_back(e);
  }
  return table;
}

// ---- known deformation types ----

enum class KnownType { K3n, Kumn, OG6, OG10 };

struct DeformationTypeData {
  KnownType kind;
  std::string name;
  std::size_t n;
  std::size_t b2;
  bool has_odd;
  std::size_t b3;
};

inline DeformationTypeData deformation_type(const std::string& name, std::size_t n = 0) {
  if (name == "K3n") {
    if (n == 0) n = 2;
    if (n < 2) throw ValidationError("K3n requires n >= 2");
    return {KnownType::K3n, name, n, 23, false, 0};
  }
  if (name == "Kumn") {
    if (n == 0) n = 2;
    if (n < 2) throw ValidationError("Kumn requires n >= 2");
    return {KnownType::Kumn, name, n, 7, true, 8};
  }
  if (name == "OG6") {
    if (n != 0 && n != 3) throw ValidationError("OG6 has n = 3");
    return {KnownType::OG6, name, 3, 8, false, 0};
  }
  if (name == "OG10") {
    if (n != 0 && n != 5) throw ValidationError("OG10 has n = 5");
    return {KnownType::OG10, name, 5, 24, false, 0};
  }
  throw InputError("unknown deformation type '" + name + "' (expected K3n, Kumn, OG6, OG10)");
}

/// The third cohomology of Kum_n as a module over so(7): the spin representation.
inline HighestWeight kum_h3_weight() {
  HalfInt h = HalfInt::from_twice(1);
  return HighestWeight(RootSystemBD{Family::B, 3}, {h, h, h});
}

/// Odd-degree table for a known type. Degree 3 is computed from the spin module; other
/// degrees carry the type-III equality, zero for type I, or only the bound for type II.
inline NuTable predict_nu_odd(const DeformationTypeData& f, ReductionType t) {
  if (!f.has_odd) throw ValidationError(f.name + " has no odd cohomology");
  NuTable table{t, f.n, DegreeParity::Odd, {}};
  const std::size_t deg3 = detail::to_index(nu_on_irrep(kum_h3_weight(), type_cocharacter(t, f.b2)));
  for (std::size_t i = 0; i < f.n; ++i) {
    NuEntry e;
    e.degree = 2 * i + 1;
    if (i == 0) {
      e.value = 0;
      e.source = "vanishing";
    } else {
      e.bound = 2 * i - 1;
      if (i == 1) {
        e.value = deg3;
        e.source = "spin";
      } else if (t == ReductionType::I) {
        e.value = 0;
        e.source = "type-I";
      } else if (t == ReductionType::III) {
        e.value = 2 * i - 1;
        e.source = "equality";
      } else {
        e.source = "bound-only";
      }
      if (e.value) e.within_bound = *e.value <= *e.bound;
    }
    table.entries.push_back(e);
  }
  for (std::size_t i = f.n; i < 2 * f.n; ++i) {
    NuEntry e = table.entries[2 * f.n - 1 - i];
    e.degree = 2 * i + 1;
    e.source = e.source == "bound-only" ? "bound-only" : "duality";
    table.entries.push_back(e);
  }
  return table;
}

struct CriterionReport {
  bool condition1 = false;  // type II values equal i in every even degree 2i <= 2n
  bool condition2 = false;  // mu0 + mu1 + mu2 <= n on even components
  bool agree = false;
};

inline CriterionReport theorem71_check(const LLVDecomposition& d, std::size_t jobs = 1) {
  if (d.b2 < 5) throw ValidationError("the type II criterion requires b2 >= 5");
  CriterionReport r;
  NuTable t = predict_nu_even(d, ReductionType::II, jobs);
  r.condition1 = true;
  for (std::size_t i = 0; i <= d.n; ++i)
    if (t.at_degree(2 * i).value != i) r.condition1 = false;
  r.condition2 = gklr_condition(d);
  r.agree = r.condition1 == r.condition2;
  return r;
}

/// Bound and symmetry checks on a finished table.
inline std::vector<std::string> check_table_invariants(const NuTable& t) {
  std::vector<std::string> out;
  for (const auto& e : t.entries) {
    if (!e.within_bound) out.push_back("degree " + std::to_string(e.degree) + " exceeds its bound");
    std::size_t mirror = 4 * t.n - e.degree;
    const auto& m = t.at_degree(mirror);
    if (m.value != e.value) out.push_back("degree " + std::to_string(e.degree) + " breaks duality");
  }
  if (t.parity == DegreeParity::Even) {
    if (t.at_degree(0).value != 0) out.push_back("degree 0 is nonzero");
  }
  return out;
}

}  // namespace hkmono

#endif
