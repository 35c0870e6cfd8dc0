#ifndef HKMONO_JSON_IO_HPP
#define HKMONO_JSON_IO_HPP

// JSON encodings. Rationals travel as strings "p/q" or "p".

#include "hkmono/clifford.hpp"
#include "hkmono/nilpotent.hpp"
#include "hkmono/predict.hpp"
#include "hkmono/reduction.hpp"
#include "hkmono/weights.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hkmono {

using json = nlohmann::json;

inline json to_json_value(const Rational& r) { return format_rational(r); }
inline json to_json_value(const BigInt& z) { return z.get_str(); }
inline json to_json_value(HalfInt h) { return h.str(); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw InputError("expected a rational as a string, got " + j.dump());
}

inline HalfInt half_int_from_json(const json& j) { return HalfInt::from_rational(rational_from_json(j)); }

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad field '") + key + "': " + e.what());
  }
}

inline json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_rational(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InputError("matrix must be a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) throw InputError("matrix rows must be arrays");
  const std::size_t cols = j[0].size();
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw InputError("matrix rows have unequal lengths");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j[i][c]);
  }
  return m;
}

inline json vector_to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(format_rational(x));
  return a;
}

/// {"gram": ...}, {"bbf": {"r": r, "odd": b}} or {"b2": n}.
inline QuadraticSpace quad_space_from_json(const json& j) {
  if (j.contains("gram")) {
    auto g = matrix_from_json(j.at("gram"));
    if (j.contains("dim") && field<std::size_t>(j, "dim") != g.rows()) throw InputError("dim does not match the Gram matrix");
    return QuadraticSpace(std::move(g));
  }
  if (j.contains("bbf")) {
    const json& b = j.at("bbf");
    return standard_bbf_gram(field<std::size_t>(b, "r"), field<bool>(b, "odd"));
  }
  if (j.contains("b2")) return bbf_model(field<std::size_t>(j, "b2"));
  throw InputError("quadratic space needs 'gram', 'bbf' or 'b2'");
}

inline json quad_space_to_json(const QuadraticSpace& q) { return json{{"dim", q.dim()}, {"gram", matrix_to_json(q.gram())}}; }

inline NormalFormTag normal_form_tag_from_json(const json& j) {
  return NormalFormTag{parse_reduction_type(field<std::string>(j, "type")), field<std::size_t>(j, "b2")};
}

/// {"matrix": ...} with optional space fields, or {"normal_form": {"type", "b2"}}.
inline NilpotentOperator nilpotent_from_json(const json& j) {
  if (!j.is_object()) throw InputError("nilpotent input must be a JSON object");
  if (j.contains("normal_form")) return normal_form(normal_form_tag_from_json(j.at("normal_form")));
  if (!j.contains("matrix")) throw InputError("nilpotent input needs 'matrix' or 'normal_form'");
  RationalMatrix m = matrix_from_json(j.at("matrix"));
  if (!m.is_square()) throw InputError("nilpotent matrix must be square");
  if (j.contains("gram") || j.contains("bbf") || j.contains("b2")) return NilpotentOperator(std::move(m), quad_space_from_json(j));
  return NilpotentOperator(std::move(m));
}

inline json weight_to_json(const RootSystemBD& rs, const Doubled& w) {
  json c = json::array();
  for (auto x : w) c.push_back(HalfInt::from_twice(x).str());
  return json{{"family", to_string(rs.family)}, {"rank", rs.rank}, {"coords", c}};
}

inline json weight_to_json(const HighestWeight& w) { return weight_to_json(w.root_system(), w.doubled()); }

inline std::vector<HalfInt> coords_from_json(const json& j) {
  if (!j.is_array()) throw InputError("coords must be an array");
  std::vector<HalfInt> out;
  for (const auto& x : j) out.push_back(half_int_from_json(x));
  return out;
}

inline HighestWeight weight_from_json(const json& j) {
  RootSystemBD rs{parse_family(field<std::string>(j, "family")), field<std::size_t>(j, "rank")};
  if (rs.rank < 1) throw InputError("rank must be at least 1");
  if (!j.contains("coords")) throw InputError("missing field 'coords'");
  return HighestWeight(rs, coords_from_json(j.at("coords")));
}

inline LLVDecomposition decomposition_from_json(const json& j) {
  LLVDecomposition d;
  d.n = field<std::size_t>(j, "n");
  d.b2 = field<std::size_t>(j, "b2");
  if (!j.contains("components") || !j.at("components").is_array()) throw InputError("missing array 'components'");
  for (const auto& c : j.at("components")) {
    LLVComponent comp;
    if (!c.contains("mu")) throw InputError("component needs 'mu'");
    comp.mu = coords_from_json(c.at("mu"));
    if (c.contains("mult")) {
      const json& m = c.at("mult");
      if (m.is_number_integer()) comp.mult = BigInt(std::to_string(m.get<long long>()));
      else if (m.is_string()) comp.mult = BigInt(m.get<std::string>());
      else throw InputError("mult must be an integer");
    }
    comp.parity = c.contains("parity") ? parse_degree_parity(field<std::string>(c, "parity"))
                                       : (comp.mu.empty() || comp.mu[0].is_integer() ? DegreeParity::Even : DegreeParity::Odd);
    d.components.push_back(std::move(comp));
  }
  return d;
}

inline json decomposition_to_json(const LLVDecomposition& d) {
  json comps = json::array();
  for (const auto& c : d.components) {
    json mu = json::array();
    for (auto h : c.mu) mu.push_back(h.str());
    comps.push_back(json{{"mu", mu}, {"mult", c.mult.get_str()}, {"parity", to_string(c.parity)}});
  }
  return json{{"n", d.n}, {"b2", d.b2}, {"components", comps}};
}

inline json profile_to_json(const GradedProfile& p) {
  json o = json::object();
  for (const auto& [k, v] : p) o[std::to_string(k)] = v;
  return o;
}

inline json profile_to_json(const BigProfile& p) {
  json o = json::object();
  for (const auto& [k, v] : p) o[std::to_string(k)] = v.get_str();
  return o;
}

inline json nu_table_to_json(const NuTable& t) {
  json rows = json::array();
  for (const auto& e : t.entries) {
    json r{{"degree", e.degree}, {"source", e.source}, {"within_bound", e.within_bound}};
    r["value"] = e.value ? json(*e.value) : json(nullptr);
    r["bound"] = e.bound ? json(*e.bound) : json(nullptr);
    rows.push_back(std::move(r));
  }
  return json{{"type", to_string(t.type)}, {"n", t.n}, {"parity", to_string(t.parity)}, {"entries", rows}};
}

inline json reduction_case_to_json(const ReductionCase& c) {
  const auto& p = c.x_profile;
  auto get = [&](int i) { return p.count(i) ? p.at(i) : std::size_t{0}; };
  json o{{"case", c.label},    {"r2", get(2)},          {"r1", get(1)},
         {"r0", get(0)},       {"consistent", c.consistent}, {"clifford_dims", profile_to_json(c.clifford_dims)}};
  if (c.module) {
    o["module"] = json{{"m", c.module->m.get_str()}, {"s1", c.module->s1.get_str()}, {"s0", c.module->s0.get_str()}};
    o["ratio_r1"] = format_rational(c.module->ratio());
  }
  return o;
}

inline json reduction_report_to_json(const ReductionReport& r, bool include_rejected) {
  json cons = json::array(), rej = json::array();
  for (const auto& c : r.consistent) cons.push_back(reduction_case_to_json(c));
  for (const auto& c : r.rejected) rej.push_back(reduction_case_to_json(c));
  json o{{"b2", r.b2},
         {"m", r.module_dim.get_str()},
         {"clifford", r.parity == SubsetParity::Even ? "even" : "full"},
         {"cases", cons},
         {"expected", expected_case_labels(r.b2)},
         {"rejected_count", r.rejected.size()},
         {"pass", r.consistent_labels() == expected_case_labels(r.b2)}};
  if (include_rejected) o["rejected"] = rej;
  return o;
}

}  // namespace hkmono

#endif
