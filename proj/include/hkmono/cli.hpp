#ifndef HKMONO_CLI_HPP
#define HKMONO_CLI_HPP

// Command-line front end. run_cli is callable in-process; the executable only forwards.
// Exit codes: 0 success, 1 validation failure, 2 input or parse error.

#include "hkmono/clifford.hpp"
#include "hkmono/json_io.hpp"
#include "hkmono/llv.hpp"
#include "hkmono/predict.hpp"
#include "hkmono/reduction.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace hkmono::cli {

enum class Format { Json, Markdown, Csv };

struct Table {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string title;
  json data = json::object();
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<Table> tables;
  int status = 0;
};

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline std::string render(const Report& r, Format f) {
  std::ostringstream os;
  if (f == Format::Json) {
    os << r.data.dump(2) << "\n";
    return os.str();
  }
  if (f == Format::Markdown) {
    os << "# " << r.title << "\n\n";
    for (const auto& [k, v] : r.fields) os << "- " << k << ": " << v << "\n";
    for (const auto& t : r.tables) {
      os << "\n";
      if (!t.title.empty()) os << "## " << t.title << "\n\n";
      os << "|";
      for (const auto& h : t.headers) os << " " << h << " |";
      os << "\n|";
      for (std::size_t i = 0; i < t.headers.size(); ++i) os << " --- |";
      os << "\n";
      for (const auto& row : t.rows) {
        os << "|";
        for (const auto& c : row) os << " " << c << " |";
        os << "\n";
      }
    }
    return os.str();
  }
  bool first = true;
  if (r.tables.empty()) {
    os << "key,value\n";
    for (const auto& [k, v] : r.fields) os << csv_cell(k) << "," << csv_cell(v) << "\n";
    return os.str();
  }
  for (const auto& t : r.tables) {
    if (!first) os << "\n";
    first = false;
    for (std::size_t i = 0; i < t.headers.size(); ++i) os << (i ? "," : "") << csv_cell(t.headers[i]);
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << "\n";
    }
  }
  return os.str();
}

inline json read_json_input(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open input file '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

// ---- commands ----

inline Report command_nu(const NilpotentOperator& n) {
  Report r;
  r.title = "Nilpotency index";
  auto graded = graded_dims(n);
  auto filt = weight_filtration(n);
  json blocks = json::object();
  for (auto [size, count] : jordan_block_sizes(n.matrix())) blocks[std::to_string(size)] = count;
  json fdims = json::object();
  Table t{"graded pieces", {"i", "dim gr_i", "dim M_i"}, {}};
  for (int i = filt.lo; i <= filt.hi; ++i) {
    fdims[std::to_string(i)] = filt.dim_at(i);
    std::size_t g = graded.count(i) ? graded.at(i) : 0;
    t.rows.push_back({std::to_string(i), std::to_string(g), std::to_string(filt.dim_at(i))});
  }
  r.data = json{{"nu", n.nu()}, {"dim", n.dim()}, {"jordan_blocks", blocks}, {"graded_dims", profile_to_json(graded)},
                {"filtration_dims", fdims}};
  r.fields = {{"dim", std::to_string(n.dim())}, {"nu", std::to_string(n.nu())}};
  if (n.space()) {
    auto jm = jm_cocharacter(n);
    json c = json::array();
    std::vector<std::string> cs;
    for (int x : jm.coords) {
      c.push_back(x);
      cs.push_back(std::to_string(x));
    }
    r.data["cocharacter"] = c;
    r.fields.push_back({"cocharacter", "(" + join(cs, ",") + ")"});
  }
  r.tables.push_back(std::move(t));
  return r;
}

inline Report command_filtration(const NilpotentOperator& n) {
  Report r;
  r.title = "Weight filtration";
  auto f = weight_filtration(n);
  bool ok = verify_weight_filtration(n, f);
  json subs = json::object();
  Table t{"filtration", {"i", "dim M_i", "basis"}, {}};
  for (int i = f.lo; i <= f.hi; ++i) {
    json basis = json::array();
    std::vector<std::string> vs;
    for (const auto& v : f.at(i)) {
      basis.push_back(vector_to_json(v));
      std::vector<std::string> xs;
      for (const auto& x : v) xs.push_back(format_rational(x));
      vs.push_back("(" + join(xs, " ") + ")");
    }
    subs[std::to_string(i)] = basis;
    t.rows.push_back({std::to_string(i), std::to_string(f.dim_at(i)), join(vs, " ")});
  }
  r.data = json{{"nu", n.nu()}, {"lo", f.lo}, {"hi", f.hi}, {"subspaces", subs}, {"verified", ok}};
  r.fields = {{"nu", std::to_string(n.nu())}, {"verified", yes_no(ok)}};
  r.tables.push_back(std::move(t));
  r.status = ok ? 0 : 1;
  return r;
}

inline Report command_normal_form(const NormalFormTag& tag) {
  Report r;
  r.title = "Normal form";
  auto n = normal_form(tag);
  auto jm = jm_cocharacter(n);
  json c = json::array();
  for (int x : jm.coords) c.push_back(x);
  r.data = json{{"type", to_string(tag.type)}, {"b2", tag.b2}, {"matrix", matrix_to_json(n.matrix())},
                {"gram", matrix_to_json(n.space()->gram())}, {"nu", n.nu()},
                {"graded_dims", profile_to_json(graded_dims(n))}, {"cocharacter", c}};
  r.fields = {{"type", to_string(tag.type)}, {"b2", std::to_string(tag.b2)}, {"nu", std::to_string(n.nu())}};
  Table t{"matrix", {}, {}};
  for (std::size_t j = 0; j < n.dim(); ++j) t.headers.push_back("c" + std::to_string(j));
  for (std::size_t i = 0; i < n.dim(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < n.dim(); ++j) row.push_back(format_rational(n.matrix()(i, j)));
    t.rows.push_back(std::move(row));
  }
  r.tables.push_back(std::move(t));
  return r;
}

inline Report command_clifford_check(const QuadraticSpace& q, std::optional<ReductionType> type) {
  Report r;
  r.title = "Clifford check";
  CliffordAlgebra cl(q);
  const std::size_t m = q.dim();
  bool relations = true;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto ei = cl.generator(i), ej = cl.generator(j);
      auto s = cl.multiply(ei, ej);
      auto t = cl.multiply(ej, ei);
      for (std::size_t k = 0; k < s.size(); ++k) s[k] += t[k];
      auto expect = cl.one();
      expect[0] = q.gram()(i, j) * 2;
      relations = relations && s == expect;
    }
  bool commute = true;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto l = cl.left_regular_rep(cl.generator(i));
      auto rr = cl.right_regular_rep(cl.generator(j));
      commute = commute && l * rr == rr * l;
    }
  r.data = json{{"m", m}, {"dim", cl.dim()}, {"even_dim", cl.dim() / 2}, {"relations", relations}, {"left_right_commute", commute}};
  r.fields = {{"m", std::to_string(m)},
              {"dim Cl", std::to_string(cl.dim())},
              {"dim Cl+", std::to_string(cl.dim() / 2)},
              {"relations", yes_no(relations)},
              {"left/right commute", yes_no(commute)}};
  bool ok = relations && commute;
  if (m <= 8) {
    std::size_t c = cl.right_commutant_dim();
    bool good = c == cl.dim();
    r.data["commutant_dim"] = c;
    r.data["commutant_is_left_multiplications"] = good;
    r.fields.push_back({"commutant dim", std::to_string(c)});
    ok = ok && good;
  }
  auto spin = spin_rep(q);
  std::size_t image = spin.image_dim(m % 2 == 1);
  bool surjective = image == spin.dim * spin.dim;
  r.data["spin"] = json{{"dim", spin.dim}, {"relations", spin.verify_relations()}, {"image_dim", image}, {"surjective", surjective}};
  r.fields.push_back({"spin dim", std::to_string(spin.dim)});
  r.fields.push_back({"spin surjective", yes_no(surjective)});
  ok = ok && surjective;
  if (type) {
    auto n = normal_form({*type, m});
    if (n.space()->gram() != q.gram()) throw ValidationError("--type requires the model form of the same dimension");
    std::size_t nu = nilpotency_index(spin.so_action(n.matrix()));
    r.data["spin_nu"] = nu;
    r.data["type"] = to_string(*type);
    r.fields.push_back({"spin nu (type " + to_string(*type) + ")", std::to_string(nu)});
  }
  r.data["pass"] = ok;
  r.status = ok ? 0 : 1;
  return r;
}

inline Report command_verify_thm52(std::size_t lo, std::size_t hi, std::size_t jobs, bool include_rejected) {
  Report r;
  r.title = "Degree-2 reduction cases";
  auto reps = enumerate_reduction_range(lo, hi, jobs);
  json sections = json::array();
  Table t{"consistent cases", {"b2", "case", "r2", "r1", "r0", "m", "s1", "s0", "r1(A)/b1(A)"}, {}};
  bool all = true;
  for (const auto& rep : reps) {
    json s = reduction_report_to_json(rep, include_rejected);
    all = all && s["pass"].get<bool>();
    sections.push_back(std::move(s));
    for (const auto& c : rep.consistent) {
      auto get = [&](int i) { return std::to_string(c.x_profile.count(i) ? c.x_profile.at(i) : 0); };
      t.rows.push_back({std::to_string(rep.b2), c.label, get(2), get(1), get(0), c.module->m.get_str(),
                        c.module->s1.get_str(), c.module->s0.get_str(), format_rational(c.module->ratio())});
    }
  }
  r.data = json{{"sections", sections}, {"pass", all}};
  r.fields = {{"range", std::to_string(lo) + ".." + std::to_string(hi)}, {"pass", yes_no(all)}};
  r.tables.push_back(std::move(t));
  if (include_rejected) {
    Table rt{"rejected candidates", {"b2", "case", "r2", "r1", "r0"}, {}};
    for (const auto& rep : reps)
      for (const auto& c : rep.rejected) {
        auto get = [&](int i) { return std::to_string(c.x_profile.count(i) ? c.x_profile.at(i) : 0); };
        rt.rows.push_back({std::to_string(rep.b2), c.label, get(2), get(1), get(0)});
      }
    r.tables.push_back(std::move(rt));
  }
  r.status = all ? 0 : 1;
  return r;
}

inline Report command_weyl_max(const RootSystemBD& rs, const std::vector<HalfInt>& lambda, const std::vector<std::int64_t>& h) {
  Report r;
  r.title = "Weyl-orbit maximum";
  HalfInt v = weyl_orbit_max(to_doubled(lambda), h, rs);
  json hj = json::array();
  for (auto x : h) hj.push_back(x);
  r.data = json{{"weight", weight_to_json(rs, to_doubled(lambda))}, {"h", hj}, {"value", v.str()}};
  r.fields = {{"weight", format_weight(to_doubled(lambda))}, {"value", v.str()}};
  return r;
}

inline Report command_branch(const HighestWeight& mu) {
  Report r;
  r.title = "Graded branching";
  const auto& amb = mu.root_system();
  if (amb.rank < 2) throw ValidationError("branching needs ambient rank at least 2");
  RootSystemBD target{amb.family, amb.rank - 1};
  auto br = grade_and_branch(mu, target);
  json grades = json::array();
  Table t{"constituents", {"grade", "weight", "mult", "mirror pair"}, {}};
  for (const auto& [g, cs] : br) {
    json items = json::array();
    for (const auto& c : normalize_mirrors(cs)) {
      items.push_back(json{{"weight", weight_to_json(c.weight)}, {"mult", c.mult.get_str()}, {"mirror_pair", c.mirror_pair}});
      t.rows.push_back({g.str(), c.weight.str(), c.mult.get_str(), yes_no(c.mirror_pair)});
    }
    grades.push_back(json{{"grade", g.str()}, {"constituents", items}});
  }
  r.data = json{{"ambient", weight_to_json(mu)}, {"target_rank", target.rank}, {"grades", grades},
                {"dim", weyl_dimension(mu).get_str()}};
  r.fields = {{"ambient", to_string(amb.family) + std::to_string(amb.rank) + " " + mu.str()},
              {"dim", weyl_dimension(mu).get_str()}};
  r.tables.push_back(std::move(t));
  return r;
}

inline Report command_criterion(const LLVDecomposition& d, std::size_t jobs) {
  Report r;
  r.title = "Type II criterion";
  auto rep = theorem71_check(d, jobs);
  r.data = json{{"condition1", rep.condition1}, {"condition2", rep.condition2}, {"agree", rep.agree}};
  r.fields = {{"condition1 (nu = i in every even degree)", yes_no(rep.condition1)},
              {"condition2 (mu0+mu1+mu2 <= n)", yes_no(rep.condition2)},
              {"agree", yes_no(rep.agree)}};
  r.status = rep.agree ? 0 : 1;
  return r;
}

inline Report command_predict(const NuTable& table) {
  Report r;
  r.title = "Nilpotency table";
  auto problems = check_table_invariants(table);
  r.data = nu_table_to_json(table);
  r.data["invariant_violations"] = problems;
  r.fields = {{"type", to_string(table.type)}, {"n", std::to_string(table.n)}, {"parity", to_string(table.parity)}};
  Table t{"", {"degree", "nu", "bound", "source"}, {}};
  for (const auto& e : table.entries)
    t.rows.push_back({std::to_string(e.degree), e.value ? std::to_string(*e.value) : "-",
                      e.bound ? std::to_string(*e.bound) : "-", e.source});
  r.tables.push_back(std::move(t));
  r.status = problems.empty() ? 0 : 1;
  return r;
}

inline Report command_llv_toy(std::size_t b2) {
  Report r;
  r.title = "Total Lie algebra of the toy algebra";
  QuadraticSpace q = bbf_model(b2);
  auto a = mukai_toy_algebra(q);
  auto lie = total_lie_algebra(a);
  auto form = mukai_form_in_toy_order(q);
  bool in_so = true;
  for (const auto& m : lie.basis) in_so = in_so && is_in_so(m, form);
  std::size_t target = (b2 + 2) * (b2 + 1) / 2;
  bool ok = in_so && lie.dim() == target;
  r.data = json{{"b2", b2}, {"dim", lie.dim()}, {"so_dim", target}, {"all_in_so", in_so}, {"pass", ok}};
  r.fields = {{"b2", std::to_string(b2)}, {"dim", std::to_string(lie.dim())}, {"dim so(b2+2)", std::to_string(target)},
              {"all in so", yes_no(in_so)}};
  r.status = ok ? 0 : 1;
  return r;
}

// ---- parsing ----

inline std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw InputError("range must look like A..B");
  try {
    std::size_t a = std::stoul(s.substr(0, dots));
    std::size_t b = std::stoul(s.substr(dots + 2));
    if (a > b) throw InputError("empty range " + s);
    return {a, b};
  } catch (const std::logic_error&) {
    throw InputError("bad range '" + s + "'");
  }
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
  CLI::App app{"Exact orthogonal-representation and nilpotent-monodromy toolkit", "hkmono"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "markdown";
  std::string output;
  std::size_t jobs = 1;
  app.add_option("--format", format, "json, markdown or csv")->check(CLI::IsMember({"json", "markdown", "csv"}));
  app.add_option("--output", output, "write the report to this file");
  app.add_option("--jobs", jobs, "worker threads for parallel enumerations")->check(CLI::PositiveNumber);

  std::string input;
  auto add_input = [&](CLI::App* sub) { sub->add_option("--input", input, "JSON input file ('-' or omitted: stdin)"); };

  auto* nu = app.add_subcommand("nu", "nilpotency index, graded pieces and filtration dims");
  add_input(nu);
  auto* filt = app.add_subcommand("filtration", "weight filtration with bases");
  add_input(filt);

  std::string type_s;
  std::size_t b2 = 0;
  auto* nf = app.add_subcommand("normal-form", "normal-form operator for a reduction type");
  nf->add_option("--type", type_s, "I, II or III")->required();
  nf->add_option("--b2", b2, "dimension of the degree-2 space")->required();

  auto* cc = app.add_subcommand("clifford-check", "Clifford algebra, commutant and spin module checks");
  std::size_t cc_b2 = 7;
  std::string cc_type;
  cc->add_option("--b2", cc_b2, "use the model form of this dimension (default 7)");
  cc->add_option("--type", cc_type, "also report nu of this normal form on the spin module");
  add_input(cc);

  auto* v52 = app.add_subcommand("verify-thm52", "enumerate degree-2 reduction cases");
  std::size_t v_b2 = 0;
  std::string range;
  bool rejected = false;
  v52->add_option("--b2", v_b2, "single b2");
  v52->add_option("--range", range, "range A..B");
  v52->add_flag("--rejected", rejected, "list rejected candidates");

  auto* wm = app.add_subcommand("weyl-max", "max over the Weyl group of <w(lambda), h>");
  wm->set_help_flag("--help", "print this help message and exit");
  std::string family, lambda_s, h_s;
  std::size_t rank_v = 0;
  wm->add_option("--family", family, "B or D")->required();
  wm->add_option("--rank", rank_v, "rank")->required();
  wm->add_option("--lambda", lambda_s, "comma-separated dominant weight")->required();
  wm->add_option("--h", h_s, "comma-separated integer cocharacter")->required();

  auto* br = app.add_subcommand("branch", "grade a module of so(N+2) and branch it to so(N)");
  add_input(br);
  br->add_option("--family", family, "B or D (instead of --input)");
  br->add_option("--lambda", lambda_s, "comma-separated weight (instead of --input)");

  auto* crit = app.add_subcommand("criterion", "check the type II criterion on a decomposition");
  add_input(crit);

  auto* pr = app.add_subcommand("predict", "per-degree nilpotency table");
  add_input(pr);
  std::string fixture;
  std::size_t fixture_n = 0;
  bool odd = false;
  pr->add_option("--type", type_s, "I, II or III")->required();
  pr->add_option("--fixture", fixture, "K3n, Kumn, OG6 or OG10 (instead of --input)");
  pr->add_option("--n", fixture_n, "n for K3n / Kumn fixtures");
  pr->add_flag("--odd", odd, "odd degrees");

  auto* toy = app.add_subcommand("llv-toy", "total Lie algebra of the toy Frobenius algebra");
  std::size_t toy_b2 = 0;
  toy->add_option("--b2", toy_b2, "dimension of the degree-2 space")->required();

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Format fmt = format == "json" ? Format::Json : (format == "csv" ? Format::Csv : Format::Markdown);
  try {
    Report rep;
    if (*nu) {
      rep = command_nu(nilpotent_from_json(read_json_input(input, in)));
    } else if (*filt) {
      rep = command_filtration(nilpotent_from_json(read_json_input(input, in)));
    } else if (*nf) {
      rep = command_normal_form({parse_reduction_type(type_s), b2});
    } else if (*cc) {
      QuadraticSpace q = input.empty() ? bbf_model(cc_b2) : quad_space_from_json(read_json_input(input, in));
      std::optional<ReductionType> t;
      if (!cc_type.empty()) t = parse_reduction_type(cc_type);
      rep = command_clifford_check(q, t);
    } else if (*v52) {
      std::size_t lo, hi;
      if (!range.empty()) {
        std::tie(lo, hi) = parse_range(range);
      } else if (v_b2) {
        lo = hi = v_b2;
      } else {
        throw InputError("verify-thm52 needs --b2 or --range");
      }
      rep = command_verify_thm52(lo, hi, jobs, rejected);
    } else if (*wm) {
      RootSystemBD rs{parse_family(family), rank_v};
      std::vector<HalfInt> lam;
      for (const auto& s : split_list(lambda_s)) lam.push_back(HalfInt::from_rational(parse_rational(s)));
      std::vector<std::int64_t> h;
      for (const auto& s : split_list(h_s)) {
        Rational x = parse_rational(s);
        if (x.get_den() != 1) throw InputError("cocharacter entries must be integers");
        h.push_back(x.get_num().get_si());
      }
      rep = command_weyl_max(rs, lam, h);
    } else if (*br) {
      if (!lambda_s.empty()) {
        std::vector<HalfInt> lam;
        for (const auto& s : split_list(lambda_s)) lam.push_back(HalfInt::from_rational(parse_rational(s)));
        if (family.empty()) throw InputError("branch --lambda needs --family");
        rep = command_branch(HighestWeight(RootSystemBD{parse_family(family), lam.size()}, lam));
      } else {
        rep = command_branch(weight_from_json(read_json_input(input, in)));
      }
    } else if (*crit) {
      rep = command_criterion(decomposition_from_json(read_json_input(input, in)), jobs);
    } else if (*pr) {
      ReductionType t = parse_reduction_type(type_s);
      if (!fixture.empty()) {
        auto f = deformation_type(fixture, fixture_n);
        rep = command_predict(odd ? predict_nu_odd(f, t) : predict_nu_even(verbitsky_only(f.n, f.b2), t, jobs));
      } else {
        auto d = decomposition_from_json(read_json_input(input, in));
        rep = command_predict(odd ? predict_nu_odd(d, t, jobs) : predict_nu_even(d, t, jobs));
      }
    } else if (*toy) {
      rep = command_llv_toy(toy_b2);
    }
    std::string text = render(rep, fmt);
    if (output.empty()) {
      out << text;
    } else {
      std::ofstream f(output);
      if (!f) throw InputError("cannot write output file '" + output + "'");
      f << text;
    }
    return rep.status;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hkmono::cli

#endif
