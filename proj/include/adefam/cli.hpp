#pragma once

// Command-line front end. `run` is the whole program minus main(), so tests
// can drive it with in-memory streams.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adefam/error.hpp"
#include "adefam/floer.hpp"
#include "adefam/index.hpp"
#include "adefam/intersect.hpp"
#include "adefam/lattice.hpp"
#include "adefam/rational.hpp"
#include "adefam/rootsys.hpp"
#include "adefam/weights.hpp"

namespace adefam::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// "A7", " e8 ", "d4" -> diagram. Positions in errors index the untrimmed input.
inline DynkinDiagram parse_spec(std::string_view s) {
  auto fail = [&](std::size_t pos, const std::string& what) -> Error {
    return Error(ErrorCode::ParseError, "diagram spec '" + std::string(s) + "' at position " +
                                            std::to_string(pos) + ": " + what);
  };
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (b == e) throw fail(b, "empty");

  Family fam;
  switch (std::toupper(static_cast<unsigned char>(s[b]))) {
    case 'A': fam = Family::A; break;
    case 'D': fam = Family::D; break;
    case 'E': fam = Family::E; break;
    default: throw fail(b, "expected A, D or E");
  }
  if (b + 1 == e) throw fail(e, "missing rank");
  long long rank = 0;
  for (std::size_t i = b + 1; i < e; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw fail(i, "expected a digit");
    rank = rank * 10 + (s[i] - '0');
    if (rank > 1000000) throw fail(i, "rank too large");
  }
  return build_diagram(fam, static_cast<int>(rank));
}

inline IntVector parse_int_list(std::string_view s) {
  IntVector out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = s.find(',', pos);
    const std::string_view tok = s.substr(pos, comma == std::string_view::npos ? s.size() - pos : comma - pos);
    const Rational r = parse_rational(tok);
    if (!is_integer(r)) throw Error(ErrorCode::ParseError, "expected an integer at position " + std::to_string(pos));
    out.push_back(static_cast<std::int64_t>(boost::multiprecision::numerator(r)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::string join(const IntVector& v, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

inline Json rational_json(const Rational& r) { return to_string(r); }

/// Result of one subcommand: the JSON payload plus the same data as a flat table.
struct Output {
  Json result = Json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  int exit_code = kOk;
};

// ---- subcommands ------------------------------------------------------------

inline Output roots_command(const DynkinDiagram& g) {
  Output o;
  const auto roots = enumerate_roots(g);
  Json list = Json::array();
  o.header = {"root", "height", "positive"};
  for (const auto& r : roots) {
    std::int64_t h = 0;
    for (auto c : r.coords) h += c;
    list.push_back(r.coords);
    o.rows.push_back({join(r.coords), std::to_string(h), r.is_positive() ? "1" : "0"});
  }
  o.result["diagram"] = g.name();
  o.result["count"] = roots.size();
  o.result["roots"] = std::move(list);
  return o;
}

inline Output weights_command(const DynkinDiagram& g) {
  Output o;
  const WeightAssignment w = propagate_weights(g);
  Json vertices = Json::array(), edges = Json::array();
  o.header = {"kind", "i", "j", "first", "second"};
  for (int i = 0; i < g.rank(); ++i) {
    const auto& p = w.at(i);
    vertices.push_back({{"vertex", i + 1}, {"a", p.a}, {"b", p.b}});
    o.rows.push_back({"vertex", std::to_string(i + 1), "-", std::to_string(p.a), std::to_string(p.b)});
  }
  for (const auto& e : g.edges()) {
    const auto wij = w.w(e.u, e.v), wji = w.w(e.v, e.u);
    edges.push_back({{"i", e.u + 1}, {"j", e.v + 1}, {"w_ij", wij}, {"w_ji", wji}});
    o.rows.push_back({"edge", std::to_string(e.u + 1), std::to_string(e.v + 1), std::to_string(wij),
                      std::to_string(wji)});
  }
  o.result["diagram"] = g.name();
  o.result["vertices"] = std::move(vertices);
  o.result["edges"] = std::move(edges);
  return o;
}

inline Output f_table_command(const DynkinDiagram& g) {
  Output o;
  const TripleForm form(g);
  Json rows = Json::array();
  o.header = {"root", "f"};
  for (const auto& r : enumerate_roots(g)) {
    const auto f = form.cubic(r.coords);
    rows.push_back({{"root", r.coords}, {"f", f}});
    o.rows.push_back({join(r.coords), std::to_string(f)});
  }
  o.result["diagram"] = g.name();
  o.result["rows"] = std::move(rows);
  return o;
}

inline Output verify_command(const DynkinDiagram& g) {
  Output o;
  const FVerification v = verify_f_on_roots(g);
  Json bad = Json::array();
  for (const auto& x : v.violations) bad.push_back({{"root", x.root.coords}, {"f", x.value}});
  Json bad_steps = Json::array();
  for (const auto& [from, to] : v.hasse_violations) bad_steps.push_back({{"from", from.coords}, {"to", to.coords}});
  const std::string summary =
      std::to_string(v.root_count) + " roots, " +
      (v.ok() ? "all |f|=" + std::to_string(kRootCubicValue)
              : std::to_string(v.violations.size()) + " with |f|!=" + std::to_string(kRootCubicValue));
  o.result["diagram"] = g.name();
  o.result["root_count"] = v.root_count;
  o.result["positive_ok"] = v.positive_ok;
  o.result["negative_ok"] = v.negative_ok;
  o.result["hasse_steps"] = v.hasse_steps;
  o.result["violations"] = std::move(bad);
  o.result["hasse_violations"] = std::move(bad_steps);
  o.result["ok"] = v.ok();
  o.result["summary"] = summary;
  o.header = {"key", "value"};
  o.rows = {{"diagram", g.name()},
            {"root_count", std::to_string(v.root_count)},
            {"positive_ok", std::to_string(v.positive_ok)},
            {"negative_ok", std::to_string(v.negative_ok)},
            {"hasse_steps", std::to_string(v.hasse_steps)},
            {"violations", std::to_string(v.violations.size())},
            {"hasse_violations", std::to_string(v.hasse_violations.size())},
            {"summary", summary}};
  o.exit_code = v.ok() ? kOk : kVerificationFailed;
  return o;
}

inline void index_report(Output& o, const std::string& kind, const FamilyIndexInput& in, const Rational& index) {
  o.result["kind"] = kind;
  o.result["c1_cubed"] = in.c1_cubed;
  o.result["p1_dot_c1"] = in.p1_dot_c1;
  o.result["index"] = rational_json(index);
  // c_1(-Ind), the scalar the cobordism maps and the switching rule consume.
  o.result["chern"] = rational_json(-index);
  o.header = {"key", "value"};
  o.rows = {{"kind", kind},
            {"c1_cubed", std::to_string(in.c1_cubed)},
            {"p1_dot_c1", std::to_string(in.p1_dot_c1)},
            {"index", to_string(index)},
            {"chern", to_string(-index)}};
}

inline Output index_ade_command(const DynkinDiagram& g, const IntVector& root) {
  Output o;
  const TripleForm form(g);
  const FamilyIndexInput in = ade_index_input(form, root);
  const Rational idx = degree1_index(in);
  o.result["diagram"] = g.name();
  o.result["root"] = root;
  index_report(o, "ade", in, idx);
  const auto f = form.cubic(root);
  o.result["f"] = f;
  o.result["f_over_24"] = rational_json(make_rational(f, 24));
  o.rows.push_back({"f", std::to_string(f)});
  return o;
}

inline Output index_blowup_command(std::int64_t multiple) {
  Output o;
  const FamilyIndexInput in = blowup_index_input(multiple);
  o.result["multiple"] = multiple;
  index_report(o, "blowup", in, degree1_index(in));
  return o;
}

inline Output index_sphere_command(std::int64_t k, std::int64_t n) {
  Output o;
  const Rational v = sphere_family_index({k, n});
  o.result["kind"] = "sphere";
  o.result["k"] = k;
  o.result["n"] = n;
  o.result["index"] = rational_json(v);
  o.header = {"key", "value"};
  o.rows = {{"kind", "sphere"}, {"k", std::to_string(k)}, {"n", std::to_string(n)}, {"index", to_string(v)}};
  return o;
}

inline Output lattice_command(const LatticeProblem& p) {
  Output o;
  const SignFlipReport rep = enumerate_sign_flips(p);
  Json bounds{{"feasible", rep.bounds.feasible},
              {"x0_max", rep.bounds.x0_max},
              {"x1_max", rep.bounds.x1_max},
              {"tail_max", rep.bounds.tail_max},
              {"derivation", rep.bounds.derivation}};
  o.result["m"] = p.m;
  o.result["square"] = p.square;
  o.result["a"] = rational_json(p.a);
  o.result["bounds"] = std::move(bounds);
  o.result["count"] = rep.solutions.size();
  o.result["solutions"] = rep.solutions;
  if (p.m <= kMaxCountRank) {
    const ClassCount cc = count_basic_classes_bound(p.m, p.square);
    o.result["class_count_bound"] = {{"box", cc.box}, {"count", cc.count}};
  }
  o.header.push_back("x0");
  for (int i = 1; i <= p.m; ++i) o.header.push_back("x" + std::to_string(i));
  for (const auto& x : rep.solutions) {
    std::vector<std::string> row;
    for (auto v : x) row.push_back(std::to_string(v));
    o.rows.push_back(std::move(row));
  }
  return o;
}

// ---- glue pipelines ---------------------------------------------------------

namespace detail {

inline const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    throw Error(ErrorCode::ParseError, where + ": missing '" + key + "'");
  return obj.at(key);
}

inline Rational rational_field(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw Error(ErrorCode::ParseError, where + ": expected an integer or a \"p/q\" string");
}

inline std::int64_t int_field(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, where + ": expected an integer");
  return v.get<std::int64_t>();
}

inline Rational rational_or(const Json& params, const char* key, const Rational& dflt, const std::string& where) {
  return params.contains(key) ? rational_field(params.at(key), where + "." + key) : dflt;
}

inline std::int64_t int_or(const Json& params, const char* key, std::int64_t dflt, const std::string& where) {
  return params.contains(key) ? int_field(params.at(key), where + "." + key) : dflt;
}

inline std::string element_string(const GradedElement& x) {
  return to_string(x.coefficient) + "*e" + std::string(to_string(x.flavor)) + "_{" + to_string(x.grading) + "}";
}

// Scalar c = c_1(-Ind)[Q] either given directly or computed from an index input.
inline Rational arrow_chern(const Json& params, const std::string& where, std::string& note) {
  if (params.contains("c")) {
    note = "c given";
    return rational_field(params.at("c"), where + ".c");
  }
  const Json& idx = require(params, "index", where);
  Rational index;
  if (idx.contains("ade")) {
    const DynkinDiagram g = parse_spec(idx.at("ade").get<std::string>());
    IntVector root;
    for (const auto& t : require(idx, "root", where + ".index")) root.push_back(int_field(t, where + ".index.root"));
    index = degree1_index(ade_index_input(TripleForm(g), root));
    note = "index of " + g.name() + " root (" + join(root) + ") = " + to_string(index);
  } else if (idx.contains("blowup")) {
    const auto m = int_field(idx.at("blowup"), where + ".index.blowup");
    index = degree1_index(blowup_index_input(m));
    note = "blow-up index with c1 = " + std::to_string(m) + " PD[S] is " + to_string(index);
  } else if (idx.contains("sphere")) {
    const Json& sp = idx.at("sphere");
    index = sphere_family_index({int_field(require(sp, "k", where), where + ".k"),
                                 int_field(require(sp, "n", where), where + ".n")});
    note = "sphere family index " + to_string(index);
  } else {
    throw Error(ErrorCode::ParseError, where + ".index: expected 'ade', 'blowup' or 'sphere'");
  }
  note += "; c = c_1(-Ind) = " + to_string(-index);
  return -index;
}

struct GlueState {
  std::optional<CobordismArrow> arrow;
  std::optional<HatImage> image;
  std::optional<Rational> sw;
  std::optional<Rational> paired;
  std::optional<Rational> value;
};

}  // namespace detail

/// Evaluates a pipeline: a JSON array of {kind, params} stages, or an object
/// holding one under "stages".
inline Output glue_command(const Json& doc) {
  using namespace detail;
  const Json& stages = doc.is_object() ? require(doc, "stages", "pipeline") : doc;
  if (!stages.is_array() || stages.empty())
    throw Error(ErrorCode::ParseError, "pipeline: expected a non-empty list of stages");

  GlueState st;
  Json audit = Json::array();
  Output o;
  o.header = {"stage", "kind", "value", "audit"};

  for (std::size_t s = 0; s < stages.size(); ++s) {
    const std::string where = "stage " + std::to_string(s + 1);
    const Json& stage = stages[s];
    const std::string kind = require(stage, "kind", where).get<std::string>();
    const Json params = stage.contains("params") ? stage.at("params") : Json::object();
    std::string line;

    if (kind == "arrow") {
      std::string note;
      CobordismArrow a;
      a.coefficient = arrow_chern(params, where, note);
      if (params.contains("d")) {
        a.shift = rational_field(params.at("d"), where + ".d");
      } else {
        a.shift = arrow_shift(rational_field(require(params, "c1_squared", where), where + ".c1_squared"),
                              int_field(require(params, "sigma", where), where + ".sigma"),
                              int_or(params, "dim_q", 2, where));
      }
      a.b_plus = int_or(params, "b_plus", 0, where);
      const std::string parity = params.value("parity", std::string("even"));
      if (parity != "even" && parity != "odd") throw Error(ErrorCode::ParseError, where + ".parity: even or odd");
      a.dim_q_parity = parity == "odd" ? Parity::Odd : Parity::Even;
      a.target.froyshov = rational_or(params, "h", 0, where);
      if (st.arrow) {
        a = compose(*st.arrow, a);
        note += "; composed with previous arrow";
      }
      st.arrow = a;
      st.image = hm_hat_of_generator(a);
      st.value = st.image->element.coefficient;
      line = note + "; d = " + to_string(a.shift) + ", b+ = " + std::to_string(a.b_plus) + ", h = " +
             to_string(a.target.froyshov) + " -> " + element_string(st.image->element);
      if (st.image->above_support)
        line += st.image->consistent(a) ? " (d-1 above support, c = 0 as required)"
                                        : " (d-1 above support: c must vanish, inconsistent input)";
    } else if (kind == "pairing") {
      if (!st.image) throw Error(ErrorCode::ParseError, where + ": pairing needs a preceding arrow");
      SwitchingInput in;
      in.sw_fiber = rational_field(require(params, "sw", where), where + ".sw");
      in.fiber_shift = rational_field(require(params, "fiber_shift", where), where + ".fiber_shift");
      in.fiber_dim = int_or(params, "fiber_dim", 0, where);
      in.y = st.arrow->target;
      in.chern = st.arrow->coefficient;
      const Rational family_shift = in.fiber_shift - in.fiber_dim;
      if (family_shift != st.arrow->shift)
        throw Error(ErrorCode::InvalidGrading, where + ": family shift " + to_string(st.arrow->shift) +
                                                   " differs from d' - d(s,M) = " + to_string(family_shift));
      const SwitchingTrace tr = switching_via_gluing(in);
      st.sw = in.sw_fiber;
      st.paired = evaluate_gluing(st.image->element, tr.fiber_dual);
      st.value = st.paired;
      line = "fiber: " + element_string(tr.fiber_image) + ", U^" + std::to_string(in.fiber_dim / 2) + " -> " +
             element_string(tr.fiber_lowered) + ", dual at " + to_string(tr.fiber_dual.grading) +
             " with SW = " + to_string(in.sw_fiber) + " (recovered " + to_string(tr.sw_check) + "); <" +
             element_string(st.image->element) + ", dual> = " + to_string(*st.paired);
    } else if (kind == "switch") {
      const Rational chern =
          params.contains("chern") ? rational_field(params.at("chern"), where + ".chern")
          : st.arrow              ? st.arrow->coefficient
                                  : throw Error(ErrorCode::ParseError, where + ": chern not given and no arrow");
      const Rational sw = params.contains("sw") ? rational_field(params.at("sw"), where + ".sw")
                          : st.sw              ? *st.sw
                                               : throw Error(ErrorCode::ParseError, where + ": sw not given");
      const auto b1 = int_or(params, "b_plus_m1", st.arrow ? st.arrow->b_plus : 0, where);
      const auto b2 = int_or(params, "b_plus_m2", 2, where);
      st.value = switching(chern, sw, b1, b2);
      line = "switching(" + to_string(chern) + ", " + to_string(sw) + ", " + std::to_string(b1) + ", " +
             std::to_string(b2) + ") = " + to_string(*st.value);
      if (st.paired) line += *st.paired == *st.value ? "; agrees with pairing" : "; DISAGREES with pairing";
      o.result["agrees_with_pairing"] = !st.paired || *st.paired == *st.value;
    } else if (kind == "wall") {
      if (!st.value) throw Error(ErrorCode::ParseError, where + ": no value to move across walls");
      const auto j = int_or(params, "j", 0, where);
      const Rational c = rational_or(params, "C", 0, where);
      const auto b = int_or(params, "b_plus", 3, where);
      const Rational before = *st.value;
      st.value = wall_crossing(before, j, c, b);
      line = to_string(before) + " + " + std::to_string(j) + " * " + to_string(c) + " = " + to_string(*st.value);
    } else if (kind == "pullback") {
      if (!st.value) throw Error(ErrorCode::ParseError, where + ": no value to pull back");
      const auto deg = int_field(require(params, "degree", where), where + ".degree");
      const Rational before = *st.value;
      st.value = pullback(before, deg);
      line = std::to_string(deg) + " * " + to_string(before) + " = " + to_string(*st.value);
    } else {
      throw Error(ErrorCode::ParseError, where + ": unknown stage kind '" + kind + "'");
    }

    audit.push_back({{"stage", s + 1}, {"kind", kind}, {"value", rational_json(*st.value)}, {"audit", line}});
    o.rows.push_back({std::to_string(s + 1), kind, to_string(*st.value), line});
  }
  const Rational fsw = *st.value;
  o.result["fsw"] = rational_json(fsw);
  o.result["magnitude"] = rational_json(fsw < 0 ? Rational(-fsw) : fsw);
  o.result["stages"] = std::move(audit);
  if (o.result.contains("agrees_with_pairing") && !o.result["agrees_with_pairing"].get<bool>())
    o.exit_code = kVerificationFailed;
  return o;
}

// ---- emission and dispatch --------------------------------------------------

inline std::string render(const std::string& command, const Output& o, const std::string& format) {
  if (format == "tsv") {
    std::string s;
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += '\t';
        s += cells[i];
      }
      s += '\n';
    };
    line(o.header);
    for (const auto& r : o.rows) line(r);
    return s;
  }
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["result"] = o.result;
  return doc.dump(2) + "\n";
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of ADE plumbings and their families over S^2", "adefam"};
  app.require_subcommand(1);
  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--out", out_path, "Write output to this file instead of standard output");
  // Allow the global flags after the subcommand too.
  app.fallthrough();

  std::string spec;
  auto* roots = app.add_subcommand("roots", "Enumerate all roots");
  roots->add_option("spec", spec, "Diagram, e.g. E8")->required();
  auto* weights = app.add_subcommand("weights", "Circle-action weights per vertex and edge");
  weights->add_option("spec", spec)->required();
  auto* ftable = app.add_subcommand("f-table", "The cubic f on every root");
  ftable->add_option("spec", spec)->required();
  auto* verify = app.add_subcommand("verify", "Check |f| = 24 on all roots and along Hasse paths");
  verify->add_option("spec", spec)->required();

  auto* index = app.add_subcommand("index", "Degree-1 family index");
  index->require_subcommand(1);
  std::string root_list;
  auto* ade = index->add_subcommand("ade", "c1 = 2 PD[S_root] on a plumbed family");
  ade->add_option("spec", spec)->required();
  ade->add_option("--root", root_list, "Comma-separated root coordinates")->required();
  std::int64_t multiple = -3;
  auto* blowup = index->add_subcommand("blowup", "Blown-up family");
  blowup->add_option("--multiple", multiple, "c1 as a multiple of PD[S]");
  std::int64_t k = 0, n = 0;
  auto* sphere = index->add_subcommand("sphere", "Family from a pair of spheres");
  sphere->add_option("--k", k, "Self-intersection of S0")->required();
  sphere->add_option("--n", n, "<c1, [S0]>")->required();

  int m = 1;
  std::int64_t square = 0, dim = 0;
  std::string a_text;
  auto* lattice = app.add_subcommand("lattice", "Characteristic vectors flipping sign between H and H'");
  lattice->add_option("--m", m, "Number of negative summands")->required();
  auto* sq_opt = lattice->add_option("--square", square, "Square of c1");
  auto* n_opt = lattice->add_option("--n", dim, "Expected dimension; sets square = 4n - m + 9");
  sq_opt->excludes(n_opt);
  lattice->add_option("--a", a_text, "H' = e0 - a e1, as P/Q")->required();

  std::string pipeline_path;
  auto* glue = app.add_subcommand("glue", "Evaluate a gluing/switching pipeline");
  glue->add_option("pipeline", pipeline_path, "Pipeline JSON file")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  std::string command;
  Output o;
  try {
    if (*roots) {
      command = "roots";
      o = roots_command(parse_spec(spec));
    } else if (*weights) {
      command = "weights";
      o = weights_command(parse_spec(spec));
    } else if (*ftable) {
      command = "f-table";
      o = f_table_command(parse_spec(spec));
    } else if (*verify) {
      command = "verify";
      o = verify_command(parse_spec(spec));
    } else if (*ade) {
      command = "index ade";
      o = index_ade_command(parse_spec(spec), parse_int_list(root_list));
    } else if (*blowup) {
      command = "index blowup";
      o = index_blowup_command(multiple);
    } else if (*sphere) {
      command = "index sphere";
      o = index_sphere_command(k, n);
    } else if (*lattice) {
      command = "lattice";
      if (!*sq_opt && !*n_opt) throw Error(ErrorCode::ParseError, "lattice needs --square or --n");
      const std::int64_t s = *n_opt ? square_for_dimension(m, dim) : square;
      o = lattice_command({m, s, parse_rational(a_text)});
    } else if (*glue) {
      command = "glue";
      std::ifstream in(pipeline_path);
      if (!in) throw Error(ErrorCode::ParseError, "cannot read " + pipeline_path);
      Json doc;
      try {
        doc = Json::parse(in);
      } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, pipeline_path + ": " + e.what());
      }
      o = glue_command(doc);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    err << "error: malformed pipeline: " << e.what() << "\n";
    return kUsage;
  }

  const std::string text = render(command, o, format);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << out_path << "\n";
      return kUsage;
    }
    f << text;
  }
  return o.exit_code;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace adefam::cli
