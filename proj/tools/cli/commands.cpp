#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fundom/ak_reduction.hpp"
#include "fundom/gl3_paving.hpp"
#include "fundom/orthogonal_family.hpp"
#include "fundom/series.hpp"
#include "svg.hpp"

namespace fundom::cli {

namespace {

Json conventions() {
  return {{"sign_zero", 1},
          {"polynomial_variable", "q = t^2"},
          {"v_overlap_priority", "V1"},
          {"borel_vertex_key", "sigma with B' = sigma.B^-"},
          {"borel_region_key", "w' with B' = w'.B"}};
}

Json tie_break_meta() {
  return {{"xi_hat", {2, 0, -2}}, {"scale_rule", "2*d*(M+1), M = max |coordinate| of point and vertices"}};
}

Json document(const std::string& name, Json args, Json payload, Json metadata) {
  metadata["conventions"] = conventions();
  return {{"schema_version", kSchemaVersion},
          {"command", {{"name", name}, {"args", std::move(args)}}},
          {"payload", std::move(payload)},
          {"metadata", std::move(metadata)}};
}

Json poly_json(const IntPolynomial& q_poly) {
  return {{"q", q_poly.str("q")},
          {"t", q_poly.substitute_square().str("t")},
          {"q_coefficients", q_poly.coeffs()},
          {"value_at_1", q_poly.evaluate_at_one()}};
}

void require_positive(int v, const char* what) {
  if (v < 1) throw UsageError(std::string(what) + " must be a positive integer");
}

RootValuation gl3(int n1, int n2) {
  require_positive(n1, "n1");
  require_positive(n2, "n2");
  return RootValuation({n1, n2});
}

RootValuation sorted_gl3(int n1, int n2) {
  if (n1 > n2) throw UsageError("this command requires n1 <= n2");
  return gl3(n1, n2);
}

Json symmetry_meta(int n1, int n2) {
  if (n1 <= n2) return nullptr;
  std::ostringstream os;
  os << "input (" << n1 << "," << n2 << ") evaluated as (" << n2 << "," << n1
     << "); the two valuations share one Poincare polynomial";
  return os.str();
}

Json label_json(const ParabolicLabel& label) {
  Json j{{"label", label.str()}};
  switch (label.kind) {
    case ParabolicLabel::Kind::Full:
      j["kind"] = "full";
      break;
    case ParabolicLabel::Kind::Maximal: {
      j["kind"] = "maximal";
      std::vector<int> block;
      for (int a : label.upper_block) block.push_back(a + 1);
      j["upper_block"] = block;
      break;
    }
    case ParabolicLabel::Kind::Borel:
      j["kind"] = "borel";
      j["w_prime"] = label.borel_elem().one_line();
      break;
  }
  return j;
}

}  // namespace

Json cmd_poincare(int n1, int n2, const std::string& mode) {
  if (mode != "closed" && mode != "pipeline" && mode != "both") throw UsageError("mode must be closed, pipeline or both");
  const RootValuation rv = gl3(n1, n2);
  const auto norm = normalize_gl3(rv);
  Json payload{{"n1", norm.rv.n(0)}, {"n2", norm.rv.n(1)}, {"swapped", norm.swapped}};
  IntPolynomial closed;
  IntPolynomial pipeline;
  if (mode != "pipeline") {
    closed = closed_form(rv).halve_exponents();
    payload["closed"] = poly_json(closed);
  }
  if (mode != "closed") {
    pipeline = poincare_pipeline(rv);
    payload["pipeline"] = poly_json(pipeline);
  }
  if (mode == "both") payload["equal"] = closed == pipeline;
  Json meta = Json::object();
  if (norm.swapped) meta["symmetry"] = symmetry_meta(n1, n2);
  return document("poincare", {{"n1", n1}, {"n2", n2}, {"mode", mode}}, std::move(payload), std::move(meta));
}

Json cmd_fixed_points(int n1, int n2, const std::string& regions) {
  if (!regions.empty() && regions != "triangle" && regions != "v" && regions != "ak") {
    throw UsageError("regions must be triangle, v or ak");
  }
  const RootValuation rv = sorted_gl3(n1, n2);
  Json payload;
  Json meta = Json::object();
  Json points = Json::array();
  if (regions == "triangle") {
    for (const auto& mu : triangle_points(rv)) {
      const auto t = complement_region(rv, mu);
      points.push_back({{"mu", mu.coords()},
                        {"region", to_string(triangle_region(rv, mu))},
                        {"cell_dimension", cell_dimension(rv, mu)},
                        {"complement_region", t ? Json(to_string(*t)) : Json(nullptr)},
                        {"fixed", !t.has_value()}});
    }
  } else if (regions == "v") {
    const auto report = v_partition(rv);
    std::map<Coweight, VRegion> labels(report.labelled.begin(), report.labelled.end());
    for (const auto& mu : fundamental_fixed_points(rv)) {
      auto it = labels.find(mu);
      points.push_back({{"mu", mu.coords()}, {"region", it == labels.end() ? Json(nullptr) : Json(to_string(it->second))}});
    }
    Json overlap = Json::array();
    for (const auto& mu : report.overlap) overlap.push_back(mu.coords());
    Json gaps = Json::array();
    for (const auto& mu : report.gaps) gaps.push_back(mu.coords());
    payload["overlap"] = overlap;
    payload["gaps"] = gaps;
  } else if (regions == "ak") {
    const AkPartition partition(rv);
    std::int64_t max_scale = 0;
    for (const auto& mu : fundamental_fixed_points(rv)) {
      Json p = label_json(partition.classify(mu));
      p["mu"] = mu.coords();
      p["scale"] = partition.scale_for(mu);
      max_scale = std::max(max_scale, partition.scale_for(mu));
      points.push_back(std::move(p));
    }
    meta["tie_break"] = tie_break_meta();
    meta["tie_break"]["max_scale"] = max_scale;
  } else {
    for (const auto& mu : fundamental_fixed_points(rv)) points.push_back({{"mu", mu.coords()}});
  }
  payload["count"] = points.size();
  payload["points"] = std::move(points);
  payload["level"] = 2 * n1 + n2;
  return document("fixed-points", {{"n1", n1}, {"n2", n2}, {"regions", regions.empty() ? Json(nullptr) : Json(regions)}},
                  std::move(payload), std::move(meta));
}

Json cmd_series(int order) {
  if (order < 2) throw UsageError("series order must be at least 2");
  const BiSeries expanded = expand_rational(corollary_expression(), order);
  const BiSeries direct = direct_series(order);
  const auto cmp = series_equal(expanded, direct);
  Json table = Json::array();
  for (int a = 1; a <= order; ++a) {
    for (int b = 1; a + b <= order; ++b) {
      table.push_back({{"n1", a},
                       {"n2", b},
                       {"direct", direct.at(a, b).str("t")},
                       {"expanded", expanded.at(a, b).str("t")},
                       {"equal", direct.at(a, b) == expanded.at(a, b)}});
    }
  }
  Json first = nullptr;
  if (!cmp.equal) {
    first = {{"n1", cmp.n1}, {"n2", cmp.n2}, {"expanded", cmp.left.str("t")}, {"direct", cmp.right.str("t")}};
  }
  Json payload{{"order", order},
               {"equal", cmp.equal},
               {"mismatches", cmp.mismatches},
               {"first_difference", first},
               {"table", table},
               {"expression", corollary_expression().str()},
               {"diagnostics",
                {{"folded_equal", series_equal(expanded, folded_direct_series(order)).equal},
                 {"symmetrized_equal", series_equal(symmetrize(expanded), direct).equal}}}};
  return document("series", {{"order", order}}, std::move(payload), Json::object());
}

Json cmd_vertices(const std::vector<int>& n) {
  if (n.empty() || n.size() > 5) throw UsageError("vertices takes between 1 and 5 simple valuations (d <= 6)");
  for (int v : n) require_positive(v, "valuation");
  const RootValuation rv(n);
  const auto fam = regular_family(rv);
  const int d = rv.rank();
  const WeylElem w0 = WeylElem::longest(d);
  Json verts = Json::array();
  for (const auto& [sigma, v] : fam.vertices()) {
    Json adj = Json::array();
    for (int k = 0; k + 1 < d; ++k) adj.push_back(adjacency_constant(fam, sigma, k));
    verts.push_back({{"sigma", sigma.one_line()}, {"w_prime", (sigma * w0).one_line()}, {"vertex", v.coords()},
                     {"adjacency", adj}});
  }
  Json payload{{"rank", d}, {"level", fam.common_level()}, {"count", verts.size()}, {"vertices", verts}};
  return document("vertices", {{"n", n}}, std::move(payload), Json::object());
}

Json cmd_classify(const std::vector<int>& n, const std::vector<int>& mu) {
  if (n.size() != 2) throw UsageError("classify takes two valuations n1 n2");
  if (mu.size() != 3) throw UsageError("classify takes a coweight with three coordinates");
  const RootValuation rv = gl3(n[0], n[1]);
  const Coweight point(mu);
  const AkPartition partition(rv);
  const ParabolicLabel label = partition.classify(point);
  Json payload = label_json(label);
  payload["mu"] = mu;
  payload["levi_component"] = levi_component(label, point);
  payload["scale"] = partition.scale_for(point);
  Json meta{{"tie_break", tie_break_meta()}};
  return document("classify", {{"n", n}, {"mu", mu}}, std::move(payload), std::move(meta));
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + csv_cell(v[i]);
    return s;
  }
  return v.dump();
}

std::string csv_table(const Json& rows, const std::vector<std::string>& columns) {
  std::ostringstream os;
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      os << (i ? "," : "") << (row.contains(columns[i]) ? csv_cell(row[columns[i]]) : "");
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string render_csv(const Json& doc) {
  const std::string name = doc["command"]["name"];
  const Json& p = doc["payload"];
  if (name == "poincare") {
    Json rows = Json::array();
    for (const char* src : {"closed", "pipeline"}) {
      if (!p.contains(src)) continue;
      const auto& c = p[src]["q_coefficients"];
      for (std::size_t i = 0; i < c.size(); ++i) rows.push_back({{"source", src}, {"q_power", i}, {"coefficient", c[i]}});
    }
    return csv_table(rows, {"source", "q_power", "coefficient"});
  }
  if (name == "fixed-points") {
    const std::string regions = doc["command"]["args"]["regions"].is_null() ? "" : doc["command"]["args"]["regions"].get<std::string>();
    if (regions == "triangle") return csv_table(p["points"], {"mu", "region", "cell_dimension", "complement_region"});
    if (regions == "ak") return csv_table(p["points"], {"mu", "label", "scale"});
    if (regions == "v") return csv_table(p["points"], {"mu", "region"});
    return csv_table(p["points"], {"mu"});
  }
  if (name == "series") return csv_table(p["table"], {"n1", "n2", "direct", "expanded", "equal"});
  if (name == "vertices") return csv_table(p["vertices"], {"sigma", "w_prime", "vertex", "adjacency"});
  if (name == "classify") return csv_table(Json::array({p}), {"mu", "label", "scale"});
  throw UsageError("no CSV form for " + name);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed-point combinatorics of GL_3 fundamental domains"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  int n1 = 0;
  int n2 = 0;
  std::string mode = "closed";
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of the fundamental domain");
  poincare->add_option("n1", n1)->required();
  poincare->add_option("n2", n2)->required();
  poincare->add_option("--mode", mode)->check(CLI::IsMember({"closed", "pipeline", "both"}));

  std::string regions;
  auto* fixed = app.add_subcommand("fixed-points", "T-fixed points with optional region labels");
  fixed->add_option("n1", n1)->required();
  fixed->add_option("n2", n2)->required();
  fixed->add_option("--regions", regions)->check(CLI::IsMember({"triangle", "v", "ak"}));

  int order = 0;
  auto* series = app.add_subcommand("series", "Generating series against direct coefficients");
  series->add_option("N", order)->required();

  std::vector<int> valuations;
  auto* vertices = app.add_subcommand("vertices", "Regular orthogonal family for GL_d, d <= 6");
  vertices->add_option("n", valuations)->required();

  std::vector<int> mu;
  auto* classify = app.add_subcommand("classify", "Arthur-Kottwitz region of one coweight");
  classify->add_option("n1", n1)->required();
  classify->add_option("n2", n2)->required();
  classify->add_option("mu", mu)->required()->expected(3);

  std::string figure;
  std::string out_path;
  auto* svg = app.add_subcommand("svg", "Render a figure");
  svg->add_option("figure", figure)->required()->check(
      CLI::IsMember({"partition", "hexagon", "nonstandard", "triangle", "complement"}));
  svg->add_option("n1", n1)->required();
  svg->add_option("n2", n2)->required();
  svg->add_option("path", out_path, "output file");
  svg->add_option("--out", out_path, "output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    Json doc;
    if (app.got_subcommand(poincare)) {
      doc = cmd_poincare(n1, n2, mode);
    } else if (app.got_subcommand(fixed)) {
      doc = cmd_fixed_points(n1, n2, regions);
    } else if (app.got_subcommand(series)) {
      doc = cmd_series(order);
    } else if (app.got_subcommand(vertices)) {
      doc = cmd_vertices(valuations);
    } else if (app.got_subcommand(classify)) {
      doc = cmd_classify({n1, n2}, mu);
    } else {
      require_positive(n1, "n1");
      require_positive(n2, "n2");
      if (figure != "partition" && n1 > n2) throw UsageError("this figure requires n1 <= n2");
      const std::string text = render_svg(figure, n1, n2);
      if (out_path.empty()) {
        out << text;
        return 0;
      }
      std::ofstream file(out_path, std::ios::binary);
      file << text;
      if (!file) {
        err << "error: cannot write " << out_path << "\n";
        return 1;
      }
      return 0;
    }
    out << (format == "csv" ? render_csv(doc) : render_json(doc));
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fundom::cli
