// Command-line front end: JSON in, JSON (or a short text summary) out.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "toric/verification.hpp"

using json = nlohmann::ordered_json;
using namespace toric;

namespace {

struct GlobalOptions {
  std::string config_file;
  unsigned seed = 0;
  std::size_t budget_spairs = default_spair_budget;
  std::size_t budget_bfs = 2000000;
  std::string format = "json";
};

GlobalOptions opts;

json parse_json_arg(const std::string& arg) {
  std::string text = arg;
  auto first = text.find_first_not_of(" \t");
  if (first == std::string::npos) throw UsageError("empty JSON argument");
  if (text[first] != '[' && text[first] != '{') {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot open file: " + arg);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return json::parse(text);
}

Int json_int(const json& v) {
  if (v.is_string()) return Int(v.get<std::string>());
  if (v.is_number_integer()) return Int(v.get<long long>());
  throw UsageError("expected an integer (number or decimal string)");
}

Vec json_vec(const json& v) {
  Vec out;
  for (const auto& x : v) out.push_back(json_int(x));
  return out;
}

std::vector<Vec> json_points(const json& v) {
  std::vector<Vec> out;
  for (const auto& row : v) out.push_back(json_vec(row));
  return out;
}

PointConfig load_points(const std::string& arg) {
  json j = parse_json_arg(arg);
  std::vector<Vec> pts = j.is_object() ? json_points(j.at("points")) : json_points(j);
  if (pts.empty()) throw UsageError("no points given");
  std::size_t n = j.is_object() && j.contains("ambient_rank")
                      ? std::size_t(j.at("ambient_rank").get<int>())
                      : pts[0].size();
  return PointConfig(n, pts);
}

Fan load_fan(const std::string& arg) {
  json j = parse_json_arg(arg);
  auto rays = json_points(j.at("rays"));
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& c : j.at("cones")) cones.push_back(c.get<std::vector<std::size_t>>());
  if (rays.empty()) throw UsageError("fan has no rays");
  return Fan(rays[0].size(), rays, cones);
}

Graph load_graph(const std::string& arg) {
  json j = parse_json_arg(arg);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0), e.at(1));
  return Graph(j.at("n").get<std::size_t>(), edges);
}

Matroid load_matroid(const std::string& arg) {
  json j = parse_json_arg(arg);
  if (j.contains("type")) {
    std::string type = j.at("type");
    if (type == "uniform")
      return uniform_matroid(j.at("r").get<std::size_t>(), j.at("n").get<std::size_t>());
    if (type == "graphic") return graphic_matroid(load_graph(j.at("graph").dump()));
    throw UsageError("unknown matroid type: " + type);
  }
  std::vector<std::set<std::size_t>> bases;
  for (const auto& b : j.at("bases")) bases.push_back(b.get<std::set<std::size_t>>());
  return Matroid(j.at("ground").get<std::size_t>(), bases);
}

Vec parse_int_list(const std::string& csv) {
  Vec out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw UsageError("empty entry in integer list");
    out.push_back(Int(item));
  }
  return out;
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json points_to_json(const std::vector<Vec>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(vec_to_json(p));
  return out;
}

void emit(const std::string& command, json result, const std::string& summary) {
  json out;
  out["command"] = command;
  out["config"] = {{"seed", std::to_string(opts.seed)},
                   {"budget_spairs", std::to_string(opts.budget_spairs)},
                   {"budget_bfs", std::to_string(opts.budget_bfs)},
                   {"format", opts.format}};
  if (!opts.config_file.empty()) out["config"]["config_file"] = opts.config_file;
  out["result"] = std::move(result);
  if (opts.format == "text")
    std::cout << summary << "\n";
  else
    std::cout << out.dump(2) << "\n";
}

std::string bool_word(bool b) { return b ? "yes" : "no"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with lattice points, toric ideals, fans and divisors"};
  app.require_subcommand(1);
  app.add_option("--config", opts.config_file, "JSON config file with budget overrides");
  app.add_option("--seed", opts.seed, "seed for randomized property suites");
  app.add_option("--budget-spairs", opts.budget_spairs, "Groebner S-pair budget");
  app.add_option("--budget-bfs", opts.budget_bfs, "search-state budget for BFS commands");
  app.add_option("--format", opts.format, "output format: json | text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string points_arg, fan_arg, graph_arg, matroid_arg, divisor_arg, omega_arg;
  std::string method = "both", group_name = "Z2", only, cone_arg;
  bool homogenize = false, check_corr = false;
  std::size_t white_d = 3, phylo_n = 4, max_degree = 3;
  long box_radius = -1;

  auto* c_ideal = app.add_subcommand("ideal", "toric ideal of a point configuration");
  c_ideal->add_option("--points", points_arg, "points (inline JSON or file)")->required();
  c_ideal->add_flag("--homogenize", homogenize, "append a homogenizing coordinate");

  auto add_points_cmd = [&](const char* name, const char* desc) {
    auto* c = app.add_subcommand(name, desc);
    c->add_option("--points", points_arg, "points (inline JSON or file)")->required();
    return c;
  };
  auto* c_normal = add_points_cmd("normal", "normality of the convex hull");
  auto* c_va = add_points_cmd("very-ample", "very-ampleness of the convex hull");
  auto* c_smooth = add_points_cmd("smooth", "smoothness of the convex hull");
  auto* c_ehrhart = add_points_cmd("ehrhart", "lattice-point counting polynomial");

  auto* c_hb = app.add_subcommand("hilbert-basis", "minimal generators of a cone's monoid");
  c_hb->add_option("--cone", cone_arg, "cone generators (inline JSON or file)")->required();

  auto add_fan_cmd = [&](const char* name, const char* desc, bool with_divisor) {
    auto* c = app.add_subcommand(name, desc);
    c->add_option("--fan", fan_arg, "fan (inline JSON or file)")->required();
    if (with_divisor)
      c->add_option("--divisor", divisor_arg, "ray coefficients, comma separated")->required();
    return c;
  };
  auto* c_cg = add_fan_cmd("classgroup", "divisor class group of a fan", false);
  auto* c_cartier = add_fan_cmd("cartier", "local Cartier data of a divisor", true);
  auto* c_pos = add_fan_cmd("positivity", "global generation and ampleness", true);
  auto* c_sections = add_fan_cmd("sections", "lattice points of the divisor polyhedron", true);
  auto* c_coh = add_fan_cmd("cohomology", "divisor cohomology dimensions", true);
  c_coh->add_option("--method", method, "coh1 | coh2 | both")
      ->check(CLI::IsMember({"coh1", "coh2", "both"}));
  c_coh->add_option("--box", box_radius, "enumeration box half-width (default: automatic)");

  auto* c_tri = app.add_subcommand("triangulate", "regular subdivision by a weight vector");
  c_tri->add_option("--points", points_arg, "points (inline JSON or file)")->required();
  c_tri->add_option("--omega", omega_arg, "weights, comma separated")->required();
  c_tri->add_flag("--check-correspondence", check_corr,
                  "verify the initial-complex correspondence");

  auto* c_cuts = app.add_subcommand("cuts", "cut polytopes of graphs");
  c_cuts->require_subcommand(1);
  auto add_graph_cmd = [&](CLI::App* parent, const char* name, const char* desc) {
    auto* c = parent->add_subcommand(name, desc);
    c->add_option("--graph", graph_arg, "graph (inline JSON or file)")->required();
    return c;
  };
  auto* c_cuts_color = add_graph_cmd(c_cuts, "fourcolor", "proper 4-coloring from three cuts");
  auto* c_cuts_facets = add_graph_cmd(c_cuts, "facets", "box and odd-cycle inequalities");
  auto* c_cuts_normal =
      add_graph_cmd(c_cuts, "normal-evidence", "saturation of the cut monoid");

  auto* c_mat = app.add_subcommand("matroid", "matroid basis polytopes and ideals");
  c_mat->require_subcommand(1);
  auto add_matroid_cmd = [&](const char* name, const char* desc) {
    auto* c = c_mat->add_subcommand(name, desc);
    c->add_option("--matroid", matroid_arg, "matroid (inline JSON or file)")->required();
    return c;
  };
  auto* c_mat_white = add_matroid_cmd("white", "connectivity of basis-exchange fibers");
  c_mat_white->add_option("--d", white_d, "maximal fiber degree");
  auto* c_mat_fedder = add_matroid_cmd("fedder", "F-purity of the exchange ideal over F_2");
  auto* c_mat_poly = add_matroid_cmd("polytope", "base polytope and monoid saturation");

  auto* c_phylo = app.add_subcommand("phylo", "group-based models on star trees");
  c_phylo->require_subcommand(1);
  auto* c_phylo_cx = c_phylo->add_subcommand("complexity", "move sizes needed to connect fibers");
  c_phylo_cx->add_option("--group", group_name, "Z2 | Z3 | Z2xZ2 | Z4")->required();
  c_phylo_cx->add_option("--n", phylo_n, "number of leaves")->required();
  c_phylo_cx->add_option("--max-degree", max_degree, "largest table degree to test");

  auto* c_repro = app.add_subcommand("reproduce", "run every acceptance fixture");
  c_repro->add_option("--only", only, "run a single named criterion");

  // let the global flags appear after the subcommand as well
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    a->fallthrough();
    for (auto* sub : a->get_subcommands([](CLI::App*) { return true; }))
      enable_fallthrough(sub);
  };
  enable_fallthrough(&app);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!opts.config_file.empty()) {
      json cfg = parse_json_arg(opts.config_file);
      if (cfg.contains("seed")) opts.seed = cfg["seed"].get<unsigned>();
      if (cfg.contains("budget_spairs")) opts.budget_spairs = cfg["budget_spairs"];
      if (cfg.contains("budget_bfs")) opts.budget_bfs = cfg["budget_bfs"];
      if (cfg.contains("format")) opts.format = cfg["format"];
    }

    if (*c_ideal) {
      auto s = load_points(points_arg);
      auto i = toric_ideal(s, Field{0}, homogenize, opts.budget_spairs);
      auto gens = ideal_strings(i);
      json r;
      r["nvars"] = std::to_string(i.nvars);
      r["generators"] = gens;
      std::string summary = "toric ideal with " + std::to_string(gens.size()) + " generators:";
      for (const auto& g : gens) summary += "\n  " + g;
      emit("ideal", r, summary);
    } else if (*c_normal) {
      auto s = load_points(points_arg);
      Polytope p(s.ambient_rank, s.points);
      bool normal = is_normal_polytope(p);
      bool proj = monoid_is_saturated(s.at_height_one());
      emit("normal", {{"normal_polytope", normal}, {"projectively_normal", proj}},
           "normal polytope: " + bool_word(normal) + ", projectively normal: " + bool_word(proj));
    } else if (*c_va) {
      auto s = load_points(points_arg);
      bool va = is_very_ample(Polytope(s.ambient_rank, s.points));
      emit("very-ample", {{"very_ample", va}}, "very ample: " + bool_word(va));
    } else if (*c_smooth) {
      auto s = load_points(points_arg);
      bool sm = is_smooth_polytope(Polytope(s.ambient_rank, s.points));
      emit("smooth", {{"smooth", sm}}, "smooth: " + bool_word(sm));
    } else if (*c_hb) {
      json j = parse_json_arg(cone_arg);
      auto gens = json_points(j.is_object() ? j.at("rays") : j);
      if (gens.empty()) throw UsageError("cone has no generators");
      auto hb = hilbert_basis(Cone(gens[0].size(), gens));
      std::string summary = "hilbert basis with " + std::to_string(hb.size()) + " elements";
      emit("hilbert-basis", {{"hilbert_basis", points_to_json(hb)}}, summary);
    } else if (*c_ehrhart) {
      auto s = load_points(points_arg);
      Polytope p(s.ambient_rank, s.points);
      auto e = ehrhart(p);
      json coeffs = json::array();
      for (const auto& cc : e.coefficients) coeffs.push_back(rat_to_string(cc));
      json r;
      r["dim"] = std::to_string(p.dim());
      r["coefficients_low_to_high"] = coeffs;
      r["degree_of_variety"] = degree_of_variety(p).str();
      emit("ehrhart", r, "degree " + degree_of_variety(p).str() + " in dimension " +
                             std::to_string(p.dim()));
    } else if (*c_cg) {
      auto f = load_fan(fan_arg);
      auto g = class_group(f);
      json tors = json::array();
      for (const auto& t : g.torsion) tors.push_back(t.str());
      std::string summary = "class group: Z^" + std::to_string(g.free_rank);
      for (const auto& t : g.torsion) summary += " x Z/" + t.str();
      emit("classgroup", {{"free_rank", std::to_string(g.free_rank)}, {"torsion", tors}},
           summary);
    } else if (*c_cartier) {
      auto f = load_fan(fan_arg);
      WeilDivisor d(f, parse_int_list(divisor_arg));
      json r;
      try {
        auto data = cartier_data(d);
        r["cartier"] = true;
        r["local_data"] = points_to_json(data.local);
        emit("cartier", r, "cartier: yes");
      } catch (const NotCartier& e) {
        r["cartier"] = false;
        r["reason"] = e.what();
        emit("cartier", r, std::string("cartier: no (") + e.what() + ")");
      }
    } else if (*c_pos) {
      auto f = load_fan(fan_arg);
      auto rep = positivity(WeilDivisor(f, parse_int_list(divisor_arg)));
      emit("positivity",
           {{"globally_generated", rep.globally_generated},
            {"ample", rep.ample},
            {"very_ample", rep.very_ample}},
           "globally generated: " + bool_word(rep.globally_generated) +
               ", ample: " + bool_word(rep.ample) + ", very ample: " + bool_word(rep.very_ample));
    } else if (*c_sections) {
      auto f = load_fan(fan_arg);
      auto s = global_sections(WeilDivisor(f, parse_int_list(divisor_arg)));
      emit("sections",
           {{"count", std::to_string(s.points.size())}, {"points", points_to_json(s.points)}},
           std::to_string(s.points.size()) + " global sections");
    } else if (*c_coh) {
      auto f = load_fan(fan_arg);
      WeilDivisor d(f, parse_int_list(divisor_arg));
      Box box = default_box(d);
      if (box_radius >= 0) {
        box.lo = Vec(f.ambient_rank, Int(-box_radius));
        box.hi = Vec(f.ambient_rank, Int(box_radius));
      }
      json r;
      std::vector<std::size_t> h;
      if (method == "both") {
        auto r1 = cohomology(CohomologyMethod::coh1, d, box);
        auto r2 = cohomology(CohomologyMethod::coh2, d, box);
        r["methods_agree"] = r1.h == r2.h;
        if (r1.h != r2.h) throw ToricError("the two cohomology methods disagree");
        h = r1.h;
      } else {
        h = cohomology(method == "coh1" ? CohomologyMethod::coh1 : CohomologyMethod::coh2, d,
                       box)
                .h;
      }
      std::string summary;
      for (std::size_t j = 0; j < h.size(); ++j) {
        r["H" + std::to_string(j)] = std::to_string(h[j]);
        summary += (j ? ", " : "") + ("h^" + std::to_string(j) + " = " + std::to_string(h[j]));
      }
      r["stable"] = box_stability_check(
          method == "coh2" ? CohomologyMethod::coh2 : CohomologyMethod::coh1, d, box);
      emit("cohomology", r, summary);
    } else if (*c_tri) {
      auto s = load_points(points_arg);
      Vec w = parse_int_list(omega_arg);
      auto sub = regular_subdivision(s, w);
      json cells = json::array();
      json vols = json::array();
      for (const auto& cell : sub.cells) {
        cells.push_back(cell);
        vols.push_back(normalized_cell_volume(s, cell).str());
      }
      json r;
      r["cells"] = cells;
      r["normalized_volumes"] = vols;
      r["is_triangulation"] = is_triangulation(sub);
      if (check_corr) {
        auto rep = check_sturmfels_correspondence(s, w, opts.budget_spairs);
        r["faces_match"] = rep.faces_match;
        r["radical_identity"] = rep.radical_identity;
      }
      emit("triangulate", r,
           std::to_string(sub.cells.size()) + " cells, triangulation: " +
               bool_word(is_triangulation(sub)));
    } else if (*c_cuts_color) {
      auto g = load_graph(graph_arg);
      auto colors = four_coloring(g);
      json r;
      r["colors"] = colors;
      auto dec = decompose_targets(g);
      if (dec) {
        json parts = json::array();
        for (const auto& a : *dec) parts.push_back(std::vector<std::size_t>(a.begin(), a.end()));
        r["cut_sides"] = parts;
      }
      std::string summary = "colors:";
      for (auto col : colors) summary += " " + std::to_string(col);
      emit("cuts fourcolor", r, summary);
    } else if (*c_cuts_facets) {
      auto g = load_graph(graph_arg);
      auto ineqs = seymour_inequalities(g);
      json r;
      r["count"] = std::to_string(ineqs.size());
      r["inequalities"] = points_to_json(ineqs);
      emit("cuts facets", r, std::to_string(ineqs.size()) + " valid inequalities");
    } else if (*c_cuts_normal) {
      auto g = load_graph(graph_arg);
      bool sat = monoid_is_saturated(cut_polytope_points(g));
      emit("cuts normal-evidence", {{"monoid_saturated", sat}},
           "cut monoid saturated: " + bool_word(sat));
    } else if (*c_mat_white) {
      auto m = load_matroid(matroid_arg);
      json r;
      r["all_connected"] = true;
      for (std::size_t d = 1; d <= white_d; ++d) {
        auto rep = white_check(m, d, opts.budget_bfs);
        r["degree_" + std::to_string(d)] = {{"fibers", std::to_string(rep.fibers)},
                                            {"all_connected", rep.all_connected}};
        if (!rep.all_connected) r["all_connected"] = false;
      }
      emit("matroid white", r,
           "all fibers connected up to degree " + std::to_string(white_d) + ": " +
               bool_word(r["all_connected"].get<bool>()));
    } else if (*c_mat_fedder) {
      auto m = load_matroid(matroid_arg);
      auto rep = fedder_check(m, opts.budget_spairs);
      json r;
      r["f_pure"] = rep.is_f_pure;
      if (rep.witness) r["witness"] = poly_to_string(*rep.witness);
      emit("matroid fedder", r, "F-pure: " + bool_word(rep.is_f_pure));
    } else if (*c_mat_poly) {
      auto m = load_matroid(matroid_arg);
      auto rep = matroid_base_polytope(m);
      json r;
      r["vertices"] = points_to_json(rep.polytope.vertices());
      r["monoid_saturated"] = rep.monoid_saturated;
      emit("matroid polytope", r,
           std::to_string(rep.polytope.vertices().size()) +
               " vertices, saturated: " + bool_word(rep.monoid_saturated));
    } else if (*c_phylo_cx) {
      auto g = group_from_name(group_name);
      auto rep = complexity_estimate(g, phylo_n, max_degree, opts.budget_bfs);
      json by_degree;
      for (const auto& [deg, m] : rep.by_degree)
        by_degree[std::to_string(deg)] = std::to_string(m);
      json r;
      r["required_move_size"] = std::to_string(rep.required_move_size);
      r["by_degree"] = by_degree;
      r["group_order"] = std::to_string(g.size());
      r["within_group_order"] = rep.required_move_size <= g.size();
      emit("phylo complexity", r,
           "required move size: " + std::to_string(rep.required_move_size));
    } else if (*c_repro) {
      auto outcomes = verify::run_criteria(only);
      if (outcomes.empty()) throw UsageError("no criterion named: " + only);
      bool all_ok = true;
      json rows = json::array();
      std::string table;
      for (const auto& o : outcomes) {
        all_ok = all_ok && o.passed;
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.3f", o.seconds);
        rows.push_back({{"name", o.name},
                        {"passed", o.passed},
                        {"seconds", std::string(secs)},
                        {"message", o.message}});
        char line[256];
        std::snprintf(line, sizeof line, "%-30s %s  %7.2fs  %s", o.name.c_str(),
                      o.passed ? "PASS" : "FAIL", o.seconds, o.message.c_str());
        table += std::string(line) + "\n";
      }
      emit("reproduce", {{"criteria", rows}, {"all_passed", all_ok}}, table);
      return all_ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
