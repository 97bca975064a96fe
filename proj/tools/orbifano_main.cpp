#include "CLI11.hpp"
#include "json.hpp"

#include "orbifano/registry.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace orbifano;

namespace {

// weight file: first line "r m", then r rows of m integers; an optional line
// containing "|" starts the bundle section (one column vector per line)
struct WeightFile {
  IntMat d;
  std::vector<IVec> bundles;
};

WeightFile read_weight_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::size_t r = 0, m = 0;
  in >> r >> m;
  if (!in || r == 0 || m == 0) throw std::runtime_error("bad header in " + path);
  IntMat d(r, m);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::string tok;
      in >> tok;
      if (!in) throw std::runtime_error("short matrix in " + path);
      d.at(i, j) = Int(tok);
    }
  WeightFile out;
  out.d = d;
  std::string tok;
  bool in_bundles = false;
  IVec current;
  while (in >> tok) {
    if (tok == "|") {
      in_bundles = true;
      continue;
    }
    if (!in_bundles) throw std::runtime_error("unexpected token " + tok);
    current.push_back(Int(tok));
    if (current.size() == r) {
      out.bundles.push_back(current);
      current.clear();
    }
  }
  if (!current.empty()) throw std::runtime_error("ragged bundle column in " + path);
  return out;
}

IVec parse_csv_vector(const std::string& text) {
  IVec out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(Int(tok));
  return out;
}

std::vector<IVec> parse_vertices(const std::string& text) {
  std::vector<IVec> out;
  std::stringstream ss(text);
  std::string pair;
  while (std::getline(ss, pair, ';')) {
    auto v = parse_csv_vector(pair);
    if (v.size() != 2) throw std::runtime_error("vertex needs two coordinates");
    out.push_back(v);
  }
  return out;
}

IVec default_omega(const WeightFile& wf) {
  IVec omega(wf.d.rows(), Int(0));
  for (std::size_t j = 0; j < wf.d.cols(); ++j) omega = vec_add(omega, wf.d.col(j));
  for (const auto& l : wf.bundles) omega = vec_sub(omega, l);
  return omega;
}

std::string ivec_str(const IVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out + ")";
}

Registry load_reg(const std::string& override_path) {
  if (override_path.empty()) return load_registry();
  return load_registry_file(override_path);
}

nlohmann::json tree_json(const MMPTree& node) {
  nlohmann::json j;
  j["state"] = node.state.str();
  if (node.edge) j["edge"] = contraction_name(*node.edge);
  if (node.dead_end) j["dead_end"] = true;
  if (!node.terminals.empty()) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : node.terminals) terms.push_back(t.str());
    j["terminals"] = terms;
  }
  if (!node.children.empty()) {
    nlohmann::json ch = nlohmann::json::array();
    for (const auto& c : node.children) ch.push_back(tree_json(c));
    j["children"] = ch;
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for del Pezzo surfaces with rigid third points"};
  app.require_subcommand(1);
  std::string registry_path;
  app.add_option("--registry", registry_path, "override the built-in data file");

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  std::string suite = "all";
  std::string json_out;
  verify->add_option("--suite", suite,
                     "all|tables|polygons|constructions|mmp|identities|candidates");
  verify->add_option("--json", json_out, "write the report to a JSON file");

  auto* polygon = app.add_subcommand("polygon", "polygon analysis and rendering");
  polygon->require_subcommand(1);
  auto* analyze = polygon->add_subcommand("analyze", "singularity content and matching");
  int analyze_id = 0;
  std::string analyze_vertices;
  analyze->add_option("--id", analyze_id, "polygon id from the registry (1..26)");
  analyze->add_option("--vertices", analyze_vertices, "vertex list \"x,y;x,y;...\"");
  auto* render = polygon->add_subcommand("render", "write an SVG picture");
  int render_id = 0;
  std::string render_out;
  render->add_option("--id", render_id, "polygon id from the registry (1..26)")
      ->required();
  render->add_option("--out", render_out, "output SVG path")->required();

  auto* toric = app.add_subcommand("toric", "weight-matrix computations");
  toric->require_subcommand(1);
  std::string toric_weights, toric_omega;
  auto add_toric_sub = [&](const std::string& name, const std::string& desc) {
    auto* sub = toric->add_subcommand(name, desc);
    sub->add_option("--weights", toric_weights, "weight matrix file")->required();
    sub->add_option("--omega", toric_omega, "stability condition \"a,b,...\"");
    return sub;
  };
  auto* toric_nef = add_toric_sub("nef", "nef cone of the quotient");
  auto* toric_charts = add_toric_sub("charts", "orbifold charts");
  auto* toric_irrelevant = add_toric_sub("irrelevant", "irrelevant ideal generators");
  auto* toric_fan = add_toric_sub("fan", "maximal cones and ray realization");

  auto* degree = app.add_subcommand("degree", "anticanonical degree of a complete intersection");
  std::string degree_weights, degree_bundles, degree_omega;
  degree->add_option("--weights", degree_weights, "weight matrix file")->required();
  degree->add_option("--bundles", degree_bundles, "bundle columns file");
  degree->add_option("--omega", degree_omega, "stability condition \"a,b,...\"");

  auto* mmp = app.add_subcommand("mmp", "directed minimal model program");
  mmp->require_subcommand(1);
  auto* mmp_tree = mmp->add_subcommand("tree", "contraction tree for the k-root families");
  int mmp_k = 0;
  std::string mmp_mode = "curated";
  bool mmp_json = false;
  mmp_tree->add_option("--k", mmp_k, "number of rigid points (1..6)")->required();
  mmp_tree->add_option("--mode", mmp_mode, "raw|curated");
  mmp_tree->add_flag("--json", mmp_json, "emit JSON");

  auto* candidates = app.add_subcommand("candidates", "numerical candidate sieve");
  bool candidates_json = false;
  candidates->add_flag("--json", candidates_json, "emit JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      auto reg = load_reg(registry_path);
      auto rep = verify_all(reg, suite);
      for (const auto& c : rep.checks) {
        if (c.status == "pass") continue;
        std::cout << c.status << "  " << c.id << "\n";
        if (c.status == "fail")
          std::cout << "    expected: " << c.expected << "\n    computed: " << c.computed
                    << "\n";
      }
      std::cout << rep.summary() << "\n";
      if (!json_out.empty()) {
        std::ofstream out(json_out);
        out << rep.to_json() << "\n";
      }
      return rep.all_passed() ? 0 : 1;
    }

    if (*analyze) {
      auto reg = load_reg(registry_path);
      FanoPolygon p;
      if (analyze_id > 0) {
        const auto* rec = reg.find_polygon(analyze_id);
        if (!rec) throw std::runtime_error("no polygon with that id");
        p = rec->polygon;
      } else if (!analyze_vertices.empty()) {
        p = FanoPolygon::make(parse_vertices(analyze_vertices));
      } else {
        throw std::runtime_error("need --id or --vertices");
      }
      auto content = singularity_content(p);
      std::cout << "vertices: " << p.str() << "\n";
      std::cout << "T-cones:  n = " << content.n.str() << "\n";
      std::cout << "basket:   " << content.basket.str() << "\n";
      std::cout << "K^2:      " << to_string(toric_degree(face_fan(p))) << "\n";
      try {
        auto match = match_family(p, reg.family_keys(), reg.ambiguity_entries());
        std::cout << "family:   " << match.name << "\n";
      } catch (const std::exception& e) {
        std::cout << "family:   (" << e.what() << ")\n";
      }
      return 0;
    }

    if (*render) {
      auto reg = load_reg(registry_path);
      const auto* rec = reg.find_polygon(render_id);
      if (!rec) throw std::runtime_error("no polygon with that id");
      std::ofstream out(render_out);
      if (!out) throw std::runtime_error("cannot write " + render_out);
      out << render_polygon_svg(rec->polygon);
      std::cout << "wrote " << render_out << "\n";
      return 0;
    }

    if (*toric_nef || *toric_charts || *toric_irrelevant || *toric_fan) {
      auto wf = read_weight_file(toric_weights);
      IVec omega = toric_omega.empty() ? default_omega(wf) : parse_csv_vector(toric_omega);
      std::cout << "omega = " << ivec_str(omega) << "\n";
      if (*toric_nef) {
        auto cone = chamber_of(wf.d, omega);
        std::cout << "nef cone generators:\n";
        for (const auto& r : cone.rays) std::cout << "  " << ivec_str(r) << "\n";
      } else if (*toric_charts) {
        for (const auto& c : charts(wf.d, omega)) {
          std::cout << "chart {";
          for (std::size_t i = 0; i < c.pivots.size(); ++i)
            std::cout << (i ? "," : "") << "x" << c.pivots[i];
          std::cout << "}: ";
          if (c.stabilizer.is_trivial()) {
            std::cout << "smooth\n";
          } else if (c.cyclic()) {
            auto [n, w] = c.cyclic_weights();
            std::cout << "1/" << n.str() << ivec_str(w) << "\n";
          } else {
            std::cout << "non-cyclic stabilizer\n";
          }
        }
      } else if (*toric_irrelevant) {
        for (const auto& g : irrelevant_ideal(wf.d, omega)) {
          std::cout << "(";
          for (std::size_t i = 0; i < g.size(); ++i)
            std::cout << (i ? " " : "") << "x" << g[i];
          std::cout << ")\n";
        }
      } else {
        auto fan = fan_from_chamber(wf.d, omega);
        std::cout << "rays:\n";
        for (std::size_t i = 0; i < fan.m; ++i)
          std::cout << "  x" << i << " -> " << ivec_str(fan.rays.row(i)) << "\n";
        std::cout << "maximal cones:\n";
        for (const auto& cone : fan.max_cones) {
          std::cout << "  {";
          for (std::size_t i = 0; i < cone.size(); ++i)
            std::cout << (i ? "," : "") << cone[i];
          std::cout << "}\n";
        }
      }
      return 0;
    }

    if (*degree) {
      auto wf = read_weight_file(degree_weights);
      if (!degree_bundles.empty()) {
        std::ifstream in(degree_bundles);
        if (!in) throw std::runtime_error("cannot open " + degree_bundles);
        std::string line;
        while (std::getline(in, line)) {
          std::stringstream ss(line);
          IVec b;
          std::string tok;
          while (ss >> tok) b.push_back(Int(tok));
          if (!b.empty()) wf.bundles.push_back(b);
        }
      }
      IVec omega = degree_omega.empty() ? default_omega(wf) : parse_csv_vector(degree_omega);
      auto wm = WeightMatrix::make(wf.d);
      std::cout << "K^2 = " << to_string(ci_degree(wm, omega, wf.bundles)) << "\n";
      return 0;
    }

    if (*mmp_tree) {
      auto reg = load_reg(registry_path);
      TreeMode mode = (mmp_mode == "raw") ? TreeMode::Raw : TreeMode::Curated;
      bool any = false;
      nlohmann::json out = nlohmann::json::array();
      for (const auto& root : reg.mmp_roots) {
        const auto* fam = reg.find_family(root.family);
        if (!fam || fam->k != mmp_k) continue;
        any = true;
        auto tree = enumerate_tree(reg.root_state(*fam), mode,
                                   mode == TreeMode::Curated ? root.prunes
                                                             : std::vector<CuratedPrune>{});
        if (mmp_json) {
          nlohmann::json entry;
          entry["family"] = root.family;
          entry["mode"] = mmp_mode;
          entry["tree"] = tree_json(tree);
          if (mode == TreeMode::Curated) {
            nlohmann::json prunes = nlohmann::json::array();
            for (const auto& p : root.prunes) {
              nlohmann::json pj;
              std::string path;
              for (auto t : p.path) path += (path.empty() ? "" : ",") + contraction_name(t);
              pj["path"] = path;
              pj["citation"] = p.citation;
              prunes.push_back(pj);
            }
            entry["prunes"] = prunes;
          }
          out.push_back(entry);
        } else {
          std::cout << root.family << " (" << mmp_mode << "):\n";
          std::cout << tree.render(1);
        }
      }
      if (!any) throw std::runtime_error("no root family with that k");
      if (mmp_json) std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*candidates) {
      auto sieve = candidate_sieve();
      if (candidates_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : sieve) {
          nlohmann::json row;
          row["k"] = c.k.str();
          row["d"] = to_string(c.d);
          row["sigma_min"] = c.sigma_min.str();
          row["sigma_max"] = c.sigma_max.str();
          row["verdict"] = verdict_name(c.verdict);
          if (!c.note.empty()) row["note"] = c.note;
          arr.push_back(row);
        }
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto& c : sieve) {
          if (c.verdict == CandidateVerdict::ExcludedByBounds) continue;
          std::cout << "k=" << c.k.str() << " d=" << to_string(c.d)
                    << "  sigma in [" << c.sigma_min.str() << "," << c.sigma_max.str()
                    << "]  " << verdict_name(c.verdict);
          if (!c.note.empty()) std::cout << "  (" << c.note << ")";
          std::cout << "\n";
        }
      }
      return 0;
    }
  } catch (const SchemaError& e) {
    std::cerr << "registry error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
