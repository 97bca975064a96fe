#include "orbifano/registry.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace orbifano {

namespace {

using nlohmann::json;

Rat parse_rat(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
  if (!j.is_string()) throw SchemaError(where + ": expected a rational");
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

Int parse_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
  return Int(j.get<long long>());
}

IVec parse_ivec(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array");
  IVec out;
  for (const auto& x : j) out.push_back(parse_int(x, where));
  return out;
}

IntMat parse_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw SchemaError(where + ": expected a matrix");
  std::vector<IVec> rows;
  for (const auto& r : j) rows.push_back(parse_ivec(r, where));
  return IntMat::from_rows(rows);
}

std::vector<std::string> parse_strings(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) throw SchemaError(where + ": expected a string");
    out.push_back(s.get<std::string>());
  }
  return out;
}

Construction parse_construction(const json& j, const std::string& name) {
  Construction c;
  const std::string where = "family " + name + " construction";
  std::string type = j.value("type", "");
  if (type == "ci")
    c.type = ConstructionType::CompleteIntersection;
  else if (type == "wg25")
    c.type = ConstructionType::WeightedGrassmannian;
  else if (type == "pfaffian")
    c.type = ConstructionType::Pfaffian;
  else if (type == "nonsimplicial")
    c.type = ConstructionType::NonSimplicial;
  else if (type == "quotient")
    c.type = ConstructionType::Quotient;
  else
    throw SchemaError(where + ": unknown type '" + type + "'");
  c.description = j.value("description", "");
  if (j.contains("weights")) {
    c.weights = parse_matrix(j.at("weights"), where + " weights");
    c.has_weights = true;
  }
  if (j.contains("bundles"))
    for (const auto& b : j.at("bundles"))
      c.bundles.push_back(parse_ivec(b, where + " bundles"));
  if (j.contains("nef"))
    for (const auto& g : j.at("nef"))
      c.nef_generators.push_back(parse_ivec(g, where + " nef"));
  if (j.contains("omega")) c.omega = parse_ivec(j.at("omega"), where + " omega");
  if (j.contains("vars")) c.vars = parse_strings(j.at("vars"), where + " vars");
  if (j.contains("matrix_upper"))
    c.matrix_upper = parse_strings(j.at("matrix_upper"), where + " matrix_upper");
  if (j.contains("equations"))
    c.equations = parse_strings(j.at("equations"), where + " equations");
  if (j.contains("line")) c.line_bundle = parse_ivec(j.at("line"), where + " line");
  if (j.contains("rays")) {
    c.rays = parse_matrix(j.at("rays"), where + " rays");
    c.has_rays = true;
  }
  if (j.contains("x_monomials"))
    c.x_monomials = parse_strings(j.at("x_monomials"), where);
  if (j.contains("z_monomials"))
    c.z_monomials = parse_strings(j.at("z_monomials"), where);
  if (j.contains("chart_vars")) c.chart_vars = parse_strings(j.at("chart_vars"), where);
  if (j.contains("chart_z")) c.chart_z = parse_strings(j.at("chart_z"), where);
  if (j.contains("cube_relations"))
    for (const auto& rel : j.at("cube_relations")) {
      auto v = parse_ivec(rel, where + " cube_relations");
      if (v.size() != 4) throw SchemaError(where + ": cube relation needs 4 indices");
      c.cube_relations.push_back({static_cast<int>(v[0]), static_cast<int>(v[1]),
                                  static_cast<int>(v[2]), static_cast<int>(v[3])});
    }
  c.polygon_id = j.value("polygon_id", 0);
  if (c.type == ConstructionType::CompleteIntersection && !c.has_weights)
    throw SchemaError(where + ": complete intersection needs a weight matrix");
  return c;
}

std::vector<Contraction> parse_path(const json& j, const std::string& where) {
  std::vector<Contraction> out;
  for (const auto& s : j) {
    auto t = contraction_from_name(s.get<std::string>());
    if (!t) throw SchemaError(where + ": unknown contraction '" + s.get<std::string>() + "'");
    out.push_back(*t);
  }
  return out;
}

}  // namespace

Registry load_registry_json(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const std::exception& e) {
    throw SchemaError(std::string("registry parse error: ") + e.what());
  }
  Registry reg;
  if (!root.contains("families")) throw SchemaError("missing families");
  std::set<std::string> names;
  for (const auto& f : root.at("families")) {
    FamilyRecord rec;
    rec.name = f.value("name", "");
    if (rec.name.empty()) throw SchemaError("family without a name");
    if (!names.insert(rec.name).second)
      throw SchemaError("duplicate family name " + rec.name);
    std::string series = f.value("series", "X");
    rec.series = series.empty() ? 'X' : series[0];
    rec.k = parse_int(f.at("k"), rec.name + " k");
    rec.d = parse_rat(f.at("d"), rec.name + " d");
    rec.h0 = parse_int(f.at("h0"), rec.name + " h0");
    rec.r = parse_int(f.at("r"), rec.name + " r");
    rec.moduli = parse_int(f.at("moduli"), rec.name + " moduli");
    rec.fano_index = parse_int(f.at("fano_index"), rec.name + " fano_index");
    rec.pi1 = f.value("pi1", "0");
    rec.construction = parse_construction(f.at("construction"), rec.name);
    reg.families.push_back(std::move(rec));
  }
  if (reg.families.size() != 29)
    throw SchemaError("expected 29 family records, found " +
                      std::to_string(reg.families.size()));
  if (!root.contains("polygons")) throw SchemaError("missing polygons");
  std::set<int> ids;
  for (const auto& p : root.at("polygons")) {
    PolygonRecord rec;
    rec.id = p.value("id", 0);
    if (!ids.insert(rec.id).second)
      throw SchemaError("duplicate polygon id " + std::to_string(rec.id));
    std::vector<IVec> verts;
    for (const auto& v : p.at("vertices"))
      verts.push_back(parse_ivec(v, "polygon " + std::to_string(rec.id)));
    try {
      rec.polygon = FanoPolygon::make(verts);
    } catch (const std::exception& e) {
      throw SchemaError("polygon " + std::to_string(rec.id) + ": " + e.what());
    }
    rec.n = parse_int(p.at("n"), "polygon n");
    rec.k = parse_int(p.at("k"), "polygon k");
    rec.deforms_to = p.value("deforms_to", "");
    if (!names.count(rec.deforms_to))
      throw SchemaError("polygon " + std::to_string(rec.id) +
                        " deforms to unknown family " + rec.deforms_to);
    reg.polygons.push_back(std::move(rec));
  }
  if (reg.polygons.size() != 26)
    throw SchemaError("expected 26 polygon records, found " +
                      std::to_string(reg.polygons.size()));
  if (root.contains("binomial_degenerations"))
    for (const auto& b : root.at("binomial_degenerations")) {
      BinomialRecord rec;
      rec.polygon_id = b.value("polygon_id", 0);
      rec.family = b.value("family", "");
      rec.source_vars = parse_strings(b.at("source_vars"), "binomial source_vars");
      rec.target_vars = parse_strings(b.at("target_vars"), "binomial target_vars");
      rec.substitution = parse_strings(b.at("substitution"), "binomial substitution");
      rec.relation = b.value("relation", "");
      if (rec.substitution.size() != rec.source_vars.size())
        throw SchemaError("binomial record for " + rec.family +
                          ": substitution arity mismatch");
      reg.binomials.push_back(std::move(rec));
    }
  if (root.contains("mmp"))
    for (const auto& m : root.at("mmp")) {
      MMPRootRecord rec;
      rec.family = m.value("family", "");
      if (!names.count(rec.family))
        throw SchemaError("mmp root for unknown family " + rec.family);
      for (const auto& e : m.at("expected"))
        rec.expected.push_back(
            {parse_path(e.at("path"), rec.family), e.value("terminal", "")});
      for (const auto& p : m.at("prunes")) {
        CuratedPrune prune;
        prune.path = parse_path(p.at("path"), rec.family);
        prune.citation = p.value("citation", "");
        rec.prunes.push_back(std::move(prune));
      }
      reg.mmp_roots.push_back(std::move(rec));
    }
  return reg;
}

Registry load_registry() { return load_registry_json(embedded_registry_json()); }

Registry load_registry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open registry file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_registry_json(ss.str());
}

const FamilyRecord* Registry::find_family(const std::string& name) const {
  for (const auto& f : families)
    if (f.name == name) return &f;
  return nullptr;
}

const PolygonRecord* Registry::find_polygon(int id) const {
  for (const auto& p : polygons)
    if (p.id == id) return &p;
  return nullptr;
}

std::vector<FamilyKey> Registry::family_keys() const {
  std::vector<FamilyKey> out;
  for (const auto& f : families) out.push_back({f.name, f.k, f.d});
  return out;
}

std::vector<AmbiguityEntry> Registry::ambiguity_entries() const {
  // polygons whose (k, d) pair occurs for more than one family
  std::vector<AmbiguityEntry> out;
  for (const auto& p : polygons) {
    const FamilyRecord* fam = find_family(p.deforms_to);
    if (!fam) continue;
    int same = 0;
    for (const auto& g : families)
      if (g.k == fam->k && g.d == fam->d) ++same;
    if (same > 1) out.push_back({p.polygon, p.deforms_to});
  }
  return out;
}

MMPState Registry::root_state(const FamilyRecord& f) const {
  MMPState s;
  s.k = f.k;
  s.rho_y = f.r;
  Rat k2y = f.d - make_rat(f.k, 3);
  if (!is_integer(k2y)) throw SchemaError(f.name + ": non-integral resolution square");
  s.k2y = rat_num(k2y);
  return s;
}

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (c.status == "fail") ++n;
  return n;
}

std::string VerificationReport::summary() const {
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto& c : checks) {
    if (c.status == "pass") ++pass;
    if (c.status == "fail") ++fail;
    if (c.status == "skipped-with-citation") ++skip;
  }
  return std::to_string(pass) + " passed, " + std::to_string(fail) + " failed, " +
         std::to_string(skip) + " skipped (" + std::to_string(checks.size()) +
         " checks)";
}

std::string VerificationReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json row;
    row["id"] = c.id;
    row["citation"] = c.citation;
    row["status"] = c.status;
    row["expected"] = c.expected;
    row["computed"] = c.computed;
    arr.push_back(row);
  }
  return arr.dump(2);
}

}  // namespace orbifano
