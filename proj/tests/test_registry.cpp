#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbifano/registry.hpp"

#include "json.hpp"

#include <random>

using namespace orbifano;
using nlohmann::json;

TEST_CASE("embedded registry loads with the right shape") {
  auto reg = load_registry();
  CHECK(reg.families.size() == 29);
  CHECK(reg.polygons.size() == 26);
  CHECK(reg.binomials.size() == 4);
  CHECK(reg.mmp_roots.size() == 8);
  REQUIRE(reg.find_family("X_{4,7/3}") != nullptr);
  CHECK(reg.find_family("X_{4,7/3}")->r == 9);
  REQUIRE(reg.find_polygon(26) != nullptr);
  CHECK(reg.find_polygon(26)->deforms_to == "S_{1,25/3}");
  // ambiguity table carries exactly the four shared-degree polygons
  auto amb = reg.ambiguity_entries();
  CHECK(amb.size() == 4);
}

TEST_CASE("schema violations are rejected") {
  std::string text = embedded_registry_json();
  SUBCASE("truncated file") {
    CHECK_THROWS_AS(load_registry_json(text.substr(0, text.size() / 2)), SchemaError);
  }
  SUBCASE("duplicate family name") {
    json root = json::parse(text);
    root["families"][1]["name"] = root["families"][0]["name"];
    CHECK_THROWS_AS(load_registry_json(root.dump()), SchemaError);
  }
  SUBCASE("wrong record count") {
    json root = json::parse(text);
    root["families"].erase(0);
    CHECK_THROWS_AS(load_registry_json(root.dump()), SchemaError);
  }
  SUBCASE("polygon pointing to an unknown family") {
    json root = json::parse(text);
    root["polygons"][0]["deforms_to"] = "X_{9,9}";
    CHECK_THROWS_AS(load_registry_json(root.dump()), SchemaError);
  }
}

TEST_CASE("root states from table data") {
  auto reg = load_registry();
  auto s = reg.root_state(*reg.find_family("X_{4,7/3}"));
  CHECK(s.k == 4);
  CHECK(s.rho_y == 9);
  CHECK(s.k2y == 1);
  auto s6 = reg.root_state(*reg.find_family("X_{6,2}"));
  CHECK(s6.rho_y == 10);
  CHECK(s6.k2y == 0);
}

TEST_CASE("table and polygon suites pass on the pristine registry") {
  auto reg = load_registry();
  auto rep = verify_all(reg, "tables");
  CHECK(rep.failures() == 0);
  auto rep2 = verify_all(reg, "polygons");
  CHECK(rep2.failures() == 0);
}

TEST_CASE("identity and candidate suites pass on the pristine registry") {
  auto reg = load_registry();
  CHECK(verify_all(reg, "identities").failures() == 0);
  CHECK(verify_all(reg, "candidates").failures() == 0);
}

TEST_CASE("mmp suite passes on the pristine registry") {
  auto reg = load_registry();
  auto rep = verify_all(reg, "mmp");
  CHECK(rep.failures() == 0);
}

TEST_CASE("verification is deterministic") {
  auto reg = load_registry();
  auto a = verify_all(reg, "tables").to_json();
  auto b = verify_all(reg, "tables").to_json();
  CHECK(a == b);
  CHECK_THROWS(verify_all(reg, "nonsense"));
}

TEST_CASE("every check carries a citation") {
  auto reg = load_registry();
  for (const auto& c : verify_all(reg, "polygons").checks) CHECK(!c.citation.empty());
}

TEST_CASE("fault injection: single-field perturbations are caught") {
  std::string text = embedded_registry_json();
  std::mt19937 rng(20260810);
  // perturbation recipes over record fields
  auto mutate = [&](json& root, int which) -> std::string {
    std::uniform_int_distribution<std::size_t> fam_idx(0, 28), poly_idx(0, 25);
    switch (which) {
      case 0: {
        auto i = fam_idx(rng);
        root["families"][i]["h0"] = root["families"][i]["h0"].get<long>() + 1;
        return "families[" + std::to_string(i) + "].h0";
      }
      case 1: {
        auto i = fam_idx(rng);
        root["families"][i]["r"] = root["families"][i]["r"].get<long>() + 1;
        return "families[" + std::to_string(i) + "].r";
      }
      case 2: {
        auto i = fam_idx(rng);
        root["families"][i]["moduli"] = root["families"][i]["moduli"].get<long>() - 1;
        return "families[" + std::to_string(i) + "].moduli";
      }
      case 3: {
        auto i = poly_idx(rng);
        root["polygons"][i]["n"] = root["polygons"][i]["n"].get<long>() + 1;
        return "polygons[" + std::to_string(i) + "].n";
      }
      case 4: {
        auto i = poly_idx(rng);
        root["polygons"][i]["k"] = root["polygons"][i]["k"].get<long>() + 1;
        return "polygons[" + std::to_string(i) + "].k";
      }
      case 5: {
        auto i = poly_idx(rng);
        long old = root["polygons"][i]["vertices"][0][0].get<long>();
        root["polygons"][i]["vertices"][0][0] = old + 1;
        return "polygons[" + std::to_string(i) + "].vertex";
      }
      default: {
        auto i = poly_idx(rng);
        auto j = poly_idx(rng);
        if (i == j) j = (j + 1) % 26;
        std::swap(root["polygons"][i]["deforms_to"], root["polygons"][j]["deforms_to"]);
        return "polygons deforms_to swap";
      }
    }
  };
  std::uniform_int_distribution<int> which(0, 6);
  int caught = 0;
  for (int trial = 0; trial < 20; ++trial) {
    json root = json::parse(text);
    std::string what = mutate(root, which(rng));
    bool named_failure = false;
    try {
      auto reg = load_registry_json(root.dump());
      auto rep = verify_all(reg, "all");
      named_failure = rep.failures() > 0;
    } catch (const SchemaError&) {
      named_failure = true;  // structural breakage is a named failure too
    }
    INFO("perturbation: " << what);
    CHECK(named_failure);
    if (named_failure) ++caught;
  }
  CHECK(caught == 20);
}

TEST_CASE("targeted fault: perturbing one h0 fails exactly that row") {
  json root = json::parse(embedded_registry_json());
  for (auto& f : root["families"])
    if (f["name"] == "X_{4,7/3}") f["h0"] = 3;
  auto reg = load_registry_json(root.dump());
  auto rep = verify_all(reg, "tables");
  CHECK(rep.failures() == 1);
  for (const auto& c : rep.checks)
    if (c.status == "fail") CHECK(c.id == "tables.invariants.X_{4,7/3}");
}

TEST_CASE("targeted fault: perturbing polygon 9 breaks its content check") {
  json root = json::parse(embedded_registry_json());
  for (auto& p : root["polygons"])
    if (p["id"] == 9) p["vertices"][0] = {2, 1};
  bool named = false;
  try {
    auto reg = load_registry_json(root.dump());
    auto rep = verify_all(reg, "polygons");
    for (const auto& c : rep.checks)
      if (c.status == "fail" && c.id.find(".9") != std::string::npos) named = true;
  } catch (const SchemaError&) {
    named = true;
  }
  CHECK(named);
}

TEST_CASE("surface degrees agree with the adjacent-cone oracle on all 26 fans") {
  auto reg = load_registry();
  for (const auto& p : reg.polygons) {
    auto fan = face_fan(p.polygon);
    IntMat rays = IntMat::from_rows(fan.rays);
    std::vector<std::vector<std::size_t>> cones;
    for (auto [i, j] : fan.cones()) cones.push_back({std::min(i, j), std::max(i, j)});
    GradedRingContext ctx(rays, cones);
    QVec k(fan.rays.size(), Rat(1));
    CHECK(ctx.top({k, k}) == surface_top_intersection(rays, cones, k, k));
  }
}

TEST_CASE("polygon rendering is deterministic and marks the data") {
  auto reg = load_registry();
  auto svg = render_polygon_svg(reg.find_polygon(26)->polygon);
  CHECK(svg == render_polygon_svg(reg.find_polygon(26)->polygon));
  // three vertex dots: count r="4" markers
  std::size_t count = 0, at = 0;
  while ((at = svg.find("r=\"4\"", at)) != std::string::npos) {
    ++count;
    ++at;
  }
  CHECK(count == 3);
  CHECK(svg.find("stroke=\"#aa2222\"") != std::string::npos);  // origin ring
  CHECK(svg.find("<svg") != std::string::npos);
}
