#include "doctest.h"

#include "krcyclo/json_io.hpp"
#include "krcyclo/off_io.hpp"
#include "krcyclo/verify.hpp"

#include <sstream>

using namespace krcyclo;

TEST_CASE("polytope JSON round trip") {
  const auto root = build_root_polytope(4);
  const json j = polytope_to_json(root.hull.vpoly);
  CHECK(j["ambient"] == 4);
  CHECK(j["hyperplane_sum"] == "0");
  const auto back = polytope_from_json(j);
  CHECK(back.vertices == root.hull.vpoly.vertices);
  CHECK(back.ambient == root.hull.vpoly.ambient);
  // Serialization is canonical, so a second pass is byte-identical.
  CHECK(polytope_to_json(back).dump() == j.dump());
}

TEST_CASE("arc and family JSON") {
  const auto a = make_arc(4, 3, 2);
  CHECK(arc_to_json(a) == json{{"n", 4}, {"source", 3}, {"sink", 2}});
  CHECK(arc_from_json(arc_to_json(a)) == a);

  const auto fam = make_family(
      4, {make_arc(4, 3, 2), make_arc(4, 4, 2), make_arc(4, 4, 1)});
  const json j = family_to_json(fam);
  CHECK(j["arcs"].size() == 3);
  const auto back = family_from_json(j);
  CHECK(back.arcs == fam.arcs);
}

TEST_CASE("hypergraph, metric, measure JSON") {
  const auto f = cyclic_edges(4);
  CHECK(hypergraph_from_json(hypergraph_to_json(f)) == f);

  const auto m = cyclohedral_metric(4);
  const json j = metric_to_json(m);
  CHECK(j["rho"][0][1] == "9/4");
  CHECK(metric_from_json(j).rho == m.rho);

  const auto mu = make_measure(4, {QQ(1, 2), QQ(1, 2), QQ(0), QQ(0)});
  const json jm = measure_to_json(mu);
  CHECK(jm["mass"][0] == "1/2");
  CHECK(measure_from_json(jm).mass == mu.mass);
}

TEST_CASE("plan and tightness reports") {
  const auto m = uniform_metric(3);
  const auto plan = transport_cost(m, make_measure(3, {QQ(1), QQ(0), QQ(0)}),
                                   make_measure(3, {QQ(0), QQ(1), QQ(0)}));
  const json j = plan_to_json(plan);
  CHECK(j["cost"] == "1");
  CHECK(j["flow"].size() == 1);
  CHECK(j["potentials"].size() == 3);

  const json t = tightness_report_to_json(cyclic_edges(4));
  CHECK(t["tight"] == true);
  CHECK(t["rows"].size() == 12);
  for (const auto& row : t["rows"]) CHECK(row["connected"] == true);
}

TEST_CASE("triangulation JSON") {
  const auto t = boundary_triangulation_via_phi(4);
  const json j = triangulation_to_json(t);
  CHECK(j["cells"].size() == 20);
  CHECK(j["cells_by_facet"].size() == 14);
}

TEST_CASE("OFF export shapes") {
  const auto t = boundary_triangulation_via_phi(4);
  std::istringstream off(to_off(t));
  std::string magic;
  int nv = 0, nf = 0, ne = 0;
  off >> magic >> nv >> nf >> ne;
  CHECK(magic == "OFF");
  CHECK(nv == 12);
  CHECK(nf == 20);

  const auto root3 = build_root_polytope(3);
  std::istringstream hex_off(to_off(root3.hull));
  hex_off >> magic >> nv >> nf >> ne;
  CHECK(nv == 6);
  CHECK(nf == 1); // one polygon

  const auto root4 = build_root_polytope(4);
  std::istringstream cub(to_off(root4.hull));
  cub >> magic >> nv >> nf >> ne;
  CHECK(nv == 12);
  CHECK(nf == 14);

  CHECK_THROWS_AS(to_off(build_root_polytope(5).hull), std::invalid_argument);
}

TEST_CASE("reports never pass over a failed sub-check") {
  VerificationReport rep;
  rep.check_name = "demo";
  rep.add("first", true);
  CHECK(rep.passed());
  rep.add("second", false, "broken");
  CHECK_FALSE(rep.passed());
  const json j = report_to_json(rep, false);
  CHECK(j["pass"] == false);
  CHECK(j["timings_ms"] == 0);
  CHECK(j["witnesses"].size() == 1);
}

TEST_CASE("hashes are stable") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == fnv1a_hex("a"));
  CHECK(fnv1a_hex("a") != fnv1a_hex("b"));
}
