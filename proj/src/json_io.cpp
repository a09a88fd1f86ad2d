#include "krcyclo/json_io.hpp"

#include <stdexcept>

namespace krcyclo {

namespace {

json rational_array(const QVec& v) {
  json a = json::array();
  for (const QQ& x : v) a.push_back(to_string(x));
  return a;
}

QVec rational_vector(const json& a) {
  QVec v;
  for (const auto& x : a) v.push_back(parse_rational(x.get<std::string>()));
  return v;
}

} // namespace

json polytope_to_json(const VPolytope& p) {
  json j;
  j["ambient"] = p.ambient.dim;
  j["hyperplane_sum"] = p.ambient.hyperplane_sum
                            ? json(to_string(*p.ambient.hyperplane_sum))
                            : json(nullptr);
  j["vertices"] = json::array();
  for (const auto& v : p.vertices) j["vertices"].push_back(rational_array(v));
  return j;
}

VPolytope polytope_from_json(const json& j) {
  Ambient amb;
  amb.dim = j.at("ambient").get<int>();
  if (!j.at("hyperplane_sum").is_null())
    amb.hyperplane_sum = parse_rational(j.at("hyperplane_sum").get<std::string>());
  std::vector<QVec> pts;
  for (const auto& v : j.at("vertices")) pts.push_back(rational_vector(v));
  return make_vpolytope(std::move(pts), amb);
}

json arc_to_json(const Arc& a) {
  return json{{"n", a.n}, {"source", a.source}, {"sink", a.sink}};
}

Arc arc_from_json(const json& j) {
  return make_arc(j.at("n").get<int>(), j.at("source").get<int>(),
                  j.at("sink").get<int>());
}

json family_to_json(const AdmissibleFamily& t) {
  json arcs = json::array();
  for (const auto& a : t.arcs) arcs.push_back({a.source, a.sink});
  return json{{"n", t.n}, {"arcs", arcs}};
}

AdmissibleFamily family_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<Arc> arcs;
  for (const auto& pair : j.at("arcs"))
    arcs.push_back(make_arc(n, pair.at(0).get<int>(), pair.at(1).get<int>()));
  return make_family(n, std::move(arcs));
}

json hypergraph_to_json(const Hypergraph& h) {
  json edges = json::array();
  for (const uint32_t e : h.edges) edges.push_back(mask_elements(e));
  return json{{"n", h.n}, {"edges", edges}};
}

Hypergraph hypergraph_from_json(const json& j) {
  std::vector<std::vector<int>> edges;
  for (const auto& e : j.at("edges")) edges.push_back(e.get<std::vector<int>>());
  return make_hypergraph(j.at("n").get<int>(), edges);
}

json metric_to_json(const QuasiMetric& m) {
  json rows = json::array();
  for (const auto& row : m.rho) rows.push_back(rational_array(row));
  return json{{"n", m.n}, {"rho", rows}};
}

QuasiMetric metric_from_json(const json& j) {
  QuasiMetric m;
  m.n = j.at("n").get<int>();
  for (const auto& row : j.at("rho")) m.rho.push_back(rational_vector(row));
  if (static_cast<int>(m.rho.size()) != m.n)
    throw std::invalid_argument("metric row count mismatch");
  return m;
}

json measure_to_json(const SignedMeasure& m) {
  return json{{"n", m.n}, {"mass", rational_array(m.mass)}};
}

SignedMeasure measure_from_json(const json& j) {
  return make_measure(j.at("n").get<int>(), rational_vector(j.at("mass")));
}

json plan_to_json(const TransportPlan& p) {
  json flow = json::array();
  for (const auto& [from, to, amount] : p.flow)
    flow.push_back({{"from", from}, {"to", to}, {"amount", to_string(amount)}});
  return json{{"n", p.n},
              {"cost", to_string(p.cost)},
              {"flow", flow},
              {"potentials", rational_array(p.potentials)}};
}

json tightness_report_to_json(const Hypergraph& f) {
  const auto closure = building_closure(f);
  const uint32_t ground = (uint32_t{1} << f.n) - 1;
  json rows = json::array();
  for (const uint32_t x : closure.family.edges) {
    if (x == ground) continue;
    const auto del = deletion(f, x);
    rows.push_back({{"X", mask_elements(x)},
                    {"connected", connected_on(del, ground & ~x)},
                    {"components", component_count(del, ground & ~x)}});
  }
  const auto res = is_tight(f);
  return json{{"n", f.n},
              {"tight", res.tight},
              {"rows", rows}};
}

json triangulation_to_json(const BoundaryTriangulation& t) {
  json cells = json::array();
  for (const auto& cell : t.cells) {
    json vecs = json::array();
    for (const int id : cell.vertex_ids) {
      json coords = json::array();
      for (const QQ& c : t.root.hull.vpoly.vertices[id])
        coords.push_back(to_string(c));
      vecs.push_back(coords);
    }
    cells.push_back({{"family", family_to_json(cell.family)},
                     {"vectors", vecs},
                     {"facet", cell.facet}});
  }
  json facets = json::array();
  for (const auto& group : t.facet_cells) facets.push_back(group);
  return json{{"n", t.n}, {"cells", cells}, {"cells_by_facet", facets}};
}

} // namespace krcyclo
