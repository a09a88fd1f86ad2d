#pragma once

#include "krcyclo/cyclo.hpp"
#include "krcyclo/kr.hpp"
#include "krcyclo/nestohedra.hpp"
#include "krcyclo/transport.hpp"

#include "json.hpp"

namespace krcyclo {

using nlohmann::json;

// Rationals travel as strings "p" or "p/q" in lowest terms; every reader
// re-canonicalizes, so JSON round trips are bit-exact.

json polytope_to_json(const VPolytope& p);
VPolytope polytope_from_json(const json& j);

json arc_to_json(const Arc& a);
Arc arc_from_json(const json& j);

json family_to_json(const AdmissibleFamily& t);
AdmissibleFamily family_from_json(const json& j);

json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);

json metric_to_json(const QuasiMetric& m);
QuasiMetric metric_from_json(const json& j);

json measure_to_json(const SignedMeasure& m);
SignedMeasure measure_from_json(const json& j);

json plan_to_json(const TransportPlan& p);

json tightness_report_to_json(const Hypergraph& f);

json triangulation_to_json(const BoundaryTriangulation& t);

} // namespace krcyclo
