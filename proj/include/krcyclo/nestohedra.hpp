#pragma once

#include "krcyclo/polytope.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace krcyclo {

// Set family on [n], edges stored as bitmasks (bit i-1 = element i),
// deduplicated and sorted.
struct Hypergraph {
  int n = 0;
  std::vector<uint32_t> edges;

  bool operator==(const Hypergraph& o) const = default;
};

uint32_t set_mask(const std::vector<int>& elements);
std::vector<int> mask_elements(uint32_t mask);
std::string mask_to_string(uint32_t mask);

Hypergraph make_hypergraph(int n, const std::vector<std::vector<int>>& edges);
Hypergraph hypergraph_from_masks(int n, std::vector<uint32_t> edges);

// Edges {i, i+1} of the n-cycle.
Hypergraph cyclic_edges(int n);
// The n cyclic k-element intervals [i, i+k)^0, for 2 <= k <= n-1.
Hypergraph bc_family(int n, int k);

// Number of connected components of the hypergraph on the given ground set
// (isolated ground elements count as components).
int component_count(const Hypergraph& h, uint32_t ground_mask);
bool connected_on(const Hypergraph& h, uint32_t ground_mask);

struct BuildingSet {
  Hypergraph family; // contains all singletons; union-closed on overlaps
};

// Least building set containing F: singletons plus unions of intersecting
// members to a fixed point. Minimality is certified by checking that every
// non-generator is forced as such a union; failure throws.
BuildingSet building_closure(const Hypergraph& f);

Hypergraph restriction(const Hypergraph& f, uint32_t x); // {F in f : F ⊆ X}
Hypergraph deletion(const Hypergraph& f, uint32_t x);    // {F \ X : nonempty}

// H-representation of the Minkowski sum of simplices over F: the equality
// row sums to |F| and one inequality per X in the closure (minus the ground
// set). Irredundancy flags are decided by exact drop-and-test LPs.
struct MinkowskiHRep {
  HPolytope hrep;
  std::vector<uint32_t> row_sets; // X per inequality, aligned with hrep rows
  BuildingSet closure;
  bool connected = false; // dimension drops when false
};
MinkowskiHRep minkowski_h_rep(const Hypergraph& f);

struct TightnessResult {
  bool tight = false;
  std::vector<uint32_t> witnesses; // X with disconnected deletion
};
// Tight iff for every X in the closure (except the ground set) the deletion
// F^X is connected on [n] \ X. The restriction condition is automatic for a
// building closure and asserted, not assumed.
TightnessResult is_tight(const Hypergraph& f);

// Confirms that the combinatorial criterion and the LP irredundancy flags
// agree inequality by inequality. Disagreement returns false (hard failure).
bool tightness_cross_check(const Hypergraph& f, std::string* witness = nullptr);

// h_F(X) = |F|/n - |F_X|/|X| for X in the closure; the ground set gets 0.
QQ height(const Hypergraph& f, const BuildingSet& closure, uint32_t x);

// A_X = (1/h_F(X)) (e/n - e_X/|X|), rejected when h_F(X) = 0.
QVec a_x_vector(const Hypergraph& f, const BuildingSet& closure, uint32_t x);

// Independent route to the vertices of the Minkowski sum: componentwise
// vertex choices filtered down to extreme points by exact LP. Test oracle.
std::vector<QVec> minkowski_sum_vertices_oracle(const Hypergraph& f);

} // namespace krcyclo
