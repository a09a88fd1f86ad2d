#pragma once

#include "krcyclo/arcs.hpp"
#include "krcyclo/polytope.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace krcyclo {

// The canonical vertex map: [i,j) -> e_i - e_j in the zero-sum hyperplane.
QVec phi_image(const Arc& a);

struct RootPolytope {
  int n = 0;
  Hull hull;
  FaceLattice lattice;
  // Per vertex of hull.vpoly: the pair (i,j) with vertex == e_i - e_j.
  std::vector<std::pair<int, int>> vertex_labels;
  int vertex_of_pair(int i, int j) const;
};

// Builds Root_n = conv{e_i - e_j} for 3 <= n <= 6 and validates central
// symmetry plus the Minkowski split into a simplex and its negative via
// support values on every facet normal.
RootPolytope build_root_polytope(int n);

// True iff every facet's vertex-label set is a full product P x Q of a
// source set and a disjoint sink set.
bool facets_are_simplex_products(const RootPolytope& root,
                                 std::string* witness = nullptr);

struct TriCell {
  AdmissibleFamily family;
  std::vector<int> vertex_ids; // indices into the root polytope vertex list
  uint64_t mask = 0;
  int facet = -1; // index of the unique facet carrying the cell
};

struct BoundaryTriangulation {
  int n = 0;
  RootPolytope root;
  std::vector<TriCell> cells;
  std::vector<std::vector<int>> facet_cells; // per facet: cell indices
};

// Images of all maximal admissible families, each checked non-degenerate
// and located on a unique facet of the root polytope. Any degenerate image
// or cell missing the boundary is a hard failure.
BoundaryTriangulation boundary_triangulation_via_phi(int n);

struct TriangulationReport {
  int n = 0;
  bool pass = false;
  bool vertices_bijective = false;
  bool cells_nondegenerate = false;
  bool facet_volumes_covered = false;
  bool interiors_disjoint = false;
  bool pseudomanifold = false;
  bool euler_ok = false;
  long long euler_characteristic = 0;
  std::vector<long long> f_vector;
  long long disjointness_pairs_checked = 0;
  std::vector<std::string> witnesses;
};

TriangulationReport verify_triangulation(const BoundaryTriangulation& t);

// Boundary triangulation by pulling vertices in the lexicographic order of
// their (i,j) labels. Cells are vertex index lists. Cap n <= 5.
std::vector<std::vector<int>> pulling_triangulation(const RootPolytope& root);

// f-vector of the simplicial complex generated by a family of simplex cells
// (vertex masks); entry k counts k-dimensional faces.
std::vector<long long> complex_f_vector(const std::vector<uint64_t>& cells);

// f_k(W_n) for k = 0..n-1 via admissible-family enumeration; the closed
// form (2n-2-k)!/((n-1-k)!^2 k!) is asserted against the counts.
std::vector<long long> cyclohedron_f_vector(int n);

// Exact closed form (2n-2-k)!/((n-1-k)!^2 k!).
long long cyclohedron_f_formula(int n, int k);

// |det| = 1 in the root lattice basis for the phi-images of every maximal
// admissible family; witnesses collect any failures.
bool lattice_basis_check(int n, std::vector<std::string>* witnesses = nullptr);

// Exhaustive scan of all affinely independent n-subsets of the root
// polytope's vertices: the distinct normalized volumes, sorted. A single
// value would mean the configuration is unimodular.
std::vector<QQ> spanning_simplex_volumes(const RootPolytope& root);

// Within each facet, every full-dimensional simplex spanned by that facet's
// vertices has one volume (facets are products of two simplices). This is
// the statement that makes boundary triangulations equidecomposable.
bool facetwise_unimodular(const RootPolytope& root,
                          std::string* witness = nullptr);

} // namespace krcyclo
