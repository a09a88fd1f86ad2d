#pragma once

#include "krcyclo/arcs.hpp"
#include "krcyclo/polytope.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace krcyclo {

// Exact rational distance matrix; symmetry is derived, never assumed.
struct QuasiMetric {
  int n = 0;
  std::vector<std::vector<QQ>> rho; // rho[i][j] = distance from i+1 to j+1
};

struct MetricValidation {
  bool is_quasi = false;
  bool is_strict = false;
  bool is_symmetric = false;
  std::vector<std::string> violations;
};

MetricValidation validate(const QuasiMetric& m);

// d(i,j) = number of counterclockwise steps from i to j on the n-cycle.
QuasiMetric clock_metric(int n);
// rho(i,j) = d(i,j)(n^2-n+1)/n - d(i,j)(d(i,j)+1)/2; the height-function
// ratio of the cyclic family against its building closure.
QuasiMetric cyclohedral_metric(int n);
// rho_eps = d - eps d^2; the result is validated at runtime, not assumed.
QuasiMetric epsilon_metric(int n, const QQ& eps);
QuasiMetric uniform_metric(int n);
// Transposed distances: rho'(i,j) = rho(j,i).
QuasiMetric reversed(const QuasiMetric& m);
// Conjugation by a cyclic relabeling i -> i+1.
QuasiMetric rotate_labels(const QuasiMetric& m);

QVec kr_generator(const QuasiMetric& m, int i, int j); // (e_i - e_j)/rho(i,j)

struct KRPolytope {
  QuasiMetric metric;
  Hull hull;
  // Per hull vertex: the generating pair (i,j).
  std::vector<std::pair<int, int>> vertex_labels;
  bool all_generators_vertices = false;
  std::vector<std::pair<int, int>> interior_generators;
  std::vector<std::pair<int, int>> boundary_nonvertex_generators;

  int vertex_of_pair(int i, int j) const; // -1 when the generator is no vertex
};

// Convex hull of the generators in the zero-sum hyperplane. Non-quasi input
// still builds; interior generators are flagged (they witness the failed
// triangle inequality).
KRPolytope kr_polytope(const QuasiMetric& m);

// {f : f(i) - f(j) <= rho(i,j)} pinned to the zero-sum hyperplane; the
// irredundancy flags are decided by exact drop-and-test LPs.
HPolytope lipschitz_polytope(const QuasiMetric& m);

struct CycloTypeReport {
  int n = 0;
  bool pass = false;
  bool is_quasi = false;
  bool is_strict = false;
  bool generators_all_vertices = false;
  bool lattice_match = false;
  std::string first_mismatch;
  std::vector<long long> kr_f_vector;
};

// Theorem-level check: the KR face lattice must match the admissible-arc
// complex under [i,j) -> (e_i - e_j)/rho(i,j). Cap n <= 6.
CycloTypeReport verify_cyclohedral_type(const QuasiMetric& m);

struct FaceDigraph {
  uint64_t face_mask = 0;
  int face_dim = -1;
  std::vector<std::pair<int, int>> edges;
  bool forest = true;
  bool degree_dichotomy = true; // each vertex has in-degree 0 or out-degree 0
};

struct CombinatorialStructure {
  std::vector<FaceDigraph> faces; // proper nonempty faces of KR
  bool all_forests = true;
  bool all_dichotomies = true;
};

// Per-face digraphs: the pair (i,j) enters D(alpha) when the generator with
// measure difference e_j - e_i lies on alpha. Relative to the generator
// labels this reads (i,j) in D(alpha) iff vertex (j,i) in alpha; the arc
// reversal is the sign-convention flip between the transport labels and the
// face-structure labels.
CombinatorialStructure combinatorial_structure(const KRPolytope& kr);

// Strict triangle inequality and a simplicial KR polytope. Cap n <= 6.
bool is_generic(const QuasiMetric& m);

// Symmetric rational perturbation rho = 1 + delta with delta drawn from
// {1/1000, ..., 50/1000}, redrawn until generic; deterministic per seed.
QuasiMetric sample_generic_metric(int n, uint64_t seed);

} // namespace krcyclo
