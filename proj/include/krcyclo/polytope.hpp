#pragma once

#include "krcyclo/lp.hpp"
#include "krcyclo/vec.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace krcyclo {

struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};
struct UnboundedError : std::runtime_error {
  explicit UnboundedError(const std::string& what) : std::runtime_error(what) {}
};
struct DegenerateInputError : std::runtime_error {
  explicit DegenerateInputError(const std::string& what) : std::runtime_error(what) {}
};

// Ambient space marker: R^n, or the affine hyperplane of fixed coordinate sum.
struct Ambient {
  int dim = 0;
  std::optional<QQ> hyperplane_sum;
  bool operator==(const Ambient& o) const {
    return dim == o.dim && hyperplane_sum == o.hyperplane_sum;
  }
};
inline Ambient ambient_full(int n) { return Ambient{n, std::nullopt}; }
inline Ambient ambient_sum(int n, QQ nu) { return Ambient{n, std::move(nu)}; }
inline Ambient ambient_zero_sum(int n) { return Ambient{n, QQ(0)}; }

struct VPolytope {
  Ambient ambient;
  std::vector<QVec> vertices; // canonically sorted, exactly the extreme points
  int dim = -1;               // affine dimension
};

struct LinearCondition {
  QVec normal;
  QQ rhs;
};

struct HPolytope {
  int ambient_dim = 0;
  std::vector<LinearCondition> equalities;   // <normal,x> = rhs
  std::vector<LinearCondition> inequalities; // <normal,x> <= rhs
  std::vector<bool> irredundant_flags;       // parallel to inequalities
};

struct FaceLattice {
  int dim = -1;        // dimension of the top cells
  int num_vertices = 0;
  bool has_top = true; // polytope lattices carry the whole polytope as top
  // (face dimension, vertex bitmask), sorted by (dim, mask). Contains the
  // empty face (-1, 0); contains the top face iff has_top.
  std::vector<std::pair<int, uint64_t>> faces;
  std::vector<long long> f_vector; // f[k] for k = 0..dim

  bool contains_face(uint64_t mask) const;
};

// Hull of a finite rational point set inside its affine hull: vertices,
// irredundant facet description, and facet/vertex incidences in one pass.
struct Hull {
  VPolytope vpoly;
  HPolytope hrep;
  std::vector<uint64_t> facet_masks; // per inequality, over vpoly.vertices order
};

// Brute-force supporting-hyperplane enumeration over dim-subsets of points.
// Deterministic: vertices sorted lexicographically, facet rows sorted by
// canonical (normal, rhs). Throws CapExceededError above dimension 8.
Hull hull_of(std::vector<QVec> points, const Ambient& ambient);

VPolytope make_vpolytope(std::vector<QVec> points, const Ambient& ambient);
HPolytope facet_enumeration(const VPolytope& p);
VPolytope vertex_enumeration(const HPolytope& h);
FaceLattice face_lattice(const VPolytope& p);
FaceLattice face_lattice(const Hull& hull);

// Removes the top face: the lattice of the boundary complex.
FaceLattice strip_top(const FaceLattice& lattice);

// True iff vertex_map (index map L1 -> L2) sends faces to faces bijectively
// in both directions. Face sets are compared exactly, no isomorphism search.
bool lattice_iso_via_bijection(const FaceLattice& l1, const FaceLattice& l2,
                               const std::vector<int>& vertex_map);

// Euler relation of the boundary sphere: sum over proper faces of (-1)^k f_k
// equals 1 + (-1)^(dim-1).
bool euler_relation_holds(const FaceLattice& lattice);

// Normalized volume of a simplex given by its vertex list: |det|/dim!. For
// points spanning the zero-sum hyperplane the determinant is taken in the
// lattice basis {e1-e2, ..., e_{n-1}-e_n}. Degenerate input yields 0.
QQ simplex_volume(const std::vector<QVec>& points);

// Coordinates of a zero-sum vector in the lattice basis {e_i - e_{i+1}}.
QVec lattice_coords(const QVec& v);
// Signed determinant of n-1 zero-sum vectors in that basis.
QQ lattice_determinant(const std::vector<QVec>& vectors);

// Minkowski sum of the segments [a, a_i] where a is the centroid of the
// given simplex vertices. Rejects degenerate simplices.
VPolytope zono_delta(const std::vector<QVec>& simplex_vertices);

// Polar computed inside the linear-subspace affine hull of P; the origin
// must be strictly interior.
VPolytope polar_dual(const VPolytope& p);

// Checks (A(K))^o == B(K^o) with B the inverse transpose of A restricted to
// the affine hull of K. A is given as an ambient matrix mapping the hull's
// direction space into itself.
bool polar_of_linear_image_check(const VPolytope& k, const QMat& a);

QQ support_value(const VPolytope& p, const QVec& direction);

// f-vector of a polytope with too many vertices for direct incidence masks:
// center it, pass to the polar (whose vertex count is the facet count), and
// read the reversed proper f-vector off the dual lattice.
std::vector<long long> f_vector_via_polar(const VPolytope& p, const HPolytope& h);

enum class PointPosition { Interior, Boundary, Outside };
PointPosition classify_point(const HPolytope& h, const QVec& x);

// Exact LP tests used by the triangulation and hull checks.
bool point_in_hull(const QVec& p, const std::vector<QVec>& generators);
bool simplices_interiors_intersect(const std::vector<QVec>& s,
                                   const std::vector<QVec>& t);
// Indices of the extreme points of a point set (independent LP route, used
// as an oracle against the hyperplane hull).
std::vector<int> extreme_point_indices(const std::vector<QVec>& points);

} // namespace krcyclo
