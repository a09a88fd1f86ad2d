#include "doctest.h"

#include "krcyclo/cyclo.hpp"
#include "krcyclo/kr.hpp"
#include "krcyclo/nestohedra.hpp"

#include <set>

using namespace krcyclo;

namespace {

// The cyclic interval [i,j)^0 as a mask, and back from a mask to the arc.
Arc arc_of_interval_mask(int n, uint32_t x) {
  for (int i = 1; i <= n; ++i) {
    const int prev = i == 1 ? n : i - 1;
    if ((x & (uint32_t{1} << (i - 1))) && !(x & (uint32_t{1} << (prev - 1)))) {
      const int size = __builtin_popcount(x);
      int j = (i - 1 + size) % n + 1;
      return make_arc(n, i, j);
    }
  }
  throw std::invalid_argument("mask is not a proper cyclic interval");
}

} // namespace

TEST_CASE("metric validation") {
  const auto u = validate(uniform_metric(4));
  CHECK(u.is_quasi);
  CHECK(u.is_strict);
  CHECK(u.is_symmetric);

  const auto c = validate(clock_metric(4));
  CHECK(c.is_quasi);
  CHECK_FALSE(c.is_strict); // d(1,3) = d(1,2) + d(2,3)
  CHECK_FALSE(c.is_symmetric);

  const auto y = validate(cyclohedral_metric(4));
  CHECK(y.is_quasi);
  CHECK(y.is_strict);
  CHECK_FALSE(y.is_symmetric);

  QuasiMetric bad = uniform_metric(3);
  bad.rho[0][0] = 1;
  bad.rho[1][2] = -2;
  const auto b = validate(bad);
  CHECK_FALSE(b.is_quasi);
  CHECK(b.violations.size() >= 2);
}

TEST_CASE("clock metric") {
  const auto d = clock_metric(4);
  CHECK(d.rho[0][1] == 1);
  CHECK(d.rho[1][0] == 3);
  for (int i = 0; i < 4; ++i) {
    CHECK(d.rho[i][i] == 0);
    for (int j = 0; j < 4; ++j)
      if (i != j) CHECK(d.rho[i][j] + d.rho[j][i] == 4);
  }
}

TEST_CASE("cyclohedral metric values and height ratio") {
  const auto m3 = cyclohedral_metric(3);
  CHECK(m3.rho[0][1] == QQ(4, 3));
  CHECK(m3.rho[0][2] == QQ(5, 3));
  const auto m4 = cyclohedral_metric(4);
  CHECK(m4.rho[0][1] == QQ(9, 4));
  CHECK(m4.rho[0][2] == QQ(7, 2));
  CHECK(m4.rho[0][3] == QQ(15, 4));
  // Strictness instance from the triangle through the middle.
  CHECK(m4.rho[0][2] < m4.rho[0][1] + m4.rho[1][2]);

  // rho(i,j) = h_closure([i,j)^0) / h_basis([i,j)^0) for all pairs.
  for (int n = 3; n <= 12; ++n) {
    const auto f = cyclic_edges(n);
    const auto closure = building_closure(f);
    const auto m = cyclohedral_metric(n);
    for (const auto& a : all_arcs(n)) {
      const uint32_t x = arc_support_mask(a);
      CHECK(m.rho[a.source - 1][a.sink - 1] ==
            height(closure.family, closure, x) / height(f, closure, x));
    }
  }
}

TEST_CASE("epsilon metric") {
  const auto m = epsilon_metric(4, QQ(1, 8));
  CHECK(m.rho[0][1] == QQ(7, 8));
  CHECK(m.rho[0][2] == QQ(3, 2));
  CHECK(m.rho[0][3] == QQ(15, 8));
  CHECK(validate(m).is_quasi);
  CHECK_THROWS_AS(epsilon_metric(4, QQ(1, 4)), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_metric(4, QQ(0)), std::invalid_argument);
}

TEST_CASE("KR polytopes") {
  // Uniform metric gives the root polytope exactly.
  for (int n = 3; n <= 4; ++n) {
    const auto kr = kr_polytope(uniform_metric(n));
    const auto root = build_root_polytope(n);
    CHECK(kr.hull.vpoly.vertices == root.hull.vpoly.vertices);
    CHECK(kr.all_generators_vertices);
  }

  const auto kr4 = kr_polytope(cyclohedral_metric(4));
  CHECK(kr4.all_generators_vertices);
  CHECK(kr4.hull.vpoly.vertices.size() == 12);
  const auto lat = face_lattice(kr4.hull);
  CHECK(lat.f_vector == std::vector<long long>{12, 30, 20, 1});
  CHECK(euler_relation_holds(lat));

  // Prop 2.4 failure direction: breaking the triangle inequality pushes a
  // generator strictly inside.
  QuasiMetric bad = uniform_metric(3);
  bad.rho[0][2] = 10;
  const auto krb = kr_polytope(bad);
  CHECK_FALSE(krb.all_generators_vertices);
  REQUIRE(krb.interior_generators.size() == 1);
  CHECK(krb.interior_generators[0] == std::make_pair(1, 3));

  // Clock metric: quasi, so nothing interior, but the tight triangles put
  // generators on the boundary without making them vertices.
  const auto krc = kr_polytope(clock_metric(4));
  CHECK(krc.interior_generators.empty());
  CHECK_FALSE(krc.all_generators_vertices);
  CHECK_FALSE(krc.boundary_nonvertex_generators.empty());

  // Gauge homogeneity: scaling the metric by c scales KR by 1/c.
  QuasiMetric scaled = cyclohedral_metric(4);
  for (auto& row : scaled.rho)
    for (auto& x : row) x *= QQ(3, 2);
  const auto krs = kr_polytope(scaled);
  std::vector<QVec> expect;
  for (const auto& v : kr4.hull.vpoly.vertices)
    expect.push_back(vec_scaled(v, QQ(2, 3)));
  std::sort(expect.begin(), expect.end());
  CHECK(krs.hull.vpoly.vertices == expect);
}

TEST_CASE("central symmetry iff symmetric metric") {
  auto is_centrally_symmetric = [](const KRPolytope& kr) {
    std::set<QVec> vs(kr.hull.vpoly.vertices.begin(), kr.hull.vpoly.vertices.end());
    for (const auto& v : kr.hull.vpoly.vertices)
      if (!vs.count(vec_neg(v))) return false;
    return true;
  };
  CHECK(is_centrally_symmetric(kr_polytope(uniform_metric(4))));
  CHECK(is_centrally_symmetric(kr_polytope(sample_generic_metric(4, 7))));
  CHECK_FALSE(is_centrally_symmetric(kr_polytope(cyclohedral_metric(4))));
  CHECK_FALSE(is_centrally_symmetric(kr_polytope(clock_metric(5))));
}

TEST_CASE("Lipschitz polytopes and polarity") {
  // Uniform on 3 points: hexagon with the frozen vertex list.
  const auto lip3 = lipschitz_polytope(uniform_metric(3));
  const auto v3 = vertex_enumeration(lip3);
  const std::vector<QVec> expected = {
      {QQ(-2, 3), QQ(1, 3), QQ(1, 3)},  {QQ(-1, 3), QQ(-1, 3), QQ(2, 3)},
      {QQ(-1, 3), QQ(2, 3), QQ(-1, 3)}, {QQ(1, 3), QQ(-2, 3), QQ(1, 3)},
      {QQ(1, 3), QQ(1, 3), QQ(-2, 3)},  {QQ(2, 3), QQ(-1, 3), QQ(-1, 3)}};
  CHECK(v3.vertices == expected);

  // Cyclohedral metric: Lip realizes W_4.
  const auto lip4 = lipschitz_polytope(cyclohedral_metric(4));
  for (const bool f : lip4.irredundant_flags) CHECK(f);
  const auto v4 = vertex_enumeration(lip4);
  CHECK(face_lattice(v4).f_vector == std::vector<long long>{20, 30, 12, 1});

  // Lip is the polar of KR inside the zero-sum hyperplane.
  for (const auto& m :
       {uniform_metric(3), cyclohedral_metric(3), cyclohedral_metric(4),
        clock_metric(4), sample_generic_metric(4, 3)}) {
    const auto kr = kr_polytope(m);
    const auto polar = polar_dual(kr.hull.vpoly);
    const auto lip_v = vertex_enumeration(lipschitz_polytope(m));
    CHECK(polar.vertices == lip_v.vertices);
  }

  // Redundant rows appear exactly at the clock metric's tight triangles.
  const auto lipc = lipschitz_polytope(clock_metric(4));
  int essential = 0;
  for (const bool f : lipc.irredundant_flags) essential += f ? 1 : 0;
  CHECK(essential == 4); // only the single-step inequalities are facets
}

TEST_CASE("cyclohedral type verification") {
  for (int n = 3; n <= 5; ++n) {
    const auto rep = verify_cyclohedral_type(cyclohedral_metric(n));
    CHECK(rep.pass);
    CHECK(rep.is_strict);
    CHECK(rep.lattice_match);
  }

  // Uniform metric fails: square facets of the root polytope are not
  // simplices of the arc complex.
  const auto uni = verify_cyclohedral_type(uniform_metric(4));
  CHECK_FALSE(uni.pass);
  CHECK(uni.is_quasi);
  CHECK_FALSE(uni.first_mismatch.empty());

  // Dihedral relabeling preserves the cyclohedral type.
  const auto rot = verify_cyclohedral_type(rotate_labels(cyclohedral_metric(4)));
  CHECK(rot.pass);

  CHECK_THROWS_AS(verify_cyclohedral_type(cyclohedral_metric(7)), CapExceededError);
}

TEST_CASE("epsilon metric is cyclohedral at n = 4 (reported check)") {
  const auto rep = verify_cyclohedral_type(epsilon_metric(4, QQ(1, 8)));
  CHECK(rep.pass);
}

TEST_CASE("combinatorial structure digraphs") {
  const auto kr = kr_polytope(cyclohedral_metric(4));
  const auto cs = combinatorial_structure(kr);
  CHECK(cs.all_forests);
  CHECK(cs.all_dichotomies);
  for (const auto& fd : cs.faces) {
    if (fd.face_dim == 0) CHECK(fd.edges.size() == 1);
    if (fd.face_dim == 2) CHECK(fd.edges.size() == 3); // facets are trees
  }

  const auto krU = kr_polytope(uniform_metric(4));
  const auto csU = combinatorial_structure(krU);
  CHECK_FALSE(csU.all_forests); // square facets carry undirected cycles
  bool found_square_cycle = false;
  for (const auto& fd : csU.faces)
    if (fd.face_dim == 2 && fd.edges.size() == 4 && !fd.forest)
      found_square_cycle = true;
  CHECK(found_square_cycle);
}

TEST_CASE("genericity") {
  CHECK(is_generic(cyclohedral_metric(4)));
  CHECK_FALSE(is_generic(uniform_metric(4)));
  CHECK_FALSE(is_generic(clock_metric(4)));
}

TEST_CASE("generic sampler is deterministic and hits the generic f-vector") {
  const auto a = sample_generic_metric(4, 42);
  const auto b = sample_generic_metric(4, 42);
  CHECK(a.rho == b.rho);
  CHECK(is_generic(a));
  CHECK(validate(a).is_symmetric);

  for (const uint64_t seed : {1, 2, 3}) {
    const auto m3 = sample_generic_metric(3, seed);
    CHECK(face_lattice(kr_polytope(m3).hull).f_vector ==
          std::vector<long long>{6, 6, 1});
    const auto m4 = sample_generic_metric(4, seed);
    CHECK(face_lattice(kr_polytope(m4).hull).f_vector ==
          std::vector<long long>{12, 30, 20, 1});
  }
}

TEST_CASE("nestohedron vertex-facet incidences match the arc model") {
  for (int n = 3; n <= 5; ++n) {
    const auto rep = minkowski_h_rep(building_closure(cyclic_edges(n)).family);
    const auto w = vertex_enumeration(rep.hrep);
    // Collect, per vertex of W_n, the arcs of its tight rows.
    std::set<std::vector<Arc>> families_seen;
    for (const auto& v : w.vertices) {
      std::vector<Arc> fam;
      for (size_t r = 0; r < rep.hrep.inequalities.size(); ++r) {
        if (vec_dot(rep.hrep.inequalities[r].normal, v) ==
            rep.hrep.inequalities[r].rhs) {
          fam.push_back(arc_of_interval_mask(n, rep.row_sets[r]));
        }
      }
      std::sort(fam.begin(), fam.end());
      CHECK(fam.size() == static_cast<size_t>(n - 1)); // simple polytope
      CHECK(is_admissible(fam));
      families_seen.insert(fam);
    }
    // The tight-row families are exactly the maximal admissible families.
    const auto maximal = enumerate_admissible(n, n - 1);
    CHECK(families_seen.size() == maximal.size());
    for (const auto& t : maximal) CHECK(families_seen.count(t.arcs) == 1);
  }
}
