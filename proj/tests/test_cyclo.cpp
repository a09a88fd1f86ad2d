#include "doctest.h"

#include "krcyclo/cyclo.hpp"

#include <set>

using namespace krcyclo;

TEST_CASE("phi on arcs") {
  CHECK(phi_image(make_arc(3, 1, 2)) == QVec{QQ(1), QQ(-1), QQ(0)});
  CHECK(phi_image(make_arc(4, 4, 1)) == QVec{QQ(-1), QQ(0), QQ(0), QQ(1)});
  for (int n = 3; n <= 7; ++n) {
    std::set<QVec> images;
    for (const auto& a : all_arcs(n)) images.insert(phi_image(a));
    CHECK(images.size() == static_cast<size_t>(n * (n - 1)));
  }
}

TEST_CASE("phi intertwines the dihedral action") {
  for (int n = 3; n <= 6; ++n) {
    const auto alpha = DihedralElement::alpha(n);
    const auto beta = DihedralElement::beta(n);
    for (const auto& a : all_arcs(n)) {
      // alpha acts as the coordinate cycle i -> i+1.
      const QVec lhs = phi_image(dihedral_apply(alpha, a));
      const QVec v = phi_image(a);
      QVec rhs(n);
      for (int i = 0; i < n; ++i) rhs[(i + 1) % n] = v[i];
      CHECK(lhs == rhs);
      // beta acts as minus the permutation x -> n-x+1 (arc reversal).
      const QVec lhs_b = phi_image(dihedral_apply(beta, a));
      QVec rhs_b(n);
      for (int i = 0; i < n; ++i) rhs_b[n - 1 - i] = -v[i];
      CHECK(lhs_b == rhs_b);
    }
  }
}

TEST_CASE("root polytopes") {
  const auto r3 = build_root_polytope(3);
  CHECK(r3.lattice.f_vector == std::vector<long long>{6, 6, 1});
  const auto r4 = build_root_polytope(4);
  CHECK(r4.lattice.f_vector == std::vector<long long>{12, 24, 14, 1});
  CHECK(euler_relation_holds(r4.lattice));
  CHECK(r4.vertex_of_pair(1, 2) >= 0);
  CHECK_THROWS_AS(build_root_polytope(7), CapExceededError);

  std::string witness;
  CHECK(facets_are_simplex_products(r3, &witness));
  CHECK(facets_are_simplex_products(r4, &witness));
}

TEST_CASE("phi triangulation cells and grouping") {
  const auto t3 = boundary_triangulation_via_phi(3);
  CHECK(t3.cells.size() == 6);
  for (const auto& g : t3.facet_cells) CHECK(g.size() == 1);

  const auto t4 = boundary_triangulation_via_phi(4);
  CHECK(t4.cells.size() == 20);
  int with_one = 0, with_two = 0;
  for (const auto& g : t4.facet_cells) {
    if (g.size() == 1) ++with_one;
    if (g.size() == 2) ++with_two;
  }
  CHECK(with_one == 8); // triangles of the cuboctahedron
  CHECK(with_two == 6); // squares carry two triangles each

  std::vector<uint64_t> masks;
  for (const auto& c : t4.cells) masks.push_back(c.mask);
  CHECK(complex_f_vector(masks) == std::vector<long long>{12, 30, 20});
}

TEST_CASE("triangulation verification") {
  for (int n = 3; n <= 5; ++n) {
    const auto rep = verify_triangulation(boundary_triangulation_via_phi(n));
    CHECK(rep.pass);
    CHECK(rep.vertices_bijective);
    CHECK(rep.cells_nondegenerate);
    CHECK(rep.facet_volumes_covered);
    CHECK(rep.interiors_disjoint);
    CHECK(rep.pseudomanifold);
    CHECK(rep.euler_characteristic == (n % 2 == 0 ? 2 : 0));
    // The complex has the reversed proper f-vector of the cyclohedron.
    const auto fw = cyclohedron_f_vector(n);
    for (size_t k = 0; k < rep.f_vector.size(); ++k)
      CHECK(rep.f_vector[k] == fw[n - 2 - k]);
  }
}

TEST_CASE("pulling triangulation is equidecomposable with phi") {
  const auto r3 = build_root_polytope(3);
  CHECK(pulling_triangulation(r3).size() == 6);

  for (int n = 3; n <= 5; ++n) {
    const auto root = build_root_polytope(n);
    const auto pulled = pulling_triangulation(root);
    std::vector<uint64_t> pulled_masks;
    for (const auto& cell : pulled) {
      uint64_t m = 0;
      for (int id : cell) m |= uint64_t{1} << id;
      pulled_masks.push_back(m);
    }
    const auto t = boundary_triangulation_via_phi(n);
    std::vector<uint64_t> phi_masks;
    for (const auto& c : t.cells) phi_masks.push_back(c.mask);
    CHECK(complex_f_vector(pulled_masks) == complex_f_vector(phi_masks));
  }

  // The two triangulations genuinely differ at n = 4 (different diagonals
  // in at least one square facet), which makes the f-vector match a real
  // equidecomposability statement.
  const auto root = build_root_polytope(4);
  const auto pulled = pulling_triangulation(root);
  std::set<uint64_t> pm;
  for (const auto& cell : pulled) {
    uint64_t m = 0;
    for (int id : cell) m |= uint64_t{1} << id;
    pm.insert(m);
  }
  const auto t = boundary_triangulation_via_phi(4);
  bool identical = t.cells.size() == pm.size();
  for (const auto& c : t.cells) identical = identical && pm.count(c.mask);
  CHECK_FALSE(identical);
}

TEST_CASE("cyclohedron f-vectors") {
  CHECK(cyclohedron_f_vector(3) == std::vector<long long>{6, 6, 1});
  CHECK(cyclohedron_f_vector(4) == std::vector<long long>{20, 30, 12, 1});
  CHECK(cyclohedron_f_vector(5)[0] == 70);
  CHECK(cyclohedron_f_vector(6)[0] == 252);
  CHECK(cyclohedron_f_vector(7)[0] == 924);

  // The number-of-faces formula under the shifted index convention: with
  // m = n-1 the closed form is also m!-multinomial (m+i over i,i,m-i) at
  // i = m-k, which pins the set-size convention used throughout.
  for (int n = 3; n <= 7; ++n)
    for (int k = 0; k <= n - 1; ++k) {
      const int m = n - 1, i = m - k;
      long long numer = 1;
      for (int v = 2; v <= m + i; ++v) numer *= v;
      long long denom = 1;
      for (int v = 2; v <= i; ++v) denom *= v * v;
      for (int v = 2; v <= m - i; ++v) denom *= v;
      CHECK(cyclohedron_f_formula(n, k) == numer / denom);
    }
}

TEST_CASE("spanning simplex volumes of root polytopes") {
  // The full vertex configuration is NOT unimodular: alternating vertices
  // span index-3 sublattices. Witness at n = 3: the triangle
  // {e1-e2, e2-e3, e3-e1} has volume 3/2 against 1/2 for adjacent triples.
  const auto triangle = std::vector<QVec>{phi_image(make_arc(3, 1, 2)),
                                          phi_image(make_arc(3, 2, 3)),
                                          phi_image(make_arc(3, 3, 1))};
  CHECK(simplex_volume(triangle) == QQ(3, 2));

  const auto vols3 = spanning_simplex_volumes(build_root_polytope(3));
  CHECK(vols3 == std::vector<QQ>{QQ(1, 2), QQ(1), QQ(3, 2)});
  const auto vols4 = spanning_simplex_volumes(build_root_polytope(4));
  CHECK(vols4.size() > 1);
  CHECK(vols4.front() == QQ(1, 6));

  // What equidecomposability of the boundary actually uses: within each
  // facet (a product of two simplices) all spanned simplices share one
  // volume.
  for (int n = 3; n <= 5; ++n) {
    std::string witness;
    CHECK(facetwise_unimodular(build_root_polytope(n), &witness));
    CHECK(witness.empty());
  }
}

TEST_CASE("lattice basis property at every cyclohedron vertex") {
  std::vector<std::string> witnesses;
  for (int n = 3; n <= 5; ++n) {
    CHECK(lattice_basis_check(n, &witnesses));
    CHECK(witnesses.empty());
  }
  // The worked 3x3 example.
  const std::vector<QVec> images = {phi_image(make_arc(4, 3, 2)),
                                    phi_image(make_arc(4, 4, 2)),
                                    phi_image(make_arc(4, 4, 1))};
  CHECK(lattice_determinant(images) == -1);
}
