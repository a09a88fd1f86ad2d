#include "doctest.h"

#include "krcyclo/cyclo.hpp"
#include "krcyclo/nestohedra.hpp"

#include <random>
#include <set>

using namespace krcyclo;

TEST_CASE("building closures") {
  const auto trivial = building_closure(make_hypergraph(2, {{1}, {2}}));
  CHECK(trivial.family.edges.size() == 2);

  const auto con4 = building_closure(cyclic_edges(4));
  CHECK(con4.family.edges.size() == 13); // 4 + 4 + 4 + [4]
  // All cyclic intervals are present.
  for (int i = 1; i <= 4; ++i)
    for (int len = 1; len <= 3; ++len) {
      uint32_t m = 0;
      for (int t = 0; t < len; ++t) m |= uint32_t{1} << ((i - 1 + t) % 4);
      CHECK(std::binary_search(con4.family.edges.begin(), con4.family.edges.end(), m));
    }

  const auto con5 = building_closure(bc_family(5, 2));
  CHECK(con5.family.edges.size() == 21);

  // Closure of the 3-intervals on [5]: singletons, 3- and 4-intervals, [5].
  const auto bc53 = building_closure(bc_family(5, 3));
  CHECK(bc53.family.edges.size() == 16);
}

TEST_CASE("building closure is idempotent and monotone") {
  std::mt19937_64 rng(20240713);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4); // 3..6
    const uint32_t ground = (uint32_t{1} << n) - 1;
    std::vector<uint32_t> edges;
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) {
      const uint32_t e = static_cast<uint32_t>(rng()) & ground;
      if (e) edges.push_back(e);
    }
    if (edges.empty()) edges.push_back(1);
    const auto f = hypergraph_from_masks(n, edges);
    const auto closed = building_closure(f);
    CHECK(building_closure(closed.family).family == closed.family);

    // Monotone: add one more random edge.
    auto bigger_edges = f.edges;
    const uint32_t extra = (static_cast<uint32_t>(rng()) & ground) | 1;
    bigger_edges.push_back(extra);
    const auto bigger = building_closure(hypergraph_from_masks(n, bigger_edges));
    for (const uint32_t e : closed.family.edges)
      CHECK(std::binary_search(bigger.family.edges.begin(),
                               bigger.family.edges.end(), e));
  }
}

TEST_CASE("restriction and deletion") {
  const auto f = cyclic_edges(4);
  const uint32_t x = set_mask({1, 2});
  CHECK(restriction(f, x) == make_hypergraph(4, {{1, 2}}));
  CHECK(deletion(f, x) == make_hypergraph(4, {{3}, {3, 4}, {4}}));
  const uint32_t ground = set_mask({1, 2, 3, 4});
  CHECK(restriction(f, ground) == f);
  CHECK(deletion(f, ground).edges.empty());
}

TEST_CASE("hypergraph connectivity conventions") {
  const Hypergraph empty3 = hypergraph_from_masks(3, {});
  CHECK(component_count(empty3, set_mask({1, 2, 3})) == 3);
  CHECK(connected_on(hypergraph_from_masks(1, {}), set_mask({1})));
  CHECK(connected_on(make_hypergraph(4, {{1, 2, 3, 4}}), set_mask({1, 2, 3, 4})));
  CHECK_FALSE(connected_on(make_hypergraph(4, {{1, 2}, {3, 4}}),
                           set_mask({1, 2, 3, 4})));
}

TEST_CASE("minkowski H-representations") {
  // A single segment.
  const auto seg = minkowski_h_rep(make_hypergraph(2, {{1, 2}}));
  const auto seg_v = vertex_enumeration(seg.hrep);
  CHECK(seg_v.vertices == std::vector<QVec>{{QQ(0), QQ(1)}, {QQ(1), QQ(0)}});

  // Cyclic edges on [4]: the generalized rhombic dodecahedron, 12 essential
  // inequalities and 14 vertices.
  const auto rd = minkowski_h_rep(cyclic_edges(4));
  CHECK(rd.connected);
  CHECK(rd.hrep.inequalities.size() == 12);
  for (const bool flag : rd.hrep.irredundant_flags) CHECK(flag);
  const auto rd_v = vertex_enumeration(rd.hrep);
  CHECK(rd_v.vertices.size() == 14);
  const auto rd_lat = face_lattice(rd_v);
  CHECK(rd_lat.f_vector == std::vector<long long>{14, 24, 12, 1});

  // Exact vertex match with the zonotope route: translate to the zero-sum
  // hyperplane and compare with Zono over the generators e_{i+1} - e_i.
  std::vector<QVec> translated;
  for (const auto& v : rd_v.vertices) {
    QVec t = v;
    for (auto& c : t) c -= 1;
    translated.push_back(std::move(t));
  }
  std::sort(translated.begin(), translated.end());
  std::vector<QVec> b_simplex;
  for (int i = 0; i < 4; ++i) {
    QVec v(4, QQ(0));
    v[(i + 1) % 4] = 1;
    v[i] = -1;
    b_simplex.push_back(std::move(v));
  }
  const auto zono = zono_delta(b_simplex);
  CHECK(translated == zono.vertices);

  // The building set itself gives the cyclohedron W_4.
  const auto w4 = minkowski_h_rep(building_closure(cyclic_edges(4)).family);
  const auto w4_v = vertex_enumeration(w4.hrep);
  const auto w4_lat = face_lattice(w4_v);
  CHECK(w4_lat.f_vector == std::vector<long long>{20, 30, 12, 1});
  CHECK(euler_relation_holds(w4_lat));
}

TEST_CASE("minkowski sum vertex oracle agrees with the H-rep route") {
  std::mt19937_64 rng(912871);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3); // 3..5
    const uint32_t ground = (uint32_t{1} << n) - 1;
    std::vector<uint32_t> edges;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      const uint32_t e = static_cast<uint32_t>(rng()) & ground;
      if (e) edges.push_back(e);
    }
    if (edges.empty()) edges.push_back(ground);
    const auto f = hypergraph_from_masks(n, edges);
    const auto oracle = minkowski_sum_vertices_oracle(f);
    const auto via_hrep = vertex_enumeration(minkowski_h_rep(f).hrep);
    CHECK(via_hrep.vertices == oracle);

    // Dimension law: |S| - number of components.
    const int expected_dim = n - component_count(f, ground);
    CHECK(via_hrep.dim == expected_dim);
  }
}

TEST_CASE("tightness") {
  for (int n = 3; n <= 8; ++n) CHECK(is_tight(cyclic_edges(n)).tight);

  // The path on [4] fails tightness. X = {2,3} is the named witness
  // (deletion {{1},{4}} is disconnected); the singletons {2} and {3} fail
  // too, which the LP cross-check below confirms row by row.
  const auto path = make_hypergraph(4, {{1, 2}, {2, 3}, {3, 4}});
  const auto res = is_tight(path);
  CHECK_FALSE(res.tight);
  const std::vector<uint32_t> expected = {set_mask({2}), set_mask({3}),
                                          set_mask({2, 3})};
  CHECK(res.witnesses == expected);
  CHECK(deletion(path, set_mask({2, 3})) == make_hypergraph(4, {{1}, {4}}));

  for (int n = 4; n <= 7; ++n)
    for (int k = 2; k <= n - 1; ++k) CHECK(is_tight(bc_family(n, k)).tight);
}

TEST_CASE("tightness LP cross-check") {
  std::string witness;
  CHECK(tightness_cross_check(cyclic_edges(4), &witness));
  CHECK(tightness_cross_check(make_hypergraph(4, {{1, 2}, {2, 3}, {3, 4}}), &witness));
  CHECK(tightness_cross_check(bc_family(5, 3), &witness));
  CHECK(tightness_cross_check(cyclic_edges(5), &witness));
  CHECK_THROWS_AS(tightness_cross_check(cyclic_edges(7)), CapExceededError);
}

TEST_CASE("height function") {
  const auto f = cyclic_edges(4);
  const auto closure = building_closure(f);
  const uint32_t ground = set_mask({1, 2, 3, 4});
  CHECK(height(f, closure, ground) == 0);
  CHECK(height(closure.family, closure, ground) == 0);
  CHECK(height(f, closure, set_mask({1, 2})) == QQ(1, 2));
  CHECK(height(closure.family, closure, set_mask({1, 2})) == QQ(7, 4));
  CHECK(height(f, closure, set_mask({2})) == 1);
  CHECK(height(closure.family, closure, set_mask({2})) == QQ(9, 4));
  CHECK_THROWS_AS(height(f, closure, set_mask({1, 3})), std::invalid_argument);

  // Closed forms for every interval, well past the construction sizes.
  for (int n = 3; n <= 12; ++n) {
    const auto fn = cyclic_edges(n);
    const auto cn = building_closure(fn);
    for (const uint32_t x : cn.family.edges) {
      if (x == (uint32_t{1} << n) - 1) continue;
      const int size = static_cast<int>(mask_elements(x).size());
      CHECK(height(fn, cn, x) == QQ(1, size));
      CHECK(height(cn.family, cn, x) ==
            QQ(n * n - n + 1, n) - QQ(size + 1, 2));
    }
  }
}

TEST_CASE("A_X vectors form a type A root system for the cyclic family") {
  const auto f4 = cyclic_edges(4);
  const auto c4 = building_closure(f4);
  CHECK(a_x_vector(f4, c4, set_mask({1})) ==
        QVec{QQ(-3, 4), QQ(1, 4), QQ(1, 4), QQ(1, 4)});
  CHECK_THROWS_AS(a_x_vector(f4, c4, set_mask({1, 2, 3, 4})),
                  std::invalid_argument);

  for (int n = 3; n <= 5; ++n) {
    const auto f = cyclic_edges(n);
    const auto closure = building_closure(f);
    const uint32_t ground = (uint32_t{1} << n) - 1;
    std::set<QVec> all;
    for (const uint32_t x : closure.family.edges)
      if (x != ground) all.insert(a_x_vector(f, closure, x));

    // A_i := A over the initial interval [1, i)^0.
    std::vector<QVec> a(n + 1);
    for (int i = 2; i <= n; ++i) {
      std::vector<int> xs;
      for (int v = 1; v < i; ++v) xs.push_back(v);
      a[i] = a_x_vector(f, closure, set_mask(xs));
    }
    std::set<QVec> expected;
    for (int i = 2; i <= n; ++i) {
      expected.insert(a[i]);
      expected.insert(vec_neg(a[i]));
      for (int j = 2; j <= n; ++j)
        if (i != j) expected.insert(vec_sub(a[i], a[j]));
    }
    CHECK(all == expected);
  }
}

TEST_CASE("Q_{5,k} polytopes are pairwise non-isomorphic") {
  // W_5 has 70 vertices, past the direct incidence cap, so the f-vectors go
  // through the polar route.
  std::vector<std::vector<long long>> fvecs;
  for (int k = 2; k <= 4; ++k) {
    const auto closure = building_closure(bc_family(5, k));
    const auto rep = minkowski_h_rep(closure.family);
    const auto v = vertex_enumeration(rep.hrep);
    fvecs.push_back(f_vector_via_polar(v, rep.hrep));
  }
  // Q_{5,2} is the cyclohedron itself.
  std::vector<long long> w5(cyclohedron_f_vector(5));
  CHECK(fvecs[0] == w5);
  CHECK(fvecs[0] != fvecs[1]);
  CHECK(fvecs[0] != fvecs[2]);
  CHECK(fvecs[1] != fvecs[2]);
}
