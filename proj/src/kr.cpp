#include "krcyclo/kr.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace krcyclo {

namespace {

void check_square(const QuasiMetric& m) {
  if (m.n < 2 || static_cast<int>(m.rho.size()) != m.n)
    throw std::invalid_argument("distance matrix size mismatch");
  for (const auto& row : m.rho)
    if (static_cast<int>(row.size()) != m.n)
      throw std::invalid_argument("distance matrix is not square");
}

int steps(int n, int i, int j) { // |[i,j)^0| for 1-based labels
  int d = (j - i) % n;
  if (d < 0) d += n;
  return d;
}

} // namespace

MetricValidation validate(const QuasiMetric& m) {
  check_square(m);
  MetricValidation v;
  bool entries_ok = true;
  for (int i = 0; i < m.n; ++i) {
    if (m.rho[i][i] != 0) {
      entries_ok = false;
      std::ostringstream os;
      os << "rho(" << i + 1 << "," << i + 1 << ") = " << to_string(m.rho[i][i])
         << " must be 0";
      v.violations.push_back(os.str());
    }
    for (int j = 0; j < m.n; ++j) {
      if (i != j && m.rho[i][j] <= 0) {
        entries_ok = false;
        std::ostringstream os;
        os << "rho(" << i + 1 << "," << j + 1 << ") = " << to_string(m.rho[i][j])
           << " must be positive";
        v.violations.push_back(os.str());
      }
    }
  }
  bool triangle = true, strict = true;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      for (int k = 0; k < m.n; ++k) {
        if (i == j || j == k || i == k) continue;
        const QQ lhs = m.rho[i][k];
        const QQ rhs = m.rho[i][j] + m.rho[j][k];
        if (lhs > rhs) {
          triangle = false;
          std::ostringstream os;
          os << "triangle fails: rho(" << i + 1 << "," << k + 1 << ") > rho("
             << i + 1 << "," << j + 1 << ") + rho(" << j + 1 << "," << k + 1 << ")";
          v.violations.push_back(os.str());
        }
        if (lhs >= rhs) strict = false;
      }
  v.is_quasi = entries_ok && triangle;
  v.is_strict = v.is_quasi && strict;
  v.is_symmetric = true;
  for (int i = 0; i < m.n && v.is_symmetric; ++i)
    for (int j = 0; j < m.n; ++j)
      if (m.rho[i][j] != m.rho[j][i]) {
        v.is_symmetric = false;
        break;
      }
  return v;
}

QuasiMetric clock_metric(int n) {
  if (n < 3) throw std::invalid_argument("clock metric needs n >= 3");
  QuasiMetric m{n, std::vector<std::vector<QQ>>(n, std::vector<QQ>(n, QQ(0)))};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.rho[i][j] = steps(n, i + 1, j + 1);
  return m;
}

QuasiMetric cyclohedral_metric(int n) {
  if (n < 3) throw std::invalid_argument("cyclohedral metric needs n >= 3");
  QuasiMetric m{n, std::vector<std::vector<QQ>>(n, std::vector<QQ>(n, QQ(0)))};
  const QQ a(n * n - n + 1, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int d = steps(n, i + 1, j + 1);
      m.rho[i][j] = QQ(d) * a - QQ(d * (d + 1), 2);
    }
  return m;
}

QuasiMetric epsilon_metric(int n, const QQ& eps) {
  if (eps <= 0 || eps >= QQ(1, n))
    throw std::invalid_argument("epsilon out of the validated range (0, 1/n)");
  QuasiMetric m = clock_metric(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const QQ d = m.rho[i][j];
      m.rho[i][j] = d - eps * d * d;
    }
  const auto v = validate(m);
  if (!v.is_quasi) {
    std::string msg = "epsilon metric failed validation";
    if (!v.violations.empty()) msg += ": " + v.violations.front();
    throw std::invalid_argument(msg);
  }
  return m;
}

QuasiMetric uniform_metric(int n) {
  QuasiMetric m{n, std::vector<std::vector<QQ>>(n, std::vector<QQ>(n, QQ(1)))};
  for (int i = 0; i < n; ++i) m.rho[i][i] = 0;
  return m;
}

QuasiMetric reversed(const QuasiMetric& m) {
  QuasiMetric r = m;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) r.rho[i][j] = m.rho[j][i];
  return r;
}

QuasiMetric rotate_labels(const QuasiMetric& m) {
  QuasiMetric r = m;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      r.rho[(i + 1) % m.n][(j + 1) % m.n] = m.rho[i][j];
  return r;
}

QVec kr_generator(const QuasiMetric& m, int i, int j) {
  QVec v(m.n, QQ(0));
  const QQ& d = m.rho[i - 1][j - 1];
  if (d <= 0) throw std::invalid_argument("generator needs a positive distance");
  v[i - 1] = QQ(1) / d;
  v[j - 1] = QQ(-1) / d;
  return v;
}

int KRPolytope::vertex_of_pair(int i, int j) const {
  for (size_t k = 0; k < vertex_labels.size(); ++k)
    if (vertex_labels[k] == std::make_pair(i, j)) return static_cast<int>(k);
  return -1;
}

KRPolytope kr_polytope(const QuasiMetric& m) {
  check_square(m);
  KRPolytope kr;
  kr.metric = m;
  std::vector<QVec> pts;
  for (int i = 1; i <= m.n; ++i)
    for (int j = 1; j <= m.n; ++j)
      if (i != j) pts.push_back(kr_generator(m, i, j));
  kr.hull = hull_of(std::move(pts), ambient_zero_sum(m.n));

  kr.vertex_labels.assign(kr.hull.vpoly.vertices.size(), {-1, -1});
  kr.all_generators_vertices = true;
  for (int i = 1; i <= m.n; ++i)
    for (int j = 1; j <= m.n; ++j) {
      if (i == j) continue;
      const QVec g = kr_generator(m, i, j);
      const auto it = std::lower_bound(
          kr.hull.vpoly.vertices.begin(), kr.hull.vpoly.vertices.end(), g,
          [](const QVec& a, const QVec& b) { return a < b; });
      if (it != kr.hull.vpoly.vertices.end() && *it == g) {
        kr.vertex_labels[it - kr.hull.vpoly.vertices.begin()] = {i, j};
        continue;
      }
      kr.all_generators_vertices = false;
      const PointPosition pos = classify_point(kr.hull.hrep, g);
      if (pos == PointPosition::Interior)
        kr.interior_generators.emplace_back(i, j);
      else
        kr.boundary_nonvertex_generators.emplace_back(i, j);
    }
  return kr;
}

HPolytope lipschitz_polytope(const QuasiMetric& m) {
  check_square(m);
  HPolytope h;
  h.ambient_dim = m.n;
  h.equalities.push_back({QVec(m.n, QQ(1)), QQ(0)});
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      if (i == j) continue;
      QVec normal(m.n, QQ(0));
      normal[i] = 1;
      normal[j] = -1;
      h.inequalities.push_back({std::move(normal), m.rho[i][j]});
    }
  h.irredundant_flags.assign(h.inequalities.size(), false);
  for (size_t r = 0; r < h.inequalities.size(); ++r) {
    GeneralLp lp;
    lp.num_vars = m.n;
    lp.maximize = true;
    lp.objective = h.inequalities[r].normal;
    lp.eq_lhs = {h.equalities[0].normal};
    lp.eq_rhs = {QQ(0)};
    for (size_t s = 0; s < h.inequalities.size(); ++s) {
      if (s == r) continue;
      lp.le_lhs.push_back(h.inequalities[s].normal);
      lp.le_rhs.push_back(h.inequalities[s].rhs);
    }
    const auto sol = lp_solve(lp);
    h.irredundant_flags[r] =
        sol.status == LpStatus::Unbounded ||
        (sol.status == LpStatus::Optimal && sol.objective > h.inequalities[r].rhs);
  }
  return h;
}

CycloTypeReport verify_cyclohedral_type(const QuasiMetric& m) {
  if (m.n > 6) throw CapExceededError("cyclohedral-type check cap: n <= 6");
  CycloTypeReport rep;
  rep.n = m.n;
  const auto v = validate(m);
  rep.is_quasi = v.is_quasi;
  rep.is_strict = v.is_strict;
  if (!v.is_quasi) {
    rep.first_mismatch =
        v.violations.empty() ? "not a quasi-metric" : v.violations.front();
    return rep;
  }

  const KRPolytope kr = kr_polytope(m);
  rep.generators_all_vertices = kr.all_generators_vertices;
  if (!kr.all_generators_vertices) {
    rep.first_mismatch = "a generator is not a vertex of KR";
    return rep;
  }

  const FaceLattice kr_faces = strip_top(face_lattice(kr.hull));
  rep.kr_f_vector = face_lattice(kr.hull).f_vector;
  const FaceLattice arcs = arc_complex(m.n);

  std::vector<int> arc_to_vertex(arcs.num_vertices, -1);
  for (const auto& a : all_arcs(m.n))
    arc_to_vertex[arc_index(a)] = kr.vertex_of_pair(a.source, a.sink);

  rep.lattice_match = lattice_iso_via_bijection(arcs, kr_faces, arc_to_vertex);
  if (!rep.lattice_match) {
    // Locate the first face of either complex missing from the other.
    std::set<uint64_t> kr_set;
    for (const auto& [d, mask] : kr_faces.faces) kr_set.insert(mask);
    for (const auto& [d, mask] : arcs.faces) {
      uint64_t image = 0;
      for (int b = 0; b < arcs.num_vertices; ++b)
        if (mask & (uint64_t{1} << b)) image |= uint64_t{1} << arc_to_vertex[b];
      if (!kr_set.count(image)) {
        std::ostringstream os;
        os << "admissible family of size " << __builtin_popcountll(mask)
           << " is not a face of KR";
        rep.first_mismatch = os.str();
        break;
      }
    }
    if (rep.first_mismatch.empty())
      rep.first_mismatch = "KR has faces outside the admissible complex";
  }
  rep.pass = rep.is_quasi && rep.is_strict && rep.generators_all_vertices &&
             rep.lattice_match;
  return rep;
}

CombinatorialStructure combinatorial_structure(const KRPolytope& kr) {
  CombinatorialStructure cs;
  const FaceLattice lat = face_lattice(kr.hull);
  const int n = kr.metric.n;
  for (const auto& [dim, mask] : lat.faces) {
    if (dim < 0 || dim >= lat.dim) continue; // proper nonempty faces
    FaceDigraph fd;
    fd.face_mask = mask;
    fd.face_dim = dim;
    for (int v = 0; v < lat.num_vertices; ++v) {
      if (!(mask & (uint64_t{1} << v))) continue;
      const auto [a, b] = kr.vertex_labels[v];
      fd.edges.emplace_back(b, a); // pair (i,j) for measure direction e_j - e_i
    }
    // Forest test on the underlying undirected graph.
    std::vector<int> parent(n + 1);
    for (int i = 0; i <= n; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [u, w] : fd.edges) {
      const int ru = find(u), rw = find(w);
      if (ru == rw) {
        fd.forest = false;
        break;
      }
      parent[ru] = rw;
    }
    std::vector<int> in(n + 1, 0), out(n + 1, 0);
    for (const auto& [u, w] : fd.edges) {
      ++out[u];
      ++in[w];
    }
    for (int x = 1; x <= n; ++x)
      if (in[x] > 0 && out[x] > 0) fd.degree_dichotomy = false;
    cs.all_forests = cs.all_forests && fd.forest;
    cs.all_dichotomies = cs.all_dichotomies && fd.degree_dichotomy;
    cs.faces.push_back(std::move(fd));
  }
  return cs;
}

bool is_generic(const QuasiMetric& m) {
  if (m.n > 6) throw CapExceededError("genericity check cap: n <= 6");
  const auto v = validate(m);
  if (!v.is_quasi || !v.is_strict) return false;
  const KRPolytope kr = kr_polytope(m);
  for (const uint64_t fm : kr.hull.facet_masks)
    if (__builtin_popcountll(fm) != kr.hull.vpoly.dim) return false;
  return true;
}

QuasiMetric sample_generic_metric(int n, uint64_t seed) {
  if (n > 6) throw CapExceededError("sampler cap: n <= 6");
  std::mt19937_64 engine(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    QuasiMetric m = uniform_metric(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const QQ delta(static_cast<long long>(engine() % 50) + 1, 1000);
        m.rho[i][j] += delta;
        m.rho[j][i] = m.rho[i][j];
      }
    if (is_generic(m)) return m;
  }
  throw std::runtime_error("sampler retry cap (100) exceeded");
}

} // namespace krcyclo
