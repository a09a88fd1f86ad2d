#include "krcyclo/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace krcyclo {

namespace {

constexpr int kMaxHullDim = 8;
constexpr long long kMaxSubsets = 30'000'000;
constexpr int kMaxMaskVertices = 64;

bool lex_less(const QVec& a, const QVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

struct LexLess {
  bool operator()(const QVec& a, const QVec& b) const { return lex_less(a, b); }
};

void sort_points(std::vector<QVec>& pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

long long subset_count(int m, int d) {
  long long c = 1;
  for (int i = 1; i <= d; ++i) {
    c = c * (m - d + i) / i;
    if (c > kMaxSubsets) return kMaxSubsets + 1;
  }
  return c;
}

bool next_combination(std::vector<int>& idx, int m) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < m - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Affine chart of a point set: base point, rref basis of the direction
// space, pivot columns. Coordinates are pivot projections of p - base.
struct Chart {
  QVec base;
  QMat basis;              // d rows, rref
  std::vector<int> pivots; // d pivot columns
  int dim = 0;
  int ambient = 0;

  QVec coords(const QVec& p) const {
    QVec c(dim);
    for (int k = 0; k < dim; ++k) c[k] = p[pivots[k]] - base[pivots[k]];
    return c;
  }
  QVec from_coords(const QVec& c) const {
    QVec p = base;
    for (int k = 0; k < dim; ++k)
      for (int j = 0; j < ambient; ++j) p[j] += c[k] * basis[k][j];
    return p;
  }
  // Linear coordinates (base 0); the affine hull must be a linear subspace.
  QVec lin_coords(const QVec& v) const {
    QVec c(dim);
    for (int k = 0; k < dim; ++k) c[k] = v[pivots[k]];
    return c;
  }
  QVec from_lin_coords(const QVec& c) const {
    QVec p(ambient, QQ(0));
    for (int k = 0; k < dim; ++k)
      for (int j = 0; j < ambient; ++j) p[j] += c[k] * basis[k][j];
    return p;
  }
  // Orthogonal projection of an ambient vector onto the direction space.
  QVec project_to_span(const QVec& v) const {
    QMat gram(dim, QVec(dim));
    QVec rhs(dim);
    for (int k = 0; k < dim; ++k) {
      for (int l = 0; l < dim; ++l) gram[k][l] = vec_dot(basis[k], basis[l]);
      rhs[k] = vec_dot(basis[k], v);
    }
    const auto alpha = mat_solve(std::move(gram), std::move(rhs));
    if (!alpha) throw std::logic_error("degenerate Gram matrix");
    QVec p(ambient, QQ(0));
    for (int k = 0; k < dim; ++k)
      for (int j = 0; j < ambient; ++j) p[j] += (*alpha)[k] * basis[k][j];
    return p;
  }
};

Chart make_chart(const std::vector<QVec>& pts) {
  Chart ch;
  ch.base = pts[0];
  ch.ambient = static_cast<int>(pts[0].size());
  QMat dirs;
  for (size_t i = 1; i < pts.size(); ++i) dirs.push_back(vec_sub(pts[i], pts[0]));
  ch.basis = rref(std::move(dirs), &ch.pivots);
  ch.dim = static_cast<int>(ch.basis.size());
  // Pivot-projection coordinates are exact only for points of the affine
  // hull; verify reconstruction once per input set.
  for (const auto& p : pts) {
    if (ch.from_coords(ch.coords(p)) != p)
      throw std::logic_error("point escapes its own affine hull");
  }
  return ch;
}

void validate_ambient(const std::vector<QVec>& pts, const Ambient& ambient) {
  for (const auto& p : pts) {
    if (static_cast<int>(p.size()) != ambient.dim)
      throw std::invalid_argument("point dimension does not match ambient");
    if (ambient.hyperplane_sum && vec_sum(p) != *ambient.hyperplane_sum)
      throw std::invalid_argument("point violates the ambient hyperplane sum");
  }
}

struct CondLess {
  bool operator()(const LinearCondition& a, const LinearCondition& b) const {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.rhs < b.rhs;
  }
};

// Canonical form: equalities in integer rref with positive leading entries;
// inequalities reduced modulo the equality rows, positively scaled to
// coprime integers, sorted, deduplicated (flags merged by OR).
void canonicalize_hrep(HPolytope& h) {
  const int n = h.ambient_dim;
  QMat eq_aug;
  for (const auto& e : h.equalities) {
    QVec row = e.normal;
    row.push_back(e.rhs);
    eq_aug.push_back(std::move(row));
  }
  std::vector<int> pivots;
  eq_aug = rref(std::move(eq_aug), &pivots);
  for (const auto& row : eq_aug) {
    if (std::all_of(row.begin(), row.end() - 1, [](const QQ& q) { return q == 0; }) &&
        row.back() != 0)
      throw std::invalid_argument("inconsistent equality system");
  }
  h.equalities.clear();
  for (auto& row : eq_aug) {
    row = scale_to_coprime_integers(row, /*fix_leading_sign=*/true);
    QQ rhs = row.back();
    row.pop_back();
    h.equalities.push_back({std::move(row), std::move(rhs)});
  }

  if (h.irredundant_flags.size() != h.inequalities.size())
    h.irredundant_flags.assign(h.inequalities.size(), false);
  std::map<LinearCondition, bool, CondLess> rows;
  for (size_t i = 0; i < h.inequalities.size(); ++i) {
    QVec a = h.inequalities[i].normal;
    QQ b = h.inequalities[i].rhs;
    for (size_t k = 0; k < h.equalities.size(); ++k) {
      const int p = pivots[k];
      if (a[p] == 0) continue;
      const QQ f = a[p] / h.equalities[k].normal[p];
      for (int j = 0; j < n; ++j) a[j] -= f * h.equalities[k].normal[j];
      b -= f * h.equalities[k].rhs;
    }
    if (vec_is_zero(a)) {
      if (b < 0) throw std::invalid_argument("infeasible constant inequality row");
      continue; // trivially true
    }
    QVec aug = a;
    aug.push_back(b);
    aug = scale_to_coprime_integers(aug, /*fix_leading_sign=*/false);
    QQ rhs = aug.back();
    aug.pop_back();
    auto [it, inserted] =
        rows.try_emplace(LinearCondition{std::move(aug), std::move(rhs)},
                         h.irredundant_flags[i]);
    if (!inserted) it->second = it->second || h.irredundant_flags[i];
  }
  h.inequalities.clear();
  h.irredundant_flags.clear();
  for (auto& [cond, flag] : rows) {
    h.inequalities.push_back(cond);
    h.irredundant_flags.push_back(flag);
  }
}

} // namespace

bool FaceLattice::contains_face(uint64_t mask) const {
  for (const auto& [d, m] : faces)
    if (m == mask) return true;
  return false;
}

Hull hull_of(std::vector<QVec> points, const Ambient& ambient) {
  validate_ambient(points, ambient);
  sort_points(points);
  if (points.empty()) throw std::invalid_argument("hull of empty point set");

  Hull hull;
  hull.vpoly.ambient = ambient;
  hull.hrep.ambient_dim = ambient.dim;

  const Chart chart = make_chart(points);
  const int d = chart.dim;
  if (d > kMaxHullDim)
    throw CapExceededError("hull dimension " + std::to_string(d) + " exceeds cap 8");

  // Affine hull equalities.
  const QMat orth = nullspace(chart.basis, chart.ambient);
  for (const auto& u : orth)
    hull.hrep.equalities.push_back({u, vec_dot(u, chart.base)});

  if (d == 0) {
    hull.vpoly.vertices = points;
    hull.vpoly.dim = 0;
    canonicalize_hrep(hull.hrep);
    return hull;
  }

  const int m = static_cast<int>(points.size());
  if (subset_count(m, d) > kMaxSubsets)
    throw CapExceededError("hull candidate count exceeds cap");

  QMat coords;
  coords.reserve(points.size());
  for (const auto& p : points) coords.push_back(chart.coords(p));

  // Every supporting hyperplane shows up as the span of some d affinely
  // independent points of its facet.
  std::set<QVec, LexLess> seen;
  std::vector<std::pair<QVec, QQ>> candidates; // (a, b) in chart coordinates
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  do {
    QMat rows;
    rows.reserve(d);
    for (int i : idx) {
      QVec row = coords[i];
      row.push_back(QQ(-1));
      rows.push_back(std::move(row));
    }
    const QMat ns = nullspace(rows, d + 1);
    if (ns.size() != 1) continue; // affinely dependent subset
    QVec key = scale_to_coprime_integers(ns[0], /*fix_leading_sign=*/true);
    if (seen.insert(key).second) {
      QQ b = key.back();
      key.pop_back();
      candidates.emplace_back(std::move(key), std::move(b));
    }
  } while (next_combination(idx, m));

  struct FacetData {
    QVec a; // chart coordinates
    QQ b;
    std::vector<int> incident;
  };
  std::vector<FacetData> facets;
  for (auto& [a, b] : candidates) {
    bool above = false, below = false;
    std::vector<int> incident;
    for (int i = 0; i < m; ++i) {
      const QQ v = vec_dot(a, coords[i]) - b;
      if (v > 0)
        above = true;
      else if (v < 0)
        below = true;
      else
        incident.push_back(i);
      if (above && below) break;
    }
    if (above && below) continue;
    if (above) { // flip to <=
      a = vec_neg(a);
      b = -b;
    }
    facets.push_back({std::move(a), std::move(b), std::move(incident)});
  }

  // A point is a vertex iff its incident facet normals span the chart.
  std::vector<std::vector<int>> facets_at_point(m);
  for (size_t f = 0; f < facets.size(); ++f)
    for (int i : facets[f].incident) facets_at_point[i].push_back(static_cast<int>(f));
  std::vector<int> vertex_index(m, -1);
  std::vector<QVec> verts;
  for (int i = 0; i < m; ++i) {
    QMat normals;
    for (int f : facets_at_point[i]) normals.push_back(facets[f].a);
    if (mat_rank(std::move(normals)) == d) {
      vertex_index[i] = static_cast<int>(verts.size());
      verts.push_back(points[i]); // points already sorted
    }
  }
  if (static_cast<int>(verts.size()) > kMaxMaskVertices)
    throw CapExceededError("vertex count exceeds the 64-bit incidence cap");

  hull.vpoly.vertices = std::move(verts);
  hull.vpoly.dim = d;

  // Ambient facet rows: the chart functional acts through pivot columns.
  struct OutRow {
    LinearCondition cond;
    uint64_t mask;
  };
  std::vector<OutRow> out;
  for (const auto& f : facets) {
    QVec normal(chart.ambient, QQ(0));
    for (int k = 0; k < d; ++k) normal[chart.pivots[k]] = f.a[k];
    QQ rhs = f.b + vec_dot(normal, chart.base);
    uint64_t mask = 0;
    for (int i : f.incident)
      if (vertex_index[i] >= 0) mask |= uint64_t{1} << vertex_index[i];
    out.push_back({{std::move(normal), std::move(rhs)}, mask});
  }

  // Canonicalize rows and keep the masks aligned with the sorted order.
  HPolytope pre;
  pre.ambient_dim = ambient.dim;
  pre.equalities = hull.hrep.equalities;
  std::map<std::pair<QVec, QQ>, uint64_t> mask_of;
  for (auto& row : out) {
    HPolytope one;
    one.ambient_dim = ambient.dim;
    one.equalities = hull.hrep.equalities;
    one.inequalities = {row.cond};
    one.irredundant_flags = {true};
    canonicalize_hrep(one);
    if (one.inequalities.size() != 1)
      throw std::logic_error("facet row vanished during canonicalization");
    mask_of[{one.inequalities[0].normal, one.inequalities[0].rhs}] = row.mask;
    pre.inequalities.push_back(one.inequalities[0]);
    pre.irredundant_flags.push_back(true);
  }
  canonicalize_hrep(pre);
  hull.hrep = pre;
  hull.facet_masks.clear();
  for (const auto& ineq : hull.hrep.inequalities)
    hull.facet_masks.push_back(mask_of.at({ineq.normal, ineq.rhs}));
  return hull;
}

VPolytope make_vpolytope(std::vector<QVec> points, const Ambient& ambient) {
  return hull_of(std::move(points), ambient).vpoly;
}

HPolytope facet_enumeration(const VPolytope& p) {
  return hull_of(p.vertices, p.ambient).hrep;
}

VPolytope vertex_enumeration(const HPolytope& h) {
  HPolytope hc = h;
  canonicalize_hrep(hc);
  const int n = hc.ambient_dim;
  const int re = static_cast<int>(hc.equalities.size());
  const int d = n - re;
  const int m = static_cast<int>(hc.inequalities.size());
  if (d < 0) throw std::invalid_argument("overdetermined equality system");
  if (d > kMaxHullDim + 1)
    throw CapExceededError("vertex enumeration dimension exceeds cap");

  // Bounded iff the recession cone {Ex = 0, Ax <= 0} is trivial.
  for (int j = 0; j < n; ++j) {
    for (int sign : {+1, -1}) {
      GeneralLp probe;
      probe.num_vars = n;
      for (const auto& e : hc.equalities) {
        probe.eq_lhs.push_back(e.normal);
        probe.eq_rhs.push_back(QQ(0));
      }
      QVec pin(n, QQ(0));
      pin[j] = sign;
      probe.eq_lhs.push_back(std::move(pin));
      probe.eq_rhs.push_back(QQ(1));
      for (const auto& a : hc.inequalities) {
        probe.le_lhs.push_back(a.normal);
        probe.le_rhs.push_back(QQ(0));
      }
      if (lp_feasible(probe))
        throw UnboundedError("H-polytope is unbounded (recession direction found)");
    }
  }

  if (subset_count(m, d) > kMaxSubsets)
    throw CapExceededError("vertex enumeration candidate count exceeds cap");

  std::vector<QVec> verts;
  if (d == 0) {
    QMat a;
    QVec b;
    for (const auto& e : hc.equalities) {
      a.push_back(e.normal);
      b.push_back(e.rhs);
    }
    const auto x = mat_solve(std::move(a), std::move(b));
    if (x) verts.push_back(*x);
  } else {
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    if (m >= d) do {
        QMat a;
        QVec b;
        for (const auto& e : hc.equalities) {
          a.push_back(e.normal);
          b.push_back(e.rhs);
        }
        for (int i : idx) {
          a.push_back(hc.inequalities[i].normal);
          b.push_back(hc.inequalities[i].rhs);
        }
        const auto x = mat_solve(std::move(a), std::move(b));
        if (!x) continue;
        bool ok = true;
        for (const auto& ineq : hc.inequalities) {
          if (vec_dot(ineq.normal, *x) > ineq.rhs) {
            ok = false;
            break;
          }
        }
        if (ok) verts.push_back(*x);
      } while (next_combination(idx, m));
  }
  sort_points(verts);
  if (verts.empty()) throw std::invalid_argument("H-polytope is empty");

  VPolytope p;
  p.ambient.dim = n;
  // Tag the coordinate-sum hyperplane when the equalities pin it.
  const QQ s0 = vec_sum(verts[0]);
  bool same_sum = true;
  for (const auto& v : verts) same_sum = same_sum && vec_sum(v) == s0;
  QMat eqmat;
  for (const auto& e : hc.equalities) eqmat.push_back(e.normal);
  QMat with_ones = eqmat;
  with_ones.push_back(QVec(n, QQ(1)));
  if (same_sum && !eqmat.empty() && mat_rank(eqmat) == mat_rank(with_ones))
    p.ambient.hyperplane_sum = s0;
  p.vertices = std::move(verts);
  p.dim = affine_dim(p.vertices);
  return p;
}

FaceLattice face_lattice(const Hull& hull) {
  const int nv = static_cast<int>(hull.vpoly.vertices.size());
  const uint64_t full =
      nv == 64 ? ~uint64_t{0} : ((uint64_t{1} << nv) - 1);

  std::set<uint64_t> seen{full, 0};
  std::vector<uint64_t> queue{full};
  while (!queue.empty()) {
    const uint64_t g = queue.back();
    queue.pop_back();
    for (const uint64_t f : hull.facet_masks) {
      const uint64_t h = g & f;
      if (seen.insert(h).second) queue.push_back(h);
    }
  }

  FaceLattice lat;
  lat.dim = hull.vpoly.dim;
  lat.num_vertices = nv;
  lat.has_top = true;
  lat.f_vector.assign(lat.dim + 1, 0);
  for (const uint64_t mask : seen) {
    std::vector<QVec> pts;
    for (int i = 0; i < nv; ++i)
      if (mask & (uint64_t{1} << i)) pts.push_back(hull.vpoly.vertices[i]);
    const int fd = affine_dim(pts);
    lat.faces.emplace_back(fd, mask);
    if (fd >= 0) ++lat.f_vector[fd];
  }
  std::sort(lat.faces.begin(), lat.faces.end());
  return lat;
}

FaceLattice face_lattice(const VPolytope& p) {
  return face_lattice(hull_of(p.vertices, p.ambient));
}

FaceLattice strip_top(const FaceLattice& lattice) {
  FaceLattice out = lattice;
  if (!lattice.has_top) return out;
  out.faces.clear();
  for (const auto& f : lattice.faces)
    if (f.first < lattice.dim) out.faces.push_back(f);
  out.dim = lattice.dim - 1;
  out.has_top = false;
  out.f_vector.assign(lattice.f_vector.begin(), lattice.f_vector.end() - 1);
  return out;
}

bool lattice_iso_via_bijection(const FaceLattice& l1, const FaceLattice& l2,
                               const std::vector<int>& vertex_map) {
  if (l1.num_vertices != l2.num_vertices) return false;
  if (static_cast<int>(vertex_map.size()) != l1.num_vertices) return false;
  std::vector<bool> hit(l2.num_vertices, false);
  for (const int v : vertex_map) {
    if (v < 0 || v >= l2.num_vertices || hit[v]) return false;
    hit[v] = true;
  }
  if (l1.faces.size() != l2.faces.size()) return false;
  std::set<uint64_t> faces2;
  for (const auto& [d, m] : l2.faces) faces2.insert(m);
  for (const auto& [d, m] : l1.faces) {
    uint64_t image = 0;
    for (int i = 0; i < l1.num_vertices; ++i)
      if (m & (uint64_t{1} << i)) image |= uint64_t{1} << vertex_map[i];
    if (!faces2.count(image)) return false;
  }
  return true; // cardinalities match, so the image map is onto as well
}

bool euler_relation_holds(const FaceLattice& lattice) {
  const int top = lattice.has_top ? lattice.dim - 1 : lattice.dim;
  long long sum = 0;
  for (int k = 0; k <= top; ++k)
    sum += (k % 2 == 0 ? 1 : -1) * lattice.f_vector[k];
  return sum == 1 + (top % 2 == 0 ? 1 : -1);
}

QVec lattice_coords(const QVec& v) {
  if (vec_sum(v) != 0)
    throw std::invalid_argument("lattice coordinates need a zero-sum vector");
  QVec c(v.size() - 1);
  QQ acc = 0;
  for (size_t j = 0; j + 1 < v.size(); ++j) {
    acc += v[j];
    c[j] = acc;
  }
  return c;
}

QQ lattice_determinant(const std::vector<QVec>& vectors) {
  QMat m;
  for (const auto& v : vectors) m.push_back(lattice_coords(v));
  if (m.size() + 1 != (m.empty() ? 1 : vectors[0].size()))
    throw std::invalid_argument("need n-1 vectors in the zero-sum hyperplane");
  return mat_det(std::move(m));
}

QQ simplex_volume(const std::vector<QVec>& points) {
  if (points.empty()) throw std::invalid_argument("empty simplex");
  const int d = static_cast<int>(points.size()) - 1;
  if (d == 0) return QQ(0);
  const int n = static_cast<int>(points[0].size());
  QMat edges;
  for (int i = 1; i <= d; ++i) edges.push_back(vec_sub(points[i], points[0]));
  {
    QMat copy = edges;
    if (mat_rank(std::move(copy)) < d) return QQ(0); // degenerate
  }
  QQ det;
  if (d == n) {
    det = mat_det(std::move(edges));
  } else if (d == n - 1) {
    QMat m;
    for (const auto& e : edges) {
      if (vec_sum(e) != 0)
        throw std::invalid_argument("codimension-1 simplex outside a sum hyperplane");
      m.push_back(lattice_coords(e));
    }
    det = mat_det(std::move(m));
  } else {
    throw std::invalid_argument("simplex_volume: unsupported codimension");
  }
  if (det < 0) det = -det;
  QQ fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  return det / fact;
}

VPolytope zono_delta(const std::vector<QVec>& simplex_vertices) {
  const int m = static_cast<int>(simplex_vertices.size());
  if (m < 2) throw DegenerateInputError("zonotope needs at least a segment");
  if (affine_dim(simplex_vertices) != m - 1)
    throw DegenerateInputError("zono_delta rejects degenerate simplices");
  if (m > 20) throw CapExceededError("zonotope generator cap exceeded");

  const int n = static_cast<int>(simplex_vertices[0].size());
  QVec centroid(n, QQ(0));
  for (const auto& v : simplex_vertices) centroid = vec_add(centroid, v);
  centroid = vec_scaled(centroid, QQ(1, m));

  QMat gens;
  for (const auto& v : simplex_vertices) gens.push_back(vec_sub(v, centroid));
  QVec offset = vec_scaled(centroid, QQ(m));

  std::vector<QVec> pts;
  for (uint32_t s = 0; s < (uint32_t{1} << m); ++s) {
    QVec p = offset;
    for (int i = 0; i < m; ++i)
      if (s & (uint32_t{1} << i)) p = vec_add(p, gens[i]);
    pts.push_back(std::move(p));
  }
  const QQ sum = vec_sum(pts[0]);
  bool same_sum = true;
  for (const auto& p : pts) same_sum = same_sum && vec_sum(p) == sum;
  const Ambient amb = same_sum ? ambient_sum(n, sum) : ambient_full(n);
  return make_vpolytope(std::move(pts), amb);
}

VPolytope polar_dual(const VPolytope& p) {
  const Hull hull = hull_of(p.vertices, p.ambient);
  for (const auto& e : hull.hrep.equalities)
    if (e.rhs != 0)
      throw DegenerateInputError("polar needs a linear-subspace affine hull");
  const Chart chart = make_chart(hull.vpoly.vertices);
  std::vector<QVec> polar_verts;
  for (const auto& f : hull.hrep.inequalities) {
    if (f.rhs <= 0)
      throw DegenerateInputError("origin is not interior; polar is unbounded");
    const QVec u = chart.project_to_span(f.normal);
    polar_verts.push_back(vec_scaled(u, QQ(1) / f.rhs));
  }
  sort_points(polar_verts);
  VPolytope out;
  out.ambient.dim = p.ambient.dim;
  const QQ s0 = vec_sum(polar_verts[0]);
  bool same = true;
  for (const auto& v : polar_verts) same = same && vec_sum(v) == s0;
  if (same) out.ambient.hyperplane_sum = s0;
  out.vertices = std::move(polar_verts);
  out.dim = affine_dim(out.vertices);
  return out;
}

bool polar_of_linear_image_check(const VPolytope& k, const QMat& a) {
  const Chart chart = make_chart(k.vertices);
  const int d = chart.dim;
  // The map must preserve the direction space.
  QMat m_cols(d, QVec(d));
  for (int col = 0; col < d; ++col) {
    const QVec image = mat_apply(a, chart.basis[col]);
    if (chart.from_lin_coords(chart.lin_coords(image)) != image)
      throw std::invalid_argument("map does not preserve the affine hull");
    const QVec c = chart.lin_coords(image);
    for (int row = 0; row < d; ++row) m_cols[row][col] = c[row];
  }
  if (mat_det(m_cols) == 0)
    throw std::invalid_argument("singular map rejected");

  QMat gram(d, QVec(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gram[i][j] = vec_dot(chart.basis[i], chart.basis[j]);
  const auto gram_inv = mat_inverse(gram);
  const auto mt_inv = mat_inverse(mat_transpose(m_cols));
  if (!gram_inv || !mt_inv) throw std::invalid_argument("singular map rejected");
  // Adjoint w.r.t. the ambient inner product: M* = G^-1 M^T G, so
  // B = (M*)^-1 = G^-1 (M^T)^-1 G.
  const QMat b = mat_mul(*gram_inv, mat_mul(*mt_inv, gram));

  std::vector<QVec> image_pts;
  for (const auto& v : k.vertices) image_pts.push_back(mat_apply(a, v));
  const VPolytope lhs = polar_dual(make_vpolytope(std::move(image_pts), ambient_full(k.ambient.dim)));

  const VPolytope kp = polar_dual(k);
  std::vector<QVec> rhs_pts;
  for (const auto& v : kp.vertices)
    rhs_pts.push_back(chart.from_lin_coords(mat_apply(b, chart.lin_coords(v))));
  sort_points(rhs_pts);
  return lhs.vertices == rhs_pts;
}

QQ support_value(const VPolytope& p, const QVec& direction) {
  QQ best = vec_dot(p.vertices.at(0), direction);
  for (const auto& v : p.vertices) {
    const QQ s = vec_dot(v, direction);
    if (s > best) best = s;
  }
  return best;
}

std::vector<long long> f_vector_via_polar(const VPolytope& p, const HPolytope& h) {
  const int n = p.ambient.dim;
  QVec centroid(n, QQ(0));
  for (const auto& v : p.vertices) centroid = vec_add(centroid, v);
  centroid = vec_scaled(centroid, QQ(1, static_cast<int>(p.vertices.size())));

  const Chart chart = make_chart(p.vertices);
  std::vector<QVec> dual_pts;
  for (const auto& row : h.inequalities) {
    const QQ slack = row.rhs - vec_dot(row.normal, centroid);
    if (slack <= 0)
      throw DegenerateInputError("centroid is not interior to the H-polytope");
    dual_pts.push_back(vec_scaled(chart.project_to_span(row.normal), QQ(1) / slack));
  }
  const Hull dual = hull_of(std::move(dual_pts), ambient_full(n));
  const FaceLattice dlat = face_lattice(dual);
  std::vector<long long> f(p.dim + 1, 0);
  f[p.dim] = 1;
  for (int k = 0; k < p.dim; ++k) f[k] = dlat.f_vector[p.dim - 1 - k];
  return f;
}

PointPosition classify_point(const HPolytope& h, const QVec& x) {
  for (const auto& e : h.equalities)
    if (vec_dot(e.normal, x) != e.rhs) return PointPosition::Outside;
  bool boundary = false;
  for (const auto& a : h.inequalities) {
    const QQ v = vec_dot(a.normal, x);
    if (v > a.rhs) return PointPosition::Outside;
    if (v == a.rhs) boundary = true;
  }
  return boundary ? PointPosition::Boundary : PointPosition::Interior;
}

bool point_in_hull(const QVec& p, const std::vector<QVec>& generators) {
  if (generators.empty()) return false;
  const int n = static_cast<int>(p.size());
  GeneralLp lp;
  lp.num_vars = static_cast<int>(generators.size());
  lp.nonneg.assign(generators.size(), true);
  for (int c = 0; c < n; ++c) {
    QVec row(generators.size());
    for (size_t j = 0; j < generators.size(); ++j) row[j] = generators[j][c];
    lp.eq_lhs.push_back(std::move(row));
    lp.eq_rhs.push_back(p[c]);
  }
  lp.eq_lhs.push_back(QVec(generators.size(), QQ(1)));
  lp.eq_rhs.push_back(QQ(1));
  return lp_feasible(lp);
}

bool simplices_interiors_intersect(const std::vector<QVec>& s,
                                   const std::vector<QVec>& t) {
  const int n = static_cast<int>(s.at(0).size());
  const int ks = static_cast<int>(s.size());
  const int kt = static_cast<int>(t.size());
  const int nv = ks + kt + 1; // lambdas, mus, delta
  GeneralLp lp;
  lp.num_vars = nv;
  lp.maximize = true;
  lp.objective.assign(nv, QQ(0));
  lp.objective[nv - 1] = 1;
  for (int c = 0; c < n; ++c) {
    QVec row(nv, QQ(0));
    for (int j = 0; j < ks; ++j) row[j] = s[j][c];
    for (int j = 0; j < kt; ++j) row[ks + j] = -t[j][c];
    lp.eq_lhs.push_back(std::move(row));
    lp.eq_rhs.push_back(QQ(0));
  }
  QVec sum_l(nv, QQ(0)), sum_m(nv, QQ(0));
  for (int j = 0; j < ks; ++j) sum_l[j] = 1;
  for (int j = 0; j < kt; ++j) sum_m[ks + j] = 1;
  lp.eq_lhs.push_back(std::move(sum_l));
  lp.eq_rhs.push_back(QQ(1));
  lp.eq_lhs.push_back(std::move(sum_m));
  lp.eq_rhs.push_back(QQ(1));
  for (int j = 0; j < ks + kt; ++j) {
    QVec row(nv, QQ(0));
    row[nv - 1] = 1;
    row[j] = -1;
    lp.le_lhs.push_back(std::move(row)); // delta <= lambda_j / mu_j
    lp.le_rhs.push_back(QQ(0));
  }
  const auto r = lp_solve(lp);
  return r.status == LpStatus::Optimal && r.objective > 0;
}

std::vector<int> extreme_point_indices(const std::vector<QVec>& points) {
  std::vector<int> out;
  for (size_t i = 0; i < points.size(); ++i) {
    std::vector<QVec> others;
    for (size_t j = 0; j < points.size(); ++j)
      if (j != i && points[j] != points[i]) others.push_back(points[j]);
    if (!point_in_hull(points[i], others)) out.push_back(static_cast<int>(i));
  }
  return out;
}

} // namespace krcyclo
