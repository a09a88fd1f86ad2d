#include "krcyclo/cyclo.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace krcyclo {

namespace {

// Pivot-projection chart of a facet: fixes one consistent basis so that
// volumes of all cells inside the facet are comparable.
struct FacetChart {
  QVec base;
  std::vector<int> pivots;
  int dim = 0;

  static FacetChart of(const std::vector<QVec>& pts) {
    FacetChart ch;
    ch.base = pts.at(0);
    QMat dirs;
    for (size_t i = 1; i < pts.size(); ++i) dirs.push_back(vec_sub(pts[i], pts[0]));
    dirs = rref(std::move(dirs), &ch.pivots);
    ch.dim = static_cast<int>(dirs.size());
    return ch;
  }
  QVec coords(const QVec& p) const {
    QVec c(dim);
    for (int k = 0; k < dim; ++k) c[k] = p[pivots[k]] - base[pivots[k]];
    return c;
  }
  // |det|/dim! of a simplex given by dim+1 points inside the facet.
  QQ simplex_volume(const std::vector<QVec>& pts) const {
    QMat m;
    for (size_t i = 1; i < pts.size(); ++i)
      m.push_back(vec_sub(coords(pts[i]), coords(pts[0])));
    QQ det = mat_det(std::move(m));
    if (det < 0) det = -det;
    QQ fact = 1;
    for (int i = 2; i <= dim; ++i) fact *= i;
    return det / fact;
  }
};

std::vector<QVec> mask_points(const RootPolytope& root, uint64_t mask) {
  std::vector<QVec> pts;
  for (size_t i = 0; i < root.hull.vpoly.vertices.size(); ++i)
    if (mask & (uint64_t{1} << i)) pts.push_back(root.hull.vpoly.vertices[i]);
  return pts;
}

// Pulling triangulation of a single face, recursing through the face
// lattice; `rank` orders the vertices, lowest rank is pulled first.
class FacePuller {
public:
  FacePuller(const FaceLattice& lattice, std::vector<int> rank)
      : rank_(std::move(rank)) {
    for (const auto& [d, m] : lattice.faces) dim_of_[m] = d;
  }

  const std::vector<uint64_t>& pull(uint64_t face) {
    auto it = memo_.find(face);
    if (it != memo_.end()) return it->second;
    const int d = dim_of_.at(face);
    std::vector<uint64_t> cells;
    if (__builtin_popcountll(face) == d + 1) {
      cells.push_back(face);
    } else {
      const int v = lowest_vertex(face);
      for (const auto& [mask, fd] : dim_of_) {
        if (fd != d - 1) continue;
        if ((mask & face) != mask) continue;      // not a face of `face`
        if (mask & (uint64_t{1} << v)) continue;  // pulled vertex must be outside
        for (const uint64_t c : pull(mask)) cells.push_back(c | (uint64_t{1} << v));
      }
      std::sort(cells.begin(), cells.end());
    }
    return memo_[face] = std::move(cells);
  }

private:
  int lowest_vertex(uint64_t face) const {
    int best = -1;
    for (int i = 0; i < 64; ++i) {
      if (!(face & (uint64_t{1} << i))) continue;
      if (best == -1 || rank_[i] < rank_[best]) best = i;
    }
    return best;
  }

  std::vector<int> rank_;
  std::map<uint64_t, int> dim_of_;
  std::map<uint64_t, std::vector<uint64_t>> memo_;
};

std::vector<int> label_rank(const RootPolytope& root) {
  const int nv = static_cast<int>(root.vertex_labels.size());
  std::vector<int> order(nv);
  for (int i = 0; i < nv; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return root.vertex_labels[a] < root.vertex_labels[b];
  });
  std::vector<int> rank(nv);
  for (int i = 0; i < nv; ++i) rank[order[i]] = i;
  return rank;
}

} // namespace

QVec phi_image(const Arc& a) {
  QVec v(a.n, QQ(0));
  v[a.source - 1] = 1;
  v[a.sink - 1] = -1;
  return v;
}

int RootPolytope::vertex_of_pair(int i, int j) const {
  for (size_t k = 0; k < vertex_labels.size(); ++k)
    if (vertex_labels[k] == std::make_pair(i, j)) return static_cast<int>(k);
  throw std::invalid_argument("no vertex labelled by this pair");
}

RootPolytope build_root_polytope(int n) {
  if (n < 3 || n > 6) throw CapExceededError("root polytope cap: 3 <= n <= 6");
  RootPolytope root;
  root.n = n;
  std::vector<QVec> pts;
  for (const auto& a : all_arcs(n)) pts.push_back(phi_image(a));
  root.hull = hull_of(pts, ambient_zero_sum(n));
  if (root.hull.vpoly.vertices.size() != static_cast<size_t>(n * (n - 1)))
    throw std::runtime_error("root polytope lost generators to the hull");

  root.vertex_labels.resize(root.hull.vpoly.vertices.size());
  for (size_t k = 0; k < root.hull.vpoly.vertices.size(); ++k) {
    const QVec& v = root.hull.vpoly.vertices[k];
    int pos = -1, neg = -1;
    for (int c = 0; c < n; ++c) {
      if (v[c] == 1) pos = c + 1;
      if (v[c] == -1) neg = c + 1;
    }
    root.vertex_labels[k] = {pos, neg};
  }

  // Central symmetry.
  std::set<QVec> vset(root.hull.vpoly.vertices.begin(), root.hull.vpoly.vertices.end());
  for (const auto& v : root.hull.vpoly.vertices)
    if (!vset.count(vec_neg(v)))
      throw std::runtime_error("root polytope is not centrally symmetric");

  // Minkowski split: support of simplex minus simplex is max - min, checked
  // on every facet normal.
  for (const auto& f : root.hull.hrep.inequalities) {
    QQ mx = f.normal[0], mn = f.normal[0];
    for (const QQ& c : f.normal) {
      if (c > mx) mx = c;
      if (c < mn) mn = c;
    }
    if (support_value(root.hull.vpoly, f.normal) != mx - mn)
      throw std::runtime_error("Minkowski split fails on a facet normal");
  }

  root.lattice = face_lattice(root.hull);
  return root;
}

bool facets_are_simplex_products(const RootPolytope& root, std::string* witness) {
  for (size_t f = 0; f < root.hull.facet_masks.size(); ++f) {
    std::set<int> p, q;
    std::set<std::pair<int, int>> labels;
    for (size_t k = 0; k < root.vertex_labels.size(); ++k) {
      if (!(root.hull.facet_masks[f] & (uint64_t{1} << k))) continue;
      p.insert(root.vertex_labels[k].first);
      q.insert(root.vertex_labels[k].second);
      labels.insert(root.vertex_labels[k]);
    }
    bool ok = labels.size() == p.size() * q.size();
    for (int x : p) ok = ok && !q.count(x);
    if (ok)
      for (int i : p)
        for (int j : q) ok = ok && labels.count({i, j});
    if (!ok) {
      if (witness) {
        std::ostringstream os;
        os << "facet " << f << " is not a full product of source and sink sets";
        *witness = os.str();
      }
      return false;
    }
  }
  return true;
}

BoundaryTriangulation boundary_triangulation_via_phi(int n) {
  if (n < 3 || n > 6) throw CapExceededError("triangulation cap: 3 <= n <= 6");
  BoundaryTriangulation t;
  t.n = n;
  t.root = build_root_polytope(n);
  t.facet_cells.resize(t.root.hull.facet_masks.size());

  for (const auto& fam : enumerate_admissible(n, n - 1)) {
    TriCell cell;
    cell.family = fam;
    std::vector<QVec> pts;
    for (const auto& a : fam.arcs) {
      const int id = t.root.vertex_of_pair(a.source, a.sink);
      cell.vertex_ids.push_back(id);
      cell.mask |= uint64_t{1} << id;
      pts.push_back(phi_image(a));
    }
    if (affine_dim(pts) != n - 2)
      throw std::runtime_error("degenerate phi-image of a maximal family: " +
                               arc_to_string(fam.arcs.at(0)));
    int facet = -1;
    for (size_t f = 0; f < t.root.hull.facet_masks.size(); ++f) {
      if ((cell.mask & t.root.hull.facet_masks[f]) == cell.mask) {
        if (facet != -1)
          throw std::runtime_error("cell lies in two facets, so it is degenerate");
        facet = static_cast<int>(f);
      }
    }
    if (facet == -1)
      throw std::runtime_error("phi-image of a maximal family misses the boundary");
    cell.facet = facet;
    t.facet_cells[facet].push_back(static_cast<int>(t.cells.size()));
    t.cells.push_back(std::move(cell));
  }
  return t;
}

std::vector<long long> complex_f_vector(const std::vector<uint64_t>& cells) {
  std::set<uint64_t> faces;
  for (const uint64_t cell : cells) {
    // All nonempty subsets of the cell's vertex set.
    std::vector<int> bits;
    for (int i = 0; i < 64; ++i)
      if (cell & (uint64_t{1} << i)) bits.push_back(i);
    const size_t k = bits.size();
    for (uint64_t s = 1; s < (uint64_t{1} << k); ++s) {
      uint64_t m = 0;
      for (size_t b = 0; b < k; ++b)
        if (s & (uint64_t{1} << b)) m |= uint64_t{1} << bits[b];
      faces.insert(m);
    }
  }
  std::vector<long long> f;
  for (const uint64_t m : faces) {
    const int d = __builtin_popcountll(m) - 1;
    if (d >= static_cast<int>(f.size())) f.resize(d + 1, 0);
    ++f[d];
  }
  return f;
}

TriangulationReport verify_triangulation(const BoundaryTriangulation& t) {
  TriangulationReport rep;
  rep.n = t.n;
  const int n = t.n;
  const auto& root = t.root;

  // Vertex bijection: phi is injective on arcs and covers the vertex set.
  std::set<int> seen_ids;
  for (const auto& a : all_arcs(n)) seen_ids.insert(root.vertex_of_pair(a.source, a.sink));
  rep.vertices_bijective = seen_ids.size() == root.hull.vpoly.vertices.size();
  if (!rep.vertices_bijective) rep.witnesses.push_back("phi is not a vertex bijection");

  // Cell non-degeneracy.
  rep.cells_nondegenerate = true;
  for (const auto& cell : t.cells) {
    if (affine_dim(mask_points(root, cell.mask)) != n - 2) {
      rep.cells_nondegenerate = false;
      rep.witnesses.push_back("degenerate cell");
    }
  }

  // Covering: per facet, cell volumes sum to the facet volume computed from
  // an independent pulling triangulation, in one shared chart per facet.
  FacePuller puller(root.lattice, label_rank(root));
  rep.facet_volumes_covered = true;
  for (size_t f = 0; f < root.hull.facet_masks.size(); ++f) {
    const uint64_t fmask = root.hull.facet_masks[f];
    const auto facet_pts = mask_points(root, fmask);
    const FacetChart chart = FacetChart::of(facet_pts);
    QQ facet_volume = 0;
    for (const uint64_t c : puller.pull(fmask))
      facet_volume += chart.simplex_volume(mask_points(root, c));
    QQ cells_volume = 0;
    for (const int ci : t.facet_cells[f])
      cells_volume += chart.simplex_volume(mask_points(root, t.cells[ci].mask));
    if (facet_volume != cells_volume || facet_volume == 0) {
      rep.facet_volumes_covered = false;
      std::ostringstream os;
      os << "facet " << f << ": cells cover " << to_string(cells_volume) << " of "
         << to_string(facet_volume);
      rep.witnesses.push_back(os.str());
    }
  }

  // Interior disjointness inside each facet (cells in different facets have
  // different supporting hyperplanes, so they cannot overlap).
  rep.interiors_disjoint = true;
  for (const auto& group : t.facet_cells) {
    for (size_t a = 0; a < group.size(); ++a)
      for (size_t b = a + 1; b < group.size(); ++b) {
        ++rep.disjointness_pairs_checked;
        if (simplices_interiors_intersect(mask_points(root, t.cells[group[a]].mask),
                                          mask_points(root, t.cells[group[b]].mask))) {
          rep.interiors_disjoint = false;
          std::ostringstream os;
          os << "cells " << group[a] << " and " << group[b] << " overlap";
          rep.witnesses.push_back(os.str());
        }
      }
  }

  // Pseudomanifold: every ridge of the cell complex lies in exactly two
  // cells; ridges shared across facets must sit inside an (n-3)-face.
  rep.pseudomanifold = true;
  std::map<uint64_t, std::vector<int>> ridge_cells;
  for (size_t ci = 0; ci < t.cells.size(); ++ci) {
    const auto& ids = t.cells[ci].vertex_ids;
    for (size_t drop = 0; drop < ids.size(); ++drop) {
      uint64_t m = 0;
      for (size_t k = 0; k < ids.size(); ++k)
        if (k != drop) m |= uint64_t{1} << ids[k];
      ridge_cells[m].push_back(static_cast<int>(ci));
    }
  }
  std::set<uint64_t> root_ridges;
  for (const auto& [d, m] : root.lattice.faces)
    if (d == n - 3) root_ridges.insert(m);
  for (const auto& [ridge, cells] : ridge_cells) {
    if (cells.size() != 2) {
      rep.pseudomanifold = false;
      rep.witnesses.push_back("ridge not shared by exactly two cells");
      continue;
    }
    if (t.cells[cells[0]].facet != t.cells[cells[1]].facet) {
      bool inside = false;
      for (const uint64_t rm : root_ridges)
        if ((ridge & rm) == ridge) inside = true;
      if (!inside) {
        rep.pseudomanifold = false;
        rep.witnesses.push_back("cross-facet ridge misses the facet boundary");
      }
    }
  }

  // Euler characteristic of the boundary complex equals chi(S^(n-2)).
  std::vector<uint64_t> masks;
  for (const auto& c : t.cells) masks.push_back(c.mask);
  rep.f_vector = complex_f_vector(masks);
  rep.euler_characteristic = 0;
  for (size_t k = 0; k < rep.f_vector.size(); ++k)
    rep.euler_characteristic += (k % 2 == 0 ? 1 : -1) * rep.f_vector[k];
  rep.euler_ok = rep.euler_characteristic == (n % 2 == 0 ? 2 : 0);
  if (!rep.euler_ok) rep.witnesses.push_back("Euler characteristic mismatch");

  rep.pass = rep.vertices_bijective && rep.cells_nondegenerate &&
             rep.facet_volumes_covered && rep.interiors_disjoint &&
             rep.pseudomanifold && rep.euler_ok;
  return rep;
}

std::vector<std::vector<int>> pulling_triangulation(const RootPolytope& root) {
  if (root.n > 5) throw CapExceededError("pulling triangulation cap: n <= 5");
  FacePuller puller(root.lattice, label_rank(root));
  std::set<uint64_t> cells;
  for (const uint64_t fmask : root.hull.facet_masks)
    for (const uint64_t c : puller.pull(fmask)) cells.insert(c);
  std::vector<std::vector<int>> out;
  for (const uint64_t c : cells) {
    std::vector<int> ids;
    for (int i = 0; i < 64; ++i)
      if (c & (uint64_t{1} << i)) ids.push_back(i);
    out.push_back(std::move(ids));
  }
  return out;
}

long long cyclohedron_f_formula(int n, int k) {
  auto binom = [](int a, int b) {
    long long c = 1;
    for (int i = 1; i <= b; ++i) c = c * (a - b + i) / i;
    return c;
  };
  // (2n-2-k)! / ((n-1-k)!^2 k!) = C(2n-2-k, n-1) * C(n-1, k)
  return binom(2 * n - 2 - k, n - 1) * binom(n - 1, k);
}

std::vector<long long> cyclohedron_f_vector(int n) {
  std::vector<long long> count(n, 0); // by family size 0..n-1
  for (const auto& fam : enumerate_admissible(n, std::nullopt)) {
    if (fam.arcs.size() < static_cast<size_t>(n)) ++count[fam.arcs.size()];
  }
  std::vector<long long> f(n);
  for (int k = 0; k < n; ++k) {
    f[k] = count[n - 1 - k]; // face of dim k <-> family of size n-1-k
    if (f[k] != cyclohedron_f_formula(n, k))
      throw std::logic_error("cyclohedron count disagrees with the closed form");
  }
  return f;
}

namespace {

bool next_subset(std::vector<int>& idx, int m) {
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

} // namespace

std::vector<QQ> spanning_simplex_volumes(const RootPolytope& root) {
  const auto& vs = root.hull.vpoly.vertices;
  const int m = static_cast<int>(vs.size());
  const int k = root.n; // n points span an (n-1)-simplex in the hyperplane
  std::set<QQ> volumes;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  do {
    std::vector<QVec> pts;
    for (int i : idx) pts.push_back(vs[i]);
    const QQ vol = simplex_volume(pts);
    if (vol != 0) volumes.insert(vol);
  } while (next_subset(idx, m));
  return {volumes.begin(), volumes.end()};
}

bool facetwise_unimodular(const RootPolytope& root, std::string* witness) {
  for (size_t f = 0; f < root.hull.facet_masks.size(); ++f) {
    const auto pts = mask_points(root, root.hull.facet_masks[f]);
    const FacetChart chart = FacetChart::of(pts);
    const int k = chart.dim + 1;
    const int m = static_cast<int>(pts.size());
    QQ common = 0;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    do {
      std::vector<QVec> sub;
      for (int i : idx) sub.push_back(pts[i]);
      QMat edges;
      for (int i = 1; i < k; ++i)
        edges.push_back(vec_sub(chart.coords(sub[i]), chart.coords(sub[0])));
      if (mat_rank(edges) < chart.dim) continue;
      const QQ vol = chart.simplex_volume(sub);
      if (common == 0) {
        common = vol;
      } else if (vol != common) {
        if (witness) {
          std::ostringstream os;
          os << "facet " << f << " spans simplices of volumes "
             << to_string(common) << " and " << to_string(vol);
          *witness = os.str();
        }
        return false;
      }
    } while (next_subset(idx, m));
  }
  return true;
}

bool lattice_basis_check(int n, std::vector<std::string>* witnesses) {
  if (n > 7) throw CapExceededError("lattice basis check cap: n <= 7");
  bool ok = true;
  for (const auto& fam : enumerate_admissible(n, n - 1)) {
    std::vector<QVec> images;
    for (const auto& a : fam.arcs) images.push_back(phi_image(a));
    const QQ det = lattice_determinant(images);
    if (det != 1 && det != -1) {
      ok = false;
      if (witnesses) {
        std::ostringstream os;
        os << "family";
        for (const auto& a : fam.arcs) os << " " << arc_to_string(a);
        os << " has determinant " << to_string(det);
        witnesses->push_back(os.str());
      }
    }
  }
  return ok;
}

} // namespace krcyclo
