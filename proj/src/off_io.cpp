#include "krcyclo/off_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace krcyclo {

namespace {

double to_double(const QQ& q) {
  return numerator(q).convert_to<double>() / denominator(q).convert_to<double>();
}

// Orthonormal basis (doubles) of the direction space of the vertex set.
std::vector<std::vector<double>> orthonormal_basis(const std::vector<QVec>& verts,
                                                   int dim) {
  const int n = static_cast<int>(verts[0].size());
  QMat dirs;
  for (size_t i = 1; i < verts.size(); ++i)
    dirs.push_back(vec_sub(verts[i], verts[0]));
  const QMat basis = rref(std::move(dirs), nullptr);
  std::vector<std::vector<double>> b;
  for (const auto& row : basis) {
    std::vector<double> v(n);
    for (int c = 0; c < n; ++c) v[c] = to_double(row[c]);
    for (const auto& prev : b) {
      double dot = 0;
      for (int c = 0; c < n; ++c) dot += v[c] * prev[c];
      for (int c = 0; c < n; ++c) v[c] -= dot * prev[c];
    }
    double norm = 0;
    for (const double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
    b.push_back(std::move(v));
  }
  if (static_cast<int>(b.size()) != dim)
    throw std::logic_error("basis dimension mismatch");
  return b;
}

std::vector<std::vector<double>> project_vertices(const std::vector<QVec>& verts,
                                                  int dim) {
  const auto basis = orthonormal_basis(verts, dim);
  const int n = static_cast<int>(verts[0].size());
  std::vector<double> center(n, 0.0);
  for (const auto& v : verts)
    for (int c = 0; c < n; ++c) center[c] += to_double(v[c]);
  for (double& x : center) x /= static_cast<double>(verts.size());

  std::vector<std::vector<double>> out;
  for (const auto& v : verts) {
    std::vector<double> p(3, 0.0);
    for (int k = 0; k < dim; ++k) {
      double dot = 0;
      for (int c = 0; c < n; ++c) dot += (to_double(v[c]) - center[c]) * basis[k][c];
      p[k] = dot;
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::string format_coord(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void emit_header(std::ostringstream& os, size_t nv, size_t nf, size_t ne) {
  os << "OFF\n" << nv << " " << nf << " " << ne << "\n";
}

void emit_vertices(std::ostringstream& os,
                   const std::vector<std::vector<double>>& pts) {
  for (const auto& p : pts)
    os << format_coord(p[0]) << " " << format_coord(p[1]) << " "
       << format_coord(p[2]) << "\n";
}

// Orders the vertices of a 2-face by angle around its centroid.
std::vector<int> polygon_cycle(const std::vector<std::vector<double>>& pts,
                               const std::vector<int>& ids) {
  double cx = 0, cy = 0, cz = 0;
  for (const int i : ids) {
    cx += pts[i][0];
    cy += pts[i][1];
    cz += pts[i][2];
  }
  cx /= ids.size();
  cy /= ids.size();
  cz /= ids.size();
  // Two in-plane axes from the first vertex direction and a normal estimate.
  const double ax = pts[ids[0]][0] - cx, ay = pts[ids[0]][1] - cy,
               az = pts[ids[0]][2] - cz;
  double nx = 0, ny = 0, nz = 0;
  for (size_t k = 1; k < ids.size(); ++k) {
    const double bx = pts[ids[k]][0] - cx, by = pts[ids[k]][1] - cy,
                 bz = pts[ids[k]][2] - cz;
    nx += ay * bz - az * by;
    ny += az * bx - ax * bz;
    nz += ax * by - ay * bx;
  }
  const double ux = ax, uy = ay, uz = az;
  const double vx = ny * uz - nz * uy, vy = nz * ux - nx * uz,
               vz = nx * uy - ny * ux;
  std::vector<std::pair<double, int>> angled;
  for (const int i : ids) {
    const double dx = pts[i][0] - cx, dy = pts[i][1] - cy, dz = pts[i][2] - cz;
    const double pu = dx * ux + dy * uy + dz * uz;
    const double pv = dx * vx + dy * vy + dz * vz;
    angled.emplace_back(std::atan2(pv, pu), i);
  }
  std::sort(angled.begin(), angled.end());
  std::vector<int> cycle;
  for (const auto& [angle, i] : angled) cycle.push_back(i);
  return cycle;
}

} // namespace

std::string to_off(const Hull& hull) {
  const int dim = hull.vpoly.dim;
  if (dim > 3) throw std::invalid_argument("OFF export supports dimension <= 3");
  const auto pts = project_vertices(hull.vpoly.vertices, dim);

  std::ostringstream os;
  if (dim <= 1) {
    emit_header(os, pts.size(), 0, 0);
    emit_vertices(os, pts);
    return os.str();
  }
  if (dim == 2) {
    // One polygon: the whole vertex cycle.
    std::vector<int> ids(pts.size());
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    const auto cycle = polygon_cycle(pts, ids);
    emit_header(os, pts.size(), 1, 0);
    emit_vertices(os, pts);
    os << cycle.size();
    for (const int i : cycle) os << " " << i;
    os << "\n";
    return os.str();
  }
  emit_header(os, pts.size(), hull.facet_masks.size(), 0);
  emit_vertices(os, pts);
  for (const uint64_t mask : hull.facet_masks) {
    std::vector<int> ids;
    for (int i = 0; i < 64; ++i)
      if (mask & (uint64_t{1} << i)) ids.push_back(i);
    const auto cycle = polygon_cycle(pts, ids);
    os << cycle.size();
    for (const int i : cycle) os << " " << i;
    os << "\n";
  }
  return os.str();
}

std::string to_off(const BoundaryTriangulation& t) {
  if (t.n != 4)
    throw std::invalid_argument("triangulated OFF export is the n = 4 surface");
  const auto pts = project_vertices(t.root.hull.vpoly.vertices, 3);
  std::ostringstream os;
  emit_header(os, pts.size(), t.cells.size(), 0);
  emit_vertices(os, pts);
  for (const auto& cell : t.cells) {
    os << cell.vertex_ids.size();
    for (const int id : cell.vertex_ids) os << " " << id;
    os << "\n";
  }
  return os.str();
}

} // namespace krcyclo
