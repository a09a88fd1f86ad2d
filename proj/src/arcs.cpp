#include "krcyclo/arcs.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace krcyclo {

namespace {

int wrap(int x, int n) { // into 1..n
  x %= n;
  if (x <= 0) x += n;
  return x;
}

} // namespace

Arc make_arc(int n, int source, int sink) {
  if (n < 2) throw std::invalid_argument("arc needs n >= 2");
  if (source < 1 || source > n || sink < 1 || sink > n)
    throw std::invalid_argument("arc endpoint out of range");
  if (source == sink) throw std::invalid_argument("[x,x) is empty, not an arc");
  return Arc{n, source, sink};
}

int arc_steps(const Arc& a) {
  int d = (a.sink - a.source) % a.n;
  if (d <= 0) d += a.n;
  return d;
}

std::vector<int> arc_support(const Arc& a) {
  std::vector<int> s;
  const int d = arc_steps(a);
  for (int k = 0; k < d; ++k) s.push_back(wrap(a.source + k, a.n));
  return s;
}

uint32_t arc_support_mask(const Arc& a) {
  uint32_t m = 0;
  for (int v : arc_support(a)) m |= uint32_t{1} << (v - 1);
  return m;
}

std::string arc_to_string(const Arc& a) {
  std::ostringstream os;
  os << "[" << a.source << "," << a.sink << ")";
  return os.str();
}

bool compatible(const Arc& a, const Arc& b) {
  if (a.n != b.n) throw std::invalid_argument("arcs on different ground sets");
  if (a == b) return true;
  const uint32_t ma = arc_support_mask(a);
  const uint32_t mb = arc_support_mask(b);
  const uint32_t common = ma & mb;
  if (common != 0) {
    // Intersecting supports must be strictly nested.
    return common == ma || common == mb;
  }
  // Disjoint: the union must not be an interval, i.e. the arcs must not
  // touch end to end.
  return a.sink != b.source && b.sink != a.source;
}

AdmissibleFamily make_family(int n, std::vector<Arc> arcs) {
  for (const auto& a : arcs)
    if (a.n != n) throw std::invalid_argument("family mixes ground sets");
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return AdmissibleFamily{n, std::move(arcs)};
}

bool is_admissible(const std::vector<Arc>& arcs) {
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = i + 1; j < arcs.size(); ++j)
      if (!compatible(arcs[i], arcs[j])) return false;
  return true;
}

bool is_admissible(const AdmissibleFamily& t) { return is_admissible(t.arcs); }

std::vector<int> sources(const AdmissibleFamily& t) {
  std::vector<int> s;
  for (const auto& a : t.arcs) s.push_back(a.source);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<int> sinks(const AdmissibleFamily& t) {
  std::vector<int> s;
  for (const auto& a : t.arcs) s.push_back(a.sink);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<Arc> all_arcs(int n) {
  std::vector<Arc> arcs;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) arcs.push_back(Arc{n, i, j});
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

int arc_index(const Arc& a) {
  // Arcs sorted by (source, sink): source block of size n-1, sink skips the
  // source itself.
  const int row = a.source - 1;
  int col = a.sink - 1;
  if (a.sink > a.source) --col;
  return row * (a.n - 1) + col;
}

std::vector<AdmissibleFamily> enumerate_admissible(int n, std::optional<int> k) {
  if (n < 3 || n > 9)
    throw CapExceededError("admissible enumeration cap: 3 <= n <= 9");
  if (k && (*k < 0 || *k > n - 1))
    return {};
  const std::vector<Arc> arcs = all_arcs(n);
  const int m = static_cast<int>(arcs.size());
  std::vector<std::vector<bool>> comp(m, std::vector<bool>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) comp[i][j] = compatible(arcs[i], arcs[j]);

  std::vector<AdmissibleFamily> out;
  std::vector<int> chosen;
  auto emit = [&]() {
    if (k && static_cast<int>(chosen.size()) != *k) return;
    std::vector<Arc> fam;
    for (int i : chosen) fam.push_back(arcs[i]);
    out.push_back(AdmissibleFamily{n, std::move(fam)});
  };
  // Depth-first over increasing arc indices. Admissibility alone bounds the
  // depth (no size cutoff), so the enumeration can serve as the oracle for
  // the purity claim |T| <= n-1.
  auto rec = [&](auto&& self, int start) -> void {
    emit();
    for (int i = start; i < m; ++i) {
      bool ok = true;
      for (int c : chosen)
        if (!comp[c][i]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

ForestView to_forest(const AdmissibleFamily& t) {
  ForestView f;
  f.n = t.n;
  for (const auto& a : t.arcs) f.edges.emplace_back(a.source, a.sink);
  f.sources = sources(t);
  f.sinks = sinks(t);
  for (int s : f.sources)
    if (std::binary_search(f.sinks.begin(), f.sinks.end(), s))
      f.sources_sinks_disjoint = false;

  // Undirected cycle detection by union-find; a joining edge inside one
  // component witnesses a cycle.
  std::vector<int> parent(t.n + 1);
  for (int i = 0; i <= t.n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : f.edges) {
    const int ru = find(u), rv = find(v);
    if (ru == rv) {
      f.acyclic = false;
      f.cycle_witness = {u, v};
      break;
    }
    parent[ru] = rv;
  }
  return f;
}

DihedralElement DihedralElement::compose(const DihedralElement& then_apply) const {
  // Elements act as x -> reflect?(n - x):x, then + shift. Composition g2∘g1
  // with g1 = *this, g2 = then_apply:
  //   reflect total = r1 xor r2; shift total = r2 ? (s2 - s1) : (s2 + s1).
  if (n != then_apply.n) throw std::invalid_argument("group size mismatch");
  DihedralElement r;
  r.n = n;
  r.reflect = reflect != then_apply.reflect;
  const int s = then_apply.reflect ? then_apply.shift - shift
                                   : then_apply.shift + shift;
  r.shift = ((s % n) + n) % n;
  return r;
}

DihedralElement DihedralElement::inverse() const {
  DihedralElement r;
  r.n = n;
  r.reflect = reflect;
  r.shift = reflect ? shift : ((n - shift) % n);
  return r;
}

DihedralElement dihedral_from_word(int n, const std::string& word) {
  DihedralElement g = DihedralElement::identity(n);
  size_t i = 0;
  while (i < word.size()) {
    const char c = word[i];
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    if (c != 'a' && c != 'b')
      throw std::invalid_argument("dihedral word uses generators a and b only");
    ++i;
    long long exp = 1;
    if (i < word.size() && word[i] == '^') {
      ++i;
      size_t j = i;
      if (j < word.size() && (word[j] == '-' || word[j] == '+')) ++j;
      size_t digits = j;
      while (digits < word.size() && std::isdigit(word[digits])) ++digits;
      if (digits == j) throw std::invalid_argument("missing exponent digits");
      exp = std::stoll(word.substr(i, digits - i));
      i = digits;
    }
    DihedralElement gen = c == 'a' ? DihedralElement::alpha(n) : DihedralElement::beta(n);
    if (exp < 0) {
      gen = gen.inverse();
      exp = -exp;
    }
    for (long long t = 0; t < exp; ++t) g = g.compose(gen);
  }
  return g;
}

Arc dihedral_apply(const DihedralElement& g, const Arc& a) {
  if (g.n != a.n) throw std::invalid_argument("group and arc size mismatch");
  Arc r = a;
  if (g.reflect) { // [i,j) -> [n-j+1, n-i+1)
    const int i = r.source, j = r.sink;
    r.source = wrap(a.n - j + 1, a.n);
    r.sink = wrap(a.n - i + 1, a.n);
  }
  r.source = wrap(r.source + g.shift, a.n);
  r.sink = wrap(r.sink + g.shift, a.n);
  return r;
}

AdmissibleFamily dihedral_apply(const DihedralElement& g, const AdmissibleFamily& t) {
  std::vector<Arc> arcs;
  for (const auto& a : t.arcs) arcs.push_back(dihedral_apply(g, a));
  return make_family(t.n, std::move(arcs));
}

FaceLattice arc_complex(int n) {
  const auto arcs = all_arcs(n);
  if (arcs.size() > 64)
    throw CapExceededError("arc complex exceeds the 64-bit vertex cap");
  FaceLattice lat;
  lat.dim = n - 2;
  lat.num_vertices = static_cast<int>(arcs.size());
  lat.has_top = false;
  lat.f_vector.assign(n - 1, 0);
  for (const auto& fam : enumerate_admissible(n, std::nullopt)) {
    uint64_t mask = 0;
    for (const auto& a : fam.arcs) mask |= uint64_t{1} << arc_index(a);
    const int d = static_cast<int>(fam.arcs.size()) - 1;
    lat.faces.emplace_back(d, mask);
    if (d >= 0) ++lat.f_vector[d];
  }
  std::sort(lat.faces.begin(), lat.faces.end());
  return lat;
}

} // namespace krcyclo
