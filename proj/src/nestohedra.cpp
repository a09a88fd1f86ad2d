#include "krcyclo/nestohedra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace krcyclo {

namespace {

int popcount(uint32_t m) { return __builtin_popcount(m); }

void check_ground(const Hypergraph& h) {
  if (h.n < 1 || h.n > 20) throw std::invalid_argument("hypergraph ground cap");
  const uint32_t ground = (uint32_t{1} << h.n) - 1;
  for (const uint32_t e : h.edges) {
    if (e == 0) throw std::invalid_argument("empty hypergraph edge");
    if (e & ~ground) throw std::invalid_argument("edge leaves the ground set");
  }
}

} // namespace

uint32_t set_mask(const std::vector<int>& elements) {
  uint32_t m = 0;
  for (const int x : elements) {
    if (x < 1 || x > 20) throw std::invalid_argument("element out of range");
    m |= uint32_t{1} << (x - 1);
  }
  return m;
}

std::vector<int> mask_elements(uint32_t mask) {
  std::vector<int> xs;
  for (int i = 0; i < 32; ++i)
    if (mask & (uint32_t{1} << i)) xs.push_back(i + 1);
  return xs;
}

std::string mask_to_string(uint32_t mask) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const int x : mask_elements(mask)) {
    if (!first) os << ",";
    os << x;
    first = false;
  }
  os << "}";
  return os.str();
}

Hypergraph hypergraph_from_masks(int n, std::vector<uint32_t> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Hypergraph h{n, std::move(edges)};
  check_ground(h);
  return h;
}

Hypergraph make_hypergraph(int n, const std::vector<std::vector<int>>& edges) {
  std::vector<uint32_t> masks;
  for (const auto& e : edges) masks.push_back(set_mask(e));
  return hypergraph_from_masks(n, std::move(masks));
}

Hypergraph cyclic_edges(int n) { return bc_family(n, 2); }

Hypergraph bc_family(int n, int k) {
  if (k < 2 || k > n - 1) throw std::invalid_argument("bc_family needs 2 <= k <= n-1");
  std::vector<uint32_t> masks;
  for (int i = 1; i <= n; ++i) {
    uint32_t m = 0;
    for (int t = 0; t < k; ++t) m |= uint32_t{1} << ((i - 1 + t) % n);
    masks.push_back(m);
  }
  return hypergraph_from_masks(n, std::move(masks));
}

int component_count(const Hypergraph& h, uint32_t ground_mask) {
  std::vector<int> verts = mask_elements(ground_mask);
  std::map<int, int> parent;
  for (const int v : verts) parent[v] = v;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const uint32_t e : h.edges) {
    if (e & ~ground_mask)
      throw std::invalid_argument("edge leaves the stated ground set");
    const auto xs = mask_elements(e);
    for (size_t i = 1; i < xs.size(); ++i) {
      const int a = find(xs[0]), b = find(xs[i]);
      if (a != b) parent[a] = b;
    }
  }
  std::set<int> roots;
  for (const int v : verts) roots.insert(find(v));
  return static_cast<int>(roots.size());
}

bool connected_on(const Hypergraph& h, uint32_t ground_mask) {
  if (ground_mask == 0) return true;
  return component_count(h, ground_mask) == 1;
}

BuildingSet building_closure(const Hypergraph& f) {
  check_ground(f);
  if (f.edges.empty()) throw std::invalid_argument("closure of an empty family");
  std::set<uint32_t> members(f.edges.begin(), f.edges.end());
  for (int i = 0; i < f.n; ++i) members.insert(uint32_t{1} << i);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<uint32_t> current(members.begin(), members.end());
    for (size_t i = 0; i < current.size(); ++i)
      for (size_t j = i + 1; j < current.size(); ++j) {
        if ((current[i] & current[j]) == 0) continue;
        if (members.insert(current[i] | current[j]).second) grew = true;
      }
  }

  // Minimality certificate: every non-generator must be forced as a union
  // of two overlapping members strictly inside it.
  std::set<uint32_t> generators(f.edges.begin(), f.edges.end());
  for (int i = 0; i < f.n; ++i) generators.insert(uint32_t{1} << i);
  for (const uint32_t s : members) {
    if (generators.count(s)) continue;
    bool forced = false;
    for (const uint32_t a : members) {
      if (a == s || (a & s) != a) continue;
      for (const uint32_t b : members) {
        if (b == s || (b & s) != b) continue;
        if ((a & b) != 0 && (a | b) == s) {
          forced = true;
          break;
        }
      }
      if (forced) break;
    }
    if (!forced)
      throw std::logic_error("building closure produced an unforced member");
  }

  return BuildingSet{
      hypergraph_from_masks(f.n, {members.begin(), members.end()})};
}

Hypergraph restriction(const Hypergraph& f, uint32_t x) {
  std::vector<uint32_t> edges;
  for (const uint32_t e : f.edges)
    if ((e & x) == e) edges.push_back(e);
  return hypergraph_from_masks(f.n, std::move(edges));
}

Hypergraph deletion(const Hypergraph& f, uint32_t x) {
  std::vector<uint32_t> edges;
  for (const uint32_t e : f.edges)
    if ((e & ~x) != 0) edges.push_back(e & ~x);
  return hypergraph_from_masks(f.n, std::move(edges));
}

MinkowskiHRep minkowski_h_rep(const Hypergraph& f) {
  check_ground(f);
  const int n = f.n;
  const uint32_t ground = (uint32_t{1} << n) - 1;
  MinkowskiHRep out;
  out.closure = building_closure(f);
  out.connected = connected_on(f, ground);

  HPolytope h;
  h.ambient_dim = n;
  h.equalities.push_back({QVec(n, QQ(1)), QQ(static_cast<int>(f.edges.size()))});
  std::vector<uint32_t> sets;
  for (const uint32_t x : out.closure.family.edges) {
    if (x == ground) continue;
    QVec normal(n, QQ(0));
    for (const int i : mask_elements(x)) normal[i - 1] = -1;
    const long long fx = static_cast<long long>(restriction(f, x).edges.size());
    h.inequalities.push_back({std::move(normal), QQ(-fx)});
    sets.push_back(x);
  }

  // Drop-and-test irredundancy by exact LP: the X row is essential iff the
  // minimum of phi_X over the remaining system undercuts |F_X|.
  h.irredundant_flags.assign(h.inequalities.size(), false);
  for (size_t i = 0; i < h.inequalities.size(); ++i) {
    GeneralLp lp;
    lp.num_vars = n;
    lp.maximize = true;
    lp.objective = h.inequalities[i].normal;
    lp.eq_lhs = {h.equalities[0].normal};
    lp.eq_rhs = {h.equalities[0].rhs};
    for (size_t j = 0; j < h.inequalities.size(); ++j) {
      if (j == i) continue;
      lp.le_lhs.push_back(h.inequalities[j].normal);
      lp.le_rhs.push_back(h.inequalities[j].rhs);
    }
    const auto r = lp_solve(lp);
    h.irredundant_flags[i] =
        r.status == LpStatus::Unbounded ||
        (r.status == LpStatus::Optimal && r.objective > h.inequalities[i].rhs);
  }

  out.hrep = std::move(h);
  out.row_sets = std::move(sets);
  return out;
}

TightnessResult is_tight(const Hypergraph& f) {
  const uint32_t ground = (uint32_t{1} << f.n) - 1;
  const BuildingSet closure = building_closure(f);
  TightnessResult res;
  res.tight = true;
  for (const uint32_t x : closure.family.edges) {
    if (x == ground) continue;
    // Condition (1) is automatic for a building closure; assert it.
    if (!connected_on(restriction(f, x), x))
      throw std::logic_error("restriction to a closure member is disconnected");
    if (!connected_on(deletion(f, x), ground & ~x)) {
      res.tight = false;
      res.witnesses.push_back(x);
    }
  }
  return res;
}

bool tightness_cross_check(const Hypergraph& f, std::string* witness) {
  if (f.n > 6) throw CapExceededError("tightness cross-check cap: n <= 6");
  const TightnessResult combinatorial = is_tight(f);
  const MinkowskiHRep lp = minkowski_h_rep(f);
  std::set<uint32_t> bad(combinatorial.witnesses.begin(),
                         combinatorial.witnesses.end());
  for (size_t i = 0; i < lp.row_sets.size(); ++i) {
    const bool criterion_essential = !bad.count(lp.row_sets[i]);
    if (criterion_essential != lp.hrep.irredundant_flags[i]) {
      if (witness) {
        std::ostringstream os;
        os << "X = " << mask_to_string(lp.row_sets[i]) << ": criterion says "
           << (criterion_essential ? "essential" : "redundant")
           << ", LP says the opposite";
        *witness = os.str();
      }
      return false;
    }
  }
  return true;
}

QQ height(const Hypergraph& f, const BuildingSet& closure, uint32_t x) {
  if (!std::binary_search(closure.family.edges.begin(),
                          closure.family.edges.end(), x))
    throw std::invalid_argument("height argument must lie in the closure");
  const QQ total(static_cast<long long>(f.edges.size()), f.n);
  const long long fx = static_cast<long long>(restriction(f, x).edges.size());
  return total - QQ(fx, popcount(x));
}

QVec a_x_vector(const Hypergraph& f, const BuildingSet& closure, uint32_t x) {
  const QQ h = height(f, closure, x);
  if (h == 0) throw std::invalid_argument("A_X undefined where the height vanishes");
  QVec v(f.n);
  const QQ inv_n(1, f.n);
  const QQ inv_x(1, popcount(x));
  for (int i = 0; i < f.n; ++i) {
    v[i] = inv_n;
    if (x & (uint32_t{1} << i)) v[i] -= inv_x;
    v[i] /= h;
  }
  return v;
}

std::vector<QVec> minkowski_sum_vertices_oracle(const Hypergraph& f) {
  check_ground(f);
  long long combos = 1;
  for (const uint32_t e : f.edges) {
    combos *= popcount(e);
    if (combos > 100000) throw CapExceededError("oracle combination cap");
  }
  std::vector<QVec> sums{QVec(f.n, QQ(0))};
  for (const uint32_t e : f.edges) {
    std::vector<QVec> next;
    for (const auto& s : sums)
      for (const int i : mask_elements(e)) {
        QVec t = s;
        t[i - 1] += 1;
        next.push_back(std::move(t));
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sums = std::move(next);
  }
  std::vector<QVec> verts;
  for (const int i : extreme_point_indices(sums)) verts.push_back(sums[i]);
  std::sort(verts.begin(), verts.end());
  return verts;
}

} // namespace krcyclo
