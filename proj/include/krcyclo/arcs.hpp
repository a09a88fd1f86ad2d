#pragma once

#include "krcyclo/polytope.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace krcyclo {

// Half-open circular interval [source, sink) on the vertex set [n],
// 1-based with wraparound n+1 == 1. source != sink, so the support is a
// nonempty proper cyclic interval.
struct Arc {
  int n = 0;
  int source = 0;
  int sink = 0;

  bool operator==(const Arc& o) const {
    return n == o.n && source == o.source && sink == o.sink;
  }
  bool operator<(const Arc& o) const {
    if (source != o.source) return source < o.source;
    return sink < o.sink;
  }
};

Arc make_arc(int n, int source, int sink);

// Number of counterclockwise steps from source to sink: |[source,sink)^0|.
int arc_steps(const Arc& a);
// The counterclockwise run from source up to but excluding sink.
std::vector<int> arc_support(const Arc& a);
uint32_t arc_support_mask(const Arc& a);
std::string arc_to_string(const Arc& a);

// Two arcs are compatible when intersecting supports are strictly nested,
// and disjoint supports do not touch end to end.
bool compatible(const Arc& a, const Arc& b);

struct AdmissibleFamily {
  int n = 0;
  std::vector<Arc> arcs; // sorted by (source, sink)
};

AdmissibleFamily make_family(int n, std::vector<Arc> arcs);
bool is_admissible(const std::vector<Arc>& arcs);
bool is_admissible(const AdmissibleFamily& t);

std::vector<int> sources(const AdmissibleFamily& t);
std::vector<int> sinks(const AdmissibleFamily& t);

// All admissible families of size k (or every size if k is empty), in
// lexicographic order of their sorted arc index lists. Cap: 3 <= n <= 9.
std::vector<AdmissibleFamily> enumerate_admissible(int n, std::optional<int> k);

// All arcs on [n] in the canonical (source, sink) order used everywhere an
// arc index is needed.
std::vector<Arc> all_arcs(int n);
int arc_index(const Arc& a);

// Digraph view with edge source -> sink per arc. For admissible input the
// underlying graph is a forest and the source/sink sets are disjoint; for
// inadmissible input the structure reports a witness instead.
struct ForestView {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  bool acyclic = true;
  std::vector<int> cycle_witness; // vertices of some undirected cycle
  std::vector<int> sources;
  std::vector<int> sinks;
  bool sources_sinks_disjoint = true;
};
ForestView to_forest(const AdmissibleFamily& t);

// Dihedral group of the n-cycle: alpha is the rotation [i,j) -> [i+1,j+1),
// beta the reflection fixing vertex n, [i,j) -> [n-j+1, n-i+1).
struct DihedralElement {
  int n = 0;
  int shift = 0;    // power of alpha applied after an optional reflection
  bool reflect = false;

  static DihedralElement identity(int n) { return {n, 0, false}; }
  static DihedralElement alpha(int n) { return {n, 1, false}; }
  static DihedralElement beta(int n) { return {n, 0, true}; }
  DihedralElement compose(const DihedralElement& then_apply) const;
  DihedralElement inverse() const;
  bool operator==(const DihedralElement& o) const {
    return n == o.n && shift == o.shift && reflect == o.reflect;
  }
};

// Parses words over the generators: "a", "b", optionally with integer
// exponents as in "a^-1 b a^3". Whitespace separated or juxtaposed.
DihedralElement dihedral_from_word(int n, const std::string& word);

Arc dihedral_apply(const DihedralElement& g, const Arc& a);
AdmissibleFamily dihedral_apply(const DihedralElement& g, const AdmissibleFamily& t);

// The boundary complex of the dual cyclohedron: vertices are arcs in
// canonical order, faces are admissible families. No top face.
FaceLattice arc_complex(int n);

} // namespace krcyclo
