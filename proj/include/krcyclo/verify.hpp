#pragma once

#include "krcyclo/json_io.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace krcyclo {

// Aggregated result of one theorem check. The overall verdict is derived
// from the sub-checks, so a report can never claim a pass over a failed
// part.
struct VerificationReport {
  std::string check_name;
  int n = 0;
  std::vector<std::pair<std::string, bool>> sub_checks;
  std::vector<std::string> witnesses;
  long long elapsed_ms = 0;
  std::vector<std::string> input_hashes;

  bool passed() const {
    if (sub_checks.empty()) return false;
    for (const auto& [name, ok] : sub_checks)
      if (!ok) return false;
    return true;
  }
  void add(const std::string& name, bool ok, const std::string& witness = "") {
    sub_checks.emplace_back(name, ok);
    if (!ok && !witness.empty()) witnesses.push_back(witness);
  }
};

json report_to_json(const VerificationReport& r, bool include_timing);
std::string report_to_table(const VerificationReport& r, bool include_timing);

// 64-bit FNV-1a over a canonical serialization, hex encoded.
std::string fnv1a_hex(const std::string& data);

// Theorem A: the phi triangulation covers the root polytope boundary.
VerificationReport verify_theorem_A(int n);
// Theorem B: KR of the explicit quasi-metric realizes the dual cyclohedron.
VerificationReport verify_theorem_B(int n);
// Generic Kantorovich-Rubinstein f-vector over seeded samples.
VerificationReport verify_gp(int n, int seeds);
// Tight hypergraph families (cyclic, BC^k, path counterexample), with the
// LP cross-check at small n.
VerificationReport verify_tight(int n);
// Polarity and transport dualities.
VerificationReport verify_duality(int n, int trials, uint64_t seed);
// Spanning-simplex volumes (as specified; the known-false clause stays in),
// facetwise unimodularity, and equidecomposability of triangulations.
VerificationReport verify_unimodular(int n);
// Lattice-basis property at every vertex of the cyclohedron.
VerificationReport verify_quasitoric(int n);

} // namespace krcyclo
