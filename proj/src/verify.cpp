#include "krcyclo/verify.hpp"

#include "krcyclo/off_io.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

namespace krcyclo {

namespace {

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

std::string hash_json(const json& j) { return fnv1a_hex(j.dump()); }

std::vector<long long> expected_kr_proper_f(int n) {
  const auto fw = cyclohedron_f_vector(n);
  std::vector<long long> expected(n - 1);
  for (int k = 0; k <= n - 2; ++k) expected[k] = fw[n - 2 - k];
  return expected;
}

bool proper_f_matches(const std::vector<long long>& full_f,
                      const std::vector<long long>& proper_expected) {
  if (full_f.size() != proper_expected.size() + 1) return false;
  for (size_t k = 0; k < proper_expected.size(); ++k)
    if (full_f[k] != proper_expected[k]) return false;
  return full_f.back() == 1;
}

std::string fvec_str(const std::vector<long long>& f) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << ")";
  return os.str();
}

} // namespace

std::string fnv1a_hex(const std::string& data) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (const unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

json report_to_json(const VerificationReport& r, bool include_timing) {
  json checks = json::array();
  for (const auto& [name, ok] : r.sub_checks)
    checks.push_back({{"name", name}, {"pass", ok}});
  return json{{"check", r.check_name},
              {"n", r.n},
              {"pass", r.passed()},
              {"sub_checks", checks},
              {"witnesses", r.witnesses},
              {"timings_ms", include_timing ? r.elapsed_ms : 0},
              {"input_hashes", r.input_hashes}};
}

std::string report_to_table(const VerificationReport& r, bool include_timing) {
  std::ostringstream os;
  os << r.check_name << " n=" << r.n << " "
     << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& [name, ok] : r.sub_checks)
    os << "  [" << (ok ? "ok" : "FAIL") << "] " << name << "\n";
  for (const auto& w : r.witnesses) os << "  witness: " << w << "\n";
  if (include_timing) os << "  elapsed_ms: " << r.elapsed_ms << "\n";
  return os.str();
}

VerificationReport verify_theorem_A(int n) {
  Stopwatch timer;
  VerificationReport rep;
  rep.check_name = "A";
  rep.n = n;
  rep.input_hashes.push_back(hash_json(json{{"n", n}}));

  const auto t = boundary_triangulation_via_phi(n);
  const auto res = verify_triangulation(t);
  rep.add("vertex bijection", res.vertices_bijective);
  rep.add("cells non-degenerate", res.cells_nondegenerate);
  rep.add("per-facet volume cover", res.facet_volumes_covered);
  rep.add("pairwise interior-disjoint", res.interiors_disjoint);
  rep.add("pseudomanifold ridges", res.pseudomanifold);
  {
    std::ostringstream os;
    os << "Euler characteristic " << res.euler_characteristic << " of the "
       << (n - 2) << "-sphere";
    rep.add(os.str(), res.euler_ok);
  }
  std::string witness;
  rep.add("facets are simplex products", facets_are_simplex_products(t.root, &witness),
          witness);
  const auto expected = expected_kr_proper_f(n);
  rep.add("complex f-vector " + fvec_str(res.f_vector),
          res.f_vector == expected);
  for (const auto& w : res.witnesses) rep.witnesses.push_back(w);
  rep.elapsed_ms = timer.ms();
  return rep;
}

VerificationReport verify_theorem_B(int n) {
  Stopwatch timer;
  VerificationReport rep;
  rep.check_name = "B";
  rep.n = n;
  const auto m = cyclohedral_metric(n);
  rep.input_hashes.push_back(hash_json(metric_to_json(m)));

  const auto v = validate(m);
  rep.add("quasi-metric", v.is_quasi);
  rep.add("strict triangle inequality", v.is_strict);
  const auto rc = verify_cyclohedral_type(m);
  rep.add("all generators are vertices", rc.generators_all_vertices);
  rep.add("face lattice matches the admissible-arc complex", rc.lattice_match,
          rc.first_mismatch);
  if (!rc.kr_f_vector.empty())
    rep.add("KR f-vector " + fvec_str(rc.kr_f_vector),
            proper_f_matches(rc.kr_f_vector, expected_kr_proper_f(n)));
  rep.elapsed_ms = timer.ms();
  return rep;
}

VerificationReport verify_gp(int n, int seeds) {
  Stopwatch timer;
  VerificationReport rep;
  rep.check_name = "gp";
  rep.n = n;
  rep.input_hashes.push_back(hash_json(json{{"n", n}, {"seeds", seeds}}));

  const auto expected = expected_kr_proper_f(n);
  bool all = true;
  std::string witness;
  for (int seed = 1; seed <= seeds; ++seed) {
    const auto m = sample_generic_metric(n, static_cast<uint64_t>(seed));
    const auto kr = kr_polytope(m);
    const auto f = face_lattice(kr.hull).f_vector;
    if (!proper_f_matches(f, expected)) {
      all = false;
      std::ostringstream os;
      os << "seed " << seed << " yields f-vector " << fvec_str(f);
      witness = os.str();
      break;
    }
  }
  std::ostringstream name;
  name << seeds << " generic samples share the f-vector " << fvec_str(expected);
  rep.add(name.str(), all, witness);
  rep.elapsed_ms = timer.ms();
  return rep;
}

VerificationReport verify_tight(int n) {
  Stopwatch timer;
  VerificationReport rep;
  rep.check_name = "tight";
  rep.n = n;
  rep.input_hashes.push_back(hash_json(json{{"n", n}}));

  rep.add("cyclic edges are tight", is_tight(cyclic_edges(n)).tight);
  if (n <= 7) {
    bool all_bc = true;
    for (int k = 2; k <= n - 1; ++k) all_bc = all_bc && is_tight(bc_family(n, k)).tight;
    rep.add("every BC^k family is tight", all_bc);
  }
  if (n == 4) {
    const auto path = make_hypergraph(4, {{1, 2}, {2, 3}, {3, 4}});
    const auto res = is_tight(path);
    const bool witness_found =
        !res.tight && std::count(res.witnesses.begin(), res.witnesses.end(),
                                 set_mask({2, 3})) == 1;
    rep.add("path on [4] fails with witness X = {2,3}", witness_found);
  }
  if (n <= 5) {
    std::string witness;
    bool agree = tightness_cross_check(cyclic_edges(n), &witness);
    if (n == 4)
      agree = agree &&
              tightness_cross_check(make_hypergraph(4, {{1, 2}, {2, 3}, {3, 4}}),
                                    &witness);
    for (int k = 3; agree && k <= n - 1; ++k)
      agree = tightness_cross_check(bc_family(n, k), &witness);
    rep.add("LP irredundancy agrees row by row", agree, witness);
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

VerificationReport verify_duality(int n, int trials, uint64_t seed) {
  Stopwatch timer;
  VerificationReport rep;
  rep.check_name = "duality";
  rep.n = n;
  rep.input_hashes.push_back(
      hash_json(json{{"n", n}, {"trials", trials}, {"seed", seed}}));

  if (n == 4) {
    const auto root4 = build_root_polytope(4);
    std::vector<QVec> hat;
    for (int i = 0; i < 4; ++i) {
      QVec v(4, QQ(-1, 4));
      v[i] += 1;
      hat.push_back(std::move(v));
    }
    const auto zono = zono_delta(hat);
    rep.add("polar of Root_4 equals the simplex zonotope",
            polar_dual(root4.hull.vpoly).vertices == zono.vertices);
  }

  std::vector<std::pair<std::string, QuasiMetric>> metrics = {
      {"uniform", uniform_metric(n)},
      {"clock", clock_metric(n)},
      {"cyclohedral", cyclohedral_metric(n)}};
  for (int s = 1; s <= 5; ++s)
    metrics.emplace_back("generic seed " + std::to_string(s),
                         sample_generic_metric(n, seed + s));

  bool polar_all = true;
  std::string polar_witness;
  for (const auto& [name, m] : metrics) {
    const auto kr = kr_polytope(m);
    const auto lip_v = vertex_enumeration(lipschitz_polytope(m));
    if (polar_dual(kr.hull.vpoly).vertices != lip_v.vertices) {
      polar_all = false;
      polar_witness = name + ": Lip is not the polar of KR";
      break;
    }
  }
  rep.add("Lip(rho) = KR(rho)^o for all test metrics", polar_all, polar_witness);

  bool duality_all = true;
  std::string duality_witness;
  for (const auto& [name, m] : metrics) {
    const auto res = duality_check(m, trials, seed);
    if (!res.all_equal) {
      duality_all = false;
      duality_witness = name + ": " + res.mismatches.front();
      break;
    }
  }
  std::ostringstream label;
  label << "transport = gauge = Lipschitz sup on " << trials
        << " random pairs per metric";
  rep.add(label.str(), duality_all, duality_witness);
  rep.elapsed_ms = timer.ms();
  return rep;
}

VerificationReport verify_unimodular(int n) {
  Stopwatch timer;
  VerificationReport rep;
  rep.check_name = "unimodular";
  rep.n = n;
  rep.input_hashes.push_back(hash_json(json{{"n", n}}));

  const auto root = build_root_polytope(n);
  const auto volumes = spanning_simplex_volumes(root);
  {
    std::ostringstream witness;
    if (volumes.size() != 1) {
      witness << "distinct spanning-simplex volumes:";
      for (const auto& v : volumes) witness << " " << to_string(v);
      witness << " (alternating vertices span index-3 sublattices)";
    }
    rep.add("all spanning simplices share one volume", volumes.size() == 1,
            witness.str());
  }
  std::string facet_witness;
  rep.add("within each facet all spanned simplices share one volume",
          facetwise_unimodular(root, &facet_witness), facet_witness);

  if (n <= 5) {
    const auto pulled = pulling_triangulation(root);
    std::vector<uint64_t> pulled_masks;
    for (const auto& cell : pulled) {
      uint64_t m = 0;
      for (const int id : cell) m |= uint64_t{1} << id;
      pulled_masks.push_back(m);
    }
    const auto t = boundary_triangulation_via_phi(n);
    std::vector<uint64_t> phi_masks;
    for (const auto& c : t.cells) phi_masks.push_back(c.mask);
    rep.add("pulling and phi triangulations share the f-vector",
            complex_f_vector(pulled_masks) == complex_f_vector(phi_masks));
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

VerificationReport verify_quasitoric(int n) {
  Stopwatch timer;
  VerificationReport rep;
  rep.check_name = "quasitoric";
  rep.n = n;
  rep.input_hashes.push_back(hash_json(json{{"n", n}}));

  std::vector<std::string> witnesses;
  const bool ok = lattice_basis_check(n, &witnesses);
  std::ostringstream name;
  name << "|det| = 1 at all " << cyclohedron_f_formula(n, 0) << " vertices";
  rep.add(name.str(), ok, witnesses.empty() ? "" : witnesses.front());
  rep.elapsed_ms = timer.ms();
  return rep;
}

} // namespace krcyclo
