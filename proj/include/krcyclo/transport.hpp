#pragma once

#include "krcyclo/kr.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace krcyclo {

struct SignedMeasure {
  int n = 0;
  QVec mass;
};

SignedMeasure make_measure(int n, QVec mass);
QQ total_mass(const SignedMeasure& m);
bool is_zero_sum(const SignedMeasure& m);
SignedMeasure measure_difference(const SignedMeasure& mu, const SignedMeasure& nu);

struct TransportPlan {
  int n = 0;
  std::vector<std::tuple<int, int, QQ>> flow; // (from, to, amount), amount > 0
  QQ cost;
  // Dual potentials with y_n = 0: y_i - y_j <= rho(i,j) everywhere and
  // equality on the support of the flow. Verified before returning, so every
  // plan certifies its own optimality.
  QVec potentials;
};

// Exact min-cost flow on the complete digraph with arc costs rho(i,j).
// Marginals must be nonnegative with equal totals.
TransportPlan transport_cost(const QuasiMetric& m, const SignedMeasure& mu,
                             const SignedMeasure& nu);

// Minkowski gauge of the KR unit ball: least total weight expressing z as a
// nonnegative combination of the generators (e_i - e_j)/rho(i,j).
QQ kr_gauge(const QuasiMetric& m, const SignedMeasure& z);

struct DualityReport {
  int trials = 0;
  bool all_equal = false;
  std::vector<std::string> mismatches;
};

// For random rational probability pairs: transport cost, KR gauge, and the
// Lipschitz supremum sup{<f, mu - nu> : f in Lip(rho)} must agree exactly.
DualityReport duality_check(const QuasiMetric& m, int trials, uint64_t seed);

// Deterministic random probability measure with denominator 120 (rejection
// sampled onto the simplex), used by the duality trials.
SignedMeasure random_probability_measure(int n, std::mt19937_64& engine);

} // namespace krcyclo
