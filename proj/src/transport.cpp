#include "krcyclo/transport.hpp"

#include <sstream>
#include <stdexcept>

namespace krcyclo {

SignedMeasure make_measure(int n, QVec mass) {
  if (static_cast<int>(mass.size()) != n)
    throw std::invalid_argument("measure size mismatch");
  return SignedMeasure{n, std::move(mass)};
}

QQ total_mass(const SignedMeasure& m) { return vec_sum(m.mass); }

bool is_zero_sum(const SignedMeasure& m) { return total_mass(m) == 0; }

SignedMeasure measure_difference(const SignedMeasure& mu, const SignedMeasure& nu) {
  if (mu.n != nu.n) throw std::invalid_argument("measure size mismatch");
  return SignedMeasure{mu.n, vec_sub(mu.mass, nu.mass)};
}

TransportPlan transport_cost(const QuasiMetric& m, const SignedMeasure& mu,
                             const SignedMeasure& nu) {
  const int n = m.n;
  if (mu.n != n || nu.n != n) throw std::invalid_argument("measure size mismatch");
  for (const auto& v : {mu.mass, nu.mass})
    for (const QQ& x : v)
      if (x < 0) throw std::invalid_argument("marginals must be nonnegative");
  if (total_mass(mu) != total_mass(nu))
    throw std::invalid_argument("marginal totals differ; transport infeasible");

  const QVec z = vec_sub(mu.mass, nu.mass);

  // Columns: ordered pairs (i,j), i != j. Conservation rows for the first
  // n-1 nodes (the last row is dependent since z sums to zero).
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) arcs.emplace_back(i, j);

  QMat a(n - 1, QVec(arcs.size(), QQ(0)));
  QVec b(z.begin(), z.end() - 1);
  QVec c(arcs.size());
  for (size_t k = 0; k < arcs.size(); ++k) {
    const auto [i, j] = arcs[k];
    if (i < n - 1) a[i][k] = 1;
    if (j < n - 1) a[j][k] = -1;
    c[k] = m.rho[i][j];
  }
  const LpResult sol = lp_solve_standard(std::move(a), std::move(b), std::move(c));
  if (sol.status != LpStatus::Optimal)
    throw std::logic_error("transport flow LP unsolvable");

  TransportPlan plan;
  plan.n = n;
  plan.cost = sol.objective;
  plan.potentials = sol.row_duals;
  plan.potentials.push_back(QQ(0)); // pin y_n = 0
  for (size_t k = 0; k < arcs.size(); ++k)
    if (sol.x[k] > 0)
      plan.flow.emplace_back(arcs[k].first + 1, arcs[k].second + 1, sol.x[k]);

  // Self-verification: feasibility, dual feasibility, complementary
  // slackness, and strong duality must all hold exactly.
  QVec net(n, QQ(0));
  QQ cost_check = 0;
  for (const auto& [i, j, f] : plan.flow) {
    net[i - 1] += f;
    net[j - 1] -= f;
    cost_check += f * m.rho[i - 1][j - 1];
    if (plan.potentials[i - 1] - plan.potentials[j - 1] != m.rho[i - 1][j - 1])
      throw std::logic_error("complementary slackness fails on the support");
  }
  if (net != z) throw std::logic_error("flow conservation fails");
  if (cost_check != plan.cost) throw std::logic_error("plan cost mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && plan.potentials[i] - plan.potentials[j] > m.rho[i][j])
        throw std::logic_error("potentials are not 1-Lipschitz");
  if (vec_dot(plan.potentials, z) != plan.cost)
    throw std::logic_error("strong duality fails");
  return plan;
}

QQ kr_gauge(const QuasiMetric& m, const SignedMeasure& z) {
  const int n = m.n;
  if (z.n != n) throw std::invalid_argument("measure size mismatch");
  if (!is_zero_sum(z))
    throw std::invalid_argument("gauge argument must have total mass zero");
  if (vec_is_zero(z.mass)) return QQ(0);

  std::vector<QVec> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) gens.push_back(kr_generator(m, i, j));

  QMat a(n - 1, QVec(gens.size()));
  QVec b(z.mass.begin(), z.mass.end() - 1);
  QVec c(gens.size(), QQ(1));
  for (size_t k = 0; k < gens.size(); ++k)
    for (int r = 0; r < n - 1; ++r) a[r][k] = gens[k][r];
  const LpResult sol = lp_solve_standard(std::move(a), std::move(b), std::move(c));
  if (sol.status != LpStatus::Optimal)
    throw std::logic_error("gauge LP unsolvable on the zero-sum space");
  return sol.objective;
}

SignedMeasure random_probability_measure(int n, std::mt19937_64& engine) {
  for (;;) {
    std::vector<long long> draw(n);
    long long sum = 0;
    for (int i = 0; i < n; ++i) {
      draw[i] = static_cast<long long>(engine() % 121);
      sum += draw[i];
    }
    if (sum != 120) continue;
    QVec mass(n);
    for (int i = 0; i < n; ++i) mass[i] = QQ(draw[i], 120);
    return SignedMeasure{n, std::move(mass)};
  }
}

DualityReport duality_check(const QuasiMetric& m, int trials, uint64_t seed) {
  if (m.n > 6) throw CapExceededError("duality check cap: n <= 6");
  DualityReport rep;
  rep.trials = trials;
  rep.all_equal = true;
  std::mt19937_64 engine(seed);

  const HPolytope lip = lipschitz_polytope(m);
  for (int t = 0; t < trials; ++t) {
    const SignedMeasure mu = random_probability_measure(m.n, engine);
    const SignedMeasure nu = random_probability_measure(m.n, engine);
    const SignedMeasure z = measure_difference(mu, nu);

    const QQ cost = transport_cost(m, mu, nu).cost;
    const QQ gauge = kr_gauge(m, z);

    GeneralLp lp;
    lp.num_vars = m.n;
    lp.maximize = true;
    lp.objective = z.mass;
    lp.eq_lhs = {lip.equalities[0].normal};
    lp.eq_rhs = {lip.equalities[0].rhs};
    for (const auto& row : lip.inequalities) {
      lp.le_lhs.push_back(row.normal);
      lp.le_rhs.push_back(row.rhs);
    }
    const auto sup = lp_solve(lp);
    const bool match = sup.status == LpStatus::Optimal && cost == gauge &&
                       gauge == sup.objective;
    if (!match) {
      rep.all_equal = false;
      std::ostringstream os;
      os << "trial " << t << ": transport " << to_string(cost) << ", gauge "
         << to_string(gauge) << ", lipschitz-sup "
         << (sup.status == LpStatus::Optimal ? to_string(sup.objective)
                                             : std::string("unsolved"));
      rep.mismatches.push_back(os.str());
    }
  }
  return rep;
}

} // namespace krcyclo
