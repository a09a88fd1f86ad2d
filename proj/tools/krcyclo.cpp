#include "krcyclo/json_io.hpp"
#include "krcyclo/off_io.hpp"
#include "krcyclo/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace {

using namespace krcyclo;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Caps {
  std::map<std::string, int> per_check; // "<check>.max_n" overrides
  std::optional<int> global;            // "max_n" override
  std::optional<int> env_ceiling;       // KRCYCLO_MAX_N

  // Config values replace the default cap (up to the module's hard limit);
  // the environment variable is a ceiling over everything.
  int clamp(const std::string& check, int default_cap, int hard_limit) const {
    int cap = default_cap;
    if (global) cap = std::min(*global, hard_limit);
    const auto it = per_check.find(check);
    if (it != per_check.end()) cap = std::min(it->second, hard_limit);
    if (env_ceiling) cap = std::min(cap, *env_ceiling);
    return cap;
  }
};

Caps load_caps(const std::string& config_path) {
  Caps caps;
  if (const char* env = std::getenv("KRCYCLO_MAX_N")) caps.env_ceiling = std::atoi(env);
  if (config_path.empty()) return caps;
  std::ifstream in(config_path);
  if (!in) throw std::invalid_argument("cannot read config " + config_path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) continue;
    if (key == "max_n")
      caps.global = std::stoi(value);
    else if (key.size() > 6 && key.substr(key.size() - 6) == ".max_n")
      caps.per_check[key.substr(0, key.size() - 6)] = std::stoi(value);
  }
  return caps;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

struct VerifySpec {
  int default_lo;
  int default_hi; // also the default cap
  int hard_limit; // the module cap; config may raise up to here
};

const std::map<std::string, VerifySpec> kVerifyChecks = {
    {"A", {3, 5, 6}},          {"B", {3, 5, 6}},       {"gp", {3, 4, 6}},
    {"tight", {3, 8, 9}},      {"duality", {3, 5, 6}}, {"unimodular", {3, 5, 5}},
    {"quasitoric", {3, 6, 7}},
};

VerificationReport run_check(const std::string& check, int n, int seeds,
                             int trials, uint64_t seed) {
  if (check == "A") return verify_theorem_A(n);
  if (check == "B") return verify_theorem_B(n);
  if (check == "gp") return verify_gp(n, seeds);
  if (check == "tight") return verify_tight(n);
  if (check == "duality") return verify_duality(n, trials, seed);
  if (check == "unimodular") return verify_unimodular(n);
  return verify_quasitoric(n);
}

QuasiMetric metric_by_name(const std::string& name, int n, const std::string& eps) {
  if (name == "uniform") return uniform_metric(n);
  if (name == "clock") return clock_metric(n);
  if (name == "cyclo") return cyclohedral_metric(n);
  return epsilon_metric(n, parse_rational(eps));
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification tool for cyclohedra, Kantorovich-Rubinstein "
               "polytopes, and nestohedra"};
  app.require_subcommand(1);

  std::string config_path;
  int jobs = 1;
  app.add_option("--config", config_path, "key=value file overriding n-caps");
  app.add_option("--jobs", jobs, "worker cap for parallel sections")
      ->check(CLI::Range(1, 256));

  auto* faces = app.add_subcommand("faces", "enumerate admissible arc families");
  int faces_n = 0;
  int faces_k = -1;
  bool count_only = false;
  std::string faces_format = "table";
  std::string faces_out;
  faces->add_option("--n", faces_n, "ground-set size")->required();
  faces->add_option("--k", faces_k, "family size (all sizes when omitted)");
  faces->add_flag("--count-only", count_only, "print only the number of rows");
  faces->add_option("--format", faces_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  faces->add_option("--out", faces_out, "write to file instead of stdout");

  auto* verify = app.add_subcommand("verify", "machine-check one theorem");
  std::string check;
  int verify_n = 0;
  int seeds = 20;
  int trials = 50;
  uint64_t seed = 1;
  std::string verify_format = "table";
  std::string verify_out;
  bool timings = false;
  verify->add_option("check", check, "A, B, gp, tight, duality, unimodular, quasitoric")
      ->required()
      ->check(CLI::IsMember({"A", "B", "gp", "tight", "duality", "unimodular",
                             "quasitoric"}));
  verify->add_option("--n", verify_n, "single size (default: the per-check range)");
  verify->add_option("--seeds", seeds, "number of sampled metrics (gp)");
  verify->add_option("--trials", trials, "measure pairs per metric (duality)");
  verify->add_option("--seed", seed, "base RNG seed");
  verify->add_option("--format", verify_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  verify->add_option("--out", verify_out, "write to file instead of stdout");
  verify->add_flag("--timings", timings, "include elapsed milliseconds");

  auto* exp = app.add_subcommand("export", "write polytopes, metrics, reports");
  std::string what;
  std::string exp_metric = "cyclo";
  std::string eps_value = "1/8";
  int exp_n = 4;
  std::string exp_format = "json";
  std::string exp_out;
  exp->add_option("--what", what,
                  "root | triangulation | kr | lip | zono | metric | tightness")
      ->required()
      ->check(CLI::IsMember({"root", "triangulation", "kr", "lip", "zono",
                             "metric", "tightness"}));
  exp->add_option("--metric", exp_metric, "uniform | clock | cyclo | eps")
      ->check(CLI::IsMember({"uniform", "clock", "cyclo", "eps"}));
  exp->add_option("--eps", eps_value, "epsilon for the eps metric, as p/q");
  exp->add_option("--n", exp_n, "size");
  exp->add_option("--format", exp_format, "json or off")
      ->check(CLI::IsMember({"json", "off"}));
  exp->add_option("--out", exp_out, "output path (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    const Caps caps = load_caps(config_path);
    (void)jobs; // orchestration is single-threaded; modules run sequentially

    if (faces->parsed()) {
      const int cap = caps.clamp("faces", 9, 9);
      if (faces_n > cap) {
        std::cerr << "cap exceeded: n = " << faces_n << " > " << cap << "\n";
        return kExitUsage;
      }
      const auto families = enumerate_admissible(
          faces_n, faces_k >= 0 ? std::optional<int>(faces_k) : std::nullopt);
      std::ostringstream os;
      if (count_only) {
        os << families.size() << "\n";
      } else if (faces_format == "json") {
        json rows = json::array();
        for (const auto& t : families) rows.push_back(family_to_json(t));
        os << rows.dump(2) << "\n";
      } else {
        for (const auto& t : families) {
          os << "{";
          for (size_t i = 0; i < t.arcs.size(); ++i)
            os << (i ? ", " : "") << arc_to_string(t.arcs[i]);
          os << "}\n";
        }
      }
      write_output(os.str(), faces_out);
      return kExitPass;
    }

    if (verify->parsed()) {
      const auto& spec = kVerifyChecks.at(check);
      const int cap = caps.clamp(check, spec.default_hi, spec.hard_limit);
      std::vector<int> sizes;
      if (verify_n > 0) {
        if (verify_n > cap) {
          std::cerr << "cap exceeded: n = " << verify_n << " > " << cap << "\n";
          return kExitUsage;
        }
        sizes.push_back(verify_n);
      } else {
        for (int n = spec.default_lo; n <= std::min(spec.default_hi, cap); ++n)
          sizes.push_back(n);
      }
      bool all_pass = true;
      std::ostringstream os;
      json out = json::array();
      for (const int n : sizes) {
        const auto rep = run_check(check, n, seeds, trials, seed);
        all_pass = all_pass && rep.passed();
        if (verify_format == "json")
          out.push_back(report_to_json(rep, timings));
        else
          os << report_to_table(rep, timings);
      }
      if (verify_format == "json") os << out.dump(2) << "\n";
      write_output(os.str(), verify_out);
      return all_pass ? kExitPass : kExitFail;
    }

    if (exp->parsed()) {
      const int cap = caps.clamp("export", 6, 6);
      if (exp_n > cap) {
        std::cerr << "cap exceeded: n = " << exp_n << " > " << cap << "\n";
        return kExitUsage;
      }
      std::ostringstream os;
      if (what == "metric") {
        if (exp_format == "off") {
          std::cerr << "metrics have no OFF form\n";
          return kExitUsage;
        }
        os << metric_to_json(metric_by_name(exp_metric, exp_n, eps_value)).dump(2)
           << "\n";
      } else if (what == "tightness") {
        if (exp_format == "off") {
          std::cerr << "tightness reports have no OFF form\n";
          return kExitUsage;
        }
        os << tightness_report_to_json(cyclic_edges(exp_n)).dump(2) << "\n";
      } else if (what == "triangulation") {
        const auto t = boundary_triangulation_via_phi(exp_n);
        if (exp_format == "off")
          os << to_off(t);
        else
          os << triangulation_to_json(t).dump(2) << "\n";
      } else {
        Hull hull;
        if (what == "root") {
          hull = build_root_polytope(exp_n).hull;
        } else if (what == "kr") {
          hull = kr_polytope(metric_by_name(exp_metric, exp_n, eps_value)).hull;
        } else if (what == "lip") {
          const auto v = vertex_enumeration(
              lipschitz_polytope(metric_by_name(exp_metric, exp_n, eps_value)));
          hull = hull_of(v.vertices, v.ambient);
        } else { // zono
          std::vector<QVec> hat;
          for (int i = 0; i < exp_n; ++i) {
            QVec v(exp_n, QQ(-1, exp_n));
            v[i] += 1;
            hat.push_back(std::move(v));
          }
          hull = hull_of(zono_delta(hat).vertices, ambient_zero_sum(exp_n));
        }
        if (exp_format == "off") {
          if (hull.vpoly.dim > 3) {
            std::cerr << "OFF export supports dimension <= 3\n";
            return kExitUsage;
          }
          os << to_off(hull);
        } else {
          os << polytope_to_json(hull.vpoly).dump(2) << "\n";
        }
      }
      write_output(os.str(), exp_out);
      return kExitPass;
    }
  } catch (const CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
