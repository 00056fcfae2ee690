// End-to-end tests of the revlab binary: spawn the real executable, inspect
// its files and exit codes. The binary path arrives as argv[1].

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string g_bin;
fs::path g_dir;

int run(const std::string& args) {
  std::string cmd = g_bin + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct Row {
  double x, re, im;
};

std::vector<Row> read_csv(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  if (!std::getline(in, line) || line != "x,re,im") throw std::runtime_error("bad header in " + p.string());
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    Row r{};
    char c;
    std::istringstream row(line);
    row >> r.x >> c >> r.re >> c >> r.im;
    rows.push_back(r);
  }
  return rows;
}

struct TestCase {
  const char* name;
  std::function<bool()> fn;
};

bool test_evolve_csv_contract() {
  if (run("--quiet evolve --monomial 3 --theta 1/4 --time 1/3 --modes 128 --out e1") != 0) return false;
  auto rows = read_csv(g_dir / "e1.csv");
  if (rows.size() != 512) return false;
  for (size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].x < 0.0 || rows[k].x >= 2.0 * M_PI) return false;
    if (k > 0 && rows[k].x <= rows[k - 1].x) return false;
  }
  json manifest = json::parse(slurp(g_dir / "e1.json"));
  return manifest["command"] == "evolve" && manifest["parameters"]["N"] == 512 &&
         manifest["norms"]["relative_drift"].get<double>() < 1e-12;
}

bool test_evolve_is_deterministic() {
  std::string flags = "--quiet evolve --monomial 4 --theta sqrt(2)/4 --time 1/3 --modes 256";
  if (run(flags + " --out d1") != 0) return false;
  if (run(flags + " --out d2") != 0) return false;
  return slurp(g_dir / "d1.csv") == slurp(g_dir / "d2.csv") && !slurp(g_dir / "d1.csv").empty();
}

bool test_composition_profile_matches_direct() {
  // figure parameter sets of order >= 3; pointwise profile gap below 1e-8
  for (const std::string theta : {"1/4", "sqrt(2)/4"}) {
    for (int n : {3, 4, 5}) {
      std::string base = "--quiet evolve --monomial " + std::to_string(n) + " --theta " + theta +
                         " --time 1/3 --modes 1024 ";
      if (run(base + "--method direct --out cd") != 0) return false;
      if (run(base + "--method composition --out cc") != 0) return false;
      auto a = read_csv(g_dir / "cd.csv");
      auto b = read_csv(g_dir / "cc.csv");
      if (a.size() != b.size()) return false;
      double worst = 0.0;
      for (size_t k = 0; k < a.size(); ++k)
        worst = std::max(worst, std::hypot(a[k].re - b[k].re, a[k].im - b[k].im));
      if (worst >= 1e-8) {
        std::cerr << "  profile gap " << worst << " at n=" << n << " theta=" << theta << "\n";
        return false;
      }
    }
  }
  return true;
}

bool test_second_order_correspondence_route() {
  std::string base = "--quiet evolve --monomial 2 --theta sqrt(2)/4 --time 1/3 --modes 512 ";
  if (run(base + "--method correspondence --out so") != 0) return false;
  json manifest = json::parse(slurp(g_dir / "so.json"));
  return manifest["residuals"]["method_vs_direct"].get<double>() < 1e-10;
}

bool test_weights_reference_values() {
  if (run("weights --order 2 --time 1/2 --out w.json") != 0) return false;
  json w = json::parse(slurp(g_dir / "w.json"));
  if (w["parameters"]["q"] != 2) return false;
  double w0 = std::hypot(w["weights"][0]["re"].get<double>(), w["weights"][0]["im"].get<double>());
  double w1re = w["weights"][1]["re"].get<double>();
  if (!(w0 < 1e-14 && std::abs(w1re - 1.0) < 1e-14)) return false;
  if (w["residue_max_error"].get<double>() >= 1e-14) return false;

  // non-coprime time fractions reduce instead of failing
  if (run("weights --order 3 --time 2/6 --out w2.json") != 0) return false;
  json w2 = json::parse(slurp(g_dir / "w2.json"));
  return w2["parameters"]["q"] == 3;
}

bool test_verify_gate_exit_codes() {
  if (run("--quiet verify --suite revival --n-max 3 --q-max 12 --out v.json") != 0) return false;
  json v = json::parse(slurp(g_dir / "v.json"));
  return v["pass"] == true;
}

bool test_bad_arguments_are_rejected() {
  if (run("--quiet evolve --theta 5/4 --out bad1") == 0) return false;
  if (run("--quiet evolve --theta bogus --out bad2") == 0) return false;
  if (run("--quiet evolve --monomial 1 --out bad3") == 0) return false;
  if (run("--quiet evolve --monomial 2 --method composition --out bad4") == 0) return false;
  return true;
}

bool test_figures_panel_one() {
  if (run("--quiet figures --which 1 --outdir figs1") != 0) return false;
  auto rows = read_csv(g_dir / "figs1" / "fig1_initial.csv");
  json manifest = json::parse(slurp(g_dir / "figs1" / "figures_manifest.json"));
  int plateau = 0;
  for (const auto& r : rows) plateau += r.re == 1.0 ? 1 : 0;
  return rows.size() == 4096 && plateau > 2000 && manifest["panels"].size() == 1;
}

bool test_figures_all_panels() {
  if (run("--quiet figures --which all --outdir figsall --modes 128") != 0) return false;
  json manifest = json::parse(slurp(g_dir / "figsall" / "figures_manifest.json"));
  if (manifest["panels"].size() != 9) return false;
  for (const auto& p : manifest["panels"])
    if (!fs::exists(p["csv"].get<std::string>())) return false;
  return true;
}

bool test_profile_csv_round_trips_as_initial() {
  if (run("--quiet figures --which 1 --outdir boxcsv") != 0) return false;
  std::string init = (g_dir / "boxcsv" / "fig1_initial.csv").string();
  if (run("--quiet evolve --monomial 3 --theta 1/4 --time 1/3 --modes 256 --initial " + init +
          " --out fromfile") != 0)
    return false;
  if (run("--quiet evolve --monomial 3 --theta 1/4 --time 1/3 --modes 256 --initial box --out frombox") != 0)
    return false;
  auto a = read_csv(g_dir / "fromfile.csv");
  auto b = read_csv(g_dir / "frombox.csv");
  double worst = 0.0;
  for (size_t k = 0; k < a.size(); ++k)
    worst = std::max(worst, std::hypot(a[k].re - b[k].re, a[k].im - b[k].im));
  // closed-form vs quadrature coefficients differ at the O(1/N) level
  return worst < 2e-3;
}

bool test_nls_zero_time_echoes() {
  if (run("--quiet nls --theta 1/4 --T 0 --modes 64 --initial gaussian --out n0") != 0) return false;
  json manifest = json::parse(slurp(g_dir / "n0.json"));
  return manifest["conservation"]["relative_drift"].get<double>() < 1e-14;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <revlab binary>\n";
    return 2;
  }
  g_bin = argv[1];
  g_dir = fs::temp_directory_path() / "revlab_cli_tests";
  fs::remove_all(g_dir);
  fs::create_directories(g_dir);
  fs::current_path(g_dir);

  std::vector<TestCase> cases = {
      {"evolve CSV contract", test_evolve_csv_contract},
      {"evolve determinism", test_evolve_is_deterministic},
      {"composition profile matches direct", test_composition_profile_matches_direct},
      {"second-order correspondence route", test_second_order_correspondence_route},
      {"weights reference values", test_weights_reference_values},
      {"verify gate exit codes", test_verify_gate_exit_codes},
      {"bad arguments rejected", test_bad_arguments_are_rejected},
      {"figures panel 1", test_figures_panel_one},
      {"figures all panels", test_figures_all_panels},
      {"profile csv round trips as initial", test_profile_csv_round_trips_as_initial},
      {"nls zero time echoes", test_nls_zero_time_echoes},
  };

  int failures = 0;
  for (const auto& tc : cases) {
    bool ok = false;
    try {
      ok = tc.fn();
    } catch (const std::exception& e) {
      std::cerr << "  exception: " << e.what() << "\n";
    }
    std::cout << (ok ? "pass" : "FAIL") << ": " << tc.name << "\n";
    failures += ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
