#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hg/checks.hpp"
#include "hg/error.hpp"
#include "hg/heights.hpp"
#include "hg/scan.hpp"
#include "hg/serialize.hpp"

namespace {

using namespace hg;

// exit codes: 0 ok, 1 property failure, 2 usage/parse, 3 budget exhaustion
int error_exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Usage:
      return 2;
    case ErrorCode::BudgetExceeded:
    case ErrorCode::BudgetExceededNoUpper:
      return 3;
    default:
      return 1;
  }
}

void report_csv(std::ostream& os, const std::string& quantity, const HeightReport& r) {
  for (auto& row : r.rows)
    os << quantity << "," << row.place_id << "," << row.n_v << "," << csv_num(row.lower)
       << "," << csv_num(row.upper) << "," << (row.exact ? 1 : 0) << "\n";
  os << quantity << ",total," << r.degree_normalizer << "," << csv_num(r.total.lower) << ","
     << csv_num(r.total.upper) << "," << (r.total.exact ? 1 : 0) << "\n";
}

int cmd_height(const std::string& input, int n_max, size_t budget, double tol,
               const std::string& format) {
  MatrixSet F = load_matrix_set(input);
  HeightReport h = set_height(F);
  HeightReport e = minimal_height(F, tol);
  bool truncated = false;
  LogBounds hhat{0.0, std::numeric_limits<double>::infinity(), false};
  try {
    hhat = normalized_height_bounds(F, n_max, budget);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::BudgetExceeded &&
        err.code() != ErrorCode::BudgetExceededNoUpper)
      throw;
    truncated = true;  // partial report: h and e stand, hhat upper is open
  }
  if (format == "csv") {
    std::cout << "# hg-v1 height\nquantity,place,n_v,lower,upper,exact\n";
    report_csv(std::cout, "h", h);
    report_csv(std::cout, "e", e);
    std::cout << "hhat,total," << F.field->degree() << "," << csv_num(hhat.lower) << ","
              << csv_num(hhat.upper) << "," << (hhat.exact ? 1 : 0) << "\n";
    if (truncated) std::cout << "# truncated: power-set budget exhausted\n";
  } else {
    Json out{{"version", "hg-v1"},
             {"h", height_report_to_json(h)},
             {"e", height_report_to_json(e)},
             {"hhat", logbounds_to_json(hhat)},
             {"truncated", truncated}};
    std::cout << out.dump(2) << "\n";
  }
  return truncated ? 3 : 0;
}

int cmd_gap_scan(const GapScanConfig& cfg) {
  GapScanResult r = gap_scan(cfg);
  std::cout << r.csv;
  return 0;
}

int cmd_check(const std::string& suite, uint64_t seed) {
  std::vector<CheckResult> results;
  if (suite == "all") {
    results = run_all_checks(seed);
  } else {
    if (!has_check(suite)) throw Error(ErrorCode::Usage, "unknown suite: " + suite);
    results.push_back(run_check(suite, seed));
  }
  bool ok = true;
  for (auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.name;
    if (!r.details.empty()) std::cout << "  [" << r.details << "]";
    std::cout << "\n";
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

int cmd_bilu(BiluConfig cfg, const std::string& input) {
  if (cfg.family == "custom") {
    std::ifstream in(input);
    if (!in) throw Error(ErrorCode::Usage, "cannot open polynomial list: " + input);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      ZPoly f;
      std::string tok;
      while (ls >> tok) {
        try {
          f.emplace_back(tok);
        } catch (const std::invalid_argument&) {
          throw Error(ErrorCode::Usage, "bad coefficient: " + tok);
        }
      }
      if (!f.empty()) cfg.custom.push_back(std::move(f));
    }
    if (cfg.custom.empty()) throw Error(ErrorCode::Usage, "no polynomials in " + input);
  }
  std::cout << bilu_csv(bilu_family(cfg));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adelic height calculus for finite matrix sets"};
  app.require_subcommand(1);

  std::string input, format = "json", suite = "all", family = "pow2-roots";
  int n_max = 12, k_min = 2, k_max = 6;
  size_t budget = 4096;
  double tol = 1e-6;
  uint64_t seed = 7;
  GapScanConfig scan_cfg;
  std::string ring = "Z";
  std::vector<unsigned long> primes = {5, 11, 23};

  CLI::App* height = app.add_subcommand("height", "h, e and normalized-height brackets");
  height->add_option("--input", input, "matrix set JSON file")->required();
  height->add_option("--n-max", n_max, "power-set depth");
  height->add_option("--budget", budget, "power-set size budget");
  height->add_option("--tol", tol, "archimedean optimizer tolerance");
  height->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* scan = app.add_subcommand("gap-scan", "sample pairs and bracket their heights");
  scan->add_option("--count", scan_cfg.count, "number of samples");
  scan->add_option("--seed", scan_cfg.seed, "sampler seed");
  scan->add_option("--threads", scan_cfg.threads, "worker threads");
  scan->add_option("--entry-height", scan_cfg.entry_height, "elementary parameter bound");
  scan->add_option("--ring", ring, "ground ring: Z or Zi")
      ->check(CLI::IsMember({"Z", "Zi"}));
  scan->add_flag("--upper-triangular", scan_cfg.upper_triangular,
                 "restrict the sampler to upper-triangular words");
  scan->add_option("--n-max", scan_cfg.n_max, "power-set depth");
  scan->add_option("--budget", scan_cfg.budget, "power-set size budget");

  CLI::App* check = app.add_subcommand("check", "run a named property suite");
  check->add_option("--suite", suite, "suite name or 'all'");
  check->add_option("--seed", seed, "suite seed");

  CLI::App* bilu = app.add_subcommand("bilu", "equidistribution statistics report");
  bilu->add_option("--family", family, "pow2-roots, cyclotomic or custom")
      ->check(CLI::IsMember({"pow2-roots", "cyclotomic", "custom"}));
  bilu->add_option("--k-min", k_min, "first exponent for pow2-roots");
  bilu->add_option("--k-max", k_max, "last exponent for pow2-roots");
  bilu->add_option("--primes", primes, "primes for the cyclotomic family");
  bilu->add_option("--input", input, "polynomial list file for the custom family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (height->parsed()) return cmd_height(input, n_max, budget, tol, format);
    if (scan->parsed()) {
      scan_cfg.gaussian = ring == "Zi";
      return cmd_gap_scan(scan_cfg);
    }
    if (check->parsed()) return cmd_check(suite, seed);
    if (bilu->parsed()) {
      BiluConfig cfg;
      cfg.family = family;
      cfg.k_min = k_min;
      cfg.k_max = k_max;
      cfg.primes = primes;
      return cmd_bilu(cfg, input);
    }
  } catch (const hg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return error_exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
