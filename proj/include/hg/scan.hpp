#ifndef HG_SCAN_HPP
#define HG_SCAN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hg/equidist.hpp"
#include "hg/local.hpp"

namespace hg {

// Sampler + job parameters for the empirical gap scan over SL_2 pairs.
struct GapScanConfig {
  int count = 100;
  uint64_t seed = 1;
  int threads = 1;
  int entry_height = 3;           // elementary parameters drawn from [-H, H] \ {0}
  bool gaussian = false;          // ground ring Z[i] instead of Z
  bool upper_triangular = false;  // restrict to upper-triangular samples
  int n_max = 12;
  size_t budget = 4096;
};

struct GapScanRow {
  int id = 0;
  std::string proxy;    // "none" or the solvable proxy that fired
  LogBounds hhat;
  std::string witness;  // non-torsion word, when one exists
  bool truncated = false;
  bool failed = false;
  std::string error;
};

struct GapScanResult {
  std::vector<GapScanRow> rows;
  std::string csv;  // full deterministic report, header + rows + summary
  int nonsolvable_count = 0;
  double min_lower_nonsolvable = 0.0;  // meaningful when nonsolvable_count > 0
};

// Samples `count` unimodular pairs by random words in the elementary matrices
// E12(x), E21(x), classifies each by the structure-module solvability proxies,
// and brackets the normalized height. Output is byte-identical for a fixed
// config at any thread count.
GapScanResult gap_scan(const GapScanConfig& cfg);

// Deterministic sampler used by gap_scan, exposed for reuse: the i-th pair of
// the stream defined by (seed, entry_height, gaussian, upper_triangular).
MatrixSet gap_scan_sample(const GapScanConfig& cfg, int id);

struct BiluConfig {
  std::string family = "pow2-roots";  // pow2-roots | cyclotomic | custom
  int k_min = 2, k_max = 6;           // pow2-roots: x^(2^k) - 2
  std::vector<unsigned long> primes = {5, 11, 23};
  std::vector<ZPoly> custom;
};

// The polynomial sequence named by the config; Error(Usage) on unknown family.
std::vector<ZPoly> bilu_family(const BiluConfig& cfg);

// CSV report (header + one row per polynomial) of the equidistribution stats.
std::string bilu_csv(const std::vector<ZPoly>& sequence);

// Fixed-precision decimal used by every CSV writer, so reports compare bytewise.
std::string csv_num(double x);

}  // namespace hg

#endif
