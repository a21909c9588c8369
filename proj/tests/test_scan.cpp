#include <doctest.h>

#include <cmath>

#include "hg/equidist.hpp"
#include "hg/error.hpp"
#include "hg/scan.hpp"

using namespace hg;

TEST_CASE("gap scan is deterministic and well formed") {
  GapScanConfig cfg;
  cfg.count = 6;
  cfg.seed = 123;
  cfg.n_max = 8;
  GapScanResult a = gap_scan(cfg);
  GapScanResult b = gap_scan(cfg);
  CHECK(a.csv == b.csv);
  CHECK(a.rows.size() == 6);
  for (auto& r : a.rows) {
    CHECK(!r.failed);
    CHECK(r.hhat.lower <= r.hhat.upper + 1e-12);
  }
}

TEST_CASE("empty scan still carries header and summary") {
  GapScanConfig cfg;
  cfg.count = 0;
  GapScanResult r = gap_scan(cfg);
  CHECK(r.rows.empty());
  CHECK(r.csv.find("# hg-v1 gap-scan") == 0);
  CHECK(r.csv.find("# summary") != std::string::npos);
  CHECK(r.csv.find("id,proxy") != std::string::npos);
}

TEST_CASE("thread count does not change the output") {
  GapScanConfig one;
  one.count = 10;
  one.seed = 9;
  one.n_max = 8;
  GapScanConfig many = one;
  many.threads = 4;
  CHECK(gap_scan(one).csv == gap_scan(many).csv);
}

TEST_CASE("power-of-two root family") {
  BiluConfig cfg;
  cfg.family = "pow2-roots";
  cfg.k_min = 2;
  cfg.k_max = 6;
  auto polys = bilu_family(cfg);
  REQUIRE(polys.size() == 5);
  auto rows = bilu_report(polys);
  for (int j = 0; j < 5; ++j) {
    int k = 2 + j;
    double n = double(std::size_t(1) << k);
    CHECK(rows[j].degree == (1 << k));
    CHECK(rows[j].height == doctest::Approx(std::log(2.0) / n).epsilon(1e-12));
    CHECK(rows[j].star_discrepancy <= 2.0 / n + 1e-12);
    CHECK(rows[j].log_distance_stat == 0.0);
  }
  std::string csv = bilu_csv(polys);
  CHECK(csv.find("degree,height,discrepancy") != std::string::npos);
}

TEST_CASE("cyclotomic family heights vanish") {
  BiluConfig cfg;
  cfg.family = "cyclotomic";
  cfg.primes = {5, 11};
  auto rows = bilu_report(bilu_family(cfg));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].degree == 4);
  CHECK(rows[1].degree == 10);
  CHECK(rows[0].height == 0.0);
  CHECK(rows[1].height == 0.0);
}

TEST_CASE("unknown family is a usage error") {
  BiluConfig cfg;
  cfg.family = "nonsense";
  CHECK_THROWS_AS(bilu_family(cfg), Error);
}
