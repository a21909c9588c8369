#include <doctest.h>

#include <cmath>
#include <complex>

#include "hg/equidist.hpp"
#include "hg/error.hpp"
#include "hg/poly.hpp"

using namespace hg;

TEST_CASE("circle discrepancy of exact configurations") {
  using C = std::complex<double>;
  std::vector<C> one = {C(1.0, 0.0)};
  CHECK(circle_discrepancy(one) == doctest::Approx(1.0));
  int n = 8;
  std::vector<C> equi;
  for (int k = 0; k < n; ++k)
    equi.push_back(std::polar(1.0, 2 * M_PI * k / n));
  CHECK(circle_discrepancy(equi) == doctest::Approx(1.0 / n));
  CHECK(ks_statistic(equi) == doctest::Approx(1.0 / n));
}

TEST_CASE("log distance statistic, exact route") {
  // root 3: log|1 - 3| = log 2
  CHECK(log_distance_stat(ZPoly{-3, 1}) == doctest::Approx(std::log(2.0)));
  // x^2 - 2: (1 - sqrt2)(1 + sqrt2) = -1, so the statistic vanishes
  CHECK(log_distance_stat(ZPoly{-2, 0, 1}) == 0.0);
  CHECK(std::fabs(log_distance_stat_numeric(ZPoly{-2, 0, 1})) < 1e-10);
  // agreement between the integer route and the orbit sum
  ZPoly f = {-1, 3, 0, 1};
  CHECK(log_distance_stat(f) == doctest::Approx(log_distance_stat_numeric(f)).epsilon(1e-9));
}

TEST_CASE("galois orbit of a cyclotomic polynomial") {
  auto orbit = galois_orbit(cyclotomic(5));
  REQUIRE(orbit.size() == 4);
  for (auto& z : orbit) {
    CHECK(std::fabs(std::abs(z.value) - 1.0) < 1e-10);
    CHECK(z.radius < 1e-6);
  }
}

TEST_CASE("orbit statistics of x^4 - 2") {
  OrbitStats s = orbit_stats(ZPoly{-2, 0, 0, 0, 1});
  CHECK(s.degree == 4);
  CHECK(s.height == doctest::Approx(std::log(2.0) / 4).epsilon(1e-12));
  CHECK(s.star_discrepancy <= 0.5 + 1e-12);
  CHECK(s.modulus_spread == doctest::Approx(std::log(2.0) / 4));
}

TEST_CASE("bilu report flags a stalled sequence") {
  // heights bounded away from zero: the trend hypothesis fails
  std::vector<ZPoly> bad = {{-2, 1}, {-2, 1}, {-2, 1}};
  auto rep = bilu_report(bad);
  REQUIRE(rep.size() == 3);
  CHECK(rep.back().hypothesis_flag);
  // shrinking heights with growing degree: no flag on the tail
  std::vector<ZPoly> good;
  for (int k = 2; k <= 6; ++k) {
    ZPoly f(std::size_t(1) << k, Int(0));
    f[0] = -2;
    f.push_back(1);
    good.push_back(f);
  }
  auto rep2 = bilu_report(good);
  CHECK(!rep2.back().hypothesis_flag);
}

TEST_CASE("rejects degenerate inputs") {
  CHECK_THROWS_AS(galois_orbit(ZPoly{1, 2, 1}), Error);   // (x+1)^2 not squarefree
  CHECK_THROWS_AS(log_distance_stat(ZPoly{-1, 1}), Error);  // 1 is a root
}
