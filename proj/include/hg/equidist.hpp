#ifndef HG_EQUIDIST_HPP
#define HG_EQUIDIST_HPP

#include <complex>
#include <vector>

#include "hg/poly.hpp"

namespace hg {

struct OrbitStats {
  int degree = 0;
  std::vector<double> angles;  // arguments in [0,1), sorted
  std::vector<double> moduli;
  double star_discrepancy = 0.0;
  double ks_stat = 0.0;
  double log_distance_stat = 0.0;
  double height = 0.0;
  double modulus_spread = 0.0;  // max |log|x_i||
  bool hypothesis_flag = false;  // sequence trend violates h -> 0, deg -> inf
};

// All complex roots with inclusion radii; the polynomial must be squarefree.
std::vector<ComplexRoot> galois_orbit(const ZPoly& min_poly);

// Circle star discrepancy: sup over arcs (anchored at sample angles) of
// |empirical mass - arc length|.
double circle_discrepancy(const std::vector<std::complex<double>>& orbit);

// Kolmogorov-Smirnov statistic of the arguments against the uniform law.
double ks_statistic(const std::vector<std::complex<double>>& orbit);

// (1/deg) sum log|1 - x_i| = (1/deg) log|f(1)/lc(f)|, exact integer route.
double log_distance_stat(const ZPoly& min_poly);
// numeric cross-check summing over the orbit
double log_distance_stat_numeric(const ZPoly& min_poly);
// truncated variant: only the terms with |1 - x_i| > eps
double truncated_log_distance(const ZPoly& min_poly, double eps);

OrbitStats orbit_stats(const ZPoly& min_poly);

// Per-element statistics for a sequence of squarefree polynomials, with the
// trend flags filled in (data, not proof).
std::vector<OrbitStats> bilu_report(const std::vector<ZPoly>& sequence);

}  // namespace hg

#endif
