#include "hg/equidist.hpp"

#include <algorithm>
#include <cmath>

#include "hg/error.hpp"

namespace hg {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

double angle01(std::complex<double> z) {
  double a = std::arg(z) / kTau;
  a -= std::floor(a);
  if (a >= 1.0) a = 0.0;
  return a;
}

}  // namespace

std::vector<ComplexRoot> galois_orbit(const ZPoly& min_poly) {
  ZPoly f = trim(min_poly);
  if (degree(f) < 1) throw Error(ErrorCode::DegreeZero, "constant polynomial has no orbit");
  QPoly q = to_qpoly(f);
  if (degree(gcd(q, derivative(q))) > 0)
    throw Error(ErrorCode::NotSquarefree, "polynomial has repeated roots");
  return complex_roots(q);
}

double circle_discrepancy(const std::vector<std::complex<double>>& orbit) {
  size_t n = orbit.size();
  if (n == 0) throw Error(ErrorCode::DegreeZero, "empty orbit");
  std::vector<double> a(n);
  for (size_t i = 0; i < n; ++i) a[i] = angle01(orbit[i]);
  std::sort(a.begin(), a.end());
  double best = 0.0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      double len = a[j] - a[i];
      if (len < 0) len += 1.0;
      // closed-arc count from a[i] to a[j] going counterclockwise
      long cnt;
      if (j >= i)
        cnt = (long)(j - i + 1);
      else
        cnt = (long)(n - i + j + 1);
      best = std::max(best, (double)cnt / n - len);
      best = std::max(best, len - (double)(cnt - 2) / n);
    }
  return std::min(best, 1.0);
}

double ks_statistic(const std::vector<std::complex<double>>& orbit) {
  size_t n = orbit.size();
  if (n == 0) throw Error(ErrorCode::DegreeZero, "empty orbit");
  std::vector<double> a(n);
  for (size_t i = 0; i < n; ++i) a[i] = angle01(orbit[i]);
  std::sort(a.begin(), a.end());
  double d = 0.0;
  for (size_t i = 0; i < n; ++i) {
    d = std::max(d, (double)(i + 1) / n - a[i]);
    d = std::max(d, a[i] - (double)i / n);
  }
  return d;
}

double log_distance_stat(const ZPoly& min_poly) {
  ZPoly f = trim(min_poly);
  int n = degree(f);
  if (n < 1) throw Error(ErrorCode::DegreeZero, "constant polynomial");
  Int f1 = eval(f, Int(1));
  if (f1 == 0) throw Error(ErrorCode::OneIsRoot, "1 is a root");
  Rat r = Rat(abs(f1)) / Rat(abs(f.back()));
  r.canonicalize();
  return std::log(to_double(r)) / n;
}

double log_distance_stat_numeric(const ZPoly& min_poly) {
  auto roots = galois_orbit(min_poly);
  double s = 0;
  for (auto& r : roots) s += std::log(std::abs(1.0 - r.value));
  return s / (double)roots.size();
}

double truncated_log_distance(const ZPoly& min_poly, double eps) {
  auto roots = galois_orbit(min_poly);
  double s = 0;
  for (auto& r : roots) {
    double d = std::abs(1.0 - r.value);
    if (d > eps) s += std::log(d);
  }
  return s / (double)roots.size();
}

OrbitStats orbit_stats(const ZPoly& min_poly) {
  ZPoly f = trim(min_poly);
  OrbitStats st;
  st.degree = degree(f);
  auto roots = galois_orbit(f);
  std::vector<std::complex<double>> pts;
  for (auto& r : roots) pts.push_back(r.value);
  for (auto& z : pts) {
    st.angles.push_back(angle01(z));
    st.moduli.push_back(std::abs(z));
    st.modulus_spread = std::max(st.modulus_spread, std::abs(std::log(std::abs(z))));
  }
  std::sort(st.angles.begin(), st.angles.end());
  st.star_discrepancy = circle_discrepancy(pts);
  st.ks_stat = ks_statistic(pts);
  Int f1 = eval(f, Int(1));
  st.log_distance_stat = f1 == 0 ? 0.0 : log_distance_stat(f);
  // height of the divisor cut out by f: (1/n)(log|lc| + sum log+ |x_i|);
  // binomials x^n + c get the exact closed form
  bool binomial = true;
  for (int i = 1; i < st.degree; ++i)
    if (f[i] != 0) binomial = false;
  if (binomial && f.back() == 1) {
    double c = std::abs(mpz_get_d(f[0].get_mpz_t()));
    st.height = c >= 1 ? std::log(c) / st.degree : 0.0;
    if (c > 0 && c < 1) st.height = 0.0;
  } else {
    double s = std::log(std::abs(mpz_get_d(f.back().get_mpz_t())));
    for (auto& z : pts) {
      double a = std::abs(z);
      if (a > 1) s += std::log(a);
    }
    st.height = s / st.degree;
  }
  return st;
}

std::vector<OrbitStats> bilu_report(const std::vector<ZPoly>& sequence) {
  std::vector<OrbitStats> out;
  for (size_t i = 0; i < sequence.size(); ++i) {
    OrbitStats st = orbit_stats(sequence[i]);
    if (i > 0) {
      const OrbitStats& prev = out.back();
      // flag rows where the sequence hypotheses (deg up, height down) stall
      st.hypothesis_flag =
          st.degree <= prev.degree && st.height >= prev.height - 1e-12 && st.height > 1e-9;
    } else {
      // a single rational non-unit point can never equidistribute
      st.hypothesis_flag = st.degree == 1 && st.height > 1e-9;
    }
    out.push_back(std::move(st));
  }
  return out;
}

}  // namespace hg
