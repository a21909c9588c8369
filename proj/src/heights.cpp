#include "hg/heights.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hg/error.hpp"

namespace hg {

namespace {

constexpr unsigned kPrec = 64;

double ln_int(const Int& p) { return std::log(mpz_get_d(p.get_mpz_t())); }

// primes where some entry can have absolute value > 1 (denominator primes)
std::vector<Int> set_contributing_primes(const MatrixSet& F, const std::vector<Int>& extra) {
  std::set<Int> primes(extra.begin(), extra.end());
  for (auto& m : F.mats)
    for (int i = 0; i < F.d; ++i)
      for (int j = 0; j < F.d; ++j) {
        auto [H, c] = clear_denominators(
            QPoly(m.at(i, j).coeffs().begin(), m.at(i, j).coeffs().end()));
        if (c != 1)
          for (auto& [p, e] : factorize(c)) primes.insert(p);
      }
  return {primes.begin(), primes.end()};
}

void finish_report(HeightReport& r) {
  r.total = {0, 0, false};
  r.finite_part = {0, 0, true};
  r.infinite_part = {0, 0, false};
  bool all_exact = true;
  for (auto& row : r.rows) {
    double lo = row.lower / r.degree_normalizer;
    double hi = row.upper / r.degree_normalizer;
    r.total.lower += lo;
    r.total.upper += hi;
    if (row.place_id.rfind("arch", 0) == 0) {
      r.infinite_part.lower += lo;
      r.infinite_part.upper += hi;
    } else {
      r.finite_part.lower += lo;
      r.finite_part.upper += hi;
    }
    all_exact = all_exact && row.exact;
  }
  r.total.exact = all_exact;
  r.infinite_part.exact = r.total.exact || r.infinite_part.upper - r.infinite_part.lower <= 1e-12;
}

}  // namespace

HeightReport set_height(const MatrixSet& F) {
  F.validate();
  const FieldPtr& K = F.field;
  HeightReport r;
  r.degree_normalizer = K->degree();
  int k = 0;
  for (auto& v : K->arch_places()) {
    double nrm = set_norm(F, LocalModel::archimedean(v));
    double c = v.n_v * std::max(0.0, std::log(nrm));
    r.rows.push_back({"arch:" + std::to_string(k), v.n_v, c, c, false});
    ++k;
  }
  for (auto& p : set_contributing_primes(F, {})) {
    for (auto& v : K->finite_places(p, kPrec)) {
      Rat l = set_norm_logp(F, v);
      double c = l > 0 ? v.local_degree * to_double(l) * ln_int(p) : 0.0;
      r.rows.push_back({"p:" + to_string(p) + ":" + std::to_string(v.index_above_p),
                        v.local_degree, c, c, true});
    }
  }
  finish_report(r);
  return r;
}

HeightReport minimal_height(const MatrixSet& F, double arch_tol,
                            const std::vector<Int>& extra_primes) {
  F.validate();
  const FieldPtr& K = F.field;
  HeightReport r;
  r.degree_normalizer = K->degree();
  int k = 0;
  for (auto& v : K->arch_places()) {
    ArchMinNorm mn = minimal_norm_arch(F, v, arch_tol);
    double lo = v.n_v * std::max(0.0, mn.bounds.lower);
    double hi = v.n_v * std::max(0.0, mn.bounds.upper);
    r.rows.push_back({"arch:" + std::to_string(k), v.n_v, lo, hi, mn.bounds.exact});
    ++k;
  }
  for (auto& p : set_contributing_primes(F, extra_primes)) {
    for (auto& v : K->finite_places(p, kPrec)) {
      Rat e = minimal_norm_padic_logp(F, v);
      double c = e > 0 ? v.local_degree * to_double(e) * ln_int(p) : 0.0;
      r.rows.push_back({"p:" + to_string(p) + ":" + std::to_string(v.index_above_p),
                        v.local_degree, c, c, true});
    }
  }
  finish_report(r);
  return r;
}

LogBounds normalized_height_bounds(const MatrixSet& F, int n_max, size_t budget) {
  F.validate();
  const FieldPtr& K = F.field;
  double deg = K->degree();
  LogBounds out{0.0, 0.0, false};
  for (auto& v : K->arch_places()) {
    LogBounds b = spectral_radius_bounds(F, LocalModel::archimedean(v), n_max, budget);
    out.lower += v.n_v * std::max(0.0, b.lower) / deg;
    out.upper += v.n_v * std::max(0.0, b.upper) / deg;
  }
  for (auto& p : set_contributing_primes(F, {})) {
    for (auto& v : K->finite_places(p, kPrec)) {
      Rat e = minimal_norm_padic_logp(F, v, budget);
      double c = e > 0 ? v.local_degree * to_double(e) * ln_int(p) / deg : 0.0;
      out.lower += c;
      out.upper += c;
    }
  }
  // the inf-over-n characterization tightens the upper bound
  PowerSetResult ps = power_set(F, 1, budget);
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) ps = power_set_step(ps, F, budget);
    if (ps.truncated) break;
    double hn = set_height(ps.set).total.upper / n;
    if (hn < out.upper) out.upper = hn;
  }
  if (out.lower > out.upper) out.lower = out.upper;
  out.exact = out.upper - out.lower <= 1e-12;
  return out;
}

double truncated_arch_height(const FieldElement& x, double A) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "truncated height of zero");
  const FieldPtr& K = x.field();
  double s = 0;
  for (auto& v : K->arch_places()) {
    double a = abs_value(x, v);
    if (a >= A && a > 1) s += v.n_v * std::log(a);
  }
  return s / K->degree();
}

QPoly norm_form(const FieldPtr& K, const KPoly& c) {
  if (c.empty()) return {};
  int m = (int)c.size() - 1;
  int n = K->degree();
  if (m * n > 64)
    throw Error(ErrorCode::FactorizationUnsupported, "norm form degree too large");
  if (n == 1) {
    QPoly q = kto_q(c);
    return q;
  }
  // evaluate Res_y(f(y), C(x=k, y)) at m*n+1 points and interpolate
  int D = m * n;
  // formal y-degree of C: number field coefficients have length n
  int s = n - 1;
  std::vector<Rat> xs, vals;
  for (int k = 0; k <= D; ++k) {
    // C(k, y): sum_i coeffs_i(y) * k^i
    QPoly cy(n, Rat(0));
    Rat kp = 1;
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; j < n; ++j) cy[j] += c[i].coeffs()[j] * kp;
      kp *= k;
    }
    auto [Z, den] = clear_denominators(cy);
    std::vector<Int> padded(s + 1, Int(0));
    for (size_t j = 0; j < Z.size(); ++j) padded[j] = Z[j];
    Int res = resultant_formal(K->min_poly(), padded, s);
    Rat v = Rat(res) / Rat(pow(Int(den), (unsigned long)n));
    v.canonicalize();
    xs.push_back(Rat((long)k));
    vals.push_back(v);
  }
  // Newton divided differences
  std::vector<Rat> coef = vals;
  for (int j = 1; j <= D; ++j)
    for (int i = D; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
      coef[i].canonicalize();
    }
  QPoly poly{coef[D]};
  for (int i = D - 1; i >= 0; --i) {
    // poly = poly*(x - xs[i]) + coef[i]
    QPoly shifted(poly.size() + 1, Rat(0));
    for (size_t t = 0; t < poly.size(); ++t) {
      shifted[t + 1] += poly[t];
      shifted[t] -= poly[t] * xs[i];
    }
    shifted[0] += coef[i];
    poly = trim(std::move(shifted));
  }
  return poly;
}

std::vector<EigenvalueHeightRow> eigenvalue_heights(const MatrixSet& F, int word_len) {
  F.validate();
  const FieldPtr& K = F.field;
  std::vector<EigenvalueHeightRow> out;
  std::set<std::string> seen_products;
  std::vector<std::pair<std::vector<int>, KMatrix>> frontier;
  frontier.push_back({{}, KMatrix::identity(K, F.d)});
  for (int len = 1; len <= word_len; ++len) {
    std::vector<std::pair<std::vector<int>, KMatrix>> next;
    for (auto& [w, prod] : frontier) {
      for (int l = 0; l < (int)F.mats.size(); ++l) {
        std::vector<int> w2 = w;
        w2.push_back(l);
        KMatrix p2 = prod * F.mats[(size_t)l];
        next.push_back({w2, p2});
      }
    }
    frontier = std::move(next);
    for (auto& [w, prod] : frontier) {
      std::string key = prod.key();
      if (seen_products.count(key)) continue;
      seen_products.insert(key);
      KPoly chi = prod.charpoly();
      QPoly nf = norm_form(K, chi);
      ZPoly z = primitive_part(clear_denominators(nf).first);
      if (z.back() < 0)
        for (auto& c : z) c = -c;
      std::set<std::string> seen_factors;
      // numeric eigenvalues at the first archimedean place, for filtering
      Eigen::MatrixXcd emb = prod.embed(K->arch_places()[0]);
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(emb);
      for (auto& fac : factor_over_z(z)) {
        if (degree(fac) < 1) continue;
        ZPoly g = fac;
        if (g.back() < 0)
          for (auto& c : g) c = -c;
        std::string fk = to_string(to_qpoly(g));
        if (seen_factors.count(fk)) continue;
        bool hits = false;
        for (int e = 0; e < F.d; ++e) {
          std::complex<double> lam = es.eigenvalues()(e);
          double scale = 1.0 + std::pow(std::abs(lam), (double)degree(g));
          if (std::abs(eval(to_qpoly(g), lam)) < 1e-6 * scale *
                                                     std::abs(mpz_get_d(g.back().get_mpz_t()))) {
            hits = true;
            break;
          }
        }
        if (!hits) continue;
        seen_factors.insert(fk);
        out.push_back({w, g, mahler_height_oracle(g)});
      }
    }
  }
  return out;
}

}  // namespace hg
