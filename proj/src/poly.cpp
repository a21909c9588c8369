#include "hg/poly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <sstream>

#include "hg/error.hpp"

namespace hg {

QPoly trim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

ZPoly trim(ZPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

QPoly to_qpoly(const ZPoly& p) {
  QPoly q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[i] = Rat(p[i]);
  return q;
}

std::pair<ZPoly, Int> clear_denominators(const QPoly& p) {
  Int c = 1;
  for (auto& q : p) mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), q.get_den().get_mpz_t());
  ZPoly h(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    Rat v = p[i] * Rat(c);
    h[i] = v.get_num();
  }
  return {trim(std::move(h)), c};
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return trim(std::move(r));
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return trim(std::move(r));
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(std::move(r));
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(std::move(r));
}

QPoly scale(const QPoly& a, const Rat& s) {
  if (s == 0) return {};
  QPoly r = a;
  for (auto& c : r) c *= s;
  return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw Error(ErrorCode::DivideByZero, "polynomial division by zero");
  QPoly r = a;
  QPoly q;
  int db = degree(b);
  if (degree(a) >= db) q.assign(a.size() - b.size() + 1, Rat(0));
  while ((int)r.size() - 1 >= db && !r.empty()) {
    Rat f = r.back() / b.back();
    int shift = (int)r.size() - 1 - db;
    q[shift] = f;
    for (int i = 0; i <= db; ++i) r[shift + i] -= f * b[i];
    r = trim(std::move(r));
  }
  return {trim(std::move(q)), std::move(r)};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = trim(a), y = trim(b);
  while (!y.empty()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return x;
  Rat lead = x.back();
  for (auto& c : x) c /= lead;
  return x;
}

QPoly derivative(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat((long)i);
  return trim(std::move(r));
}

ZPoly derivative(const ZPoly& p) {
  if (p.size() <= 1) return {};
  ZPoly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Int((long)i);
  return trim(std::move(r));
}

Rat eval(const QPoly& p, const Rat& x) {
  Rat r = 0;
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

Int eval(const ZPoly& p, const Int& x) {
  Int r = 0;
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

std::complex<double> eval(const QPoly& p, std::complex<double> x) {
  std::complex<double> r = 0;
  for (size_t i = p.size(); i-- > 0;) r = r * x + to_double(p[i]);
  return r;
}

Int content(const ZPoly& p) {
  Int c = 0;
  for (auto& a : p) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
  return c;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.empty()) return p;
  Int c = content(p);
  ZPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[i] / c;
  return r;
}

namespace {

// Bareiss fraction-free determinant.
Int bareiss_det(std::vector<std::vector<Int>> m) {
  size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

Int resultant(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return 0;
  int da = degree(a), db = degree(b);
  if (da == 0) return pow(a[0], (unsigned long)db);
  if (db == 0) return pow(b[0], (unsigned long)da);
  size_t n = da + db;
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) m[i][i + j] = a[da - j];
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) m[db + i][i + j] = b[db - j];
  return bareiss_det(std::move(m));
}

Int resultant_formal(const ZPoly& a, const std::vector<Int>& b_padded, int deg_b) {
  int da = degree(a);
  int db = deg_b;
  if (da < 1) return pow(a.empty() ? Int(0) : a[0], (unsigned long)db);
  if (db == 0) return pow(b_padded[0], (unsigned long)da);
  size_t n = da + db;
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) m[i][i + j] = a[da - j];
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) m[db + i][i + j] = b_padded[db - j];
  return bareiss_det(std::move(m));
}

Rat resultant(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return 0;
  auto [ia, ca] = clear_denominators(a);
  auto [ib, cb] = clear_denominators(b);
  Int r = resultant(ia, ib);
  Rat den = pow(Rat(ca), (long)degree(b)) * pow(Rat(cb), (long)degree(a));
  Rat out = Rat(r) / den;
  out.canonicalize();
  return out;
}

Int discriminant(const ZPoly& p) {
  int n = degree(p);
  if (n < 1) throw Error(ErrorCode::DegreeZero, "discriminant of constant");
  Int res = resultant(p, derivative(p));
  Int lead = p.back();
  Int d = res / lead;
  if (((long)n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

int count_real_roots(const QPoly& p) {
  QPoly f = trim(p);
  if (degree(f) < 1) return 0;
  f = divmod(f, gcd(f, derivative(f))).first;  // squarefree part
  std::vector<QPoly> chain{f, derivative(f)};
  while (!chain.back().empty() && degree(chain.back()) > 0) {
    QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    chain.push_back(scale(r, Rat(-1)));
  }
  auto signs_at_inf = [&](int dir) {
    int changes = 0, last = 0;
    for (auto& g : chain) {
      if (g.empty()) continue;
      int s = sgn(g.back());
      if (dir < 0 && degree(g) % 2 == 1) s = -s;
      if (last != 0 && s != 0 && s != last) ++changes;
      if (s != 0) last = s;
    }
    return changes;
  };
  return signs_at_inf(-1) - signs_at_inf(+1);
}

ZPoly cyclotomic(unsigned long m) {
  // Phi_m = prod over d|m of (x^d - 1)^{mu(m/d)}; computed by division.
  ZPoly num{Int(-1)};
  num.resize(m + 1, Int(0));
  num[m] = 1;  // x^m - 1
  ZPoly result = num;
  // divide by Phi_d for all proper divisors d of m, recursively
  for (unsigned long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    ZPoly phi_d = cyclotomic(d);
    // exact division in Z[x]
    ZPoly r = result;
    ZPoly q(r.size() - phi_d.size() + 1, Int(0));
    while ((int)r.size() >= (int)phi_d.size() && !r.empty()) {
      Int f = r.back() / phi_d.back();
      int shift = (int)r.size() - (int)phi_d.size();
      q[shift] = f;
      for (size_t i = 0; i < phi_d.size(); ++i) r[shift + i] -= f * phi_d[i];
      r = trim(std::move(r));
    }
    result = trim(std::move(q));
  }
  return result;
}

std::vector<ComplexRoot> complex_roots(const QPoly& p) {
  QPoly f = trim(p);
  int n = degree(f);
  if (n < 1) return {};
  // companion matrix eigenvalues
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) C(i, n - 1) = -to_double(f[i] / f[n]);
  for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(C);
  QPoly fp = derivative(f);
  std::vector<ComplexRoot> out;
  for (int i = 0; i < n; ++i) {
    std::complex<double> z = es.eigenvalues()(i);
    for (int it = 0; it < 60; ++it) {
      std::complex<double> fv = eval(f, z), dv = eval(fp, z);
      if (std::abs(dv) == 0.0) break;
      std::complex<double> step = fv / dv;
      z -= step;
      if (std::abs(step) < 1e-17 * (1.0 + std::abs(z))) break;
    }
    double rad = 0.0;
    std::complex<double> dv = eval(fp, z);
    if (std::abs(dv) > 0) rad = n * std::abs(eval(f, z) / dv);
    out.push_back({z, rad});
  }
  std::sort(out.begin(), out.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

std::string to_string(const QPoly& p) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ",";
    os << p[i].get_str();
  }
  os << "]";
  return os.str();
}

}  // namespace hg
