#include "hg/checks.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <Eigen/Dense>

#include "hg/equidist.hpp"
#include "hg/error.hpp"
#include "hg/heights.hpp"
#include "hg/scan.hpp"
#include "hg/structure.hpp"

namespace hg {

namespace {

struct Ctx {
  std::ostringstream log;
  bool ok = true;
  int fails = 0;
  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (++fails <= 8) log << "fail: " << what << "\n";
  }
};

FieldPtr rationals() {
  static FieldPtr K = NumberField::create({Int(0), Int(1)});
  return K;
}
FieldPtr gauss_field() {
  static FieldPtr K = NumberField::create({Int(1), Int(0), Int(1)});
  return K;
}
FieldPtr golden_field() {
  static FieldPtr K = NumberField::create({Int(-1), Int(-1), Int(1)});
  return K;
}
FieldPtr zeta5_field() {
  static FieldPtr K = NumberField::create({Int(1), Int(1), Int(1), Int(1), Int(1)});
  return K;
}

KMatrix mat2(const FieldPtr& K, long a, long b, long c, long d) {
  return KMatrix::from_rational_entries(K, {{Rat(a), Rat(b)}, {Rat(c), Rat(d)}});
}

MatrixSet make_set(const FieldPtr& K, std::vector<KMatrix> mats, bool sl = true) {
  MatrixSet F;
  F.field = K;
  F.d = mats.empty() ? 0 : mats[0].dim();
  F.mats = std::move(mats);
  F.sl = sl;
  return F;
}

// random word in the elementary matrices E_ij(x), unit determinant by design
KMatrix random_elem_word(const FieldPtr& K, int d, int len, int coef_bound,
                         std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pos(0, d - 1), coef(-coef_bound, coef_bound);
  KMatrix m = KMatrix::identity(K, d);
  for (int s = 0; s < len; ++s) {
    int i = pos(rng), j = pos(rng);
    if (i == j) {
      --s;
      continue;
    }
    int x = coef(rng);
    if (x == 0) x = 1;
    KMatrix e = KMatrix::identity(K, d);
    e.at(i, j) = FieldElement::from_rational(K, Rat(x));
    m = m * e;
  }
  return m;
}

// random SL2(Z) matrix with all entries bounded by `cap`
KMatrix random_sl2_capped(const FieldPtr& K, int cap, std::mt19937_64& rng) {
  for (;;) {
    KMatrix m = random_elem_word(K, 2, 2 + (int)(rng() % 2), 2, rng);
    bool small = true, ident = m.is_identity();
    for (int i = 0; i < 2 && small; ++i)
      for (int j = 0; j < 2; ++j) {
        Rat e = m.at(i, j).is_zero() ? Rat(0) : m.at(i, j).rational_value();
        if (::abs(e) > cap) {
          small = false;
          break;
        }
      }
    if (small && !ident) return m;
  }
}

double opnorm(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

// operator norm of X -> g X g^-1 on trace-zero matrices, Frobenius-orthonormal basis
double adjoint_opnorm(const Eigen::MatrixXcd& g) {
  int d = (int)g.rows(), dim = d * d - 1;
  std::vector<Eigen::MatrixXcd> basis;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) {
        Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(d, d);
        e(i, j) = 1;
        basis.push_back(e);
      }
  for (int k = 1; k < d; ++k) {
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < k; ++i) e(i, i) = 1;
    e(k, k) = -k;
    e /= std::sqrt((double)(k * k + k));
    basis.push_back(e);
  }
  Eigen::MatrixXcd gi = g.inverse(), M(dim, dim);
  for (int b = 0; b < dim; ++b) {
    Eigen::MatrixXcd x = g * basis[(size_t)b] * gi;
    for (int a = 0; a < dim; ++a) M(a, b) = (basis[(size_t)a].adjoint() * x).trace();
  }
  return opnorm(M);
}

FieldElement random_element(const FieldPtr& K, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-9, 9);
  for (;;) {
    std::vector<Rat> c((size_t)K->degree());
    bool nz = false;
    for (auto& q : c) {
      q = Rat(coef(rng));
      if (q != 0) nz = true;
    }
    if (nz) return FieldElement(K, std::move(c));
  }
}

// ---- suites ----

CheckResult check_product_formula(uint64_t seed) {
  Ctx c;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 1000);
  FieldPtr Q = rationals();
  for (int i = 0; i < 1000; ++i) {
    int n = num(rng);
    if (n == 0) n = 1;
    Rat q(n, den(rng));
    q.canonicalize();
    double r = product_formula_residual(FieldElement::from_rational(Q, q));
    c.require(r == 0.0, "rational residual nonzero at sample " + std::to_string(i) + ": " +
                            q.get_str() + " -> " + std::to_string(r));
  }
  double worst = 0;
  for (auto& K : {gauss_field(), golden_field(), zeta5_field()})
    for (int i = 0; i < 100; ++i) {
      double r = std::fabs(product_formula_residual(random_element(K, rng)));
      worst = std::max(worst, r);
      c.require(r < 1e-10, "field residual " + std::to_string(r) + " at sample " +
                               std::to_string(i));
    }
  c.log << "max field residual " << worst;
  return {"product-formula", c.ok, c.log.str()};
}

CheckResult check_height_oracle(uint64_t seed) {
  Ctx c;
  std::mt19937_64 rng(seed);
  FieldPtr Q = rationals();
  double h2 = height(FieldElement::from_rational(Q, Rat(2)));
  c.require(std::fabs(h2 - std::log(2.0)) < 1e-10, "h(2) != log 2");
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  double hphi = height(FieldElement::generator(golden_field()));
  c.require(std::fabs(hphi - 0.5 * std::log(phi)) < 1e-10, "h(golden ratio) off");
  double worst = 0;
  std::vector<FieldPtr> fields = {gauss_field(), golden_field(), zeta5_field()};
  for (int i = 0; i < 50; ++i) {
    FieldElement x = random_element(fields[(size_t)(i % 3)], rng);
    double h = height(x), m = mahler_height_oracle(x.minimal_polynomial());
    worst = std::max(worst, std::fabs(h - m));
    c.require(std::fabs(h - m) < 1e-8,
              "height vs Mahler gap " + std::to_string(h - m) + " at sample " +
                  std::to_string(i));
  }
  c.log << "max |height - mahler| " << worst;
  return {"height-oracle", c.ok, c.log.str()};
}

CheckResult check_padic_minnorm(uint64_t seed) {
  Ctx c;
  std::mt19937_64 rng(seed);
  FieldPtr Q = rationals();
  std::uniform_int_distribution<int> coef(-4, 4);
  int eq = 0, total = 0;
  auto one_case = [&](int d, const Int& p, int id) {
    KMatrix a(Q, d), b(Q, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        a.at(i, j) = FieldElement::from_rational(Q, Rat(coef(rng)));
        b.at(i, j) = FieldElement::from_rational(Q, Rat(coef(rng)));
      }
    MatrixSet F = make_set(Q, {a, b}, false);
    FinitePlace v = Q->finite_places(p)[0];
    Rat f;
    try {
      f = minimal_norm_padic_logp(F, v);
    } catch (const Error&) {
      return;  // fully nilpotent draw, no spectral data
    }
    Rat o = lattice_bfs_oracle_logp(F, p, 4);
    ++total;
    c.require(f <= o, "formula above oracle at case " + std::to_string(id));
    if (f.get_den() == 1) {
      ++eq;
      c.require(f == o, "integral-power case without equality at case " + std::to_string(id));
    }
  };
  for (int i = 0; i < 100; ++i) {
    one_case(2, Int(2), i);
    one_case(2, Int(3), i);
  }
  for (int i = 0; i < 10; ++i) one_case(3, Int(2), 200 + i);
  for (int i = 0; i < 10; ++i) one_case(3, Int(3), 300 + i);
  c.log << total << " sandwiches, " << eq << " exact equalities";
  return {"padic-minnorm-oracle", c.ok, c.log.str()};
}

CheckResult check_properties(uint64_t seed) {
  Ctx c;
  std::mt19937_64 rng(seed);
  FieldPtr Q = rationals();
  LocalModel arch = LocalModel::archimedean(Q->arch_places()[0]);
  double worst_gap = 0;
  for (int i = 0; i < 20; ++i) {
    MatrixSet F =
        make_set(Q, {random_sl2_capped(Q, 3, rng), random_sl2_capped(Q, 3, rng)});
    // (i): Lambda <= E (tested against the minimal-norm upper bound)
    double lam = lambda_max(F, arch);
    ArchMinNorm mn = minimal_norm_arch(F, Q->arch_places()[0], 1e-6);
    c.require(lam <= std::exp(mn.bounds.upper) * (1 + 1e-9) + 1e-9,
              "Lambda exceeds the minimal norm at pair " + std::to_string(i));
    // (ii): Lambda(Q^n) >= Lambda(Q)^n
    PowerSetResult p2 = power_set(F, 2), p3 = power_set(F, 3);
    c.require(lambda_max(p2.set, arch) >= lam * lam * (1 - 1e-9),
              "Lambda(Q^2) < Lambda(Q)^2 at pair " + std::to_string(i));
    c.require(lambda_max(p3.set, arch) >= lam * lam * lam * (1 - 1e-9),
              "Lambda(Q^3) < Lambda(Q)^3 at pair " + std::to_string(i));
    // (iii)/(iv): two-sided bracket tight at n_max = 12
    LogBounds b = spectral_radius_bounds(F, arch, 12, 8192);
    worst_gap = std::max(worst_gap, b.upper - b.lower);
    c.require(b.upper - b.lower < 0.05,
              "bracket gap " + std::to_string(b.upper - b.lower) + " at pair " +
                  std::to_string(i));
    // (v): p-adic spectral radii are exact
    for (long p : {2l, 3l}) {
      LogBounds pb =
          spectral_radius_bounds(F, LocalModel::padic(Q->finite_places(Int(p))[0]), 12);
      c.require(pb.exact && pb.lower == pb.upper,
                "inexact p-adic radius at pair " + std::to_string(i));
    }
  }
  c.log << "max archimedean bracket gap " << worst_gap;
  return {"properties", c.ok, c.log.str()};
}

CheckResult check_singleton(uint64_t seed) {
  Ctx c;
  std::mt19937_64 rng(seed);
  FieldPtr Q = rationals();
  auto contains = [&](const MatrixSet& F, double target, const std::string& what) {
    LogBounds b = normalized_height_bounds(F);
    c.require(b.lower <= target + 1e-6 && b.upper >= target - 1e-6,
              what + ": [" + std::to_string(b.lower) + ", " + std::to_string(b.upper) +
                  "] misses " + std::to_string(target));
  };
  KMatrix h = KMatrix::from_rational_entries(Q, {{Rat(2), Rat(0)}, {Rat(0), Rat(1, 2)}});
  contains(make_set(Q, {h}), 2 * std::log(2.0), "diag(2,1/2)");
  std::uniform_int_distribution<int> ev(1, 6);
  for (int i = 0; i < 19; ++i) {
    int d = 2 + (i % 2);
    std::set<int> evs;
    while ((int)evs.size() < d) evs.insert(ev(rng));
    KMatrix D(Q, d);
    int k = 0, mx = 1;
    for (int e : evs) {
      D.at(k, k) = FieldElement::from_rational(Q, Rat(e));
      mx = std::max(mx, e);
      ++k;
    }
    KMatrix P = random_elem_word(Q, d, 3, 2, rng);
    MatrixSet F = make_set(Q, {P * D * P.inverse()}, false);
    contains(F, std::log((double)mx), "split-spectrum sample " + std::to_string(i));
  }
  return {"singleton", c.ok, c.log.str()};
}

CheckResult check_zero_height(uint64_t /*seed*/) {
  Ctx c;
  FieldPtr Q = rationals();
  KMatrix T = mat2(Q, 1, 1, 0, 1), S = mat2(Q, 0, -1, 1, 0), nI = mat2(Q, -1, 0, 0, -1);
  KMatrix u = mat2(Q, 2, 1, 1, 1);
  std::vector<MatrixSet> qu = {
      make_set(Q, {S}),
      make_set(Q, {mat2(Q, 0, -1, 1, 1)}),
      make_set(Q, {T, nI}),
      make_set(Q, {mat2(Q, 1, 1, 0, 1), mat2(Q, 1, 2, 0, 1)}),
      make_set(Q, {S, nI}),
      make_set(Q, {u * T * u.inverse()}),
      make_set(Q, {u * mat2(Q, 1, 2, 0, 1) * u.inverse(), u * mat2(Q, 1, 3, 0, 1) * u.inverse()}),
      make_set(Q, {T, mat2(Q, 1, 3, 0, 1)}),
      make_set(Q, {S * T}),
      make_set(Q, {nI}),
  };
  std::vector<MatrixSet> hyp = {
      make_set(Q, {mat2(Q, 1, 1, 0, 1), mat2(Q, 1, 0, 1, 1)}),
      make_set(Q, {mat2(Q, 1, 2, 0, 1), mat2(Q, 1, 0, 2, 1)}),
      make_set(Q, {mat2(Q, 1, 3, 0, 1), mat2(Q, 1, 0, 3, 1)}),
      make_set(Q, {mat2(Q, 2, 1, 1, 1)}),
      make_set(Q, {mat2(Q, 2, 3, 1, 2)}),
      make_set(Q, {mat2(Q, 1, 1, 1, 2)}),
      make_set(Q, {mat2(Q, 3, 2, 1, 1)}),
      make_set(Q, {mat2(Q, 5, 2, 2, 1)}),
      make_set(Q, {mat2(Q, 1, 2, 0, 1), mat2(Q, 3, 2, 1, 1)}),
      make_set(Q, {mat2(Q, 1, 3, 0, 1), mat2(Q, 1, 0, 2, 1)}),
  };
  for (size_t i = 0; i < qu.size(); ++i) {
    LogBounds b = normalized_height_bounds(qu[i]);
    c.require(b.lower == 0.0 && b.upper >= 0.0,
              "quasi-unipotent set " + std::to_string(i) + " bracket excludes 0");
    c.require(!is_quasi_unipotent(qu[i], 3).certified_no,
              "false torsion witness on set " + std::to_string(i));
  }
  double min_pos = 1e9;
  for (size_t i = 0; i < hyp.size(); ++i) {
    LogBounds b = normalized_height_bounds(hyp[i]);
    min_pos = std::min(min_pos, b.lower);
    c.require(b.lower > 0.0, "hyperbolic set " + std::to_string(i) + " has zero lower bound");
    c.require(is_quasi_unipotent(hyp[i], 3).certified_no,
              "missed witness on hyperbolic set " + std::to_string(i));
  }
  c.log << "min positive lower bound " << min_pos;
  return {"zero-height", c.ok, c.log.str()};
}

CheckResult check_pingpong(uint64_t seed) {
  Ctx c;
  FieldPtr Q = rationals();
  MatrixSet F = make_set(Q, {mat2(Q, 1, 2, 0, 1), mat2(Q, 1, 0, 2, 1)});
  LogBounds b = normalized_height_bounds(F);
  double target = 0.5 * std::log(3.0 + 2.0 * std::sqrt(2.0));
  c.require(b.lower >= target - 1e-9,
            "ping-pong lower bound " + std::to_string(b.lower) + " below " +
                std::to_string(target));
  GapScanConfig cfg;
  cfg.count = 100;
  cfg.seed = seed;
  cfg.threads = 8;
  GapScanResult r = gap_scan(cfg);
  int spanning = 0;
  for (auto& row : r.rows) {
    c.require(!row.failed, "sample " + std::to_string(row.id) + " errored: " + row.error);
    if (row.failed || row.proxy != "none") continue;
    ++spanning;
    c.require(row.hhat.lower > 0.0,
              "spanning sample " + std::to_string(row.id) + " has nonpositive lower bound");
  }
  c.log << "lower " << b.lower << "; " << spanning << "/100 spanning samples, min lower "
        << (r.nonsolvable_count ? r.min_lower_nonsolvable : 0.0);
  return {"pingpong", c.ok, c.log.str()};
}

CheckResult check_norm_sandwich(uint64_t seed) {
  Ctx c;
  std::mt19937_64 rng(seed);
  FieldPtr Q = rationals();
  KMatrix half = KMatrix::from_rational_entries(Q, {{Rat(1, 2), Rat(0)}, {Rat(0), Rat(2)}});
  for (int i = 0; i < 50; ++i) {
    int d = i < 25 ? 2 : 3;
    KMatrix g = random_elem_word(Q, d, 3, 3, rng);
    if (d == 2 && i % 5 == 0) g = half * g * half.inverse();  // non-integral entries
    KMatrix ad = adjoint_rep(g);
    // archimedean, Frobenius-orthonormal operator norms
    double ng = opnorm(g.embed(Q->arch_places()[0]));
    double na = adjoint_opnorm(g.embed(Q->arch_places()[0]));
    c.require(ng <= na * (1 + 1e-9), "arch lower sandwich fails at " + std::to_string(i));
    c.require(na <= std::pow(ng, d) * (1 + 1e-9),
              "arch upper sandwich fails at " + std::to_string(i));
    for (long p : {2l, 3l}) {
      LocalModel m = LocalModel::padic(Q->finite_places(Int(p))[0]);
      double a = set_norm(make_set(Q, {g}), m), b = set_norm(make_set(Q, {ad}), m);
      c.require(a <= b * (1 + 1e-9), "p-adic lower sandwich fails at " + std::to_string(i));
      c.require(b <= std::pow(a, d) * (1 + 1e-9),
                "p-adic upper sandwich fails at " + std::to_string(i));
    }
  }
  // e <= d e^Ad <= d^{5/2} e on pairs, via e^Ad <= d^{3/2} e
  for (int i = 0; i < 10; ++i) {
    MatrixSet F =
        make_set(Q, {random_sl2_capped(Q, 3, rng), random_sl2_capped(Q, 3, rng)});
    MatrixSet AdF = make_set(Q, {adjoint_rep(F.mats[0]), adjoint_rep(F.mats[1])});
    LogBounds e = minimal_height(F).total, ea = minimal_height(AdF).total;
    c.require(e.lower <= 2.0 * ea.upper + 1e-6,
              "e > d e^Ad at pair " + std::to_string(i));
    c.require(ea.lower <= std::pow(2.0, 1.5) * e.upper + 1e-6,
              "e^Ad > d^{3/2} e at pair " + std::to_string(i));
  }
  return {"norm-sandwich", c.ok, c.log.str()};
}

CheckResult check_growth(uint64_t seed) {
  Ctx c;
  std::mt19937_64 rng(seed);
  FieldPtr Q = rationals();
  ArchPlace v = Q->arch_places()[0];
  for (int i = 0; i < 20; ++i) {
    std::vector<KMatrix> mats = {KMatrix::identity(Q, 2), random_sl2_capped(Q, 3, rng)};
    bool pair = i >= 15;
    if (pair) mats.push_back(random_sl2_capped(Q, 3, rng));
    MatrixSet F = make_set(Q, std::move(mats));
    double lo = minimal_norm_arch(F, v, 1e-6).bounds.lower;  // log E(Q), >= 0 since 1 in Q
    for (int n : {2, 4, 8, 16}) {
      if (pair && n > 8) break;
      PowerSetResult pn = power_set(F, n, 200000);
      if (pn.truncated) break;
      double up = minimal_norm_arch(pn.set, v, pair ? 1e-3 : 1e-6).bounds.upper;
      double need = std::sqrt((double)n / 16.0) * lo;  // 8d = 16
      c.require(up >= need - 1e-9, "growth fails at set " + std::to_string(i) + " n = " +
                                       std::to_string(n));
    }
  }
  return {"growth", c.ok, c.log.str()};
}

CheckResult check_bilu(uint64_t seed) {
  Ctx c;
  std::mt19937_64 rng(seed);
  for (int k = 2; k <= 6; ++k) {
    ZPoly f((size_t)(1l << k) + 1, Int(0));
    f[0] = -2;
    f.back() = 1;
    OrbitStats st = orbit_stats(f);
    double n = (double)(1l << k);
    c.require(std::fabs(st.height - std::log(2.0) / n) <= 1e-12,
              "height off at k = " + std::to_string(k));
    c.require(st.star_discrepancy <= 2.0 / n + 1e-9,
              "discrepancy " + std::to_string(st.star_discrepancy) + " at k = " +
                  std::to_string(k));
    c.require(st.log_distance_stat == 0.0, "nonzero distance stat at k = " + std::to_string(k));
  }
  std::uniform_real_distribution<double> un(-1.0, 1.0);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    int n = 2 + (int)(rng() % 3);
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(n, n);
    std::complex<double> prod = 1.0;
    for (int j = 0; j < n; ++j) {
      std::complex<double> t =
          std::polar(std::exp(0.7 * un(rng)), 3.1415926535 * un(rng));
      b(j, j) = t;
      prod *= t;
      for (int l = j + 1; l < n; ++l) b(j, l) = std::complex<double>(2 * un(rng), 2 * un(rng));
    }
    b(n - 1, n - 1) /= prod;  // unit determinant
    double r = triangular_frobenius_check(b);
    worst = std::min(worst, r);
    c.require(r >= -1e-9, "triangular residual " + std::to_string(r) + " at sample " +
                              std::to_string(i));
  }
  c.log << "min triangular residual " << worst;
  return {"bilu-stats", c.ok, c.log.str()};
}

CheckResult check_structure(uint64_t /*seed*/) {
  Ctx c;
  FieldPtr Q = rationals();
  MatrixSet F = make_set(Q, {mat2(Q, 1, 1, 0, 1), mat2(Q, 0, -1, 1, 0)});
  // level-2 congruence subgroup: reduction = identity mod 2
  auto mod2_id = [](const KMatrix& g) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const FieldElement& e = g.at(i, j);
        Rat q = e.is_zero() ? Rat(0) : e.rational_value();
        if (q.get_den() != 1) return false;
        Int r = (q.get_num() - (i == j ? 1 : 0)) % 2;
        if (r != 0) return false;
      }
    return true;
  };
  std::vector<Word> gens = finite_index_generators(F, mod2_id, 6);
  c.require(!gens.empty(), "no generators returned");
  for (auto& w : gens)
    c.require(mod2_id(w.product), "generator outside the level-2 subgroup");
  // coset-graph verification: the generators must close up, mod 4, to the full
  // kernel of reduction mod 2 (order 8 inside SL2(Z/4))
  auto key4 = [](const KMatrix& g) {
    std::string k;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Rat q = g.at(i, j).is_zero() ? Rat(0) : g.at(i, j).rational_value();
        Int r = q.get_num() % 4;
        if (r < 0) r += 4;
        k += r.get_str() + ",";
      }
    return k;
  };
  std::map<std::string, KMatrix> closure;
  std::vector<KMatrix> frontier = {KMatrix::identity(Q, 2)};
  closure[key4(frontier[0])] = frontier[0];
  auto reduce4 = [&](KMatrix g) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Rat q = g.at(i, j).is_zero() ? Rat(0) : g.at(i, j).rational_value();
        Int r = q.get_num() % 4;
        if (r < 0) r += 4;
        g.at(i, j) = FieldElement::from_rational(Q, Rat(r));
      }
    return g;
  };
  while (!frontier.empty()) {
    KMatrix cur = frontier.back();
    frontier.pop_back();
    for (auto& w : gens)
      for (const KMatrix& s : {w.product, w.product.inverse()}) {
        KMatrix nxt = reduce4(cur * s);
        std::string k = key4(nxt);
        if (!closure.count(k)) {
          closure[k] = nxt;
          frontier.push_back(nxt);
        }
      }
  }
  c.require(closure.size() == 8, "mod-4 closure has order " + std::to_string(closure.size()) +
                                     ", expected the full kernel of order 8");

  // escape from commuting powers at depth 2
  try {
    EscapeWitness w = escape_search(F, "commuting_powers", 2, 2);
    KMatrix x2 = w.first.product.pow(2), y2 = w.second.product.pow(2);
    c.require(!(x2 * y2 == y2 * x2), "escape witness has commuting squares");
    c.require((int)w.first.letters.size() <= 2 && (int)w.second.letters.size() <= 2,
              "witness longer than the search depth");
  } catch (const Error& e) {
    c.require(false, std::string("escape search failed: ") + e.what());
  }

  // certified irreducible pair at depth <= 6
  try {
    TwoElementCertificate cert = two_element_reduction(F, 2, 6);
    c.require(cert.span_dimension == 4, "pair does not span the matrix algebra");
    c.require(cert.escape_commuting_powers, "pair has commuting powers");
    c.require(cert.reg_a.a1_regular && cert.reg_b.a1_regular, "pair not A1-regular");
    c.require(regularity_predicates(cert.a.product, 2).a1_regular,
              "certificate disagrees with the predicate");
  } catch (const Error& e) {
    c.require(false, std::string("two-element reduction failed: ") + e.what());
  }
  return {"structure", c.ok, c.log.str()};
}

CheckResult check_determinism(uint64_t seed) {
  Ctx c;
  GapScanConfig cfg;
  cfg.count = 30;
  cfg.seed = seed;
  cfg.threads = 1;
  std::string one = gap_scan(cfg).csv;
  cfg.threads = 8;
  std::string eight = gap_scan(cfg).csv;
  c.require(one == eight, "1-thread and 8-thread reports differ");
  c.require(eight == gap_scan(cfg).csv, "8-thread report not stable across runs");
  c.log << one.size() << " bytes, stable";
  return {"determinism", c.ok, c.log.str()};
}

using CheckFn = CheckResult (*)(uint64_t);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> reg = {
      {"product-formula", check_product_formula},
      {"height-oracle", check_height_oracle},
      {"padic-minnorm-oracle", check_padic_minnorm},
      {"properties", check_properties},
      {"singleton", check_singleton},
      {"zero-height", check_zero_height},
      {"pingpong", check_pingpong},
      {"norm-sandwich", check_norm_sandwich},
      {"growth", check_growth},
      {"bilu-stats", check_bilu},
      {"structure", check_structure},
      {"determinism", check_determinism},
  };
  return reg;
}

}  // namespace

std::vector<std::string> check_suites() {
  std::vector<std::string> names;
  for (auto& [n, f] : registry()) names.push_back(n);
  return names;
}

bool has_check(const std::string& name) {
  for (auto& [n, f] : registry())
    if (n == name) return true;
  return false;
}

CheckResult run_check(const std::string& name, uint64_t seed) {
  for (auto& [n, f] : registry())
    if (n == name) return f(seed);
  throw Error(ErrorCode::Usage, "unknown suite: " + name);
}

std::vector<CheckResult> run_all_checks(uint64_t seed) {
  std::vector<CheckResult> out;
  for (auto& [n, f] : registry()) out.push_back(f(seed));
  return out;
}

}  // namespace hg
