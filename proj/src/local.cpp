#include "hg/local.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>

#include "hg/error.hpp"

namespace hg {

namespace {

double op_norm(const Eigen::MatrixXcd& a) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  return svd.singularValues()(0);
}

double spectral_rad(const Eigen::MatrixXcd& a) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a);
  double r = 0;
  for (int i = 0; i < a.rows(); ++i) r = std::max(r, std::abs(es.eigenvalues()(i)));
  return r;
}

double ln_p(const FinitePlace& v) { return std::log(mpz_get_d(v.prime.get_mpz_t())); }

// all eigenvalues roots of unity, decided exactly via cyclotomic division
bool charpoly_cyclotomic(const KMatrix& a) {
  KPoly c = a.charpoly();
  unsigned long cap =
      max_order_with_phi_bound((unsigned long)(a.dim() * a.field()->degree()));
  for (unsigned long mo = 1; mo <= cap && c.size() > 1; ++mo) {
    KPoly phi = kfrom_z(a.field(), cyclotomic(mo));
    while (c.size() >= phi.size() && c.size() > 1) {
      auto [q, r] = kdivmod(c, phi);
      if (!ktrim(r).empty()) break;
      c = std::move(q);
    }
  }
  return c.size() <= 1;
}

// defined with the archimedean minimal-norm machinery below
double conjugated_norm_upper(const MatrixSet& Q, const ArchPlace& v, double tol,
                             uint64_t seed, int starts, std::vector<double>* arg_out);

}  // namespace

void MatrixSet::validate() const {
  if (mats.empty()) throw Error(ErrorCode::FieldMismatch, "empty matrix set");
  FieldElement one = FieldElement::from_rational(field, 1);
  for (auto& m : mats) {
    if (m.dim() != d) throw Error(ErrorCode::FieldMismatch, "dimension mismatch in set");
    if (sl && !(m.det() == one))
      throw Error(ErrorCode::NotUnimodular, "sl flag set but det != 1");
  }
}

// ---- norms ----

Rat set_norm_logp(const MatrixSet& Q, const FinitePlace& v) {
  bool any = false;
  Rat best = 0;
  for (auto& m : Q.mats)
    for (int i = 0; i < Q.d; ++i)
      for (int j = 0; j < Q.d; ++j) {
        const FieldElement& x = m.at(i, j);
        if (x.is_zero()) continue;
        Rat l = -exact_valuation(x, v);
        if (!any || l > best) best = l;
        any = true;
      }
  if (!any) throw Error(ErrorCode::ZeroElement, "norm of the zero set");
  return best;
}

double set_norm(const MatrixSet& Q, const LocalModel& m) {
  if (Q.mats.empty()) throw Error(ErrorCode::FieldMismatch, "empty matrix set");
  if (m.is_arch()) {
    double best = 0;
    for (auto& a : Q.mats) best = std::max(best, op_norm(a.embed(m.arch)));
    return best;
  }
  return std::exp(to_double(set_norm_logp(Q, m.place)) * ln_p(m.place));
}

std::optional<Rat> lambda_max_logp(const MatrixSet& Q, const FinitePlace& v) {
  std::optional<Rat> best;
  for (auto& a : Q.mats) {
    KPoly chi = a.charpoly();
    int d = (int)chi.size() - 1;
    // max |eigenvalue| = p^{-minimal Newton slope}
    std::optional<Rat> lam;
    for (int i = 0; i < d; ++i) {
      if (chi[i].is_zero()) continue;
      Rat slope = exact_valuation(chi[i], v) / Rat((long)(d - i));
      slope.canonicalize();
      Rat l = -slope;
      if (!lam || l > *lam) lam = l;
    }
    if (lam && (!best || *lam > *best)) best = lam;
  }
  return best;
}

double lambda_max(const MatrixSet& Q, const LocalModel& m) {
  if (Q.mats.empty()) throw Error(ErrorCode::FieldMismatch, "empty matrix set");
  if (m.is_arch()) {
    double best = 0;
    for (auto& a : Q.mats) {
      double r = spectral_rad(a.embed(m.arch));
      // snap torsion/unipotent spectra to 1 so zero lower bounds stay exact
      if (std::fabs(r - 1.0) < 1e-6 && charpoly_cyclotomic(a)) r = 1.0;
      best = std::max(best, r);
    }
    return best;
  }
  auto l = lambda_max_logp(Q, m.place);
  if (!l) return 0.0;
  return std::exp(to_double(*l) * ln_p(m.place));
}

// ---- power sets ----

namespace {

// one multiplication level: dedup(P * Q), canonically ordered
std::pair<std::vector<KMatrix>, bool> level_up(const std::vector<KMatrix>& P,
                                               const std::vector<KMatrix>& Q, size_t budget) {
  std::map<std::string, KMatrix> out;
  bool truncated = false;
  for (auto& a : P) {
    for (auto& b : Q) {
      KMatrix prod = a * b;
      std::string k = prod.key();
      if (out.count(k)) continue;
      if (out.size() >= budget) {
        truncated = true;
        continue;
      }
      out.emplace(std::move(k), std::move(prod));
    }
  }
  std::vector<KMatrix> v;
  v.reserve(out.size());
  for (auto& [k, mtx] : out) v.push_back(mtx);
  return {std::move(v), truncated};
}

std::vector<KMatrix> dedup_sorted(const std::vector<KMatrix>& ms) {
  std::map<std::string, KMatrix> out;
  for (auto& m : ms) out.emplace(m.key(), m);
  std::vector<KMatrix> v;
  for (auto& [k, mtx] : out) v.push_back(mtx);
  return v;
}

}  // namespace

PowerSetResult power_set(const MatrixSet& Q, int n, size_t budget) {
  if (n < 1) throw Error(ErrorCode::Usage, "power set exponent must be >= 1");
  PowerSetResult r;
  r.set.field = Q.field;
  r.set.d = Q.d;
  r.set.sl = Q.sl;
  r.set.mats = dedup_sorted(Q.mats);
  r.truncated = r.set.mats.size() > budget;
  if (r.truncated) r.set.mats.resize(budget);
  for (int k = 2; k <= n; ++k) {
    auto [next, trunc] = level_up(r.set.mats, Q.mats, budget);
    r.set.mats = std::move(next);
    r.truncated = r.truncated || trunc;
  }
  return r;
}

PowerSetResult power_set_step(const PowerSetResult& prev, const MatrixSet& Q, size_t budget) {
  PowerSetResult r;
  r.set.field = Q.field;
  r.set.d = Q.d;
  r.set.sl = Q.sl && prev.set.sl;
  auto [next, trunc] = level_up(prev.set.mats, Q.mats, budget);
  r.set.mats = std::move(next);
  r.truncated = prev.truncated || trunc;
  return r;
}

// ---- spectral radius bounds ----

Rat minimal_norm_padic_logp(const MatrixSet& Q, const FinitePlace& v, size_t budget) {
  int qmax = Q.d * Q.d;
  std::optional<Rat> best;
  MatrixSet cur;
  cur.field = Q.field;
  cur.d = Q.d;
  cur.sl = Q.sl;
  cur.mats = dedup_sorted(Q.mats);
  for (int q = 1; q <= qmax; ++q) {
    if (q > 1) {
      auto [next, trunc] = level_up(cur.mats, Q.mats, budget);
      if (trunc) throw Error(ErrorCode::BudgetExceeded, "power set budget exhausted");
      cur.mats = std::move(next);
    }
    auto lam = lambda_max_logp(cur, v);
    if (lam) {
      Rat l = *lam / Rat((long)q);
      l.canonicalize();
      if (!best || l > *best) best = l;
    }
  }
  if (!best) throw Error(ErrorCode::ZeroElement, "nilpotent set has zero minimal norm");
  return *best;
}

double minimal_norm_padic(const MatrixSet& Q, const FinitePlace& v, size_t budget) {
  return std::exp(to_double(minimal_norm_padic_logp(Q, v, budget)) * ln_p(v));
}

LogBounds spectral_radius_bounds(const MatrixSet& Q, const LocalModel& m, int n_max,
                                 size_t budget) {
  if (n_max < 1) throw Error(ErrorCode::Usage, "n_max must be >= 1");
  if (!m.is_arch()) {
    Rat e = minimal_norm_padic_logp(Q, m.place, budget);
    double val = to_double(e) * ln_p(m.place);
    return {val, val, true};
  }
  LogBounds b;
  b.lower = -std::numeric_limits<double>::infinity();
  b.upper = std::numeric_limits<double>::infinity();
  MatrixSet cur;
  cur.field = Q.field;
  cur.d = Q.d;
  cur.sl = Q.sl;
  cur.mats = dedup_sorted(Q.mats);
  bool truncated = cur.mats.size() > budget;
  if (truncated) cur.mats.resize(budget);
  bool any_upper = false;
  MatrixSet snap;
  int snap_n = 0;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) {
      auto [next, trunc] = level_up(cur.mats, Q.mats, budget);
      cur.mats = std::move(next);
      truncated = truncated || trunc;
    }
    double lam = lambda_max(cur, m);
    if (lam > 0) b.lower = std::max(b.lower, std::log(lam) / n);
    if (!truncated) {
      b.upper = std::min(b.upper, std::log(set_norm(cur, m)) / n);
      any_upper = true;
      if (cur.mats.size() <= 160) {
        snap = cur;
        snap_n = n;
      }
    }
  }
  if (!any_upper)
    throw Error(ErrorCode::BudgetExceededNoUpper, "every power level was truncated");
  // R(Q)^n = R(Q^n) <= E(Q^n): tighten with a conjugated-norm upper bound when
  // plain norms leave a wide bracket
  if (snap_n > 0 && b.upper - b.lower > 0.04) {
    double e_up = conjugated_norm_upper(snap, m.arch, 1e-4, 7, 4, nullptr);
    b.upper = std::min(b.upper, e_up / snap_n);
    if (b.lower > b.upper) b.lower = b.upper;
  }
  if (b.lower > b.upper) b.lower = b.upper;  // numeric jitter in the eigen solves
  b.exact = b.upper - b.lower <= 1e-12;
  return b;
}

// ---- lattice BFS oracle ----

namespace {

using ZMat = std::vector<std::vector<Int>>;  // row-major, d x d
using RatMat = std::vector<std::vector<Rat>>;

// Column-style Hermite normal form of the lattice generated by the given
// column vectors (length d each); lower triangular, positive p-power
// diagonal, left-of-diagonal entries reduced.
ZMat hnf_columns(std::vector<std::vector<Int>> cols, int d) {
  for (int i = 0; i < d; ++i) {
    // gcd-combine all columns with a nonzero entry in row i into one pivot
    int piv = -1;
    for (size_t j = i; j < cols.size(); ++j)
      if (cols[j][i] != 0) {
        if (piv < 0) {
          piv = (int)j;
          continue;
        }
        Int g, u, w;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), w.get_mpz_t(), cols[piv][i].get_mpz_t(),
                   cols[j][i].get_mpz_t());
        Int a = cols[piv][i] / g, b = cols[j][i] / g;
        std::vector<Int> np(d), nj(d);
        for (int r = 0; r < d; ++r) {
          np[r] = u * cols[piv][r] + w * cols[j][r];
          nj[r] = b * cols[piv][r] - a * cols[j][r];
        }
        cols[piv] = std::move(np);
        cols[j] = std::move(nj);
      }
    if (piv < 0) throw Error(ErrorCode::FieldMismatch, "rank-deficient lattice generators");
    std::swap(cols[i], cols[piv]);
    if (cols[i][i] < 0)
      for (auto& x : cols[i]) x = -x;
  }
  cols.resize(d);
  // reduce entries to the left of each diagonal
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < i; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), cols[j][i].get_mpz_t(), cols[i][i].get_mpz_t());
      if (q != 0)
        for (int r = 0; r < d; ++r) cols[j][r] -= q * cols[i][r];
    }
  ZMat m(d, std::vector<Int>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m[i][j] = cols[j][i];
  return m;
}

// Canonical homothety-class representative: primitive HNF basis.
ZMat canonical_vertex(const ZMat& basis, const Int& p) {
  int d = (int)basis.size();
  std::vector<std::vector<Int>> cols(d, std::vector<Int>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) cols[j][i] = basis[i][j];
  ZMat h = hnf_columns(cols, d);
  long t = -1;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (h[i][j] != 0) {
        long v = valp(h[i][j], p);
        if (t < 0 || v < t) t = v;
      }
  if (t > 0) {
    Int pt = pow(p, (unsigned long)t);
    for (auto& row : h)
      for (auto& x : row) x /= pt;
  }
  std::vector<std::vector<Int>> cols2(d, std::vector<Int>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) cols2[j][i] = h[i][j];
  return hnf_columns(cols2, d);
}

std::string vertex_key(const ZMat& m) {
  std::string s;
  for (auto& row : m)
    for (auto& x : row) s += x.get_str() + ",";
  return s;
}

RatMat rat_inverse(const ZMat& b) {
  int d = (int)b.size();
  RatMat m(d, std::vector<Rat>(d)), inv(d, std::vector<Rat>(d, Rat(0)));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m[i][j] = Rat(b[i][j]);
    inv[i][i] = 1;
  }
  for (int k = 0; k < d; ++k) {
    int piv = k;
    while (piv < d && m[piv][k] == 0) ++piv;
    if (piv == d) throw Error(ErrorCode::DivideByZero, "singular lattice basis");
    std::swap(m[k], m[piv]);
    std::swap(inv[k], inv[piv]);
    Rat f = m[k][k];
    for (int j = 0; j < d; ++j) {
      m[k][j] /= f;
      inv[k][j] /= f;
    }
    for (int i = 0; i < d; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Rat g = m[i][k];
      for (int j = 0; j < d; ++j) {
        m[i][j] -= g * m[k][j];
        inv[i][j] -= g * inv[k][j];
      }
    }
  }
  return inv;
}

// log_p sup-norm of Q conjugated into the basis B: max entry of B^-1 A B.
Rat vertex_log_norm(const std::vector<RatMat>& mats, const ZMat& B, const Int& p) {
  int d = (int)B.size();
  RatMat Binv = rat_inverse(B);
  bool any = false;
  Rat best = 0;
  for (auto& A : mats) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rat e = 0;
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l) e += Binv[i][k] * A[k][l] * Rat(B[l][j]);
        if (e == 0) continue;
        Rat lv = Rat(-valp(e, p));
        if (!any || lv > best) best = lv;
        any = true;
      }
  }
  if (!any) throw Error(ErrorCode::ZeroElement, "zero set in lattice oracle");
  return best;
}

// proper nonzero subspaces of F_p^d, as lists of basis vectors (lifted to Z)
std::vector<std::vector<std::vector<Int>>> proper_subspaces(int d, const Int& p) {
  long pl = mpz_get_si(p.get_mpz_t());
  std::vector<std::vector<std::vector<Int>>> out;
  if (d == 2) {
    for (long a = 0; a < pl; ++a) out.push_back({{Int(1), Int(a)}});
    out.push_back({{Int(0), Int(1)}});
  } else if (d == 3) {
    // lines
    for (long a = 0; a < pl; ++a)
      for (long b = 0; b < pl; ++b) out.push_back({{Int(1), Int(a), Int(b)}});
    for (long a = 0; a < pl; ++a) out.push_back({{Int(0), Int(1), Int(a)}});
    out.push_back({{Int(0), Int(0), Int(1)}});
    // planes: kernels of the dual lines n . x = 0
    auto add_plane = [&](long n0, long n1, long n2) {
      std::vector<std::vector<Int>> basis;
      // two independent kernel vectors of (n0,n1,n2) over F_p
      if (n0 != 0) {
        basis.push_back({Int((pl - n1) % pl), Int(n0), Int(0)});
        basis.push_back({Int((pl - n2) % pl), Int(0), Int(n0)});
      } else if (n1 != 0) {
        basis.push_back({Int(1), Int(0), Int(0)});
        basis.push_back({Int(0), Int((pl - n2) % pl), Int(n1)});
      } else {
        basis.push_back({Int(1), Int(0), Int(0)});
        basis.push_back({Int(0), Int(1), Int(0)});
      }
      out.push_back(std::move(basis));
    };
    for (long a = 0; a < pl; ++a)
      for (long b = 0; b < pl; ++b) add_plane(1, a, b);
    for (long a = 0; a < pl; ++a) add_plane(0, 1, a);
    add_plane(0, 0, 1);
  } else {
    throw Error(ErrorCode::Usage, "lattice oracle supports d in {2,3}");
  }
  return out;
}

}  // namespace

Rat lattice_bfs_oracle_logp(const MatrixSet& Q, const Int& p, int radius) {
  if (!Q.field->is_rationals())
    throw Error(ErrorCode::Usage, "lattice oracle requires the rational field");
  if (Q.d != 2 && Q.d != 3) throw Error(ErrorCode::Usage, "lattice oracle supports d in {2,3}");
  int d = Q.d;
  std::vector<RatMat> mats;
  for (auto& m : Q.mats) {
    RatMat r(d, std::vector<Rat>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) r[i][j] = m.at(i, j).rational_value();
    mats.push_back(std::move(r));
  }
  ZMat start(d, std::vector<Int>(d, Int(0)));
  for (int i = 0; i < d; ++i) start[i][i] = 1;
  auto subspaces = proper_subspaces(d, p);

  std::set<std::string> seen{vertex_key(start)};
  std::vector<ZMat> frontier{start};
  Rat best = vertex_log_norm(mats, start, p);
  for (int r = 0; r < radius; ++r) {
    std::vector<ZMat> next;
    for (auto& B : frontier) {
      for (auto& sub : subspaces) {
        std::vector<std::vector<Int>> gens;
        for (int j = 0; j < d; ++j) {
          std::vector<Int> col(d);
          for (int i = 0; i < d; ++i) col[i] = p * B[i][j];
          gens.push_back(std::move(col));
        }
        for (auto& w : sub) {
          std::vector<Int> col(d, Int(0));
          for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) col[i] += B[i][j] * w[j];
          gens.push_back(std::move(col));
        }
        ZMat v = canonical_vertex(hnf_columns(std::move(gens), d), p);
        std::string key = vertex_key(v);
        if (seen.count(key)) continue;
        seen.insert(key);
        Rat n = vertex_log_norm(mats, v, p);
        if (n < best) best = n;
        next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  return best;
}

double lattice_bfs_oracle(const MatrixSet& Q, const Int& p, int radius) {
  return std::exp(to_double(lattice_bfs_oracle_logp(Q, p, radius)) *
                  std::log(mpz_get_d(p.get_mpz_t())));
}

// ---- archimedean minimal norm ----

namespace {

struct ArchParam {
  int d;
  bool complex_place;
  int dim() const { return complex_place ? d * d - 1 : d * (d + 1) / 2 - 1; }
  // hermitian traceless S from the parameter vector
  Eigen::MatrixXcd unpack(const std::vector<double>& s) const {
    Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(d, d);
    int idx = 0;
    double last = 0;
    for (int i = 0; i < d - 1; ++i) {
      S(i, i) = s[idx];
      last -= s[idx];
      ++idx;
    }
    S(d - 1, d - 1) = last;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        double re = s[idx++];
        double im = complex_place ? s[idx++] : 0.0;
        S(i, j) = std::complex<double>(re, im);
        S(j, i) = std::complex<double>(re, -im);
      }
    return S;
  }
};

// conjugator x = exp(S/2); objective = log max_A ||x A x^-1||
double arch_objective(const std::vector<Eigen::MatrixXcd>& As, const Eigen::MatrixXcd& S,
                      Eigen::MatrixXcd* x_out = nullptr) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(S);
  Eigen::VectorXd half = es.eigenvalues() * 0.5;
  Eigen::MatrixXcd x = es.eigenvectors() *
                       half.array().exp().matrix().asDiagonal() *
                       es.eigenvectors().adjoint();
  Eigen::MatrixXcd xinv = es.eigenvectors() *
                          (-half).array().exp().matrix().asDiagonal() *
                          es.eigenvectors().adjoint();
  double best = 0;
  for (auto& A : As) best = std::max(best, op_norm(x * A * xinv));
  if (x_out) *x_out = x;
  return std::log(best);
}

// derivative-free Nelder-Mead on the parameter vector
std::pair<double, std::vector<double>> nelder_mead(
    const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
    double step, double tol, int max_iter) {
  int n = (int)x0.size();
  std::vector<std::pair<double, std::vector<double>>> simplex;
  simplex.push_back({f(x0), x0});
  for (int i = 0; i < n; ++i) {
    auto xi = x0;
    xi[i] += step;
    simplex.push_back({f(xi), xi});
  }
  auto centroid = [&](int skip) {
    std::vector<double> c(n, 0.0);
    for (int i = 0; i <= n; ++i) {
      if (i == skip) continue;
      for (int j = 0; j < n; ++j) c[j] += simplex[i].second[j] / n;
    }
    return c;
  };
  for (int it = 0; it < max_iter; ++it) {
    std::sort(simplex.begin(), simplex.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    if (simplex[n].first - simplex[0].first < tol) break;
    auto c = centroid(n);
    auto mix = [&](double alpha) {
      std::vector<double> x(n);
      for (int j = 0; j < n; ++j) x[j] = c[j] + alpha * (c[j] - simplex[n].second[j]);
      return x;
    };
    auto xr = mix(1.0);
    double fr = f(xr);
    if (fr < simplex[0].first) {
      auto xe = mix(2.0);
      double fe = f(xe);
      simplex[n] = fe < fr ? std::make_pair(fe, xe) : std::make_pair(fr, xr);
    } else if (fr < simplex[n - 1].first) {
      simplex[n] = {fr, xr};
    } else {
      auto xc = mix(0.5);
      double fc = f(xc);
      if (fc < simplex[n].first) {
        simplex[n] = {fc, xc};
      } else {
        for (int i = 1; i <= n; ++i) {
          for (int j = 0; j < n; ++j)
            simplex[i].second[j] = 0.5 * (simplex[i].second[j] + simplex[0].second[j]);
          simplex[i].first = f(simplex[i].second);
        }
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(),
            [](auto& a, auto& b) { return a.first < b.first; });
  return simplex[0];
}

}  // namespace

namespace {

double conjugated_norm_upper(const MatrixSet& Q, const ArchPlace& v, double tol,
                             uint64_t seed, int starts, std::vector<double>* arg_out) {
  std::vector<Eigen::MatrixXcd> As;
  for (auto& m : Q.mats) As.push_back(m.embed(v));
  ArchParam par{Q.d, !v.is_real};
  int n = par.dim();
  auto obj = [&](const std::vector<double>& s) { return arch_objective(As, par.unpack(s)); };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::pair<double, std::vector<double>> best{obj(std::vector<double>(n, 0.0)),
                                              std::vector<double>(n, 0.0)};
  for (int start = 0; start < starts; ++start) {
    std::vector<double> x0(n, 0.0);
    if (start > 0) {
      double scale = start % 2 ? 0.6 : 2.0;
      for (auto& x : x0) x = scale * gauss(rng);
    }
    auto r = nelder_mead(obj, x0, 0.5, tol * 1e-3, 300 * n);
    // polish with a shrinking second pass from the found point
    r = nelder_mead(obj, r.second, 0.05, tol * 1e-4, 200 * n);
    if (r.first < best.first) best = r;
  }
  if (Q.d == 2 && v.is_real) {
    // deterministic grid refinement over the 2-parameter space
    std::vector<double> center(n, 0.0);
    double span = 3.0;
    for (int round = 0; round < 8; ++round) {
      std::vector<double> arg(n, 0.0), top = center;
      double val = obj(center);
      for (int i = -6; i <= 6; ++i)
        for (int j = -6; j <= 6; ++j) {
          arg[0] = center[0] + span * i / 6.0;
          arg[1] = center[1] + span * j / 6.0;
          double f = obj(arg);
          if (f < val) {
            val = f;
            top = arg;
          }
        }
      center = top;
      span /= 4.0;
      if (val < best.first) best = {val, center};
    }
  }
  if (arg_out) *arg_out = best.second;
  return best.first;
}

}  // namespace

ArchMinNorm minimal_norm_arch(const MatrixSet& Q, const ArchPlace& v, double tol,
                              uint64_t seed) {
  if (Q.mats.empty()) throw Error(ErrorCode::FieldMismatch, "empty matrix set");
  ArchParam par{Q.d, !v.is_real};
  std::vector<double> best_arg;
  double best = conjugated_norm_upper(Q, v, tol, seed, 9, &best_arg);

  // lower bound from eigenvalues of small power sets
  double lower = -std::numeric_limits<double>::infinity();
  LocalModel am = LocalModel::archimedean(v);
  MatrixSet cur;
  cur.field = Q.field;
  cur.d = Q.d;
  cur.sl = Q.sl;
  cur.mats = dedup_sorted(Q.mats);
  size_t budget = 2048;
  for (int q = 1; q <= Q.d * Q.d; ++q) {
    if (q > 1) {
      auto [next, trunc] = level_up(cur.mats, Q.mats, budget);
      cur.mats = std::move(next);  // truncated lowers are still valid
    }
    double lam = lambda_max(cur, am);
    if (lam > 0) lower = std::max(lower, std::log(lam) / q);
  }

  ArchMinNorm out;
  out.bounds.lower = lower;
  out.bounds.upper = best;
  if (out.bounds.lower > out.bounds.upper) out.bounds.lower = out.bounds.upper;
  out.bounds.exact = out.bounds.upper - out.bounds.lower <= 1e-12;
  std::vector<Eigen::MatrixXcd> As;
  for (auto& m : Q.mats) As.push_back(m.embed(v));
  arch_objective(As, par.unpack(best_arg), &out.conjugator);
  return out;
}

// ---- geometry ----

double displacement_arch(const KMatrix& g, const ArchPlace& v, const Eigen::MatrixXcd& conj) {
  Eigen::MatrixXcd m = conj.inverse() * g.embed(v) * conj;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  double s = 0;
  for (int i = 0; i < m.rows(); ++i) {
    double l = std::log(svd.singularValues()(i));
    s += l * l;
  }
  return std::sqrt(s);
}

namespace {

FieldElement kminor(const KMatrix& m, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
  int k = (int)rows.size();
  if (k == 1) return m.at(rows[0], cols[0]);
  FieldElement det = FieldElement::from_rational(m.field(), 0);
  for (int j = 0; j < k; ++j) {
    std::vector<int> sub_cols;
    for (int l = 0; l < k; ++l)
      if (l != j) sub_cols.push_back(cols[l]);
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    FieldElement term = m.at(rows[0], cols[j]) * kminor(m, sub_rows, sub_cols);
    det = j % 2 ? det - term : det + term;
  }
  return det;
}

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

double displacement_padic(const KMatrix& g, const FinitePlace& v, const KMatrix& conj) {
  KMatrix m = conj.inverse() * g * conj;
  int d = m.dim();
  // elementary divisor exponents from gcd valuations of k x k minors
  std::vector<Rat> dk(d + 1, Rat(0));
  for (int k = 1; k <= d; ++k) {
    std::vector<std::vector<int>> subs;
    subsets_of_size(d, k, subs);
    std::optional<Rat> best;
    for (auto& rows : subs)
      for (auto& cols : subs) {
        FieldElement mi = kminor(m, rows, cols);
        if (mi.is_zero()) continue;
        Rat val = exact_valuation(mi, v);
        if (!best || val < *best) best = val;
      }
    if (!best) throw Error(ErrorCode::DivideByZero, "singular matrix in displacement");
    dk[k] = *best;
  }
  double s = 0;
  for (int k = 1; k <= d; ++k) {
    double a = to_double(dk[k] - dk[k - 1]);
    s += a * a;
  }
  return std::sqrt(s);
}

KMatrix adjoint_rep(const KMatrix& g) {
  const FieldPtr& K = g.field();
  int d = g.dim();
  if (!(g.det() == FieldElement::from_rational(K, 1)))
    throw Error(ErrorCode::NotUnimodular, "adjoint representation needs det = 1");
  KMatrix ginv = g.inverse();
  // basis: E_ij (i<j), H_1..H_{d-1}, E_ij (i>j)
  std::vector<std::pair<int, int>> basis;  // (i,j) for E_ij; (-1,k) for H_k
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) basis.push_back({i, j});
  for (int k = 0; k < d - 1; ++k) basis.push_back({-1, k});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < i; ++j) basis.push_back({i, j});
  int n = d * d - 1;
  auto basis_matrix = [&](int idx) {
    KMatrix b(K, d);
    auto [i, j] = basis[idx];
    FieldElement one = FieldElement::from_rational(K, 1);
    if (i >= 0) {
      b.at(i, j) = one;
    } else {
      b.at(j, j) = one;
      b.at(j + 1, j + 1) = -one;
    }
    return b;
  };
  KMatrix ad(K, n);
  for (int col = 0; col < n; ++col) {
    KMatrix img = g * basis_matrix(col) * ginv;
    // coordinates: off-diagonals read directly, diagonal = partial sums on H's
    for (int row = 0; row < n; ++row) {
      auto [i, j] = basis[row];
      if (i >= 0) {
        ad.at(row, col) = img.at(i, j);
      } else {
        FieldElement c = FieldElement::from_rational(K, 0);
        for (int l = 0; l <= j; ++l) c = c + img.at(l, l);
        ad.at(row, col) = c;
      }
    }
  }
  return ad;
}

double triangular_frobenius_check(const Eigen::MatrixXcd& b, double norm) {
  int n = (int)b.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (std::abs(b(i, j)) > 1e-12)
        throw Error(ErrorCode::NotTriangular, "matrix is not upper triangular");
  if (norm <= 0) norm = op_norm(b);
  double off = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) off += std::norm(b(i, j));
  return n * (norm * norm - 1.0) - off;
}

}  // namespace hg
