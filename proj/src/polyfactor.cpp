#include "hg/polyfactor.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hg/error.hpp"

namespace hg {

namespace {

MPoly trimm(MPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

MPoly mod_add(const MPoly& a, const MPoly& b, const Int& m) {
  MPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  for (auto& c : r) c = ((c % m) + m) % m;
  return trimm(std::move(r));
}

MPoly mod_sub(const MPoly& a, const MPoly& b, const Int& m) {
  MPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  for (auto& c : r) c = ((c % m) + m) % m;
  return trimm(std::move(r));
}

}  // namespace

MPoly mod_reduce(const ZPoly& p, const Int& m) {
  MPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = ((p[i] % m) + m) % m;
  return trimm(std::move(r));
}

MPoly mod_mul(const MPoly& a, const MPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % m;
  return trimm(std::move(r));
}

std::pair<MPoly, MPoly> mod_divmod(const MPoly& a, const MPoly& b, const Int& m) {
  // b must have invertible leading coefficient mod m
  MPoly r = a;
  Int inv = invmod(b.back(), m);
  MPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Int(0));
  while (r.size() >= b.size() && !r.empty()) {
    Int f = r.back() * inv % m;
    size_t shift = r.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i)
      r[shift + i] = ((r[shift + i] - f * b[i]) % m + m) % m;
    r = trimm(std::move(r));
  }
  return {trimm(std::move(q)), std::move(r)};
}

MPoly mod_monic(const MPoly& a, const Int& p) {
  if (a.empty()) return a;
  Int inv = invmod(a.back(), p);
  MPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * inv % p;
  return r;
}

MPoly mod_gcd(const MPoly& a, const MPoly& b, const Int& p) {
  MPoly x = trimm(a), y = trimm(b);
  while (!y.empty()) {
    MPoly r = mod_divmod(x, y, p).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.empty() ? x : mod_monic(x, p);
}

MPoly mod_powmod(const MPoly& a, const Int& e, const MPoly& mod, const Int& p) {
  MPoly base = mod_divmod(a, mod, p).second;
  MPoly result{Int(1)};
  Int ee = e;
  while (ee > 0) {
    if (mpz_odd_p(ee.get_mpz_t()))
      result = mod_divmod(mod_mul(result, base, p), mod, p).second;
    base = mod_divmod(mod_mul(base, base, p), mod, p).second;
    ee >>= 1;
  }
  return result;
}

namespace {

// Extended Euclid mod prime p: s*a + t*b = gcd (monic).
void mod_ext_gcd(const MPoly& a, const MPoly& b, const Int& p, MPoly& g, MPoly& s, MPoly& t) {
  MPoly r0 = trimm(a), r1 = trimm(b);
  MPoly s0{Int(1)}, s1{}, t0{}, t1{Int(1)};
  while (!r1.empty()) {
    auto [q, r2] = mod_divmod(r0, r1, p);
    MPoly s2 = mod_sub(s0, mod_mul(q, s1, p), p);
    MPoly t2 = mod_sub(t0, mod_mul(q, t1, p), p);
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  Int inv = invmod(r0.back(), p);
  auto sc = [&](MPoly v) {
    for (auto& c : v) c = c * inv % p;
    return v;
  };
  g = sc(r0);
  s = sc(s0);
  t = sc(t0);
}

// Equal-degree splitting of monic squarefree f (all factors of degree d).
void edf(const MPoly& f, int d, const Int& p, std::mt19937_64& rng, std::vector<MPoly>& out) {
  int n = (int)f.size() - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  MPoly g;
  while (true) {
    MPoly r(n);
    for (int i = 0; i < n; ++i) r[i] = Int((unsigned long)(rng() % 1000000007ULL)) % p;
    r = trimm(std::move(r));
    if (r.size() <= 1) continue;
    if (p == 2) {
      // trace map sum r^{2^i}, i < d
      MPoly tr = r, cur = r;
      for (int i = 1; i < d; ++i) {
        cur = mod_divmod(mod_mul(cur, cur, p), f, p).second;
        tr = mod_add(tr, cur, p);
      }
      g = mod_gcd(tr, f, p);
    } else {
      Int e = (pow(p, (unsigned long)d) - 1) / 2;
      MPoly h = mod_powmod(r, e, f, p);
      h = mod_sub(h, MPoly{Int(1)}, p);
      g = mod_gcd(h, f, p);
    }
    if (!g.empty() && (int)g.size() - 1 > 0 && (int)g.size() - 1 < n) break;
  }
  edf(g, d, p, rng, out);
  edf(mod_divmod(f, g, p).first, d, p, rng, out);
}

}  // namespace

std::vector<MPoly> factor_mod_p(const MPoly& f_in, const Int& p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  MPoly f = mod_monic(trimm(f_in), p);
  std::vector<MPoly> out;
  // distinct-degree
  MPoly x{Int(0), Int(1)};
  MPoly h = x;
  MPoly rest = f;
  int d = 0;
  while ((int)rest.size() - 1 > 0) {
    ++d;
    if (2 * d > (int)rest.size() - 1) {
      out.push_back(rest);
      break;
    }
    h = mod_powmod(h, p, rest, p);
    MPoly g = mod_gcd(mod_sub(h, x, p), rest, p);
    if (!g.empty() && (int)g.size() - 1 > 0) {
      edf(g, d, p, rng, out);
      rest = mod_divmod(rest, g, p).first;
      h = mod_divmod(h, rest, p).second;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool irreducible_mod_p(const MPoly& f, const Int& p) {
  MPoly g = mod_monic(trimm(f), p);
  int n = (int)g.size() - 1;
  if (n <= 0) return false;
  if (mod_gcd(g, mod_reduce(derivative(ZPoly(g.begin(), g.end())), p), p).size() > 1) return false;
  return factor_mod_p(g, p).size() == 1;
}

std::vector<MPoly> hensel_lift(const ZPoly& f, std::vector<MPoly> factors, const Int& p,
                               unsigned N) {
  if (factors.size() == 1) {
    // the factor is f itself mod p^N (monic)
    return {mod_reduce(f, pow(p, N))};
  }
  // split into two halves, lift the pair, recurse
  size_t half = factors.size() / 2;
  MPoly g{Int(1)}, h{Int(1)};
  for (size_t i = 0; i < half; ++i) g = mod_mul(g, factors[i], p);
  for (size_t i = half; i < factors.size(); ++i) h = mod_mul(h, factors[i], p);
  MPoly gg, s, t;
  mod_ext_gcd(g, h, p, gg, s, t);
  if (gg.size() != 1) throw Error(ErrorCode::PrecisionExhausted, "factors not coprime mod p");
  // linear Hensel steps
  Int pk = p;
  MPoly G = g, H = h;
  for (unsigned k = 1; k < N; ++k) {
    Int pk1 = pk * p;
    // e = (f - G*H)/p^k mod p
    ZPoly prod(std::max<size_t>(G.size() + H.size() - 1, 1), Int(0));
    for (size_t i = 0; i < G.size(); ++i)
      for (size_t j = 0; j < H.size(); ++j) prod[i + j] += G[i] * H[j];
    ZPoly diff(std::max(f.size(), prod.size()), Int(0));
    for (size_t i = 0; i < f.size(); ++i) diff[i] += f[i];
    for (size_t i = 0; i < prod.size(); ++i) diff[i] -= prod[i];
    MPoly e(diff.size());
    for (size_t i = 0; i < diff.size(); ++i) {
      Int q = diff[i] / pk;
      e[i] = ((q % p) + p) % p;
    }
    e = trimm(std::move(e));
    if (e.empty()) {
      pk = pk1;
      continue;
    }
    auto [q, dg] = mod_divmod(mod_mul(t, e, p), g, p);
    MPoly dh = mod_add(mod_mul(s, e, p), mod_mul(q, h, p), p);
    // G += p^k dg ; H += p^k dh
    if (G.size() < g.size()) G.resize(g.size(), Int(0));
    if (H.size() < h.size()) H.resize(h.size(), Int(0));
    for (size_t i = 0; i < dg.size(); ++i) G[i] = (G[i] + pk * dg[i]) % pk1;
    for (size_t i = 0; i < dh.size(); ++i) H[i] = (H[i] + pk * dh[i]) % pk1;
    pk = pk1;
  }
  std::vector<MPoly> left(factors.begin(), factors.begin() + half);
  std::vector<MPoly> right(factors.begin() + half, factors.end());
  auto lift_side = [&](const MPoly& side, std::vector<MPoly>& fs) {
    ZPoly z(side.begin(), side.end());
    return hensel_lift(z, fs, p, N);
  };
  std::vector<MPoly> out;
  if (left.size() == 1) {
    out.push_back(G);
  } else {
    for (auto& m : lift_side(G, left)) out.push_back(m);
  }
  if (right.size() == 1) {
    out.push_back(H);
  } else {
    for (auto& m : lift_side(H, right)) out.push_back(m);
  }
  return out;
}

namespace {

// Factor a primitive squarefree integer polynomial (degree >= 1).
std::vector<ZPoly> factor_squarefree(ZPoly g) {
  std::vector<ZPoly> out;
  if (degree(g) <= 1) {
    out.push_back(g);
    return out;
  }
  if (g.back() < 0)
    for (auto& c : g) c = -c;
  // pick a prime where g stays squarefree, with fewest modular factors
  static const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  Int best_p = 0;
  std::vector<MPoly> best_factors;
  int tried = 0;
  for (long pl : primes) {
    Int p(pl);
    if (g.back() % p == 0) continue;
    MPoly gp = mod_reduce(g, p);
    MPoly gpd = mod_reduce(derivative(g), p);
    if (mod_gcd(gp, gpd, p).size() > 1) continue;
    auto fs = factor_mod_p(gp, p);
    if (best_p == 0 || fs.size() < best_factors.size()) {
      best_p = p;
      best_factors = fs;
    }
    if (++tried >= 4 || best_factors.size() == 1) break;
  }
  if (best_p == 0) throw Error(ErrorCode::PrecisionExhausted, "no good prime for factorization");
  if (best_factors.size() == 1) {
    out.push_back(g);
    return out;
  }
  // Landau-Mignotte style bound
  double norm2 = 0;
  for (auto& c : g) norm2 += mpz_get_d(c.get_mpz_t()) * mpz_get_d(c.get_mpz_t());
  double bound = std::ldexp(std::sqrt(norm2), degree(g) + 1) * mpz_get_d(g.back().get_mpz_t());
  unsigned N = 1;
  double pw = mpz_get_d(best_p.get_mpz_t());
  double acc = pw;
  while (acc < 2 * bound + 2) {
    acc *= pw;
    ++N;
  }
  Int pN = pow(best_p, N);
  auto lifted = hensel_lift(g, best_factors, best_p, N);
  // subset recombination
  std::vector<bool> used(lifted.size(), false);
  ZPoly rem = g;
  auto symm = [&](Int c) {
    c = ((c % pN) + pN) % pN;
    if (2 * c > pN) c -= pN;
    return c;
  };
  for (size_t card = 1; card <= lifted.size(); ++card) {
    bool progress = true;
    while (progress) {
      progress = false;
      size_t r = lifted.size();
      std::vector<size_t> avail;
      for (size_t i = 0; i < r; ++i)
        if (!used[i]) avail.push_back(i);
      if (card > avail.size()) break;
      std::vector<size_t> idx(card);
      std::function<bool(size_t, size_t)> rec = [&](size_t pos, size_t start) -> bool {
        if (pos == card) {
          MPoly prod{((rem.back() % pN) + pN) % pN};
          for (size_t i = 0; i < card; ++i) prod = mod_mul(prod, lifted[avail[idx[i]]], pN);
          ZPoly cand(prod.size());
          for (size_t i = 0; i < prod.size(); ++i) cand[i] = symm(prod[i]);
          cand = primitive_part(trim(std::move(cand)));
          if (cand.empty() || degree(cand) < 1) return false;
          // test divisibility over Q with integral quotient
          auto [q, rr] = divmod(to_qpoly(rem), to_qpoly(cand));
          if (!rr.empty()) return false;
          auto [zq, den] = clear_denominators(q);
          if (den != 1) return false;
          out.push_back(cand);
          for (size_t i = 0; i < card; ++i) used[avail[idx[i]]] = true;
          rem = zq;
          return true;
        }
        for (size_t s = start; s < avail.size(); ++s) {
          idx[pos] = s;
          if (rec(pos + 1, s + 1)) return true;
        }
        return false;
      };
      if (rec(0, 0)) progress = true;
    }
  }
  if (degree(rem) >= 1) out.push_back(primitive_part(rem));
  return out;
}

}  // namespace

std::vector<ZPoly> factor_over_z(const ZPoly& f_in) {
  ZPoly f = trim(f_in);
  if (f.empty()) throw Error(ErrorCode::ZeroElement, "factor of zero polynomial");
  std::vector<ZPoly> out;
  if (degree(f) == 0) return out;
  f = primitive_part(f);
  // Yun squarefree decomposition over Q
  QPoly q = to_qpoly(f);
  QPoly d = derivative(q);
  QPoly a = gcd(q, d);
  QPoly b = divmod(q, a).first;
  QPoly c = divmod(d, a).first;
  QPoly z = sub(c, derivative(b));
  int mult = 1;
  while (degree(b) >= 1) {
    QPoly g = gcd(b, z);
    if (degree(g) >= 1) {
      auto [zg, den] = clear_denominators(g);
      auto fs = factor_squarefree(primitive_part(zg));
      for (auto& fac : fs)
        for (int i = 0; i < mult; ++i) out.push_back(fac);
    }
    b = divmod(b, g).first;
    z = sub(divmod(z, g).first, derivative(b));
    ++mult;
  }
  return out;
}

bool is_irreducible_over_q(const ZPoly& f_in) {
  ZPoly f = primitive_part(trim(f_in));
  int n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  // quick certificate: irreducible mod some small prime
  for (long pl : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
    Int p(pl);
    if (f.back() % p == 0) continue;
    MPoly fp = mod_reduce(f, p);
    if ((int)fp.size() - 1 != n) continue;
    if (irreducible_mod_p(fp, p)) return true;
  }
  // squarefree test over Q
  QPoly q = to_qpoly(f);
  if (degree(gcd(q, derivative(q))) >= 1) return false;
  return factor_over_z(f).size() == 1;
}

}  // namespace hg
