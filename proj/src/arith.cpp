#include "hg/arith.hpp"

#include <cmath>
#include <cstdlib>

#include "hg/error.hpp"

namespace hg {

const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotMonic: return "NOT_MONIC";
    case ErrorCode::DegreeZero: return "DEGREE_ZERO";
    case ErrorCode::ReduciblePoly: return "REDUCIBLE_POLY";
    case ErrorCode::FieldMismatch: return "FIELD_MISMATCH";
    case ErrorCode::DivideByZero: return "DIVIDE_BY_ZERO";
    case ErrorCode::ZeroElement: return "ZERO_ELEMENT";
    case ErrorCode::RamifiedUnsupported: return "RAMIFIED_UNSUPPORTED";
    case ErrorCode::PrecisionExhausted: return "PRECISION_EXHAUSTED";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::BudgetExceededNoUpper: return "BUDGET_EXCEEDED_NO_UPPER";
    case ErrorCode::OptimizerStalled: return "OPTIMIZER_STALLED";
    case ErrorCode::NotUnimodular: return "NOT_UNIMODULAR";
    case ErrorCode::NotTriangular: return "NOT_TRIANGULAR";
    case ErrorCode::NotSquarefree: return "NOT_SQUAREFREE";
    case ErrorCode::OneIsRoot: return "ONE_IS_ROOT";
    case ErrorCode::IndexExceeded: return "INDEX_EXCEEDED";
    case ErrorCode::NotFoundUpToN: return "NOT_FOUND_UP_TO_N";
    case ErrorCode::FactorizationUnsupported: return "FACTORIZATION_UNSUPPORTED";
    case ErrorCode::Usage: return "USAGE";
  }
  return "UNKNOWN";
}

long valp(const Int& a, const Int& p) {
  Int x = ::abs(a);
  if (x == 0) throw Error(ErrorCode::ZeroElement, "valuation of zero");
  long v = 0;
  Int q, r;
  while (true) {
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    x = q;
    ++v;
  }
  return v;
}

long valp(const Rat& a, const Int& p) {
  if (a == 0) throw Error(ErrorCode::ZeroElement, "valuation of zero");
  long v = 0;
  if (a.get_num() != 0) v += valp(a.get_num(), p);
  v -= valp(a.get_den(), p);
  return v;
}

Int pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat pow(const Rat& base, long e) {
  if (e >= 0) {
    Rat r(pow(Int(base.get_num()), (unsigned long)e), pow(Int(base.get_den()), (unsigned long)e));
    r.canonicalize();
    return r;
  }
  if (base == 0) throw Error(ErrorCode::DivideByZero, "0^negative");
  Rat r(pow(Int(base.get_den()), (unsigned long)(-e)), pow(Int(base.get_num()), (unsigned long)(-e)));
  r.canonicalize();
  return r;
}

Int powmod(const Int& a, const Int& e, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int invmod(const Int& a, const Int& m) {
  Int r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw Error(ErrorCode::DivideByZero, "not invertible mod m");
  return r;
}

bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

namespace {

Int pollard_rho(const Int& n) {
  // Brent's variant; n odd composite, not a prime power of small primes.
  gmp_randstate_t st;
  gmp_randinit_mt(st);
  gmp_randseed_ui(st, 0x9e3779b9u);
  while (true) {
    Int c, x;
    mpz_urandomm(c.get_mpz_t(), st, n.get_mpz_t());
    mpz_urandomm(x.get_mpz_t(), st, n.get_mpz_t());
    if (c == 0) c = 1;
    Int y = x, d = 1;
    auto f = [&](const Int& v) -> Int { return (v * v + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      if (x == y) break;
      Int diff = x > y ? x - y : y - x;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) {
      gmp_randclear(st);
      return d;
    }
  }
}

void factor_rec(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n]++;
    return;
  }
  // perfect power check helps rho
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
      Int r;
      if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k)) {
        std::map<Int, unsigned> sub;
        factor_rec(r, sub);
        for (auto& [p, e] : sub) out[p] += e * k;
        return;
      }
    }
  }
  Int d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::map<Int, unsigned> factorize(const Int& n) {
  if (n == 0) throw Error(ErrorCode::ZeroElement, "factorize(0)");
  std::map<Int, unsigned> out;
  Int x = ::abs(n);
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
    while (x % p == 0) {
      out[Int(p)]++;
      x /= p;
    }
  }
  factor_rec(x, out);
  return out;
}

std::vector<Int> support(const Rat& q) {
  std::vector<Int> out;
  if (q == 0) return out;
  for (auto& [p, e] : factorize(Int(q.get_num()))) out.push_back(p);
  for (auto& [p, e] : factorize(Int(q.get_den()))) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int euler_phi(unsigned long m) {
  Int r = 1;
  Int mm(static_cast<unsigned long>(m));
  for (auto& [p, e] : factorize(mm)) r *= pow(p, e - 1) * (p - 1);
  return r;
}

unsigned long max_order_with_phi_bound(unsigned long bound) {
  unsigned long best = 1;
  // phi(m) >= sqrt(m/2), so m <= 2*(bound+1)^2 suffices.
  unsigned long cap = 2 * (bound + 1) * (bound + 1);
  for (unsigned long m = 1; m <= cap; ++m)
    if (euler_phi(m) <= bound) best = m;
  return best;
}

double to_double(const Rat& q) { return mpq_get_d(q.get_mpq_t()); }

std::string to_string(const Int& a) { return a.get_str(); }
std::string to_string(const Rat& a) { return a.get_str(); }

std::optional<Int> padic_sqrt(const Int& a, const Int& p, unsigned N) {
  Int pN = pow(p, N);
  Int u = ((a % pN) + pN) % pN;
  if (u % p == 0) return std::nullopt;
  if (p == 2) {
    if (N <= 3) {
      for (Int r = 1; r < pN; r += 2)
        if ((r * r - u) % pN == 0) return r;
      return std::nullopt;
    }
    if (u % 8 != 1) return std::nullopt;
    // lift mod 2^k step by step
    Int r = 1;
    for (unsigned k = 3; k < N; ++k) {
      Int mod = pow(p, k + 1);
      if ((r * r - u) % mod != 0) r += pow(p, k - 1);
      if ((r * r - u) % mod != 0) return std::nullopt;
    }
    return r % pN;
  }
  // find sqrt mod p by exhaustive/Tonelli (p small in practice; use powmod test)
  Int up = u % p;
  if (powmod(up, (p - 1) / 2, p) != 1 && up != 0) return std::nullopt;
  Int r0 = 0;
  if (p % 4 == 3) {
    r0 = powmod(up, (p + 1) / 4, p);
  } else {
    for (Int r = 1; r < p; ++r)
      if ((r * r - up) % p == 0) {
        r0 = r;
        break;
      }
  }
  if ((r0 * r0 - up) % p != 0) return std::nullopt;
  // Newton lift: r -> r - (r^2-u)/(2r)
  Int r = r0;
  Int mod = p;
  while (mod < pN) {
    mod = mod * mod;
    if (mod > pN) mod = pN;
    Int inv = invmod(2 * r % mod, mod);
    r = (r - (r * r - u) % mod * inv) % mod;
    r = ((r % mod) + mod) % mod;
  }
  if ((r * r - u) % pN != 0) return std::nullopt;
  return r;
}

}  // namespace hg
