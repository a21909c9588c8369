#ifndef HG_ARITH_HPP
#define HG_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hg {

using Int = mpz_class;
using Rat = mpq_class;

inline Int abs(const Int& a) { return ::abs(a); }

// p-adic valuation of a nonzero integer.
long valp(const Int& a, const Int& p);

// p-adic valuation of a nonzero rational.
long valp(const Rat& a, const Int& p);

Int pow(const Int& base, unsigned long e);
Rat pow(const Rat& base, long e);

// a^e mod m, e >= 0.
Int powmod(const Int& a, const Int& e, const Int& m);

// Inverse of a mod m; a must be coprime to m.
Int invmod(const Int& a, const Int& m);

bool is_probable_prime(const Int& n);

// Full factorization of |n| (n != 0), Pollard rho for the hard cofactors.
std::map<Int, unsigned> factorize(const Int& n);

// Distinct primes dividing numerator or denominator.
std::vector<Int> support(const Rat& q);

Int euler_phi(unsigned long m);

// Largest m with phi(m) <= bound.
unsigned long max_order_with_phi_bound(unsigned long bound);

double to_double(const Rat& q);

std::string to_string(const Int& a);
std::string to_string(const Rat& a);

// Square root in Z_p to precision p^N: returns r with r^2 = a mod p^N, or
// nullopt when a is not a square unit pattern. Requires valp(a,p) == 0.
std::optional<Int> padic_sqrt(const Int& a, const Int& p, unsigned N);

}  // namespace hg

#endif
