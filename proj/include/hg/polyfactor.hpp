#ifndef HG_POLYFACTOR_HPP
#define HG_POLYFACTOR_HPP

#include <vector>

#include "hg/poly.hpp"

namespace hg {

// Polynomials over Z/m (m prime or prime power), coefficients reduced to [0,m).
using MPoly = std::vector<Int>;

MPoly mod_reduce(const ZPoly& p, const Int& m);
MPoly mod_mul(const MPoly& a, const MPoly& b, const Int& m);
// division by monic b
std::pair<MPoly, MPoly> mod_divmod(const MPoly& a, const MPoly& b, const Int& m);
MPoly mod_gcd(const MPoly& a, const MPoly& b, const Int& p);  // p prime, monic gcd
MPoly mod_powmod(const MPoly& a, const Int& e, const MPoly& mod, const Int& p);
MPoly mod_monic(const MPoly& a, const Int& p);

// Distinct-degree + Cantor-Zassenhaus factorization of a squarefree monic
// polynomial over F_p. Returns monic irreducible factors.
std::vector<MPoly> factor_mod_p(const MPoly& f, const Int& p, uint64_t seed = 1);

bool irreducible_mod_p(const MPoly& f, const Int& p);

// Hensel-lift the coprime factorization f = prod(factors) mod p to mod p^N.
// f monic over Z, factors monic mod p, pairwise coprime mod p.
std::vector<MPoly> hensel_lift(const ZPoly& f, std::vector<MPoly> factors, const Int& p,
                               unsigned N);

// Full factorization over Z (primitive part; Zassenhaus, desk-scale degrees).
// Returns primitive factors with multiplicity, leading content dropped into
// the first slot sign/content as needed. Input nonzero.
std::vector<ZPoly> factor_over_z(const ZPoly& f);

// Irreducibility over Q of a nonconstant integer polynomial.
bool is_irreducible_over_q(const ZPoly& f);

}  // namespace hg

#endif
