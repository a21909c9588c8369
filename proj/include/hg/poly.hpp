#ifndef HG_POLY_HPP
#define HG_POLY_HPP

#include <complex>
#include <utility>
#include <vector>

#include "hg/arith.hpp"

namespace hg {

// Dense univariate polynomials, coefficient c[i] of x^i, trimmed so that
// c.back() != 0 unless the polynomial is zero (empty vector).
using QPoly = std::vector<Rat>;
using ZPoly = std::vector<Int>;

QPoly trim(QPoly p);
ZPoly trim(ZPoly p);

inline int degree(const QPoly& p) { return (int)p.size() - 1; }
inline int degree(const ZPoly& p) { return (int)p.size() - 1; }
inline bool is_zero(const QPoly& p) { return p.empty(); }
inline bool is_zero(const ZPoly& p) { return p.empty(); }

QPoly to_qpoly(const ZPoly& p);
// Clears denominators: returns (integer poly H, common denominator c) with
// c*p = H and H primitive content not enforced.
std::pair<ZPoly, Int> clear_denominators(const QPoly& p);

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
QPoly scale(const QPoly& a, const Rat& s);
// Euclidean division, b != 0: a = q*b + r.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly gcd(const QPoly& a, const QPoly& b);  // monic gcd
QPoly derivative(const QPoly& p);
ZPoly derivative(const ZPoly& p);
Rat eval(const QPoly& p, const Rat& x);
Int eval(const ZPoly& p, const Int& x);
std::complex<double> eval(const QPoly& p, std::complex<double> x);

Int content(const ZPoly& p);
ZPoly primitive_part(const ZPoly& p);

// Resultant via Sylvester determinant with Bareiss elimination (exact).
Int resultant(const ZPoly& a, const ZPoly& b);
Rat resultant(const QPoly& a, const QPoly& b);
// Resultant where b has the prescribed formal degree deg_b (its top
// coefficients may vanish); b_padded has length deg_b + 1.
Int resultant_formal(const ZPoly& a, const std::vector<Int>& b_padded, int deg_b);
Int discriminant(const ZPoly& p);

// Number of distinct real roots via Sturm chains.
int count_real_roots(const QPoly& p);

// Cyclotomic polynomial Phi_m.
ZPoly cyclotomic(unsigned long m);

// All complex roots of a squarefree polynomial, Newton-polished. Returned
// with a certified-style radius bound n*|f(z)/f'(z)|.
struct ComplexRoot {
  std::complex<double> value;
  double radius;
};
std::vector<ComplexRoot> complex_roots(const QPoly& p);

std::string to_string(const QPoly& p);

}  // namespace hg

#endif
