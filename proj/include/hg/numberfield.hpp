#ifndef HG_NUMBERFIELD_HPP
#define HG_NUMBERFIELD_HPP

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hg/poly.hpp"
#include "hg/polyfactor.hpp"

namespace hg {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Archimedean place: a certified root of the minimal polynomial, one
// representative per conjugate pair (n_v = 2 for complex pairs).
struct ArchPlace {
  std::complex<double> root;
  double radius = 0.0;
  bool is_real = false;
  int n_v = 1;
};

// Finite place above p: monic local factor of the minimal polynomial over
// Z_p, stored mod p^precision.
struct FinitePlace {
  Int prime;
  MPoly local_factor;  // coefficients mod p^precision, monic
  int local_degree = 1;         // n_v = e * f_res
  int ramification_index = 1;   // e
  int residue_degree = 1;       // f_res
  unsigned precision = 0;       // N
  int index_above_p = 0;        // stable index among the places above p
};

class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  static FieldPtr create(const ZPoly& min_poly);

  const ZPoly& min_poly() const { return min_poly_; }
  int degree() const { return degree_; }
  const Int& discriminant() const { return disc_; }
  const std::vector<ArchPlace>& arch_places() const { return arch_places_; }
  bool is_rationals() const { return degree_ == 1; }
  // m such that min_poly == Phi_m, if any
  std::optional<unsigned long> cyclotomic_order() const { return cyclo_order_; }

  // Places above p at the given p-adic working precision (cached per key).
  std::vector<FinitePlace> finite_places(const Int& p, unsigned precision = 64) const;

 private:
  NumberField() = default;
  ZPoly min_poly_;
  int degree_ = 0;
  Int disc_;
  std::vector<ArchPlace> arch_places_;
  std::optional<unsigned long> cyclo_order_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<Int, unsigned>, std::vector<FinitePlace>> place_cache_;
};

class FieldElement {
 public:
  FieldElement() = default;  // zero of the rationals (detached)
  FieldElement(FieldPtr field, std::vector<Rat> coeffs);
  static FieldElement from_rational(const FieldPtr& field, const Rat& q);
  static FieldElement generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;  // lies in the prime field
  Rat rational_value() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inverse() const;
  bool operator==(const FieldElement& o) const;

  FieldElement pow(unsigned long e) const;

  // Field norm N_{K/Q}(x) as an exact rational.
  Rat norm() const;
  // Exact minimal polynomial over Z (primitive, positive leading coeff).
  ZPoly minimal_polynomial() const;

  // Complex embedding value at an archimedean place.
  std::complex<double> embed(const ArchPlace& v) const;

  std::string key() const;  // canonical serialization for hashing

 private:
  FieldPtr field_;
  std::vector<Rat> coeffs_;
};

// |x|_v at an archimedean place.
double abs_value(const FieldElement& x, const ArchPlace& v);
// |x|_v = p^{-val} at a finite place; returns the exact valuation val
// (log-base-p, may be a non-integer rational). Raises precision internally.
Rat exact_valuation(const FieldElement& x, const FinitePlace& v);
double abs_value(const FieldElement& x, const FinitePlace& v);

// Weil height h(x) = (1/[K:Q]) sum n_v log+ |x|_v.
double height(const FieldElement& x);
// Finite / infinite parts separately.
double height_finite(const FieldElement& x);
double height_infinite(const FieldElement& x);

// Independent oracle: log Mahler measure of the minimal polynomial of x
// divided by its degree. min_poly must be irreducible over Q.
double mahler_height_oracle(const ZPoly& min_poly_of_x);

// sum_v n_v log|x|_v over all places (should vanish by the product formula).
double product_formula_residual(const FieldElement& x);

// Primes p where some |x|_v can differ from 1.
std::vector<Int> contributing_primes(const FieldElement& x);

// Order m if x is a root of unity (phi(m) <= [K:Q]), nullopt otherwise.
std::optional<unsigned long> root_of_unity_order(const FieldElement& x);

// ---- polynomials over K ----
using KPoly = std::vector<FieldElement>;

KPoly ktrim(KPoly p);
KPoly kmul(const KPoly& a, const KPoly& b);
KPoly kadd(const KPoly& a, const KPoly& b);
KPoly ksub(const KPoly& a, const KPoly& b);
std::pair<KPoly, KPoly> kdivmod(const KPoly& a, const KPoly& b);
KPoly kgcd(const KPoly& a, const KPoly& b);  // monic
KPoly kderivative(const KPoly& p);
FieldElement keval(const KPoly& p, const FieldElement& x);
KPoly kfrom_q(const FieldPtr& K, const QPoly& p);
KPoly kfrom_z(const FieldPtr& K, const ZPoly& p);
bool kis_rational(const KPoly& p);          // all coefficients in Q
QPoly kto_q(const KPoly& p);                // requires kis_rational
FieldElement kresultant(const KPoly& a, const KPoly& b);

}  // namespace hg

#endif
