#ifndef HG_HEIGHTS_HPP
#define HG_HEIGHTS_HPP

#include <string>
#include <vector>

#include "hg/local.hpp"

namespace hg {

struct PlaceContribution {
  std::string place_id;  // "arch:<k>" or "p:<prime>:<index>"
  int n_v = 1;
  double lower = 0.0;  // contribution to the degree-normalized sum
  double upper = 0.0;
  bool exact = false;
};

struct HeightReport {
  LogBounds total;
  LogBounds finite_part;
  LogBounds infinite_part;
  std::vector<PlaceContribution> rows;
  int degree_normalizer = 1;
};

// h(F) = (1/[K:Q]) sum_v n_v log+ ||F||_v.
HeightReport set_height(const MatrixSet& F);

// e(F) = (1/[K:Q]) sum_v n_v log+ E_v(F): exact at finite places, bracketed
// at archimedean ones. extra_primes forces evaluation at additional primes.
HeightReport minimal_height(const MatrixSet& F, double arch_tol = 1e-6,
                            const std::vector<Int>& extra_primes = {});

// hhat(F) = lim (1/n) h(F^n): per-place spectral radius brackets, upper
// additionally clamped by min_{n<=n_max} (1/n) h(F^n).
LogBounds normalized_height_bounds(const MatrixSet& F, int n_max = 12, size_t budget = 4096);

// (1/[K:Q]) sum over archimedean v with |x|_v >= A of n_v log+ |x|_v.
double truncated_arch_height(const FieldElement& x, double A);

struct EigenvalueHeightRow {
  std::vector<int> letters;
  ZPoly min_poly;  // minimal polynomial over Q of the eigenvalue
  double height = 0.0;
};

// Heights of eigenvalues of all word products of length <= word_len; minimal
// polynomials over Q obtained from the norm form of the characteristic
// polynomial over K.
std::vector<EigenvalueHeightRow> eigenvalue_heights(const MatrixSet& F, int word_len);

// Norm form N_{K/Q}(c(x)) of a polynomial c over K: the rational polynomial
// Res_y(f(y), c_y(x)); its rational irreducible factors carry the minimal
// polynomials of the roots of c.
QPoly norm_form(const FieldPtr& K, const KPoly& c);

}  // namespace hg

#endif
