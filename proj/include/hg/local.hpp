#ifndef HG_LOCAL_HPP
#define HG_LOCAL_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "hg/kmatrix.hpp"

namespace hg {

// One completion of the ambient number field.
struct LocalModel {
  enum class Kind { Archimedean, Padic };
  Kind kind = Kind::Archimedean;
  ArchPlace arch;     // valid when archimedean
  FinitePlace place;  // valid when p-adic

  static LocalModel archimedean(const ArchPlace& v) {
    LocalModel m;
    m.kind = Kind::Archimedean;
    m.arch = v;
    return m;
  }
  static LocalModel padic(const FinitePlace& v) {
    LocalModel m;
    m.kind = Kind::Padic;
    m.place = v;
    return m;
  }
  bool is_arch() const { return kind == Kind::Archimedean; }
};

// Finite set of d x d matrices over a number field.
struct MatrixSet {
  FieldPtr field;
  int d = 0;
  std::vector<KMatrix> mats;
  bool sl = true;

  void validate() const;  // NotUnimodular when sl set and some det != 1
};

struct LogBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;
};

struct Word {
  std::vector<int> letters;
  KMatrix product;
};

// ---- norms and eigenvalues ----

// sup_{g in Q} ||g||_v (largest singular value / sup of entry absolute values).
double set_norm(const MatrixSet& Q, const LocalModel& m);
// log_p ||Q||_v as an exact rational (p-adic models).
Rat set_norm_logp(const MatrixSet& Q, const FinitePlace& v);

// Lambda(Q) = max over Q of the maximal eigenvalue absolute value.
double lambda_max(const MatrixSet& Q, const LocalModel& m);
// Exact log_p Lambda(Q); nullopt means Lambda = 0 (all elements nilpotent).
std::optional<Rat> lambda_max_logp(const MatrixSet& Q, const FinitePlace& v);

// ---- power sets ----

struct PowerSetResult {
  MatrixSet set;
  bool truncated = false;
};

// All distinct products of exactly n factors, canonically ordered; truncated
// when the distinct count exceeds the budget (then uppers from it are invalid
// while lowers remain valid).
PowerSetResult power_set(const MatrixSet& Q, int n, size_t budget = 4096);
// One more multiplication level on an already-computed power set.
PowerSetResult power_set_step(const PowerSetResult& prev, const MatrixSet& Q,
                              size_t budget = 4096);

// ---- spectral radii and minimal norms ----

// Bracket for log R_v(Q): lower from Lambda(Q^n)^{1/n}, upper from
// ||Q^n||^{1/n} (archimedean) or the exact minimal norm (p-adic).
LogBounds spectral_radius_bounds(const MatrixSet& Q, const LocalModel& m, int n_max,
                                 size_t budget = 4096);

// E_v(Q) at a p-adic place, exact: max_{1<=q<=d^2} Lambda(Q^q)^{1/q}.
// Returned as log_p E (a rational).
Rat minimal_norm_padic_logp(const MatrixSet& Q, const FinitePlace& v, size_t budget = 65536);
double minimal_norm_padic(const MatrixSet& Q, const FinitePlace& v, size_t budget = 65536);

// Independent oracle (d in {2,3}, rational field): min over lattice classes
// within BFS radius of the standard vertex of the induced sup norm of Q.
// Returned as log_p of the minimum.
Rat lattice_bfs_oracle_logp(const MatrixSet& Q, const Int& p, int radius);
double lattice_bfs_oracle(const MatrixSet& Q, const Int& p, int radius);

// Archimedean minimal norm by optimization over unit-determinant positive
// conjugator forms; bounds in natural log, plus the best conjugator found.
struct ArchMinNorm {
  LogBounds bounds;           // natural log of E_v(Q)
  Eigen::MatrixXcd conjugator;  // x with ||x Q x^{-1}|| = exp(bounds.upper)
};
ArchMinNorm minimal_norm_arch(const MatrixSet& Q, const ArchPlace& v, double tol = 1e-6,
                              uint64_t seed = 7);

// ---- geometry ----

// d(g*x, x) at an archimedean place, base point x = conj * x0 in the symmetric
// space; sqrt of the sum of squared log singular values of conj^-1 g conj.
double displacement_arch(const KMatrix& g, const ArchPlace& v, const Eigen::MatrixXcd& conj);
// p-adic analog via elementary divisors, log base p.
double displacement_padic(const KMatrix& g, const FinitePlace& v, const KMatrix& conj);

// Matrix of X -> g X g^-1 on trace-zero matrices, basis (E_ij i<j, H_1..H_{d-1},
// E_ij i>j); requires det g = 1.
KMatrix adjoint_rep(const KMatrix& g);

// n*(||b||^2 - 1) - sum_{i<j} |b_ij|^2 for upper-triangular unit-determinant b;
// pass norm <= 0 to have the operator norm computed internally.
double triangular_frobenius_check(const Eigen::MatrixXcd& b, double norm = -1.0);

}  // namespace hg

#endif
