#ifndef HG_STRUCTURE_HPP
#define HG_STRUCTURE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hg/local.hpp"

namespace hg {

struct SpanCertificate {
  int dimension = 0;
  std::vector<Word> basis_words;
};

// Greedy closure of the linear span of word products inside the d x d matrix
// algebra; dimension d^2 certifies absolute irreducibility. Id is adjoined.
SpanCertificate burnside_span(const MatrixSet& F);

struct QuasiUnipotentResult {
  bool certified_no = false;        // a word with a non-root-of-unity eigenvalue exists
  std::vector<int> witness;         // the word, when certified_no
  int searched_len = 0;
};

// Checks whether every word product of length <= word_len has a characteristic
// polynomial that is a product of cyclotomics.
QuasiUnipotentResult is_quasi_unipotent(const MatrixSet& F, int word_len);

// Extracts words of length <= 2k+1 generating a finite-index subgroup cut out
// by the membership predicate; k bounds the index.
using Membership = std::function<bool(const KMatrix&)>;
std::vector<Word> finite_index_generators(const MatrixSet& F, const Membership& in_gamma0,
                                          int k);

struct EscapeWitness {
  Word first;
  Word second;
  std::string predicate;
  int search_depth = 0;
};

// Breadth-first (length-lex) search for a pair of word products escaping the
// named subvariety. Registry: commuting_powers (param C), not_regular_semisimple,
// not_a1_regular (param A1), in_common_parabolic_d2.
EscapeWitness escape_search(const MatrixSet& F, const std::string& predicate, int depth,
                            int param = 0);

struct RegularityReport {
  bool regular_semisimple = false;
  bool a1_regular = false;
};

// regular_semisimple: squarefree characteristic polynomial; a1_regular:
// additionally no ratio of distinct eigenvalues is a root of unity of order
// <= A1 (tested exactly via the ratio polynomial and cyclotomic resultants).
RegularityReport regularity_predicates(const KMatrix& a, int A1);

struct TwoElementCertificate {
  Word a;
  Word b;
  RegularityReport reg_a;
  RegularityReport reg_b;
  int span_dimension = 0;
  bool escape_commuting_powers = false;
};

// First (length-lex) pair of word products that is A1-regular semisimple,
// spans the full matrix algebra, and fails commuting powers.
TwoElementCertificate two_element_reduction(const MatrixSet& F, int A1, int depth,
                                            int jordan_c = 12);

struct ProjectiveInvariantSet {
  bool found = false;
  int size = 0;
  std::vector<std::string> points;  // printable exact descriptions
};

// d = 2 only: searches for a finite subset of P^1 of size <= max_size
// permuted by every generator (orbit closures of exact eigen-directions,
// conjugate quadratic pairs handled as atoms).
ProjectiveInvariantSet projective_invariant_set_d2(const MatrixSet& F, int max_size);

}  // namespace hg

#endif
