#ifndef HG_KMATRIX_HPP
#define HG_KMATRIX_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hg/numberfield.hpp"

namespace hg {

// Exact square matrix over a number field K, row-major.
class KMatrix {
 public:
  KMatrix() = default;
  KMatrix(FieldPtr field, int n);
  static KMatrix identity(const FieldPtr& field, int n);
  static KMatrix from_rational_entries(const FieldPtr& field,
                                       const std::vector<std::vector<Rat>>& rows);

  const FieldPtr& field() const { return field_; }
  int dim() const { return n_; }
  FieldElement& at(int i, int j) { return a_[i * n_ + j]; }
  const FieldElement& at(int i, int j) const { return a_[i * n_ + j]; }

  KMatrix operator*(const KMatrix& o) const;
  KMatrix operator+(const KMatrix& o) const;
  KMatrix operator-(const KMatrix& o) const;
  KMatrix scaled(const FieldElement& s) const;
  KMatrix transpose() const;
  bool operator==(const KMatrix& o) const;

  FieldElement trace() const;
  FieldElement det() const;
  KMatrix inverse() const;  // DivideByZero when singular
  KMatrix pow(unsigned long e) const;

  // Characteristic polynomial det(xI - A), monic, degree n.
  KPoly charpoly() const;

  bool is_identity() const;
  bool is_upper_triangular() const;

  // Complex embedding at an archimedean place.
  Eigen::MatrixXcd embed(const ArchPlace& v) const;

  std::string key() const;  // canonical serialization for dedup

 private:
  FieldPtr field_;
  int n_ = 0;
  std::vector<FieldElement> a_;
};

}  // namespace hg

#endif
