#include "hg/kmatrix.hpp"

#include <sstream>

#include "hg/error.hpp"

namespace hg {

KMatrix::KMatrix(FieldPtr field, int n) : field_(std::move(field)), n_(n) {
  a_.assign((size_t)n * n, FieldElement::from_rational(field_, 0));
}

KMatrix KMatrix::identity(const FieldPtr& field, int n) {
  KMatrix m(field, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::from_rational(field, 1);
  return m;
}

KMatrix KMatrix::from_rational_entries(const FieldPtr& field,
                                       const std::vector<std::vector<Rat>>& rows) {
  int n = (int)rows.size();
  KMatrix m(field, n);
  for (int i = 0; i < n; ++i) {
    if ((int)rows[i].size() != n)
      throw Error(ErrorCode::FieldMismatch, "matrix rows must be square");
    for (int j = 0; j < n; ++j) m.at(i, j) = FieldElement::from_rational(field, rows[i][j]);
  }
  return m;
}

KMatrix KMatrix::operator*(const KMatrix& o) const {
  if (n_ != o.n_) throw Error(ErrorCode::FieldMismatch, "matrix size mismatch");
  KMatrix r(field_, n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const FieldElement& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n_; ++j) r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
    }
  return r;
}

KMatrix KMatrix::operator+(const KMatrix& o) const {
  if (n_ != o.n_) throw Error(ErrorCode::FieldMismatch, "matrix size mismatch");
  KMatrix r(field_, n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

KMatrix KMatrix::operator-(const KMatrix& o) const {
  if (n_ != o.n_) throw Error(ErrorCode::FieldMismatch, "matrix size mismatch");
  KMatrix r(field_, n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

KMatrix KMatrix::scaled(const FieldElement& s) const {
  KMatrix r(field_, n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

KMatrix KMatrix::transpose() const {
  KMatrix r(field_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool KMatrix::operator==(const KMatrix& o) const {
  if (n_ != o.n_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!(a_[i] == o.a_[i])) return false;
  return true;
}

FieldElement KMatrix::trace() const {
  FieldElement t = FieldElement::from_rational(field_, 0);
  for (int i = 0; i < n_; ++i) t = t + at(i, i);
  return t;
}

FieldElement KMatrix::det() const {
  // Gaussian elimination over the field with running sign
  KMatrix m = *this;
  FieldElement d = FieldElement::from_rational(field_, 1);
  for (int k = 0; k < n_; ++k) {
    int piv = -1;
    for (int i = k; i < n_; ++i)
      if (!m.at(i, k).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return FieldElement::from_rational(field_, 0);
    if (piv != k) {
      for (int j = 0; j < n_; ++j) std::swap(m.at(k, j), m.at(piv, j));
      d = -d;
    }
    d = d * m.at(k, k);
    FieldElement inv = m.at(k, k).inverse();
    for (int i = k + 1; i < n_; ++i) {
      FieldElement f = m.at(i, k) * inv;
      if (f.is_zero()) continue;
      for (int j = k; j < n_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
    }
  }
  return d;
}

KMatrix KMatrix::inverse() const {
  KMatrix m = *this;
  KMatrix inv = identity(field_, n_);
  for (int k = 0; k < n_; ++k) {
    int piv = -1;
    for (int i = k; i < n_; ++i)
      if (!m.at(i, k).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) throw Error(ErrorCode::DivideByZero, "singular matrix");
    if (piv != k)
      for (int j = 0; j < n_; ++j) {
        std::swap(m.at(k, j), m.at(piv, j));
        std::swap(inv.at(k, j), inv.at(piv, j));
      }
    FieldElement f = m.at(k, k).inverse();
    for (int j = 0; j < n_; ++j) {
      m.at(k, j) = m.at(k, j) * f;
      inv.at(k, j) = inv.at(k, j) * f;
    }
    for (int i = 0; i < n_; ++i) {
      if (i == k || m.at(i, k).is_zero()) continue;
      FieldElement g = m.at(i, k);
      for (int j = 0; j < n_; ++j) {
        m.at(i, j) = m.at(i, j) - g * m.at(k, j);
        inv.at(i, j) = inv.at(i, j) - g * inv.at(k, j);
      }
    }
  }
  return inv;
}

KMatrix KMatrix::pow(unsigned long e) const {
  KMatrix r = identity(field_, n_);
  KMatrix base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

KPoly KMatrix::charpoly() const {
  // Faddeev-LeVerrier over the field
  int n = n_;
  FieldElement zero = FieldElement::from_rational(field_, 0);
  KPoly chi((size_t)n + 1, zero);
  chi[n] = FieldElement::from_rational(field_, 1);
  KMatrix B = *this;
  for (int k = 1; k <= n; ++k) {
    FieldElement tr = B.trace();
    FieldElement ck = tr * FieldElement::from_rational(field_, Rat(-1, (long)k));
    chi[n - k] = ck;
    if (k == n) break;
    for (int i = 0; i < n; ++i) B.at(i, i) = B.at(i, i) + ck;
    B = *this * B;
  }
  return chi;
}

bool KMatrix::is_identity() const { return *this == identity(field_, n_); }

bool KMatrix::is_upper_triangular() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

Eigen::MatrixXcd KMatrix::embed(const ArchPlace& v) const {
  Eigen::MatrixXcd m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = at(i, j).embed(v);
  return m;
}

std::string KMatrix::key() const {
  std::ostringstream os;
  os << n_ << "|";
  for (auto& x : a_) os << x.key() << "/";
  return os.str();
}

}  // namespace hg
