#pragma once

#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "atlas/checked.hpp"
#include "atlas/rational.hpp"

namespace atlas {

using IntVec = std::vector<i64>;

/// Dense integer matrix with checked arithmetic.  Entry growth is detected,
/// never wrapped.
class IntegerMatrix {
 public:
  IntegerMatrix() : rows_(0), cols_(0) {}
  IntegerMatrix(int rows, int cols, i64 fill = 0)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, fill) {
    if (rows <= 0 || cols <= 0) throw domain_error("matrix dimensions must be positive");
  }
  IntegerMatrix(std::initializer_list<std::initializer_list<i64>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    if (rows_ <= 0 || cols_ <= 0) throw domain_error("matrix dimensions must be positive");
    for (const auto& row : init) {
      if (static_cast<int>(row.size()) != cols_) throw domain_error("ragged matrix literal");
      for (i64 v : row) e_.push_back(v);
    }
  }

  static IntegerMatrix identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  i64& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  i64 operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const IntegerMatrix& a, const IntegerMatrix& b) { return !(a == b); }
  friend bool operator<(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.e_ < b.e_;
  }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw domain_error("matrix product shape mismatch");
    IntegerMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        i64 aik = a(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j)
          c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
      }
    return c;
  }

  IntegerMatrix operator-() const {
    IntegerMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = checked_neg(e_[i]);
    return r;
  }

  friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw domain_error("matrix sum shape mismatch");
    IntegerMatrix c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = checked_add(a.e_[i], b.e_[i]);
    return c;
  }
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a + (-b);
  }

  IntegerMatrix transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Kronecker product; block (i,j) of the result is a(i,j) * b.
  friend IntegerMatrix kron(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix c(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) {
        if (a(i, j) == 0) continue;
        for (int k = 0; k < b.rows_; ++k)
          for (int l = 0; l < b.cols_; ++l)
            c(i * b.rows_ + k, j * b.cols_ + l) = checked_mul(a(i, j), b(k, l));
      }
    return c;
  }

  IntVec apply(const IntVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw domain_error("matrix apply shape mismatch");
    IntVec r(rows_, 0);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        r[i] = checked_add(r[i], checked_mul((*this)(i, j), v[j]));
    return r;
  }

  RatVec apply(const RatVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw domain_error("matrix apply shape mismatch");
    RatVec r(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[i] += Rational((*this)(i, j)) * v[j];
    return r;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  const std::vector<i64>& entries() const { return e_; }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
      os << "[";
      for (int j = 0; j < cols_; ++j) os << (*this)(i, j) << (j + 1 < cols_ ? "," : "");
      os << "]" << (i + 1 < rows_ ? "," : "");
    }
    os << "]";
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
    return os << m.str();
  }

 private:
  int rows_;
  int cols_;
  std::vector<i64> e_;
};

// Exact determinant by Bareiss fraction-free elimination.
inline i64 det(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw domain_error("determinant of non-square matrix");
  int n = m.rows();
  IntegerMatrix a = m;
  i64 prev = 1;
  i64 sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a(i, j) = checked_sub(checked_mul(a(i, j), a(k, k)), checked_mul(a(i, k), a(k, j))) / prev;
    prev = a(k, k);
  }
  return checked_mul(sign, a(n - 1, n - 1));
}

inline IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

inline IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

inline i64 dot(const IntVec& a, const IntVec& b) {
  i64 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

inline RatVec to_rat(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (i64 x : v) r.emplace_back(x);
  return r;
}

}  // namespace atlas
