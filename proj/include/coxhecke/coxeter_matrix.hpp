#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxhecke/errors.hpp"
#include "coxhecke/gen_subset.hpp"

namespace coxhecke {

/// Symmetric matrix m(s,t) with 1 on the diagonal and entries >= 2 off it.
/// An entry of 0 encodes infinity; such matrices are rejected by validate()
/// because only finite groups are supported.
class CoxeterMatrix {
 public:
  static constexpr int kInfinity = 0;

  CoxeterMatrix() = default;
  explicit CoxeterMatrix(int size) : size_(size), m_(static_cast<std::size_t>(size) * size, 2) {
    for (int s = 0; s < size; ++s) set(s, s, 1);
  }

  static CoxeterMatrix fromRows(const std::vector<std::vector<int>>& rows) {
    CoxeterMatrix cm(static_cast<int>(rows.size()));
    for (int s = 0; s < cm.size_; ++s) {
      if (static_cast<int>(rows[s].size()) != cm.size_) fail(ErrorKind::InvalidMatrix, "matrix is not square");
      for (int t = 0; t < cm.size_; ++t) cm.set(s, t, rows[s][t]);
    }
    cm.validate();
    return cm;
  }

  int size() const noexcept { return size_; }
  int operator()(int s, int t) const { return m_[static_cast<std::size_t>(s) * size_ + t]; }

  void set(int s, int t, int value) { m_[static_cast<std::size_t>(s) * size_ + t] = value; }
  void setSymmetric(int s, int t, int value) {
    set(s, t, value);
    set(t, s, value);
  }

  void validate() const {
    if (size_ < 0 || size_ > 31) fail(ErrorKind::InvalidMatrix, "rank must lie in 0..31");
    for (int s = 0; s < size_; ++s) {
      if ((*this)(s, s) != 1) fail(ErrorKind::InvalidMatrix, "diagonal entries must be 1");
      for (int t = 0; t < size_; ++t) {
        if (s == t) continue;
        const int v = (*this)(s, t);
        if (v != (*this)(t, s)) fail(ErrorKind::InvalidMatrix, "matrix is not symmetric");
        if (v == kInfinity) fail(ErrorKind::InvalidMatrix, "infinite entries are not supported");
        if (v < 2) fail(ErrorKind::InvalidMatrix, "off-diagonal entries must be >= 2");
      }
    }
  }

  /// The matrix of W_J, generators renumbered in increasing order of J.
  CoxeterMatrix restrict(GenSubset J) const {
    const auto idx = J.members();
    CoxeterMatrix r(static_cast<int>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) r.set(a, b, (*this)(idx[a], idx[b]));
    return r;
  }

  /// Block-diagonal sum: the matrix of the direct product.
  CoxeterMatrix directSum(const CoxeterMatrix& other) const {
    CoxeterMatrix r(size_ + other.size_);
    for (int s = 0; s < size_; ++s)
      for (int t = 0; t < size_; ++t) r.set(s, t, (*this)(s, t));
    for (int s = 0; s < other.size_; ++s)
      for (int t = 0; t < other.size_; ++t) r.set(size_ + s, size_ + t, other(s, t));
    return r;
  }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(size_, std::vector<int>(size_));
    for (int s = 0; s < size_; ++s)
      for (int t = 0; t < size_; ++t) out[s][t] = (*this)(s, t);
    return out;
  }

  bool operator==(const CoxeterMatrix&) const = default;

 private:
  int size_ = 0;
  std::vector<int> m_;
};

// Standard finite types, Bourbaki numbering (0-based).
namespace types {

inline CoxeterMatrix chain(int n, int lastBond = 3) {
  CoxeterMatrix m(n);
  for (int i = 0; i + 1 < n; ++i) m.setSymmetric(i, i + 1, 3);
  if (n >= 2) m.setSymmetric(n - 2, n - 1, lastBond);
  return m;
}

inline CoxeterMatrix A(int n) {
  if (n < 1) fail(ErrorKind::ParseError, "A_n needs n >= 1");
  return chain(n);
}

inline CoxeterMatrix B(int n) {
  if (n < 2) fail(ErrorKind::ParseError, "B_n needs n >= 2");
  return chain(n, 4);
}

inline CoxeterMatrix D(int n) {
  if (n < 4) fail(ErrorKind::ParseError, "D_n needs n >= 4");
  CoxeterMatrix m(n);
  for (int i = 0; i + 2 < n; ++i) m.setSymmetric(i, i + 1, 3);
  m.setSymmetric(n - 3, n - 1, 3);
  return m;
}

inline CoxeterMatrix E(int n) {
  if (n < 6 || n > 8) fail(ErrorKind::ParseError, "E_n needs 6 <= n <= 8");
  CoxeterMatrix m(n);
  m.setSymmetric(0, 2, 3);
  m.setSymmetric(1, 3, 3);
  for (int i = 2; i + 1 < n; ++i) m.setSymmetric(i, i + 1, 3);
  return m;
}

inline CoxeterMatrix F4() {
  CoxeterMatrix m(4);
  m.setSymmetric(0, 1, 3);
  m.setSymmetric(1, 2, 4);
  m.setSymmetric(2, 3, 3);
  return m;
}

inline CoxeterMatrix I2(int k) {
  if (k < 2) fail(ErrorKind::ParseError, "I2(m) needs m >= 2");
  CoxeterMatrix m(2);
  m.setSymmetric(0, 1, k);
  return m;
}

inline CoxeterMatrix G2() { return I2(6); }

inline CoxeterMatrix H(int n) {
  if (n < 2 || n > 4) fail(ErrorKind::ParseError, "H_n needs 2 <= n <= 4");
  CoxeterMatrix m = chain(n);
  m.setSymmetric(0, 1, 5);
  return m;
}

}  // namespace types

}  // namespace coxhecke
