#pragma once

// Exact linear algebra over Q: reduced row echelon form, ranks, subspace
// membership, span solving and kernels. Everything here is deterministic:
// pivots are chosen leftmost-column first, first nonzero row first.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxhecke/errors.hpp"
#include "coxhecke/rational.hpp"

namespace coxhecke {

using QVector = std::vector<Rational>;

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, QVector(cols)) {}

  static QMatrix fromRows(std::vector<QVector> rows, std::size_t cols) {
    QMatrix m;
    m.cols_ = cols;
    for (const auto& r : rows) {
      if (r.size() != cols) fail(ErrorKind::DimensionMismatch, "ragged matrix rows");
    }
    m.rows_ = std::move(rows);
    return m;
  }

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i][i] = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const QVector& row(std::size_t i) const { return rows_[i]; }
  const std::vector<QVector>& rowVectors() const noexcept { return rows_; }

  void appendRow(QVector r) {
    if (r.size() != cols_) fail(ErrorKind::DimensionMismatch, "row width mismatch");
    rows_.push_back(std::move(r));
  }

  QMatrix transpose() const {
    QMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.rows_[j][i] = rows_[i][j];
    return t;
  }

  bool operator==(const QMatrix&) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<QVector> rows_;
};

struct RrefResult {
  QMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

namespace detail {

inline void makePrimitive(std::vector<BigInt>& row) {
  BigInt g = 0;
  for (const auto& x : row) {
    if (sgn(x) != 0) g = gcd(g, x);
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& x : row) {
      if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
}

inline std::vector<BigInt> clearDenominators(const QVector& row) {
  BigInt l = 1;
  for (const auto& x : row) {
    if (sgn(x) != 0) l = lcm(l, BigInt(x.get_den()));
  }
  std::vector<BigInt> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (sgn(row[j]) != 0) out[j] = (row[j].get_num() * l) / row[j].get_den();
  }
  return out;
}

}  // namespace detail

/// Gauss-Jordan elimination on integer rows (denominators cleared, rows
/// kept primitive), normalized to rational RREF at the end.
inline RrefResult rref(const QMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<BigInt>> a;
  a.reserve(nr);
  for (std::size_t i = 0; i < nr; ++i) a.push_back(detail::clearDenominators(m.row(i)));

  RrefResult res;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && sgn(a[p][c]) == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[r]);
    for (std::size_t k = 0; k < nr; ++k) {
      if (k == r || sgn(a[k][c]) == 0) continue;
      const BigInt f = a[k][c];
      const BigInt piv = a[r][c];
      for (std::size_t j = 0; j < nc; ++j) {
        if (sgn(a[r][j]) == 0) {
          if (sgn(a[k][j]) != 0) a[k][j] *= piv;
        } else {
          a[k][j] = piv * a[k][j] - f * a[r][j];
        }
      }
      detail::makePrimitive(a[k]);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.reduced = QMatrix(nr, nc);
  for (std::size_t i = 0; i < r; ++i) {
    const BigInt& piv = a[i][res.pivots[i]];
    for (std::size_t j = 0; j < nc; ++j) {
      if (sgn(a[i][j]) != 0) {
        Rational q(a[i][j], piv);
        q.canonicalize();
        res.reduced.at(i, j) = q;
      }
    }
  }
  return res;
}

inline std::size_t rank(const QMatrix& m) { return rref(m).rank; }

/// A subspace of Q^n held as the nonzero rows of its reduced echelon form.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace spannedBy(const std::vector<QVector>& vectors, std::size_t ambient) {
    QMatrix m = QMatrix::fromRows(vectors, ambient);
    RrefResult r = rref(m);
    Subspace s(ambient);
    for (std::size_t i = 0; i < r.rank; ++i) {
      s.rows_.push_back(r.reduced.row(i));
      s.pivots_.push_back(r.pivots[i]);
    }
    return s;
  }

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<QVector>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Residual of v modulo the subspace; zero on every pivot column.
  QVector reduce(QVector v) const {
    checkWidth(v);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t p = pivots_[i];
      if (sgn(v[p]) == 0) continue;
      const Rational f = v[p];
      const QVector& row = rows_[i];
      for (std::size_t j = p; j < ambient_; ++j) {
        if (sgn(row[j]) != 0) v[j] -= f * row[j];
      }
    }
    return v;
  }

  bool contains(const QVector& v) const {
    const QVector r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return sgn(x) == 0; });
  }

  /// Adds v, keeping reduced echelon form. Returns true if the dimension grew.
  bool insert(const QVector& v) {
    QVector r = reduce(v);
    std::size_t lead = 0;
    while (lead < ambient_ && sgn(r[lead]) == 0) ++lead;
    if (lead == ambient_) return false;
    const Rational inv = 1 / r[lead];
    for (std::size_t j = lead; j < ambient_; ++j) {
      if (sgn(r[j]) != 0) r[j] *= inv;
    }
    for (auto& row : rows_) {
      if (sgn(row[lead]) == 0) continue;
      const Rational f = row[lead];
      for (std::size_t j = lead; j < ambient_; ++j) {
        if (sgn(r[j]) != 0) row[j] -= f * r[j];
      }
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
  }

  bool operator==(const Subspace&) const = default;

 private:
  void checkWidth(const QVector& v) const {
    if (v.size() != ambient_) {
      fail(ErrorKind::DimensionMismatch,
           "vector of length " + std::to_string(v.size()) + " in ambient dimension " +
               std::to_string(ambient_));
    }
  }

  std::size_t ambient_ = 0;
  std::vector<QVector> rows_;
  std::vector<std::size_t> pivots_;
};

inline bool memberOf(const QVector& v, const Subspace& s) { return s.contains(v); }

inline bool spacesEqual(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) fail(ErrorKind::DimensionMismatch, "subspaces in different ambient spaces");
  if (a.dim() != b.dim()) return false;
  for (const auto& v : a.basis())
    if (!b.contains(v)) return false;
  for (const auto& v : b.basis())
    if (!a.contains(v)) return false;
  return true;
}

/// Coefficients c with sum c_i basis_i = v, or nullopt if v is not in the
/// span. Free coefficients are set to zero.
inline std::optional<QVector> solveInSpan(const QVector& v, const std::vector<QVector>& basis) {
  const std::size_t n = v.size(), k = basis.size();
  for (const auto& b : basis) {
    if (b.size() != n) fail(ErrorKind::DimensionMismatch, "basis vector width mismatch");
  }
  QMatrix aug(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug.at(i, j) = basis[j][i];
    aug.at(i, k) = v[i];
  }
  const RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == k) return std::nullopt;
  QVector coeffs(k);
  for (std::size_t i = 0; i < r.rank; ++i) coeffs[r.pivots[i]] = r.reduced.at(i, k);
  return coeffs;
}

/// Kernel {x : m x = 0}.
inline Subspace nullspace(const QMatrix& m) {
  const RrefResult r = rref(m);
  const std::size_t nc = m.cols();
  std::vector<bool> isPivot(nc, false);
  for (auto p : r.pivots) isPivot[p] = true;
  std::vector<QVector> gens;
  for (std::size_t f = 0; f < nc; ++f) {
    if (isPivot[f]) continue;
    QVector x(nc);
    x[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = -r.reduced.at(i, f);
    gens.push_back(std::move(x));
  }
  return Subspace::spannedBy(gens, nc);
}

}  // namespace coxhecke
