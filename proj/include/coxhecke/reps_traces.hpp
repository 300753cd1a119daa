#pragma once

// One-dimensional representations lambda_J of H_0 (t_s -> -1 on J, 0 off
// J) and the trace pairing of the untwisted cocenter basis against them.

#include <map>
#include <vector>

#include "coxhecke/gamma.hpp"
#include "coxhecke/hecke_zero.hpp"
#include "coxhecke/linalg.hpp"

namespace coxhecke {

/// lambda_J(t_w) = (-1)^{l(w)} if supp(w) is inside J, else 0.
inline int repValue(const CoxeterGroup& g, GenSubset J, Index w) {
  if (!g.support(w).subsetOf(J)) return 0;
  return g.length(w) % 2 == 0 ? 1 : -1;
}

inline Rational evalRep(GenSubset J, const H0Elt& h) {
  Rational acc = 0;
  for (const auto& [w, c] : h.coeffs()) {
    const int v = repValue(h.group(), J, w);
    if (v != 0) acc += v * c;
  }
  return acc;
}

struct TraceMatrix {
  std::vector<std::size_t> rows;       // indices into the gamma list
  std::vector<GenSubset> columns;      // K in binary-counter order
  std::vector<std::vector<int>> entries;
};

/// tr(t_(J,C), lambda_K) by direct evaluation. Only the untwisted case is
/// defined.
inline TraceMatrix traceMatrix(const DeltaAut& delta, const std::vector<GammaPair>& pairs) {
  if (!delta.isIdentity()) fail(ErrorKind::DeltaUnsupported, "the trace pairing is defined for delta = id only");
  const CoxeterGroup& g = delta.group();
  TraceMatrix tm;
  for (std::uint32_t k = 0; k < (1u << g.rank()); ++k) tm.columns.emplace_back(k);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    tm.rows.push_back(i);
    std::vector<int> row;
    for (GenSubset K : tm.columns) row.push_back(repValue(g, K, pairs[i].minRepInW));
    tm.entries.push_back(std::move(row));
  }
  return tm;
}

/// The closed form (-1)^{l(C)} [J subset K].
inline int traceClosedForm(const GammaPair& p, GenSubset K) {
  if (!p.J.subsetOf(K)) return 0;
  return p.lengthC % 2 == 0 ? 1 : -1;
}

inline QMatrix toQMatrix(const TraceMatrix& tm) {
  QMatrix m(tm.entries.size(), tm.columns.size());
  for (std::size_t i = 0; i < tm.entries.size(); ++i)
    for (std::size_t j = 0; j < tm.columns.size(); ++j) m.at(i, j) = tm.entries[i][j];
  return m;
}

struct TraceReport {
  std::size_t rank = 0;
  std::size_t kernelDim = 0;
  bool surjective = false;
  bool kernelIsSameJDifferences = false;
};

/// Rank and kernel of the trace map on coordinates over Gamma: kernel is the
/// left kernel {c : c^T M = 0}, compared with the span of
/// e_(J,C) - e_(J,C') over pairs sharing J.
inline TraceReport analyzeTrace(const TraceMatrix& tm, const std::vector<GammaPair>& pairs) {
  TraceReport rep;
  const QMatrix m = toQMatrix(tm);
  rep.rank = rank(m);
  rep.surjective = rep.rank == tm.columns.size();
  const Subspace kernel = nullspace(m.transpose());
  rep.kernelDim = kernel.dim();
  std::vector<QVector> diffs;
  std::map<std::uint32_t, std::size_t> firstOfJ;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [it, inserted] = firstOfJ.try_emplace(pairs[i].J.bits(), i);
    if (inserted) continue;
    QVector d(pairs.size());
    d[it->second] = 1;
    d[i] = -1;
    diffs.push_back(std::move(d));
  }
  rep.kernelIsSameJDifferences = spacesEqual(kernel, Subspace::spannedBy(diffs, pairs.size()));
  return rep;
}

/// Minimal lengths of elliptic classes sharing J agree mod 2.
inline bool parityCheck(const std::vector<GammaPair>& pairs) {
  std::map<std::uint32_t, int> parity;
  for (const auto& p : pairs) {
    auto [it, inserted] = parity.try_emplace(p.J.bits(), p.lengthC % 2);
    if (!inserted && it->second != p.lengthC % 2) return false;
  }
  return true;
}

}  // namespace coxhecke
