#pragma once

// The 0-Hecke algebra H_0: multiplication through the Demazure product, the
// delta-center spanned by Bruhat-closure sums over maximal reachability
// classes, and the delta-cocenter with basis indexed by Gamma_delta.

#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "coxhecke/conjugacy.hpp"
#include "coxhecke/gamma.hpp"
#include "coxhecke/hecke_element.hpp"
#include "coxhecke/linalg.hpp"

namespace coxhecke {

using H0Elt = HeckeElt<Rational>;

/// x * y: fold a reduced word of x, right to left, onto y keeping the
/// longer of s acc and acc at each step.
inline Index demazure(const CoxeterGroup& g, Index x, Index y) {
  Index acc = y;
  for (Index u = x; u != 0; u = g.parent(u)) {
    const Index sa = g.leftMul(g.lastLetter(u), acc);
    if (g.length(sa) > g.length(acc)) acc = sa;
  }
  return acc;
}

inline Element demazure(const Element& x, const Element& y) {
  requireSameGroup(x, y);
  return Element(x.groupPtr(), demazure(x.group(), x.index(), y.index()));
}

/// t_x t_y = (-1)^{l(x)+l(y)-l(x*y)} t_{x*y}; returns (x*y, sign).
inline std::pair<Index, int> h0BasisProduct(const CoxeterGroup& g, Index x, Index y) {
  const Index z = demazure(g, x, y);
  const int parity = (g.length(x) + g.length(y) - g.length(z)) & 1;
  return {z, parity ? -1 : 1};
}

inline H0Elt h0Mult(const H0Elt& a, const H0Elt& b) {
  a.checkGroup(b);
  const CoxeterGroup& g = a.group();
  H0Elt out(a.groupPtr());
  for (const auto& [x, cx] : a.coeffs()) {
    for (const auto& [y, cy] : b.coeffs()) {
      const auto [z, sign] = h0BasisProduct(g, x, y);
      out.add(z, sign > 0 ? Rational(cx * cy) : Rational(-(cx * cy)));
    }
  }
  return out;
}

/// W_{<= Sigma}: everything below some member of Sigma, ascending.
inline std::vector<Index> bruhatClosure(const CoxeterGroup& g, std::span<const Index> sigma) {
  std::vector<Index> out;
  for (Index x = 0; x < g.order(); ++x) {
    for (Index w : sigma) {
      if (g.bruhatLeq(x, w)) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

inline bool isDeltaCentralAtZero(const H0Elt& h, const DeltaAut& delta) {
  const Rational zero = 0;
  for (int s = 0; s < delta.group().rank(); ++s) {
    if (multByGen(h, s, Side::Left, zero) != multByGen(h, delta.onGenerator(s), Side::Right, zero)) return false;
  }
  return true;
}

/// t_{<= Sigma} for every maximal reachability class Sigma, in the order of
/// Conjugacy::maxApprox().
inline std::vector<H0Elt> centerBasis(const Conjugacy& conj) {
  std::vector<H0Elt> out;
  for (const auto& sigma : conj.maxApprox()) {
    H0Elt h(conj.groupPtr());
    for (Index x : bruhatClosure(conj.group(), sigma.members)) h.add(x, 1);
    out.push_back(std::move(h));
  }
  return out;
}

/// Solution space of t_s h = h t_{delta(s)} for all s, as a linear system over Q.
inline Subspace centerSpace(const DeltaAut& delta) {
  const CoxeterGroup& g = delta.group();
  const std::size_t n = g.order();
  const int r = g.rank();
  QMatrix m(static_cast<std::size_t>(r) * n, n);
  for (int s = 0; s < r; ++s) {
    const int ds = delta.onGenerator(s);
    const std::size_t base = static_cast<std::size_t>(s) * n;
    for (Index w = 0; w < n; ++w) {
      const Index sw = g.leftMul(s, w);
      if (g.length(sw) > g.length(w)) m.at(base + sw, w) += 1;
      else m.at(base + w, w) -= 1;
      const Index wd = g.rightMul(w, ds);
      if (g.length(wd) > g.length(w)) m.at(base + wd, w) -= 1;
      else m.at(base + w, w) += 1;
    }
  }
  return nullspace(m);
}

struct CommutatorSpace {
  Subspace space;
  std::size_t generatorsInserted = 0;  // distinct nonzero generators fed to the row reduction
  bool remainderVerified = true;       // generators skipped after the early stop lie in the space
};

/// Span of t_x t_y - t_y t_{delta(x)} over all x, y (index order). With a
/// target rank the elimination stops early and the remaining generators are
/// checked for membership instead.
inline CommutatorSpace commutatorSpace(const DeltaAut& delta, std::optional<std::size_t> targetRank = {}) {
  const CoxeterGroup& g = delta.group();
  const std::size_t n = g.order();
  CommutatorSpace out{Subspace(n), 0, true};
  std::set<std::tuple<Index, int, Index, int>> seen;
  bool stopped = false;
  for (Index x = 0; x < n; ++x) {
    const Index dx = delta.apply(x);
    for (Index y = 0; y < n; ++y) {
      auto [a, ca] = h0BasisProduct(g, x, y);
      auto [b, cb] = h0BasisProduct(g, y, dx);
      cb = -cb;
      if (a == b) {
        if (ca + cb == 0) continue;
        cb = 0;
        ca = 1;
      } else if (a > b) {
        std::swap(a, b);
        std::swap(ca, cb);
      }
      // Up to scaling, the generator is determined by (a, b, cb / ca).
      if (ca < 0) {
        ca = -ca;
        cb = -cb;
      }
      if (!seen.emplace(a, ca, b, cb).second) continue;
      QVector v(n);
      v[a] += ca;
      v[b] += cb;
      if (!stopped) {
        if (out.space.insert(v)) ++out.generatorsInserted;
        if (targetRank && out.space.dim() >= *targetRank) stopped = true;
      } else if (!out.space.contains(v)) {
        out.remainderVerified = false;
        out.space.insert(v);
      }
    }
  }
  return out;
}

struct CocenterCoords {
  std::vector<Rational> values;  // aligned with the gamma ordering
  bool operator==(const CocenterCoords&) const = default;
};

/// Cocenter of H_0 relative to a fixed Gamma_delta ordering.
class ZeroCocenter {
 public:
  explicit ZeroCocenter(const Conjugacy& conj) : conj_(&conj), gamma_(gamma(conj.delta())) {
    const std::size_t n = conj.group().order();
    commutator_ = commutatorSpace(conj.delta(), n >= gamma_.size() ? n - gamma_.size() : 0);
    pairOfApprox_.assign(conj.minApprox().size(), npos);
    const auto image = gammaMinBijection(gamma_, conj);
    for (std::size_t i = 0; i < image.size(); ++i) pairOfApprox_[image[i]] = i;
    for (const auto& p : gamma_) {
      QVector e(n);
      e[p.minRepInW] = 1;
      residuals_.push_back(commutator_.space.reduce(std::move(e)));
    }
  }

  const Conjugacy& conjugacy() const { return *conj_; }
  const std::vector<GammaPair>& pairs() const noexcept { return gamma_; }
  const CommutatorSpace& commutator() const noexcept { return commutator_; }
  std::size_t dimension() const { return conj_->group().order() - commutator_.space.dim(); }
  std::size_t pairOfMinApprox(std::size_t approxId) const { return pairOfApprox_[approxId]; }

  /// The t_(J,C) are independent modulo the commutator space.
  bool basisIndependent() const {
    Subspace s(conj_->group().order());
    for (const auto& r : residuals_)
      if (!s.insert(r)) return false;
    return true;
  }

  CocenterCoords coords(const H0Elt& h) const {
    const QVector r = commutator_.space.reduce(h.toVector());
    auto c = solveInSpan(r, residuals_);
    if (!c) fail(ErrorKind::SolveFailure, "element is not congruent to a combination of the cocenter basis");
    return {std::move(*c)};
  }

 private:
  const Conjugacy* conj_;
  std::vector<GammaPair> gamma_;
  CommutatorSpace commutator_;
  std::vector<std::size_t> pairOfApprox_;
  std::vector<QVector> residuals_;
};

struct TwReduction {
  std::size_t pairIndex;
  int sign;
};

/// Image of t_w in the cocenter as +-t_(J,C), via Sigma_w; cross-checked
/// against the linear-algebra coordinates.
inline TwReduction reduceTw(const ZeroCocenter& cc, Index w) {
  const Conjugacy& conj = cc.conjugacy();
  const SigmaResult sr = conj.sigma(w);
  TwReduction out{cc.pairOfMinApprox(sr.approxId), sr.sign};
  const CocenterCoords c = cc.coords(H0Elt::basis(conj.groupPtr(), w));
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    const Rational expect = i == out.pairIndex ? Rational(out.sign) : Rational(0);
    if (c.values[i] != expect) fail(ErrorKind::TheoremViolation, "t_w reduction disagrees with cocenter coordinates");
  }
  return out;
}

/// The commutator space splits along the grading by supp_delta: each graded
/// projection of each basis vector stays in the space, and the graded ranks
/// add up to the total.
inline bool gradingCheck(const DeltaAut& delta, const Subspace& commutator) {
  const CoxeterGroup& g = delta.group();
  const std::size_t n = g.order();
  std::map<std::uint32_t, std::vector<Index>> blocks;
  for (Index w = 0; w < n; ++w) blocks[suppDelta(delta, w).bits()].push_back(w);
  std::size_t total = 0;
  for (const auto& [J, members] : blocks) {
    Subspace part(n);
    for (const auto& b : commutator.basis()) {
      QVector proj(n);
      bool nonzero = false;
      for (Index w : members) {
        proj[w] = b[w];
        nonzero = nonzero || sgn(b[w]) != 0;
      }
      if (!nonzero) continue;
      if (!commutator.contains(proj)) return false;
      part.insert(proj);
    }
    total += part.dim();
  }
  return total == commutator.dim();
}

}  // namespace coxhecke
