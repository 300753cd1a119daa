#pragma once

// Generic Hecke algebra over Z[q]: class polynomials by cyclic-shift
// reduction, the central elements built from them, and the comparison of
// the cocenter at nonzero q with the class count.

#include <mutex>
#include <optional>
#include <random>
#include <vector>

#include "coxhecke/conjugacy.hpp"
#include "coxhecke/hecke_element.hpp"
#include "coxhecke/hecke_zero.hpp"
#include "coxhecke/linalg.hpp"
#include "coxhecke/poly.hpp"

namespace coxhecke {

using GenericElt = HeckeElt<Poly>;
using LaurentElt = HeckeElt<LaurentPoly>;

inline GenericElt genericMultByGen(const GenericElt& h, int s, Side side) {
  return multByGen(h, s, side, Poly::q());
}

template <class R>
H0Elt specialize(const HeckeElt<R>& h, const Rational& q0) {
  H0Elt out(h.groupPtr());
  for (const auto& [w, c] : h.coeffs()) out.add(w, c.eval(q0));
  return out;
}

/// f_{w,O} for every w and every delta-class O.
using ClassPolyTable = std::vector<std::vector<Poly>>;

/// Class polynomials: f_w is the indicator of its class when w is minimal;
/// otherwise, for w' reachable from w by equal-length moves and s with
/// l(s w' delta(s)) = l(w') - 2, f_w = (q-1) f_{s w'} + q f_{s w' delta(s)}.
/// With an rng each step picks a random eligible (w', s).
inline ClassPolyTable classPolynomialTable(const Conjugacy& conj, std::mt19937_64* rng = nullptr) {
  const CoxeterGroup& g = conj.group();
  const std::size_t nc = conj.classes().size();
  ClassPolyTable f(g.order(), std::vector<Poly>(nc));
  const Poly q = Poly::q();
  const Poly qm1 = q - Poly(1);
  for (Index w = 0; w < g.order(); ++w) {
    if (conj.isMinimal(w)) {
      f[w][conj.classOf(w)] = Poly(1);
      continue;
    }
    const auto comp = conj.equalLengthComponent(w);
    const auto step = conj.findDescent(comp, rng);
    if (!step) fail(ErrorKind::TheoremViolation, "non-minimal element admits no length-decreasing move path");
    const Index wp = comp.elements[step->slot];
    const Index sw = g.leftMul(step->generator, wp);
    const Index swd = conj.move(wp, step->generator);
    for (std::size_t o = 0; o < nc; ++o) f[w][o] = qm1 * f[sw][o] + q * f[swd][o];
  }
  return f;
}

class ClassPolynomials {
 public:
  explicit ClassPolynomials(const Conjugacy& conj) : conj_(&conj), table_(classPolynomialTable(conj)) {}

  const Conjugacy& conjugacy() const { return *conj_; }
  const ClassPolyTable& table() const noexcept { return table_; }
  const std::vector<Poly>& of(Index w) const { return table_[w]; }
  const Poly& operator()(Index w, std::size_t classId) const { return table_[w][classId]; }

 private:
  const Conjugacy* conj_;
  ClassPolyTable table_;
};

/// z_O = sum_w q^{-l(w)} f_{w,O} T_w, delta-central in the sense
/// T_s z = z T_{delta(s)}. Agrees with the T_{w^{-1}} form whenever
/// delta^2 = 1.
inline LaurentElt geckRouquier(const ClassPolynomials& cp, std::size_t classId) {
  const CoxeterGroup& g = cp.conjugacy().group();
  LaurentElt z(cp.conjugacy().groupPtr());
  for (Index w = 0; w < g.order(); ++w) {
    const Poly& f = cp(w, classId);
    if (!f.isZero()) z.add(w, LaurentPoly(f, -g.length(w)));
  }
  return z;
}

/// sum_w q^{-l(w)} f_{w,O} T_{w^{-1}}; central for delta^{-1}.
inline LaurentElt geckRouquierInverseForm(const ClassPolynomials& cp, std::size_t classId) {
  const CoxeterGroup& g = cp.conjugacy().group();
  LaurentElt z(cp.conjugacy().groupPtr());
  for (Index w = 0; w < g.order(); ++w) {
    const Poly& f = cp(w, classId);
    if (!f.isZero()) z.add(g.inverse(w), LaurentPoly(f, -g.length(w)));
  }
  return z;
}

/// T_s z = z T_{delta(s)} for every generator s, as identities over Z[q, q^-1].
inline bool isDeltaCentralSymbolic(const LaurentElt& z, const DeltaAut& delta) {
  const LaurentPoly q = LaurentPoly::q();
  for (int s = 0; s < delta.group().rank(); ++s) {
    if (multByGen(z, s, Side::Left, q) != multByGen(z, delta.onGenerator(s), Side::Right, q)) return false;
  }
  return true;
}

struct QCocenterReport {
  Rational q0;
  std::size_t commutatorDim = 0;
  std::size_t expectedDim = 0;  // |W| - #cl(W)_delta
  bool repsIndependent = false;
  bool coordsMatch = false;
  bool ok() const { return commutatorDim == expectedDim && repsIndependent && coordsMatch; }
};

/// Span of T_s T_y - T_y T_{delta(s)} over s in S, y in W at q = q0. This
/// is the whole delta-commutator space, since
/// [ab, c] = [a, bc] + [b, c delta(a)].
inline Subspace qCommutatorSpace(const DeltaAut& delta, const Rational& q0) {
  const CoxeterGroup& g = delta.group();
  const GroupPtr& gp = delta.groupPtr();
  Subspace space(g.order());
  for (int s = 0; s < g.rank(); ++s) {
    for (Index y = 0; y < g.order(); ++y) {
      const H0Elt ty = H0Elt::basis(gp, y);
      const H0Elt c = multByGen(ty, s, Side::Left, q0) - multByGen(ty, delta.onGenerator(s), Side::Right, q0);
      if (!c.isZero()) space.insert(c.toVector());
    }
  }
  return space;
}

inline QCocenterReport cocenterQCheck(const ClassPolynomials& cp, const Rational& q0) {
  if (sgn(q0) == 0) fail(ErrorKind::ZeroDenominator, "cocenterQCheck needs a nonzero parameter");
  const Conjugacy& conj = cp.conjugacy();
  const CoxeterGroup& g = conj.group();
  QCocenterReport rep;
  rep.q0 = q0;
  const Subspace comm = qCommutatorSpace(conj.delta(), q0);
  rep.commutatorDim = comm.dim();
  rep.expectedDim = g.order() - conj.classes().size();

  std::vector<bool> isPivot(g.order(), false);
  for (auto p : comm.pivots()) isPivot[p] = true;
  auto residual = [&](Index w) {
    QVector e(g.order());
    e[w] = 1;
    const QVector r = comm.reduce(std::move(e));
    QVector out;
    for (Index u = 0; u < g.order(); ++u)
      if (!isPivot[u]) out.push_back(r[u]);
    return out;
  };

  std::vector<QVector> reps;
  for (const auto& c : conj.classes()) reps.push_back(residual(c.minSet.front()));
  const std::size_t free = g.order() - comm.dim();
  Subspace check(free);
  rep.repsIndependent = true;
  for (const auto& r : reps) rep.repsIndependent = check.insert(r) && rep.repsIndependent;

  rep.coordsMatch = rep.repsIndependent;
  for (Index w = 0; w < g.order() && rep.coordsMatch; ++w) {
    const auto c = solveInSpan(residual(w), reps);
    if (!c) {
      rep.coordsMatch = false;
      break;
    }
    for (std::size_t o = 0; o < reps.size(); ++o) {
      if ((*c)[o] != cp(w, o).eval(q0)) {
        rep.coordsMatch = false;
        break;
      }
    }
  }
  return rep;
}

/// Constant terms: f_{w,O}(0) = (-1)^{l(w)-l(Sigma_w)} when Sigma_w lies in
/// O and 0 otherwise; also f_{w,O} = 0 unless O <= O_w.
inline bool zeroCongruence(const ClassPolynomials& cp, Index w) {
  const Conjugacy& conj = cp.conjugacy();
  const SigmaResult sr = conj.sigma(w);
  const std::size_t ow = conj.minApprox()[sr.approxId].classId;
  for (std::size_t o = 0; o < conj.classes().size(); ++o) {
    const Poly& f = cp(w, o);
    const std::int64_t expect = o == ow ? sr.sign : 0;
    if (f.constantTerm() != expect) return false;
    if (!f.isZero() && !conj.classPrecedes(o, ow)) return false;
  }
  return true;
}

}  // namespace coxhecke
