#pragma once

// Property checks shared by the `verify` command and the acceptance run.
// Every check returns a named verdict; library errors become failures.

#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "coxhecke/conjugacy.hpp"
#include "coxhecke/gamma.hpp"
#include "coxhecke/hecke_generic.hpp"
#include "coxhecke/hecke_zero.hpp"
#include "coxhecke/reps_traces.hpp"

namespace coxhecke {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline CheckResult runCheck(std::string name, const std::function<std::string()>& body) {
  CheckResult r{std::move(name), false, {}};
  try {
    r.detail = body();
    r.passed = r.detail.empty();
    if (r.passed) r.detail = "ok";
  } catch (const Error& e) {
    r.detail = std::string(to_string(e.kind())) + ": " + e.what();
  }
  return r;
}

/// Everything the checks need for one (W, delta), built once.
class VerifyContext {
 public:
  explicit VerifyContext(DeltaAut delta) : conj_(std::move(delta)) {}

  const Conjugacy& conj() const { return conj_; }
  const CoxeterGroup& group() const { return conj_.group(); }
  const DeltaAut& delta() const { return conj_.delta(); }

  const ZeroCocenter& cocenter() const {
    if (!cocenter_) cocenter_ = std::make_unique<ZeroCocenter>(conj_);
    return *cocenter_;
  }
  const ClassPolynomials& classPolys() const {
    if (!classPolys_) classPolys_ = std::make_unique<ClassPolynomials>(conj_);
    return *classPolys_;
  }

 private:
  Conjugacy conj_;
  mutable std::unique_ptr<ZeroCocenter> cocenter_;
  mutable std::unique_ptr<ClassPolynomials> classPolys_;
};

inline std::string num(std::size_t n) { return std::to_string(n); }

/// t_{<=Sigma} are delta-central, independent, span the solution space of
/// the centrality equations, and are counted by Gamma_{delta'}.
inline CheckResult checkCenter(const VerifyContext& ctx) {
  return runCheck("center basis", [&]() -> std::string {
    const auto basis = centerBasis(ctx.conj());
    std::vector<QVector> vecs;
    for (const auto& h : basis) {
      if (!isDeltaCentralAtZero(h, ctx.delta())) return "a closure sum is not delta-central";
      vecs.push_back(h.toVector());
    }
    const Subspace spanned = Subspace::spannedBy(vecs, ctx.group().order());
    if (spanned.dim() != basis.size()) return "closure sums are dependent";
    const Subspace solved = centerSpace(ctx.delta());
    if (!spacesEqual(spanned, solved))
      return "span " + num(spanned.dim()) + " differs from center of dimension " + num(solved.dim());
    const auto params = maxApproxParam(ctx.conj());
    if (params.size() != basis.size()) return "Gamma' has " + num(params.size()) + " pairs, basis has " + num(basis.size());
    return {};
  });
}

/// dim commutator = |W| - #Gamma, t_(J,C) independent modulo it, graded
/// splitting, and the Gamma bijections.
inline CheckResult checkCocenter(const VerifyContext& ctx) {
  return runCheck("cocenter basis", [&]() -> std::string {
    const ZeroCocenter& cc = ctx.cocenter();
    const std::size_t n = ctx.group().order();
    const std::size_t expect = n - cc.pairs().size();
    if (!cc.commutator().remainderVerified) return "commutator generators outside the early-stopped span";
    if (cc.commutator().space.dim() != expect)
      return "commutator dimension " + num(cc.commutator().space.dim()) + ", expected " + num(expect);
    if (!cc.basisIndependent()) return "cocenter basis is dependent";
    if (!gradingCheck(ctx.delta(), cc.commutator().space)) return "commutator space does not split by supp_delta";
    if (cc.pairs().size() != ctx.conj().minApprox().size()) return "Gamma does not match the minimal reachability classes";
    if (!gammaClassBijection(cc.pairs(), ctx.conj())) return "Gamma modulo W^delta is not in bijection with the classes";
    return {};
  });
}

inline std::vector<Index> bruhatExtremal(const CoxeterGroup& g, const std::vector<Index>& set, bool minimal) {
  std::vector<Index> out;
  for (Index w : set) {
    bool extremal = true;
    for (Index v : set) {
      if (v != w && (minimal ? g.bruhatLess(v, w) : g.bruhatLess(w, v))) {
        extremal = false;
        break;
      }
    }
    if (extremal) out.push_back(w);
  }
  return out;
}

/// Reduction to O_min from every element, single reachability block for
/// elliptic classes, strong conjugacy, and Bruhat-extremal descriptions of
/// O_min and O_max.
inline CheckResult checkMinimalElements(const VerifyContext& ctx) {
  return runCheck("minimal elements", [&]() -> std::string {
    const Conjugacy& conj = ctx.conj();
    const CoxeterGroup& g = ctx.group();
    for (Index w = 0; w < g.order(); ++w) {
      const Reduction red = conj.reduceToMin(w);
      Index cur = w;
      for (int s : red.path) {
        const Index next = conj.move(cur, s);
        if (g.length(next) > g.length(cur)) return "reduction path increases length";
        cur = next;
      }
      if (cur != red.result || !conj.isMinimal(cur) || conj.classOf(cur) != conj.classOf(w))
        return "reduction of element " + num(w) + " does not land in O_min";
    }
    for (const auto& c : conj.classes()) {
      if (c.elliptic != conj.isEllipticByDefinition(c.id)) return "ellipticity tests disagree on class " + num(c.id);
      if (c.elliptic && c.minApproxClasses.size() != 1) return "elliptic class " + num(c.id) + " has several blocks in O_min";
      if (!conj.stronglyConjugateConnected(c.id)) return "O_min of class " + num(c.id) + " is not strongly conjugate";
      if (bruhatExtremal(g, c.members, true) != c.minSet) return "O_min of class " + num(c.id) + " is not the Bruhat-minimal set";
      if (bruhatExtremal(g, c.members, false) != c.maxSet) return "O_max of class " + num(c.id) + " is not the Bruhat-maximal set";
    }
    return {};
  });
}

/// h0Mult on basis pairs against repeated right multiplication by t_s.
inline CheckResult checkDemazure(const VerifyContext& ctx) {
  return runCheck("0-Hecke products", [&]() -> std::string {
    const CoxeterGroup& g = ctx.group();
    const GroupPtr& gp = ctx.conj().groupPtr();
    const Rational zero = 0;
    for (Index x = 0; x < g.order(); ++x) {
      const H0Elt tx = H0Elt::basis(gp, x);
      for (Index y = 0; y < g.order(); ++y) {
        H0Elt folded = tx;
        for (int s : g.reducedWord(y)) folded = multByGen(folded, s, Side::Right, zero);
        if (h0Mult(tx, H0Elt::basis(gp, y)) != folded) return "t_x t_y mismatch at (" + num(x) + ", " + num(y) + ")";
      }
    }
    return {};
  });
}

/// Randomized recomputation, q = 1 indicators, q = 0 congruences, and the
/// cocenter of H_q at the given parameters.
inline CheckResult checkClassPolynomials(const VerifyContext& ctx, std::uint64_t seed, int runs,
                                         const std::vector<Rational>& params = {1, 2, 3, -1}) {
  return runCheck("class polynomials", [&]() -> std::string {
    const ClassPolynomials& cp = ctx.classPolys();
    const Conjugacy& conj = ctx.conj();
    const CoxeterGroup& g = ctx.group();
    std::mt19937_64 rng(seed);
    for (int r = 0; r < runs; ++r)
      if (classPolynomialTable(conj, &rng) != cp.table()) return "randomized reduction gave a different table";
    for (Index w = 0; w < g.order(); ++w) {
      for (std::size_t o = 0; o < conj.classes().size(); ++o) {
        const Rational at1 = cp(w, o).eval(1);
        if (at1 != (conj.classOf(w) == o ? 1 : 0)) return "q = 1 value is not the class indicator";
        if (cp(w, o).degree() > g.length(w)) return "degree exceeds length";
      }
      if (!zeroCongruence(cp, w)) return "q = 0 congruence fails at element " + num(w);
    }
    for (const auto& q0 : params) {
      const QCocenterReport rep = cocenterQCheck(cp, q0);
      if (!rep.ok())
        return "H_q cocenter check fails at q = " + to_string(q0) + " (commutator " + num(rep.commutatorDim) +
               ", expected " + num(rep.expectedDim) + ")";
    }
    return {};
  });
}

/// z_O central over Z[q, q^-1] and independent (values at q = 1).
inline CheckResult checkGeckRouquier(const VerifyContext& ctx) {
  return runCheck("central elements of H", [&]() -> std::string {
    const ClassPolynomials& cp = ctx.classPolys();
    std::vector<QVector> at1;
    for (std::size_t o = 0; o < ctx.conj().classes().size(); ++o) {
      const LaurentElt z = geckRouquier(cp, o);
      if (!isDeltaCentralSymbolic(z, ctx.delta())) return "z_O is not delta-central for class " + num(o);
      at1.push_back(specialize(z, Rational(1)).toVector());
    }
    if (Subspace::spannedBy(at1, ctx.group().order()).dim() != at1.size()) return "z_O are dependent";
    return {};
  });
}

/// Trace pairing (delta = id): closed form, rank, kernel, parity.
inline CheckResult checkTrace(const VerifyContext& ctx) {
  return runCheck("trace map", [&]() -> std::string {
    const auto& pairs = ctx.cocenter().pairs();
    const TraceMatrix tm = traceMatrix(ctx.delta(), pairs);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t k = 0; k < tm.columns.size(); ++k)
        if (tm.entries[i][k] != traceClosedForm(pairs[i], tm.columns[k])) return "trace entry differs from closed form";
    const TraceReport rep = analyzeTrace(tm, pairs);
    if (!rep.surjective) return "rank " + num(rep.rank) + " below " + num(tm.columns.size());
    if (!rep.kernelIsSameJDifferences) return "kernel is not spanned by same-J differences";
    if (!parityCheck(pairs)) return "elliptic lengths disagree mod 2";
    return {};
  });
}

/// Randomized reduction paths agree with the fixed-order Sigma_w.
inline CheckResult checkSigma(const VerifyContext& ctx, std::uint64_t seed, int runs) {
  return runCheck("reduction of t_w", [&]() -> std::string {
    const Conjugacy& conj = ctx.conj();
    std::mt19937_64 rng(seed);
    for (Index w = 0; w < ctx.group().order(); ++w) {
      const SigmaResult fixed = conj.sigma(w);
      for (int r = 0; r < runs; ++r)
        if (conj.sigmaRandom(w, rng) != fixed) return "random path disagrees at element " + num(w);
      reduceTw(ctx.cocenter(), w);
    }
    return {};
  });
}

struct VerifyOptions {
  std::uint64_t seed = 1;
  int classPolyRuns = 50;
  int sigmaRuns = 100;
};

/// All checks that apply to (W, delta); the trace map only for delta = id.
inline std::vector<CheckResult> verifyAll(const VerifyContext& ctx, const VerifyOptions& opts = {}) {
  std::vector<CheckResult> out;
  out.push_back(checkMinimalElements(ctx));
  out.push_back(checkDemazure(ctx));
  out.push_back(checkCenter(ctx));
  out.push_back(checkCocenter(ctx));
  out.push_back(checkSigma(ctx, opts.seed, opts.sigmaRuns));
  out.push_back(checkClassPolynomials(ctx, opts.seed, opts.classPolyRuns));
  out.push_back(checkGeckRouquier(ctx));
  if (ctx.delta().isIdentity()) out.push_back(checkTrace(ctx));
  return out;
}

}  // namespace coxhecke
