#pragma once

// Twisted conjugacy classes w -> x w delta(x)^{-1}, their minimal and
// maximal length elements, the cyclic-shift moves w -> s w delta(s) and
// the classes of mutual reachability inside O_min and O_max.

#include <algorithm>
#include <deque>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "coxhecke/coxeter_group.hpp"
#include "coxhecke/delta.hpp"
#include "coxhecke/errors.hpp"

namespace coxhecke {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

enum class ApproxKind { Min, Max };

struct ConjClass {
  std::size_t id = 0;
  std::vector<Index> members;  // ascending
  std::vector<Index> minSet, maxSet;
  int minLength = 0, maxLength = 0;
  std::vector<std::vector<Index>> minApproxClasses, maxApproxClasses;
  bool elliptic = false;
};

struct ApproxClass {
  std::size_t id = 0;
  Index representative = 0;  // smallest member
  std::vector<Index> members;
  int length = 0;
  ApproxKind kind = ApproxKind::Min;
  std::size_t classId = 0;
};

struct MoveTarget {
  int generator;
  Index target;
  bool operator==(const MoveTarget&) const = default;
};

struct Reduction {
  Index result;
  std::vector<int> path;  // generators s of the successive moves w -> s w delta(s)
};

struct SigmaResult {
  std::size_t approxId;  // index into Conjugacy::minApprox()
  int sign;
  bool operator==(const SigmaResult&) const = default;
};

/// s w delta(s)
inline Index twistedMove(const DeltaAut& delta, Index w, int s) {
  const CoxeterGroup& g = delta.group();
  return g.leftMul(s, g.rightMul(w, delta.onGenerator(s)));
}

/// supp_delta(w): the delta-orbit closure of supp(w).
inline GenSubset suppDelta(const DeltaAut& delta, Index w) {
  GenSubset J = delta.group().support(w);
  for (;;) {
    const GenSubset next = J | delta.apply(J);
    if (next == J) return J;
    J = next;
  }
}

inline std::vector<MoveTarget> moveTargets(const DeltaAut& delta, Index w) {
  const CoxeterGroup& g = delta.group();
  std::vector<MoveTarget> out;
  for (int s = 0; s < g.rank(); ++s) {
    const Index t = twistedMove(delta, w, s);
    if (g.length(t) <= g.length(w)) out.push_back({s, t});
  }
  return out;
}

/// Connected components of the graph on `set` whose edges are the moves
/// w -- s w delta(s) with both ends in the set. Components are sorted by
/// their smallest member and each is ascending.
inline std::vector<std::vector<Index>> approxClasses(std::span<const Index> set, const DeltaAut& delta) {
  const CoxeterGroup& g = delta.group();
  if (set.empty()) return {};
  const int len = g.length(set.front());
  for (Index w : set)
    if (g.length(w) != len) fail(ErrorKind::MixedLengths, "approxClasses needs elements of one length");

  std::vector<Index> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  auto inSet = [&](Index w) { return std::binary_search(sorted.begin(), sorted.end(), w); };

  std::unordered_map<Index, bool> seen;
  std::vector<std::vector<Index>> blocks;
  for (Index start : sorted) {
    if (seen[start]) continue;
    std::vector<Index> block{start};
    seen[start] = true;
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (int s = 0; s < g.rank(); ++s) {
        const Index t = twistedMove(delta, block[i], s);
        if (inSet(t) && !seen[t]) {
          seen[t] = true;
          block.push_back(t);
        }
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

class Conjugacy {
 public:
  explicit Conjugacy(DeltaAut delta) : delta_(std::move(delta)) {
    const CoxeterGroup& g = group();
    const std::size_t order = g.order();
    classOf_.assign(order, npos);
    minApproxOf_.assign(order, npos);
    maxApproxOf_.assign(order, npos);

    for (Index start = 0; start < order; ++start) {
      if (classOf_[start] != npos) continue;
      ConjClass c;
      c.id = classes_.size();
      c.members.push_back(start);
      classOf_[start] = c.id;
      for (std::size_t i = 0; i < c.members.size(); ++i) {
        for (int s = 0; s < g.rank(); ++s) {
          const Index t = move(c.members[i], s);
          if (classOf_[t] == npos) {
            classOf_[t] = c.id;
            c.members.push_back(t);
          }
        }
      }
      std::sort(c.members.begin(), c.members.end());
      c.minLength = c.maxLength = g.length(c.members.front());
      for (Index w : c.members) {
        c.minLength = std::min(c.minLength, g.length(w));
        c.maxLength = std::max(c.maxLength, g.length(w));
      }
      for (Index w : c.members) {
        if (g.length(w) == c.minLength) c.minSet.push_back(w);
        if (g.length(w) == c.maxLength) c.maxSet.push_back(w);
      }
      c.minApproxClasses = approxClasses(c.minSet, delta_);
      c.maxApproxClasses = approxClasses(c.maxSet, delta_);
      c.elliptic = std::all_of(c.minSet.begin(), c.minSet.end(),
                               [&](Index w) { return suppDelta(delta_, w) == g.generators(); });
      classes_.push_back(std::move(c));
    }

    for (const auto& c : classes_) {
      registerBlocks(c, c.minApproxClasses, ApproxKind::Min, minApprox_, minApproxOf_);
      registerBlocks(c, c.maxApproxClasses, ApproxKind::Max, maxApprox_, maxApproxOf_);
    }
  }

  const CoxeterGroup& group() const { return delta_.group(); }
  const GroupPtr& groupPtr() const { return delta_.groupPtr(); }
  const DeltaAut& delta() const noexcept { return delta_; }

  const std::vector<ConjClass>& classes() const noexcept { return classes_; }
  const ConjClass& classOfElement(Index w) const { return classes_[classOf_[w]]; }
  std::size_t classOf(Index w) const { return classOf_[w]; }

  const std::vector<ApproxClass>& minApprox() const noexcept { return minApprox_; }
  const std::vector<ApproxClass>& maxApprox() const noexcept { return maxApprox_; }
  std::size_t minApproxOf(Index w) const { return minApproxOf_[w]; }
  std::size_t maxApproxOf(Index w) const { return maxApproxOf_[w]; }

  bool isMinimal(Index w) const { return minApproxOf_[w] != npos; }
  bool isMaximal(Index w) const { return maxApproxOf_[w] != npos; }

  Index move(Index w, int s) const { return twistedMove(delta_, w, s); }

  bool isElliptic(std::size_t classId) const { return classes_[classId].elliptic; }

  /// O meets no W_J with J = delta(J) a proper subset of S.
  bool isEllipticByDefinition(std::size_t classId) const {
    const CoxeterGroup& g = group();
    const GenSubset S = g.generators();
    for (std::uint32_t bits = 0; bits < S.bits(); ++bits) {
      const GenSubset J(bits);
      if (delta_.apply(J) != J) continue;
      for (Index w : classes_[classId].members)
        if (g.support(w).subsetOf(J)) return false;
    }
    return true;
  }

  /// BFS over equal-length moves from w, in generator order. Returns the
  /// visited elements and, for each, the (predecessor slot, generator) pair.
  struct Component {
    std::vector<Index> elements;
    std::vector<std::pair<std::size_t, int>> from;
  };

  Component equalLengthComponent(Index w) const {
    const CoxeterGroup& g = group();
    Component comp;
    comp.elements.push_back(w);
    comp.from.emplace_back(npos, -1);
    std::unordered_map<Index, bool> seen{{w, true}};
    for (std::size_t i = 0; i < comp.elements.size(); ++i) {
      for (int s = 0; s < g.rank(); ++s) {
        const Index t = move(comp.elements[i], s);
        if (g.length(t) == g.length(w) && !seen[t]) {
          seen[t] = true;
          comp.elements.push_back(t);
          comp.from.emplace_back(i, s);
        }
      }
    }
    return comp;
  }

  /// Some w' in the equal-length component of w and s with
  /// l(s w' delta(s)) < l(w'); the first one in BFS / generator order, or a
  /// uniformly random one when rng is given.
  struct DescentStep {
    std::size_t slot;  // position of w' in the component
    int generator;
  };

  std::optional<DescentStep> findDescent(const Component& comp, std::mt19937_64* rng = nullptr) const {
    const CoxeterGroup& g = group();
    std::vector<DescentStep> all;
    for (std::size_t i = 0; i < comp.elements.size(); ++i) {
      const Index v = comp.elements[i];
      for (int s = 0; s < g.rank(); ++s) {
        if (g.length(move(v, s)) < g.length(v)) {
          if (!rng) return DescentStep{i, s};
          all.push_back({i, s});
        }
      }
    }
    if (all.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(*rng)];
  }

  /// A non-increasing move path from w into O_min: greedy descents, with a
  /// search through the equal-length component when no descent is at hand.
  Reduction reduceToMin(Index w) const {
    const CoxeterGroup& g = group();
    Reduction red{w, {}};
    const int target = classOfElement(w).minLength;
    while (g.length(red.result) > target) {
      bool stepped = false;
      for (int s = 0; s < g.rank() && !stepped; ++s) {
        const Index t = move(red.result, s);
        if (g.length(t) < g.length(red.result)) {
          red.path.push_back(s);
          red.result = t;
          stepped = true;
        }
      }
      if (stepped) continue;
      const Component comp = equalLengthComponent(red.result);
      const auto step = findDescent(comp);
      if (!step) fail(ErrorKind::TheoremViolation, "non-minimal element admits no length-decreasing move path");
      std::vector<int> lead;
      for (std::size_t i = step->slot; comp.from[i].first != npos; i = comp.from[i].first)
        lead.push_back(comp.from[i].second);
      red.path.insert(red.path.end(), lead.rbegin(), lead.rend());
      red.path.push_back(step->generator);
      red.result = move(comp.elements[step->slot], step->generator);
    }
    return red;
  }

  /// Graph on O_min with edges between elementarily strongly delta-conjugate
  /// elements (x searched over all of W); true iff connected.
  bool stronglyConjugateConnected(std::size_t classId) const {
    const CoxeterGroup& g = group();
    const auto& minSet = classes_[classId].minSet;
    std::unordered_map<Index, std::size_t> pos;
    for (std::size_t i = 0; i < minSet.size(); ++i) pos[minSet[i]] = i;
    std::vector<std::size_t> parent(minSet.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    const int len = classes_[classId].minLength;
    for (std::size_t i = 0; i < minSet.size(); ++i) {
      const Index w = minSet[i];
      for (Index x = 0; x < g.order(); ++x) {
        const Index xw = g.mult(x, w);
        const Index wdxi = g.mult(w, g.inverse(delta_.apply(x)));
        const Index conj = g.mult(xw, g.inverse(delta_.apply(x)));
        if (g.length(conj) != len) continue;
        const int lx = g.length(x);
        if (g.length(xw) != lx + len && g.length(wdxi) != lx + len) continue;
        parent[find(i)] = find(pos.at(conj));
      }
    }
    for (std::size_t i = 0; i < minSet.size(); ++i)
      if (find(i) != find(0)) return false;
    return true;
  }

  /// Sigma <= w: some member of the min-kind class lies below w in Bruhat order.
  bool approxBelow(std::size_t minApproxId, Index w) const {
    const CoxeterGroup& g = group();
    for (Index m : minApprox_[minApproxId].members)
      if (g.bruhatLeq(m, w)) return true;
    return false;
  }

  bool precedes(std::size_t lower, std::size_t upper) const {
    for (Index w : minApprox_[upper].members)
      if (approxBelow(lower, w)) return true;
    return false;
  }

  bool precedesForAll(std::size_t lower, std::size_t upper) const {
    for (Index w : minApprox_[upper].members)
      if (!approxBelow(lower, w)) return false;
    return true;
  }

  bool precedes(const ApproxClass& lower, const ApproxClass& upper) const {
    if (lower.kind != ApproxKind::Min || upper.kind != ApproxKind::Min)
      fail(ErrorKind::KindMismatch, "the order is defined on minimal-length classes only");
    return precedes(lower.id, upper.id);
  }

  /// O' <= O: some w' in O'_min and w in O_min with w' <= w.
  bool classPrecedes(std::size_t lowerClass, std::size_t upperClass) const {
    const CoxeterGroup& g = group();
    for (Index w : classes_[upperClass].minSet)
      for (Index v : classes_[lowerClass].minSet)
        if (g.bruhatLeq(v, w)) return true;
    return false;
  }

  bool classPrecedesForAll(std::size_t lowerClass, std::size_t upperClass) const {
    const CoxeterGroup& g = group();
    for (Index w : classes_[upperClass].minSet) {
      bool any = false;
      for (Index v : classes_[lowerClass].minSet) any = any || g.bruhatLeq(v, w);
      if (!any) return false;
    }
    return true;
  }

  /// Sigma_w and the sign (-1)^{l(w) - l(Sigma_w)} of the cocenter image of t_w.
  SigmaResult sigma(Index w) const {
    std::call_once(sigmaOnce_, [this] { fillSigma(); });
    return sigma_[w];
  }

  /// Same recursion with a uniformly random eligible (w', s) at every step.
  SigmaResult sigmaRandom(Index w, std::mt19937_64& rng) const {
    const CoxeterGroup& g = group();
    int sign = 1;
    while (!isMinimal(w)) {
      const Component comp = equalLengthComponent(w);
      const auto step = findDescent(comp, &rng);
      if (!step) fail(ErrorKind::TheoremViolation, "non-minimal element admits no length-decreasing move path");
      w = g.leftMul(step->generator, comp.elements[step->slot]);
      sign = -sign;
    }
    return {minApproxOf_[w], sign};
  }

  /// W^delta = {x : delta(x) = x}.
  std::vector<Index> fixedSubgroup() const {
    std::vector<Index> out;
    for (Index x = 0; x < group().order(); ++x)
      if (delta_.apply(x) == x) out.push_back(x);
    return out;
  }

 private:
  void registerBlocks(const ConjClass& c, const std::vector<std::vector<Index>>& blocks, ApproxKind kind,
                      std::vector<ApproxClass>& list, std::vector<std::size_t>& of) {
    for (const auto& b : blocks) {
      ApproxClass a;
      a.id = list.size();
      a.representative = b.front();
      a.members = b;
      a.length = group().length(b.front());
      a.kind = kind;
      a.classId = c.id;
      for (Index w : b) of[w] = a.id;
      list.push_back(std::move(a));
    }
  }

  void fillSigma() const {
    const CoxeterGroup& g = group();
    sigma_.resize(g.order());
    // Element indices are in length order, so s w' is always filled first.
    for (Index w = 0; w < g.order(); ++w) {
      if (isMinimal(w)) {
        sigma_[w] = {minApproxOf_[w], 1};
        continue;
      }
      const Component comp = equalLengthComponent(w);
      const auto step = findDescent(comp);
      if (!step) fail(ErrorKind::TheoremViolation, "non-minimal element admits no length-decreasing move path");
      const Index u = g.leftMul(step->generator, comp.elements[step->slot]);
      sigma_[w] = {sigma_[u].approxId, -sigma_[u].sign};
      const int parity = (g.length(w) - minApprox_[sigma_[w].approxId].length) % 2;
      if (sigma_[w].sign != (parity == 0 ? 1 : -1))
        fail(ErrorKind::TheoremViolation, "sign of the reduction disagrees with the length parity");
    }
  }

  DeltaAut delta_;
  std::vector<ConjClass> classes_;
  std::vector<std::size_t> classOf_;
  std::vector<ApproxClass> minApprox_, maxApprox_;
  std::vector<std::size_t> minApproxOf_, maxApproxOf_;
  mutable std::once_flag sigmaOnce_;
  mutable std::vector<SigmaResult> sigma_;
};

inline std::vector<ConjClass> deltaClasses(const DeltaAut& delta) { return Conjugacy(delta).classes(); }

}  // namespace coxhecke
