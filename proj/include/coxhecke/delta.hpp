#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "coxhecke/coxeter_group.hpp"
#include "coxhecke/errors.hpp"

namespace coxhecke {

/// A diagram automorphism delta of (W, S): a permutation of the generators
/// preserving the Coxeter matrix, extended to W letter by letter.
class DeltaAut {
 public:
  DeltaAut() = default;

  DeltaAut(GroupPtr g, std::vector<int> genImage) : group_(std::move(g)), genImage_(std::move(genImage)) {
    const int n = group_->rank();
    if (static_cast<int>(genImage_.size()) != n) {
      fail(ErrorKind::NotAnAutomorphism, "image list has " + std::to_string(genImage_.size()) +
                                             " entries, expected " + std::to_string(n));
    }
    std::vector<bool> seen(n, false);
    for (int s : genImage_) {
      if (s < 0 || s >= n || seen[s]) fail(ErrorKind::NotAnAutomorphism, "image list is not a permutation");
      seen[s] = true;
    }
    const auto& m = group_->matrix();
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        if (m(genImage_[s], genImage_[t]) != m(s, t))
          fail(ErrorKind::NotAnAutomorphism, "permutation does not preserve the Coxeter matrix");

    elemMap_.resize(group_->order());
    elemMap_[0] = 0;
    for (Index w = 1; w < group_->order(); ++w)
      elemMap_[w] = group_->rightMul(elemMap_[group_->parent(w)], genImage_[group_->lastLetter(w)]);

    std::vector<int> p(genImage_);
    order_ = 1;
    auto isId = [](const std::vector<int>& v) {
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != static_cast<int>(i)) return false;
      return true;
    };
    while (!isId(p)) {
      std::vector<int> next(n);
      for (int s = 0; s < n; ++s) next[s] = genImage_[p[s]];
      p = std::move(next);
      ++order_;
    }
  }

  static DeltaAut identity(GroupPtr g) {
    std::vector<int> id(g->rank());
    std::iota(id.begin(), id.end(), 0);
    return DeltaAut(std::move(g), std::move(id));
  }

  const CoxeterGroup& group() const { return *group_; }
  const GroupPtr& groupPtr() const { return group_; }
  const std::vector<int>& genImage() const noexcept { return genImage_; }
  int onGenerator(int s) const { return genImage_[s]; }
  int order() const noexcept { return order_; }
  bool isIdentity() const noexcept { return order_ == 1; }

  Index apply(Index w) const { return elemMap_[w]; }

  GenSubset apply(GenSubset J) const {
    GenSubset out;
    for (int s : J.members()) out.insert(genImage_[s]);
    return out;
  }

  DeltaAut inverse() const {
    std::vector<int> inv(genImage_.size());
    for (std::size_t s = 0; s < genImage_.size(); ++s) inv[genImage_[s]] = static_cast<int>(s);
    return DeltaAut(group_, std::move(inv));
  }

  bool operator==(const DeltaAut& o) const { return group_ == o.group_ && genImage_ == o.genImage_; }

 private:
  GroupPtr group_;
  std::vector<int> genImage_;
  std::vector<Index> elemMap_;
  int order_ = 1;
};

inline DeltaAut diagramAut(GroupPtr g, std::vector<int> genImage) {
  return DeltaAut(std::move(g), std::move(genImage));
}

inline Element applyDelta(const DeltaAut& delta, const Element& w) {
  if (w.groupPtr() != delta.groupPtr()) fail(ErrorKind::GroupMismatch, "automorphism of a different group");
  return Element(w.groupPtr(), delta.apply(w.index()));
}

/// delta' = Ad(w0) o delta, i.e. s -> w0 delta(s) w0.
inline DeltaAut composeAdW0(const DeltaAut& delta) {
  const CoxeterGroup& g = delta.group();
  const Index w0 = g.longest();
  std::vector<int> image(g.rank());
  for (int s = 0; s < g.rank(); ++s) {
    const Index x = g.mult(g.mult(w0, g.generator(delta.onGenerator(s))), w0);
    if (g.length(x) != 1) fail(ErrorKind::TheoremViolation, "w0 does not normalize S");
    image[s] = g.lastLetter(x);
  }
  return DeltaAut(delta.groupPtr(), std::move(image));
}

/// Every permutation of S preserving the Coxeter matrix, identity first,
/// then lexicographic order of the image lists.
inline std::vector<DeltaAut> diagramAutomorphisms(const GroupPtr& g) {
  const int n = g->rank();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<DeltaAut> out;
  const auto& m = g->matrix();
  do {
    bool ok = true;
    for (int s = 0; s < n && ok; ++s)
      for (int t = 0; t < n && ok; ++t) ok = m(p[s], p[t]) == m(s, t);
    if (ok) out.emplace_back(g, p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace coxhecke
