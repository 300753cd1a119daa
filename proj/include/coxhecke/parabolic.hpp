#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "coxhecke/coxeter_group.hpp"
#include "coxhecke/delta.hpp"

namespace coxhecke {

/// The standard parabolic subgroup W_J as a group in its own right, with
/// generator k of the subgroup mapped to the k-th smallest member of J.
class ParabolicEmbedding {
 public:
  ParabolicEmbedding(GroupPtr parent, GenSubset J, BuildOptions opts = {})
      : parent_(std::move(parent)), J_(J), gens_(J.members()) {
    if (!J.subsetOf(parent_->generators())) fail(ErrorKind::InvalidSubset, "J is not a subset of S");
    subgroup_ = CoxeterGroup::build(parent_->matrix().restrict(J), opts);
    embed_.resize(subgroup_->order());
    for (Index u = 1; u < subgroup_->order(); ++u)
      embed_[u] = parent_->rightMul(embed_[subgroup_->parent(u)], gens_[subgroup_->lastLetter(u)]);
    for (Index u = 0; u < subgroup_->order(); ++u) back_.emplace(embed_[u], u);
  }

  const CoxeterGroup& parent() const { return *parent_; }
  const GroupPtr& parentPtr() const { return parent_; }
  const GroupPtr& subgroup() const { return subgroup_; }
  GenSubset J() const noexcept { return J_; }
  int parentGenerator(int k) const { return gens_[k]; }

  Index embed(Index u) const { return embed_[u]; }
  const std::vector<Index>& embedding() const noexcept { return embed_; }

  std::optional<Index> preimage(Index w) const {
    auto it = back_.find(w);
    if (it == back_.end()) return std::nullopt;
    return it->second;
  }

  /// delta restricted to W_J; requires delta(J) = J.
  DeltaAut restrict(const DeltaAut& delta) const {
    if (delta.apply(J_) != J_) fail(ErrorKind::InvalidSubset, "J is not delta-stable");
    std::vector<int> image(gens_.size());
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      const int t = delta.onGenerator(gens_[k]);
      image[k] = static_cast<int>(std::find(gens_.begin(), gens_.end(), t) - gens_.begin());
    }
    return DeltaAut(subgroup_, std::move(image));
  }

 private:
  GroupPtr parent_;
  GenSubset J_;
  std::vector<int> gens_;
  GroupPtr subgroup_;
  std::vector<Index> embed_;
  std::unordered_map<Index, Index> back_;
};

inline std::shared_ptr<const ParabolicEmbedding> parabolic(const GroupPtr& g, GenSubset J) {
  return std::make_shared<const ParabolicEmbedding>(g, J);
}

}  // namespace coxhecke
