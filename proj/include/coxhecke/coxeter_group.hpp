#pragma once

// Finite Coxeter groups realized through their action on the root system of
// the geometric representation. Roots are located once in floating point,
// after which every element is a signed permutation of the positive roots
// and all arithmetic is exact table lookup.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numbers>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxhecke/coxeter_matrix.hpp"
#include "coxhecke/errors.hpp"
#include "coxhecke/gen_subset.hpp"

namespace coxhecke {

using Index = std::uint32_t;
using Word = std::vector<int>;

struct BuildOptions {
  std::size_t sizeLimit = 20000;
  double tolerance = 1e-9;
};

class CoxeterGroup;
using GroupPtr = std::shared_ptr<const CoxeterGroup>;

namespace detail {

// Write-once memo for Bruhat comparisons: 0 = unknown, 1 = false, 2 = true.
// Concurrent fills of one key always store the same value.
class BruhatCache {
 public:
  static constexpr std::size_t kDenseLimit = 4096;

  explicit BruhatCache(std::size_t order) : order_(order) {}

  int get(Index x, Index y) const {
    if (order_ <= kDenseLimit) {
      ensureDense();
      return dense_[key(x, y)].load(std::memory_order_relaxed);
    }
    std::lock_guard lock(mutex_);
    auto it = sparse_.find(key(x, y));
    return it == sparse_.end() ? 0 : it->second;
  }

  void put(Index x, Index y, bool value) const {
    const std::uint8_t v = value ? 2 : 1;
    if (order_ <= kDenseLimit) {
      ensureDense();
      dense_[key(x, y)].store(v, std::memory_order_relaxed);
      return;
    }
    std::lock_guard lock(mutex_);
    sparse_.emplace(key(x, y), v);
  }

 private:
  std::size_t key(Index x, Index y) const { return static_cast<std::size_t>(x) * order_ + y; }

  void ensureDense() const {
    std::call_once(once_, [this] {
      dense_.reset(new std::atomic<std::uint8_t>[order_ * order_]());
    });
  }

  std::size_t order_;
  mutable std::once_flag once_;
  mutable std::unique_ptr<std::atomic<std::uint8_t>[]> dense_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::size_t, std::uint8_t> sparse_;
};

}  // namespace detail

class CoxeterGroup {
  struct Token {};

 public:
  CoxeterGroup(Token, CoxeterMatrix m) : matrix_(std::move(m)) {}

  static GroupPtr build(const CoxeterMatrix& matrix, BuildOptions opts = {}) {
    matrix.validate();
    auto g = std::make_shared<CoxeterGroup>(Token{}, matrix);
    g->enumerateRoots(opts);
    g->enumerateElements(opts);
    return g;
  }

  const CoxeterMatrix& matrix() const noexcept { return matrix_; }
  int rank() const noexcept { return matrix_.size(); }
  GenSubset generators() const noexcept { return GenSubset::full(rank()); }
  std::size_t order() const noexcept { return length_.size(); }
  Index identity() const noexcept { return 0; }
  Index longest() const noexcept { return longest_; }
  int positiveRootCount() const noexcept { return numPositive_; }

  int length(Index w) const { return length_[w]; }
  Index generator(int s) const { return right_[s]; }
  Index rightMul(Index w, int s) const { return right_[static_cast<std::size_t>(w) * rank() + s]; }
  Index leftMul(int s, Index w) const { return left_[static_cast<std::size_t>(w) * rank() + s]; }
  Index inverse(Index w) const { return inverse_[w]; }
  GenSubset leftDescents(Index w) const { return GenSubset(leftDesc_[w]); }
  GenSubset rightDescents(Index w) const { return GenSubset(rightDesc_[w]); }
  GenSubset support(Index w) const { return GenSubset(support_[w]); }

  /// BFS parent: w = parent(w) * lastLetter(w) with length one less.
  Index parent(Index w) const { return parent_[w]; }
  int lastLetter(Index w) const { return lastLetter_[w]; }

  Word reducedWord(Index w) const {
    Word word(static_cast<std::size_t>(length_[w]));
    for (std::size_t i = word.size(); i > 0; --i) {
      word[i - 1] = lastLetter_[w];
      w = parent_[w];
    }
    return word;
  }

  /// Product of an arbitrary (not necessarily reduced) word.
  Index fromWord(std::span<const int> word) const {
    Index w = identity();
    for (int s : word) {
      if (s < 0 || s >= rank()) fail(ErrorKind::InvalidSubset, "generator index out of range");
      w = rightMul(w, s);
    }
    return w;
  }

  // w v = parent(w) (last(w) v), peeled letter by letter.
  Index mult(Index w, Index v) const {
    for (; w != 0; w = parent_[w]) v = leftMul(lastLetter_[w], v);
    return v;
  }

  /// Images of the positive roots under w, as root indices: 0..N-1 are the
  /// positive roots (simple roots first), N+i is the negative of root i.
  std::span<const std::uint16_t> rootAction(Index w) const {
    return {action_.data() + static_cast<std::size_t>(w) * numPositive_,
            static_cast<std::size_t>(numPositive_)};
  }

  /// Image of root r (0..2N-1) under generator s.
  int generatorOnRoot(int s, int r) const {
    return genRoot_[static_cast<std::size_t>(s) * 2 * numPositive_ + r];
  }

  /// Bruhat order by the lifting recursion: with s the smallest left descent
  /// of y, x <= y iff (sx < x ? sx <= sy : x <= sy).
  bool bruhatLeq(Index x, Index y) const {
    if (x == 0 || x == y) return true;
    if (length_[x] >= length_[y]) return false;
    if (int c = bruhat_->get(x, y)) return c == 2;
    const int s = std::countr_zero(leftDesc_[y]);
    const Index sy = leftMul(s, y);
    const Index sx = leftMul(s, x);
    const bool result = length_[sx] < length_[x] ? bruhatLeq(sx, sy) : bruhatLeq(x, sy);
    bruhat_->put(x, y, result);
    return result;
  }

  bool bruhatLess(Index x, Index y) const { return x != y && bruhatLeq(x, y); }

 private:
  void enumerateRoots(const BuildOptions& opts);
  void enumerateElements(const BuildOptions& opts);

  CoxeterMatrix matrix_;
  int numPositive_ = 0;
  std::vector<int> genRoot_;
  std::vector<std::uint16_t> action_;
  std::vector<int> length_;
  std::vector<Index> right_, left_, inverse_, parent_;
  std::vector<int> lastLetter_;
  std::vector<std::uint32_t> leftDesc_, rightDesc_, support_;
  Index longest_ = 0;
  std::unique_ptr<detail::BruhatCache> bruhat_;
};

inline void CoxeterGroup::enumerateRoots(const BuildOptions& opts) {
  const int n = rank();
  // Bilinear form B(a_s, a_t) = -cos(pi / m(s,t)).
  std::vector<double> form(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      form[s * n + t] = s == t ? 1.0 : -std::cos(std::numbers::pi / matrix_(s, t));

  using Vec = std::vector<double>;
  std::vector<Vec> roots;
  auto find = [&](const Vec& v) -> int {
    for (std::size_t i = 0; i < roots.size(); ++i) {
      double d = 0;
      for (int k = 0; k < n; ++k) d = std::max(d, std::abs(roots[i][k] - v[k]));
      if (d <= opts.tolerance) return static_cast<int>(i);
    }
    return -1;
  };
  auto reflect = [&](int s, const Vec& v) {
    double b = 0;
    for (int t = 0; t < n; ++t) b += form[s * n + t] * v[t];
    Vec out = v;
    out[s] -= 2 * b;
    return out;
  };

  for (int s = 0; s < n; ++s) {
    Vec v(n, 0.0);
    v[s] = 1.0;
    roots.push_back(v);
  }
  std::vector<int> image;  // image[r * n + s], filled as roots are processed
  for (std::size_t r = 0; r < roots.size(); ++r) {
    for (int s = 0; s < n; ++s) {
      Vec v = reflect(s, roots[r]);
      int j = find(v);
      if (j < 0) {
        if (roots.size() >= opts.sizeLimit) {
          fail(ErrorKind::GroupNotFinite, "root enumeration exceeded the size limit of " +
                                              std::to_string(opts.sizeLimit));
        }
        roots.push_back(v);
        j = static_cast<int>(roots.size()) - 1;
      }
      image.push_back(j);
    }
  }

  const double separation = 100 * opts.tolerance;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      double d = 0;
      for (int k = 0; k < n; ++k) d = std::max(d, std::abs(roots[i][k] - roots[j][k]));
      if (d < separation) fail(ErrorKind::RootSeparationFailure, "two distinct roots are too close");
    }
  }

  // Positive roots keep discovery order; negatives are matched to them.
  std::vector<int> canon(roots.size(), -1);
  std::vector<int> positives;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    bool nonneg = true, nonpos = true;
    for (double x : roots[i]) {
      if (x < -opts.tolerance) nonneg = false;
      if (x > opts.tolerance) nonpos = false;
    }
    if (nonneg == nonpos) fail(ErrorKind::RootSeparationFailure, "root is neither positive nor negative");
    if (nonneg) {
      canon[i] = static_cast<int>(positives.size());
      positives.push_back(static_cast<int>(i));
    }
  }
  numPositive_ = static_cast<int>(positives.size());
  if (2 * positives.size() != roots.size()) fail(ErrorKind::RootSeparationFailure, "root system is not symmetric");
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (canon[i] >= 0) continue;
    Vec neg = roots[i];
    for (double& x : neg) x = -x;
    const int j = find(neg);
    if (j < 0 || canon[j] < 0) fail(ErrorKind::RootSeparationFailure, "negative root without positive partner");
    canon[i] = canon[j] + numPositive_;
  }
  if (2 * numPositive_ > 65535) fail(ErrorKind::GroupNotFinite, "too many roots");

  std::vector<int> original(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) original[canon[i]] = static_cast<int>(i);
  genRoot_.assign(static_cast<std::size_t>(n) * roots.size(), 0);
  for (int s = 0; s < n; ++s)
    for (std::size_t r = 0; r < roots.size(); ++r)
      genRoot_[s * roots.size() + r] = canon[image[original[r] * n + s]];
}

inline void CoxeterGroup::enumerateElements(const BuildOptions& opts) {
  const int n = rank();
  const int N = numPositive_;
  auto neg = [N](int r) { return r < N ? r + N : r - N; };

  std::unordered_map<std::u16string, Index> index;
  auto key = [&](Index w) {
    auto a = rootAction(w);
    return std::u16string(a.begin(), a.end());
  };

  action_.resize(N);
  for (int i = 0; i < N; ++i) action_[i] = static_cast<std::uint16_t>(i);
  index.emplace(key(0), 0);
  parent_.push_back(0);
  lastLetter_.push_back(-1);
  std::vector<int> depth{0};

  std::vector<std::uint16_t> img(N);
  for (Index w = 0; w < parent_.size(); ++w) {
    for (int s = 0; s < n; ++s) {
      // (ws)(a_i) = w(s(a_i))
      for (int i = 0; i < N; ++i) {
        const int r = generatorOnRoot(s, i);
        const std::uint16_t* aw = action_.data() + static_cast<std::size_t>(w) * N;
        img[i] = static_cast<std::uint16_t>(r < N ? aw[r] : neg(aw[r - N]));
      }
      std::u16string k(img.begin(), img.end());
      auto it = index.find(k);
      Index ws;
      if (it == index.end()) {
        if (parent_.size() >= opts.sizeLimit) {
          fail(ErrorKind::GroupNotFinite, "element enumeration exceeded the size limit of " +
                                              std::to_string(opts.sizeLimit));
        }
        ws = static_cast<Index>(parent_.size());
        index.emplace(std::move(k), ws);
        action_.insert(action_.end(), img.begin(), img.end());
        parent_.push_back(w);
        lastLetter_.push_back(s);
        depth.push_back(depth[w] + 1);
      } else {
        ws = it->second;
      }
      right_.push_back(ws);
    }
  }

  const std::size_t order = parent_.size();
  length_.resize(order);
  rightDesc_.resize(order);
  support_.resize(order);
  for (Index w = 0; w < order; ++w) {
    auto a = rootAction(w);
    int len = 0;
    std::uint32_t desc = 0;
    for (int i = 0; i < N; ++i) {
      if (a[i] >= N) {
        ++len;
        if (i < n) desc |= 1u << i;
      }
    }
    if (len != depth[w]) fail(ErrorKind::TheoremViolation, "root-count length disagrees with word length");
    length_[w] = len;
    rightDesc_[w] = desc;
    support_[w] = w == 0 ? 0 : support_[parent_[w]] | (1u << lastLetter_[w]);
  }

  // Inverses from the inverse root permutation.
  inverse_.resize(order);
  std::vector<int> full(2 * N), inv(2 * N);
  for (Index w = 0; w < order; ++w) {
    auto a = rootAction(w);
    for (int i = 0; i < N; ++i) {
      full[i] = a[i];
      full[i + N] = neg(a[i]);
    }
    for (int r = 0; r < 2 * N; ++r) inv[full[r]] = r;
    std::u16string k(inv.begin(), inv.begin() + N);
    auto it = index.find(k);
    if (it == index.end()) fail(ErrorKind::TheoremViolation, "inverse of an element is missing");
    inverse_[w] = it->second;
  }

  left_.resize(order * n);
  leftDesc_.resize(order);
  for (Index w = 0; w < order; ++w) {
    for (int s = 0; s < n; ++s) left_[w * n + s] = inverse_[rightMul(inverse_[w], s)];
    leftDesc_[w] = rightDesc_[inverse_[w]];
  }

  longest_ = 0;
  for (Index w = 0; w < order; ++w)
    if (length_[w] > length_[longest_]) longest_ = w;
  if (length_[longest_] != N) fail(ErrorKind::TheoremViolation, "longest element has wrong length");
  for (Index w = 0; w < order; ++w)
    if (w != longest_ && length_[w] == N) fail(ErrorKind::TheoremViolation, "longest element is not unique");

  bruhat_ = std::make_unique<detail::BruhatCache>(order);
}

/// Value handle for an element of a specific group.
class Element {
 public:
  Element() = default;
  Element(GroupPtr g, Index i) : group_(std::move(g)), index_(i) {
    if (index_ >= group_->order()) fail(ErrorKind::InvalidSubset, "element index out of range");
  }

  const CoxeterGroup& group() const { return *group_; }
  const GroupPtr& groupPtr() const { return group_; }
  Index index() const noexcept { return index_; }
  int length() const { return group_->length(index_); }
  Word word() const { return group_->reducedWord(index_); }

  bool operator==(const Element& o) const { return group_ == o.group_ && index_ == o.index_; }

 private:
  GroupPtr group_;
  Index index_ = 0;
};

inline void requireSameGroup(const Element& a, const Element& b) {
  if (a.groupPtr() != b.groupPtr()) fail(ErrorKind::GroupMismatch, "elements belong to different groups");
}

inline Element mult(const Element& w, const Element& v) {
  requireSameGroup(w, v);
  return Element(w.groupPtr(), w.group().mult(w.index(), v.index()));
}

inline bool bruhatLeq(const Element& x, const Element& y) {
  requireSameGroup(x, y);
  return x.group().bruhatLeq(x.index(), y.index());
}

enum class Side { Left, Right };

inline GenSubset descents(const Element& w, Side side) {
  return side == Side::Left ? w.group().leftDescents(w.index()) : w.group().rightDescents(w.index());
}

inline GenSubset support(const Element& w) { return w.group().support(w.index()); }

}  // namespace coxhecke
