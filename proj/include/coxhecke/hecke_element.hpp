#pragma once

#include <map>
#include <utility>

#include "coxhecke/coxeter_group.hpp"
#include "coxhecke/linalg.hpp"
#include "coxhecke/poly.hpp"
#include "coxhecke/rational.hpp"

namespace coxhecke {

template <class R>
struct RingTraits {
  static bool isZero(const R& x) { return x.isZero(); }
};

template <>
struct RingTraits<Rational> {
  static bool isZero(const Rational& x) { return sgn(x) == 0; }
};

/// Sparse combination sum_w c_w T_w over an exact coefficient ring R.
/// Zero coefficients are never stored.
template <class R>
class HeckeElt {
 public:
  using Coeffs = std::map<Index, R>;

  HeckeElt() = default;
  explicit HeckeElt(GroupPtr g) : group_(std::move(g)) {}

  static HeckeElt basis(GroupPtr g, Index w, R c = R(1)) {
    HeckeElt h(std::move(g));
    h.add(w, c);
    return h;
  }

  const CoxeterGroup& group() const { return *group_; }
  const GroupPtr& groupPtr() const { return group_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  bool isZero() const noexcept { return coeffs_.empty(); }
  std::size_t termCount() const noexcept { return coeffs_.size(); }

  R coeff(Index w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? R(0) : it->second;
  }

  void add(Index w, const R& c) {
    if (RingTraits<R>::isZero(c)) return;
    auto [it, inserted] = coeffs_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (RingTraits<R>::isZero(it->second)) coeffs_.erase(it);
    }
  }

  HeckeElt& operator+=(const HeckeElt& o) {
    checkGroup(o);
    for (const auto& [w, c] : o.coeffs_) add(w, c);
    return *this;
  }
  HeckeElt& operator-=(const HeckeElt& o) {
    checkGroup(o);
    for (const auto& [w, c] : o.coeffs_) add(w, -c);
    return *this;
  }
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }

  HeckeElt scaled(const R& k) const {
    HeckeElt out(group_);
    for (const auto& [w, c] : coeffs_) out.add(w, c * k);
    return out;
  }

  bool operator==(const HeckeElt& o) const { return coeffs_ == o.coeffs_; }

  /// Dense coordinates in the basis {T_w} ordered by element index.
  QVector toVector() const requires std::is_same_v<R, Rational> {
    QVector v(group_->order());
    for (const auto& [w, c] : coeffs_) v[w] = c;
    return v;
  }

  static HeckeElt fromVector(GroupPtr g, const QVector& v) requires std::is_same_v<R, Rational> {
    HeckeElt h(std::move(g));
    for (Index w = 0; w < v.size(); ++w) h.add(w, v[w]);
    return h;
  }

  void checkGroup(const HeckeElt& o) const {
    if (group_ && o.group_ && group_ != o.group_)
      fail(ErrorKind::GroupMismatch, "Hecke elements over different groups");
  }

 private:
  GroupPtr group_;
  Coeffs coeffs_;
};

/// Multiplication by T_s on one side in the algebra with parameter q:
/// T_w T_s = T_{ws} if ws > w, else q T_{ws} + (q - 1) T_w (and the left
/// analogue). q may be the indeterminate or a specialized value.
template <class R>
HeckeElt<R> multByGen(const HeckeElt<R>& h, int s, Side side, const R& q) {
  const CoxeterGroup& g = h.group();
  const R qm1 = q - R(1);
  HeckeElt<R> out(h.groupPtr());
  for (const auto& [w, c] : h.coeffs()) {
    const Index ws = side == Side::Right ? g.rightMul(w, s) : g.leftMul(s, w);
    if (g.length(ws) > g.length(w)) {
      out.add(ws, c);
    } else {
      out.add(ws, c * q);
      out.add(w, c * qm1);
    }
  }
  return out;
}

/// Full product a b, folding each basis element of b in letter by letter.
template <class R>
HeckeElt<R> heckeMult(const HeckeElt<R>& a, const HeckeElt<R>& b, const R& q) {
  a.checkGroup(b);
  HeckeElt<R> out(a.groupPtr());
  for (const auto& [v, c] : b.coeffs()) {
    HeckeElt<R> term = a;
    for (int s : a.group().reducedWord(v)) term = multByGen(term, s, Side::Right, q);
    out += term.scaled(c);
  }
  return out;
}

/// Apply delta to every basis element.
template <class R, class Delta>
HeckeElt<R> applyDelta(const Delta& delta, const HeckeElt<R>& h) {
  HeckeElt<R> out(h.groupPtr());
  for (const auto& [w, c] : h.coeffs()) out.add(delta.apply(w), c);
  return out;
}

}  // namespace coxhecke
