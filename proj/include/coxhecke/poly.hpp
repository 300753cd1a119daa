#pragma once

// Integer polynomials and Laurent polynomials in q, with overflow-checked
// 64-bit coefficients.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "coxhecke/errors.hpp"
#include "coxhecke/rational.hpp"

namespace coxhecke {

namespace detail {

inline std::int64_t checkedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::TheoremViolation, "polynomial coefficient overflow");
  return r;
}

inline std::int64_t checkedMul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::TheoremViolation, "polynomial coefficient overflow");
  return r;
}

}  // namespace detail

/// Dense coefficients, lowest degree first, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(std::int64_t c) {  // NOLINT: implicit constants are convenient here
    if (c != 0) c_.push_back(c);
  }
  explicit Poly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly q() { return Poly(std::vector<std::int64_t>{0, 1}); }
  static Poly monomial(std::int64_t c, int degree) {
    std::vector<std::int64_t> v(degree + 1, 0);
    v[degree] = c;
    return Poly(std::move(v));
  }

  const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }
  bool isZero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::int64_t operator[](int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  std::int64_t constantTerm() const { return (*this)[0]; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = detail::checkedAdd(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = detail::checkedMul(x, -1);
    return r;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.isZero() || b.isZero()) return {};
    std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = detail::checkedAdd(r[i + j], detail::checkedMul(a.c_[i], b.c_[j]));
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(static_cast<long>(*it));
    return acc;
  }

  bool operator==(const Poly&) const = default;

  /// Descending-degree expanded form, e.g. "q^2-2q+1"; zero prints "0".
  std::string str() const { return formatTerms(c_, 0); }

  static std::string formatTerms(const std::vector<std::int64_t>& c, int lowest) {
    std::string out;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
      const std::int64_t a = c[i];
      if (a == 0) continue;
      const int e = i + lowest;
      const std::uint64_t mag = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
      if (a < 0) out += '-';
      else if (!out.empty()) out += '+';
      if (e == 0 || mag != 1) out += std::to_string(mag);
      if (e != 0) {
        out += 'q';
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<std::int64_t> c_;
};

/// q^low * body, normalized so body has a nonzero constant term (or is zero
/// with low = 0).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t c) : body_(c) {}  // NOLINT
  LaurentPoly(const Poly& p, int low = 0) : low_(low), body_(p) { normalize(); }  // NOLINT

  static LaurentPoly q() { return LaurentPoly(Poly::q()); }
  static LaurentPoly qPower(int e) { return LaurentPoly(Poly(1), e); }

  int lowest() const noexcept { return low_; }
  const Poly& body() const noexcept { return body_; }
  bool isZero() const noexcept { return body_.isZero(); }

  std::int64_t coeff(int e) const { return body_[e - low_]; }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    const int low = std::min(a.low_, b.low_);
    return LaurentPoly(a.shifted(a.low_ - low) + b.shifted(b.low_ - low), low);
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
  LaurentPoly operator-() const { return LaurentPoly(-body_, low_); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    return LaurentPoly(a.body_ * b.body_, a.low_ + b.low_);
  }
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  Rational eval(const Rational& x) const {
    if (low_ < 0 && sgn(x) == 0) fail(ErrorKind::ZeroDenominator, "negative power of q evaluated at 0");
    Rational scale = 1;
    Rational base = low_ < 0 ? Rational(1 / x) : x;
    for (int i = 0; i < std::abs(low_); ++i) scale *= base;
    return body_.eval(x) * scale;
  }

  bool operator==(const LaurentPoly&) const = default;

  std::string str() const { return Poly::formatTerms(body_.coeffs(), low_); }

 private:
  Poly shifted(int by) const {
    if (by == 0) return body_;
    std::vector<std::int64_t> c(by, 0);
    c.insert(c.end(), body_.coeffs().begin(), body_.coeffs().end());
    return Poly(std::move(c));
  }

  void normalize() {
    if (body_.isZero()) {
      low_ = 0;
      return;
    }
    const auto& c = body_.coeffs();
    std::size_t z = 0;
    while (c[z] == 0) ++z;
    if (z > 0) {
      body_ = Poly(std::vector<std::int64_t>(c.begin() + z, c.end()));
      low_ += static_cast<int>(z);
    }
  }

  int low_ = 0;
  Poly body_;
};

}  // namespace coxhecke
