#pragma once

// Dense univariate polynomials over an exact field F.
//
// F needs +, -, *, /, ==, construction from int, and a free is_zero(F)
// findable by ordinary or argument-dependent lookup.

#include <cassert>
#include <utility>
#include <vector>

#include "nadyn/error.hpp"
#include "nadyn/rational.hpp"

namespace nadyn {

namespace detail {
template <class F>
bool coeff_is_zero(const F& x) {
  return is_zero(x);
}
}  // namespace detail

template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const F& c) { return Poly(std::vector<F>{c}); }
  static Poly monomial(const F& c, int k) {
    std::vector<F> v(static_cast<size_t>(k) + 1, F(0));
    v[static_cast<size_t>(k)] = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(F(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }

  F coeff(int i) const {
    if (i < 0 || i > degree()) return F(0);
    return c_[static_cast<size_t>(i)];
  }
  const F& leading() const {
    assert(!c_.empty());
    return c_.back();
  }

  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  int valuation() const {
    for (size_t i = 0; i < c_.size(); ++i) {
      if (!detail::coeff_is_zero(c_[i])) return static_cast<int>(i);
    }
    return -1;
  }

  bool is_monomial() const { return !c_.empty() && valuation() == degree(); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = F(0) - c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (detail::coeff_is_zero(b.c_[j])) continue;
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const F& s) const {
    if (detail::coeff_is_zero(s)) return Poly();
    Poly r = *this;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (!(a.c_[i] == b.c_[i])) return false;
    }
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Quotient and remainder; b must be nonzero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<F> rem = a.c_;
    std::vector<F> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, F(0));
    const F& lead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      const F& top = rem[static_cast<size_t>(k + b.degree())];
      if (detail::coeff_is_zero(top)) continue;
      F q = top / lead;
      quo[static_cast<size_t>(k)] = q;
      for (int j = 0; j <= b.degree(); ++j) {
        auto idx = static_cast<size_t>(k + j);
        rem[idx] = rem[idx] - q * b.c_[static_cast<size_t>(j)];
      }
    }
    rem.resize(static_cast<size_t>(b.degree()));
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<F> r(c_.size() - 1, F(0));
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * F(static_cast<long>(i));
    return Poly(std::move(r));
  }

  F eval(const F& x) const {
    F acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(F(1) / leading());
  }

  /// Divides by x^k; requires valuation() >= k.
  Poly shift_down(int k) const {
    if (k == 0 || is_zero()) return *this;
    assert(valuation() >= k);
    return Poly(std::vector<F>(c_.begin() + k, c_.end()));
  }
  Poly shift_up(int k) const {
    if (k == 0 || is_zero()) return *this;
    std::vector<F> r(static_cast<size_t>(k), F(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(std::move(r));
  }

  /// Substitutes x -> x^m.
  Poly stretch(int m) const {
    if (m == 1 || is_zero()) return *this;
    std::vector<F> r(static_cast<size_t>(degree() * m) + 1, F(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i * static_cast<size_t>(m)] = c_[i];
    return Poly(std::move(r));
  }

  Poly pow(int e) const {
    Poly r = constant(F(1)), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

using QPoly = Poly<Rational>;

}  // namespace nadyn
