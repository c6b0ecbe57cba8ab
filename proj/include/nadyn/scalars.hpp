#pragma once

// Exact arithmetic in K = Q(t^(1/N)), the computable part of the
// Levi-Civita field, with the t-adic valuation.
//
// A KScalar stores num(u)/den(u) in lowest terms with den monic, where
// u = t^(1/N) and N is the scalar's level. Binary operations raise both
// operands to a common level on demand; the level never exceeds
// level_cap() (default 64, overridable through NADYN_LEVEL_CAP).

#include <optional>
#include <string>

#include "nadyn/poly.hpp"
#include "nadyn/rational.hpp"

namespace nadyn {

int level_cap();

class KScalar {
 public:
  KScalar();
  KScalar(long value);  // NOLINT(google-explicit-constructor)
  KScalar(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// num/den at the given level, normalized.
  static KScalar from_parts(QPoly num, QPoly den, int level = 1);

  /// t^e at the given level; e*level must be an integer.
  static KScalar t_power(const Rational& e, int level);
  /// t^e at the smallest level that represents it.
  static KScalar t_power(const Rational& e);
  static KScalar t() { return t_power(Rational(1), 1); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  int level() const { return level_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Same element at level `level`, which must be a multiple of level().
  KScalar at_level(int level) const;
  /// Same element at the smallest level representing it.
  KScalar compact() const;

  KScalar operator-() const;
  KScalar& operator+=(const KScalar& o);
  KScalar& operator-=(const KScalar& o);
  KScalar& operator*=(const KScalar& o);
  KScalar& operator/=(const KScalar& o);
  friend KScalar operator+(KScalar a, const KScalar& b) { return a += b; }
  friend KScalar operator-(KScalar a, const KScalar& b) { return a -= b; }
  friend KScalar operator*(KScalar a, const KScalar& b) { return a *= b; }
  friend KScalar operator/(KScalar a, const KScalar& b) { return a /= b; }

  /// Value equality; operands of different levels compare as field elements.
  friend bool operator==(const KScalar& a, const KScalar& b);
  friend bool operator!=(const KScalar& a, const KScalar& b) { return !(a == b); }

 private:
  KScalar(QPoly num, QPoly den, int level, bool normalized);
  void normalize();

  QPoly num_;
  QPoly den_;
  int level_ = 1;
};

inline bool is_zero(const KScalar& x) { return x.is_zero(); }

/// Element of the residue field Q, or the point at infinity.
struct ResScalar {
  Rational value;
  bool infinite = false;

  static ResScalar finite(Rational v) { return {std::move(v), false}; }
  static ResScalar infinity() { return {Rational(0), true}; }

  friend bool operator==(const ResScalar& a, const ResScalar& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

std::string to_string(const ResScalar& x);

/// t-adic valuation in t-units; nullopt stands for +infinity (x = 0).
std::optional<Rational> ord(const KScalar& x);

/// Coefficient of t^ord(x) in the Puiseux expansion of x; 0 for x = 0.
Rational leading_coefficient(const KScalar& x);

ResScalar residue(const KScalar& x);

/// Re-expresses x over u' = u^(1/M): level N -> N*M.
KScalar base_change(const KScalar& x, int M);

/// Laurent expansion of x truncated to the powers t^e with e < bound.
KScalar truncate_below(const KScalar& x, const Rational& bound);

/// Expression text accepted back by the scalar parser.
std::string to_string(const KScalar& x);

}  // namespace nadyn
