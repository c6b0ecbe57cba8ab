#pragma once

// Type II points of the Berkovich line over K as closed disks D(a, r^s),
// with the hyperbolic metric in ord units and the canonical charts
// w -> t^s w + a.

#include <array>
#include <optional>
#include <string>

#include "nadyn/rational.hpp"
#include "nadyn/respoly.hpp"
#include "nadyn/scalars.hpp"

namespace nadyn {

/// The disk D(center, r^exponent). The center is kept as its Laurent
/// expansion truncated below the exponent, so equal disks have equal
/// representations.
class TypeIIPoint {
 public:
  TypeIIPoint();  // the Gauss point D(0, 1)
  TypeIIPoint(const KScalar& center, Rational exponent);

  static TypeIIPoint gauss() { return {}; }

  const KScalar& center() const { return center_; }
  const Rational& exponent() const { return exponent_; }
  bool is_gauss() const;

  /// Smallest level over which the canonical chart is defined.
  int min_level() const;

  friend bool operator==(const TypeIIPoint& a, const TypeIIPoint& b) {
    return a.exponent_ == b.exponent_ && a.center_ == b.center_;
  }
  friend bool operator!=(const TypeIIPoint& a, const TypeIIPoint& b) { return !(a == b); }

 private:
  KScalar center_;
  Rational exponent_;
};

/// Point literal: "gauss" or "a=<scalar>;s=<rational>".
std::string to_string(const TypeIIPoint& p);

/// [[a, b], [c, d]] acting by w -> (a w + b) / (c w + d).
class Mobius {
 public:
  Mobius(KScalar a, KScalar b, KScalar c, KScalar d);
  static Mobius identity();

  const KScalar& a() const { return m_[0]; }
  const KScalar& b() const { return m_[1]; }
  const KScalar& c() const { return m_[2]; }
  const KScalar& d() const { return m_[3]; }

  KScalar det() const;
  Mobius inverse() const;  // adjugate; same class in PGL(2, K)
  friend Mobius operator*(const Mobius& x, const Mobius& y);
  friend bool operator==(const Mobius&, const Mobius&) = default;

 private:
  std::array<KScalar, 4> m_;
};

/// [[t^s, a], [0, 1]] at the given level; throws NeedsBaseChange when the
/// level cannot express t^s or the center.
Mobius chart(const TypeIIPoint& p, int level);
Mobius chart(const TypeIIPoint& p);

/// Hyperbolic distance in ord units.
Rational rho(const TypeIIPoint& x, const TypeIIPoint& y);

/// Exponent of the smallest disk containing both points.
Rational join_exponent(const TypeIIPoint& x, const TypeIIPoint& y);

/// Median of the tree triple (base, x, y).
TypeIIPoint wedge(const TypeIIPoint& x, const TypeIIPoint& y, const TypeIIPoint& base);

/// The point of [from, to] at distance tau from `from`.
TypeIIPoint path_point(const TypeIIPoint& from, const TypeIIPoint& to, const Rational& tau);

/// A classical point of P^1(K); nullopt is infinity.
using ClassicalPoint = std::optional<KScalar>;

struct Direction {
  TypeIIPoint at;
  DirectionClass cls;
  friend bool operator==(const Direction&, const Direction&) = default;
};

Direction direction_toward(const TypeIIPoint& from, const TypeIIPoint& target);
Direction direction_toward(const TypeIIPoint& from, const ClassicalPoint& target);

/// The point at distance h > 0 from p in the direction of the given class
/// (Finite: the disk D(a + c t^s, r^(s+h)); Infinity: D(a, r^(s-h))).
/// Factor classes throw IrrationalDirection.
TypeIIPoint step_along(const TypeIIPoint& p, const DirectionClass& cls, const Rational& h);

}  // namespace nadyn
