#include "nadyn/berkspace.hpp"

#include <numeric>

#include "nadyn/error.hpp"

namespace nadyn {

TypeIIPoint::TypeIIPoint() : center_(), exponent_(0) {}

TypeIIPoint::TypeIIPoint(const KScalar& center, Rational exponent)
    : center_(truncate_below(center, exponent)), exponent_(std::move(exponent)) {}

bool TypeIIPoint::is_gauss() const { return exponent_ == 0 && center_.is_zero(); }

int TypeIIPoint::min_level() const {
  long den = to_long(exponent_.get_den());
  return static_cast<int>(std::lcm(den, static_cast<long>(center_.compact().level())));
}

std::string to_string(const TypeIIPoint& p) {
  if (p.is_gauss()) return "gauss";
  return "a=" + to_string(p.center()) + ";s=" + to_string(p.exponent());
}

Mobius::Mobius(KScalar a, KScalar b, KScalar c, KScalar d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  if (det().is_zero()) throw Error(ErrorKind::InvalidArgument, "Mobius matrix is singular");
}

Mobius Mobius::identity() { return Mobius(KScalar(1), KScalar(0), KScalar(0), KScalar(1)); }

KScalar Mobius::det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

Mobius Mobius::inverse() const { return Mobius(m_[3], -m_[1], -m_[2], m_[0]); }

Mobius operator*(const Mobius& x, const Mobius& y) {
  return Mobius(x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(),
                x.c() * y.a() + x.d() * y.c(), x.c() * y.b() + x.d() * y.d());
}

Mobius chart(const TypeIIPoint& p, int level) {
  int need = p.min_level();
  if (level < 1 || level % need != 0) {
    throw Error(ErrorKind::NeedsBaseChange,
                "chart of " + to_string(p) + " needs a level divisible by " + std::to_string(need));
  }
  return Mobius(KScalar::t_power(p.exponent(), level), p.center().compact().at_level(level), KScalar(0), KScalar(1));
}

Mobius chart(const TypeIIPoint& p) { return chart(p, p.min_level()); }

Rational join_exponent(const TypeIIPoint& x, const TypeIIPoint& y) {
  Rational m = std::min(x.exponent(), y.exponent());
  auto o = ord(x.center() - y.center());
  if (o && *o < m) m = *o;
  return m;
}

Rational rho(const TypeIIPoint& x, const TypeIIPoint& y) {
  Rational m = join_exponent(x, y);
  return (x.exponent() - m) + (y.exponent() - m);
}

TypeIIPoint path_point(const TypeIIPoint& from, const TypeIIPoint& to, const Rational& tau) {
  Rational m = join_exponent(from, to);
  Rational up = from.exponent() - m;
  Rational length = up + (to.exponent() - m);
  if (tau < 0 || tau > length) {
    throw Error(ErrorKind::OutOfRange, "path parameter " + to_string(tau) + " outside [0, " + to_string(length) + "]");
  }
  if (tau <= up) return TypeIIPoint(from.center(), from.exponent() - tau);
  return TypeIIPoint(to.center(), m + (tau - up));
}

TypeIIPoint wedge(const TypeIIPoint& x, const TypeIIPoint& y, const TypeIIPoint& base) {
  Rational tau = (rho(base, x) + rho(base, y) - rho(x, y)) / 2;
  return path_point(base, x, tau);
}

namespace {

DirectionClass class_of_offset(const KScalar& offset, const Rational& s) {
  auto o = ord(offset);
  if (o && *o < s) return Infinity{};
  if (!o || *o > s) return Finite{Rational(0)};
  return Finite{leading_coefficient(offset)};
}

}  // namespace

Direction direction_toward(const TypeIIPoint& from, const TypeIIPoint& target) {
  if (from == target) throw Error(ErrorKind::SamePoint, "no direction from a point to itself");
  Rational m = join_exponent(from, target);
  if (m < from.exponent()) return {from, Infinity{}};
  return {from, class_of_offset(target.center() - from.center(), from.exponent())};
}

Direction direction_toward(const TypeIIPoint& from, const ClassicalPoint& target) {
  if (!target) return {from, Infinity{}};
  return {from, class_of_offset(*target - from.center(), from.exponent())};
}

TypeIIPoint step_along(const TypeIIPoint& p, const DirectionClass& cls, const Rational& h) {
  if (h <= 0) throw Error(ErrorKind::InvalidArgument, "step length must be positive");
  if (const auto* f = std::get_if<Finite>(&cls)) {
    KScalar center = p.center() + KScalar(f->value) * KScalar::t_power(p.exponent());
    return TypeIIPoint(center, p.exponent() + h);
  }
  if (std::holds_alternative<Infinity>(cls)) return TypeIIPoint(p.center(), p.exponent() - h);
  throw Error(ErrorKind::IrrationalDirection,
              "cannot step into " + to_string(cls) + ": its directions are not defined over Q");
}

}  // namespace nadyn
