#include "nadyn/scalars.hpp"

#include <cstdlib>
#include <numeric>
#include <vector>

#include "nadyn/error.hpp"

namespace nadyn {

int level_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("NADYN_LEVEL_CAP")) {
      int v = std::atoi(env);
      if (v >= 1) return v;
    }
    return 64;
  }();
  return cap;
}

namespace {

void check_level(long level) {
  if (level > level_cap()) {
    throw Error(ErrorKind::LevelCapExceeded,
                "level " + std::to_string(level) + " exceeds the cap " + std::to_string(level_cap()));
  }
}

// Brings a and b to a common level.
std::pair<KScalar, KScalar> aligned(const KScalar& a, const KScalar& b) {
  if (a.level() == b.level()) return {a, b};
  long l = std::lcm(static_cast<long>(a.level()), static_cast<long>(b.level()));
  check_level(l);
  return {a.at_level(static_cast<int>(l)), b.at_level(static_cast<int>(l))};
}

}  // namespace

KScalar::KScalar() : num_(), den_(QPoly::constant(Rational(1))), level_(1) {}

KScalar::KScalar(long value) : KScalar(Rational(value)) {}

KScalar::KScalar(const Rational& value)
    : num_(QPoly::constant(value)), den_(QPoly::constant(Rational(1))), level_(1) {}

KScalar::KScalar(QPoly num, QPoly den, int level, bool normalized)
    : num_(std::move(num)), den_(std::move(den)), level_(level) {
  if (!normalized) normalize();
}

KScalar KScalar::from_parts(QPoly num, QPoly den, int level) {
  if (level < 1) throw Error(ErrorKind::InvalidArgument, "level must be positive");
  check_level(level);
  return KScalar(std::move(num), std::move(den), level, false);
}

KScalar KScalar::t_power(const Rational& e, int level) {
  Rational k = e * level;
  if (k.get_den() != 1) {
    Integer need = e.get_den();
    throw Error(ErrorKind::NeedsBaseChange,
                "t^" + to_string(e) + " needs a level divisible by " + need.get_str());
  }
  check_level(level);
  long kk = to_long(k.get_num());
  if (kk >= 0) {
    return KScalar(QPoly::monomial(Rational(1), static_cast<int>(kk)), QPoly::constant(Rational(1)), level, true);
  }
  return KScalar(QPoly::constant(Rational(1)), QPoly::monomial(Rational(1), static_cast<int>(-kk)), level, true);
}

KScalar KScalar::t_power(const Rational& e) { return t_power(e, static_cast<int>(to_long(e.get_den()))); }

void KScalar::normalize() {
  if (den_.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero in K");
  if (num_.is_zero()) {
    den_ = QPoly::constant(Rational(1));
    return;
  }
  int k = std::min(num_.valuation(), den_.valuation());
  num_ = num_.shift_down(k);
  den_ = den_.shift_down(k);
  // After removing the common u-power, a monomial side is coprime to the other.
  if (num_.degree() > 0 && den_.degree() > 0 && !num_.is_monomial() && !den_.is_monomial()) {
    QPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  Rational lc = den_.leading();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

KScalar KScalar::at_level(int level) const {
  if (level == level_) return *this;
  if (level < level_ || level % level_ != 0) {
    throw Error(ErrorKind::InvalidArgument, "target level must be a multiple of the current level");
  }
  check_level(level);
  int m = level / level_;
  return KScalar(num_.stretch(m), den_.stretch(m), level, true);
}

KScalar KScalar::compact() const {
  if (level_ == 1) return *this;
  int g = level_;
  auto fold = [&g](const QPoly& p) {
    for (int i = 0; i <= p.degree(); ++i) {
      if (!nadyn::is_zero(p.coeff(i))) g = std::gcd(g, i);
    }
  };
  fold(num_);
  fold(den_);
  if (g <= 1) return *this;
  auto squeeze = [g](const QPoly& p) {
    std::vector<Rational> c(static_cast<size_t>(p.degree() / g) + 1);
    for (int i = 0; i <= p.degree(); i += g) c[static_cast<size_t>(i / g)] = p.coeff(i);
    return QPoly(std::move(c));
  };
  return KScalar(squeeze(num_), squeeze(den_), level_ / g, true);
}

KScalar KScalar::operator-() const { return KScalar(-num_, den_, level_, true); }

KScalar& KScalar::operator+=(const KScalar& o) {
  auto [a, b] = aligned(*this, o);
  if (a.den_ == b.den_) {
    *this = KScalar(a.num_ + b.num_, a.den_, a.level_, false);
  } else {
    *this = KScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, a.level_, false);
  }
  return *this;
}

KScalar& KScalar::operator-=(const KScalar& o) { return *this += -o; }

KScalar& KScalar::operator*=(const KScalar& o) {
  auto [a, b] = aligned(*this, o);
  *this = KScalar(a.num_ * b.num_, a.den_ * b.den_, a.level_, false);
  return *this;
}

KScalar& KScalar::operator/=(const KScalar& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero in K");
  auto [a, b] = aligned(*this, o);
  *this = KScalar(a.num_ * b.den_, a.den_ * b.num_, a.level_, false);
  return *this;
}

bool operator==(const KScalar& a, const KScalar& b) {
  if (a.level_ == b.level_) return a.num_ == b.num_ && a.den_ == b.den_;
  auto [x, y] = aligned(a, b);
  return x.num_ == y.num_ && x.den_ == y.den_;
}

std::string to_string(const ResScalar& x) { return x.infinite ? "inf" : to_string(x.value); }

std::optional<Rational> ord(const KScalar& x) {
  if (x.is_zero()) return std::nullopt;
  return frac(x.num().valuation() - x.den().valuation(), x.level());
}

Rational leading_coefficient(const KScalar& x) {
  if (x.is_zero()) return Rational(0);
  return x.num().coeff(x.num().valuation()) / x.den().coeff(x.den().valuation());
}

ResScalar residue(const KScalar& x) {
  auto o = ord(x);
  if (!o || *o > 0) return ResScalar::finite(Rational(0));
  if (*o < 0) return ResScalar::infinity();
  return ResScalar::finite(leading_coefficient(x));
}

KScalar base_change(const KScalar& x, int M) {
  if (M < 1) throw Error(ErrorKind::InvalidArgument, "base change factor must be positive");
  long level = static_cast<long>(x.level()) * M;
  check_level(level);
  return x.at_level(static_cast<int>(level));
}

KScalar truncate_below(const KScalar& x, const Rational& bound) {
  if (x.is_zero()) return x;
  const int n = x.level();
  // keep u-exponents k with k < bound*n
  Integer kmax_z = ceil(bound * n) - 1;
  const QPoly& num = x.num();
  const QPoly& den = x.den();
  if (den.is_monomial()) {
    int shift = den.valuation();
    Rational lc = den.leading();
    std::vector<Rational> kept;
    for (int i = 0; i <= num.degree(); ++i) {
      if (is_zero(num.coeff(i))) continue;
      if (Integer(i - shift) > kmax_z) break;
      kept.resize(static_cast<size_t>(i) + 1);
      kept[static_cast<size_t>(i)] = num.coeff(i) / lc;
    }
    return KScalar::from_parts(QPoly(std::move(kept)), QPoly::monomial(Rational(1), shift), n).compact();
  }
  int v = num.valuation() - den.valuation();
  if (Integer(v) > kmax_z) return KScalar();
  long terms = to_long(kmax_z) - v + 1;
  QPoly a = num.shift_down(num.valuation());
  QPoly b = den.shift_down(den.valuation());
  std::vector<Rational> s(static_cast<size_t>(terms));
  const Rational& b0 = b.coeff(0);
  for (long k = 0; k < terms; ++k) {
    Rational acc = a.coeff(static_cast<int>(k));
    for (long j = 1; j <= k && j <= b.degree(); ++j) acc -= b.coeff(static_cast<int>(j)) * s[static_cast<size_t>(k - j)];
    s[static_cast<size_t>(k)] = acc / b0;
  }
  QPoly series(std::move(s));
  if (v >= 0) return KScalar::from_parts(series.shift_up(v), QPoly::constant(Rational(1)), n).compact();
  return KScalar::from_parts(series, QPoly::monomial(Rational(1), -v), n).compact();
}

namespace {

std::string rational_text(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Terms c*t^(k/level) joined with signs, highest exponent first.
std::string laurent_text(const QPoly& p, int level, int shift) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (is_zero(c)) continue;
    bool neg = sgn(c) < 0;
    Rational mag = neg ? Rational(-c) : c;
    Rational e = frac(i - shift, level);
    std::string body;
    if (e == 0) {
      body = rational_text(mag);
    } else {
      std::string tp;
      if (e == 1) {
        tp = "t";
      } else if (e.get_den() == 1) {
        tp = "t^" + e.get_num().get_str();
      } else {
        tp = "t^(" + rational_text(e) + ")";
      }
      body = mag == 1 ? tp : rational_text(mag) + "*" + tp;
    }
    if (out.empty()) {
      out = neg ? "-" + body : body;
    } else {
      out += (neg ? "-" : "+") + body;
    }
  }
  return out;
}

bool single_term(const QPoly& p) { return p.is_monomial(); }

}  // namespace

std::string to_string(const KScalar& x) {
  if (x.is_zero()) return "0";
  const QPoly& den = x.den();
  if (den.is_monomial()) return laurent_text(x.num(), x.level(), den.valuation());
  std::string n = laurent_text(x.num(), x.level(), 0);
  if (!single_term(x.num())) n = "(" + n + ")";
  return n + "/(" + laurent_text(den, x.level(), 0) + ")";
}

}  // namespace nadyn
