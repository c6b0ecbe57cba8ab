#include "nadyn/parse.hpp"

#include <cctype>

#include "nadyn/error.hpp"

namespace nadyn {

namespace {

struct RatFun {
  KPoly num;
  KPoly den;
};

RatFun constant(const KScalar& c) { return {KPoly::constant(c), KPoly::constant(KScalar(1))}; }

class Parser {
 public:
  Parser(std::string_view text, bool allow_z) : text_(text), allow_z_(allow_z) {}

  RatFun parse_all() {
    RatFun v = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, "at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Integer integer() {
    skip_space();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  bool starts_atom() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == 'z' || c == '(';
  }

  RatFun expr() {
    RatFun v = term();
    for (;;) {
      if (accept('+')) {
        v = add(v, term());
      } else if (accept('-')) {
        v = add(v, negate(term()));
      } else {
        return v;
      }
    }
  }

  RatFun term() {
    RatFun v = unary();
    for (;;) {
      if (accept('*')) {
        v = mul(v, unary());
      } else if (peek() == '/') {
        size_t at = pos_;
        ++pos_;
        RatFun d = unary();
        if (d.num.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        v = mul(v, {d.den, d.num});
      } else if (starts_atom()) {
        v = mul(v, power());
      } else {
        return v;
      }
    }
  }

  RatFun unary() {
    if (accept('-')) return negate(unary());
    if (accept('+')) return unary();
    return power();
  }

  RatFun power() {
    bool is_t = peek() == 't';
    RatFun base = atom();
    if (!accept('^')) return base;
    Rational e = exponent();
    if (e.get_den() != 1) {
      if (!is_t) fail("fractional exponents are only allowed on t");
      return constant(KScalar::t_power(e));
    }
    long k = to_long(e.get_num());
    if (k < 0) {
      if (base.num.is_zero()) fail("zero to a negative power");
      base = {base.den, base.num};
      k = -k;
    }
    return {base.num.pow(static_cast<int>(k)), base.den.pow(static_cast<int>(k))};
  }

  Rational exponent() {
    if (accept('(')) {
      bool neg = accept('-');
      Rational e(integer());
      if (accept('/')) {
        Integer q = integer();
        if (q == 0) fail("zero denominator in exponent");
        e /= Rational(q);
      }
      if (!accept(')')) fail("expected ')'");
      return neg ? Rational(-e) : e;
    }
    bool neg = accept('-');
    Rational e(integer());
    return neg ? Rational(-e) : e;
  }

  RatFun atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(KScalar(Rational(integer())));
    if (c == 't') {
      ++pos_;
      return constant(KScalar::t());
    }
    if (c == 'z') {
      if (!allow_z_) fail("the variable z is not allowed here");
      ++pos_;
      return {KPoly::x(), KPoly::constant(KScalar(1))};
    }
    if (c == '(') {
      ++pos_;
      RatFun v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  static RatFun add(const RatFun& a, const RatFun& b) {
    if (a.den == b.den) return {a.num + b.num, a.den};
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  static RatFun mul(const RatFun& a, const RatFun& b) { return {a.num * b.num, a.den * b.den}; }
  static RatFun negate(const RatFun& a) { return {-a.num, a.den}; }

  std::string_view text_;
  bool allow_z_;
  size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string poly_text(const std::vector<KScalar>& c) {
  std::string out;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    if (!out.empty()) out += "+";
    out += "(" + to_string(c[i]) + ")";
    if (i >= 1) out += "*z";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

KScalar parse_scalar(std::string_view text) {
  RatFun v = Parser(text, false).parse_all();
  return v.num.coeff(0) / v.den.coeff(0);
}

QPoly parse_residue_poly(std::string_view text) {
  RatFun v = Parser(text, true).parse_all();
  if (v.den.degree() != 0) throw Error(ErrorKind::SyntaxError, "expected a polynomial in z");
  std::vector<Rational> out;
  KScalar d = v.den.coeff(0);
  for (const auto& c : v.num.coeffs()) {
    KScalar q = (c / d).compact();
    if (q.level() != 1 || q.num().degree() > 0 || q.den().degree() > 0) {
      throw Error(ErrorKind::SyntaxError, "residue polynomials need rational coefficients");
    }
    out.push_back(q.num().coeff(0) / q.den().coeff(0));
  }
  return QPoly(out);
}

RationalMapK parse_map(std::string_view text) {
  RatFun v = Parser(text, true).parse_all();
  if (v.num.is_zero()) throw Error(ErrorKind::DegenerateMap, "the map is identically zero");
  KPoly g = gcd(v.num, v.den);
  KPoly n = v.num / g;
  KPoly d = v.den / g;
  int deg = std::max(n.degree(), d.degree());
  if (deg < 1) throw Error(ErrorKind::DegenerateMap, "the expression is constant after cancellation");
  auto pad = [deg](const KPoly& p) {
    std::vector<KScalar> out(static_cast<size_t>(deg) + 1, KScalar(0));
    for (int i = 0; i <= p.degree(); ++i) out[static_cast<size_t>(i)] = p.coeff(i).compact();
    return out;
  };
  // Scale so the leading nonzero denominator coefficient is 1.
  KScalar lead = d.leading();
  return make_map(pad(n.scaled(KScalar(1) / lead)), pad(d.scaled(KScalar(1) / lead)));
}

TypeIIPoint parse_point(std::string_view text) {
  text = trim(text);
  if (text == "gauss") return TypeIIPoint::gauss();
  size_t semi = text.find(';');
  if (semi == std::string_view::npos) throw Error(ErrorKind::SyntaxError, "point must be gauss or a=<scalar>;s=<rational>");
  std::string_view a = trim(text.substr(0, semi));
  std::string_view s = trim(text.substr(semi + 1));
  if (a.substr(0, 2) != "a=" || s.substr(0, 2) != "s=") {
    throw Error(ErrorKind::SyntaxError, "point must be gauss or a=<scalar>;s=<rational>");
  }
  KScalar center = parse_scalar(a.substr(2));
  Rational exponent;
  try {
    exponent = parse_rational(s.substr(2));
  } catch (const Error&) {
    throw Error(ErrorKind::SyntaxError, "bad exponent '" + std::string(s.substr(2)) + "'");
  }
  long need = lcm(to_long(exponent.get_den()), static_cast<long>(center.compact().level()));
  if (need > level_cap()) {
    throw Error(ErrorKind::LevelCapExceeded,
                "point needs level " + std::to_string(need) + " above the cap " + std::to_string(level_cap()));
  }
  return TypeIIPoint(center, exponent);
}

Direction parse_direction(std::string_view text, const TypeIIPoint& at) {
  text = trim(text);
  if (text == "inf") return {at, Infinity{}};
  if (text.substr(0, 4) == "res=") {
    try {
      return {at, Finite{parse_rational(text.substr(4))}};
    } catch (const Error&) {
      throw Error(ErrorKind::SyntaxError, "bad residue '" + std::string(text.substr(4)) + "'");
    }
  }
  if (text.substr(0, 7) == "factor=") {
    QPoly p = parse_residue_poly(text.substr(7));
    try {
      return {at, class_from_poly(p)};
    } catch (const Error& e) {
      throw Error(ErrorKind::SyntaxError, e.what());
    }
  }
  if (text.substr(0, 7) == "toward:") return direction_toward(at, parse_point(text.substr(7)));
  throw Error(ErrorKind::SyntaxError, "direction must be inf, res=<q>, factor=<poly> or toward:<point>");
}

std::string to_string(const RationalMapK& phi) {
  return "(" + poly_text(phi.num()) + ")/(" + poly_text(phi.den()) + ")";
}

std::string to_string(const Direction& v) { return to_string(v.cls); }

}  // namespace nadyn
