#include "nadyn/redux.hpp"

#include <algorithm>

#include "nadyn/error.hpp"

namespace nadyn {

namespace {

std::vector<KScalar> padded(const KPoly& p, int d) {
  std::vector<KScalar> out(static_cast<size_t>(d) + 1, KScalar(0));
  for (int i = 0; i <= p.degree() && i <= d; ++i) out[static_cast<size_t>(i)] = p.coeff(i);
  return out;
}

// sum c_i N^i D^(k-i) with k = c.size() - 1.
KPoly homog_substitute(const std::vector<KScalar>& c, const std::vector<KPoly>& npow, const std::vector<KPoly>& dpow) {
  size_t k = c.size() - 1;
  KPoly acc;
  for (size_t i = 0; i <= k; ++i) {
    if (c[i].is_zero()) continue;
    acc += (npow[i] * dpow[k - i]).scaled(c[i]);
  }
  return acc;
}

std::vector<KPoly> powers(const KPoly& p, int n) {
  std::vector<KPoly> out;
  out.push_back(KPoly::constant(KScalar(1)));
  for (int i = 1; i <= n; ++i) out.push_back(out.back() * p);
  return out;
}

// phi(N/D) where N, D have formal degree e.
std::pair<std::vector<KScalar>, std::vector<KScalar>> substitute(const RationalMapK& phi, const KPoly& n, const KPoly& d,
                                                                  int e) {
  int deg = phi.degree();
  auto np = powers(n, deg);
  auto dp = powers(d, deg);
  int total = deg * e;
  return {padded(homog_substitute(phi.num(), np, dp), total), padded(homog_substitute(phi.den(), np, dp), total)};
}

KPoly taylor_shift(const std::vector<KScalar>& c, const KScalar& a) {
  KPoly lin(std::vector<KScalar>{a, KScalar(1)});
  KPoly acc;
  for (size_t i = c.size(); i-- > 0;) acc = acc * lin + KPoly::constant(c[i]);
  return acc;
}

ValuedCoeff valued(const KScalar& x, const Rational& shift) {
  auto o = ord(x);
  if (!o) return {std::nullopt, Rational(0)};
  return {*o + shift, leading_coefficient(x)};
}

}  // namespace

RationalMapK::RationalMapK(std::vector<KScalar> num, std::vector<KScalar> den)
    : num_(std::move(num)), den_(std::move(den)) {}

RationalMapK RationalMapK::unchecked(std::vector<KScalar> num, std::vector<KScalar> den) {
  if (num.size() != den.size() || num.size() < 2) {
    throw Error(ErrorKind::DegenerateMap, "numerator and denominator need d+1 coefficients each with d >= 1");
  }
  return RationalMapK(std::move(num), std::move(den));
}

bool operator==(const RationalMapK& x, const RationalMapK& y) {
  if (x.degree() != y.degree()) return false;
  std::optional<KScalar> lambda;  // x = lambda * y
  auto check = [&](const std::vector<KScalar>& a, const std::vector<KScalar>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero() != b[i].is_zero()) return false;
      if (a[i].is_zero()) continue;
      if (!lambda) {
        lambda = a[i] / b[i];
      } else if (a[i] != *lambda * b[i]) {
        return false;
      }
    }
    return true;
  };
  return check(x.num_, y.num_) && check(x.den_, y.den_);
}

namespace {

// Coefficients over Q[u] (t = u^level) after clearing one common
// denominator; returns that denominator.
QPoly clear_denominators(const std::vector<KScalar>& v, int level, std::vector<QPoly>& out) {
  QPoly common = QPoly::constant(Rational(1));
  std::vector<KScalar> lifted;
  for (const auto& c : v) {
    lifted.push_back(c.at_level(level));
    const QPoly& den = lifted.back().den();
    common = common * den / gcd(common, den);
  }
  out.clear();
  for (const auto& c : lifted) out.push_back(c.num() * (common / c.den()));
  return common;
}

}  // namespace

// Fraction-free (Bareiss) elimination over Q[u]; plain elimination over K
// lets the intermediate rational functions swell badly.
KScalar sylvester_resultant(const std::vector<KScalar>& f, const std::vector<KScalar>& g) {
  if (f.size() != g.size() || f.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "resultant needs two coefficient vectors of equal length >= 2");
  }
  size_t d = f.size() - 1;
  size_t n = 2 * d;
  int level = 1;
  for (const auto* v : {&f, &g}) {
    for (const auto& c : *v) level = static_cast<int>(lcm(level, c.level()));
  }
  std::vector<QPoly> pf, pg;
  QPoly df = clear_denominators(f, level, pf);
  QPoly dg = clear_denominators(g, level, pg);

  std::vector<std::vector<QPoly>> m(n, std::vector<QPoly>(n));
  for (size_t r = 0; r < d; ++r) {
    for (size_t j = 0; j <= d; ++j) {
      m[r][r + j] = pf[d - j];
      m[d + r][r + j] = pg[d - j];
    }
  }
  bool negate = false;
  QPoly prev = QPoly::constant(Rational(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return KScalar(0);
      std::swap(m[piv], m[k]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = QPoly();
    }
    prev = m[k][k];
  }
  QPoly scale = QPoly::constant(Rational(1));
  for (size_t i = 0; i < d; ++i) scale = scale * df * dg;
  KScalar det = KScalar::from_parts(m[n - 1][n - 1], scale, level);
  return negate ? -det : det;
}

RationalMapK make_map(std::vector<KScalar> num, std::vector<KScalar> den) {
  RationalMapK phi = RationalMapK::unchecked(std::move(num), std::move(den));
  if (sylvester_resultant(phi.num(), phi.den()).is_zero()) {
    throw Error(ErrorKind::DegenerateMap, "numerator and denominator share a root (resultant is 0)");
  }
  return phi;
}

Rational ord_resultant(const RationalMapK& phi) {
  auto o = ord(sylvester_resultant(phi.num(), phi.den()));
  if (!o) throw Error(ErrorKind::DegenerateMap, "resultant is 0");
  return *o;
}

RationalMapK compose(const RationalMapK& phi, const RationalMapK& psi) {
  auto [n, d] = substitute(phi, KPoly(psi.num()), KPoly(psi.den()), psi.degree());
  return RationalMapK::unchecked(std::move(n), std::move(d));
}

RationalMapK iterate(const RationalMapK& phi, int n, long degree_cap) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "iteration count must be >= 0");
  long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= phi.degree();
    if (total > degree_cap) {
      throw Error(ErrorKind::IterationCapExceeded,
                  "degree " + std::to_string(phi.degree()) + "^" + std::to_string(n) + " exceeds the cap " +
                      std::to_string(degree_cap));
    }
  }
  if (n == 0) return RationalMapK::unchecked({KScalar(0), KScalar(1)}, {KScalar(1), KScalar(0)});
  RationalMapK out = phi;
  for (int i = 1; i < n; ++i) out = compose(phi, out);
  return out;
}

RationalMapK conjugate(const Mobius& m, const RationalMapK& phi) {
  KPoly n(std::vector<KScalar>{m.b(), m.a()});
  KPoly d(std::vector<KScalar>{m.d(), m.c()});
  auto [pn, pd] = substitute(phi, n, d, 1);
  Mobius inv = m.inverse();
  std::vector<KScalar> num(pn.size()), den(pn.size());
  for (size_t i = 0; i < pn.size(); ++i) {
    num[i] = inv.a() * pn[i] + inv.b() * pd[i];
    den[i] = inv.c() * pn[i] + inv.d() * pd[i];
  }
  return RationalMapK::unchecked(std::move(num), std::move(den));
}

CoefficientPair minimal_lift(const RationalMapK& phi) {
  std::optional<Rational> mu;
  for (const auto* v : {&phi.num(), &phi.den()}) {
    for (const auto& c : *v) {
      auto o = ord(c);
      if (o && (!mu || *o < *mu)) mu = o;
    }
  }
  if (!mu) throw Error(ErrorKind::DegenerateMap, "all coefficients vanish");
  KScalar scale = KScalar::t_power(-*mu);
  CoefficientPair out;
  for (const auto& c : phi.num()) out.num.push_back(c * scale);
  for (const auto& c : phi.den()) out.den.push_back(c * scale);
  return out;
}

ResScalar CoeffReduction::constant_value() const {
  if (!is_constant()) throw Error(ErrorKind::InvalidArgument, "the reduction is not constant");
  Rational n = tilde_num.coeff(0);
  Rational d = tilde_den.coeff(0);
  if (is_zero(d)) return ResScalar::infinity();
  return ResScalar::finite(n / d);
}

Rational ValuedPair::min_ord() const {
  std::optional<Rational> best;
  for (const auto* v : {&num, &den}) {
    for (const auto& c : *v) {
      if (c.ord && (!best || *c.ord < *best)) best = c.ord;
    }
  }
  if (!best) throw Error(ErrorKind::DegenerateMap, "all coefficients vanish");
  return *best;
}

CoeffReduction reduce_valued(const ValuedPair& pair) {
  Rational mu = pair.min_ord();
  auto lead_at = [&](const std::vector<ValuedCoeff>& v) {
    std::vector<Rational> out;
    for (const auto& c : v) out.push_back(c.ord && *c.ord == mu ? c.lead : Rational(0));
    return HomogeneousForm::from_coeffs(out);
  };
  CoeffReduction r;
  r.degree = static_cast<int>(pair.num.size()) - 1;
  r.num_form = lead_at(pair.num);
  r.den_form = lead_at(pair.den);
  r.gcd_form = homogeneous_gcd(r.num_form, r.den_form);
  r.tilde_num = divide_exact(r.num_form, r.gcd_form);
  r.tilde_den = divide_exact(r.den_form, r.gcd_form);
  r.tilde_degree = r.degree - r.gcd_form.degree();
  return r;
}

CoeffReduction coeff_reduction(const RationalMapK& phi) {
  ValuedPair p;
  for (const auto& c : phi.num()) p.num.push_back(valued(c, Rational(0)));
  for (const auto& c : phi.den()) p.den.push_back(valued(c, Rational(0)));
  return reduce_valued(p);
}

ChartedMap::ChartedMap(RationalMapK phi) : phi_(std::move(phi)) {}

const CoefficientPair& ChartedMap::translated(const KScalar& a) const {
  for (const auto& [center, pair] : cache_) {
    if (center == a) return pair;
  }
  CoefficientPair pair;
  if (a.is_zero()) {
    pair = {phi_.num(), phi_.den()};
  } else {
    pair.num = padded(taylor_shift(phi_.num(), a), degree());
    pair.den = padded(taylor_shift(phi_.den(), a), degree());
  }
  if (cache_.size() >= 64) cache_.erase(cache_.begin());
  cache_.emplace_back(a, std::move(pair));
  return cache_.back().second;
}

namespace {

ValuedPair chart_valuations(const CoefficientPair& pq, const KScalar& target_center, const Rational& s_source,
                            const Rational& s_target) {
  ValuedPair out;
  for (size_t j = 0; j < pq.num.size(); ++j) {
    Rational shift = s_source * static_cast<long>(j);
    KScalar n = target_center.is_zero() ? pq.num[j] : pq.num[j] - target_center * pq.den[j];
    out.num.push_back(valued(n, shift));
    out.den.push_back(valued(pq.den[j], shift + s_target));
  }
  return out;
}

}  // namespace

ValuedPair ChartedMap::valuations(const TypeIIPoint& source, const TypeIIPoint& target) const {
  return chart_valuations(translated(source.center()), target.center(), source.exponent(), target.exponent());
}

ValuedPair ChartedMap::conjugate_valuations(const KScalar& center, const Rational& exponent) const {
  return chart_valuations(translated(center), center, exponent, exponent);
}

CoeffReduction ChartedMap::reduction(const TypeIIPoint& source, const TypeIIPoint& target) const {
  return reduce_valued(valuations(source, target));
}

CoeffReduction reduction_between(const RationalMapK& phi, const TypeIIPoint& source, const TypeIIPoint& target) {
  return ChartedMap(phi).reduction(source, target);
}

IntrinsicReduction intrinsic_data(const ChartedMap& phi, const TypeIIPoint& xi) {
  IntrinsicReduction r;
  r.at = xi;
  r.degree = phi.degree();
  r.reduction = phi.reduction(xi, xi);
  r.depths = squarefree_decomposition(r.reduction.gcd_form);
  r.fixes_point = !r.reduction.is_constant();
  if (r.fixes_point) {
    r.tangent_num = r.reduction.tilde_num;
    r.tangent_den = r.reduction.tilde_den;
    r.local_degree = r.reduction.tilde_degree;
    r.totally_invariant = r.reduction.tilde_degree == r.degree;
  } else {
    ResScalar v = r.reduction.constant_value();
    if (v.infinite) {
      r.image_direction = Infinity{};
    } else {
      r.image_direction = Finite{v.value};
    }
  }
  return r;
}

IntrinsicReduction intrinsic_data(const RationalMapK& phi, const TypeIIPoint& xi) {
  return intrinsic_data(ChartedMap(phi), xi);
}

QPoly fixed_point_poly(const IntrinsicReduction& r) {
  if (!r.fixes_point) throw Error(ErrorKind::InvalidArgument, "the point is not fixed");
  return r.tangent_num.dehomogenized() - r.tangent_den.dehomogenized() * QPoly::x();
}

bool is_fixed_class(const IntrinsicReduction& r, const DirectionClass& cls) {
  if (!r.fixes_point) return *r.image_direction == cls;
  QPoly fix = fixed_point_poly(r);
  if (fix.is_zero()) return true;
  if (std::holds_alternative<Infinity>(cls)) return is_zero(r.tangent_den.coeff(r.tangent_den.degree()));
  if (const auto* f = std::get_if<Finite>(&cls)) return is_zero(fix.eval(f->value));
  const QPoly& p = std::get<Factor>(cls).poly;
  QPoly g = gcd(p, fix);
  if (g.degree() <= 0) return false;
  if (g == p.monic()) return true;
  throw Error(ErrorKind::AmbiguousClass, "class " + poly_to_string(p) + " is only partly fixed");
}

int depth(const RationalMapK& phi, const TypeIIPoint& xi, const Direction& v) {
  if (v.at != xi) throw Error(ErrorKind::InvalidArgument, "direction is based at a different point");
  return depth_at(intrinsic_data(phi, xi).depths, v.cls);
}

bool is_fixed_direction(const RationalMapK& phi, const TypeIIPoint& xi, const Direction& v) {
  if (v.at != xi) throw Error(ErrorKind::InvalidArgument, "direction is based at a different point");
  return is_fixed_class(intrinsic_data(phi, xi), v.cls);
}

}  // namespace nadyn
