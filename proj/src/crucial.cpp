#include "nadyn/crucial.hpp"

#include <algorithm>

#include "nadyn/error.hpp"

namespace nadyn {

namespace {

void require_degree(int d) {
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "the resultant function needs degree >= 2");
}

DirectionClass class_of(const ResScalar& v) {
  if (v.infinite) return Infinity{};
  return Finite{v.value};
}

void push_unique(std::vector<DirectionClass>& out, DirectionClass c) {
  if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
}

}  // namespace

ResultantFunction::ResultantFunction(RationalMapK phi) : map_(std::move(phi)) {
  require_degree(map_.degree());
  ord_res0_ = ord_resultant(map_.map());
  gauss_ = ord_res_at(KScalar(0), Rational(0));
}

Rational ResultantFunction::ord_res_at(const KScalar& center, const Rational& s) const {
  long d = degree();
  Rational mu = map_.conjugate_valuations(center, s).min_ord();
  return ord_res0_ + s * (d * (d + 1)) - Rational(2 * d) * mu;
}

Rational ResultantFunction::ord_res(const TypeIIPoint& xi) const { return ord_res_at(xi.center(), xi.exponent()); }

Rational ResultantFunction::hyp_res(const TypeIIPoint& xi) const {
  long d = degree();
  return (ord_res(xi) - gauss_) / (2 * d * (d - 1));
}

Rational ord_res(const RationalMapK& phi, const TypeIIPoint& xi) { return ResultantFunction(phi).ord_res(xi); }

Rational hyp_res(const RationalMapK& phi, const TypeIIPoint& xi) { return ResultantFunction(phi).hyp_res(xi); }

CrucialReport crucial_report(const RationalMapK& phi, const TypeIIPoint& xi) {
  ResultantFunction f(phi);
  return {xi, f.ord_res(xi), f.hyp_res(xi)};
}

Rational slope_formula(int d, int dep, bool fixed) {
  Rational base = fixed ? frac(d - 1, 2) : frac(d + 1, 2);
  return (base - dep) / (d - 1);
}

SlopeReport slope_rhs(const IntrinsicReduction& r, const DirectionClass& cls) {
  require_degree(r.degree);
  SlopeReport out;
  out.direction = {r.at, cls};
  out.dep = depth_at(r.depths, cls);
  out.fixed = is_fixed_class(r, cls);
  out.rhs = slope_formula(r.degree, out.dep, out.fixed);
  return out;
}

SlopeReport slope_rhs(const RationalMapK& phi, const TypeIIPoint& xi, const Direction& v) {
  if (v.at != xi) throw Error(ErrorKind::InvalidArgument, "direction is based at a different point");
  return slope_rhs(intrinsic_data(phi, xi), v.cls);
}

Rational slope_measured(const ResultantFunction& f, const TypeIIPoint& xi, const DirectionClass& cls) {
  if (std::holds_alternative<Factor>(cls)) {
    throw Error(ErrorKind::IrrationalDirection, "no rational step into " + to_string(cls));
  }
  Rational base = f.hyp_res(xi);
  auto quotient = [&](const Rational& h) -> Rational { return (f.hyp_res(step_along(xi, cls, h)) - base) / h; };
  Rational h(1);
  Rational q = quotient(h);
  for (int i = 0; i < kSlopeHalvingCap; ++i) {
    Rational half = h / 2;
    Rational q2 = quotient(half);
    // Convexity: equal quotients mean the function is affine on [0, h].
    if (q2 == q) return q;
    h = half;
    q = q2;
  }
  throw Error(ErrorKind::PiecewiseBoundaryUnresolved,
              "difference quotients into " + to_string(cls) + " did not stabilize");
}

Rational slope_measured(const RationalMapK& phi, const TypeIIPoint& xi, const Direction& v) {
  if (v.at != xi) throw Error(ErrorKind::InvalidArgument, "direction is based at a different point");
  return slope_measured(ResultantFunction(phi), xi, v.cls);
}

std::vector<DirectionClass> probe_classes(const IntrinsicReduction& r) {
  std::vector<DirectionClass> out;
  push_unique(out, Infinity{});
  push_unique(out, Finite{Rational(0)});
  push_unique(out, Finite{Rational(1)});
  std::optional<QPoly> fix;
  if (r.fixes_point) {
    QPoly f = fixed_point_poly(r);
    if (!f.is_zero()) fix = f;
  }
  for (const auto& part : r.depths.parts) {
    std::vector<QPoly> pieces{part.poly};
    if (fix) {
      QPoly g = gcd(part.poly, *fix);
      if (g.degree() > 0 && g.degree() < part.poly.degree()) pieces = {g, part.poly / g};
    } else if (!r.fixes_point) {
      if (const auto* img = std::get_if<Finite>(&*r.image_direction)) {
        if (part.poly.degree() > 1 && is_zero(part.poly.eval(img->value))) {
          QPoly lin(std::vector<Rational>{-img->value, Rational(1)});
          pieces = {lin, part.poly / lin};
        }
      }
    }
    for (const auto& p : pieces) push_unique(out, class_from_poly(p));
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Unstable:
      return "unstable";
    case Verdict::SemistableNotStable:
      return "semistable";
    case Verdict::Stable:
      return "stable";
  }
  return "unstable";
}

Verdict semistability(const IntrinsicReduction& r) {
  require_degree(r.degree);
  int d = r.degree;
  bool semi = true;
  bool stable = true;
  for (const auto& cls : probe_classes(r)) {
    int dep2 = 2 * depth_at(r.depths, cls);
    if (is_fixed_class(r, cls)) {
      if (dep2 >= d) semi = false;
      if (dep2 >= d - 1) stable = false;
    } else {
      if (dep2 > d + 1) semi = false;
      if (dep2 > d) stable = false;
    }
  }
  if (!semi) return Verdict::Unstable;
  return stable ? Verdict::Stable : Verdict::SemistableNotStable;
}

Verdict semistability(const RationalMapK& phi, const TypeIIPoint& xi) {
  return semistability(intrinsic_data(phi, xi));
}

long default_denominator_bound(int d, int level) {
  long l = 1;
  for (long k = 1; k <= 4L * d; ++k) l = lcm(l, k);
  return l * level;
}

Rational locate_breakpoint(const std::function<bool(const Rational&)>& pred, const Rational& length, long bound) {
  if (sgn(length) <= 0 || !pred(Rational(0))) return Rational(0);
  Rational lo(0), hi = length;
  Rational width_cap(1, static_cast<unsigned long>(bound) * static_cast<unsigned long>(bound));
  while (hi - lo >= width_cap) {
    Rational mid = (lo + hi) / 2;
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // At most one fraction with denominator <= bound lies in (lo, hi].
  std::optional<Rational> snap;
  for (long q = 1; q <= bound; ++q) {
    Rational c(floor(hi * q), Integer(q));
    c.canonicalize();
    if (c > lo) {
      snap = c;
      break;
    }
  }
  if (!snap) {
    throw Error(ErrorKind::BreakpointUnresolved,
                "no fraction with denominator <= " + std::to_string(bound) + " in (" + to_string(lo) + ", " +
                    to_string(hi) + "]");
  }
  if (*snap < length && pred(*snap)) {
    throw Error(ErrorKind::BreakpointUnresolved, "snapped breakpoint " + to_string(*snap) + " failed certification");
  }
  return *snap;
}

Rational hyp_res_direct(const RationalMapK& phi, const TypeIIPoint& xi, long denominator_bound) {
  int d = phi.degree();
  require_degree(d);
  if (xi.is_gauss()) return Rational(0);
  TypeIIPoint g = TypeIIPoint::gauss();
  ChartedMap cm(phi);
  Rational length = rho(g, xi);
  auto at = [&](const Rational& tau) { return path_point(g, xi, tau); };

  // phi(xi) still lies beyond zeta_tau on the way to xi.
  auto image_ahead = [&](const Rational& tau) {
    TypeIIPoint z = at(tau);
    CoeffReduction red = cm.reduction(xi, z);
    if (!red.is_constant()) return false;
    return class_of(red.constant_value()) == direction_toward(z, xi).cls;
  };
  Rational wedge_term = length - locate_breakpoint(image_ahead, length, denominator_bound);

  // Preimages of xi_g beyond zeta_tau on the way to xi.
  auto mass_ahead = [&](const Rational& tau) {
    TypeIIPoint z = at(tau);
    CoeffReduction red = cm.reduction(z, g);
    return depth_at(squarefree_decomposition(red.gcd_form), direction_toward(z, xi).cls);
  };
  Rational integral(0);
  int top = mass_ahead(Rational(0));
  for (int k = 1; k <= top; ++k) {
    integral += locate_breakpoint([&](const Rational& tau) { return mass_ahead(tau) >= k; }, length, denominator_bound);
  }
  return length / 2 + (wedge_term - integral) / (d - 1);
}

Rational hyp_res_direct(const RationalMapK& phi, const TypeIIPoint& xi) {
  return hyp_res_direct(phi, xi, default_denominator_bound(phi.degree(), xi.min_level()));
}

namespace {

struct Line {
  Rational alpha;
  long beta;
};

// Lines alpha + beta x whose minimum is mu at exponent x for a fixed center.
std::vector<Line> ray_lines(const ChartedMap& cm, const KScalar& center) {
  ValuedPair base = cm.conjugate_valuations(center, Rational(0));
  std::vector<Line> out;
  for (size_t j = 0; j < base.num.size(); ++j) {
    if (base.num[j].ord) out.push_back({*base.num[j].ord, static_cast<long>(j)});
    if (base.den[j].ord) out.push_back({*base.den[j].ord, static_cast<long>(j) + 1});
  }
  return out;
}

}  // namespace

MinLocusResult min_locus(const RationalMapK& phi, const TypeIIPoint& start) {
  ResultantFunction f(phi);
  const long d = f.degree();
  MinLocusResult out;
  TypeIIPoint p = start;
  for (int iter = 0;; ++iter) {
    if (iter >= kDescentStepCap) throw Error(ErrorKind::IterationCapExceeded, "descent did not terminate");
    IntrinsicReduction r = intrinsic_data(f.charted(), p);
    std::optional<DirectionClass> down;
    for (const auto& cls : probe_classes(r)) {
      if (slope_rhs(r, cls).rhs < 0) {
        down = cls;
        break;
      }
    }
    if (!down) {
      out.minimizer = p;
      out.min_hyp_res = f.hyp_res(p);
      out.verdict = semistability(r);
      out.unique = out.verdict == Verdict::Stable;
      for (const auto& cls : probe_classes(r)) {
        if (slope_rhs(r, cls).rhs == 0) out.flat_directions.push_back(cls);
      }
      return out;
    }
    if (std::holds_alternative<Factor>(*down)) {
      throw Error(ErrorKind::NeedsExtension,
                  "descent continues into " + to_string(*down) + ", which needs a residue field extension");
    }
    KScalar center = p.center();
    int sign = -1;
    if (const auto* fin = std::get_if<Finite>(&*down)) {
      center = center + KScalar(fin->value) * KScalar::t_power(p.exponent());
      sign = 1;
    }
    std::vector<Line> lines = ray_lines(f.charted(), center);
    auto value = [&](const Rational& x) -> Rational {
      Rational mu;
      bool first = true;
      for (const auto& l : lines) {
        Rational v = l.alpha + x * l.beta;
        if (first || v < mu) mu = v;
        first = false;
      }
      return f.ord_res_base() + x * (d * (d + 1)) - Rational(2 * d) * mu;
    };
    const Rational x0 = p.exponent();
    std::vector<Rational> cands;
    for (size_t i = 0; i < lines.size(); ++i) {
      for (size_t k = i + 1; k < lines.size(); ++k) {
        if (lines[i].beta == lines[k].beta) continue;
        Rational x = (lines[k].alpha - lines[i].alpha) / (lines[i].beta - lines[k].beta);
        if (sgn(x - x0) == sign) cands.push_back(x);
      }
    }
    std::sort(cands.begin(), cands.end(), [&](const Rational& a, const Rational& b) { return abs(a - x0) < abs(b - x0); });
    Rational best_x = x0, best = value(x0);
    for (const auto& x : cands) {
      Rational v = value(x);
      if (v < best) {
        best = v;
        best_x = x;
      }
    }
    Rational far = (cands.empty() ? x0 : cands.back()) + sign;
    if (value(far) < best || best_x == x0) {
      throw Error(ErrorKind::IterationCapExceeded, "resultant function is unbounded along " + to_string(*down));
    }
    out.trail.push_back({p, *down, abs(best_x - x0)});
    p = TypeIIPoint(center, best_x);
  }
}

MinLocusResult min_locus(const RationalMapK& phi) { return min_locus(phi, TypeIIPoint::gauss()); }

}  // namespace nadyn
