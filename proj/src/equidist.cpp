#include "nadyn/equidist.hpp"

#include "nadyn/crucial.hpp"
#include "nadyn/error.hpp"

namespace nadyn {

Rational DirectionMeasure::total() const {
  Rational sum = point_mass.value_or(Rational(0));
  for (const auto& a : atoms) sum += a.mass;
  return sum;
}

bool totally_invariant(const RationalMapK& phi, const TypeIIPoint& xi) {
  return intrinsic_data(phi, xi).totally_invariant;
}

DirectionMeasure depth_measure(const IntrinsicReduction& r, const Integer& scale) {
  DirectionMeasure m;
  if (r.depths.inf_mult > 0) {
    m.atoms.push_back({Infinity{}, Rational(Integer(r.depths.inf_mult), scale)});
  }
  for (const auto& part : r.depths.parts) {
    Rational mass(Integer(part.mult * part.poly.degree()), scale);
    mass.canonicalize();
    m.atoms.push_back({class_from_poly(part.poly), mass});
  }
  for (auto& a : m.atoms) a.mass.canonicalize();
  if (r.local_degree) {
    m.point_mass = Rational(Integer(*r.local_degree), scale);
    m.point_mass->canonicalize();
  }
  return m;
}

Rational tv_distance(const DirectionMeasure& a, const DirectionMeasure& b) {
  Rational sum = abs(a.point_mass.value_or(Rational(0)) - b.point_mass.value_or(Rational(0)));
  Rational inf_a(0), inf_b(0);
  std::vector<QPoly> polys;
  for (const auto* m : {&a, &b}) {
    for (const auto& atom : m->atoms) {
      if (std::holds_alternative<Infinity>(atom.cls)) continue;
      polys.push_back(class_poly(atom.cls));
    }
  }
  for (const auto& atom : a.atoms) {
    if (std::holds_alternative<Infinity>(atom.cls)) inf_a += atom.mass;
  }
  for (const auto& atom : b.atoms) {
    if (std::holds_alternative<Infinity>(atom.cls)) inf_b += atom.mass;
  }
  sum += abs(inf_a - inf_b);
  // Per-root mass of a basis element: sum over atoms containing its roots.
  auto share = [](const DirectionMeasure& m, const QPoly& piece) -> Rational {
    Rational per_root(0);
    for (const auto& atom : m.atoms) {
      if (std::holds_alternative<Infinity>(atom.cls)) continue;
      QPoly p = class_poly(atom.cls);
      if (gcd(p, piece).degree() > 0) per_root += atom.mass / p.degree();
    }
    return per_root * piece.degree();
  };
  for (const auto& piece : coprime_basis(std::move(polys))) sum += abs(share(a, piece) - share(b, piece));
  return sum / 2;
}

ConvergenceReport depth_sequence(const RationalMapK& phi, const TypeIIPoint& xi, int n_max) {
  if (n_max < 1) throw Error(ErrorKind::InvalidArgument, "need at least one level");
  Integer dn = 1;
  for (int n = 0; n < n_max; ++n) dn *= phi.degree();
  if (dn > kDefaultDegreeCap) {
    throw Error(ErrorKind::IterationCapExceeded,
                "degree " + dn.get_str() + " at level " + std::to_string(n_max) + " exceeds the cap " +
                    std::to_string(kDefaultDegreeCap));
  }
  IntrinsicReduction first = intrinsic_data(phi, xi);
  if (first.totally_invariant) {
    throw Error(ErrorKind::TotallyInvariantPoint,
                to_string(xi) + " is totally invariant; the depth measures need a point with phi^-1(xi) != {xi}");
  }
  ConvergenceReport rep;
  RationalMapK iter = phi;
  Integer scale = phi.degree();
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) {
      iter = compose(phi, iter);
      scale *= phi.degree();
    }
    IntrinsicReduction r = n == 1 ? first : intrinsic_data(iter, xi);
    rep.levels.push_back(n);
    rep.measures.push_back(depth_measure(r, scale));
    if (n > 1) rep.tv_steps.push_back(tv_distance(rep.measures[n - 2], rep.measures[n - 1]));
  }
  rep.predicted = predicted_limit(phi, xi);
  if (rep.predicted) rep.match = tv_distance(rep.measures.back(), *rep.predicted) == 0 ? Match::Yes : Match::No;
  return rep;
}

std::optional<DirectionMeasure> predicted_limit(const RationalMapK& phi, const TypeIIPoint& xi) {
  if (totally_invariant(phi, xi)) {
    throw Error(ErrorKind::TotallyInvariantPoint, to_string(xi) + " is totally invariant");
  }
  MinLocusResult best;
  try {
    best = min_locus(phi);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NeedsExtension || e.kind() == ErrorKind::BreakpointUnresolved) return std::nullopt;
    throw;
  }
  if (best.minimizer == xi) return std::nullopt;
  if (!intrinsic_data(phi, best.minimizer).totally_invariant) return std::nullopt;
  DirectionMeasure m;
  m.atoms.push_back({direction_toward(xi, best.minimizer).cls, Rational(1)});
  return m;
}

}  // namespace nadyn
