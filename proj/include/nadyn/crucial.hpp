#pragma once

// The resultant function on the tree, its slopes, GIT verdicts, and the
// descent to the minimal locus.
//
// ord_res at (a, s) is read off valuations only:
//   ord_res = ord Res(phi) + s d(d+1) - 2d mu(a, s)
// where mu is the minimum ord of the conjugated coefficients. Along a ray
// of fixed center this is convex piecewise linear in s, which the descent
// minimizes exactly.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nadyn/berkspace.hpp"
#include "nadyn/redux.hpp"

namespace nadyn {

class ResultantFunction {
 public:
  /// Requires degree >= 2.
  explicit ResultantFunction(RationalMapK phi);

  int degree() const { return map_.degree(); }
  const ChartedMap& charted() const { return map_; }

  Rational ord_res(const TypeIIPoint& xi) const;
  /// Same value for the disk D(center, r^s) with any center inside it.
  Rational ord_res_at(const KScalar& center, const Rational& s) const;
  Rational hyp_res(const TypeIIPoint& xi) const;
  Rational ord_res_gauss() const { return gauss_; }
  /// ord of the resultant of phi's own coefficients.
  Rational ord_res_base() const { return ord_res0_; }

 private:
  ChartedMap map_;
  Rational ord_res0_;
  Rational gauss_;
};

struct CrucialReport {
  TypeIIPoint at;
  Rational ord_res;
  Rational hyp_res;
};

Rational ord_res(const RationalMapK& phi, const TypeIIPoint& xi);
Rational hyp_res(const RationalMapK& phi, const TypeIIPoint& xi);
CrucialReport crucial_report(const RationalMapK& phi, const TypeIIPoint& xi);

struct SlopeReport {
  Direction direction;
  Rational rhs;
  std::optional<Rational> measured;
  int dep = 0;
  bool fixed = false;
};

/// (-dep + (fixed ? (d-1)/2 : (d+1)/2)) / (d-1).
Rational slope_formula(int d, int dep, bool fixed);

SlopeReport slope_rhs(const RationalMapK& phi, const TypeIIPoint& xi, const Direction& v);
SlopeReport slope_rhs(const IntrinsicReduction& r, const DirectionClass& cls);

constexpr int kSlopeHalvingCap = 40;

/// One-sided derivative of hyp_res into v by exact difference quotients at
/// h and h/2, halving h until they agree.
Rational slope_measured(const RationalMapK& phi, const TypeIIPoint& xi, const Direction& v);
Rational slope_measured(const ResultantFunction& f, const TypeIIPoint& xi, const DirectionClass& cls);

/// Direction classes worth probing at a point: infinity, 0 and 1, and the
/// support of the depth divisor split by fixedness so that every class is
/// fixed all-or-none.
std::vector<DirectionClass> probe_classes(const IntrinsicReduction& r);

enum class Verdict { Unstable, SemistableNotStable, Stable };
std::string to_string(Verdict v);

Verdict semistability(const RationalMapK& phi, const TypeIIPoint& xi);
Verdict semistability(const IntrinsicReduction& r);

/// Smallest positive integer D such that breakpoint snapping at this point
/// uses denominators up to D: lcm(1..4d) * level.
long default_denominator_bound(int d, int level);

/// Locates sup{tau in [0, length) : pred(tau)} for a predicate that is true
/// on an initial interval [0, b) and false on [b, length]. The breakpoint is
/// snapped to the unique fraction with denominator <= bound near it and
/// certified; failure throws BreakpointUnresolved.
Rational locate_breakpoint(const std::function<bool(const Rational&)>& pred, const Rational& length, long bound);

/// hyp_res evaluated through the path integral over [xi_g, xi].
Rational hyp_res_direct(const RationalMapK& phi, const TypeIIPoint& xi);
Rational hyp_res_direct(const RationalMapK& phi, const TypeIIPoint& xi, long denominator_bound);

struct TrailStep {
  TypeIIPoint from;
  DirectionClass cls;
  Rational step;
};

struct MinLocusResult {
  TypeIIPoint minimizer;
  Rational min_hyp_res;
  bool unique = false;
  Verdict verdict = Verdict::Unstable;
  std::vector<TrailStep> trail;
  /// Zero-slope directions at the minimizer (a segment certificate when not
  /// unique).
  std::vector<DirectionClass> flat_directions;
};

constexpr int kDescentStepCap = 10000;

MinLocusResult min_locus(const RationalMapK& phi);
MinLocusResult min_locus(const RationalMapK& phi, const TypeIIPoint& start);

}  // namespace nadyn
