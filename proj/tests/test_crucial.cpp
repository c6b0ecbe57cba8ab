#include "doctest.h"
#include "nadyn/crucial.hpp"
#include "nadyn/parse.hpp"
#include "support.hpp"

using namespace nadyn;
using testsupport::Gen;
using testsupport::kCases;

namespace {

KScalar t() { return KScalar::t(); }
TypeIIPoint pt(const KScalar& a, Rational s) { return TypeIIPoint(a, std::move(s)); }
Rational r(long p, long q = 1) { return frac(p, q); }
RationalMapK map(const char* text) { return parse_map(text); }
const TypeIIPoint kGauss = TypeIIPoint::gauss();

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

// ordRes through an explicitly conjugated map and its minimal lift.
Rational ord_res_materialized(const RationalMapK& phi, const Mobius& m) {
  CoefficientPair lift = minimal_lift(conjugate(m, phi));
  return *ord(sylvester_resultant(lift.num, lift.den));
}

bool has_negative_slope(const RationalMapK& phi, const TypeIIPoint& xi) {
  IntrinsicReduction ir = intrinsic_data(phi, xi);
  for (const auto& c : probe_classes(ir)) {
    if (slope_rhs(ir, c).rhs < 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("ordRes golden values") {
  CHECK(ord_res(map("z^2"), kGauss) == 0);
  CHECK(ord_res(map("t*z^2"), kGauss) == 2);
  CHECK(ord_res(map("(t*z^2+1)/t"), kGauss) == 4);
  CHECK(ord_res(map("(t*z^2+1)/t"), pt(0, r(-1, 2))) == 1);
  CHECK(ord_res(map("(z^2-t)/z"), kGauss) == 1);
  CHECK(ord_res(map("(z^2-t)/z"), pt(0, r(1, 2))) == 0);
  CHECK(ord_res(map("t*z^2"), pt(0, r(-1))) == 0);
  CHECK(kind_of([] { ord_res(map("z+t"), kGauss); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("hypRes values") {
  CHECK(hyp_res(map("t*z^2"), kGauss) == 0);
  CHECK(hyp_res(map("t*z^2"), pt(0, r(-1))) == r(-1, 2));
  CHECK(hyp_res(map("(t*z^2+1)/t"), pt(0, r(-1, 2))) == r(-3, 4));
  CrucialReport rep = crucial_report(map("(t*z^2+1)/t"), pt(0, r(-1, 2)));
  CHECK(rep.ord_res == 1);
  CHECK(rep.hyp_res == r(-3, 4));
}

TEST_CASE("slope formula") {
  TypeIIPoint g = kGauss;
  SlopeReport a = slope_rhs(map("t*z^2"), g, {g, Infinity{}});
  CHECK(a.dep == 2);
  CHECK_FALSE(a.fixed);
  CHECK(a.rhs == r(-1, 2));
  SlopeReport b = slope_rhs(map("(z^2-t)/z"), g, {g, Finite{0}});
  CHECK(b.dep == 1);
  CHECK(b.fixed);
  CHECK(b.rhs == r(-1, 2));
  SlopeReport c = slope_rhs(map("z^2"), g, {g, Finite{0}});
  CHECK(c.dep == 0);
  CHECK(c.fixed);
  CHECK(c.rhs == r(1, 2));
  CHECK(slope_formula(3, 0, false) == 1);
  CHECK(slope_formula(3, 1, true) == 0);
  CHECK(slope_formula(3, 2, false) == 0);
}

TEST_CASE("measured slopes") {
  TypeIIPoint g = kGauss;
  CHECK(slope_measured(map("t*z^2"), g, {g, Infinity{}}) == r(-1, 2));
  CHECK(slope_measured(map("(t*z^2+1)/t"), g, {g, Infinity{}}) == r(-3, 2));
  CHECK(slope_measured(map("z^2"), g, {g, Finite{1}}) == r(1, 2));
  CHECK(slope_measured(map("z^2"), g, {g, Finite{2}}) == r(3, 2));
  CHECK(kind_of([&] { slope_measured(map("z^2"), g, {g, Factor{QPoly(std::vector<Rational>{1, 0, 1})}}); }) ==
        ErrorKind::IrrationalDirection);
}

TEST_CASE("breakpoint location") {
  auto below = [](Rational b) { return [b](const Rational& x) { return x < b; }; };
  CHECK(locate_breakpoint(below(r(3, 7)), 1, 10) == r(3, 7));
  CHECK(locate_breakpoint(below(r(5, 2)), 3, 4) == r(5, 2));
  CHECK(locate_breakpoint(below(r(9)), 3, 4) == 3);
  CHECK(locate_breakpoint(below(r(0)), 3, 4) == 0);
  // a predicate still true at the breakpoint fails certification
  CHECK(kind_of([] { locate_breakpoint([](const Rational& x) { return x <= r(1, 3); }, 1, 10); }) ==
        ErrorKind::BreakpointUnresolved);
  CHECK(default_denominator_bound(2, 1) == 840);
  CHECK(default_denominator_bound(2, 2) == 1680);
}

TEST_CASE("hypRes by the path integral") {
  CHECK(hyp_res_direct(map("t*z^2"), pt(0, r(-1))) == r(-1, 2));
  CHECK(hyp_res_direct(map("(t*z^2+1)/t"), kGauss) == 0);
  CHECK(hyp_res_direct(map("z^2"), kGauss) == 0);
  CHECK(hyp_res_direct(map("(t*z^2+1)/t"), pt(0, r(-1, 2))) == r(-3, 4));
  CHECK(hyp_res_direct(map("(z^2-t)/z"), pt(0, r(1, 2))) == r(-1, 4));
  const char* maps[] = {"z^2", "t*z^2", "(t*z^2+1)/t", "(z^2-t)/z", "z^2+t"};
  TypeIIPoint points[] = {pt(0, r(1, 2)), pt(0, r(-1, 2)), pt(0, r(1)), pt(0, r(-1)), pt(1, r(1))};
  for (const char* m : maps) {
    for (const auto& p : points) {
      CAPTURE(m);
      CAPTURE(to_string(p));
      CHECK(hyp_res_direct(map(m), p) == hyp_res(map(m), p));
    }
  }
}

TEST_CASE("minimal locus") {
  MinLocusResult a = min_locus(map("t*z^2"));
  CHECK(a.minimizer == pt(0, r(-1)));
  CHECK(a.min_hyp_res == r(-1, 2));
  CHECK(a.verdict == Verdict::Stable);
  CHECK(a.unique);

  MinLocusResult b = min_locus(map("(t*z^2+1)/t"));
  CHECK(b.minimizer == pt(0, r(-1, 2)));
  CHECK(b.min_hyp_res == r(-3, 4));
  CHECK(b.verdict == Verdict::Stable);

  // ordRes drops from 1 to 0 over distance 1/2, so hypRes = -1/(2*2*1)
  MinLocusResult c = min_locus(map("(z^2-t)/z"));
  CHECK(c.minimizer == pt(0, r(1, 2)));
  CHECK(c.min_hyp_res == (ord_res(map("(z^2-t)/z"), c.minimizer) - 1) / 4);
  CHECK(c.min_hyp_res == r(-1, 4));
  CHECK(c.verdict == Verdict::Stable);

  MinLocusResult d = min_locus(map("z^2"));
  CHECK(d.minimizer == kGauss);
  CHECK(d.min_hyp_res == 0);
  CHECK(d.verdict == Verdict::Stable);
  CHECK(d.trail.empty());

  // a start point already at the minimum
  MinLocusResult e = min_locus(map("t*z^2"), pt(0, r(-1)));
  CHECK(e.minimizer == pt(0, r(-1)));
  CHECK(e.trail.empty());
}

TEST_CASE("semistability verdicts") {
  CHECK(semistability(map("t*z^2"), kGauss) == Verdict::Unstable);
  CHECK(semistability(map("(t*z^2+1)/t"), pt(0, r(-1, 2))) == Verdict::Stable);
  CHECK(semistability(map("z^2"), kGauss) == Verdict::Stable);
  CHECK(to_string(Verdict::SemistableNotStable) == "semistable");
  // reduction z^2 with H = X1: the fixed class 0 has depth exactly (d-1)/2
  CHECK(semistability(map("z^3/(z+t)"), kGauss) == Verdict::SemistableNotStable);
  MinLocusResult m = min_locus(map("z^3/(z+t)"));
  CHECK(m.verdict == Verdict::SemistableNotStable);
  CHECK_FALSE(m.unique);
  CHECK(m.minimizer == kGauss);
  CHECK(m.flat_directions == std::vector<DirectionClass>{Finite{0}});
}

TEST_CASE("property: shift route agrees with the materialized conjugate") {
  Gen g(501);
  for (int i = 0; i < kCases; ++i) {
    RationalMapK f = g.map(g.integer(2, 3));
    TypeIIPoint xi = g.point(2);
    CAPTURE(i);
    CAPTURE(to_string(f));
    CAPTURE(to_string(xi));
    CHECK(ord_res(f, xi) == ord_res_materialized(f, chart(xi, 2)));
  }
}

TEST_CASE("property: ordRes is invariant under unit changes of chart") {
  Gen g(502);
  const int maps = 10, per_map = 20;
  for (int i = 0; i < maps; ++i) {
    RationalMapK f = g.map(2);
    TypeIIPoint xi = g.point(2);
    Rational expected = ord_res(f, xi);
    Mobius c = chart(xi, 2);
    for (int k = 0; k < per_map; ++k) {
      CAPTURE(i);
      CAPTURE(k);
      CHECK(ord_res_materialized(f, c * g.unit_matrix()) == expected);
    }
  }
}

TEST_CASE("property: measured slopes equal the depth formula") {
  Gen g(503);
  int measured = 0;
  for (int i = 0; i < kCases; ++i) {
    RationalMapK f = g.map(g.integer(2, 3));
    TypeIIPoint xi = g.point(2);
    ResultantFunction rf(f);
    IntrinsicReduction ir = intrinsic_data(f, xi);
    CAPTURE(i);
    CAPTURE(to_string(f));
    CAPTURE(to_string(xi));
    for (const auto& c : probe_classes(ir)) {
      if (std::holds_alternative<Factor>(c)) continue;
      CAPTURE(to_string(c));
      CHECK(slope_measured(rf, xi, c) == slope_rhs(ir, c).rhs);
      ++measured;
    }
  }
  CHECK(measured >= 3 * kCases);
}

TEST_CASE("property: slope quantization and convexity") {
  Gen g(504);
  for (int i = 0; i < kCases; ++i) {
    int d = g.integer(2, 3);
    RationalMapK f = g.map(d);
    TypeIIPoint xi = g.point(2);
    IntrinsicReduction ir = intrinsic_data(f, xi);
    CAPTURE(i);
    int negative = 0;
    for (const auto& c : probe_classes(ir)) {
      Rational rhs = slope_rhs(ir, c).rhs;
      Rational scaled = rhs * (2 * (d - 1));
      CHECK(scaled.get_den() == 1);
      if (rhs < 0) ++negative;
    }
    CHECK(negative <= 1);

    // hypRes along a segment has non-decreasing difference quotients
    TypeIIPoint target = g.point(2);
    Rational len = rho(xi, target);
    if (len == 0) continue;
    Rational prev_slope;
    bool first = true;
    ResultantFunction rf(f);
    const int steps = 8;
    for (int k = 0; k < steps; ++k) {
      Rational a = len * frac(k, steps), b = len * frac(k + 1, steps);
      Rational s = (rf.hyp_res(path_point(xi, target, b)) - rf.hyp_res(path_point(xi, target, a))) / (b - a);
      if (!first) CHECK(s >= prev_slope);
      prev_slope = s;
      first = false;
    }
  }
}

TEST_CASE("property: the descent ends at a global minimum") {
  Gen g(505);
  int finished = 0;
  for (int i = 0; i < kCases; ++i) {
    RationalMapK f = g.map(2);
    CAPTURE(i);
    CAPTURE(to_string(f));
    MinLocusResult m;
    try {
      m = min_locus(f);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NeedsExtension);
      continue;
    }
    ++finished;
    CHECK(m.verdict != Verdict::Unstable);
    CHECK_FALSE(has_negative_slope(f, m.minimizer));
    CHECK(m.unique == (m.verdict == Verdict::Stable));
    CHECK(hyp_res(f, m.minimizer) == m.min_hyp_res);
    ResultantFunction rf(f);
    for (int k = 0; k < 10; ++k) {
      TypeIIPoint p = g.point(2);
      CHECK(rf.hyp_res(p) >= m.min_hyp_res);
      if (m.unique && p != m.minimizer) CHECK(rf.hyp_res(p) > m.min_hyp_res);
    }
  }
  CHECK(finished >= kCases / 2);
}

TEST_CASE("property: verdicts agree with slope signs") {
  Gen g(506);
  for (int i = 0; i < kCases; ++i) {
    RationalMapK f = g.map(g.integer(2, 3));
    TypeIIPoint xi = g.point(2);
    CAPTURE(i);
    CAPTURE(to_string(f));
    CAPTURE(to_string(xi));
    Verdict v = semistability(f, xi);
    CHECK((v != Verdict::Unstable) == !has_negative_slope(f, xi));
  }
}

TEST_CASE("property: path integral agrees with ordRes") {
  Gen g(507);
  for (int i = 0; i < kCases; ++i) {
    RationalMapK f = g.map(g.integer(2, 3));
    TypeIIPoint xi = g.point(2);
    CAPTURE(i);
    CAPTURE(to_string(f));
    CAPTURE(to_string(xi));
    CHECK(hyp_res_direct(f, xi) == hyp_res(f, xi));
  }
}
