#pragma once

// Seeded generators shared by the property suites. Everything is
// deterministic: a failing case reproduces from the fixed seed and its
// printed index.

#include <algorithm>
#include <random>
#include <vector>

#include "nadyn/berkspace.hpp"
#include "nadyn/error.hpp"
#include "nadyn/redux.hpp"
#include "nadyn/scalars.hpp"

namespace testsupport {

using namespace nadyn;

constexpr int kCases = 200;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(int span = 9, int max_den = 6) {
    Rational r(integer(-span, span), integer(1, max_den));
    r.canonicalize();
    return r;
  }
  Rational nonzero_rational(int span = 9, int max_den = 6) {
    for (;;) {
      Rational r = rational(span, max_den);
      if (r != 0) return r;
    }
  }

  // Finite Laurent sum of a few terms c t^(k/level) with k/level in [lo, hi].
  KScalar laurent(int level, int lo, int hi, int terms) {
    KScalar x(0);
    for (int i = 0; i < terms; ++i) {
      Rational e(integer(lo * level, hi * level), level);
      e.canonicalize();
      x += KScalar(rational()) * KScalar::t_power(e, level);
    }
    return x;
  }

  // Ratio of Laurent sums, occasionally with a unit denominator like 1 + c t.
  KScalar scalar(int level = 1) {
    KScalar x = laurent(level, -2, 3, integer(0, 3));
    if (coin()) {
      KScalar den = KScalar(nonzero_rational()) * KScalar::t_power(Rational(integer(-1, 2)), level) +
                    laurent(level, 1, 3, integer(0, 2));
      if (!den.is_zero()) x /= den;
    }
    return x;
  }

  KScalar nonzero_scalar(int level = 1) {
    for (;;) {
      KScalar x = scalar(level);
      if (!x.is_zero()) return x;
    }
  }

  // Integral scalar with ord >= 0.
  KScalar integral(int level = 1) {
    KScalar x(rational());
    x += laurent(level, 1, 3, integer(0, 2));
    return x;
  }

  TypeIIPoint point(int level = 2) {
    Rational s(integer(-2 * level, 2 * level), level);
    s.canonicalize();
    KScalar a = laurent(level, -2, 2, integer(0, 2));
    return TypeIIPoint(a, s);
  }

  QPoly qpoly(int max_deg, int span = 6) {
    std::vector<Rational> c;
    int deg = integer(0, max_deg);
    for (int i = 0; i <= deg; ++i) c.push_back(rational(span, 3));
    return QPoly(c);
  }

  // Monic squarefree polynomial built from distinct linear factors and
  // irreducible quadratics z^2 + c (c > 0).
  QPoly squarefree(int max_factors) {
    QPoly p = QPoly::constant(Rational(1));
    std::vector<Rational> roots;
    std::vector<Rational> quads;
    int n = integer(1, max_factors);
    for (int i = 0; i < n; ++i) {
      if (coin()) {
        Rational r = rational(5, 2);
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
        roots.push_back(r);
        p *= QPoly(std::vector<Rational>{-r, Rational(1)});
      } else {
        Rational c(integer(1, 5));
        if (std::find(quads.begin(), quads.end(), c) != quads.end()) continue;
        quads.push_back(c);
        p *= QPoly(std::vector<Rational>{c, Rational(0), Rational(1)});
      }
    }
    return p;
  }

  // Degree-d map with random small Laurent coefficients.
  RationalMapK map(int d, int level = 1) {
    for (;;) {
      std::vector<KScalar> num, den;
      for (int i = 0; i <= d; ++i) {
        num.push_back(integer(0, 2) == 0 ? KScalar(0) : laurent(level, -1, 2, integer(1, 2)));
        den.push_back(integer(0, 2) == 0 ? KScalar(0) : laurent(level, -1, 2, integer(1, 2)));
      }
      try {
        return make_map(num, den);
      } catch (const Error&) {
      }
    }
  }

  // Element of GL(2, K°) whose reduction is invertible.
  Mobius unit_matrix() {
    for (;;) {
      std::vector<KScalar> e;
      for (int i = 0; i < 4; ++i) e.push_back(KScalar(Rational(integer(-3, 3))) + laurent(1, 1, 2, integer(0, 1)));
      KScalar det = e[0] * e[3] - e[1] * e[2];
      auto o = ord(det);
      if (o && *o == 0) return Mobius(e[0], e[1], e[2], e[3]);
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testsupport
