#pragma once

// Depth measures of iterates at a point and their convergence diagnostics.
//
// Level n puts mass dep/d^n on each direction class of the reduction of
// phi^n at xi (Factor classes carry deg * per-root depth), plus the
// local degree over d^n on the point itself when phi^n fixes it.

#include <optional>
#include <string>
#include <vector>

#include "nadyn/redux.hpp"

namespace nadyn {

struct MeasureAtom {
  DirectionClass cls;
  Rational mass;
  friend bool operator==(const MeasureAtom&, const MeasureAtom&) = default;
};

struct DirectionMeasure {
  std::vector<MeasureAtom> atoms;
  std::optional<Rational> point_mass;

  Rational total() const;
  friend bool operator==(const DirectionMeasure&, const DirectionMeasure&) = default;
};

bool totally_invariant(const RationalMapK& phi, const TypeIIPoint& xi);

/// The normalized depth measure of one reduction; scale is d^n.
DirectionMeasure depth_measure(const IntrinsicReduction& r, const Integer& scale);

/// Half the L1 distance over the common refinement of classes, including
/// the point atom. Mass inside a class is spread evenly over its roots.
Rational tv_distance(const DirectionMeasure& a, const DirectionMeasure& b);

enum class Match { Yes, No, NotApplicable };

struct ConvergenceReport {
  std::vector<int> levels;
  std::vector<DirectionMeasure> measures;
  std::vector<Rational> tv_steps;
  std::optional<DirectionMeasure> predicted;  // nullopt = Unknown
  Match match = Match::NotApplicable;
};

constexpr int kDefaultLevels = 4;

/// Levels 1..n_max; throws TotallyInvariantPoint or IterationCapExceeded.
ConvergenceReport depth_sequence(const RationalMapK& phi, const TypeIIPoint& xi, int n_max = kDefaultLevels);

/// Dirac atom toward the minimizer when the minimal locus has good
/// reduction away from xi; nullopt (Unknown) otherwise.
std::optional<DirectionMeasure> predicted_limit(const RationalMapK& phi, const TypeIIPoint& xi);

}  // namespace nadyn
