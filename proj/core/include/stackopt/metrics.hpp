#pragma once

#include <span>
#include <vector>

#include "stackopt/objectives.hpp"

namespace stackopt {

// A front point in the normalized cost-quality plane where both coordinates
// are minimized: u = cost / C_base, v = 1 - quality.
struct NormalizedPoint {
  double u = 0.0;
  double v = 0.0;

  friend bool operator==(NormalizedPoint const&,
                         NormalizedPoint const&) = default;
};

inline constexpr NormalizedPoint kDefaultHvReference{1.1, 1.0};

// Quality is clamped to [0, 1] before taking v. Throws NonpositiveBase when
// c_base <= 0.
std::vector<NormalizedPoint> normalize_front(
    std::span<ObjectiveVector const> front, double c_base);

// Area dominated by `points` inside the box [0, ref.u] x [0, ref.v], divided
// by the box area so the result lies in [0, 1]. Points on or beyond the
// reference contribute nothing.
double hypervolume_2d(std::span<NormalizedPoint const> points,
                      NormalizedPoint ref = kDefaultHvReference);

struct MultiRunSummary {
  std::vector<double> values;
  double mean = 0.0;
  double std = 0.0; // population standard deviation
  double min = 0.0;
  double max = 0.0;

  friend bool operator==(MultiRunSummary const&,
                         MultiRunSummary const&) = default;
};

// Throws EmptyInput for an empty list.
MultiRunSummary summarize(std::span<double const> values);

// Relative improvement of `candidate_cost` over `reference_cost`:
// (reference - candidate) / reference.
double relative_cost_gain(double reference_cost, double candidate_cost);

} // namespace stackopt
