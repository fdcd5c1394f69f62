#include "stackopt/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "stackopt/errors.hpp"

namespace stackopt {

std::vector<NormalizedPoint> normalize_front(
    std::span<ObjectiveVector const> front, double c_base) {
  if (!(c_base > 0.0)) {
    throw NonpositiveBase{"normalization base cost must be > 0"};
  }
  std::vector<NormalizedPoint> out;
  out.reserve(front.size());
  for (auto const& point : front) {
    out.push_back({point.cost / c_base,
                   1.0 - std::clamp(point.quality, 0.0, 1.0)});
  }
  return out;
}

double hypervolume_2d(std::span<NormalizedPoint const> points,
                      NormalizedPoint ref) {
  if (!(ref.u > 0.0) || !(ref.v > 0.0)) {
    return 0.0;
  }

  std::vector<NormalizedPoint> inside;
  for (auto const& p : points) {
    if (p.u < ref.u && p.v < ref.v) {
      inside.push_back(p);
    }
  }
  std::ranges::sort(inside, [](auto const& a, auto const& b) {
    return a.u < b.u || (a.u == b.u && a.v < b.v);
  });

  // Staircase: keep points with strictly decreasing v.
  std::vector<NormalizedPoint> stairs;
  for (auto const& p : inside) {
    if (stairs.empty() || p.v < stairs.back().v) {
      stairs.push_back(p);
    }
  }

  auto area = 0.0;
  for (std::size_t i = 0; i < stairs.size(); ++i) {
    auto next_u = i + 1 < stairs.size() ? stairs[i + 1].u : ref.u;
    area += (next_u - stairs[i].u) * (ref.v - stairs[i].v);
  }
  return area / (ref.u * ref.v);
}

MultiRunSummary summarize(std::span<double const> values) {
  if (values.empty()) {
    throw EmptyInput{"cannot summarize an empty list"};
  }
  MultiRunSummary s;
  s.values.assign(values.begin(), values.end());

  auto n = static_cast<double>(values.size());
  auto sum = 0.0;
  for (auto v : values) {
    sum += v;
  }
  s.mean = sum / n;

  auto sq = 0.0;
  for (auto v : values) {
    sq += (v - s.mean) * (v - s.mean);
  }
  s.std = std::sqrt(sq / n);

  auto [lo, hi] = std::ranges::minmax_element(values);
  s.min = *lo;
  s.max = *hi;
  // Rounding in the mean must not break min <= mean <= max.
  s.mean = std::clamp(s.mean, s.min, s.max);
  return s;
}

double relative_cost_gain(double reference_cost, double candidate_cost) {
  if (reference_cost == 0.0) {
    throw NonpositiveBase{"reference cost must be nonzero"};
  }
  return (reference_cost - candidate_cost) / reference_cost;
}

} // namespace stackopt
