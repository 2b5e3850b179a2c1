#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace didp {

// Relative difference between a primal and a dual bound. A missing or
// infinite bound counts as the worst gap, 1. Opposite signs could push the
// ratio past 1; the result is clamped so it always lies in [0, 1].
inline double optimality_gap(std::optional<double> primal, std::optional<double> dual, bool infeasible_proved = false) {
  if (infeasible_proved) return 0.0;
  if (!primal || !dual || !std::isfinite(*primal) || !std::isfinite(*dual)) return 1.0;
  if (*primal == *dual) return 0.0;
  double denom = std::max(std::fabs(*primal), std::fabs(*dual));
  return std::min(1.0, std::fabs(*primal - *dual) / denom);
}

// Primal gap of one incumbent against the reference (best known) cost.
inline double primal_gap(std::optional<double> incumbent, double reference) {
  if (!incumbent) return 1.0;
  if (*incumbent == reference) return 0.0;
  double denom = std::max(std::fabs(reference), std::fabs(*incumbent));
  return std::min(1.0, std::fabs(reference - *incumbent) / denom);
}

struct CostEvent {
  double time = 0;
  double cost = 0;
};

// Integral over [0, horizon] of the piecewise-constant primal gap. The gap is
// 1 before the first event; after `infeasible_at` it is 0.
inline double primal_integral(const std::vector<CostEvent>& events, double reference, double horizon,
                              std::optional<double> infeasible_at = std::nullopt) {
  if (!(horizon >= 0) || !std::isfinite(horizon)) throw std::invalid_argument("horizon must be a finite nonnegative time");
  double prev = 0;
  for (const auto& e : events) {
    if (!(e.time >= 0 && e.time <= horizon))
      throw std::out_of_range("event time " + std::to_string(e.time) + " outside [0, " + std::to_string(horizon) + "]");
    if (e.time < prev) throw std::invalid_argument("event times must be non-decreasing");
    prev = e.time;
  }
  if (infeasible_at && !(*infeasible_at >= 0 && *infeasible_at <= horizon))
    throw std::out_of_range("infeasibility time outside [0, horizon]");

  double total = 0, t = 0;
  std::optional<double> incumbent;
  auto advance = [&](double until) {
    double end = infeasible_at ? std::min(until, *infeasible_at) : until;
    if (end > t) total += primal_gap(incumbent, reference) * (end - t);
    t = std::max(t, until);
  };
  for (const auto& e : events) {
    advance(e.time);
    incumbent = e.cost;
  }
  advance(horizon);
  return total;
}

}  // namespace didp
