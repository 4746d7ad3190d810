#include "enfn/metrics.hpp"

#include <cmath>

#include "enfn/errors.hpp"

namespace enfn {

namespace {

void check_lengths(std::span<const double> targets, std::span<const double> predictions) {
  if (targets.empty()) throw InputError("metrics need at least one pair");
  if (targets.size() != predictions.size()) throw ShapeError("targets and predictions differ in length");
}

}  // namespace

double mse(std::span<const double> targets, std::span<const double> predictions) {
  check_lengths(targets, predictions);
  double sum = 0.0;
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const double e = targets[k] - predictions[k];
    sum += e * e;
  }
  return sum / static_cast<double>(targets.size());
}

double rmse(std::span<const double> targets, std::span<const double> predictions) {
  return std::sqrt(mse(targets, predictions));
}

double smape(std::span<const double> targets, std::span<const double> predictions) {
  check_lengths(targets, predictions);
  double sum = 0.0;
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const double scale = std::abs(targets[k]) + std::abs(predictions[k]);
    if (scale < kSmapeGuard) continue;
    sum += 2.0 * std::abs(targets[k] - predictions[k]) / scale;
  }
  return 100.0 * sum / static_cast<double>(targets.size());
}

MetricRow evaluate(int p, std::span<const double> targets, std::span<const double> predictions) {
  const double m = mse(targets, predictions);
  return {p, std::sqrt(m), m, smape(targets, predictions)};
}

}  // namespace enfn
