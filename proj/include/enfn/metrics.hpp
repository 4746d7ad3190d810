#pragma once

#include <span>

namespace enfn {

struct MetricRow {
  int p = 0;
  double rmse = 0.0;
  double mse = 0.0;
  double smape = 0.0;  // percent

  friend bool operator==(const MetricRow&, const MetricRow&) = default;
};

/// Pairs whose |y| + |y_hat| falls below this contribute 0 to SMAPE.
inline constexpr double kSmapeGuard = 1e-12;

double mse(std::span<const double> targets, std::span<const double> predictions);
double rmse(std::span<const double> targets, std::span<const double> predictions);

/// 100/N * sum |y - y_hat| / ((|y| + |y_hat|) / 2), in [0, 200].
double smape(std::span<const double> targets, std::span<const double> predictions);

MetricRow evaluate(int p, std::span<const double> targets, std::span<const double> predictions);

}  // namespace enfn
