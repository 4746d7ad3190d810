#pragma once

// Turns a scalar series (plus an optional exogenous channel) into
// regressor/target pairs, min-max scaled with training-prefix statistics.

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "enfn/dataset.hpp"

namespace enfn {

/// For anchor index t the regressor is
///   (y(t - lags[0]), ..., y(t - lags.back()), u(t - exogenous_lags[0]), ...)
/// and the target is y(t + horizon). Exogenous lags may be negative down to
/// -horizon: plant inputs are known up to the target time.
struct WindowSpec {
  std::vector<int> lags{3, 2, 1, 0};
  std::vector<int> exogenous_lags{};
  int horizon = 1;

  void validate() const;
  int max_lag() const;
  int dimension() const { return static_cast<int>(lags.size() + exogenous_lags.size()); }
};

/// Per-column affine map onto [0, 1]; a column with zero range maps to 0.5.
struct MinMaxScaler {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  static MinMaxScaler fit(const Eigen::MatrixXd& rows);
  Eigen::MatrixXd apply(const Eigen::MatrixXd& rows) const;
};

struct WindowedSeries {
  Dataset<double> data;             // scaled inputs, raw targets
  std::vector<int> target_index;    // series index of each target
  MinMaxScaler scaler;
};

/// Emits series.size() - max_lag - horizon pairs. Scaling statistics come
/// from the first `fit_rows` pairs (all pairs when unset).
WindowedSeries windowize(std::span<const double> series, std::span<const double> exogenous, const WindowSpec& spec,
                         std::optional<Eigen::Index> fit_rows = std::nullopt);

/// Unscaled pairs, same layout as windowize.
Dataset<double> window_pairs(std::span<const double> series, std::span<const double> exogenous, const WindowSpec& spec);

}  // namespace enfn
