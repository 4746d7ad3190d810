#include "enfn/windowing.hpp"

#include <algorithm>
#include <string>

#include "enfn/errors.hpp"

namespace enfn {

namespace {

void require_strictly_descending(const std::vector<int>& lags, const char* what) {
  for (std::size_t j = 1; j < lags.size(); ++j)
    if (!(lags[j - 1] > lags[j])) throw ConfigError(std::string(what) + " must be distinct and sorted descending");
}

}  // namespace

void WindowSpec::validate() const {
  if (horizon < 1) throw ConfigError("horizon must be >= 1");
  if (lags.empty() && exogenous_lags.empty()) throw ConfigError("window needs at least one lag");
  for (int lag : lags)
    if (lag < 0) throw ConfigError("series lags must be non-negative");
  for (int lag : exogenous_lags)
    if (lag < -horizon) throw ConfigError("exogenous lags cannot look past the target time");
  require_strictly_descending(lags, "series lags");
  require_strictly_descending(exogenous_lags, "exogenous lags");
}

int WindowSpec::max_lag() const {
  int lag = 0;
  for (int l : lags) lag = std::max(lag, l);
  for (int l : exogenous_lags) lag = std::max(lag, l);
  return lag;
}

MinMaxScaler MinMaxScaler::fit(const Eigen::MatrixXd& rows) {
  if (rows.rows() == 0) throw InputError("cannot fit scaling statistics on zero rows");
  return {rows.colwise().minCoeff().transpose(), rows.colwise().maxCoeff().transpose()};
}

Eigen::MatrixXd MinMaxScaler::apply(const Eigen::MatrixXd& rows) const {
  if (rows.cols() != lower.size()) throw ShapeError("scaler column count mismatch");
  Eigen::MatrixXd out(rows.rows(), rows.cols());
  for (Eigen::Index c = 0; c < rows.cols(); ++c) {
    const double range = upper[c] - lower[c];
    if (range > 0.0) {
      out.col(c) = (rows.col(c).array() - lower[c]) / range;
    } else {
      out.col(c).setConstant(0.5);
    }
  }
  return out;
}

Dataset<double> window_pairs(std::span<const double> series, std::span<const double> exogenous,
                             const WindowSpec& spec) {
  spec.validate();
  if (!spec.exogenous_lags.empty() && exogenous.size() != series.size())
    throw ShapeError("exogenous channel must match the series length");
  const auto length = static_cast<long>(series.size());
  const long count = length - spec.max_lag() - spec.horizon;
  if (count < 1) throw ConfigError("series too short for the window");

  Dataset<double> data{Eigen::MatrixXd(count, spec.dimension()), Eigen::VectorXd(count)};
  for (long row = 0; row < count; ++row) {
    const long t = row + spec.max_lag();
    Eigen::Index col = 0;
    for (int lag : spec.lags) data.inputs(row, col++) = series[t - lag];
    for (int lag : spec.exogenous_lags) data.inputs(row, col++) = exogenous[t - lag];
    data.targets[row] = series[t + spec.horizon];
  }
  return data;
}

WindowedSeries windowize(std::span<const double> series, std::span<const double> exogenous, const WindowSpec& spec,
                         std::optional<Eigen::Index> fit_rows) {
  Dataset<double> raw = window_pairs(series, exogenous, spec);
  const Eigen::Index fit = fit_rows.value_or(raw.size());
  if (fit < 1 || fit > raw.size()) throw ConfigError("scaling prefix must cover between 1 and all pairs");

  WindowedSeries out;
  out.scaler = MinMaxScaler::fit(raw.inputs.topRows(fit));
  out.data.inputs = out.scaler.apply(raw.inputs);
  out.data.targets = std::move(raw.targets);
  out.target_index.resize(static_cast<std::size_t>(out.data.size()));
  for (Eigen::Index row = 0; row < out.data.size(); ++row)
    out.target_index[row] = static_cast<int>(row) + spec.max_lag() + spec.horizon;
  return out;
}

}  // namespace enfn
