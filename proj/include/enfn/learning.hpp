#pragma once

// Online adaptation of the weight vector.
//
// FixedGradient is plain LMS on E(k) = e(k)^2 / 2:
//     w(k) = w(k-1) + eta e(k) mu~(k)
// Adaptive is the tracking/filtering rule with a smoothed denominator:
//     r(k) = alpha r(k-1) + |mu~(k)|^2
//     w(k) = w(k-1) + e(k) mu~(k) / max(r(k), eps)
// alpha = 0 reduces to a one-sample Kaczmarz projection, alpha = 1 to
// stochastic approximation with a monotone gain.

#include <cmath>
#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Core>
#include <Eigen/QR>

#include "enfn/dataset.hpp"
#include "enfn/errors.hpp"
#include "enfn/synapse.hpp"

namespace enfn {

template <typename Scalar>
struct FixedGradient {
  Scalar eta;
};

template <typename Scalar>
struct Adaptive {
  Scalar alpha;
};

inline constexpr double kDefaultEpsilon = 1e-9;

template <typename Scalar>
struct LearnerState {
  std::variant<FixedGradient<Scalar>, Adaptive<Scalar>> rule;
  Scalar r;
  Scalar epsilon;

  /// r starts at epsilon so the first step is close to a projection for any alpha.
  static LearnerState adaptive(Scalar alpha, Scalar epsilon = Scalar(kDefaultEpsilon)) {
    if (!(alpha >= Scalar(0) && alpha <= Scalar(1))) throw ConfigError("alpha must lie in [0, 1]");
    if (!(epsilon > Scalar(0))) throw ConfigError("epsilon must be positive");
    return {Adaptive<Scalar>{alpha}, epsilon, epsilon};
  }

  static LearnerState fixed_gradient(Scalar eta, Scalar epsilon = Scalar(kDefaultEpsilon)) {
    if (!(eta > Scalar(0)) || !std::isfinite(eta)) throw ConfigError("learning rate eta must be positive");
    if (!(epsilon > Scalar(0))) throw ConfigError("epsilon must be positive");
    return {FixedGradient<Scalar>{eta}, epsilon, epsilon};
  }

  bool is_adaptive() const { return std::holds_alternative<Adaptive<Scalar>>(rule); }

  friend bool operator==(const LearnerState& a, const LearnerState& b) {
    if (a.r != b.r || a.epsilon != b.epsilon || a.rule.index() != b.rule.index()) return false;
    if (a.is_adaptive()) return std::get<Adaptive<Scalar>>(a.rule).alpha == std::get<Adaptive<Scalar>>(b.rule).alpha;
    return std::get<FixedGradient<Scalar>>(a.rule).eta == std::get<FixedGradient<Scalar>>(b.rule).eta;
  }
};

template <typename Scalar>
struct StepOutcome {
  Scalar prediction;  // from the pre-update weights
  Scalar error;       // target - prediction
  Scalar r_after;
};

/// Predicts with w(k-1), then updates model weights and state.r in place.
/// Non-finite samples are rejected before anything is touched.
template <typename Scalar, typename Derived>
StepOutcome<Scalar> step(Model<Scalar>& model, LearnerState<Scalar>& state, const Eigen::MatrixBase<Derived>& x,
                         Scalar y) {
  if (!std::isfinite(y)) throw InputError("target must be finite");
  if (!x.allFinite()) throw InputError("input vector must be finite");

  const VectorX<Scalar> regressor = fuzzify(model.config(), x);
  const Scalar prediction = model.weights().dot(regressor);
  const Scalar error = y - prediction;

  if (const auto* adaptive = std::get_if<Adaptive<Scalar>>(&state.rule)) {
    state.r = adaptive->alpha * state.r + regressor.squaredNorm();
    model.weights() += (error / std::max(state.r, state.epsilon)) * regressor;
  } else {
    const auto& gradient = std::get<FixedGradient<Scalar>>(state.rule);
    model.weights() += (gradient.eta * error) * regressor;
  }
  return {prediction, error, state.r};
}

/// The first `freeze_after` samples adapt; the rest are predicted with frozen
/// weights and leave r untouched. No value means every sample adapts.
template <typename Scalar>
std::vector<StepOutcome<Scalar>> run_online(Model<Scalar>& model, LearnerState<Scalar>& state,
                                            const Dataset<Scalar>& stream,
                                            std::optional<Eigen::Index> freeze_after = std::nullopt) {
  const Eigen::Index adapt = freeze_after.value_or(stream.size());
  if (adapt < 0 || adapt > stream.size()) throw ConfigError("freeze_after must lie in [0, stream length]");
  std::vector<StepOutcome<Scalar>> outcomes;
  outcomes.reserve(static_cast<std::size_t>(stream.size()));
  for (Eigen::Index k = 0; k < stream.size(); ++k) {
    const auto x = stream.inputs.row(k).transpose();
    const Scalar y = stream.targets[k];
    if (k < adapt) {
      outcomes.push_back(step(model, state, x, y));
    } else {
      const Scalar prediction = predict(model, x);
      outcomes.push_back({prediction, y - prediction, state.r});
    }
  }
  return outcomes;
}

/// Minimum-norm least-squares weights over the whole dataset.
template <typename Scalar>
Model<Scalar> batch_least_squares(const ModelConfig<Scalar>& config, const Dataset<Scalar>& data) {
  if (data.size() == 0) throw InputError("batch least squares needs at least one sample");
  if (data.dimension() != config.inputs()) throw ShapeError("dataset dimension does not match model inputs");
  const MatrixX<Scalar> phi = design_matrix(config, data.inputs);
  Eigen::CompleteOrthogonalDecomposition<MatrixX<Scalar>> cod(phi);
  VectorX<Scalar> weights = cod.solve(data.targets);
  return Model<Scalar>(config, std::move(weights));
}

}  // namespace enfn
