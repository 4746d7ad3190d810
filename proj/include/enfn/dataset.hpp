#pragma once

#include <Eigen/Core>

#include "enfn/synapse.hpp"

namespace enfn {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Supervised pairs stored row-wise: inputs.row(k) -> targets[k].
template <typename Scalar>
struct Dataset {
  MatrixX<Scalar> inputs;
  VectorX<Scalar> targets;

  Eigen::Index size() const { return targets.size(); }
  Eigen::Index dimension() const { return inputs.cols(); }

  /// Rows [first, first + count).
  Dataset slice(Eigen::Index first, Eigen::Index count) const {
    return {inputs.middleRows(first, count), targets.segment(first, count)};
  }
};

/// Stacked regressors, one row per sample.
template <typename Scalar>
MatrixX<Scalar> design_matrix(const ModelConfig<Scalar>& config, const MatrixX<Scalar>& inputs) {
  MatrixX<Scalar> phi(inputs.rows(), config.weight_count());
  for (Eigen::Index k = 0; k < inputs.rows(); ++k) phi.row(k) = fuzzify(config, inputs.row(k).transpose()).transpose();
  return phi;
}

template <typename Scalar>
VectorX<Scalar> predict_all(const Model<Scalar>& model, const MatrixX<Scalar>& inputs) {
  VectorX<Scalar> out(inputs.rows());
  for (Eigen::Index k = 0; k < inputs.rows(); ++k) out[k] = predict(model, inputs.row(k).transpose());
  return out;
}

}  // namespace enfn
