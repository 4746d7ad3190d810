#pragma once

// Forward map of the (extended) neo-fuzzy neuron.
//
// Each input x_i passes through its own nonlinear synapse: m membership
// functions, each carrying a degree-p polynomial consequent in x_i. The
// output is linear in the flattened weight vector,
//
//     y_hat = w^T mu~(x),
//
// where mu~(x) stacks mu_li(x_i) * x_i^j. Layout is input-major, then
// membership index, then power j = 0..p. p = 0 is the classic neo-fuzzy
// neuron with constant consequents.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "enfn/errors.hpp"
#include "enfn/membership.hpp"

namespace enfn {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
class ModelConfig {
 public:
  /// `grids` holds either one grid shared by all inputs or exactly n grids.
  ModelConfig(int n, int p, std::vector<MembershipGrid<Scalar>> grids)
      : n_(n), p_(p), grids_(std::move(grids)) {
    if (n_ < 1) throw ConfigError("input dimension n must be >= 1");
    if (p_ < 0) throw ConfigError("inference order p must be >= 0");
    if (grids_.size() != 1 && grids_.size() != static_cast<std::size_t>(n_))
      throw ConfigError("expected 1 shared grid or n per-input grids, got " + std::to_string(grids_.size()));
    offsets_.resize(static_cast<std::size_t>(n_) + 1, 0);
    for (int i = 0; i < n_; ++i) offsets_[i + 1] = offsets_[i] + (p_ + 1) * grid(i).function_count();
  }

  ModelConfig(int n, int p, MembershipGrid<Scalar> shared)
      : ModelConfig(n, p, std::vector<MembershipGrid<Scalar>>{std::move(shared)}) {}

  int inputs() const { return n_; }
  int order() const { return p_; }
  bool shared_grid() const { return grids_.size() == 1; }
  const std::vector<MembershipGrid<Scalar>>& grids() const { return grids_; }
  const MembershipGrid<Scalar>& grid(int i) const { return grids_[shared_grid() ? 0 : i]; }

  /// Membership functions in synapse i (h for triangular grids).
  int functions(int i) const { return grid(i).function_count(); }

  /// (p + 1) * h * n for a shared triangular grid.
  int weight_count() const { return offsets_.back(); }

  /// First weight index of synapse i.
  int block_offset(int i) const { return offsets_[i]; }

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;

 private:
  int n_;
  int p_;
  std::vector<MembershipGrid<Scalar>> grids_;
  std::vector<int> offsets_;
};

template <typename Scalar>
class Model {
 public:
  using Vector = VectorX<Scalar>;

  /// Zero-initialized weights.
  explicit Model(ModelConfig<Scalar> config)
      : config_(std::move(config)), weights_(Vector::Zero(config_.weight_count())) {}

  Model(ModelConfig<Scalar> config, Vector weights) : config_(std::move(config)), weights_(std::move(weights)) {
    if (weights_.size() != config_.weight_count())
      throw ShapeError("weight vector has length " + std::to_string(weights_.size()) + ", expected " +
                       std::to_string(config_.weight_count()));
    if (!weights_.allFinite()) throw InputError("weights must be finite");
  }

  const ModelConfig<Scalar>& config() const { return config_; }
  const Vector& weights() const { return weights_; }
  Vector& weights() { return weights_; }

  /// Index of the power-j weight of rule (i, l).
  int weight_index(int i, int l, int j) const {
    return config_.block_offset(i) + l * (config_.order() + 1) + j;
  }

 private:
  ModelConfig<Scalar> config_;
  Vector weights_;
};

/// mu~(x): memberships of every input, each repeated against x_i^0..x_i^p.
template <typename Scalar, typename Derived>
VectorX<Scalar> fuzzify(const ModelConfig<Scalar>& config, const Eigen::MatrixBase<Derived>& x) {
  if (x.size() != config.inputs())
    throw ShapeError("input has " + std::to_string(x.size()) + " components, model expects " +
                     std::to_string(config.inputs()));
  const int powers = config.order() + 1;
  VectorX<Scalar> regressor(config.weight_count());
  for (int i = 0; i < config.inputs(); ++i) {
    const auto& grid = config.grid(i);
    const Scalar xi = grid.clamp(static_cast<Scalar>(x[i]));
    const VectorX<Scalar> mu = activations(xi, grid);
    Scalar* out = regressor.data() + config.block_offset(i);
    for (int l = 0; l < mu.size(); ++l) {
      Scalar term = mu[l];
      for (int j = 0; j < powers; ++j) {
        *out++ = term;
        term *= xi;
      }
    }
  }
  return regressor;
}

template <typename Scalar, typename Derived>
Scalar predict(const Model<Scalar>& model, const Eigen::MatrixBase<Derived>& x) {
  return model.weights().dot(fuzzify(model.config(), x));
}

/// THEN-part of rule (i, l): w0 + w1 x_i + ... + wp x_i^p.
template <typename Scalar>
Scalar rule_consequent(const Model<Scalar>& model, int i, int l, Scalar xi) {
  const auto& config = model.config();
  if (i < 0 || i >= config.inputs()) throw ShapeError("input index out of range");
  if (l < 0 || l >= config.functions(i)) throw ShapeError("membership index out of range");
  Scalar acc(0);
  for (int j = config.order(); j >= 0; --j) acc = acc * xi + model.weights()[model.weight_index(i, l, j)];
  return acc;
}

}  // namespace enfn
