#pragma once

// Fuzzification of one crisp input component: triangular and B-spline
// membership functions over a fixed, strictly increasing center grid.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "enfn/errors.hpp"

namespace enfn {

enum class MembershipKind { Triangular, BSpline };

inline std::string to_string(MembershipKind kind) {
  return kind == MembershipKind::Triangular ? "triangular" : "bspline";
}

inline MembershipKind membership_kind_from_string(const std::string& name) {
  if (name == "triangular") return MembershipKind::Triangular;
  if (name == "bspline") return MembershipKind::BSpline;
  throw ConfigError("unknown membership kind '" + name + "'");
}

/// Center layout c_1 < ... < c_h for one input, plus the spline order q.
///
/// `degree` follows the recursion order of the basis: q = 1 gives
/// interval indicators, q = 2 the classic triangles. Triangular grids
/// always report q = 2. A B-spline grid pads its knot vector by
/// repeating each end center q - 1 times, so it yields h + q - 2
/// functions that partition unity on [c_1, c_h].
template <typename Scalar>
class MembershipGrid {
 public:
  MembershipGrid(std::vector<Scalar> centers, MembershipKind kind, int degree = 2)
      : centers_(std::move(centers)), kind_(kind),
        degree_(kind == MembershipKind::Triangular ? 2 : degree) {
    const auto h = static_cast<int>(centers_.size());
    if (kind_ == MembershipKind::BSpline && degree_ < 1)
      throw ConfigError("B-spline order q must be >= 1");
    if (kind_ == MembershipKind::Triangular && h < 2)
      throw ConfigError("triangular grid needs at least 2 centers");
    if (kind_ == MembershipKind::BSpline && (h < degree_ || h < 2))
      throw ConfigError("B-spline grid needs h >= max(q, 2) centers");
    for (int l = 0; l < h; ++l) {
      const Scalar c = centers_[l];
      if (!std::isfinite(c) || c < Scalar(0) || c > Scalar(1))
        throw ConfigError("membership centers must lie in [0, 1]");
      if (l > 0 && !(centers_[l - 1] < c))
        throw ConfigError("membership centers must be strictly increasing");
    }
  }

  const std::vector<Scalar>& centers() const { return centers_; }
  MembershipKind kind() const { return kind_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(centers_.size()); }

  /// Length of the activation vector produced for one input.
  int function_count() const {
    return kind_ == MembershipKind::Triangular ? size() : size() + degree_ - 2;
  }

  Scalar min_gap() const {
    Scalar gap = centers_[1] - centers_[0];
    for (std::size_t l = 2; l < centers_.size(); ++l) gap = std::min(gap, centers_[l] - centers_[l - 1]);
    return gap;
  }

  /// Out-of-range inputs are pinned to the grid ends.
  Scalar clamp(Scalar x) const { return std::clamp(x, centers_.front(), centers_.back()); }

  friend bool operator==(const MembershipGrid&, const MembershipGrid&) = default;

 private:
  std::vector<Scalar> centers_;
  MembershipKind kind_;
  int degree_;
};

/// h equally spaced centers on [0, 1]: c_l = (l - 1) / (h - 1).
template <typename Scalar = double>
MembershipGrid<Scalar> make_uniform_centers(int h, MembershipKind kind = MembershipKind::Triangular,
                                            int degree = 2) {
  if (h < 2) throw ConfigError("uniform grid needs h >= 2");
  std::vector<Scalar> centers(static_cast<std::size_t>(h));
  for (int l = 0; l < h; ++l) centers[l] = Scalar(l) / Scalar(h - 1);
  centers.back() = Scalar(1);
  return MembershipGrid<Scalar>(std::move(centers), kind, degree);
}

namespace detail {

// Index l of the half-open cell [c_l, c_{l+1}) holding x; the last cell is closed.
template <typename Scalar>
int locate_cell(const std::vector<Scalar>& knots, Scalar x) {
  const auto it = std::upper_bound(knots.begin(), knots.end(), x);
  int cell = static_cast<int>(it - knots.begin()) - 1;
  // x == last knot: fall back to the last non-degenerate cell.
  while (cell >= 0 && (cell + 1 >= static_cast<int>(knots.size()) || knots[cell + 1] == knots[cell]))
    --cell;
  return cell;
}

}  // namespace detail

/// Piecewise-linear memberships with half-triangles at both ends.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> triangular_activations(Scalar x, const MembershipGrid<Scalar>& grid) {
  const auto& c = grid.centers();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> mu = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(grid.size());
  x = grid.clamp(x);
  const int l = detail::locate_cell(c, x);
  const Scalar width = c[l + 1] - c[l];
  mu[l] = (c[l + 1] - x) / width;
  mu[l + 1] = (x - c[l]) / width;
  return mu;
}

/// Cox-de Boor evaluation of the order-q basis over the clamped knot vector.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> bspline_activations(Scalar x, const MembershipGrid<Scalar>& grid) {
  const int q = grid.degree();
  if (grid.size() < q) throw ConfigError("B-spline grid needs h >= q");
  const auto& c = grid.centers();

  std::vector<Scalar> knots;
  knots.reserve(c.size() + 2 * static_cast<std::size_t>(q - 1));
  knots.insert(knots.end(), static_cast<std::size_t>(q - 1), c.front());
  knots.insert(knots.end(), c.begin(), c.end());
  knots.insert(knots.end(), static_cast<std::size_t>(q - 1), c.back());
  const int knot_count = static_cast<int>(knots.size());

  x = grid.clamp(x);
  std::vector<Scalar> basis(static_cast<std::size_t>(knot_count - 1), Scalar(0));
  basis[detail::locate_cell(knots, x)] = Scalar(1);

  for (int order = 2; order <= q; ++order) {
    const int count = knot_count - order;
    for (int j = 0; j < count; ++j) {
      Scalar value(0);
      const Scalar left_span = knots[j + order - 1] - knots[j];
      if (left_span > Scalar(0) && basis[j] != Scalar(0))
        value += (x - knots[j]) / left_span * basis[j];
      const Scalar right_span = knots[j + order] - knots[j + 1];
      if (right_span > Scalar(0) && basis[j + 1] != Scalar(0))
        value += (knots[j + order] - x) / right_span * basis[j + 1];
      basis[j] = value;
    }
    basis[count] = Scalar(0);
  }

  const int m = grid.function_count();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> mu(m);
  for (int j = 0; j < m; ++j) mu[j] = basis[j];
  return mu;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> activations(Scalar x, const MembershipGrid<Scalar>& grid) {
  return grid.kind() == MembershipKind::Triangular ? triangular_activations(x, grid)
                                                   : bspline_activations(x, grid);
}

}  // namespace enfn
