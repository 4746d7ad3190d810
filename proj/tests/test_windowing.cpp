#include <doctest.h>

#include "enfn/errors.hpp"
#include "enfn/windowing.hpp"

using namespace enfn;

TEST_CASE("raw pairs") {
  const std::vector<double> series{1, 2, 3, 4, 5, 6};
  WindowSpec spec;
  spec.lags = {1, 0};
  const auto pairs = window_pairs(series, {}, spec);
  REQUIRE(pairs.size() == 4);
  CHECK(pairs.inputs.row(0) == Eigen::RowVector2d(1, 2));
  CHECK(pairs.targets[0] == 3);
  CHECK(pairs.inputs.row(3) == Eigen::RowVector2d(4, 5));
  CHECK(pairs.targets[3] == 6);
}

TEST_CASE("pair count") {
  std::vector<double> series(40);
  for (std::size_t k = 0; k < series.size(); ++k) series[k] = std::sin(0.3 * k);
  for (int horizon : {1, 2, 5}) {
    WindowSpec spec;
    spec.horizon = horizon;
    CHECK(windowize(series, {}, spec).data.size() == 40 - 3 - horizon);
  }
}

TEST_CASE("exogenous lags may reach the target time") {
  const std::vector<double> y{0, 10, 20, 30, 40, 50};
  const std::vector<double> u{0, 1, 2, 3, 4, 5};
  WindowSpec spec;
  spec.lags = {2, 1, 0};
  spec.exogenous_lags = {0, -1};
  const auto pairs = window_pairs(y, u, spec);
  REQUIRE(pairs.size() == 3);
  Eigen::RowVectorXd want(5);
  want << 0, 10, 20, 2, 3;
  CHECK(pairs.inputs.row(0) == want);
  CHECK(pairs.targets[0] == 30);
}

TEST_CASE("training-prefix scaling") {
  std::vector<double> series;
  for (int k = 0; k < 30; ++k) series.push_back(k < 15 ? std::cos(k) : 3.0 * std::cos(k));
  WindowSpec spec;
  const auto w = windowize(series, {}, spec, 10);
  const Eigen::MatrixXd prefix = w.data.inputs.topRows(10);
  for (Eigen::Index c = 0; c < prefix.cols(); ++c) {
    CHECK(prefix.col(c).minCoeff() == 0.0);
    CHECK(prefix.col(c).maxCoeff() == 1.0);
  }
  // Later rows come from a wider range and leave [0, 1].
  CHECK((w.data.inputs.array() > 1.0).any());
  CHECK(w.target_index.front() == 4);
  CHECK(w.target_index.back() == 29);
  CHECK(w.data.targets[0] == series[4]);
}

TEST_CASE("constant series scales to 0.5") {
  const std::vector<double> series(12, 3.25);
  const auto w = windowize(series, {}, WindowSpec{});
  CHECK((w.data.inputs.array() == 0.5).all());
}

TEST_CASE("window validation") {
  const std::vector<double> series(10, 1.0);
  WindowSpec spec;
  spec.lags = {0, 1};
  CHECK_THROWS_AS(window_pairs(series, {}, spec), ConfigError);
  spec.lags = {1, 1};
  CHECK_THROWS_AS(window_pairs(series, {}, spec), ConfigError);
  spec.lags = {1, 0};
  spec.horizon = 0;
  CHECK_THROWS_AS(window_pairs(series, {}, spec), ConfigError);
  spec.horizon = 1;
  spec.exogenous_lags = {-2};
  CHECK_THROWS_AS(window_pairs(series, series, spec), ConfigError);
  spec.exogenous_lags = {0};
  CHECK_THROWS_AS(window_pairs(series, std::vector<double>(5), spec), ShapeError);
  CHECK_THROWS_AS(window_pairs(std::vector<double>(4), {}, WindowSpec{}), ConfigError);
}
