#include <doctest.h>

#include <cmath>
#include <sstream>

#include "enfn/errors.hpp"
#include "enfn/signals.hpp"

using namespace enfn;

namespace {

constexpr double pi = 3.14159265358979323846;

// Duplicate recursions, written out independently of signals.cpp.
std::vector<double> oracle_narendra1(int n) {
  std::vector<double> y(n, 0.0);
  for (int k = 0; k + 1 < n; ++k) {
    const double s = std::sin(pi * k / 250.0);
    const double f = k < 500 ? s * s * s : 0.8 * s + 0.2 * std::sin(pi * k / 25.0);
    y[k + 1] = y[k] / (1.0 + y[k] * y[k]) + f;
  }
  return y;
}

double oracle_u(int k) {
  if (k < 250) return std::sin(pi * k / 25.0);
  if (k <= 500) return 1.0;
  if (k <= 750) return -1.0;
  return 0.4 * std::sin(pi * k / 25.0) + 0.1 * std::sin(pi * k / 32.0) + 0.6 * std::sin(pi * k / 10.0);
}

std::vector<double> oracle_narendra2(int n) {
  std::vector<double> y(n, 0.0);
  for (int k = 0; k + 3 < n; ++k) {
    const double x1 = y[k + 2], x2 = y[k + 1], x3 = y[k], x4 = oracle_u(k + 3), x5 = oracle_u(k + 2);
    y[k + 3] = (x1 * x2 * x4 * x5 * (x3 - 1.0) + x4) / (1.0 + x3 * x3 + x2 * x2);
  }
  return y;
}

struct Scan {
  std::vector<double> y;
  std::size_t guarded = 0;
  double min_abs_denominator = INFINITY;
};

Scan oracle_denominator_plant(int n, double y0, double (*forcing)(int)) {
  Scan scan;
  scan.y.assign(n, 0.0);
  scan.y[0] = y0;
  for (int k = 0; k + 1 < n; ++k) {
    double den = 1.0 + scan.y[k] * scan.y[k] + forcing(k);
    scan.min_abs_denominator = std::min(scan.min_abs_denominator, std::abs(den));
    if (std::abs(den) < 1e-6) {
      ++scan.guarded;
      den = den < 0 ? -1e-6 : 1e-6;
    }
    scan.y[k + 1] = scan.y[k] / den;
  }
  return scan;
}

double oracle_f3(int k) {
  const double s = k < 2000 ? std::cos(2.0 * pi * k / 25.0) + std::cos(2.0 * pi * k / 2.0)
                            : std::sin(2.0 * pi * k / 250.0) + std::sin(2.0 * pi * k / 10.0);
  return s * s * s;
}

double oracle_f4(int k) { return std::sin(2.0 * pi * k / 25.0) + std::sin(2.0 * pi * k / 10.0); }

}  // namespace

TEST_CASE("Mackey-Glass") {
  SUBCASE("the equilibrium y* = 1 is held") {
    MackeyGlassParams params;
    params.initial = 1.0;
    params.transient = 0.0;
    params.n_points = 101;  // 10 time units
    for (double y : gen_mackey_glass(params).values) CHECK(std::abs(y - 1.0) < 1e-6);
  }
  SUBCASE("default series stays on the attractor band") {
    const auto s = gen_mackey_glass({});
    REQUIRE(s.values.size() == 12000);
    for (double y : s.values) {
      CHECK(y > 0.0);
      CHECK(y < 1.6);
    }
  }
  SUBCASE("halving dt converges") {
    MackeyGlassParams coarse;
    coarse.transient = 0.0;
    coarse.n_points = 501;  // 50 time units
    MackeyGlassParams fine = coarse;
    fine.dt = coarse.dt / 2;
    fine.n_points = 2 * coarse.n_points - 1;
    const auto a = gen_mackey_glass(coarse).values;
    const auto b = gen_mackey_glass(fine).values;
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[2 * k]));
    MESSAGE("max |y_dt - y_dt/2| = " << worst);
    CHECK(worst < 1e-4);
  }
  SUBCASE("deterministic") { CHECK(gen_mackey_glass({}).values == gen_mackey_glass({}).values); }
  SUBCASE("invalid parameters") {
    CHECK_THROWS_AS(gen_mackey_glass({.tau = 0.0}), ConfigError);
    CHECK_THROWS_AS(gen_mackey_glass({.tau = 17.0, .dt = -0.1}), ConfigError);
    CHECK_THROWS_AS(gen_mackey_glass({.tau = 17.0, .dt = 0.1, .n_points = 0}), ConfigError);
  }
}

TEST_CASE("Narendra plant 1") {
  const auto s = gen_narendra1(2000);
  CHECK(s.values[0] == 0.0);
  CHECK(s.values[1] == 0.0);
  for (double y : s.values) CHECK(std::abs(y) <= 1.5);
  CHECK(s.values == oracle_narendra1(2000));
  CHECK(narendra1_forcing(499) == doctest::Approx(std::pow(std::sin(pi * 499 / 250.0), 3)));
  CHECK(narendra1_forcing(500) == doctest::Approx(0.8 * std::sin(pi * 2.0) + 0.2 * std::sin(pi * 20.0)));
}

TEST_CASE("Narendra plant 2") {
  const auto s = gen_narendra2(1500);
  CHECK(s.exogenous.size() == 1500);
  CHECK(s.values == oracle_narendra2(1500));
  CHECK(s.values == gen_narendra2(1500).values);

  SUBCASE("zero input and zero start stay at zero") {
    const std::vector<double> u(200, 0.0);
    for (double y : gen_narendra2(std::span<const double>(u)).values) CHECK(y == 0.0);
  }
  SUBCASE("input schedule") {
    CHECK(narendra2_input(249) == doctest::Approx(std::sin(pi * 249 / 25.0)));
    CHECK(narendra2_input(250) == 1.0);
    CHECK(narendra2_input(500) == 1.0);
    CHECK(narendra2_input(501) == -1.0);
    CHECK(narendra2_input(750) == -1.0);
    CHECK(narendra2_input(751) == doctest::Approx(oracle_u(751)));
  }
  SUBCASE("constant block reduces f") {
    // u = 1 on both channels: y = (x1 x2 (x3 - 1) + 1) / (1 + x3^2 + x2^2)
    for (int k = 260; k < 495; ++k) {
      const double x1 = s.values[k + 2], x2 = s.values[k + 1], x3 = s.values[k];
      CHECK(s.values[k + 3] == doctest::Approx((x1 * x2 * (x3 - 1.0) + 1.0) / (1.0 + x3 * x3 + x2 * x2)));
    }
  }
  CHECK_THROWS_AS(gen_narendra2(3), ConfigError);
}

TEST_CASE("Narendra plant 3") {
  for (int k = 0; k < 4000; ++k) CHECK(std::abs(narendra3_forcing(k)) <= 8.0 + 1e-12);

  const auto printed = gen_narendra3({4000, 0.1, false});
  const auto scan = oracle_denominator_plant(4000, 0.1, oracle_f3);
  CHECK(printed.values == scan.y);
  CHECK(printed.guard_hits == scan.guarded);

  const auto zero = gen_narendra3({300, 0.0, false});
  for (double y : zero.values) CHECK(y == 0.0);

  const auto additive = gen_narendra3({4000, 0.1, true});
  std::vector<double> y(4000, 0.1);
  for (int k = 0; k + 1 < 4000; ++k) y[k + 1] = y[k] / (1.0 + y[k] * y[k]) + oracle_f3(k);
  CHECK(additive.values == y);
}

TEST_CASE("Narendra plant 4") {
  const auto s = gen_narendra4({500, 0.1, false});
  CHECK(s.values[1] == 0.1 / (1.0 + 0.01));
  const auto scan = oracle_denominator_plant(500, 0.1, oracle_f4);
  CHECK(s.values == scan.y);
  CHECK(s.guard_hits == scan.guarded);
  MESSAGE("plant 4: guard hits " << s.guard_hits << ", min |denominator| " << scan.min_abs_denominator);
  // The guard is unreachable on the default 500-point run.
  CHECK(scan.min_abs_denominator > kDenominatorGuard);
  CHECK(s.guard_hits == 0);
}

TEST_CASE("series CSV") {
  Signal s;
  s.values = {0.1, 1.0 / 3.0};
  s.exogenous = {1.0, -2.0};
  std::ostringstream out;
  write_series_csv(out, s);
  CHECK(out.str() == "k,value,u\n0,0.10000000000000001,1\n1,0.33333333333333331,-2\n");

  std::ostringstream plain;
  write_series_csv(plain, gen_narendra1(3));
  CHECK(plain.str().rfind("k,value\n", 0) == 0);

  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  std::getline(in, line);
  CHECK(std::stod(line.substr(2, line.find(',', 2) - 2)) == 1.0 / 3.0);
}
