#include "enfn/signals.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>

#include "enfn/errors.hpp"

namespace enfn {

namespace {

constexpr double kPi = std::numbers::pi;

double mackey_glass_rhs(double y, double delayed) {
  return 0.2 * delayed / (1.0 + std::pow(delayed, 10)) - 0.1 * y;
}

double guarded(double denominator, std::size_t& hits) {
  if (std::abs(denominator) >= kDenominatorGuard) return denominator;
  ++hits;
  return denominator < 0.0 ? -kDenominatorGuard : kDenominatorGuard;
}

// Shared by plants 3 and 4, which differ only in the forcing term.
template <typename Forcing>
Signal run_denominator_plant(const PlantParams& params, Forcing forcing) {
  if (params.n_points < 1) throw ConfigError("plant needs n_points >= 1");
  Signal signal;
  auto& y = signal.values;
  y.resize(static_cast<std::size_t>(params.n_points));
  y[0] = params.initial;
  for (int k = 0; k + 1 < params.n_points; ++k) {
    const double f = forcing(k);
    if (params.additive_variant) {
      y[k + 1] = y[k] / (1.0 + y[k] * y[k]) + f;
    } else {
      y[k + 1] = y[k] / guarded(1.0 + y[k] * y[k] + f, signal.guard_hits);
    }
  }
  return signal;
}

}  // namespace

Signal gen_mackey_glass(const MackeyGlassParams& params) {
  if (!(params.tau > 0.0) || !(params.dt > 0.0)) throw ConfigError("Mackey-Glass tau and dt must be positive");
  if (params.tau < params.dt) throw ConfigError("Mackey-Glass tau must be at least dt");
  if (params.n_points < 1) throw ConfigError("Mackey-Glass needs n_points >= 1");
  const double transient = params.transient.value_or(100.0 * params.tau);
  if (transient < 0.0) throw ConfigError("Mackey-Glass transient must be non-negative");

  // Delay in grid steps; snap near-integers so tau = 17, dt = 0.1 reads grid points exactly.
  double delay = params.tau / params.dt;
  if (std::abs(delay - std::round(delay)) < 1e-9 * delay) delay = std::round(delay);

  const auto skip = static_cast<long>(std::llround(transient / params.dt));
  const long total = skip + params.n_points;
  std::vector<double> history;
  history.reserve(static_cast<std::size_t>(total));
  history.push_back(params.initial);

  // y at fractional grid position s (t = s dt), s <= current index.
  auto at = [&](double s) {
    if (s <= 0.0) return params.initial;
    const auto m = static_cast<std::size_t>(std::floor(s));
    const double frac = s - static_cast<double>(m);
    if (frac == 0.0 || m + 1 >= history.size()) return history[m];
    return history[m] + frac * (history[m + 1] - history[m]);
  };

  const double dt = params.dt;
  for (long m = 0; m + 1 < total; ++m) {
    const double y = history.back();
    const double base = static_cast<double>(m) - delay;
    const double d0 = at(base);
    const double dh = at(base + 0.5);
    const double d1 = at(base + 1.0);
    const double k1 = mackey_glass_rhs(y, d0);
    const double k2 = mackey_glass_rhs(y + 0.5 * dt * k1, dh);
    const double k3 = mackey_glass_rhs(y + 0.5 * dt * k2, dh);
    const double k4 = mackey_glass_rhs(y + dt * k3, d1);
    history.push_back(y + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
  }

  Signal signal;
  signal.values.assign(history.begin() + skip, history.end());
  return signal;
}

double narendra1_forcing(int k) {
  const double s = std::sin(kPi * k / 250.0);
  if (k < kNarendra1Switch) return s * s * s;
  return 0.8 * s + 0.2 * std::sin(kPi * k / 25.0);
}

double narendra2_input(int k) {
  if (k < 250) return std::sin(kPi * k / 25.0);
  if (k <= 500) return 1.0;
  if (k <= 750) return -1.0;
  return 0.4 * std::sin(kPi * k / 25.0) + 0.1 * std::sin(kPi * k / 32.0) + 0.6 * std::sin(kPi * k / 10.0);
}

double narendra3_forcing(int k) {
  const double s = k < 2000 ? std::cos(2.0 * kPi * k / 25.0) + std::cos(2.0 * kPi * k / 2.0)
                            : std::sin(2.0 * kPi * k / 250.0) + std::sin(2.0 * kPi * k / 10.0);
  return s * s * s;
}

double narendra4_forcing(int k) { return std::sin(2.0 * kPi * k / 25.0) + std::sin(2.0 * kPi * k / 10.0); }

Signal gen_narendra1(int n_points) {
  if (n_points < 1) throw ConfigError("plant 1 needs n_points >= 1");
  Signal signal;
  auto& y = signal.values;
  y.resize(static_cast<std::size_t>(n_points));
  y[0] = 0.0;
  for (int k = 0; k + 1 < n_points; ++k) y[k + 1] = y[k] / (1.0 + y[k] * y[k]) + narendra1_forcing(k);
  return signal;
}

Signal gen_narendra2(std::span<const double> input) {
  if (input.size() < 4) throw ConfigError("plant 2 needs n_points >= 4");
  Signal signal;
  signal.exogenous.assign(input.begin(), input.end());
  const auto& u = signal.exogenous;
  auto& y = signal.values;
  y.assign(u.size(), 0.0);
  for (std::size_t k = 0; k + 3 < u.size(); ++k) {
    const double x1 = y[k + 2], x2 = y[k + 1], x3 = y[k], x4 = u[k + 3], x5 = u[k + 2];
    y[k + 3] = (x1 * x2 * x4 * x5 * (x3 - 1.0) + x4) / (1.0 + x3 * x3 + x2 * x2);
  }
  return signal;
}

Signal gen_narendra2(int n_points) {
  if (n_points < 4) throw ConfigError("plant 2 needs n_points >= 4");
  std::vector<double> u(static_cast<std::size_t>(n_points));
  for (int k = 0; k < n_points; ++k) u[k] = narendra2_input(k);
  return gen_narendra2(std::span<const double>(u));
}

Signal gen_narendra3(const PlantParams& params) { return run_denominator_plant(params, narendra3_forcing); }

Signal gen_narendra4(const PlantParams& params) { return run_denominator_plant(params, narendra4_forcing); }

void write_series_csv(std::ostream& out, const Signal& signal) {
  const bool with_input = !signal.exogenous.empty();
  out << (with_input ? "k,value,u\n" : "k,value\n");
  out << std::setprecision(17);
  for (std::size_t k = 0; k < signal.values.size(); ++k) {
    out << k << ',' << signal.values[k];
    if (with_input) out << ',' << signal.exogenous[k];
    out << '\n';
  }
}

}  // namespace enfn
