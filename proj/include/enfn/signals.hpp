#pragma once

// Benchmark processes: the Mackey-Glass delay system and four Narendra
// plants. Every generator is a deterministic function of its parameters.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace enfn {

struct Signal {
  std::vector<double> values;
  std::vector<double> exogenous;  // plant input u(k); empty for autonomous series
  std::size_t guard_hits = 0;     // denominators pushed away from zero
};

struct MackeyGlassParams {
  double tau = 17.0;
  double dt = 0.1;
  int n_points = 12000;
  double initial = 1.2;              // constant pre-history y(t), t <= 0
  std::optional<double> transient;   // time discarded before sampling; 100 tau if unset
};

/// y'(t) = 0.2 y(t - tau) / (1 + y(t - tau)^10) - 0.1 y(t), integrated with
/// fixed-step RK4 and sampled every dt. Off-grid delayed values are linearly
/// interpolated from the computed history.
Signal gen_mackey_glass(const MackeyGlassParams& params);

/// Smallest |denominator| allowed in plants 3 and 4.
inline constexpr double kDenominatorGuard = 1e-6;

struct PlantParams {
  int n_points = 0;
  double initial = 0.1;           // y(0); plants 3/4 only
  bool additive_variant = false;  // y/(1+y^2) + f instead of f inside the denominator
};

/// Sample index where plant 1 switches its forcing term.
inline constexpr int kNarendra1Switch = 500;

double narendra1_forcing(int k);
double narendra2_input(int k);
double narendra3_forcing(int k);
double narendra4_forcing(int k);

/// y(k+1) = y(k) / (1 + y(k)^2) + f(k), y(0) = 0.
Signal gen_narendra1(int n_points);

/// y(k+3) = f(y(k+2), y(k+1), y(k), u(k+3), u(k+2)) with
/// f = (x1 x2 x4 x5 (x3 - 1) + x4) / (1 + x3^2 + x2^2), y(0..2) = 0.
Signal gen_narendra2(int n_points);

/// Plant 2 driven by an arbitrary input sequence.
Signal gen_narendra2(std::span<const double> input);

/// y(k+1) = y(k) / (1 + y(k)^2 + f(k)).
Signal gen_narendra3(const PlantParams& params);

/// y(k+1) = y(k) / (1 + y(k)^2 + sin(2 pi k / 25) + sin(2 pi k / 10)).
Signal gen_narendra4(const PlantParams& params);

/// CSV with columns k,value[,u]; 17 significant digits.
void write_series_csv(std::ostream& out, const Signal& signal);

}  // namespace enfn
