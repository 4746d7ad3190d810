#pragma once

// Experiment runner: one-step prediction with online training on a prefix
// and frozen-weight evaluation on the following test segment, swept over
// the inference order p.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "enfn/dataset.hpp"
#include "enfn/learning.hpp"
#include "enfn/membership.hpp"
#include "enfn/metrics.hpp"
#include "enfn/signals.hpp"
#include "enfn/synapse.hpp"
#include "enfn/windowing.hpp"

namespace enfn {

enum class SignalKind { MackeyGlass, Narendra1, Narendra2, Narendra3, Narendra4 };

std::string to_string(SignalKind kind);
SignalKind signal_kind_from_string(const std::string& name);

struct SignalSpec {
  SignalKind kind = SignalKind::MackeyGlass;
  int n_points = 12000;
  double tau = 17.0;                 // Mackey-Glass only
  double dt = 0.1;                   // Mackey-Glass only
  double initial = 1.2;              // pre-history (Mackey-Glass) or y(0) (plants 3, 4)
  std::optional<double> transient;   // Mackey-Glass only
  bool additive_variant = false;     // plants 3, 4
};

Signal generate(const SignalSpec& spec);

struct ExperimentConfig {
  std::string name;
  SignalSpec signal;
  WindowSpec window;
  int h = 3;
  std::vector<int> p_sweep{0, 1, 2, 3, 5};
  double alpha = 0.9;
  MembershipKind membership = MembershipKind::Triangular;
  int q = 2;
  int train_len = 0;  // series points whose targets train the model
  int test_len = 0;   // following points evaluated with frozen weights
  std::string out_dir = "out";

  void validate() const;
  ModelConfig<double> model_config(int p) const;
};

const std::vector<std::string>& preset_names();
ExperimentConfig preset(const std::string& name);

/// Scaled train/test pairs for one configuration.
struct PreparedData {
  Dataset<double> train;
  Dataset<double> test;
  std::vector<int> test_index;  // series index of each test target
};

PreparedData prepare(const ExperimentConfig& config);

struct SweepEntry {
  MetricRow row;                    // over the frozen test segment
  double train_mse = 0.0;           // final weights re-evaluated on the training pairs
  Model<double> model;
  LearnerState<double> state;
  std::vector<double> test_predictions;
};

/// Fresh zero model and Adaptive(alpha) learner for a single order p.
SweepEntry run_single(const ExperimentConfig& config, const PreparedData& data, int p);

struct TraceRow {
  int k;
  double target;
  double prediction;
  double error;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<MetricRow> rows;  // sweep order
  int trace_p = 0;              // best test SMAPE, first in sweep order on ties
  std::vector<TraceRow> trace;
  double seconds = 0.0;
};

ExperimentReport run_experiment(const ExperimentConfig& config);

/// p,RMSE_test,MSE_test,SMAPE_test with 7 fixed decimals.
std::string table_csv(const std::vector<MetricRow>& rows);
std::string table_text(const ExperimentReport& report);
std::vector<MetricRow> parse_table_csv(const std::string& text);

/// k,target,prediction,error with 17 significant digits.
std::string trace_csv(const ExperimentReport& report);

/// Writes table.csv, table.txt, trace.csv and config.echo into config.out_dir.
void write_outputs(const ExperimentReport& report);

// Flat key = value configuration, one setting per line, '#' comments.
// Keys mirror the CLI flags: preset, signal, n_points, tau, dt, initial,
// transient, additive_variant, lags, exogenous_lags, horizon, h, p_sweep,
// alpha, membership, q, train_len, test_len, out.

void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value);
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

/// Serialized form accepted back by parse_config.
std::string echo_config(const ExperimentConfig& config);

}  // namespace enfn
