#include "enfn/harness.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "enfn/errors.hpp"

namespace enfn {

namespace {

struct PresetEntry {
  const char* name;
  SignalKind kind;
};

constexpr PresetEntry kPresets[] = {
    {"mackey-glass", SignalKind::MackeyGlass}, {"narendra1", SignalKind::Narendra1},
    {"narendra2", SignalKind::Narendra2},      {"narendra3", SignalKind::Narendra3},
    {"narendra4", SignalKind::Narendra4},
};

std::string fixed7(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.7f", value);
  return buffer;
}

}  // namespace

std::string to_string(SignalKind kind) {
  for (const auto& entry : kPresets)
    if (entry.kind == kind) return entry.name;
  return "unknown";
}

SignalKind signal_kind_from_string(const std::string& name) {
  for (const auto& entry : kPresets)
    if (name == entry.name) return entry.kind;
  throw ConfigError("unknown signal '" + name + "'");
}

Signal generate(const SignalSpec& spec) {
  switch (spec.kind) {
    case SignalKind::MackeyGlass:
      return gen_mackey_glass({spec.tau, spec.dt, spec.n_points, spec.initial, spec.transient});
    case SignalKind::Narendra1:
      return gen_narendra1(spec.n_points);
    case SignalKind::Narendra2:
      return gen_narendra2(spec.n_points);
    case SignalKind::Narendra3:
      return gen_narendra3({spec.n_points, spec.initial, spec.additive_variant});
    case SignalKind::Narendra4:
      return gen_narendra4({spec.n_points, spec.initial, spec.additive_variant});
  }
  throw ConfigError("unknown signal kind");
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : kPresets) out.emplace_back(entry.name);
    return out;
  }();
  return names;
}

ExperimentConfig preset(const std::string& name) {
  ExperimentConfig config;
  config.name = name;
  config.signal.kind = signal_kind_from_string(name);
  config.out_dir = "out/" + name;
  switch (config.signal.kind) {
    case SignalKind::MackeyGlass:
      config.signal.n_points = 12000;
      config.signal.initial = 1.2;
      config.train_len = 7000;
      config.test_len = 5000;
      break;
    case SignalKind::Narendra1:
      config.signal.n_points = 2000;
      config.signal.initial = 0.0;
      config.train_len = kNarendra1Switch;
      config.test_len = 1500;
      break;
    case SignalKind::Narendra2:
      config.signal.n_points = 1500;
      config.signal.initial = 0.0;
      // (y(k), y(k+1), y(k+2), u(k+2), u(k+3)) -> y(k+3)
      config.window.lags = {2, 1, 0};
      config.window.exogenous_lags = {0, -1};
      config.train_len = 750;
      config.test_len = 750;
      break;
    case SignalKind::Narendra3:
      config.signal.n_points = 4000;
      config.signal.initial = 0.1;
      // The denominator form decays to ~1e-20 within the training prefix.
      config.signal.additive_variant = true;
      config.train_len = 2000;
      config.test_len = 2000;
      break;
    case SignalKind::Narendra4:
      config.signal.n_points = 500;
      config.signal.initial = 0.1;
      config.train_len = 250;
      config.test_len = 250;
      break;
  }
  return config;
}

void ExperimentConfig::validate() const {
  window.validate();
  if (h < 2) throw ConfigError("h must be >= 2");
  for (int p : p_sweep)
    if (p < 0) throw ConfigError("p_sweep entries must be >= 0");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("alpha must lie in [0, 1]");
  if (membership == MembershipKind::BSpline && (q < 1 || q > h)) throw ConfigError("B-spline order q must lie in [1, h]");
  if (test_len < 1) throw ConfigError("test_len must be >= 1");
  if (train_len < window.max_lag() + window.horizon + 1)
    throw ConfigError("train_len leaves no training pairs for this window");
  if (static_cast<long>(train_len) + test_len > signal.n_points)
    throw ConfigError("train_len + test_len exceeds the signal length");
  if (signal.kind == SignalKind::Narendra2 && window.exogenous_lags.empty())
    throw ConfigError("narendra2 needs exogenous lags");
}

ModelConfig<double> ExperimentConfig::model_config(int p) const {
  return ModelConfig<double>(window.dimension(), p, make_uniform_centers<double>(h, membership, q));
}

PreparedData prepare(const ExperimentConfig& config) {
  config.validate();
  const Signal signal = generate(config.signal);
  const std::span<const double> exogenous =
      config.window.exogenous_lags.empty() ? std::span<const double>{} : std::span<const double>(signal.exogenous);
  if (!config.window.exogenous_lags.empty() && signal.exogenous.empty())
    throw ConfigError("signal has no exogenous channel for exogenous lags");

  // Pair row r predicts series index r + offset.
  const int offset = config.window.max_lag() + config.window.horizon;
  const Eigen::Index train_rows = config.train_len - offset;
  const auto scaled = windowize(signal.values, exogenous, config.window, train_rows);
  if (train_rows + config.test_len > scaled.data.size()) throw ConfigError("signal too short for window and split");

  PreparedData data{scaled.data.slice(0, train_rows), scaled.data.slice(train_rows, config.test_len), {}};
  data.test_index.assign(scaled.target_index.begin() + train_rows,
                         scaled.target_index.begin() + train_rows + config.test_len);
  return data;
}

SweepEntry run_single(const ExperimentConfig& config, const PreparedData& data, int p) {
  Model<double> model(config.model_config(p));
  auto state = LearnerState<double>::adaptive(config.alpha);
  run_online(model, state, data.train);
  const auto outcomes = run_online(model, state, data.test, Eigen::Index{0});

  std::vector<double> predictions;
  predictions.reserve(outcomes.size());
  for (const auto& outcome : outcomes) predictions.push_back(outcome.prediction);
  const std::span<const double> targets(data.test.targets.data(), static_cast<std::size_t>(data.test.size()));
  const MetricRow row = evaluate(p, targets, predictions);

  const Eigen::VectorXd fitted = predict_all(model, data.train.inputs);
  const std::span<const double> train_targets(data.train.targets.data(), static_cast<std::size_t>(data.train.size()));
  const double train_mse = mse(train_targets, std::span<const double>(fitted.data(), fitted.size()));
  return {row, train_mse, std::move(model), state, std::move(predictions)};
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const PreparedData data = prepare(config);

  ExperimentReport report;
  report.config = config;
  std::optional<SweepEntry> best;
  for (int p : config.p_sweep) {
    SweepEntry entry = run_single(config, data, p);
    report.rows.push_back(entry.row);
    if (!best || entry.row.smape < best->row.smape) best = std::move(entry);
  }
  if (best) {
    report.trace_p = best->row.p;
    for (std::size_t k = 0; k < best->test_predictions.size(); ++k) {
      const double target = data.test.targets[static_cast<Eigen::Index>(k)];
      const double prediction = best->test_predictions[k];
      report.trace.push_back({data.test_index[k], target, prediction, target - prediction});
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string table_csv(const std::vector<MetricRow>& rows) {
  std::string out = "p,RMSE_test,MSE_test,SMAPE_test\n";
  for (const auto& row : rows)
    out += std::to_string(row.p) + ',' + fixed7(row.rmse) + ',' + fixed7(row.mse) + ',' + fixed7(row.smape) + '\n';
  return out;
}

std::string table_text(const ExperimentReport& report) {
  std::ostringstream out;
  out << "Prediction results: " << report.config.name << " (h=" << report.config.h << ", alpha=" << report.config.alpha
      << ")\n";
  out << std::left << std::setw(8) << "" << std::setw(16) << "RMSEtest" << std::setw(16) << "MSEtest" << "SMAPEtest\n";
  for (const auto& row : report.rows) {
    out << std::setw(8) << ("p=" + std::to_string(row.p)) << std::setw(16) << fixed7(row.rmse) << std::setw(16)
        << fixed7(row.mse) << fixed7(row.smape) << '\n';
  }
  return out.str();
}

std::vector<MetricRow> parse_table_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "p,RMSE_test,MSE_test,SMAPE_test")
    throw InputError("table CSV header mismatch");
  std::vector<MetricRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    MetricRow row;
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream fields(line);
    if (!(fields >> row.p >> c1 >> row.rmse >> c2 >> row.mse >> c3 >> row.smape) || c1 != ',' || c2 != ',' || c3 != ',')
      throw InputError("malformed table row '" + line + "'");
    rows.push_back(row);
  }
  return rows;
}

std::string trace_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "k,target,prediction,error\n" << std::setprecision(17);
  for (const auto& row : report.trace)
    out << row.k << ',' << row.target << ',' << row.prediction << ',' << row.error << '\n';
  return out.str();
}

void write_outputs(const ExperimentReport& report) {
  const std::filesystem::path dir(report.config.out_dir);
  std::filesystem::create_directories(dir);
  auto write = [&](const char* file, const std::string& body) {
    std::ofstream out(dir / file, std::ios::binary);
    if (!out) throw InputError("cannot write " + (dir / file).string());
    out << body;
  };
  write("table.csv", table_csv(report.rows));
  write("table.txt", table_text(report));
  write("trace.csv", trace_csv(report));
  write("config.echo", echo_config(report.config));
}

}  // namespace enfn
