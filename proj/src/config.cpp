#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <sstream>

#include "enfn/errors.hpp"
#include "enfn/harness.hpp"

namespace enfn {

namespace {

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

int parse_int(const std::string& key, const std::string& value) {
  int out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) throw ConfigError(key + ": expected an integer, got '" + value + "'");
  return out;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double out = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return out;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a number, got '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError(key + ": expected true or false, got '" + value + "'");
}

std::vector<int> parse_int_list(const std::string& key, const std::string& value) {
  std::vector<int> out;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_int(key, item));
  }
  return out;
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t j = 0; j < values.size(); ++j) out += (j ? "," : "") + std::to_string(values[j]);
  return out;
}

}  // namespace

void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value) {
  if (key == "preset") {
    config = preset(value);
  } else if (key == "signal") {
    config.signal.kind = signal_kind_from_string(value);
  } else if (key == "name") {
    config.name = value;
  } else if (key == "n_points") {
    config.signal.n_points = parse_int(key, value);
  } else if (key == "tau") {
    config.signal.tau = parse_double(key, value);
  } else if (key == "dt") {
    config.signal.dt = parse_double(key, value);
  } else if (key == "initial") {
    config.signal.initial = parse_double(key, value);
  } else if (key == "transient") {
    if (value == "default") {
      config.signal.transient.reset();
    } else {
      config.signal.transient = parse_double(key, value);
    }
  } else if (key == "additive_variant") {
    config.signal.additive_variant = parse_bool(key, value);
  } else if (key == "lags") {
    config.window.lags = parse_int_list(key, value);
  } else if (key == "exogenous_lags") {
    config.window.exogenous_lags = parse_int_list(key, value);
  } else if (key == "horizon") {
    config.window.horizon = parse_int(key, value);
  } else if (key == "h") {
    config.h = parse_int(key, value);
  } else if (key == "p_sweep") {
    config.p_sweep = parse_int_list(key, value);
  } else if (key == "alpha") {
    config.alpha = parse_double(key, value);
  } else if (key == "membership") {
    config.membership = membership_kind_from_string(value);
  } else if (key == "q") {
    config.q = parse_int(key, value);
  } else if (key == "train_len") {
    config.train_len = parse_int(key, value);
  } else if (key == "test_len") {
    config.test_len = parse_int(key, value);
  } else if (key == "out") {
    config.out_dir = value;
  } else {
    throw ConfigError("unknown configuration key '" + key + "'");
  }
}

ExperimentConfig parse_config(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> settings;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(number) + ": expected key = value");
    settings.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }

  // The base comes from `preset`, else from the preset matching `signal`.
  std::string base;
  for (const auto& [key, value] : settings)
    if (key == "preset") base = value;
  if (base.empty())
    for (const auto& [key, value] : settings)
      if (key == "signal") base = to_string(signal_kind_from_string(value));
  if (base.empty()) throw ConfigError("configuration needs a 'preset' or 'signal' key");

  ExperimentConfig config = preset(base);
  for (const auto& [key, value] : settings)
    if (key != "preset") apply_setting(config, key, value);
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration file '" + path + "'");
  return parse_config(in);
}

std::string echo_config(const ExperimentConfig& config) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "name = " << config.name << '\n';
  out << "signal = " << to_string(config.signal.kind) << '\n';
  out << "n_points = " << config.signal.n_points << '\n';
  out << "tau = " << config.signal.tau << '\n';
  out << "dt = " << config.signal.dt << '\n';
  out << "initial = " << config.signal.initial << '\n';
  out << "transient = ";
  if (config.signal.transient) {
    out << *config.signal.transient << '\n';
  } else {
    out << "default\n";
  }
  out << "additive_variant = " << (config.signal.additive_variant ? "true" : "false") << '\n';
  out << "lags = " << join(config.window.lags) << '\n';
  out << "exogenous_lags = " << join(config.window.exogenous_lags) << '\n';
  out << "horizon = " << config.window.horizon << '\n';
  out << "h = " << config.h << '\n';
  out << "p_sweep = " << join(config.p_sweep) << '\n';
  out << "alpha = " << config.alpha << '\n';
  out << "membership = " << to_string(config.membership) << '\n';
  out << "q = " << config.q << '\n';
  out << "train_len = " << config.train_len << '\n';
  out << "test_len = " << config.test_len << '\n';
  out << "out = " << config.out_dir << '\n';
  return out.str();
}

}  // namespace enfn
