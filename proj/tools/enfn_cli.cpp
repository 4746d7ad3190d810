// enfn: run the benchmark experiments, dump raw series, list presets.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "enfn/errors.hpp"
#include "enfn/harness.hpp"

namespace {

bool is_preset(const std::string& name) {
  for (const auto& p : enfn::preset_names())
    if (p == name) return true;
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended neo-fuzzy neuron benchmark runner"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Train online on the prefix, evaluate frozen weights on the test segment");
  std::string target;
  std::vector<int> p_sweep;
  int h = 0;
  double alpha = -1.0;
  std::string membership;
  int q = 0;
  int train_len = 0;
  int test_len = 0;
  std::string out_dir;
  run->add_option("target", target, "Preset name or key = value configuration file")->required();
  run->add_option("--p-sweep", p_sweep, "Inference orders, comma separated")->delimiter(',');
  run->add_option("--h", h, "Membership functions per input");
  run->add_option("--alpha", alpha, "Smoothing parameter of the adaptive rule");
  run->add_option("--membership", membership, "triangular or bspline");
  run->add_option("--q", q, "B-spline order");
  run->add_option("--train-len", train_len, "Series points used for training");
  run->add_option("--test-len", test_len, "Series points evaluated with frozen weights");
  run->add_option("--out", out_dir, "Output directory");

  auto* gen = app.add_subcommand("gen", "Write a preset's raw series as CSV");
  std::string gen_preset;
  std::string gen_out;
  gen->add_option("preset", gen_preset, "Preset name")->required();
  gen->add_option("--out", gen_out, "Output file (stdout when omitted)");

  auto* ls = app.add_subcommand("ls-presets", "List built-in experiment presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ls) {
      for (const auto& name : enfn::preset_names()) std::cout << name << '\n';
      return 0;
    }

    if (*gen) {
      const auto signal = enfn::generate(enfn::preset(gen_preset).signal);
      if (gen_out.empty()) {
        enfn::write_series_csv(std::cout, signal);
      } else {
        std::ofstream out(gen_out, std::ios::binary);
        if (!out) throw enfn::InputError("cannot write " + gen_out);
        enfn::write_series_csv(out, signal);
      }
      return 0;
    }

    enfn::ExperimentConfig config = is_preset(target) ? enfn::preset(target) : enfn::load_config(target);
    if (run->count("--p-sweep")) config.p_sweep = p_sweep;
    if (run->count("--h")) config.h = h;
    if (run->count("--alpha")) config.alpha = alpha;
    if (run->count("--membership")) config.membership = enfn::membership_kind_from_string(membership);
    if (run->count("--q")) config.q = q;
    if (run->count("--train-len")) config.train_len = train_len;
    if (run->count("--test-len")) config.test_len = test_len;
    if (run->count("--out")) config.out_dir = out_dir;

    const auto report = enfn::run_experiment(config);
    enfn::write_outputs(report);
    std::cout << enfn::table_text(report);
    std::cout << "trace: p=" << report.trace_p << ", " << report.trace.size() << " rows -> "
              << (std::filesystem::path(config.out_dir) / "trace.csv").string() << '\n';
    std::cout << "elapsed: " << report.seconds << " s\n";
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
