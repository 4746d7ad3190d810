#include "enfn/checkpoint.hpp"

#include <cmath>
#include <limits>

#include "enfn/errors.hpp"

namespace enfn {

namespace {

using nlohmann::json;

json grid_to_json(const MembershipGrid<double>& grid) {
  return {{"kind", to_string(grid.kind())}, {"q", grid.degree()}, {"centers", grid.centers()}};
}

MembershipGrid<double> grid_from_json(const json& record) {
  return MembershipGrid<double>(record.at("centers").get<std::vector<double>>(),
                                membership_kind_from_string(record.at("kind").get<std::string>()),
                                record.at("q").get<int>());
}

}  // namespace

json model_to_json(const Model<double>& model) {
  const auto& config = model.config();
  const auto& shared = config.grid(0);
  json record = grid_to_json(shared);
  record["n"] = config.inputs();
  record["h"] = shared.size();
  record["p"] = config.order();
  if (!config.shared_grid()) {
    json grids = json::array();
    for (const auto& grid : config.grids()) grids.push_back(grid_to_json(grid));
    record["grids"] = std::move(grids);
  }
  const auto& w = model.weights();
  record["weights"] = std::vector<double>(w.data(), w.data() + w.size());
  return record;
}

Model<double> model_from_json(const json& record) {
  try {
    std::vector<MembershipGrid<double>> grids;
    if (record.contains("grids")) {
      for (const auto& g : record.at("grids")) grids.push_back(grid_from_json(g));
    } else {
      grids.push_back(grid_from_json(record));
      if (record.at("h").get<int>() != grids.front().size()) throw ShapeError("model record h disagrees with centers");
    }
    ModelConfig<double> config(record.at("n").get<int>(), record.at("p").get<int>(), std::move(grids));
    const auto weights = record.at("weights").get<std::vector<double>>();
    return Model<double>(std::move(config), Eigen::Map<const Eigen::VectorXd>(weights.data(),
                                                                              static_cast<Eigen::Index>(weights.size())));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed model record: ") + e.what());
  }
}

json checkpoint_to_json(const Model<double>& model, const LearnerState<double>& state) {
  json record{{"model", model_to_json(model)}, {"r", state.r}, {"epsilon", state.epsilon}};
  if (const auto* adaptive = std::get_if<Adaptive<double>>(&state.rule)) {
    record["rule"] = "adaptive";
    record["alpha"] = adaptive->alpha;
  } else {
    record["rule"] = "fixed_gradient";
    record["eta"] = std::get<FixedGradient<double>>(state.rule).eta;
  }
  return record;
}

std::pair<Model<double>, LearnerState<double>> checkpoint_from_json(const json& record) {
  try {
    Model<double> model = model_from_json(record.at("model"));
    const auto rule = record.at("rule").get<std::string>();
    const double epsilon = record.at("epsilon").get<double>();
    LearnerState<double> state = rule == "adaptive" ? LearnerState<double>::adaptive(record.at("alpha").get<double>(), epsilon)
                                 : rule == "fixed_gradient"
                                     ? LearnerState<double>::fixed_gradient(record.at("eta").get<double>(), epsilon)
                                     : throw InputError("unknown learning rule '" + rule + "'");
    state.r = record.at("r").get<double>();
    if (!(state.r >= 0.0) || !std::isfinite(state.r)) throw InputError("checkpoint r must be finite and >= 0");
    return {std::move(model), state};
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed checkpoint: ") + e.what());
  }
}

std::string dump_model(const Model<double>& model) { return model_to_json(model).dump(); }

Model<double> parse_model(const std::string& text) {
  try {
    return model_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("model record is not valid JSON: ") + e.what());
  }
}

}  // namespace enfn
