#pragma once

// JSON records for models and learner checkpoints. Doubles are written in
// shortest round-trip form, so finite values survive a save/load bit-exactly.
//
// Model record:      {"n", "h", "p", "kind", "q", "centers", "weights"}
//                    plus "grids": [{"kind", "q", "centers"}, ...] when inputs
//                    carry their own grids.
// Checkpoint record: {"model": <model record>, "rule": "adaptive"|"fixed_gradient",
//                     "alpha"|"eta", "r", "epsilon"}

#include <string>
#include <utility>

#include <json.hpp>

#include "enfn/learning.hpp"
#include "enfn/synapse.hpp"

namespace enfn {

nlohmann::json model_to_json(const Model<double>& model);
Model<double> model_from_json(const nlohmann::json& record);

nlohmann::json checkpoint_to_json(const Model<double>& model, const LearnerState<double>& state);
std::pair<Model<double>, LearnerState<double>> checkpoint_from_json(const nlohmann::json& record);

std::string dump_model(const Model<double>& model);
Model<double> parse_model(const std::string& text);

}  // namespace enfn
