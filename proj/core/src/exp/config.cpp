#include "mgnn/exp/config.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mgnn {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string_view to_string(Task t) {
  switch (t) {
    case Task::node_classification: return "node-clf";
    case Task::link_prediction: return "link-pred";
    case Task::graph_classification: return "graph-clf";
  }
  return "?";
}

Task parse_task(std::string_view name) {
  if (name == "node-clf") return Task::node_classification;
  if (name == "link-pred") return Task::link_prediction;
  if (name == "graph-clf") return Task::graph_classification;
  throw std::invalid_argument("unknown task '" + std::string(name) + "' (expected node-clf, link-pred or graph-clf)");
}

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& m) { throw std::invalid_argument("config: " + m); };
  if (supra_layers == 0) fail("supra_layers must be at least 1");
  if (features == 0 || heads == 0) fail("features and heads must be at least 1");
  if (!(negative_slope >= 0.0)) fail("negative_slope must be non-negative");
  if (!(dropout >= 0.0 && dropout < 1.0)) fail("dropout must lie in [0, 1)");
  for (std::size_t h : readout_hidden)
    if (h == 0) fail("readout_hidden widths must be positive");
  for (std::size_t h : score_hidden)
    if (h == 0) fail("score_hidden widths must be positive");
  if (pool_width == 0) fail("pool_width must be positive");
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) fail("test_fraction must lie in (0, 1)");
  if (!(validation_fraction >= 0.0 && validation_fraction < 1.0)) fail("validation_fraction must lie in [0, 1)");
  if (class_weights != "inverse_frequency" && class_weights != "none") {
    fail("class_weights must be 'inverse_frequency' or 'none'");
  }
  optimizer().validate();
  early_stop().validate();
}

SupraStackConfig ExperimentConfig::stack(std::size_t in_features, std::size_t n_layers) const {
  SupraStackConfig s;
  s.in_features = in_features;
  s.n_layers = n_layers;
  s.depth = supra_layers;
  s.features = features;
  s.heads = heads;
  s.negative_slope = negative_slope;
  s.aggregator = aggregator;
  s.per_layer_intra = per_layer_intra;
  s.dropout = dropout;
  s.activation = activation;
  return s;
}

OptimizerConfig ExperimentConfig::optimizer() const {
  OptimizerConfig o;
  o.learning_rate = learning_rate;
  o.weight_decay = weight_decay;
  o.beta1 = beta1;
  o.beta2 = beta2;
  o.epsilon = epsilon;
  return o;
}

EarlyStopConfig ExperimentConfig::early_stop() const {
  EarlyStopConfig e;
  e.max_epochs = max_epochs;
  e.patience = patience;
  return e;
}

ExperimentConfig preset_config(Task task) {
  ExperimentConfig c;
  c.task = task;
  c.heads = 5;
  c.negative_slope = 0.2;
  c.dropout = 0.3;
  switch (task) {
    case Task::node_classification:
      c.supra_layers = 6;
      c.features = 60;
      c.learning_rate = 5e-4;
      c.weight_decay = 1e-3;
      c.max_epochs = 2500;
      c.patience = 100;
      break;
    case Task::link_prediction:
      c.supra_layers = 3;
      c.features = 30;
      c.learning_rate = 1e-3;
      c.weight_decay = 1e-5;
      c.max_epochs = 2500;
      c.patience = 400;
      break;
    case Task::graph_classification:
      c.supra_layers = 4;
      c.features = 10;
      c.learning_rate = 5e-3;
      c.weight_decay = 1e-5;
      c.max_epochs = 100;
      c.patience = 100;
      break;
  }
  return c;
}

namespace {

template <class T>
void read_key(const json& j, const char* key, T& out) {
  const auto it = j.find(key);
  if (it == j.end()) return;
  try {
    out = it->get<T>();
  } catch (const json::exception&) {
    throw std::invalid_argument(std::string("config: bad value for '") + key + "': " + it->dump());
  }
}

template <class T, class Parse>
void read_enum(const json& j, const char* key, T& out, Parse parse) {
  std::string name;
  if (j.contains(key)) {
    read_key(j, key, name);
    try {
      out = parse(name);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string("config: '") + key + "': " + e.what());
    }
  }
}

const char* const kKeys[] = {
    "task",          "seed",           "supra_layers",  "features",       "heads",
    "negative_slope", "aggregator",    "per_layer_intra", "activation",   "input_features",
    "dropout",       "readout_hidden", "score_hidden",  "pool_width",     "learning_rate",
    "weight_decay",  "beta1",          "beta2",         "epsilon",        "max_epochs",
    "patience",      "batch_size",     "test_fraction", "validation_fraction", "class_weights",
    "target_layer",
};

}  // namespace

ExperimentConfig parse_config(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : kKeys) known = known || key == k;
    if (!known) throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  if (!j.contains("task")) throw std::invalid_argument("config: missing 'task'");
  Task task{};
  read_enum(j, "task", task, parse_task);

  ExperimentConfig c = preset_config(task);
  read_key(j, "seed", c.seed);
  read_key(j, "supra_layers", c.supra_layers);
  read_key(j, "features", c.features);
  read_key(j, "heads", c.heads);
  read_key(j, "negative_slope", c.negative_slope);
  read_enum(j, "aggregator", c.aggregator, parse_aggregator);
  read_key(j, "per_layer_intra", c.per_layer_intra);
  read_enum(j, "activation", c.activation, parse_activation);
  read_enum(j, "input_features", c.input_features, parse_input_features);
  read_key(j, "dropout", c.dropout);
  read_key(j, "readout_hidden", c.readout_hidden);
  read_key(j, "score_hidden", c.score_hidden);
  read_key(j, "pool_width", c.pool_width);
  read_key(j, "learning_rate", c.learning_rate);
  read_key(j, "weight_decay", c.weight_decay);
  read_key(j, "beta1", c.beta1);
  read_key(j, "beta2", c.beta2);
  read_key(j, "epsilon", c.epsilon);
  read_key(j, "max_epochs", c.max_epochs);
  read_key(j, "patience", c.patience);
  read_key(j, "batch_size", c.batch_size);
  read_key(j, "test_fraction", c.test_fraction);
  read_key(j, "validation_fraction", c.validation_fraction);
  read_key(j, "class_weights", c.class_weights);
  read_key(j, "target_layer", c.target_layer);
  c.validate();
  return c;
}

ExperimentConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string config_to_json(const ExperimentConfig& c) {
  ordered_json j;
  j["task"] = std::string(to_string(c.task));
  j["seed"] = c.seed;
  j["supra_layers"] = c.supra_layers;
  j["features"] = c.features;
  j["heads"] = c.heads;
  j["negative_slope"] = c.negative_slope;
  j["aggregator"] = std::string(to_string(c.aggregator));
  j["per_layer_intra"] = c.per_layer_intra;
  j["activation"] = std::string(to_string(c.activation));
  j["input_features"] = std::string(to_string(c.input_features));
  j["dropout"] = c.dropout;
  j["readout_hidden"] = c.readout_hidden;
  j["score_hidden"] = c.score_hidden;
  j["pool_width"] = c.pool_width;
  j["learning_rate"] = c.learning_rate;
  j["weight_decay"] = c.weight_decay;
  j["beta1"] = c.beta1;
  j["beta2"] = c.beta2;
  j["epsilon"] = c.epsilon;
  j["max_epochs"] = c.max_epochs;
  j["patience"] = c.patience;
  j["batch_size"] = c.batch_size;
  j["test_fraction"] = c.test_fraction;
  j["validation_fraction"] = c.validation_fraction;
  j["class_weights"] = c.class_weights;
  j["target_layer"] = c.target_layer;
  return j.dump(2);
}

}  // namespace mgnn
