#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mgnn/nn/features.hpp"
#include "mgnn/nn/supra_layer.hpp"
#include "mgnn/train/optimizer.hpp"
#include "mgnn/train/train_loop.hpp"

namespace mgnn {

enum class Task { node_classification, link_prediction, graph_classification };

/// "node-clf", "link-pred", "graph-clf".
std::string_view to_string(Task t);
Task parse_task(std::string_view name);

/*
  Flat experiment configuration. Serialised as a single JSON object whose
  keys are the field names below; keys missing from a file keep the preset
  value of the file's task.
*/
struct ExperimentConfig {
  Task task = Task::node_classification;
  std::uint64_t seed = 0;

  // architecture
  std::size_t supra_layers = 2;
  std::size_t features = 8;
  std::size_t heads = 1;
  double negative_slope = 0.2;
  AggregatorKind aggregator = AggregatorKind::concat_linear;
  bool per_layer_intra = false;
  Activation activation = Activation::elu;
  InputFeatures input_features = InputFeatures::degree;
  double dropout = 0.0;
  std::vector<std::size_t> readout_hidden{64};
  std::vector<std::size_t> score_hidden{64};
  std::size_t pool_width = 16;

  // optimisation
  double learning_rate = 1e-3;
  double weight_decay = 0.0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  std::size_t max_epochs = 100;
  std::size_t patience = 10;
  /// Graphs per optimiser step for graph classification; 0 = all.
  std::size_t batch_size = 0;

  // data
  double test_fraction = 0.2;
  /// Share of the training items held out to monitor early stopping; 0
  /// monitors the training loss.
  double validation_fraction = 0.1;
  /// "inverse_frequency" or "none" (node classification).
  std::string class_weights = "inverse_frequency";
  /// Layer whose links are predicted.
  std::uint32_t target_layer = 0;

  void validate() const;

  SupraStackConfig stack(std::size_t in_features, std::size_t n_layers) const;
  OptimizerConfig optimizer() const;
  EarlyStopConfig early_stop() const;
};

/// Published hyperparameters for each task: 6x GAT(60, 5 heads) for node
/// classification, 3x GAT(30, 5) for link prediction, 4x GAT(10, 5) with
/// 100 epochs for graph classification.
ExperimentConfig preset_config(Task task);

/// Parses a JSON object; the "task" key selects the preset that missing keys
/// fall back to. Unknown keys and ill-typed values throw
/// std::invalid_argument naming the key.
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig read_config_file(const std::string& path);
/// Every field, in declaration order, one JSON object.
std::string config_to_json(const ExperimentConfig& cfg);

}  // namespace mgnn
