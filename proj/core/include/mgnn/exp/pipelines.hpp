#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mgnn/exp/config.hpp"
#include "mgnn/exp/link_split.hpp"
#include "mgnn/exp/superdiffusion.hpp"
#include "mgnn/nn/models.hpp"
#include "mgnn/train/metrics.hpp"
#include "mgnn/train/split.hpp"

namespace mgnn {

using EpochCallback = std::function<void(const EpochRecord&)>;

/// Named scalar results, in a fixed order.
using MetricList = std::vector<std::pair<std::string, double>>;

MetricList to_metrics(const BinaryMetrics& m);
MetricList to_metrics(const MulticlassMetrics& m);
/// {"metric": name, "value": v} per line, values printed with %.17g.
void write_metrics(std::ostream& out, const MetricList& metrics);
/// Aligned "name  value" lines under a title.
void write_summary(std::ostream& out, std::string_view title, const MetricList& metrics);

/*
  Node classification on one multilayer network. The test split is a
  stratified `test_fraction` of the nodes; a stratified
  `validation_fraction` of the rest monitors early stopping. Construction
  fixes the split and initialises the model from cfg.seed.
*/
class NodeClassificationExperiment {
 public:
  NodeClassificationExperiment(const MultilayerNetwork& net, std::vector<std::uint32_t> labels, std::size_t n_classes,
                               const ExperimentConfig& cfg);
  NodeClassificationExperiment(const NodeClassificationExperiment&) = delete;
  NodeClassificationExperiment& operator=(const NodeClassificationExperiment&) = delete;

  TrainResult train(const EpochCallback& on_epoch = {});
  /// Test-split accuracy and macro-F1 of the current parameters.
  MulticlassMetrics evaluate() const;
  std::vector<std::uint32_t> predict() const;
  /// Frequency of the most common class among test nodes.
  double majority_frequency() const;

  ParameterStore& parameters() { return store_; }
  const std::vector<std::uint32_t>& fit_nodes() const { return fit_; }
  const std::vector<std::uint32_t>& validation_nodes() const { return val_; }
  const std::vector<std::uint32_t>& test_nodes() const { return test_; }

 private:
  ExperimentConfig cfg_;
  std::vector<std::uint32_t> labels_;
  std::size_t n_classes_;
  SupraGraphs graphs_;
  Tensor x_;
  std::vector<std::uint32_t> fit_, val_, test_;
  std::vector<double> class_weights_;
  ParameterStore store_;
  Rng init_rng_;
  NodeClassifier model_;
};

/*
  Link prediction on cfg.target_layer. The split removes the test positives
  from the graph the model sees; `validation_fraction` of the training pairs
  (positives and negatives alike) monitors early stopping.
*/
class LinkPredictionExperiment {
 public:
  LinkPredictionExperiment(const MultilayerNetwork& net, const ExperimentConfig& cfg);
  LinkPredictionExperiment(LinkSplit split, const ExperimentConfig& cfg);
  LinkPredictionExperiment(const LinkPredictionExperiment&) = delete;
  LinkPredictionExperiment& operator=(const LinkPredictionExperiment&) = delete;

  TrainResult train(const EpochCallback& on_epoch = {});
  /// Accuracy, AUC, precision, recall and F1 on test positives + negatives.
  BinaryMetrics evaluate() const;
  /// Link probabilities of test positives followed by test negatives.
  std::vector<double> test_scores() const;

  ParameterStore& parameters() { return store_; }
  const LinkSplit& split() const { return split_; }

 private:
  struct Pairs {
    IndexArray rows_i, rows_j;
    std::vector<double> targets;
  };
  Pairs make_pairs(const std::vector<NodePair>& pos, const std::vector<NodePair>& neg) const;

  ExperimentConfig cfg_;
  LinkSplit split_;
  SupraGraphs graphs_;
  Tensor x_;
  Pairs fit_, val_, test_;
  ParameterStore store_;
  Rng init_rng_;
  LinkPredictor model_;
};

/*
  Whole-network binary classification of superdiffusion instances. Each
  network is scored by a sigmoid output trained with MSE against {0,1};
  predictions >= 0.5 count as positive.
*/
class GraphClassificationExperiment {
 public:
  explicit GraphClassificationExperiment(const ExperimentConfig& cfg, std::size_t n_layers = 2);
  GraphClassificationExperiment(const GraphClassificationExperiment&) = delete;
  GraphClassificationExperiment& operator=(const GraphClassificationExperiment&) = delete;

  /// Trains on the selected train instances of `ds`.
  TrainResult train(const SuperdiffusionDataset& ds, const EpochCallback& on_epoch = {});
  /// Metrics on the test split of `ds`.
  BinaryMetrics evaluate(const SuperdiffusionDataset& ds) const;
  /// Predicted probability for each listed instance.
  std::vector<double> scores(const SuperdiffusionDataset& ds, const std::vector<std::size_t>& indices) const;
  double score(const MultilayerNetwork& net) const;

  ParameterStore& parameters() { return store_; }

 private:
  ExperimentConfig cfg_;
  std::size_t n_layers_;
  ParameterStore store_;
  Rng init_rng_;
  GraphRegressor model_;
};

/// Convenience wrappers: construct, train, evaluate.
MulticlassMetrics run_node_classification(const MultilayerNetwork& net, const std::vector<std::uint32_t>& labels,
                                          std::size_t n_classes, const ExperimentConfig& cfg);
BinaryMetrics run_link_prediction(const MultilayerNetwork& net, const LinkSplit& split, const ExperimentConfig& cfg);
BinaryMetrics run_superdiffusion_classification(const SuperdiffusionDataset& ds, const ExperimentConfig& cfg);

}  // namespace mgnn
