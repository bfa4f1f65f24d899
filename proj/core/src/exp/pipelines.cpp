#include "mgnn/exp/pipelines.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "mgnn/exp/generators.hpp"
#include "mgnn/nn/features.hpp"
#include "mgnn/train/losses.hpp"
#include "mgnn/util/format.hpp"

namespace mgnn {

namespace {

// Sub-streams of cfg.seed.
enum : std::uint64_t { kInitStream = 1, kSplitStream, kValidationStream, kTrainStream };

std::uint64_t stream(const ExperimentConfig& cfg, std::uint64_t which) { return derive_seed(cfg.seed, {which}); }

template <class T>
std::vector<T> pick(const std::vector<T>& v, const std::vector<std::uint32_t>& idx) {
  std::vector<T> out;
  out.reserve(idx.size());
  for (std::uint32_t i : idx) out.push_back(v[i]);
  return out;
}

NodeClassifier::Config node_model(const ExperimentConfig& cfg, const MultilayerNetwork& net, std::size_t n_classes) {
  NodeClassifier::Config m;
  m.stack = cfg.stack(input_width(cfg.input_features, net), net.n_layers());
  m.readout_hidden = cfg.readout_hidden;
  m.n_classes = n_classes;
  return m;
}

LinkPredictor::Config link_model(const ExperimentConfig& cfg, const MultilayerNetwork& net) {
  LinkPredictor::Config m;
  m.stack = cfg.stack(input_width(cfg.input_features, net), net.n_layers());
  m.score_hidden = cfg.score_hidden;
  return m;
}

GraphRegressor::Config graph_model(const ExperimentConfig& cfg, std::size_t n_layers) {
  if (cfg.input_features == InputFeatures::provided) {
    throw std::invalid_argument("graph classification networks carry no input features; use 'degree' or 'ones'");
  }
  const MultilayerNetwork probe(1, std::vector<LayerGraph>(n_layers, LayerGraph(1, false, {})));
  GraphRegressor::Config m;
  m.stack = cfg.stack(input_width(cfg.input_features, probe), n_layers);
  m.pool_width = cfg.pool_width;
  return m;
}

const ExperimentConfig& checked(const ExperimentConfig& cfg) {
  cfg.validate();
  return cfg;
}

}  // namespace

MetricList to_metrics(const BinaryMetrics& m) {
  return {{"accuracy", m.accuracy}, {"auc", m.auc}, {"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}};
}

MetricList to_metrics(const MulticlassMetrics& m) { return {{"accuracy", m.accuracy}, {"macro_f1", m.macro_f1}}; }

void write_metrics(std::ostream& out, const MetricList& metrics) {
  for (const auto& [name, value] : metrics) {
    out << "{\"metric\":\"" << name << "\",\"value\":" << format_double(value) << "}\n";
  }
}

void write_summary(std::ostream& out, std::string_view title, const MetricList& metrics) {
  out << title << '\n';
  std::size_t width = 0;
  for (const auto& m : metrics) width = std::max(width, m.first.size());
  for (const auto& [name, value] : metrics) {
    char buf[64];
    if (value == std::floor(value) && std::abs(value) < 1e15) std::snprintf(buf, sizeof buf, "%.0f", value);
    else std::snprintf(buf, sizeof buf, "%.6f", value);
    out << "  " << name << std::string(width - name.size() + 2, ' ') << buf << '\n';
  }
}

// ---------------------------------------------------------------- node

NodeClassificationExperiment::NodeClassificationExperiment(const MultilayerNetwork& net,
                                                           std::vector<std::uint32_t> labels, std::size_t n_classes,
                                                           const ExperimentConfig& cfg)
    : cfg_(checked(cfg)),
      labels_(std::move(labels)),
      n_classes_(n_classes),
      graphs_(supra_graphs(net)),
      x_(input_features(net, cfg.input_features)),
      init_rng_(stream(cfg, kInitStream)),
      model_(node_model(cfg, net, n_classes), store_, init_rng_) {
  if (labels_.size() != net.n_nodes()) {
    throw std::invalid_argument("node classification: " + std::to_string(labels_.size()) + " labels for " +
                                std::to_string(net.n_nodes()) + " nodes");
  }
  const SplitIndices outer = stratified_split(labels_, n_classes_, cfg_.test_fraction, stream(cfg_, kSplitStream));
  test_ = outer.test;
  fit_ = outer.train;
  if (cfg_.validation_fraction > 0.0) {
    const auto sub = pick(labels_, outer.train);
    const SplitIndices inner = stratified_split(sub, cfg_.validation_fraction, stream(cfg_, kValidationStream));
    fit_ = pick(outer.train, inner.train);
    val_ = pick(outer.train, inner.test);
  }
  if (cfg_.class_weights == "inverse_frequency") class_weights_ = inverse_frequency_weights(pick(labels_, fit_), n_classes_);
}

TrainResult NodeClassificationExperiment::train(const EpochCallback& on_epoch) {
  const IndexArray fit_rows = make_index(fit_);
  const IndexArray val_rows = make_index(val_);
  const auto fit_labels = pick(labels_, fit_);
  const auto val_labels = pick(labels_, val_);
  Objective obj;
  obj.begin_epoch = [](Rng&) { return std::size_t{1}; };
  obj.batch_loss = [&](std::size_t, Rng& rng) {
    const Tensor logits = model_.logits(x_, graphs_, true, rng);
    return weighted_cross_entropy(gather_rows(logits, fit_rows), fit_labels, class_weights_);
  };
  if (!val_.empty()) {
    obj.validation_loss = [&] {
      Rng unused(0);
      const Tensor logits = model_.logits(x_, graphs_, false, unused);
      return weighted_cross_entropy(gather_rows(logits, val_rows), val_labels, class_weights_).item();
    };
  }
  return train_loop(store_, obj, cfg_.optimizer(), cfg_.early_stop(), stream(cfg_, kTrainStream), on_epoch);
}

std::vector<std::uint32_t> NodeClassificationExperiment::predict() const {
  NoGradGuard guard;
  Rng unused(0);
  return argmax_rows(model_.logits(x_, graphs_, false, unused));
}

MulticlassMetrics NodeClassificationExperiment::evaluate() const {
  const auto pred = predict();
  return multiclass_metrics(pick(pred, test_), pick(labels_, test_), n_classes_);
}

double NodeClassificationExperiment::majority_frequency() const {
  std::vector<std::size_t> count(n_classes_, 0);
  for (std::uint32_t i : test_) ++count[labels_[i]];
  return static_cast<double>(*std::max_element(count.begin(), count.end())) / static_cast<double>(test_.size());
}

// ---------------------------------------------------------------- link

LinkPredictionExperiment::LinkPredictionExperiment(const MultilayerNetwork& net, const ExperimentConfig& cfg)
    : LinkPredictionExperiment(
          make_link_split(net, checked(cfg).target_layer, cfg.test_fraction, stream(cfg, kSplitStream)), cfg) {}

LinkPredictionExperiment::LinkPredictionExperiment(LinkSplit split, const ExperimentConfig& cfg)
    : cfg_(checked(cfg)),
      split_(std::move(split)),
      graphs_(supra_graphs(split_.train_network)),
      x_(input_features(split_.train_network, cfg.input_features)),
      init_rng_(stream(cfg, kInitStream)),
      model_(link_model(cfg, split_.train_network), store_, init_rng_) {
  std::vector<NodePair> fit_pos = split_.train_pos;
  std::vector<NodePair> fit_neg = split_.train_neg;
  std::vector<NodePair> val_pos;
  std::vector<NodePair> val_neg;
  if (cfg_.validation_fraction > 0.0) {
    Rng rng(stream(cfg_, kValidationStream));
    auto hold_out = [&](std::vector<NodePair>& from, std::vector<NodePair>& to) {
      shuffle_in_place(from, rng);
      const auto k = static_cast<std::size_t>(cfg_.validation_fraction * static_cast<double>(from.size()));
      to.assign(from.end() - static_cast<std::ptrdiff_t>(k), from.end());
      from.resize(from.size() - k);
    };
    hold_out(fit_pos, val_pos);
    hold_out(fit_neg, val_neg);
  }
  fit_ = make_pairs(fit_pos, fit_neg);
  val_ = make_pairs(val_pos, val_neg);
  test_ = make_pairs(split_.test_pos, split_.test_neg);
}

LinkPredictionExperiment::Pairs LinkPredictionExperiment::make_pairs(const std::vector<NodePair>& pos,
                                                                     const std::vector<NodePair>& neg) const {
  const auto base = static_cast<std::uint32_t>(split_.target * split_.train_network.n_nodes());
  std::vector<std::uint32_t> ri;
  std::vector<std::uint32_t> rj;
  Pairs p;
  for (const auto* set : {&pos, &neg}) {
    for (const NodePair& e : *set) {
      ri.push_back(base + e.u);
      rj.push_back(base + e.v);
      p.targets.push_back(set == &pos ? 1.0 : 0.0);
    }
  }
  p.rows_i = make_index(std::move(ri));
  p.rows_j = make_index(std::move(rj));
  return p;
}

TrainResult LinkPredictionExperiment::train(const EpochCallback& on_epoch) {
  Objective obj;
  obj.begin_epoch = [](Rng&) { return std::size_t{1}; };
  obj.batch_loss = [&](std::size_t, Rng& rng) {
    const Tensor h = model_.embed(x_, graphs_, true, rng);
    return bce_with_logits(model_.pair_logits(h, fit_.rows_i, fit_.rows_j), fit_.targets);
  };
  if (!val_.targets.empty()) {
    obj.validation_loss = [&] {
      Rng unused(0);
      const Tensor h = model_.embed(x_, graphs_, false, unused);
      return bce_with_logits(model_.pair_logits(h, val_.rows_i, val_.rows_j), val_.targets).item();
    };
  }
  return train_loop(store_, obj, cfg_.optimizer(), cfg_.early_stop(), stream(cfg_, kTrainStream), on_epoch);
}

std::vector<double> LinkPredictionExperiment::test_scores() const {
  NoGradGuard guard;
  Rng unused(0);
  const Tensor h = model_.embed(x_, graphs_, false, unused);
  const Tensor p = sigmoid(model_.pair_logits(h, test_.rows_i, test_.rows_j));
  return std::vector<double>(p.values().begin(), p.values().end());
}

BinaryMetrics LinkPredictionExperiment::evaluate() const {
  const auto scores = test_scores();
  std::vector<int> labels(test_.targets.begin(), test_.targets.end());
  return binary_metrics(scores, labels);
}

// ---------------------------------------------------------------- graph

GraphClassificationExperiment::GraphClassificationExperiment(const ExperimentConfig& cfg, std::size_t n_layers)
    : cfg_(checked(cfg)),
      n_layers_(n_layers),
      init_rng_(stream(cfg, kInitStream)),
      model_(graph_model(cfg, n_layers), store_, init_rng_) {}

namespace {

struct GraphExample {
  Tensor x;
  SupraGraphs g;
  double target = 0.0;
};

}  // namespace

TrainResult GraphClassificationExperiment::train(const SuperdiffusionDataset& ds, const EpochCallback& on_epoch) {
  const auto train_idx = ds.train_indices();
  if (train_idx.empty()) throw std::invalid_argument("graph classification: no selected train instances");
  std::vector<std::uint32_t> labels;
  for (std::size_t i : train_idx) labels.push_back(ds.instances[i].label ? 1 : 0);

  std::vector<std::size_t> fit = train_idx;
  std::vector<std::size_t> val;
  if (cfg_.validation_fraction > 0.0) {
    const SplitIndices inner = stratified_split(labels, cfg_.validation_fraction, stream(cfg_, kValidationStream));
    fit = pick(train_idx, inner.train);
    val = pick(train_idx, inner.test);
  }
  auto load = [&](const std::vector<std::size_t>& idx) {
    std::vector<GraphExample> out(idx.size());
    parallel_for(idx.size(), ds.config.jobs, [&](std::size_t k) {
      const MultilayerNetwork net = ds.network(idx[k]);
      if (net.n_layers() != n_layers_) throw std::invalid_argument("graph classification: layer count mismatch");
      out[k] = GraphExample{input_features(net, cfg_.input_features), supra_graphs(net),
                            ds.instances[idx[k]].label ? 1.0 : 0.0};
    });
    return out;
  };
  const std::vector<GraphExample> fit_set = load(fit);
  const std::vector<GraphExample> val_set = load(val);

  const std::size_t batch = cfg_.batch_size == 0 ? fit_set.size() : std::min(cfg_.batch_size, fit_set.size());
  std::vector<std::size_t> order(fit_set.size());
  Objective obj;
  obj.begin_epoch = [&](Rng& rng) {
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    shuffle_in_place(order, rng);
    return (order.size() + batch - 1) / batch;
  };
  obj.batch_loss = [&](std::size_t b, Rng& rng) {
    const std::size_t lo = b * batch;
    const std::size_t hi = std::min(order.size(), lo + batch);
    std::vector<Tensor> preds;
    std::vector<double> targets;
    for (std::size_t k = lo; k < hi; ++k) {
      const GraphExample& ex = fit_set[order[k]];
      preds.push_back(model_.predict(ex.x, ex.g, true, rng));
      targets.push_back(ex.target);
    }
    return mse_loss(concat_rows(preds), targets);
  };
  if (!val_set.empty()) {
    obj.validation_loss = [&] {
      Rng unused(0);
      double se = 0.0;
      for (const GraphExample& ex : val_set) {
        const double d = model_.predict(ex.x, ex.g, false, unused).item() - ex.target;
        se += d * d;
      }
      return se / static_cast<double>(val_set.size());
    };
  }
  return train_loop(store_, obj, cfg_.optimizer(), cfg_.early_stop(), stream(cfg_, kTrainStream), on_epoch);
}

double GraphClassificationExperiment::score(const MultilayerNetwork& net) const {
  NoGradGuard guard;
  Rng unused(0);
  return model_.predict(input_features(net, cfg_.input_features), supra_graphs(net), false, unused).item();
}

std::vector<double> GraphClassificationExperiment::scores(const SuperdiffusionDataset& ds,
                                                          const std::vector<std::size_t>& indices) const {
  std::vector<double> out(indices.size());
  parallel_for(indices.size(), ds.config.jobs, [&](std::size_t k) { out[k] = score(ds.network(indices[k])); });
  return out;
}

BinaryMetrics GraphClassificationExperiment::evaluate(const SuperdiffusionDataset& ds) const {
  const auto idx = ds.test_indices();
  if (idx.empty()) throw std::invalid_argument("graph classification: empty test split");
  std::vector<int> labels;
  for (std::size_t i : idx) labels.push_back(ds.instances[i].label ? 1 : 0);
  return binary_metrics(scores(ds, idx), labels);
}

// ---------------------------------------------------------------- wrappers

MulticlassMetrics run_node_classification(const MultilayerNetwork& net, const std::vector<std::uint32_t>& labels,
                                          std::size_t n_classes, const ExperimentConfig& cfg) {
  NodeClassificationExperiment e(net, labels, n_classes, cfg);
  e.train();
  return e.evaluate();
}

BinaryMetrics run_link_prediction(const MultilayerNetwork& net, const LinkSplit& split, const ExperimentConfig& cfg) {
  if (split.train_network.n_nodes() != net.n_nodes() || split.train_network.n_layers() != net.n_layers()) {
    throw std::invalid_argument("run_link_prediction: split does not belong to this network");
  }
  LinkPredictionExperiment e(split, cfg);
  e.train();
  return e.evaluate();
}

BinaryMetrics run_superdiffusion_classification(const SuperdiffusionDataset& ds, const ExperimentConfig& cfg) {
  GraphClassificationExperiment e(cfg);
  e.train(ds);
  return e.evaluate(ds);
}

}  // namespace mgnn
