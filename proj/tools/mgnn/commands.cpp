#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mgnn/exp/config.hpp"
#include "mgnn/exp/generators.hpp"
#include "mgnn/exp/pipelines.hpp"
#include "mgnn/exp/superdiffusion.hpp"
#include "mgnn/io/mlg.hpp"
#include "mgnn/mlgraph/supra.hpp"
#include "mgnn/tensor/checkpoint.hpp"

namespace mgnn::cli {

namespace fs = std::filesystem;

namespace {

std::string show(double x) {
  if (std::abs(x) < 1e-12) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

template <class Fn>
auto as_usage(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void make_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw UsageError("cannot create output directory " + dir);
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  return out;
}

ExperimentConfig load_config(const std::string& task_name, const std::string& path,
                             std::optional<std::uint64_t> seed) {
  return as_usage([&] {
    const Task task = parse_task(task_name);
    ExperimentConfig cfg = path.empty() ? preset_config(task) : read_config_file(path);
    if (cfg.task != task) {
      throw std::invalid_argument("config is for task '" + std::string(to_string(cfg.task)) + "', not '" +
                                  task_name + "'");
    }
    if (seed) cfg.seed = *seed;
    cfg.validate();
    return cfg;
  });
}

/// Loaded inputs and a constructed (untrained) experiment for one task.
struct Session {
  ExperimentConfig cfg;
  std::optional<MlgDocument> doc;
  std::optional<ClassLabels> classes;
  std::optional<SuperdiffusionDataset> dataset;
  std::unique_ptr<NodeClassificationExperiment> node;
  std::unique_ptr<LinkPredictionExperiment> link;
  std::unique_ptr<GraphClassificationExperiment> graph;

  ParameterStore& parameters() {
    if (node) return node->parameters();
    if (link) return link->parameters();
    return graph->parameters();
  }
};

Session open_session(const ExperimentConfig& cfg, const std::string& data, std::size_t jobs) {
  Session s;
  s.cfg = cfg;
  switch (cfg.task) {
    case Task::node_classification: {
      s.doc = read_mlg_file(data);
      s.classes = class_labels(*s.doc);
      if (s.classes->names.size() < 2) throw std::runtime_error(data + ": node classification needs two or more classes");
      s.node = as_usage([&] {
        return std::make_unique<NodeClassificationExperiment>(s.doc->network, s.classes->ids, s.classes->names.size(),
                                                              cfg);
      });
      break;
    }
    case Task::link_prediction: {
      s.doc = read_mlg_file(data);
      if (cfg.target_layer >= s.doc->network.n_layers()) {
        throw UsageError("target_layer " + std::to_string(cfg.target_layer) + " but " + data + " has " +
                         std::to_string(s.doc->network.n_layers()) + " layers");
      }
      s.link = as_usage([&] { return std::make_unique<LinkPredictionExperiment>(s.doc->network, cfg); });
      break;
    }
    case Task::graph_classification: {
      if (!fs::is_directory(data)) throw UsageError("graph-clf expects a dataset directory, got " + data);
      s.dataset = read_dataset_dir(data);
      s.dataset->config.jobs = jobs;
      s.graph = as_usage([&] { return std::make_unique<GraphClassificationExperiment>(cfg); });
      break;
    }
  }
  return s;
}

MetricList evaluate(Session& s) {
  MetricList m;
  if (s.node) {
    m = to_metrics(s.node->evaluate());
    m.emplace_back("majority_frequency", s.node->majority_frequency());
    m.emplace_back("test_nodes", static_cast<double>(s.node->test_nodes().size()));
  } else if (s.link) {
    m = to_metrics(s.link->evaluate());
    m.emplace_back("test_pairs", static_cast<double>(s.link->split().test_pos.size() * 2));
  } else {
    m = to_metrics(s.graph->evaluate(*s.dataset));
    const auto test = s.dataset->test_indices();
    std::size_t pos = 0;
    for (std::size_t i : test) pos += s.dataset->instances[i].label;
    m.emplace_back("train_graphs", static_cast<double>(s.dataset->train_indices().size()));
    m.emplace_back("test_graphs", static_cast<double>(test.size()));
    m.emplace_back("test_positive_rate", static_cast<double>(pos) / static_cast<double>(test.size()));
  }
  return m;
}

}  // namespace

int run_spectral(const SpectralArgs& a) {
  MlgDocument doc = read_mlg_file(a.file);
  MultilayerNetwork net = doc.network;
  if (a.coupling) {
    if (!(*a.coupling > 0.0)) throw UsageError("--coupling must be positive");
    net = build_multiplex_clique(net.with_inter_edges({}), *a.coupling);
  }
  const SuperdiffusionLabel lab = is_superdiffusive(net);
  for (std::size_t l = 0; l < lab.layer_lambda2.size(); ++l) {
    std::cout << "layer " << l << " (" << doc.layer_names[l] << ") lambda2 " << show(lab.layer_lambda2[l]) << '\n';
  }
  std::cout << "supra lambda2 " << show(lab.supra_lambda2) << '\n'
            << "superdiffusive " << (lab.label ? "true" : "false") << '\n'
            << "margin " << show(lab.margin) << '\n';
  return 0;
}

int run_gen_superdiff(const GenSuperdiffArgs& a) {
  SuperdiffusionConfig cfg;
  cfg.step = a.step;
  cfg.train_per = a.train_per;
  cfg.test_per = a.test_per;
  cfg.coupling = a.coupling;
  cfg.n_nodes = a.nodes;
  cfg.seed = a.seed;
  cfg.jobs = a.jobs;
  as_usage([&] { cfg.validate(); });
  make_dir(a.out);

  SuperdiffusionDataset ds = build_superdiffusion_dataset(cfg);
  write_dataset_dir(ds, a.out, a.manifest_only);

  std::size_t train_pos = 0, train_neg = 0, selected = 0, test_pos = 0, test_n = 0;
  for (const auto& inst : ds.instances) {
    if (inst.split == SplitTag::train) {
      (inst.label ? train_pos : train_neg) += 1;
      selected += inst.selected;
    } else {
      ++test_n;
      test_pos += inst.label;
    }
  }
  std::cout << "combinations " << probability_grid(cfg.step).size() << '\n'
            << "train " << train_pos + train_neg << " (" << train_pos << " positive), selected " << selected << '\n'
            << "test " << test_n << " (" << test_pos << " positive)\n"
            << "wrote " << (fs::path(a.out) / "manifest.jsonl").string() << '\n';
  return 0;
}

int run_gen_synthetic(const GenSyntheticArgs& a) {
  LabeledNetwork data{MultilayerNetwork(1, {LayerGraph(1, false, {})}), {}};
  if (a.kind == "planted-blocks") {
    PlantedBlocksSpec spec;
    spec.seed = a.seed;
    data = planted_blocks(spec);
  } else if (a.kind == "communities") {
    CommunitySpec spec;
    spec.sizes = {300, 300};
    spec.density = {0.1, 0.02};
    spec.identical_layers = false;
    spec.seed = a.seed;
    data = separable_communities(spec);
  } else if (a.kind == "malaria-like") {
    data = malaria_like(a.seed);
  } else {
    data.network = as_usage([&] { return social_multiplex_like(a.scale, a.seed); });
  }
  MlgDocument doc = make_document(data.network);
  for (std::size_t i = 0; i < data.labels.size(); ++i) {
    doc.labels[static_cast<NodeId>(i)] = "c" + std::to_string(data.labels[i]);
  }
  write_mlg_file(a.out, doc);
  std::cout << "wrote " << a.out << ": " << data.network.n_nodes() << " nodes, " << data.network.n_layers()
            << " layers, " << data.network.n_intra_edges() << " intra edges\n";
  return 0;
}

int run_train(const TrainArgs& a) {
  const ExperimentConfig cfg = load_config(a.task, a.config, a.seed);
  make_dir(a.out);
  Session s = open_session(cfg, a.data, a.jobs);

  TrainResult result;
  if (s.node) result = s.node->train();
  else if (s.link) result = s.link->train();
  else result = s.graph->train(*s.dataset);

  MetricList metrics = evaluate(s);
  metrics.emplace_back("best_epoch", static_cast<double>(result.best_epoch));
  metrics.emplace_back("epochs", static_cast<double>(result.history.size()));

  const fs::path out(a.out);
  save_checkpoint_file((out / "model.ckpt").string(), s.parameters());
  open_out(out / "model.ckpt.json") << config_to_json(cfg) << '\n';
  {
    auto h = open_out(out / "history.jsonl");
    write_history(h, result.history);
  }
  {
    auto m = open_out(out / "metrics.jsonl");
    write_metrics(m, metrics);
  }
  std::ostringstream summary;
  write_summary(summary, std::string(to_string(cfg.task)) + " test metrics", metrics);
  open_out(out / "summary.txt") << summary.str();
  std::cout << summary.str();
  return 0;
}

int run_eval(const EvalArgs& a) {
  const std::string sidecar = a.checkpoint + ".json";
  if (!fs::exists(sidecar)) throw UsageError("missing config sidecar " + sidecar);
  const ExperimentConfig cfg = as_usage([&] { return read_config_file(sidecar); });
  Session s = open_session(cfg, a.data, a.jobs);
  load_checkpoint_file(a.checkpoint, s.parameters());
  const MetricList metrics = evaluate(s);
  write_metrics(std::cout, metrics);
  if (!a.out.empty()) {
    auto m = open_out(a.out);
    write_metrics(m, metrics);
  }
  return 0;
}

}  // namespace mgnn::cli
