#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mgnn/mlgraph/multilayer_network.hpp"

namespace mgnn {

enum class SplitTag { train, test };

const char* to_string(SplitTag s);

/*
  One two-layer ER multiplex, stored as its recipe. The network is
  regenerated from (n_nodes, p1, p2, coupling, seed) on demand, or read from
  `path` when the dataset was materialised on disk.
*/
struct SuperdiffusionInstance {
  SplitTag split = SplitTag::train;
  double p1 = 0.0;
  double p2 = 0.0;
  std::uint64_t seed = 0;
  bool label = false;
  double margin = 0.0;
  /// Train instances outside the balanced subset are kept but unselected.
  bool selected = true;
  std::optional<std::string> path;
};

struct SuperdiffusionConfig {
  double step = 0.01;
  std::size_t train_per = 5;
  std::size_t test_per = 10;
  double coupling = 1.0;
  std::size_t n_nodes = 50;
  std::uint64_t seed = 0;
  /// Worker threads for generation and labelling. Output does not depend on it.
  std::size_t jobs = 1;

  void validate() const;
};

struct SuperdiffusionDataset {
  SuperdiffusionConfig config;
  std::vector<SuperdiffusionInstance> instances;
  /// Directory that relative instance paths are resolved against.
  std::string root;

  /// Selected train instances, in storage order.
  std::vector<std::size_t> train_indices() const;
  std::vector<std::size_t> test_indices() const;
  /// Regenerates (or loads) the multiplex of instance i.
  MultilayerNetwork network(std::size_t i) const;
};

/// p1 <= p2 pairs over {step, 2 step, ..., 1 - step}. Throws unless 1/step
/// is an integer >= 2.
std::vector<std::pair<double, double>> probability_grid(double step);

MultilayerNetwork superdiffusion_network(const SuperdiffusionConfig& cfg, double p1, double p2, std::uint64_t seed);

/*
  Generates per_combo train and test instances for every grid pair, labels
  each with is_superdiffusive, then balances the train split by keeping
  every instance of the minority class and an equal-size random subset of
  the majority. Throws std::runtime_error when no train instance is
  positive.
*/
SuperdiffusionDataset build_superdiffusion_dataset(const SuperdiffusionConfig& cfg);

/// Runs fn(i) for i in [0, n) on `jobs` threads (inline when jobs <= 1).
/// The first exception thrown by any call is rethrown after all threads join.
template <class Fn>
void parallel_for(std::size_t n, std::size_t jobs, Fn&& fn);

/// Writes every instance as an .mlg file under dir/train or dir/test and
/// records the relative paths in the dataset.
void materialise_dataset(SuperdiffusionDataset& ds, const std::string& dir);

/// One JSON object per line: split, p1, p2, seed, label, margin, selected,
/// path (null when not materialised).
void write_manifest(std::ostream& out, const SuperdiffusionDataset& ds);
/// Dataset settings as a single JSON object.
void write_dataset_info(std::ostream& out, const SuperdiffusionConfig& cfg);

/// Reads dir/dataset.json and dir/manifest.jsonl. Relative instance paths
/// are resolved against dir.
SuperdiffusionDataset read_dataset_dir(const std::string& dir);
/// Writes dataset.json and manifest.jsonl (and the .mlg files unless
/// manifest_only) into dir, creating it if needed.
void write_dataset_dir(SuperdiffusionDataset& ds, const std::string& dir, bool manifest_only);

}  // namespace mgnn

#include "mgnn/exp/parallel.ipp"
