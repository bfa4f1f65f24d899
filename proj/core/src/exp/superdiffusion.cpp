#include "mgnn/exp/superdiffusion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "mgnn/exp/generators.hpp"
#include "mgnn/io/mlg.hpp"
#include "mgnn/mlgraph/supra.hpp"
#include "mgnn/tensor/ops.hpp"

namespace mgnn {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

const char* to_string(SplitTag s) { return s == SplitTag::train ? "train" : "test"; }

namespace {

std::size_t grid_divisions(double step) {
  if (!(step > 0.0 && step < 1.0)) throw std::invalid_argument("step must lie in (0, 1)");
  const double k = std::round(1.0 / step);
  if (k < 2.0 || std::abs(k * step - 1.0) > 1e-9) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "step %g does not divide (0, 1) into equal parts", step);
    throw std::invalid_argument(buf);
  }
  return static_cast<std::size_t>(k);
}

}  // namespace

void SuperdiffusionConfig::validate() const {
  grid_divisions(step);
  if (train_per < 1 || test_per < 1) throw std::invalid_argument("per-combination counts must be at least 1");
  if (!(coupling > 0.0) || !std::isfinite(coupling)) throw std::invalid_argument("coupling must be positive");
  if (n_nodes < 2) throw std::invalid_argument("n_nodes must be at least 2");
}

std::vector<std::pair<double, double>> probability_grid(double step) {
  const std::size_t k = grid_divisions(step);
  std::vector<std::pair<double, double>> out;
  for (std::size_t a = 1; a < k; ++a)
    for (std::size_t b = a; b < k; ++b)
      out.emplace_back(static_cast<double>(a) / static_cast<double>(k), static_cast<double>(b) / static_cast<double>(k));
  return out;
}

MultilayerNetwork superdiffusion_network(const SuperdiffusionConfig& cfg, double p1, double p2, std::uint64_t seed) {
  ERMultiplexSpec spec;
  spec.n_nodes = cfg.n_nodes;
  spec.n_layers = 2;
  spec.p = {p1, p2};
  spec.coupling = cfg.coupling;
  spec.seed = seed;
  spec.validate();
  return er_multiplex_generate(spec);
}

std::vector<std::size_t> SuperdiffusionDataset::train_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < instances.size(); ++i)
    if (instances[i].split == SplitTag::train && instances[i].selected) out.push_back(i);
  return out;
}

std::vector<std::size_t> SuperdiffusionDataset::test_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < instances.size(); ++i)
    if (instances[i].split == SplitTag::test) out.push_back(i);
  return out;
}

MultilayerNetwork SuperdiffusionDataset::network(std::size_t i) const {
  const SuperdiffusionInstance& inst = instances.at(i);
  if (inst.path) {
    const fs::path p = fs::path(*inst.path).is_absolute() ? fs::path(*inst.path) : fs::path(root) / *inst.path;
    return read_mlg_file(p.string()).network;
  }
  return superdiffusion_network(config, inst.p1, inst.p2, inst.seed);
}

SuperdiffusionDataset build_superdiffusion_dataset(const SuperdiffusionConfig& cfg) {
  cfg.validate();
  const std::size_t k = grid_divisions(cfg.step);
  SuperdiffusionDataset ds;
  ds.config = cfg;
  for (SplitTag split : {SplitTag::train, SplitTag::test}) {
    const std::size_t per = split == SplitTag::train ? cfg.train_per : cfg.test_per;
    for (std::size_t a = 1; a < k; ++a) {
      for (std::size_t b = a; b < k; ++b) {
        for (std::size_t r = 0; r < per; ++r) {
          SuperdiffusionInstance inst;
          inst.split = split;
          inst.p1 = static_cast<double>(a) / static_cast<double>(k);
          inst.p2 = static_cast<double>(b) / static_cast<double>(k);
          inst.seed = derive_seed(cfg.seed, {a, b, static_cast<std::uint64_t>(split), r});
          ds.instances.push_back(inst);
        }
      }
    }
  }

  parallel_for(ds.instances.size(), cfg.jobs, [&](std::size_t i) {
    auto& inst = ds.instances[i];
    const SuperdiffusionLabel lab = is_superdiffusive(superdiffusion_network(cfg, inst.p1, inst.p2, inst.seed));
    inst.label = lab.label;
    inst.margin = lab.margin;
  });

  std::vector<std::size_t> pos;
  std::vector<std::size_t> neg;
  for (std::size_t i = 0; i < ds.instances.size(); ++i) {
    if (ds.instances[i].split != SplitTag::train) continue;
    (ds.instances[i].label ? pos : neg).push_back(i);
  }
  if (pos.empty()) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "no superdiffusive instance among %zu train networks (coupling %g); the coupling weight is "
                  "probably too small for this grid",
                  neg.size(), cfg.coupling);
    throw std::runtime_error(buf);
  }
  if (neg.empty()) throw std::runtime_error("every train network is superdiffusive; nothing to balance against");

  auto& majority = pos.size() > neg.size() ? pos : neg;
  const std::size_t keep = std::min(pos.size(), neg.size());
  Rng rng(derive_seed(cfg.seed, {0xBA1A'0CEDull}));
  shuffle_in_place(majority, rng);
  for (std::size_t j = keep; j < majority.size(); ++j) ds.instances[majority[j]].selected = false;
  return ds;
}

void materialise_dataset(SuperdiffusionDataset& ds, const std::string& dir) {
  fs::create_directories(fs::path(dir) / "train");
  fs::create_directories(fs::path(dir) / "test");
  std::vector<std::string> rel(ds.instances.size());
  for (std::size_t i = 0; i < ds.instances.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "%06zu.mlg", i);
    rel[i] = std::string(to_string(ds.instances[i].split)) + "/" + name;
  }
  parallel_for(ds.instances.size(), ds.config.jobs, [&](std::size_t i) {
    const auto& inst = ds.instances[i];
    const auto net = superdiffusion_network(ds.config, inst.p1, inst.p2, inst.seed);
    write_mlg_file((fs::path(dir) / rel[i]).string(), make_document(net));
  });
  for (std::size_t i = 0; i < ds.instances.size(); ++i) ds.instances[i].path = rel[i];
  ds.root = dir;
}

void write_manifest(std::ostream& out, const SuperdiffusionDataset& ds) {
  for (const auto& inst : ds.instances) {
    ordered_json j;
    j["split"] = to_string(inst.split);
    j["p1"] = inst.p1;
    j["p2"] = inst.p2;
    j["seed"] = inst.seed;
    j["label"] = inst.label ? 1 : 0;
    j["margin"] = inst.margin;
    j["selected"] = inst.selected;
    j["path"] = inst.path ? ordered_json(*inst.path) : ordered_json(nullptr);
    out << j.dump() << '\n';
  }
}

void write_dataset_info(std::ostream& out, const SuperdiffusionConfig& cfg) {
  ordered_json j;
  j["kind"] = "superdiffusion";
  j["step"] = cfg.step;
  j["train_per"] = cfg.train_per;
  j["test_per"] = cfg.test_per;
  j["coupling"] = cfg.coupling;
  j["n_nodes"] = cfg.n_nodes;
  j["seed"] = cfg.seed;
  out << j.dump(2) << '\n';
}

void write_dataset_dir(SuperdiffusionDataset& ds, const std::string& dir, bool manifest_only) {
  fs::create_directories(dir);
  if (!manifest_only) materialise_dataset(ds, dir);
  std::ofstream info(fs::path(dir) / "dataset.json");
  write_dataset_info(info, ds.config);
  std::ofstream manifest(fs::path(dir) / "manifest.jsonl");
  write_manifest(manifest, ds);
  if (!info || !manifest) throw std::runtime_error("cannot write dataset files under " + dir);
}

SuperdiffusionDataset read_dataset_dir(const std::string& dir) {
  std::ifstream info(fs::path(dir) / "dataset.json");
  if (!info) throw std::runtime_error("cannot open " + (fs::path(dir) / "dataset.json").string());
  SuperdiffusionDataset ds;
  ds.root = dir;
  try {
    const auto j = nlohmann::json::parse(info);
    if (j.value("kind", "") != "superdiffusion") throw std::runtime_error("dataset.json: not a superdiffusion dataset");
    ds.config.step = j.at("step").get<double>();
    ds.config.train_per = j.at("train_per").get<std::size_t>();
    ds.config.test_per = j.at("test_per").get<std::size_t>();
    ds.config.coupling = j.at("coupling").get<double>();
    ds.config.n_nodes = j.at("n_nodes").get<std::size_t>();
    ds.config.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("dataset.json: ") + e.what());
  }
  ds.config.validate();

  std::ifstream manifest(fs::path(dir) / "manifest.jsonl");
  if (!manifest) throw std::runtime_error("cannot open " + (fs::path(dir) / "manifest.jsonl").string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(manifest, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      SuperdiffusionInstance inst;
      const auto split = j.at("split").get<std::string>();
      if (split != "train" && split != "test") throw std::runtime_error("unknown split '" + split + "'");
      inst.split = split == "train" ? SplitTag::train : SplitTag::test;
      inst.p1 = j.at("p1").get<double>();
      inst.p2 = j.at("p2").get<double>();
      inst.seed = j.at("seed").get<std::uint64_t>();
      inst.label = j.at("label").get<int>() != 0;
      inst.margin = j.at("margin").get<double>();
      inst.selected = j.at("selected").get<bool>();
      if (!j.at("path").is_null()) inst.path = j.at("path").get<std::string>();
      ds.instances.push_back(std::move(inst));
    } catch (const std::exception& e) {
      throw std::runtime_error("manifest.jsonl line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return ds;
}

}  // namespace mgnn
