#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace mgnn::cli;
  CLI::App app{"Multilayer graph learning: spectra, datasets, training and evaluation"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  SpectralArgs spectral;
  auto* sp = app.add_subcommand("spectral", "Print layer and supra algebraic connectivity and the superdiffusion label");
  sp->add_option("file", spectral.file, ".mlg network")->required()->check(CLI::ExistingFile);
  sp->add_option("--coupling", spectral.coupling, "Replace inter-layer edges by a multiplex clique of this weight")
      ->default_str("keep file's edges");

  GenSuperdiffArgs gen;
  auto* gs = app.add_subcommand("gen-superdiff", "Generate the labelled two-layer ER superdiffusion dataset");
  gs->add_option("--step", gen.step, "Grid step for p1 <= p2 in (0, 1)");
  gs->add_option("--train-per", gen.train_per, "Train networks per (p1, p2)")->check(CLI::PositiveNumber);
  gs->add_option("--test-per", gen.test_per, "Test networks per (p1, p2)")->check(CLI::PositiveNumber);
  gs->add_option("--coupling", gen.coupling, "Inter-layer weight used for labelling")->check(CLI::PositiveNumber);
  gs->add_option("--nodes", gen.nodes, "Nodes per layer");
  gs->add_option("--seed", gen.seed, "Base seed");
  gs->add_option("--jobs", gen.jobs, "Worker threads")->check(CLI::PositiveNumber);
  gs->add_option("--out", gen.out, "Output directory")->required();
  gs->add_flag("--manifest-only", gen.manifest_only, "Write dataset.json and manifest.jsonl but no .mlg files [off]");

  GenSyntheticArgs syn;
  auto* gy = app.add_subcommand("gen-synthetic", "Write a synthetic multilayer network as .mlg");
  gy->add_option("kind", syn.kind, "planted-blocks | communities | malaria-like | social-like")
      ->required()
      ->check(CLI::IsMember({"planted-blocks", "communities", "malaria-like", "social-like"}));
  gy->add_option("--out", syn.out, "Output .mlg path")->required();
  gy->add_option("--seed", syn.seed, "Generator seed");
  gy->add_option("--scale", syn.scale, "Size factor for social-like")->check(CLI::Range(1e-6, 1.0));

  TrainArgs train;
  auto* tr = app.add_subcommand("train", "Train a model and write history, metrics, summary and checkpoint");
  tr->add_option("task", train.task, "node-clf | link-pred | graph-clf")
      ->required()
      ->check(CLI::IsMember({"node-clf", "link-pred", "graph-clf"}));
  tr->add_option("--config", train.config, "JSON config; omitted keys take the task's preset")
      ->default_str("task preset")
      ->check(CLI::ExistingFile);
  tr->add_option("--data", train.data, ".mlg file (node-clf, link-pred) or dataset directory (graph-clf)")
      ->required()
      ->check(CLI::ExistingPath);
  tr->add_option("--out", train.out, "Output directory")->required();
  tr->add_option("--seed", train.seed, "Overrides the config seed")->default_str("config value");
  tr->add_option("--jobs", train.jobs, "Threads for graph loading and scoring")->check(CLI::PositiveNumber);

  EvalArgs eval;
  auto* ev = app.add_subcommand("eval", "Evaluate a checkpoint on the test split it was trained against");
  ev->add_option("--checkpoint", eval.checkpoint, "model.ckpt written by train (its .json sidecar is read too)")
      ->required()
      ->check(CLI::ExistingFile);
  ev->add_option("--data", eval.data, "Same data argument as used for training")->required()->check(CLI::ExistingPath);
  ev->add_option("--out", eval.out, "Optional metrics.jsonl path")->default_str("none");
  ev->add_option("--jobs", eval.jobs, "Threads for graph loading and scoring")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sp) return run_spectral(spectral);
    if (*gs) return run_gen_superdiff(gen);
    if (*gy) return run_gen_synthetic(syn);
    if (*tr) return run_train(train);
    if (*ev) return run_eval(eval);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
