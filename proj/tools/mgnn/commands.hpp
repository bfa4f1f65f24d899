#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace mgnn::cli {

/// Bad arguments or inputs detected before any work starts; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpectralArgs {
  std::string file;
  std::optional<double> coupling;
};

struct GenSuperdiffArgs {
  double step = 0.01;
  std::size_t train_per = 5;
  std::size_t test_per = 10;
  double coupling = 1.0;
  std::size_t nodes = 50;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::string out;
  bool manifest_only = false;
};

struct GenSyntheticArgs {
  std::string kind;
  std::string out;
  std::uint64_t seed = 0;
  double scale = 0.1;
};

struct TrainArgs {
  std::string task;
  std::string config;
  std::string data;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::size_t jobs = 1;
};

struct EvalArgs {
  std::string checkpoint;
  std::string data;
  std::string out;
  std::size_t jobs = 1;
};

int run_spectral(const SpectralArgs& a);
int run_gen_superdiff(const GenSuperdiffArgs& a);
int run_gen_synthetic(const GenSyntheticArgs& a);
int run_train(const TrainArgs& a);
int run_eval(const EvalArgs& a);

}  // namespace mgnn::cli
