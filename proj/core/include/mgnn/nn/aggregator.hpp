#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mgnn/nn/linear.hpp"

namespace mgnn {

enum class AggregatorKind { sum, mean, concat_linear, mlp };

std::string_view to_string(AggregatorKind kind);
/// Accepts "sum", "mean", "concat_linear", "mlp".
AggregatorKind parse_aggregator(std::string_view name);

struct AggregatorConfig {
  AggregatorKind kind = AggregatorKind::concat_linear;
  /// Number of inputs combined.
  std::size_t arity = 2;
  /// Width of every input.
  std::size_t in_width = 1;
  /// Output width for concat_linear / mlp; sum and mean keep in_width.
  std::size_t out_width = 1;
  /// Hidden widths of the mlp variant.
  std::vector<std::size_t> hidden;

  std::size_t output_width() const {
    return kind == AggregatorKind::sum || kind == AggregatorKind::mean ? in_width : out_width;
  }
};

/// Row-wise combination of `arity` equally shaped inputs.
class Aggregator {
 public:
  Aggregator(const AggregatorConfig& cfg, ParameterStore& store, const std::string& prefix, Rng& rng);

  Tensor forward(const std::vector<Tensor>& inputs) const;
  /// concat_linear / mlp only: inputs already concatenated column-wise.
  Tensor forward_concatenated(const Tensor& x) const;

  const AggregatorConfig& config() const { return cfg_; }

 private:
  AggregatorConfig cfg_;
  std::optional<Linear> linear_;
  std::optional<Mlp> mlp_;
};

/// Collapses the L replicas of every node: h [N*L x F] -> [N x out]. The
/// aggregator sees the replica vectors in layer order (arity must be L).
Tensor replica_aggregate(const Tensor& h, std::size_t n_nodes, std::size_t n_layers, const Aggregator& agg);

}  // namespace mgnn
