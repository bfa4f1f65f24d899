#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mgnn/mlgraph/multilayer_network.hpp"

namespace mgnn {

enum class SupraKind { adjacency, degree, laplacian };

/// Dense NL x NL operator in row-major order. Row/column index of replica
/// (i, alpha) is flatten({i, alpha}, N).
class SupraMatrix {
 public:
  SupraMatrix(std::size_t dim, SupraKind kind) : dim_(dim), kind_(kind), values_(dim * dim, 0.0) {}

  std::size_t dim() const { return dim_; }
  SupraKind kind() const { return kind_; }

  double operator()(std::size_t i, std::size_t j) const { return values_[i * dim_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return values_[i * dim_ + j]; }

  std::span<const double> values() const { return values_; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(values_).subspan(i * dim_, dim_);
  }

  /// Exact (0 ulp) symmetry check.
  bool is_symmetric() const;

 private:
  std::size_t dim_;
  SupraKind kind_;
  std::vector<double> values_;
};

/// Matricized adjacency tensor. Undirected edges are written symmetrically.
SupraMatrix supra_adjacency(const MultilayerNetwork& net);

/// Diagonal matrix of row strengths of the supra-adjacency.
SupraMatrix supra_degree(const MultilayerNetwork& net);

/// Degree minus adjacency. Rejects networks with directed layers.
SupraMatrix supra_laplacian(const MultilayerNetwork& net);

/// N x N combinatorial Laplacian of one layer. Rejects directed layers.
SupraMatrix layer_laplacian(const MultilayerNetwork& net, LayerId alpha);

/// Ascending spectrum of a symmetric supra-matrix.
std::vector<double> spectrum(const SupraMatrix& m);

/// Second-smallest eigenvalue counting multiplicity (0 for disconnected
/// graphs). Rejects non-symmetric input.
double algebraic_connectivity(const SupraMatrix& laplacian);

/// Margins within this relative band are treated as ties (label false).
inline constexpr double kSuperdiffusionTolerance = 1e-9;

struct SuperdiffusionLabel {
  bool label = false;
  double margin = 0.0;  ///< supra lambda2 minus the largest layer lambda2
  double supra_lambda2 = 0.0;
  std::vector<double> layer_lambda2;
};

/// Superdiffusion criterion: lambda2 of the supra-Laplacian exceeds the
/// lambda2 of every individual layer. The inter-layer coupling must already
/// be present in `net`.
SuperdiffusionLabel is_superdiffusive(const MultilayerNetwork& net);

}  // namespace mgnn
