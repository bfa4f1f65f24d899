#include "mgnn/mlgraph/supra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mgnn/mlgraph/eigen.hpp"

namespace mgnn {

bool SupraMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (values_[i * dim_ + j] != values_[j * dim_ + i]) return false;
    }
  }
  return true;
}

SupraMatrix supra_adjacency(const MultilayerNetwork& net) {
  const std::size_t N = net.n_nodes();
  SupraMatrix m(net.n_replicas(), SupraKind::adjacency);
  for (std::size_t a = 0; a < net.n_layers(); ++a) {
    const LayerGraph& g = net.layer(static_cast<LayerId>(a));
    const std::size_t off = a * N;
    for (const Edge& e : g.edges()) {
      m(off + e.src, off + e.dst) = e.weight;
      if (!g.directed()) m(off + e.dst, off + e.src) = e.weight;
    }
  }
  for (const InterEdge& e : net.inter_edges()) {
    const std::size_t s = flatten(e.src, N);
    const std::size_t d = flatten(e.dst, N);
    m(s, d) = e.weight;
    m(d, s) = e.weight;
  }
  return m;
}

SupraMatrix supra_degree(const MultilayerNetwork& net) {
  const SupraMatrix adj = supra_adjacency(net);
  SupraMatrix deg(adj.dim(), SupraKind::degree);
  for (std::size_t i = 0; i < adj.dim(); ++i) {
    double s = 0.0;
    for (double v : adj.row(i)) s += v;
    deg(i, i) = s;
  }
  return deg;
}

namespace {

void require_undirected(const LayerGraph& g, std::size_t alpha) {
  if (g.directed()) {
    throw std::invalid_argument("Laplacian undefined for directed layer " + std::to_string(alpha));
  }
}

SupraMatrix laplacian_from_adjacency(const SupraMatrix& adj) {
  SupraMatrix lap(adj.dim(), SupraKind::laplacian);
  for (std::size_t i = 0; i < adj.dim(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < adj.dim(); ++j) {
      s += adj(i, j);
      if (i != j) lap(i, j) = -adj(i, j);
    }
    lap(i, i) = s - adj(i, i);
  }
  return lap;
}

}  // namespace

SupraMatrix supra_laplacian(const MultilayerNetwork& net) {
  for (std::size_t a = 0; a < net.n_layers(); ++a) require_undirected(net.layer(static_cast<LayerId>(a)), a);
  return laplacian_from_adjacency(supra_adjacency(net));
}

SupraMatrix layer_laplacian(const MultilayerNetwork& net, LayerId alpha) {
  const LayerGraph& g = net.layer(alpha);
  require_undirected(g, alpha);
  SupraMatrix adj(net.n_nodes(), SupraKind::adjacency);
  for (const Edge& e : g.edges()) {
    adj(e.src, e.dst) = e.weight;
    adj(e.dst, e.src) = e.weight;
  }
  return laplacian_from_adjacency(adj);
}

std::vector<double> spectrum(const SupraMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("spectrum: matrix is not symmetric");
  return symmetric_eigenvalues(m.values(), m.dim());
}

double algebraic_connectivity(const SupraMatrix& laplacian) {
  if (laplacian.dim() < 2) return 0.0;
  return std::max(0.0, spectrum(laplacian)[1]);
}

SuperdiffusionLabel is_superdiffusive(const MultilayerNetwork& net) {
  SuperdiffusionLabel out;
  out.supra_lambda2 = algebraic_connectivity(supra_laplacian(net));
  double best_layer = 0.0;
  for (std::size_t a = 0; a < net.n_layers(); ++a) {
    const double l2 = algebraic_connectivity(layer_laplacian(net, static_cast<LayerId>(a)));
    out.layer_lambda2.push_back(l2);
    best_layer = a == 0 ? l2 : std::max(best_layer, l2);
  }
  // Differences at round-off level (e.g. identical layers, where the supra
  // lambda2 equals the layer lambda2 analytically) count as a tie.
  const double tol = kSuperdiffusionTolerance * std::max(1.0, std::abs(best_layer));
  out.margin = out.supra_lambda2 - best_layer;
  if (std::abs(out.margin) <= tol) out.margin = 0.0;
  out.label = out.margin > 0.0;
  return out;
}

}  // namespace mgnn
