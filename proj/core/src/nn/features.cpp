#include "mgnn/nn/features.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgnn {

std::string_view to_string(InputFeatures f) {
  switch (f) {
    case InputFeatures::ones: return "ones";
    case InputFeatures::degree: return "degree";
    case InputFeatures::provided: return "provided";
  }
  return "?";
}

InputFeatures parse_input_features(std::string_view name) {
  if (name == "ones") return InputFeatures::ones;
  if (name == "degree") return InputFeatures::degree;
  if (name == "provided") return InputFeatures::provided;
  throw std::invalid_argument("unknown input features '" + std::string(name) + "'");
}

std::size_t input_width(InputFeatures mode, const MultilayerNetwork& net) {
  switch (mode) {
    case InputFeatures::ones: return 1;
    case InputFeatures::degree: return 4;
    case InputFeatures::provided:
      if (!net.features()) throw std::invalid_argument("network has no feature matrix");
      return net.features()->cols;
  }
  return 0;
}

Tensor input_features(const MultilayerNetwork& net, InputFeatures mode) {
  const std::size_t rows = net.n_replicas();
  const std::size_t n = net.n_nodes();
  switch (mode) {
    case InputFeatures::ones:
      return Tensor::full({rows, 1}, 1.0);
    case InputFeatures::degree: {
      std::vector<double> inter(rows, 0.0);
      for (const InterEdge& e : net.inter_edges()) {
        inter[flatten(e.src, n)] += 1.0;
        inter[flatten(e.dst, n)] += 1.0;
      }
      std::vector<double> v(rows * 4);
      for (std::size_t a = 0; a < net.n_layers(); ++a) {
        const LayerGraph& g = net.layer(static_cast<LayerId>(a));
        for (NodeId i = 0; i < n; ++i) {
          const std::size_t r = a * n + i;
          v[r * 4 + 0] = 1.0;
          v[r * 4 + 1] = std::log1p(static_cast<double>(g.in_degree(i)));
          v[r * 4 + 2] = std::log1p(static_cast<double>(g.out_degree(i)));
          v[r * 4 + 3] = std::log1p(inter[r]);
        }
      }
      return Tensor::from_values({rows, 4}, std::move(v));
    }
    case InputFeatures::provided: {
      if (!net.features()) throw std::invalid_argument("network has no feature matrix");
      const FeatureMatrix& f = *net.features();
      return Tensor::from_values({f.rows, f.cols}, f.values);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace mgnn
