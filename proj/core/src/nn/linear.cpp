#include "mgnn/nn/linear.hpp"

#include <cmath>
#include <stdexcept>

namespace mgnn {

Tensor glorot_uniform(Shape shape, std::size_t fan_in, std::size_t fan_out, Rng& rng) {
  const double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
  std::vector<double> v(shape_numel(shape));
  for (double& x : v) x = (2.0 * uniform01(rng) - 1.0) * limit;
  return Tensor::from_values(std::move(shape), std::move(v));
}

Linear::Linear(std::size_t in, std::size_t out, ParameterStore& store, const std::string& prefix, Rng& rng,
               bool bias)
    : in_(in), out_(out) {
  if (in == 0 || out == 0) throw std::invalid_argument("Linear: zero width");
  weight_ = store.add(prefix + ".weight", glorot_uniform({in, out}, in, out, rng)).tensor;
  if (bias) bias_ = store.add(prefix + ".bias", Tensor::zeros({out})).tensor;
}

Tensor Linear::forward(const Tensor& x) const {
  Tensor y = matmul(x, weight_);
  return bias_.defined() ? add_row_vector(y, bias_) : y;
}

Mlp::Mlp(std::size_t in, const std::vector<std::size_t>& hidden, std::size_t out, ParameterStore& store,
         const std::string& prefix, Rng& rng) {
  std::size_t width = in;
  for (std::size_t k = 0; k < hidden.size(); ++k) {
    layers_.emplace_back(width, hidden[k], store, prefix + "." + std::to_string(k), rng);
    width = hidden[k];
  }
  layers_.emplace_back(width, out, store, prefix + "." + std::to_string(hidden.size()), rng);
}

Tensor Mlp::forward(const Tensor& x) const {
  Tensor h = x;
  for (std::size_t k = 0; k < layers_.size(); ++k) {
    h = layers_[k].forward(h);
    if (k + 1 < layers_.size()) h = relu(h);
  }
  return h;
}

}  // namespace mgnn
