#include "mgnn/train/losses.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mgnn {

namespace {

void check_targets(const Tensor& x, std::span<const double> target, const char* what) {
  if (x.numel() != target.size()) {
    throw std::invalid_argument(std::string(what) + ": " + std::to_string(x.numel()) + " predictions vs " +
                                std::to_string(target.size()) + " targets");
  }
  if (target.empty()) throw std::invalid_argument(std::string(what) + ": empty input");
}

}  // namespace

Tensor weighted_cross_entropy(const Tensor& logits, std::span<const std::uint32_t> labels,
                              std::span<const double> class_weights) {
  if (logits.rank() != 2) throw std::invalid_argument("weighted_cross_entropy: logits must be rank 2");
  const std::size_t n = logits.rows();
  const std::size_t c = logits.cols();
  if (labels.size() != n) throw std::invalid_argument("weighted_cross_entropy: one label per row required");
  if (n == 0) throw std::invalid_argument("weighted_cross_entropy: empty batch");
  if (!class_weights.empty() && class_weights.size() != c) {
    throw std::invalid_argument("weighted_cross_entropy: one weight per class required");
  }
  for (double w : class_weights) {
    if (!(w > 0.0)) throw std::invalid_argument("weighted_cross_entropy: class weights must be positive");
  }

  auto z = logits.values();
  std::vector<double> prob(n * c);
  std::vector<double> w(n);
  double total_w = 0.0;
  double loss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] >= c) {
      throw std::out_of_range("weighted_cross_entropy: label " + std::to_string(labels[i]) + " out of range");
    }
    const double* row = z.data() + i * c;
    const double m = *std::max_element(row, row + c);
    double s = 0.0;
    for (std::size_t k = 0; k < c; ++k) s += std::exp(row[k] - m);
    const double log_s = std::log(s);
    for (std::size_t k = 0; k < c; ++k) prob[i * c + k] = std::exp(row[k] - m - log_s);
    w[i] = class_weights.empty() ? 1.0 : class_weights[labels[i]];
    total_w += w[i];
    loss += w[i] * (log_s + m - row[labels[i]]);
  }
  loss /= total_w;

  std::vector<std::uint32_t> y(labels.begin(), labels.end());
  return Tensor::make_op({}, {loss}, {logits},
                         [logits, prob = std::move(prob), w = std::move(w), y = std::move(y), total_w, n,
                          c](std::span<const double> g) {
                           auto gl = logits.mutable_grad();
                           for (std::size_t i = 0; i < n; ++i) {
                             const double s = g[0] * w[i] / total_w;
                             for (std::size_t k = 0; k < c; ++k) {
                               gl[i * c + k] += s * (prob[i * c + k] - (k == y[i] ? 1.0 : 0.0));
                             }
                           }
                         });
}

std::vector<double> inverse_frequency_weights(std::span<const std::uint32_t> labels, std::size_t n_classes) {
  std::vector<double> count(n_classes, 0.0);
  for (std::uint32_t y : labels) {
    if (y >= n_classes) throw std::out_of_range("inverse_frequency_weights: label out of range");
    count[y] += 1.0;
  }
  std::vector<double> w(n_classes, 1.0);
  const double n = static_cast<double>(labels.size());
  for (std::size_t k = 0; k < n_classes; ++k) {
    if (count[k] > 0.0) w[k] = n / (static_cast<double>(n_classes) * count[k]);
  }
  return w;
}

Tensor mse_loss(const Tensor& pred, std::span<const double> target) {
  check_targets(pred, target, "mse_loss");
  auto p = pred.values();
  const double n = static_cast<double>(target.size());
  std::vector<double> diff(target.size());
  double loss = 0.0;
  for (std::size_t i = 0; i < diff.size(); ++i) {
    diff[i] = p[i] - target[i];
    loss += diff[i] * diff[i];
  }
  return Tensor::make_op({}, {loss / n}, {pred}, [pred, diff = std::move(diff), n](std::span<const double> g) {
    auto gp = pred.mutable_grad();
    for (std::size_t i = 0; i < diff.size(); ++i) gp[i] += g[0] * 2.0 * diff[i] / n;
  });
}

Tensor bce_loss(const Tensor& prob, std::span<const double> target) {
  check_targets(prob, target, "bce_loss");
  constexpr double kEps = 1e-12;
  auto p = prob.values();
  const double n = static_cast<double>(target.size());
  std::vector<double> pc(target.size());
  double loss = 0.0;
  for (std::size_t i = 0; i < pc.size(); ++i) {
    pc[i] = std::clamp(p[i], kEps, 1.0 - kEps);
    loss -= target[i] * std::log(pc[i]) + (1.0 - target[i]) * std::log(1.0 - pc[i]);
  }
  std::vector<double> t(target.begin(), target.end());
  return Tensor::make_op({}, {loss / n}, {prob},
                         [prob, pc = std::move(pc), t = std::move(t), n](std::span<const double> g) {
                           auto gp = prob.mutable_grad();
                           for (std::size_t i = 0; i < pc.size(); ++i) {
                             gp[i] += g[0] * (pc[i] - t[i]) / (pc[i] * (1.0 - pc[i])) / n;
                           }
                         });
}

Tensor bce_with_logits(const Tensor& logits, std::span<const double> target) {
  check_targets(logits, target, "bce_with_logits");
  auto z = logits.values();
  const double n = static_cast<double>(target.size());
  std::vector<double> resid(target.size());
  double loss = 0.0;
  for (std::size_t i = 0; i < resid.size(); ++i) {
    loss += std::max(z[i], 0.0) - z[i] * target[i] + std::log1p(std::exp(-std::abs(z[i])));
    const double s = z[i] >= 0.0 ? 1.0 / (1.0 + std::exp(-z[i])) : std::exp(z[i]) / (1.0 + std::exp(z[i]));
    resid[i] = s - target[i];
  }
  return Tensor::make_op({}, {loss / n}, {logits}, [logits, resid = std::move(resid), n](std::span<const double> g) {
    auto gz = logits.mutable_grad();
    for (std::size_t i = 0; i < resid.size(); ++i) gz[i] += g[0] * resid[i] / n;
  });
}

}  // namespace mgnn
