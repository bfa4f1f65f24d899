#include "mgnn/tensor/grad_check.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mgnn {

GradCheckResult grad_check(const std::function<Tensor()>& loss, std::vector<Tensor> inputs, double h) {
  if (!(h >= 1e-7 && h <= 1e-4)) throw std::invalid_argument("grad_check: h must lie in [1e-7, 1e-4]");
  for (Tensor& x : inputs) {
    if (!x.requires_grad() || !x.is_leaf()) throw std::invalid_argument("grad_check: inputs must be leaves requiring grad");
    x.zero_grad();
  }
  loss().backward();
  std::vector<std::vector<double>> analytic;
  for (Tensor& x : inputs) {
    auto g = x.grad();
    analytic.emplace_back(g.begin(), g.end());
    if (analytic.back().empty()) analytic.back().assign(x.numel(), 0.0);
  }

  GradCheckResult result;
  NoGradGuard no_grad;
  for (std::size_t t = 0; t < inputs.size(); ++t) {
    auto values = inputs[t].mutable_values();
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double orig = values[i];
      values[i] = orig + h;
      const double fp = loss().item();
      values[i] = orig - h;
      const double fm = loss().item();
      values[i] = orig;
      const double numeric = (fp - fm) / (2.0 * h);
      const double a = analytic[t][i];
      const double denom = std::max({std::abs(a), std::abs(numeric), 1e-4});
      const double rel = std::abs(a - numeric) / denom;
      if (rel > result.max_rel_error || !std::isfinite(rel)) {
        result = GradCheckResult{rel, t, i, a, numeric};
      }
    }
  }
  return result;
}

double grad_check(const std::function<Tensor(const Tensor&)>& f, Tensor x, double h) {
  return grad_check([&] { return f(x); }, {x}, h).max_rel_error;
}

}  // namespace mgnn
