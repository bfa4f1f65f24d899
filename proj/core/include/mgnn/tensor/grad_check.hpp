#pragma once

#include <functional>
#include <vector>

#include "mgnn/tensor/tensor.hpp"

namespace mgnn {

struct GradCheckResult {
  double max_rel_error = 0.0;
  std::size_t worst_tensor = 0;
  std::size_t worst_index = 0;
  double analytic = 0.0;
  double numeric = 0.0;
};

/// Compares reverse-mode gradients of `loss()` with respect to every tensor
/// in `inputs` against central differences (f(x+h) - f(x-h)) / 2h, one
/// coordinate at a time. Relative error uses max(|a|, |n|, 1e-4) as the
/// denominator. Inputs must be leaves requiring gradients; their existing
/// gradients are cleared.
GradCheckResult grad_check(const std::function<Tensor()>& loss, std::vector<Tensor> inputs, double h = 1e-6);

/// Single-input convenience form: f maps x to a scalar.
double grad_check(const std::function<Tensor(const Tensor&)>& f, Tensor x, double h = 1e-6);

}  // namespace mgnn
