#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace mgnn {

using Shape = std::vector<std::size_t>;

std::size_t shape_numel(const Shape& shape);
std::string shape_string(const Shape& shape);

namespace detail {
struct Node;
}

/*
  Dense float64 tensor and node of a reverse-mode computation graph.

  A Tensor is a shared handle: copies alias the same values and gradient.
  Results of operations on tensors that require gradients record their
  parents and a backward rule; backward() on a scalar walks the graph once
  in reverse topological order. Gradients of leaves accumulate across
  backward() calls until zero_grad().
*/
class Tensor {
 public:
  /// Receives the gradient of the op's output; accumulates into parents.
  using BackwardFn = std::function<void(std::span<const double> grad_out)>;

  Tensor() = default;

  static Tensor zeros(Shape shape, bool requires_grad = false);
  static Tensor full(Shape shape, double value, bool requires_grad = false);
  static Tensor from_values(Shape shape, std::vector<double> values, bool requires_grad = false);
  static Tensor scalar(double value, bool requires_grad = false);

  /// Builds an op result. The graph edge is only recorded when gradient
  /// recording is enabled and some parent requires a gradient.
  static Tensor make_op(Shape shape, std::vector<double> values, std::vector<Tensor> parents,
                        BackwardFn backward);

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const;
  std::size_t rank() const { return shape().size(); }
  std::size_t numel() const;
  /// Extents of a rank-2 tensor; throws for other ranks.
  std::size_t rows() const;
  std::size_t cols() const;

  std::span<const double> values() const;
  /// Direct write access; intended for leaves (initialisation, optimisers).
  /// Tensor is a handle, so constness does not propagate to the values.
  std::span<double> mutable_values() const;
  double item() const;
  double at(std::size_t i, std::size_t j) const;

  bool requires_grad() const;
  bool is_leaf() const;
  /// Empty span until a gradient has been accumulated.
  std::span<const double> grad() const;
  /// Allocates a zero gradient on first use.
  std::span<double> mutable_grad() const;
  void accumulate_grad(std::span<const double> g) const;
  void zero_grad() const;

  /// Reverse-mode sweep from this scalar. Throws std::invalid_argument for
  /// non-scalar tensors.
  void backward() const;

  /// Same values, no graph, no gradient.
  Tensor detach() const;

  friend bool same_node(const Tensor& a, const Tensor& b) { return a.node_ == b.node_; }

 private:
  explicit Tensor(std::shared_ptr<detail::Node> node) : node_(std::move(node)) {}
  std::shared_ptr<detail::Node> node_;
};

/// Disables graph recording on the current thread while alive.
class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool previous_;
};

bool grad_enabled();

}  // namespace mgnn
