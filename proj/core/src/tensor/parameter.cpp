#include "mgnn/tensor/parameter.hpp"

#include <algorithm>
#include <stdexcept>

namespace mgnn {

Parameter& ParameterStore::add(const std::string& name, const Tensor& init) {
  if (name.empty()) throw std::invalid_argument("parameter name must not be empty");
  if (find(name) != nullptr) throw std::invalid_argument("duplicate parameter name '" + name + "'");
  auto v = init.values();
  Parameter p;
  p.name = name;
  p.tensor = Tensor::from_values(init.shape(), std::vector<double>(v.begin(), v.end()), true);
  p.first_moment.assign(v.size(), 0.0);
  p.second_moment.assign(v.size(), 0.0);
  params_.push_back(std::move(p));
  return params_.back();
}

Parameter* ParameterStore::find(const std::string& name) {
  auto it = std::find_if(params_.begin(), params_.end(), [&](const Parameter& p) { return p.name == name; });
  return it == params_.end() ? nullptr : &*it;
}

const Parameter* ParameterStore::find(const std::string& name) const {
  auto it = std::find_if(params_.begin(), params_.end(), [&](const Parameter& p) { return p.name == name; });
  return it == params_.end() ? nullptr : &*it;
}

std::size_t ParameterStore::total_elements() const {
  std::size_t n = 0;
  for (const Parameter& p : params_) n += p.tensor.numel();
  return n;
}

void ParameterStore::zero_grad() {
  for (Parameter& p : params_) p.tensor.zero_grad();
}

ParameterStore::Snapshot ParameterStore::snapshot() const {
  Snapshot s;
  s.reserve(params_.size());
  for (const Parameter& p : params_) s.emplace_back(p.tensor.values().begin(), p.tensor.values().end());
  return s;
}

void ParameterStore::restore(const Snapshot& values) {
  if (values.size() != params_.size()) throw std::invalid_argument("restore: parameter count mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto dst = params_[i].tensor.mutable_values();
    if (values[i].size() != dst.size()) throw std::invalid_argument("restore: size mismatch for " + params_[i].name);
    std::copy(values[i].begin(), values[i].end(), dst.begin());
  }
}

}  // namespace mgnn
