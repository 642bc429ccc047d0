#include "liecone/tensor.hpp"

#include <algorithm>

#include "liecone/errors.hpp"

namespace liecone {

Tensor::Tensor(int dim, std::vector<Slot> variance) : dim_(dim), variance_(std::move(variance)) {}

void Tensor::check(const Index& index) const {
  if (index.size() != variance_.size()) throw DimensionMismatch("tensor index has wrong rank");
  for (int i : index) {
    if (i < 1 || i > dim_) throw IndexOutOfRange("tensor index out of range");
  }
}

Scalar Tensor::get(const Index& index) const {
  check(index);
  auto it = components_.find(index);
  return it == components_.end() ? Scalar(0) : it->second;
}

void Tensor::set(const Index& index, const Scalar& value) {
  check(index);
  if (value == 0) {
    components_.erase(index);
  } else {
    components_[index] = value;
  }
}

void Tensor::add(const Index& index, const Scalar& value) {
  if (value == 0) return;
  check(index);
  auto [it, inserted] = components_.emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) components_.erase(it);
  }
}

Tensor Tensor::scaled(const Scalar& factor) const {
  Tensor out(dim_, variance_);
  if (factor == 0) return out;
  for (const auto& [idx, v] : components_) out.components_.emplace(idx, v * factor);
  return out;
}

bool Tensor::is_symmetric(int slot_a, int slot_b) const {
  for (const auto& [idx, v] : components_) {
    Index swapped = idx;
    std::swap(swapped[slot_a], swapped[slot_b]);
    if (get(swapped) != v) return false;
  }
  return true;
}

bool Tensor::is_antisymmetric(int slot_a, int slot_b) const {
  for (const auto& [idx, v] : components_) {
    Index swapped = idx;
    std::swap(swapped[slot_a], swapped[slot_b]);
    if (get(swapped) != -v) return false;
  }
  return true;
}

Tensor operator+(const Tensor& a, const Tensor& b) {
  if (a.dim_ != b.dim_ || a.variance_ != b.variance_) throw DimensionMismatch("tensor sum shape mismatch");
  Tensor out = a;
  for (const auto& [idx, v] : b.components_) out.add(idx, v);
  return out;
}

Tensor operator-(const Tensor& a, const Tensor& b) { return a + b.scaled(-1); }

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("tensor product dimension mismatch");
  std::vector<Slot> var = a.variance();
  var.insert(var.end(), b.variance().begin(), b.variance().end());
  Tensor out(a.dim(), var);
  for (const auto& [ia, va] : a.components()) {
    for (const auto& [ib, vb] : b.components()) {
      Tensor::Index idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.set(idx, va * vb);
    }
  }
  return out;
}

}  // namespace liecone
