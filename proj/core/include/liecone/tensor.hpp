#pragma once

#include <map>
#include <vector>

#include "liecone/scalar.hpp"

namespace liecone {

enum class Slot { Upper, Lower };

// Sparse multi-index array over the rationals with a fixed slot variance.
// Indices are 1-based; zero components are never stored.
class Tensor {
 public:
  using Index = std::vector<int>;

  Tensor() = default;
  Tensor(int dim, std::vector<Slot> variance);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(variance_.size()); }
  const std::vector<Slot>& variance() const { return variance_; }

  Scalar get(const Index& index) const;
  void set(const Index& index, const Scalar& value);
  void add(const Index& index, const Scalar& value);

  const std::map<Index, Scalar>& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }
  std::size_t nonzeros() const { return components_.size(); }

  Tensor scaled(const Scalar& factor) const;
  bool is_symmetric(int slot_a, int slot_b) const;       // 0-based slots
  bool is_antisymmetric(int slot_a, int slot_b) const;

  friend Tensor operator+(const Tensor& a, const Tensor& b);
  friend Tensor operator-(const Tensor& a, const Tensor& b);
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.dim_ == b.dim_ && a.variance_ == b.variance_ && a.components_ == b.components_;
  }

 private:
  void check(const Index& index) const;
  int dim_ = 0;
  std::vector<Slot> variance_;
  std::map<Index, Scalar> components_;
};

Tensor tensor_product(const Tensor& a, const Tensor& b);

}  // namespace liecone
