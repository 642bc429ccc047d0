#pragma once

#include "liecone/matrix.hpp"
#include "liecone/tensor.hpp"

namespace liecone {

// g = 2 th^1 th^2 + ... + 2 th^{2p-1} th^{2p} + sum_{j>2p} (th^j)^2 on R^{2p+k}.
class NullFrameMetric {
 public:
  NullFrameMetric() = default;
  NullFrameMetric(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  int dim() const { return 2 * p_ + k_; }

  const Matrix& matrix() const { return g_; }
  const Matrix& inverse() const { return g_; }  // the null-frame metric is its own inverse
  Scalar component(int a, int b) const { return g_(a - 1, b - 1); }

  // The unique index b with g_ab != 0.
  int partner(int a) const;
  bool is_spacelike(int a) const { return a > 2 * p_; }

  Tensor as_tensor() const;  // g_ab, two lower slots

 private:
  int p_ = 0;
  int k_ = 0;
  Matrix g_;
};

NullFrameMetric metric_components(int p, int k);  // throws DimensionMismatch if 2p + k < 3

// Contraction with g (lower) or g^{-1} (raise) in the given 0-based slot.
Tensor lower_index(const Tensor& t, int slot, const NullFrameMetric& g);
Tensor raise_index(const Tensor& t, int slot, const NullFrameMetric& g);
Tensor lower_all(const Tensor& t, const NullFrameMetric& g);
Tensor raise_all(const Tensor& t, const NullFrameMetric& g);

// T_{i...} T^{i...}, every slot paired through the metric.
Scalar self_contraction(const Tensor& t, const NullFrameMetric& g);

}  // namespace liecone
