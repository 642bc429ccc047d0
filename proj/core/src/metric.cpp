#include "liecone/metric.hpp"

#include "liecone/errors.hpp"

namespace liecone {

NullFrameMetric::NullFrameMetric(int p, int k) : p_(p), k_(k), g_(2 * p + k, 2 * p + k) {
  if (p < 0 || k < 0) throw DimensionMismatch("signature counts must be non-negative");
  for (int i = 0; i < p; ++i) {
    g_(2 * i, 2 * i + 1) = 1;
    g_(2 * i + 1, 2 * i) = 1;
  }
  for (int j = 2 * p; j < 2 * p + k; ++j) g_(j, j) = 1;
}

int NullFrameMetric::partner(int a) const {
  if (a < 1 || a > dim()) throw IndexOutOfRange("metric index out of range");
  if (a > 2 * p_) return a;
  return a % 2 == 1 ? a + 1 : a - 1;
}

Tensor NullFrameMetric::as_tensor() const {
  Tensor t(dim(), {Slot::Lower, Slot::Lower});
  for (int a = 1; a <= dim(); ++a) t.set({a, partner(a)}, 1);
  return t;
}

NullFrameMetric metric_components(int p, int k) {
  if (p < 0 || k < 0 || 2 * p + k < 3) {
    throw DimensionMismatch("null-frame metric needs 2p + k >= 3");
  }
  return NullFrameMetric(p, k);
}

namespace {

Tensor contract_slot(const Tensor& t, int slot, const Matrix& m, Slot from, Slot to) {
  if (slot < 0 || slot >= t.rank()) throw IndexOutOfRange("slot out of range");
  if (t.variance()[slot] != from) throw Error("slot has the wrong variance for this operation");
  if (m.rows() != t.dim()) throw DimensionMismatch("metric and tensor dimensions differ");
  std::vector<Slot> var = t.variance();
  var[slot] = to;
  Tensor out(t.dim(), var);
  for (const auto& [idx, v] : t.components()) {
    int b = idx[slot];
    for (int a = 1; a <= t.dim(); ++a) {
      const Scalar& gab = m(a - 1, b - 1);
      if (gab == 0) continue;
      Tensor::Index j = idx;
      j[slot] = a;
      out.add(j, gab * v);
    }
  }
  return out;
}

}  // namespace

Tensor lower_index(const Tensor& t, int slot, const NullFrameMetric& g) {
  return contract_slot(t, slot, g.matrix(), Slot::Upper, Slot::Lower);
}

Tensor raise_index(const Tensor& t, int slot, const NullFrameMetric& g) {
  return contract_slot(t, slot, g.inverse(), Slot::Lower, Slot::Upper);
}

Tensor lower_all(const Tensor& t, const NullFrameMetric& g) {
  Tensor out = t;
  for (int s = 0; s < t.rank(); ++s) {
    if (out.variance()[s] == Slot::Upper) out = lower_index(out, s, g);
  }
  return out;
}

Tensor raise_all(const Tensor& t, const NullFrameMetric& g) {
  Tensor out = t;
  for (int s = 0; s < t.rank(); ++s) {
    if (out.variance()[s] == Slot::Lower) out = raise_index(out, s, g);
  }
  return out;
}

Scalar self_contraction(const Tensor& t, const NullFrameMetric& g) {
  Tensor low = lower_all(t, g);
  Tensor up = raise_all(t, g);
  Scalar s = 0;
  for (const auto& [idx, v] : low.components()) s += v * up.get(idx);
  return s;
}

}  // namespace liecone
