#include "liecone/boostweight.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "liecone/errors.hpp"

namespace liecone {

BoostWeight basis_weight(int a, int p, int k) {
  if (a < 1 || a > 2 * p + k) throw IndexOutOfRange("basis index out of range");
  BoostWeight w(p, 0);
  if (a <= 2 * p) w[(a - 1) / 2] = a % 2 == 1 ? 1 : -1;
  return w;
}

BoostWeight component_weight(const std::vector<int>& index, const std::vector<Slot>& variance,
                             int p, int k) {
  if (index.size() != variance.size()) throw DimensionMismatch("index length differs from rank");
  BoostWeight w(p, 0);
  for (std::size_t s = 0; s < index.size(); ++s) {
    int a = index[s];
    if (a < 1 || a > 2 * p + k) throw IndexOutOfRange("basis index out of range");
    if (a > 2 * p) continue;
    int sign = a % 2 == 1 ? 1 : -1;
    if (variance[s] == Slot::Lower) sign = -sign;
    w[(a - 1) / 2] += sign;
  }
  return w;
}

BoostWeight structure_weight(int a, int b, int c, int p, int k) {
  return component_weight({a, b, c}, {Slot::Upper, Slot::Lower, Slot::Lower}, p, k);
}

namespace {

void check_dim(int dim, int p, int k) {
  if (dim != 2 * p + k) throw DimensionMismatch("dimension differs from 2p + k");
}

}  // namespace

std::map<BoostWeight, Tensor> decompose(const Tensor& t, int p, int k) {
  check_dim(t.dim(), p, k);
  std::map<BoostWeight, Tensor> parts;
  for (const auto& [idx, v] : t.components()) {
    auto w = component_weight(idx, t.variance(), p, k);
    auto it = parts.find(w);
    if (it == parts.end()) it = parts.emplace(w, Tensor(t.dim(), t.variance())).first;
    it->second.set(idx, v);
  }
  return parts;
}

std::map<BoostWeight, StructureConstants> decompose(const StructureConstants& mu, int p, int k) {
  check_dim(mu.dim(), p, k);
  std::map<BoostWeight, StructureConstants> parts;
  for (const auto& [key, v] : mu.entries()) {
    auto w = structure_weight(key[0], key[1], key[2], p, k);
    auto it = parts.find(w);
    if (it == parts.end()) it = parts.emplace(w, StructureConstants(mu.dim())).first;
    it->second.set(key[0], key[1], key[2], v);
  }
  return parts;
}

BoostSupport support(const Tensor& t, int p, int k) {
  check_dim(t.dim(), p, k);
  BoostSupport s;
  for (const auto& [idx, v] : t.components()) s.insert(component_weight(idx, t.variance(), p, k));
  return s;
}

BoostSupport support(const StructureConstants& mu, int p, int k) {
  check_dim(mu.dim(), p, k);
  BoostSupport s;
  for (const auto& [key, v] : mu.entries()) s.insert(structure_weight(key[0], key[1], key[2], p, k));
  return s;
}

bool check_delta_bounds(const BoostSupport& s, BoundKind kind, int k) {
  for (const auto& b : s) {
    int l1 = 0, sum = 0, mx = 0;
    for (int v : b) {
      l1 += std::abs(v);
      sum += v;
      mx = std::max(mx, std::abs(v));
    }
    switch (kind) {
      case BoundKind::Riemann:
        if (l1 > 4 || mx > 2) return false;
        break;
      case BoundKind::Ricci:
        if (l1 > 2) return false;
        break;
      case BoundKind::Odd:
        if (l1 > 3) return false;
        break;
    }
    if (k == 0) {
      bool even = sum % 2 == 0;
      if (kind == BoundKind::Odd ? even : !even) return false;
    }
  }
  return true;
}

bool check_delta_bounds(const Tensor& t, BoundKind kind, int p, int k) {
  return check_delta_bounds(support(t, p, k), kind, k);
}

Scalar dot(const WeightVector& x, const BoostWeight& b) {
  if (x.size() != b.size()) throw DimensionMismatch("weight vector length differs from p");
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * b[i];
  return s;
}

namespace {

Scalar boost_factor(const WeightVector& x, const BoostWeight& b, const Scalar& lambda) {
  Scalar e = dot(x, b);
  if (!is_integer(e)) throw NonIntegralExponent("boost exponent " + to_string(e) + " is not an integer");
  return power(lambda, e.get_num().get_si());
}

}  // namespace

Tensor boost_act(const Tensor& t, const WeightVector& x, const Scalar& lambda, int p, int k) {
  if (lambda == 0) throw Error("boost parameter must be nonzero");
  check_dim(t.dim(), p, k);
  Tensor out(t.dim(), t.variance());
  for (const auto& [idx, v] : t.components()) {
    out.set(idx, v * boost_factor(x, component_weight(idx, t.variance(), p, k), lambda));
  }
  return out;
}

StructureConstants boost_act(const StructureConstants& mu, const WeightVector& x,
                             const Scalar& lambda, int p, int k) {
  if (lambda == 0) throw Error("boost parameter must be nonzero");
  check_dim(mu.dim(), p, k);
  StructureConstants out(mu.dim());
  for (const auto& [key, v] : mu.entries()) {
    auto w = structure_weight(key[0], key[1], key[2], p, k);
    out.set(key[0], key[1], key[2], v * boost_factor(x, w, lambda));
  }
  return out;
}

Matrix boost_matrix(const WeightVector& x, const Scalar& lambda, int p, int k) {
  if (static_cast<int>(x.size()) != p) throw DimensionMismatch("weight vector length differs from p");
  if (lambda == 0) throw Error("boost parameter must be nonzero");
  Vec d(2 * p + k, Scalar(1));
  for (int i = 0; i < p; ++i) {
    if (!is_integer(x[i])) throw NonIntegralExponent("boost matrix needs integral weights");
    long e = x[i].get_num().get_si();
    d[2 * i] = power(lambda, -e);
    d[2 * i + 1] = power(lambda, e);
  }
  return Matrix::diagonal(d);
}

std::pair<WeightVector, std::vector<int>> canonicalize_weights(const WeightVector& x) {
  for (const auto& v : x) {
    if (v < 0) throw NegativeWeight("weight " + to_string(v) + " is negative");
  }
  std::vector<int> perm(x.size());
  std::iota(perm.begin(), perm.end(), 1);
  std::stable_sort(perm.begin(), perm.end(), [&](int i, int j) { return x[i - 1] > x[j - 1]; });
  WeightVector sorted;
  for (int i : perm) sorted.push_back(x[i - 1]);
  return {sorted, perm};
}

}  // namespace liecone
