#include "liecone/geometry.hpp"

#include <array>

#include "liecone/errors.hpp"

namespace liecone {

namespace {

// Dense n^3 / n^4 scratch arrays, 1-based index helpers.
struct Dense3 {
  int n;
  Vec data;
  explicit Dense3(int n_) : n(n_), data(static_cast<std::size_t>(n_) * n_ * n_, Scalar(0)) {}
  Scalar& at(int a, int b, int c) {
    return data[(static_cast<std::size_t>(a - 1) * n + (b - 1)) * n + (c - 1)];
  }
};

struct Entry3 {
  int x, y;
  Scalar v;
};

}  // namespace

Tensor connection(const StructureConstants& mu, const NullFrameMetric& g) {
  int n = mu.dim();
  if (g.dim() != n) throw DimensionMismatch("metric and algebra dimensions differ");
  // C_{abc} = g_{ad} C^d_{bc}
  Dense3 low(n);
  for (const auto& [k, v] : mu.entries()) {
    const auto& [d, b, c] = k;
    for (int a = 1; a <= n; ++a) {
      const Scalar& gad = g.component(a, d);
      if (gad == 0) continue;
      low.at(a, b, c) += gad * v;
      low.at(a, c, b) -= gad * v;
    }
  }
  Tensor gamma(n, {Slot::Upper, Slot::Lower, Slot::Lower});
  for (int a = 1; a <= n; ++a) {
    for (int d = 1; d <= n; ++d) {
      const Scalar& gad = g.inverse()(a - 1, d - 1);
      if (gad == 0) continue;
      for (int b = 1; b <= n; ++b) {
        for (int c = 1; c <= n; ++c) {
          Scalar s = low.at(c, d, b) - low.at(d, b, c) + low.at(b, d, c);
          if (s != 0) gamma.add({a, b, c}, gad * s / 2);
        }
      }
    }
  }
  return gamma;
}

Tensor riemann(const Tensor& gamma, const StructureConstants& mu) {
  int n = mu.dim();
  if (gamma.dim() != n) throw DimensionMismatch("connection and algebra dimensions differ");
  // by_first[e] = (a, c, Gamma^a_{ec}); by_last[e] = (a, b, Gamma^a_{be})
  std::vector<std::vector<Entry3>> by_first(n + 1), by_last(n + 1);
  for (const auto& [idx, v] : gamma.components()) {
    by_first[idx[1]].push_back({idx[0], idx[2], v});
    by_last[idx[2]].push_back({idx[0], idx[1], v});
  }
  const std::size_t nn = static_cast<std::size_t>(n);
  Vec dense(nn * nn * nn * nn, Scalar(0));
  auto at = [&](int a, int b, int c, int d) -> Scalar& {
    return dense[((static_cast<std::size_t>(a - 1) * nn + (b - 1)) * nn + (c - 1)) * nn + (d - 1)];
  };
  // Gamma^e_{bd} Gamma^a_{ec} at (a,b,c,d), and minus the same product at (a,b,d,c).
  for (const auto& [idx, v1] : gamma.components()) {
    int e = idx[0], b = idx[1], d = idx[2];
    for (const auto& t : by_first[e]) {
      Scalar prod = v1 * t.v;
      at(t.x, b, t.y, d) += prod;
      at(t.x, b, d, t.y) -= prod;
    }
  }
  // - C^e_{cd} Gamma^a_{be}
  for (const auto& [k, v] : mu.entries()) {
    const auto& [e, c, d] = k;
    for (const auto& t : by_last[e]) {
      Scalar prod = v * t.v;
      at(t.x, t.y, c, d) -= prod;
      at(t.x, t.y, d, c) += prod;
    }
  }
  Tensor riem(n, {Slot::Upper, Slot::Lower, Slot::Lower, Slot::Lower});
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      for (int c = 1; c <= n; ++c) {
        for (int d = 1; d <= n; ++d) {
          const Scalar& v = at(a, b, c, d);
          if (v != 0) riem.set({a, b, c, d}, v);
        }
      }
    }
  }
  return riem;
}

Tensor ricci(const Tensor& riem) {
  Tensor ric(riem.dim(), {Slot::Lower, Slot::Lower});
  for (const auto& [idx, v] : riem.components()) {
    if (idx[0] == idx[2]) ric.add({idx[1], idx[3]}, v);
  }
  return ric;
}

Tensor covariant_derivative(const Tensor& t, const Tensor& gamma) {
  int n = t.dim();
  if (gamma.dim() != n) throw DimensionMismatch("connection and tensor dimensions differ");
  // For an upper slot holding d: + Gamma^a_{dc} (by_lower1[d] -> (a, c)).
  // For a lower slot holding d: - Gamma^d_{bc} (by_upper[d] -> (b, c)).
  std::vector<std::vector<Entry3>> by_lower1(n + 1), by_upper(n + 1);
  for (const auto& [idx, v] : gamma.components()) {
    by_lower1[idx[1]].push_back({idx[0], idx[2], v});
    by_upper[idx[0]].push_back({idx[1], idx[2], v});
  }
  std::vector<Slot> var = t.variance();
  var.push_back(Slot::Lower);
  Tensor out(n, var);
  for (const auto& [idx, v] : t.components()) {
    for (int s = 0; s < t.rank(); ++s) {
      int d = idx[s];
      bool upper = t.variance()[s] == Slot::Upper;
      for (const auto& e : upper ? by_lower1[d] : by_upper[d]) {
        Tensor::Index j = idx;
        j[s] = e.x;
        j.push_back(e.y);
        out.add(j, upper ? Scalar(e.v * v) : Scalar(-e.v * v));
      }
    }
  }
  return out;
}

std::vector<Tensor> nabla_k_riemann(const Tensor& riem, const Tensor& gamma, int k_max) {
  if (k_max < 1) throw Error("k_max must be at least 1");
  std::vector<Tensor> out;
  Tensor cur = riem;
  for (int k = 1; k <= k_max; ++k) {
    cur = covariant_derivative(cur, gamma);
    out.push_back(cur);
  }
  return out;
}

Matrix raise_operator(const Tensor& two_form, const NullFrameMetric& g) {
  int n = g.dim();
  Matrix low(n, n);
  for (const auto& [idx, v] : two_form.components()) low(idx[0] - 1, idx[1] - 1) = v;
  return g.inverse() * low;
}

Matrix killing_operator(const Tensor& killing, const NullFrameMetric& g) {
  return raise_operator(killing, g);
}

CurvaturePack compute_curvature(const StructureConstants& mu, const NullFrameMetric& g, int k_max) {
  CurvaturePack pack;
  pack.mu = mu;
  pack.metric = g;
  pack.gamma = connection(mu, g);
  pack.riem = riemann(pack.gamma, mu);
  pack.ric = ricci(pack.riem);
  pack.killing = killing_form(mu);
  pack.killing_op = killing_operator(pack.killing, g);
  pack.ricci_op = raise_operator(pack.ric, g);
  if (k_max > 0) pack.nabla_riem = nabla_k_riemann(pack.riem, pack.gamma, k_max);
  return pack;
}

std::map<std::string, Scalar> scalar_invariants(const CurvaturePack& pack) {
  const auto& g = pack.metric;
  std::map<std::string, Scalar> inv;
  inv["R"] = pack.ricci_op.trace();
  inv["RabRab"] = self_contraction(pack.ric, g);
  inv["Kretschmann"] = self_contraction(pack.riem, g);
  Matrix km = pack.killing_op;
  for (int m = 1; m <= g.dim(); ++m) {
    inv["tr(K^" + std::to_string(m) + ")"] = km.trace();
    km = km * pack.killing_op;
  }
  if (!pack.nabla_riem.empty()) inv["|nabla Riem|^2"] = self_contraction(pack.nabla_riem[0], g);
  return inv;
}

}  // namespace liecone
