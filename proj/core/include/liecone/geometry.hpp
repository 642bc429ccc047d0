#pragma once

#include <map>
#include <string>
#include <vector>

#include "liecone/algebra.hpp"
#include "liecone/matrix.hpp"
#include "liecone/metric.hpp"
#include "liecone/tensor.hpp"

namespace liecone {

// Gamma^a_{bc} = 1/2 g^{ad} (C_{cdb} - C_{dbc} + C_{bdc}), C_{abc} = g_{ad} C^d_{bc}.
// Gamma^a_{bc} is the e_a component of nabla_{e_c} e_b, so Gamma^a_{cb} - Gamma^a_{bc} = C^a_{bc}.
Tensor connection(const StructureConstants& mu, const NullFrameMetric& g);

// Riem^a_{bcd} = Gamma^e_{bd} Gamma^a_{ec} - Gamma^e_{bc} Gamma^a_{ed} - C^e_{cd} Gamma^a_{be}.
Tensor riemann(const Tensor& gamma, const StructureConstants& mu);

// Ric_{bd} = Riem^a_{bad}.
Tensor ricci(const Tensor& riem);

// nabla_c T for a left-invariant tensor; the derivative slot is appended last.
Tensor covariant_derivative(const Tensor& t, const Tensor& gamma);

// [nabla Riem, nabla^2 Riem, ..., nabla^{k_max} Riem].
std::vector<Tensor> nabla_k_riemann(const Tensor& riem, const Tensor& gamma, int k_max = 3);

// Operator form X^a_b = g^{ac} X_{cb} of a two-lower-slot tensor.
Matrix raise_operator(const Tensor& two_form, const NullFrameMetric& g);
Matrix killing_operator(const Tensor& killing, const NullFrameMetric& g);

struct CurvaturePack {
  StructureConstants mu;
  NullFrameMetric metric;
  Tensor gamma;
  Tensor riem;
  Tensor ric;
  Tensor killing;
  Matrix killing_op;
  Matrix ricci_op;
  std::vector<Tensor> nabla_riem;  // nabla^K Riem for K = 1..k_max
};

CurvaturePack compute_curvature(const StructureConstants& mu, const NullFrameMetric& g,
                                int k_max = 1);

// R, RabRab, Kretschmann, tr(K^m) for m = 1..n, and |nabla Riem|^2 when available.
std::map<std::string, Scalar> scalar_invariants(const CurvaturePack& pack);

}  // namespace liecone
