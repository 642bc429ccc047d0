#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecone/document.hpp"
#include "liecone/metric.hpp"
#include "liecone/tensor.hpp"

namespace liecone::catalog {

// One term c * th^i th^j of a symmetric 2-tensor written in symmetric-product notation:
// for i != j the term contributes c/2 to both T_ij and T_ji; for i == j it contributes c to T_ii.
struct ThetaTerm {
  int i = 0;
  int j = 0;
  std::string coeff;  // polynomial in the entry parameters
};

struct Expected {
  std::optional<std::vector<ThetaTerm>> ricci;
  std::optional<std::vector<ThetaTerm>> killing;
  std::optional<std::vector<std::string>> case_label;   // in the entry frame
  std::optional<std::vector<std::string>> certificate;  // from the frame search
  std::optional<std::vector<int>> jordan_ricci;
  std::optional<std::vector<int>> jordan_killing;
  std::optional<bool> flat;
  std::optional<bool> ricci_zero;
  std::optional<bool> riem_nonzero;
  std::optional<bool> nabla_riem_zero;
  std::optional<bool> ricci_equals_minus_half_killing;
  std::optional<std::string> null_cone;  // "member", "not_member", "undetermined"
  std::vector<Bindings> ricci_flat_holds;
  std::vector<Bindings> ricci_flat_perturbed;
};

struct Entry {
  AlgebraDocument doc;
  std::vector<Bindings> instances;  // extra parameter points checked by verify_all
  Expected expected;
  std::string notes;
  Bindings bindings;      // resolved parameter values
  StructureConstants mu;  // instantiated, frame applied

  NullFrameMetric metric() const { return NullFrameMetric(doc.p, doc.k); }
};

// Entry names in file order.
std::vector<std::string> list();

// Throws UnknownName for an unknown entry or parameter, MissingParameter if unbound.
Entry get(const std::string& name, const Bindings& overrides = {});

// Symmetric 2-tensor from theta terms evaluated at the bindings.
Tensor theta_tensor(const std::vector<ThetaTerm>& terms, int dim, const Bindings& bindings);

struct Report {
  std::string name;
  Bindings bindings;
  std::vector<std::string> passed;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Recomputes every expected field of the instantiated entry.
Report verify(const Entry& entry);

// verify at the defaults and at every listed instance.
std::vector<Report> verify_all_instances(const std::string& name);

// The raw data file text.
std::string_view data();

}  // namespace liecone::catalog
