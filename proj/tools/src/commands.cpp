#include <algorithm>

#include "liecone/algebra.hpp"
#include "liecone/boostweight.hpp"
#include "liecone/catalog.hpp"
#include "liecone/construct.hpp"
#include "liecone/errors.hpp"
#include "liecone/geometry.hpp"
#include "liecone/nullcone.hpp"
#include "liecone_cli/cli.hpp"

namespace liecone::cli {

using nlohmann::json;

namespace {

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json bindings_json(const Bindings& b) {
  json j = json::object();
  for (const auto& [k, v] : b) j[k] = to_string(v);
  return j;
}

json dims_json(const std::vector<Subspace>& chain) {
  json a = json::array();
  for (const auto& s : chain) a.push_back(s.dim());
  return a;
}

json jordan_json(const Matrix& op) {
  if (!nilpotency_index(op)) return "not nilpotent";
  return jordan_type(op);
}

json header(const std::string& command, const AlgebraDocument& doc, const Bindings& params) {
  json j;
  j["command"] = command;
  if (!doc.name.empty()) j["name"] = doc.name;
  j["dim"] = doc.dim;
  j["signature"] = {{"p", doc.p}, {"k", doc.k}};
  Bindings b = resolve_bindings(doc, params);
  if (!b.empty()) j["parameters"] = bindings_json(b);
  return j;
}

// Adds the Jacobi block; returns false when the identity fails.
bool jacobi_block(json& j, const StructureConstants& mu) {
  Tensor defect = jacobi_defect(mu);
  j["jacobi"]["ok"] = defect.is_zero();
  if (!defect.is_zero()) {
    json comps = json::array();
    for (const auto& [idx, v] : defect.components()) {
      if (idx[1] < idx[2] && idx[2] < idx[3]) comps.push_back({{"index", idx}, {"value", to_string(v)}});
    }
    j["jacobi"]["defect"] = comps;
  }
  return defect.is_zero();
}

json weights_json(const BoostSupport& s) {
  json a = json::array();
  for (const auto& b : s) a.push_back(b);
  return a;
}

json certificate_json(const Certificate& c) {
  json j;
  if (!c.frame.empty()) j["frame"] = c.frame;
  j["x"] = vec_json(c.x);
  json m = json::array();
  for (const auto& mg : c.margins) m.push_back({{"weight", mg.weight}, {"margin", to_string(mg.value)}});
  j["margins"] = m;
  return j;
}

json necessary_json(const NecessaryReport& r) {
  json j;
  json inv = json::object();
  for (const auto& [k, v] : r.invariants) inv[k] = to_string(v);
  j["invariants"] = inv;
  j["invariants_zero"] = r.invariants_zero;
  j["killing_nilpotent"] = r.killing_nilpotent;
  if (r.killing_index) j["killing_index"] = *r.killing_index;
  j["index_bound"] = r.index_bound;
  j["index_within_bound"] = r.index_within_bound;
  j["not_semisimple"] = r.not_semisimple;
  j["passes"] = r.passes();
  return j;
}

}  // namespace

json two_tensor_json(const Tensor& t) {
  json a = json::array();
  for (const auto& [idx, v] : t.components()) {
    if (idx[0] <= idx[1]) a.push_back({{"i", idx[0]}, {"j", idx[1]}, {"value", to_string(v)}});
  }
  return a;
}

std::string error_kind(const std::exception& e) {
#define LIECONE_KIND(T) \
  if (dynamic_cast<const T*>(&e)) return #T;
  LIECONE_KIND(DimensionMismatch)
  LIECONE_KIND(IndexOutOfRange)
  LIECONE_KIND(SingularMatrix)
  LIECONE_KIND(NotNilpotent)
  LIECONE_KIND(NotLieAlgebra)
  LIECONE_KIND(ParseError)
  LIECONE_KIND(MissingParameter)
  LIECONE_KIND(UnknownName)
  LIECONE_KIND(NotSolvable)
  LIECONE_KIND(NotCompletelySolvable)
  LIECONE_KIND(IrrationalEigenvalue)
  LIECONE_KIND(PreconditionFailed)
  LIECONE_KIND(InvalidCertificate)
  LIECONE_KIND(NonIntegralExponent)
  LIECONE_KIND(NegativeWeight)
  LIECONE_KIND(Error)
#undef LIECONE_KIND
  return "Exception";
}

Result cmd_check(const AlgebraDocument& doc, const Bindings& params) {
  StructureConstants mu = instantiate(doc, params);
  Result r{header("check", doc, params)};
  if (!jacobi_block(r.report, mu)) {
    r.exit_code = kJacobiFailure;
    return r;
  }
  auto derived = derived_series(mu);
  auto lower = lower_central_series(mu);
  json& s = r.report["structure"];
  s["abelian"] = is_abelian(mu);
  s["nilpotent"] = lower.back().dim() == 0;
  s["solvable"] = derived.back().dim() == 0;
  s["semisimple"] = is_semisimple(mu);
  s["derived_series"] = dims_json(derived);
  s["lower_central_series"] = dims_json(lower);
  return r;
}

Result cmd_curvature(const AlgebraDocument& doc, const Bindings& params, int max_nabla) {
  StructureConstants mu = instantiate(doc, params);
  Result r{header("curvature", doc, params)};
  if (!jacobi_block(r.report, mu)) r.exit_code = kJacobiFailure;
  NullFrameMetric g(doc.p, doc.k);
  CurvaturePack pack = compute_curvature(mu, g, std::max(max_nabla, 1));
  json& c = r.report["curvature"];
  c["ricci"] = two_tensor_json(pack.ric);
  c["killing"] = two_tensor_json(pack.killing);
  c["riemann_zero"] = pack.riem.is_zero();
  c["ricci_zero"] = pack.ric.is_zero();
  json nz = json::array();
  for (int kk = 0; kk < max_nabla; ++kk) nz.push_back(pack.nabla_riem[kk].is_zero());
  c["nabla_riemann_zero"] = nz;
  json inv = json::object();
  for (const auto& [name, v] : scalar_invariants(pack)) inv[name] = to_string(v);
  c["invariants"] = inv;
  c["jordan"] = {{"ricci", jordan_json(pack.ricci_op)}, {"killing", jordan_json(pack.killing_op)}};
  return r;
}

Result cmd_certify(const AlgebraDocument& doc, const Bindings& params, bool lenient) {
  StructureConstants mu = instantiate(doc, params);
  Result r{header("certify", doc, params)};
  if (!jacobi_block(r.report, mu)) {
    r.exit_code = kJacobiFailure;
    return r;
  }
  NullFrameMetric g(doc.p, doc.k);
  BoostSupport s = support(mu, doc.p, doc.k);
  json& c = r.report["certify"];
  c["support"] = weights_json(s);
  auto label = classify_case(s, doc.p);
  c["case_label"] = label ? vec_json(*label) : json(nullptr);
  auto cert = membership_with_permutations(mu, g);
  c["certificate"] = cert ? certificate_json(*cert) : json(nullptr);
  CurvaturePack pack = compute_curvature(mu, g, 1);
  NecessaryReport nec = necessary_conditions(mu, g, pack);
  c["necessary"] = necessary_json(nec);
  Verdict v = membership_verdict(cert, nec);
  c["verdict"] = to_string(v);
  if (v == Verdict::Undetermined && !lenient) r.exit_code = kUndetermined;
  return r;
}

Result cmd_construct(const AlgebraDocument& doc, const Bindings& params, const std::string& mode) {
  StructureConstants mu = instantiate(doc, params);
  Result r{header("construct", doc, params)};
  r.report["mode"] = mode;
  if (!jacobi_block(r.report, mu)) {
    r.exit_code = kJacobiFailure;
    return r;
  }
  FrameAssignment f;
  try {
    if (mode == "nilpotent") {
      f = nilpotent_frame(mu);
    } else if (mode == "csolvable") {
      f = csolvable_frame(mu);
    } else {
      throw Error("unknown mode \"" + mode + "\" (expected nilpotent or csolvable)");
    }
  } catch (const Error& e) {
    r.report["error"] = {{"type", error_kind(e)}, {"message", e.what()}};
    r.exit_code = kError;
    return r;
  }
  json& fr = r.report["frame"];
  fr["signature"] = {{"p", f.p}, {"k", f.k}};
  fr["blocks"] = f.blocks;
  json cols = json::array();
  for (int c = 0; c < f.basis.cols(); ++c) cols.push_back(vec_json(f.basis.column(c)));
  fr["basis"] = cols;
  RefinementResult ref = refinement_check(mu, f);
  r.report["refinement"] = {{"ok", ref.ok}, {"violations", ref.violations}};
  WeightVector w = expand_block_weights(weight_assignment(static_cast<int>(f.blocks.size())), f.blocks);
  r.report["weight_assignment"] = vec_json(w);
  auto cert = case_feasibility(support(f.mu, f.p, f.k), f.p);
  r.report["certificate"] = cert ? certificate_json(*cert) : json(nullptr);
  AlgebraDocument out = make_document(f.mu, f.p, f.k, doc.name.empty() ? "" : doc.name + "-" + mode);
  r.report["document"] = json::parse(serialize_document(out));
  return r;
}

Result cmd_catalog_list() {
  Result r;
  r.report["command"] = "catalog list";
  json a = json::array();
  for (const auto& name : catalog::list()) {
    auto e = catalog::get(name);
    a.push_back({{"name", name}, {"dim", e.doc.dim}, {"signature", {{"p", e.doc.p}, {"k", e.doc.k}}}});
  }
  r.report["entries"] = a;
  return r;
}

namespace {

json theta_json(const std::vector<catalog::ThetaTerm>& terms) {
  json a = json::array();
  for (const auto& t : terms) a.push_back({{"theta", {t.i, t.j}}, {"coeff", t.coeff}});
  return a;
}

}  // namespace

Result cmd_catalog_show(const std::string& name, const Bindings& params) {
  auto e = catalog::get(name, params);
  Result r;
  r.report["command"] = "catalog show";
  r.report["name"] = name;
  r.report["document"] = json::parse(serialize_document(e.doc));
  if (!e.bindings.empty()) r.report["parameters"] = bindings_json(e.bindings);
  json sc = json::array();
  for (const auto& [key, v] : e.mu.entries()) {
    sc.push_back({{"a", key[0]}, {"b", key[1]}, {"c", key[2]}, {"value", to_string(v)}});
  }
  r.report["structure_constants"] = sc;
  json ex = json::object();
  if (e.expected.ricci) ex["ricci"] = theta_json(*e.expected.ricci);
  if (e.expected.killing) ex["killing"] = theta_json(*e.expected.killing);
  if (e.expected.case_label) ex["case_label"] = *e.expected.case_label;
  if (e.expected.certificate) ex["certificate"] = *e.expected.certificate;
  if (e.expected.null_cone) ex["null_cone"] = *e.expected.null_cone;
  r.report["expected"] = ex;
  if (!e.notes.empty()) r.report["notes"] = e.notes;
  return r;
}

Result cmd_catalog_verify(const std::vector<std::string>& names, const Bindings& params) {
  Result r;
  r.report["command"] = "catalog verify";
  json reports = json::array();
  int mismatches = 0;
  auto add = [&](const catalog::Report& rep) {
    mismatches += static_cast<int>(rep.mismatches.size());
    json j{{"name", rep.name}, {"passed", rep.passed}, {"mismatches", rep.mismatches}};
    if (!rep.bindings.empty()) j["parameters"] = bindings_json(rep.bindings);
    reports.push_back(j);
  };
  for (const auto& name : names) {
    if (params.empty()) {
      for (const auto& rep : catalog::verify_all_instances(name)) add(rep);
    } else {
      add(catalog::verify(catalog::get(name, params)));
    }
  }
  r.report["reports"] = reports;
  r.report["mismatch_count"] = mismatches;
  if (mismatches > 0) r.exit_code = kMismatch;
  return r;
}

Result cmd_appendix_a(const std::optional<std::vector<std::string>>& case_weights) {
  Result r;
  r.report["command"] = "appendixA";
  std::vector<WeightVector> cases;
  if (case_weights) {
    WeightVector x;
    for (const auto& s : *case_weights) x.push_back(parse_scalar(s));
    cases.push_back(canonicalize_weights(x).first);
  } else {
    cases = {{Scalar(3), Scalar(1)}, {Scalar(3), Scalar(2)}};
  }
  json cs = json::array();
  for (const auto& x : cases) cs.push_back(vec_json(x));
  r.report["cases"] = cs;
  json groups = json::array();
  for (const auto& g : symbolic_allowed_table(cases, 2)) {
    groups.push_back({{"weight", g.weight}, {"components", g.labels}});
  }
  r.report["groups"] = groups;
  return r;
}

}  // namespace liecone::cli
