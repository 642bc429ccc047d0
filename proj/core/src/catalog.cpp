#include "liecone/catalog.hpp"

#include <algorithm>
#include <map>

#include "document_json.hpp"
#include "liecone/errors.hpp"
#include "liecone/geometry.hpp"
#include "liecone/matrix.hpp"
#include "liecone/nullcone.hpp"

namespace liecone {
namespace detail {
std::string_view catalog_json();
}  // namespace detail

namespace catalog {

namespace {

using nlohmann::json;

struct Store {
  std::vector<std::string> names;
  std::map<std::string, json> entries;
};

const Store& store() {
  static const Store s = [] {
    Store out;
    json root = json::parse(detail::catalog_json());
    for (const auto& e : root.at("entries")) {
      std::string name = e.at("name").get<std::string>();
      if (out.entries.count(name)) throw Error("duplicate catalog entry " + name);
      out.names.push_back(name);
      out.entries.emplace(name, e);
    }
    return out;
  }();
  return s;
}

Bindings bindings_from_json(const json& j, const std::string& where) {
  Bindings b;
  for (const auto& [k, v] : j.items()) b[k] = detail::scalar_from_json(v, where + "." + k);
  return b;
}

std::vector<ThetaTerm> terms_from_json(const json& j) {
  std::vector<ThetaTerm> out;
  for (const auto& t : j) {
    const auto& th = t.at("theta");
    const auto& c = t.at("coeff");
    out.push_back({th.at(0).get<int>(), th.at(1).get<int>(),
                   c.is_string() ? c.get<std::string>() : std::to_string(c.get<long>())});
  }
  return out;
}

std::vector<std::string> strings_from_json(const json& j) {
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(v.is_string() ? v.get<std::string>() : std::to_string(v.get<long>()));
  return out;
}

Expected expected_from_json(const json& j, const std::string& where) {
  Expected e;
  if (j.contains("ricci")) e.ricci = terms_from_json(j["ricci"]);
  if (j.contains("killing")) e.killing = terms_from_json(j["killing"]);
  if (j.contains("case_label")) e.case_label = strings_from_json(j["case_label"]);
  if (j.contains("certificate")) e.certificate = strings_from_json(j["certificate"]);
  if (j.contains("jordan_ricci")) e.jordan_ricci = j["jordan_ricci"].get<std::vector<int>>();
  if (j.contains("jordan_killing")) e.jordan_killing = j["jordan_killing"].get<std::vector<int>>();
  auto flag = [&](const char* key, std::optional<bool>& out) {
    if (j.contains(key)) out = j[key].get<bool>();
  };
  flag("flat", e.flat);
  flag("ricci_zero", e.ricci_zero);
  flag("riem_nonzero", e.riem_nonzero);
  flag("nabla_riem_zero", e.nabla_riem_zero);
  flag("ricci_equals_minus_half_killing", e.ricci_equals_minus_half_killing);
  if (j.contains("null_cone")) e.null_cone = j["null_cone"].get<std::string>();
  if (j.contains("ricci_flat_condition")) {
    const auto& rf = j["ricci_flat_condition"];
    for (const auto& b : rf.value("holds", json::array())) {
      e.ricci_flat_holds.push_back(bindings_from_json(b, where + ".ricci_flat_condition.holds"));
    }
    for (const auto& b : rf.value("perturbed", json::array())) {
      e.ricci_flat_perturbed.push_back(bindings_from_json(b, where + ".ricci_flat_condition.perturbed"));
    }
  }
  return e;
}

std::string format_bindings(const Bindings& b) {
  std::string s;
  for (const auto& [k, v] : b) {
    if (!s.empty()) s += ", ";
    s += k + "=" + to_string(v);
  }
  return s;
}

std::string format_weights(const WeightVector& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + to_string(x[i]);
  return s + "]";
}

std::string format_blocks(const std::vector<int>& v) {
  if (v.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "+" : "") + std::to_string(v[i]);
  return s;
}

// Component-level differences of two symmetric 2-tensors (upper triangle).
std::vector<std::string> diff_two_tensors(const std::string& label, const Tensor& expected,
                                          const Tensor& computed) {
  std::vector<std::string> out;
  int n = expected.dim();
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      Scalar e = expected.get({i, j}), c = computed.get({i, j});
      if (e != c) {
        out.push_back(label + "_" + std::to_string(i) + std::to_string(j) + ": expected " +
                      to_string(e) + ", computed " + to_string(c));
      }
    }
  }
  return out;
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "member") return Verdict::Member;
  if (s == "not_member") return Verdict::NotMember;
  if (s == "undetermined") return Verdict::Undetermined;
  throw ParseError("unknown null_cone value \"" + s + "\"");
}

}  // namespace

std::string_view data() { return detail::catalog_json(); }

std::vector<std::string> list() { return store().names; }

Entry get(const std::string& name, const Bindings& overrides) {
  const auto& s = store();
  auto it = s.entries.find(name);
  if (it == s.entries.end()) throw UnknownName("no catalog entry named \"" + name + "\"");
  const json& j = it->second;
  std::string where = "catalog." + name;
  Entry e;
  e.doc = detail::document_from_json(j, where);
  e.bindings = resolve_bindings(e.doc, overrides);
  json expected = j.value("expected", json::object());
  // An instance may carry expected values that replace the entry-level ones at its point.
  for (const auto& inst : j.value("instances", json::array())) {
    Bindings b = bindings_from_json(inst.at("bindings"), where + ".instances");
    e.instances.push_back(b);
    bool here = std::all_of(b.begin(), b.end(), [&](const auto& kv) {
      auto it = e.bindings.find(kv.first);
      return it != e.bindings.end() && it->second == kv.second;
    });
    if (here && inst.contains("expected")) expected.update(inst["expected"]);
  }
  e.expected = expected_from_json(expected, where + ".expected");
  e.notes = j.value("notes", "");
  e.mu = instantiate(e.doc, overrides);
  return e;
}

Tensor theta_tensor(const std::vector<ThetaTerm>& terms, int dim, const Bindings& bindings) {
  Tensor t(dim, {Slot::Lower, Slot::Lower});
  for (const auto& term : terms) {
    Scalar c = Polynomial::parse(term.coeff).evaluate(bindings);
    if (term.i == term.j) {
      t.add({term.i, term.i}, c);
    } else {
      t.add({term.i, term.j}, c / 2);
      t.add({term.j, term.i}, c / 2);
    }
  }
  return t;
}

Report verify(const Entry& entry) {
  Report r;
  r.name = entry.doc.name;
  r.bindings = entry.bindings;
  auto check = [&](bool ok, const std::string& what, const std::string& detail = {}) {
    if (ok) {
      r.passed.push_back(what);
    } else {
      r.mismatches.push_back(detail.empty() ? what : what + ": " + detail);
    }
  };
  const auto& mu = entry.mu;
  const auto& ex = entry.expected;
  NullFrameMetric g = entry.metric();
  int p = g.p(), k = g.k(), n = g.dim();

  bool jacobi = is_lie_algebra(mu);
  check(jacobi, "jacobi identity");
  CurvaturePack pack = compute_curvature(mu, g, 1);

  if (ex.ricci) {
    auto d = diff_two_tensors("Ric", theta_tensor(*ex.ricci, n, entry.bindings), pack.ric);
    for (const auto& m : d) r.mismatches.push_back(m);
    if (d.empty()) r.passed.push_back("ricci tensor");
  }
  if (ex.killing) {
    auto d = diff_two_tensors("B", theta_tensor(*ex.killing, n, entry.bindings), pack.killing);
    for (const auto& m : d) r.mismatches.push_back(m);
    if (d.empty()) r.passed.push_back("killing form");
  }
  auto jordan = [&](const std::optional<std::vector<int>>& want, const Matrix& op,
                    const std::string& label) {
    if (!want) return;
    if (!nilpotency_index(op)) {
      check(false, label + " jordan type", "operator is not nilpotent");
      return;
    }
    auto got = jordan_type(op);
    check(got == *want, label + " jordan type",
          "expected " + format_blocks(*want) + ", computed " + format_blocks(got));
  };
  jordan(ex.jordan_ricci, pack.ricci_op, "ricci");
  jordan(ex.jordan_killing, pack.killing_op, "killing");

  auto flag = [&](const std::optional<bool>& want, bool got, const std::string& label) {
    if (want) {
      check(*want == got, label, std::string("expected ") + (*want ? "true" : "false"));
    }
  };
  flag(ex.flat, pack.riem.is_zero(), "flat");
  flag(ex.ricci_zero, pack.ric.is_zero(), "ricci zero");
  flag(ex.riem_nonzero, !pack.riem.is_zero(), "riemann nonzero");
  flag(ex.nabla_riem_zero, pack.nabla_riem.at(0).is_zero(), "nabla riemann zero");
  flag(ex.ricci_equals_minus_half_killing, pack.ric == pack.killing.scaled(Scalar(-1, 2)),
       "ricci equals -1/2 killing");

  if (ex.case_label) {
    WeightVector want;
    for (const auto& s : *ex.case_label) want.push_back(parse_scalar(s));
    auto got = classify_case(support(mu, p, k), p);
    check(got && *got == want, "case label",
          "expected " + format_weights(want) + ", computed " + (got ? format_weights(*got) : "infeasible"));
  }
  std::optional<Certificate> cert;
  if (ex.certificate || ex.null_cone) cert = membership_with_permutations(mu, g);
  if (ex.certificate) {
    WeightVector want;
    for (const auto& s : *ex.certificate) want.push_back(parse_scalar(s));
    check(cert && cert->x == want && verify_certificate(mu, g, *cert), "certificate",
          "expected " + format_weights(want) + ", computed " +
              (cert ? format_weights(cert->x) : "none in any null-pair frame"));
  }
  if (ex.null_cone) {
    NecessaryReport nec = necessary_conditions(mu, g, pack);
    Verdict got = membership_verdict(cert, nec);
    Verdict want = verdict_from_string(*ex.null_cone);
    check(got == want, "null cone verdict",
          "expected " + to_string(want) + ", computed " + to_string(got));
    if (cert) check(nec.passes(), "necessary conditions on a certified member");
  }
  for (const auto& cond : ex.ricci_flat_holds) {
    Bindings b = entry.bindings;
    for (const auto& [kk, v] : cond) b[kk] = v;
    bool zero = compute_curvature(instantiate(entry.doc, b), g, 0).ric.is_zero();
    check(zero, "ricci flat at " + format_bindings(cond));
  }
  for (const auto& cond : ex.ricci_flat_perturbed) {
    Bindings b = entry.bindings;
    for (const auto& [kk, v] : cond) b[kk] = v;
    bool zero = compute_curvature(instantiate(entry.doc, b), g, 0).ric.is_zero();
    check(!zero, "ricci nonzero at " + format_bindings(cond));
  }
  return r;
}

std::vector<Report> verify_all_instances(const std::string& name) {
  std::vector<Report> out;
  Entry base = get(name);
  out.push_back(verify(base));
  for (const auto& inst : base.instances) out.push_back(verify(get(name, inst)));
  return out;
}

}  // namespace catalog
}  // namespace liecone
