#include <sstream>

#include "liecone_cli/cli.hpp"

namespace liecone::cli {

using nlohmann::json;

namespace {

std::string list_text(const json& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += a[i].is_string() ? a[i].get<std::string>() : a[i].dump();
  }
  return s + "]";
}

std::string yes_no(const json& b) { return b.get<bool>() ? "yes" : "no"; }

void render_header(std::ostream& os, const json& r) {
  if (r.contains("name")) os << "algebra: " << r["name"].get<std::string>() << "\n";
  if (r.contains("dim")) {
    os << "dimension " << r["dim"] << ", signature (p, k) = (" << r["signature"]["p"] << ", "
       << r["signature"]["k"] << ")\n";
  }
  if (r.contains("parameters")) {
    os << "parameters:";
    for (const auto& [k, v] : r["parameters"].items()) os << " " << k << "=" << v.get<std::string>();
    os << "\n";
  }
  if (r.contains("jacobi")) {
    os << "jacobi identity: " << (r["jacobi"]["ok"].get<bool>() ? "holds" : "FAILS") << "\n";
    if (r["jacobi"].contains("defect")) {
      for (const auto& d : r["jacobi"]["defect"]) {
        os << "  J" << list_text(d["index"]) << " = " << d["value"].get<std::string>() << "\n";
      }
    }
  }
}

void render_two_tensor(std::ostream& os, const std::string& label, const json& comps) {
  os << label << ":";
  if (comps.empty()) os << " 0";
  os << "\n";
  for (const auto& c : comps) {
    os << "  (" << c["i"] << "," << c["j"] << ") " << c["value"].get<std::string>() << "\n";
  }
}

void render_certificate(std::ostream& os, const json& c) {
  if (c.is_null()) {
    os << "certificate: none found\n";
    return;
  }
  os << "certificate: x = " << list_text(c["x"]);
  if (c.contains("frame")) os << " in frame " << list_text(c["frame"]);
  os << "\n";
  for (const auto& m : c["margins"]) {
    os << "  b = " << list_text(m["weight"]) << "  x.b = " << m["margin"].get<std::string>() << "\n";
  }
}

}  // namespace

std::string render(const json& r) {
  std::ostringstream os;
  const std::string cmd = r.value("command", "");
  if (r.contains("error")) {
    render_header(os, r);
    os << "error (" << r["error"]["type"].get<std::string>() << "): "
       << r["error"]["message"].get<std::string>() << "\n";
    return os.str();
  }
  if (cmd == "check") {
    render_header(os, r);
    if (r.contains("structure")) {
      const json& s = r["structure"];
      os << "abelian: " << yes_no(s["abelian"]) << "\n"
         << "nilpotent: " << yes_no(s["nilpotent"]) << "\n"
         << "solvable: " << yes_no(s["solvable"]) << "\n"
         << "semisimple: " << yes_no(s["semisimple"]) << "\n"
         << "derived series dims: " << list_text(s["derived_series"]) << "\n"
         << "lower central series dims: " << list_text(s["lower_central_series"]) << "\n";
    }
  } else if (cmd == "curvature") {
    render_header(os, r);
    const json& c = r["curvature"];
    render_two_tensor(os, "Ricci tensor", c["ricci"]);
    render_two_tensor(os, "Killing form", c["killing"]);
    os << "Riemann vanishes: " << yes_no(c["riemann_zero"]) << "\n";
    os << "Ricci vanishes: " << yes_no(c["ricci_zero"]) << "\n";
    for (std::size_t i = 0; i < c["nabla_riemann_zero"].size(); ++i) {
      os << "nabla^" << i + 1 << " Riemann vanishes: " << yes_no(c["nabla_riemann_zero"][i]) << "\n";
    }
    os << "invariants:\n";
    for (const auto& [k, v] : c["invariants"].items()) os << "  " << k << " = " << v.get<std::string>() << "\n";
    for (const auto& [k, v] : c["jordan"].items()) {
      os << "Jordan type of " << k << " operator: " << (v.is_string() ? v.get<std::string>() : list_text(v))
         << "\n";
    }
  } else if (cmd == "certify") {
    render_header(os, r);
    if (r.contains("certify")) {
      const json& c = r["certify"];
      os << "boost-weight support (" << c["support"].size() << " weights):\n";
      for (const auto& b : c["support"]) os << "  " << list_text(b) << "\n";
      os << "case label: " << (c["case_label"].is_null() ? "none" : list_text(c["case_label"])) << "\n";
      render_certificate(os, c["certificate"]);
      const json& n = c["necessary"];
      os << "necessary conditions: " << (n["passes"].get<bool>() ? "satisfied" : "violated") << "\n"
         << "  polynomial invariants vanish: " << yes_no(n["invariants_zero"]) << "\n"
         << "  Killing operator nilpotent: " << yes_no(n["killing_nilpotent"]) << "\n"
         << "  nilpotency index within " << n["index_bound"] << ": " << yes_no(n["index_within_bound"]) << "\n"
         << "  not semisimple: " << yes_no(n["not_semisimple"]) << "\n";
      os << "verdict: " << c["verdict"].get<std::string>() << "\n";
    }
  } else if (cmd == "construct") {
    render_header(os, r);
    if (r.contains("frame")) {
      const json& f = r["frame"];
      os << "frame signature (p, k) = (" << f["signature"]["p"] << ", " << f["signature"]["k"] << ")\n";
      os << "blocks: " << list_text(f["blocks"]) << "\n";
      os << "basis (new e_i as columns):\n";
      for (std::size_t i = 0; i < f["basis"].size(); ++i) {
        os << "  e" << i + 1 << " = " << list_text(f["basis"][i]) << "\n";
      }
      os << "weight assignment: " << list_text(r["weight_assignment"]) << "\n";
      os << "refinement conditions: " << (r["refinement"]["ok"].get<bool>() ? "hold" : "FAIL") << "\n";
      for (const auto& v : r["refinement"]["violations"]) os << "  " << v.get<std::string>() << "\n";
      render_certificate(os, r["certificate"]);
      os << "transformed document:\n" << r["document"].dump(2) << "\n";
    }
  } else if (cmd == "catalog list") {
    for (const auto& e : r["entries"]) {
      os << e["name"].get<std::string>() << "  dim " << e["dim"] << "  (p, k) = (" << e["signature"]["p"] << ", "
         << e["signature"]["k"] << ")\n";
    }
  } else if (cmd == "catalog show") {
    os << "entry: " << r["name"].get<std::string>() << "\n";
    if (r.contains("parameters")) {
      os << "parameters:";
      for (const auto& [k, v] : r["parameters"].items()) os << " " << k << "=" << v.get<std::string>();
      os << "\n";
    }
    os << "structure constants:\n";
    for (const auto& c : r["structure_constants"]) {
      os << "  C^" << c["a"] << "_{" << c["b"] << c["c"] << "} = " << c["value"].get<std::string>() << "\n";
    }
    if (!r["expected"].empty()) os << "expected:\n" << r["expected"].dump(2) << "\n";
    if (r.contains("notes")) os << "notes: " << r["notes"].get<std::string>() << "\n";
  } else if (cmd == "catalog verify") {
    for (const auto& rep : r["reports"]) {
      os << (rep["mismatches"].empty() ? "ok      " : "MISMATCH") << "  " << rep["name"].get<std::string>();
      if (rep.contains("parameters")) {
        for (const auto& [k, v] : rep["parameters"].items()) os << " " << k << "=" << v.get<std::string>();
      }
      os << "  (" << rep["passed"].size() << " checks passed)\n";
      for (const auto& m : rep["mismatches"]) os << "    " << m.get<std::string>() << "\n";
    }
    os << r["mismatch_count"] << " mismatch(es)\n";
  } else if (cmd == "appendixA") {
    os << "cases:";
    for (const auto& c : r["cases"]) os << " " << list_text(c);
    os << "\n";
    for (const auto& g : r["groups"]) {
      os << list_text(g["weight"]) << ":";
      for (const auto& l : g["components"]) os << " " << l.get<std::string>();
      os << "\n";
    }
  } else {
    os << r.dump(2) << "\n";
  }
  return os.str();
}

}  // namespace liecone::cli
