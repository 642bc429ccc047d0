#include "liecone/document.hpp"

#include <array>
#include <set>

#include "document_json.hpp"
#include "liecone/errors.hpp"
#include "liecone/nullcone.hpp"

namespace liecone {

namespace detail {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const nlohmann::json& field(const nlohmann::json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

int int_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

}  // namespace

Scalar scalar_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational written as a string");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

AlgebraDocument document_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  AlgebraDocument doc;
  if (j.contains("format_version")) {
    doc.format_version = int_from_json(j["format_version"], where + ".format_version");
    if (doc.format_version != 1) fail(where + ".format_version", "unsupported version");
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail(where + ".name", "expected a string");
    doc.name = j["name"].get<std::string>();
  }
  doc.dim = int_from_json(field(j, "dim", where), where + ".dim");
  const auto& sig = field(j, "signature", where);
  doc.p = int_from_json(field(sig, "p", where + ".signature"), where + ".signature.p");
  doc.k = int_from_json(field(sig, "k", where + ".signature"), where + ".signature.k");
  if (doc.p < 0 || doc.k < 0 || doc.dim != 2 * doc.p + doc.k) {
    fail(where + ".signature", "dim must equal 2p + k with p, k >= 0");
  }
  if (j.contains("parameters")) {
    const auto& params = j["parameters"];
    if (!params.is_object()) fail(where + ".parameters", "expected an object");
    for (const auto& [name, value] : params.items()) {
      doc.parameters[name] = scalar_from_json(value, where + ".parameters." + name);
    }
  }
  const auto& brackets = field(j, "brackets", where);
  if (!brackets.is_array()) fail(where + ".brackets", "expected an array");
  std::set<std::array<int, 3>> seen;
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    std::string at = where + ".brackets[" + std::to_string(i) + "]";
    const auto& r = brackets[i];
    if (!r.is_object()) fail(at, "expected an object");
    BracketRecord rec;
    rec.a = int_from_json(field(r, "a", at), at + ".a");
    rec.b = int_from_json(field(r, "b", at), at + ".b");
    rec.c = int_from_json(field(r, "c", at), at + ".c");
    for (int v : {rec.a, rec.b, rec.c}) {
      if (v < 1 || v > doc.dim) fail(at, "index " + std::to_string(v) + " outside 1.." + std::to_string(doc.dim));
    }
    if (rec.b >= rec.c) fail(at, "records must satisfy b < c");
    const auto& coeff = field(r, "coeff", at);
    if (coeff.is_number_integer()) {
      rec.coeff = std::to_string(coeff.get<long>());
    } else if (coeff.is_string()) {
      rec.coeff = coeff.get<std::string>();
    } else {
      fail(at + ".coeff", "expected a string");
    }
    Polynomial poly;
    try {
      poly = Polynomial::parse(rec.coeff);
    } catch (const ParseError& e) {
      fail(at + ".coeff", e.what());
    }
    for (const auto& v : poly.variables()) {
      if (!doc.parameters.count(v)) fail(at + ".coeff", "undeclared parameter \"" + v + "\"");
    }
    if (!seen.insert({rec.a, rec.b, rec.c}).second) fail(at, "duplicate record");
    doc.brackets.push_back(rec);
  }
  if (j.contains("frame")) {
    const auto& fr = j["frame"];
    if (!fr.is_array() || static_cast<int>(fr.size()) != doc.dim) {
      fail(where + ".frame", "expected an array of length dim");
    }
    std::set<int> used;
    for (std::size_t i = 0; i < fr.size(); ++i) {
      int v = int_from_json(fr[i], where + ".frame[" + std::to_string(i) + "]");
      if (v < 1 || v > doc.dim || !used.insert(v).second) fail(where + ".frame", "not a permutation");
      doc.frame.push_back(v);
    }
  }
  return doc;
}

nlohmann::json document_to_json(const AlgebraDocument& doc) {
  nlohmann::json j;
  j["format_version"] = doc.format_version;
  if (!doc.name.empty()) j["name"] = doc.name;
  j["dim"] = doc.dim;
  j["signature"] = {{"p", doc.p}, {"k", doc.k}};
  if (!doc.parameters.empty()) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [name, v] : doc.parameters) params[name] = to_string(v);
    j["parameters"] = params;
  }
  nlohmann::json br = nlohmann::json::array();
  for (const auto& r : doc.brackets) br.push_back({{"a", r.a}, {"b", r.b}, {"c", r.c}, {"coeff", r.coeff}});
  j["brackets"] = br;
  if (!doc.frame.empty()) j["frame"] = doc.frame;
  return j;
}

}  // namespace detail

AlgebraDocument parse_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("document: ") + e.what());
  }
  return detail::document_from_json(j, "document");
}

std::string serialize_document(const AlgebraDocument& doc) {
  return detail::document_to_json(doc).dump(2) + "\n";
}

Bindings resolve_bindings(const AlgebraDocument& doc, const Bindings& overrides) {
  Bindings b = doc.parameters;
  for (const auto& [name, v] : overrides) {
    if (!doc.parameters.count(name)) throw UnknownName("unknown parameter \"" + name + "\"");
    b[name] = v;
  }
  return b;
}

StructureConstants instantiate(const AlgebraDocument& doc, const Bindings& overrides) {
  Bindings b = resolve_bindings(doc, overrides);
  StructureConstants mu(doc.dim);
  for (const auto& r : doc.brackets) {
    Scalar v = Polynomial::parse(r.coeff).evaluate(b);
    if (v != 0) mu.set(r.a, r.b, r.c, v);
  }
  if (!doc.frame.empty()) mu = relabel(mu, doc.frame);
  return mu;
}

AlgebraDocument make_document(const StructureConstants& mu, int p, int k, std::string name) {
  if (mu.dim() != 2 * p + k) throw DimensionMismatch("dimension differs from 2p + k");
  AlgebraDocument doc;
  doc.name = std::move(name);
  doc.dim = mu.dim();
  doc.p = p;
  doc.k = k;
  for (const auto& [key, v] : mu.entries()) doc.brackets.push_back({key[0], key[1], key[2], to_string(v)});
  return doc;
}

}  // namespace liecone
