#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "liecone/algebra.hpp"
#include "liecone/polynomial.hpp"

namespace liecone {

using Bindings = Polynomial::Bindings;

struct BracketRecord {
  int a = 0;
  int b = 0;  // b < c
  int c = 0;
  std::string coeff;  // rational or polynomial in the document parameters

  friend bool operator==(const BracketRecord&, const BracketRecord&) = default;
};

// JSON algebra description:
// {"format_version": 1, "name": ..., "dim": n, "signature": {"p": p, "k": k},
//  "parameters": {"a": "1/2"}, "brackets": [{"a": 3, "b": 1, "c": 4, "coeff": "-1"}],
//  "frame": [2, 1, 3, 4]}
// frame (optional) relabels the basis: new e_i = document e_{frame[i-1]}.
struct AlgebraDocument {
  int format_version = 1;
  std::string name;
  int dim = 0;
  int p = 0;
  int k = 0;
  Bindings parameters;
  std::vector<BracketRecord> brackets;
  std::vector<int> frame;

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

// Throws ParseError naming the offending record, e.g. "brackets[2].b".
AlgebraDocument parse_document(std::string_view text);
std::string serialize_document(const AlgebraDocument& doc);

// Document defaults overridden by the given bindings; unknown names throw UnknownName.
Bindings resolve_bindings(const AlgebraDocument& doc, const Bindings& overrides);

// Structure constants with parameters bound and the frame applied.
// Throws MissingParameter, UnknownName, ParseError.
StructureConstants instantiate(const AlgebraDocument& doc, const Bindings& overrides = {});

AlgebraDocument make_document(const StructureConstants& mu, int p, int k, std::string name = {});

}  // namespace liecone
