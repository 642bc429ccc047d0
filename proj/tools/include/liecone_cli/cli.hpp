#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "liecone/document.hpp"
#include "liecone/tensor.hpp"

namespace liecone::cli {

enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kParseError = 2,
  kJacobiFailure = 3,
  kMismatch = 4,
  kUndetermined = 5,
};

// Every command produces a machine report; the human text is rendered from it.
struct Result {
  nlohmann::json report;
  int exit_code = kOk;
};

Result cmd_check(const AlgebraDocument& doc, const Bindings& params);
Result cmd_curvature(const AlgebraDocument& doc, const Bindings& params, int max_nabla);
Result cmd_certify(const AlgebraDocument& doc, const Bindings& params, bool lenient);
Result cmd_construct(const AlgebraDocument& doc, const Bindings& params, const std::string& mode);
Result cmd_catalog_list();
Result cmd_catalog_show(const std::string& name, const Bindings& params);
Result cmd_catalog_verify(const std::vector<std::string>& names, const Bindings& params);
Result cmd_appendix_a(const std::optional<std::vector<std::string>>& case_weights);

std::string render(const nlohmann::json& report);

// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Helpers shared with tests.
nlohmann::json two_tensor_json(const Tensor& t);
std::string error_kind(const std::exception& e);

}  // namespace liecone::cli
