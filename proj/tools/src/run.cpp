#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "liecone/catalog.hpp"
#include "liecone/errors.hpp"
#include "liecone_cli/cli.hpp"

namespace liecone::cli {

namespace {

struct Source {
  std::string file;
  std::string entry;
};

void add_source(CLI::App* sub, Source& src) {
  auto* f = sub->add_option("file", src.file, "Algebra document (JSON); '-' reads stdin");
  auto* c = sub->add_option("--catalog", src.entry, "Use a catalog entry instead of a file");
  f->excludes(c);
  c->excludes(f);
}

AlgebraDocument load(const Source& src) {
  if (!src.entry.empty()) return catalog::get(src.entry).doc;
  if (src.file.empty()) throw ParseError("no algebra document given (pass a file or --catalog NAME)");
  std::string text;
  if (src.file == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(src.file);
    if (!in) throw ParseError("cannot open " + src.file);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return parse_document(text);
}

Bindings parse_params(const std::vector<std::string>& raw) {
  Bindings b;
  for (const auto& item : raw) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("--param expects NAME=VALUE, got \"" + item + "\"");
    b[item.substr(0, eq)] = parse_scalar(item.substr(eq + 1));
  }
  return b;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact curvature and null-cone analysis of left-invariant metrics on Lie algebras"};
  app.require_subcommand(1);
  bool as_json = false;
  std::vector<std::string> raw_params;
  app.add_flag("--json", as_json, "Print the machine-readable report");
  app.add_option("--param", raw_params, "Parameter binding NAME=VALUE (repeatable)")->take_all();

  Source src;
  auto* check = app.add_subcommand("check", "Jacobi identity and structural properties");
  add_source(check, src);

  int max_nabla = 1;
  auto* curvature = app.add_subcommand("curvature", "Curvature tensors, invariants and Jordan types");
  add_source(curvature, src);
  curvature->add_option("--max-nabla", max_nabla, "Highest covariant derivative of Riemann")
      ->check(CLI::Range(1, 4));

  bool lenient = false;
  auto* certify = app.add_subcommand("certify", "Boost-weight certificate and null-cone verdict");
  add_source(certify, src);
  certify->add_flag("--lenient", lenient, "Exit 0 even when the verdict is undetermined");

  std::string mode = "nilpotent";
  auto* construct = app.add_subcommand("construct", "Build an adapted null frame");
  add_source(construct, src);
  construct->add_option("--mode", mode, "nilpotent or csolvable")
      ->check(CLI::IsMember({"nilpotent", "csolvable"}));

  auto* cat = app.add_subcommand("catalog", "Built-in examples");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "List entries");
  std::string show_name;
  auto* show = cat->add_subcommand("show", "Show one entry");
  show->add_option("name", show_name)->required();
  std::vector<std::string> verify_names;
  bool verify_all = false;
  auto* verify = cat->add_subcommand("verify", "Check entries against their recorded values");
  auto* names_opt = verify->add_option("names", verify_names);
  verify->add_flag("--all", verify_all)->excludes(names_opt);

  std::vector<std::string> case_weights;
  auto* appendix = app.add_subcommand("appendixA", "Allowed structure constants for p = 2 cases");
  appendix->add_option("--case", case_weights, "Weight vector, e.g. 3,1")->delimiter(',');

  for (auto* sub : {check, curvature, certify, construct, appendix}) sub->fallthrough();
  cat->fallthrough();
  for (auto* sub : cat->get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kParseError;
  }

  Result result;
  try {
    Bindings params = parse_params(raw_params);
    if (*check) {
      result = cmd_check(load(src), params);
    } else if (*curvature) {
      result = cmd_curvature(load(src), params, max_nabla);
    } else if (*certify) {
      result = cmd_certify(load(src), params, lenient);
    } else if (*construct) {
      result = cmd_construct(load(src), params, mode);
    } else if (*appendix) {
      result = cmd_appendix_a(case_weights.empty() ? std::nullopt
                                                   : std::optional<std::vector<std::string>>(case_weights));
    } else if (cat->got_subcommand("list")) {
      result = cmd_catalog_list();
    } else if (*show) {
      result = cmd_catalog_show(show_name, params);
    } else if (*verify) {
      if (verify_all) verify_names = catalog::list();
      if (verify_names.empty()) throw ParseError("catalog verify needs entry names or --all");
      result = cmd_catalog_verify(verify_names, params);
    }
  } catch (const ParseError& e) {
    err << "error (ParseError): " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "error (" << error_kind(e) << "): " << e.what() << "\n";
    return kError;
  }

  out << (as_json ? result.report.dump(2) + "\n" : render(result.report));
  return result.exit_code;
}

}  // namespace liecone::cli
