// Command-line front door for the splinez shared library. All computation
// goes through the C API in splinez.h; this file only handles argument
// parsing, file IO and output formatting.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>

#include "splinez.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitSizeExceeded = 3;

int exit_code_for(sz_status s) {
  switch (s) {
    case SZ_OK: return kExitOk;
    case SZ_ERR_PARSE:
    case SZ_ERR_VALIDATION:
    case SZ_ERR_BAD_ARGUMENT: return kExitInputError;
    case SZ_ERR_SIZE_EXCEEDED: return kExitSizeExceeded;
    default: return kExitValidationFailure;
  }
}

int report_error(sz_status s) {
  std::cerr << "error: " << sz_last_error() << "\n";
  return exit_code_for(s);
}

struct GraphHandle {
  sz_graph* g = nullptr;
  ~GraphHandle() { sz_graph_free(g); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { sz_string_free(s); }
};

bool load_graph(const std::string& path, GraphHandle& out) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return false;
  }
  std::ostringstream text;
  text << in.rdbuf();
  sz_status s = sz_graph_parse(text.str().c_str(), &out.g);
  if (s != SZ_OK) {
    std::cerr << "error: " << path << ": " << sz_last_error() << "\n";
    return false;
  }
  return true;
}

void print_rows_csv(const json& rows, std::ostream& os) {
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      os << row[i].dump();
    }
    os << "\n";
  }
}

void print_report(const json& report, const std::string& format) {
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  // csv: flatten the array-of-rows payloads, one block per key.
  for (const char* key : {"basis", "matrix", "lattice"}) {
    if (report.contains(key)) {
      std::cout << "# " << key << "\n";
      print_rows_csv(report[key], std::cout);
    }
  }
  if (report.contains("checks") && report["checks"].is_array()) {
    std::cout << "# checks\n";
    for (const auto& c : report["checks"])
      std::cout << c["name"].get<std::string>() << "," << (c["ok"].get<bool>() ? "true" : "false")
                << "," << c["detail"].get<std::string>() << "\n";
  }
  if (report.contains("graph")) {
    std::cout << "# m\n";
    print_rows_csv(json::array({report["graph"]["m"]}), std::cout);
    std::cout << "# edges\n";
    print_rows_csv(report["graph"]["edges"], std::cout);
  }
  if (report.contains("ok"))
    std::cout << "# ok\n" << (report["ok"].get<bool>() ? "true" : "false") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integer generalized-spline modules on edge-labeled graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", sz_version());
  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));

  std::string graph_path, spline_csv, method = "longest", emit = "both", zeros_csv;
  long long bound = 0;
  bool trace = false;

  CLI::App* verify = app.add_subcommand("verify", "check that a vector is a spline");
  verify->add_option("graph", graph_path, "graph JSON document")->required();
  verify->add_option("--spline", spline_csv, "comma-separated entries, v1..vn")->required();

  CLI::App* basis = app.add_subcommand("basis", "construct a flow-up basis");
  basis->add_option("graph", graph_path)->required();
  basis->add_option("--method", method, "path | longest | gkm")
      ->check(CLI::IsMember({"path", "longest", "gkm"}));
  basis->add_flag("--trace", trace, "emit per-step construction detail");

  CLI::App* gkm = app.add_subcommand("gkm", "emit the GKM matrix and kernel lattice");
  gkm->add_option("graph", graph_path)->required();
  gkm->add_option("--emit", emit, "matrix | lattice | both")
      ->check(CLI::IsMember({"matrix", "lattice", "both"}));

  CLI::App* reduce = app.add_subcommand("reduce", "zero-vertex reduction");
  reduce->add_option("graph", graph_path)->required();
  reduce->add_option("--zeros", zeros_csv, "comma-separated 1-based vertices")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force validation battery");
  oracle->add_option("graph", graph_path)->required();
  oracle->add_option("--bound", bound, "enumeration window bound (default: label lcm)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  GraphHandle g;
  if (!load_graph(graph_path, g)) return kExitInputError;

  OwnedString report;
  sz_status s = SZ_OK;
  int ok = 1;

  if (verify->parsed()) {
    s = sz_verify_spline(g.g, spline_csv.c_str(), &ok, &report.s);
  } else if (basis->parsed()) {
    s = sz_basis(g.g, method.c_str(), trace ? 1 : 0, &report.s);
  } else if (gkm->parsed()) {
    s = sz_gkm(g.g, emit.c_str(), &report.s);
  } else if (reduce->parsed()) {
    std::vector<int> zeros;
    std::stringstream ss(zeros_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        zeros.push_back(std::stoi(item));
      } catch (const std::exception&) {
        std::cerr << "error: --zeros: not an integer: \"" << item << "\"\n";
        return kExitInputError;
      }
    }
    s = sz_reduce(g.g, zeros.data(), zeros.size(), &report.s);
  } else if (oracle->parsed()) {
    s = sz_oracle_validate(g.g, bound, &ok, &report.s);
  }

  if (s != SZ_OK) return report_error(s);
  if (report.s) print_report(json::parse(report.s), format);
  if (!ok) {
    std::cerr << "validation failed\n";
    return kExitValidationFailure;
  }
  return kExitOk;
}
