#include "splinez.h"

#include <cstdlib>
#include <cstring>

#include "gkm.hpp"
#include "longest_basis.hpp"
#include "oracle.hpp"
#include "path_basis.hpp"
#include "report.hpp"

using namespace splinez;
using nlohmann::json;

struct sz_graph {
  EdgeLabeledGraph g;
};

namespace {

thread_local std::string g_last_error;

sz_status status_of(errc code) {
  switch (code) {
    case errc::parse_error: return SZ_ERR_PARSE;
    case errc::validation:
    case errc::length_mismatch: return SZ_ERR_VALIDATION;
    case errc::incompatible: return SZ_ERR_INCOMPATIBLE;
    case errc::size_exceeded: return SZ_ERR_SIZE_EXCEEDED;
    case errc::not_in_span: return SZ_ERR_NOT_IN_SPAN;
    case errc::no_flowup_found:
    case errc::zero_modulus_cut: return SZ_ERR_NO_FLOWUP;
    case errc::bad_argument:
    case errc::not_invertible: return SZ_ERR_BAD_ARGUMENT;
    case errc::internal_contradiction:
    case errc::dimension_mismatch: return SZ_ERR_INTERNAL;
  }
  return SZ_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
sz_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SZ_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SZ_ERR_INTERNAL;
  }
}

json basis_to_json(const FlowUpBasis& b) {
  json rows = json::array();
  for (const FlowUpClass& c : b.classes) rows.push_back(json_from_vec(c.values));
  return rows;
}

json lattice_to_json(const LatticeBasis& l) {
  json rows = json::array();
  for (const auto& row : l.rows) rows.push_back(json_from_vec(row));
  return rows;
}

json leading_of_rows(const std::vector<std::vector<Int>>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    Int lead = 0;
    for (const Int& x : row)
      if (x != 0) {
        lead = x;
        break;
      }
    out.push_back(json_from_int(lead));
  }
  return out;
}

json path_trace_json(const std::vector<std::vector<PathStep>>& traces) {
  json out = json::array();
  for (const auto& steps : traces) {
    json rows = json::array();
    for (const PathStep& s : steps)
      rows.push_back(json{{"vertex", s.vertex + 1},
                          {"s", json_from_int(s.s)},
                          {"r_prev", json_from_int(s.r_prev)},
                          {"carry", json_from_int(s.carry)},
                          {"l", json_from_int(s.l)},
                          {"value", json_from_int(s.value)}});
    out.push_back(rows);
  }
  return out;
}

json crt_trace_json(const std::vector<std::vector<CrtStep>>& traces) {
  json out = json::array();
  for (const auto& steps : traces) {
    json rows = json::array();
    for (const CrtStep& s : steps) {
      json congruences = json::array();
      for (const CrtTerm& t : s.congruences) {
        json term{{"modulus", json_from_int(t.modulus)}, {"residue", json_from_int(t.residue)}};
        term["source"] = t.source < 0 ? json(nullptr) : json(t.source + 1);
        congruences.push_back(term);
      }
      rows.push_back(
          json{{"vertex", s.vertex + 1}, {"congruences", congruences}, {"value", json_from_int(s.value)}});
    }
    out.push_back(rows);
  }
  return out;
}

json basis_report(const EdgeLabeledGraph& g, const std::string& method, bool trace) {
  json report;
  report["method"] = method;
  report["n"] = g.vertex_count();
  if (method == "path") {
    auto spec = PathSpec::from_graph(g);
    if (!spec)
      fail(errc::bad_argument,
           "the graph is not a path v1-v2-...-vn in vertex order; use --method longest or gkm");
    PathBasisResult r = path_basis(*spec);
    report["basis"] = basis_to_json(r.basis);
    report["leading"] = json_from_vec(r.basis.leading_values());
    SplineCheck c = check_flowup_basis(g, r.basis);
    report["checks"] = {{"classes_are_splines", c.ok}, {"triangular", true}};
    if (trace) report["trace"] = path_trace_json(r.traces);
  } else if (method == "longest") {
    GeneralBasisResult r = general_basis(g);
    report["basis"] = basis_to_json(r.basis);
    report["leading"] = json_from_vec(r.basis.leading_values());
    SplineCheck c = check_flowup_basis(g, r.basis);
    report["checks"] = {{"classes_are_splines", c.ok}, {"triangular", true}};
    if (trace) report["trace"] = crt_trace_json(r.traces);
  } else if (method == "gkm") {
    LatticeBasis l = spline_lattice(g);
    report["basis"] = lattice_to_json(l);
    report["leading"] = leading_of_rows(l.rows);
    bool splines = true;
    for (const auto& row : l.rows) splines = splines && is_spline(g, row);
    report["checks"] = {{"classes_are_splines", splines},
                        {"full_rank", static_cast<int>(l.rows.size()) == g.vertex_count()}};
  } else {
    fail(errc::bad_argument, "unknown basis method \"" + method + "\"; expected path, longest or gkm");
  }
  return report;
}

json matrix_to_json(const IMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(json_from_int(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json validation_to_json(const ValidationReport& r) {
  json checks = json::array();
  for (const CheckOutcome& c : r.checks)
    checks.push_back(json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return json{{"ok", r.ok}, {"window", json_from_int(r.window_bound)}, {"checks", checks}};
}

}  // namespace

extern "C" {

const char* sz_version(void) { return "0.1.0"; }

const char* sz_last_error(void) { return g_last_error.c_str(); }

void sz_string_free(char* s) { std::free(s); }

sz_status sz_graph_parse(const char* json_text, sz_graph** out) {
  if (!json_text || !out) {
    g_last_error = "null argument";
    return SZ_ERR_BAD_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] { *out = new sz_graph{parse_graph(json_text)}; });
}

void sz_graph_free(sz_graph* g) { delete g; }

int sz_graph_vertex_count(const sz_graph* g) { return g ? g->g.vertex_count() : 0; }

int sz_graph_edge_count(const sz_graph* g) { return g ? g->g.edge_count() : 0; }

sz_status sz_verify_spline(const sz_graph* g, const char* spline_csv, int* ok_out,
                           char** report_json) {
  if (!g || !spline_csv || !ok_out) {
    g_last_error = "null argument";
    return SZ_ERR_BAD_ARGUMENT;
  }
  return guarded([&] {
    std::vector<Int> f = parse_int_csv(spline_csv);
    SplineCheck c = check_spline(g->g, f);
    *ok_out = c.ok ? 1 : 0;
    if (report_json) {
      json report{{"ok", c.ok}, {"spline", json_from_vec(f)}};
      report["violation"] = c.ok ? json(nullptr) : json(c.message);
      *report_json = dup_string(report.dump());
    }
  });
}

sz_status sz_basis(const sz_graph* g, const char* method, int trace, char** report_json) {
  if (!g || !method || !report_json) {
    g_last_error = "null argument";
    return SZ_ERR_BAD_ARGUMENT;
  }
  return guarded([&] { *report_json = dup_string(basis_report(g->g, method, trace != 0).dump()); });
}

sz_status sz_gkm(const sz_graph* g, const char* emit, char** report_json) {
  if (!g || !report_json) {
    g_last_error = "null argument";
    return SZ_ERR_BAD_ARGUMENT;
  }
  std::string what = emit ? emit : "both";
  return guarded([&] {
    json report;
    if (what != "matrix" && what != "lattice" && what != "both")
      fail(errc::bad_argument, "unknown gkm emission \"" + what + "\"; expected matrix, lattice or both");
    if (what == "matrix" || what == "both") {
      IMat m = build_gkm(g->g);
      report["rows"] = m.rows();
      report["cols"] = m.cols();
      report["matrix"] = matrix_to_json(m);
    }
    if (what == "lattice" || what == "both") report["lattice"] = lattice_to_json(spline_lattice(g->g));
    *report_json = dup_string(report.dump());
  });
}

sz_status sz_reduce(const sz_graph* g, const int* zeros, size_t n_zeros, char** report_json) {
  if (!g || (!zeros && n_zeros > 0) || !report_json) {
    g_last_error = "null argument";
    return SZ_ERR_BAD_ARGUMENT;
  }
  return guarded([&] {
    std::vector<int> zs;
    for (size_t i = 0; i < n_zeros; ++i) {
      if (zeros[i] < 1 || zeros[i] > g->g.vertex_count())
        fail(errc::bad_argument,
             "zero vertex " + std::to_string(zeros[i]) + " out of range 1.." +
                 std::to_string(g->g.vertex_count()));
      zs.push_back(zeros[i] - 1);
    }
    Reduction red = zero_reduce(g->g, zs);
    json map = json::array();
    for (int v : red.old_to_new) map.push_back(v < 0 ? json(nullptr) : json(v + 1));
    json report{{"graph", graph_to_json(red.graph)}, {"vertex_map", map}};
    *report_json = dup_string(report.dump());
  });
}

sz_status sz_oracle_validate(const sz_graph* g, long long bound, int* ok_out, char** report_json) {
  if (!g || !ok_out) {
    g_last_error = "null argument";
    return SZ_ERR_BAD_ARGUMENT;
  }
  return guarded([&] {
    ValidationReport r = validate_all(g->g, Int(static_cast<long>(bound)));
    *ok_out = r.ok ? 1 : 0;
    if (report_json) *report_json = dup_string(validation_to_json(r).dump());
  });
}

}  // extern "C"
