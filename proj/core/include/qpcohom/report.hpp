#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpcohom/theorems.hpp"

namespace qpc {

struct CheckResult {
  std::string name;
  bool holds = false;
  std::string detail;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct ExtendSummary {
  std::vector<std::string> vertices;
  std::vector<std::string> arrows;  // "name : src -> tgt" with a " new" suffix for new arrows
  std::string potential;
  friend bool operator==(const ExtendSummary&, const ExtendSummary&) = default;
};

struct Hh1Summary {
  int dim = 0;
  int stabilization = 0;
  int hh1 = 0;
  std::optional<int> bar_hh1;
  friend bool operator==(const Hh1Summary&, const Hh1Summary&) = default;
};

struct GeometryReport {
  int boundary = 0;
  std::vector<std::string> punctures;
  std::vector<int> valency;
  std::vector<std::string> blocks;  // "TYPE: t1 t2"
  std::vector<std::vector<std::string>> rel_bar;
  std::vector<std::vector<std::string>> rel;
  std::vector<std::string> nrel;
  std::vector<int> m;
  int m_p = 0, m_q = 0, m_pq = 0;
  int theorem_b = 0;
  std::vector<std::vector<std::string>> triangle_classes;
  int n_w_unreduced = 0;
  bool reduced = false;
  std::vector<std::string> configs;  // per puncture; "-" unless valency 2
  std::vector<bool> survives;
  int reduced_vertices = 0;
  int reduced_arrows = 0;
  std::string reduced_potential;
  std::optional<int> oracle_hh1;
  std::optional<int> formula;
  friend bool operator==(const GeometryReport&, const GeometryReport&) = default;
};

struct CutSummary {
  std::vector<std::string> arrows;
  bool admissible = false;
  int dim = 0;
  bool gldim_le_two = false;
  friend bool operator==(const CutSummary&, const CutSummary&) = default;
};

// Everything a command computed, plus a configuration echo.
struct Report {
  std::string command;
  std::string input;
  std::string field;
  int max_len = -1;
  double elapsed_ms = 0;
  std::optional<int> n_w;
  std::vector<std::vector<std::string>> classes;
  std::optional<ExtendSummary> extend;
  std::optional<Hh1Summary> hh1;
  std::optional<TheoremAReport> theorem_a;
  std::optional<GeometryReport> geometry;
  std::vector<CutSummary> cuts;
  std::vector<CheckResult> checks;
  int exit_code = 0;
  friend bool operator==(const Report&, const Report&) = default;
};

std::string report_to_json(const Report& r, int indent = 2);
// Throws InputError on malformed or incomplete documents.
Report report_from_json(std::string_view text);

}  // namespace qpc
