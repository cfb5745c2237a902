#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpcohom/algebra.hpp"
#include "qpcohom/potential.hpp"

namespace qpc {

// User assertion about the algebra; never inferred.
enum class TameClass { None, EuclideanA, EuclideanD, EuclideanE, DynkinD, RepFinite, CyclicallyOriented };
std::string to_string(TameClass t);
TameClass tame_class_from_string(const std::string& s);  // grammar spelling, throws InputError

struct TheoremAReport {
  int n_w = 0;
  int n_bc = 0;
  int end_e = 0;
  int hh1_b = 0;
  int hh1_c = 0;
  int h1_c_e = 0;
  int h1_b_e = 0;
  int dim_b = 0;
  int dim_c = 0;
  int dim_e = 0;
  std::vector<int> summand_dims;
  std::vector<std::vector<int>> hom_dims;
  std::vector<std::vector<std::string>> classes;  // cycles of each class of W
  bool cyclically_oriented = false;
  TameClass declared = TameClass::None;
  int c_sequential_walks = 0;
  bool ses_additivity = false;
  bool h1_splitting = false;
  bool lower_bound = false;
  bool identity_applies = false;  // Theorem A hypotheses asserted or detected
  bool identities_hold = false;
  std::vector<std::string> diagnostics;

  friend bool operator==(const TheoremAReport&, const TheoremAReport&) = default;
};

struct AnalysisOptions {
  BuildOptions build;
  bool compute_c_sequential = true;
};

TheoremAReport run_theorem_a(const Quiver& q, const std::vector<Relation>& rels, TameClass declared = TameClass::None,
                             AnalysisOptions opts = {});
// Same pipeline for a QP given directly (new arrows marked in the quiver).
TheoremAReport run_theorem_a(const QP& qp, TameClass declared = TameClass::None, AnalysisOptions opts = {});

// |chordless cycles| - |inner arrows|
int rep_finite_formula(const Quiver& q);

struct EpsilonResult {
  int epsilon = 1;
  bool double_arrow = false;
  bool hereditary_bypass = false;
  bool co_occur = false;  // both conditions present; double arrow wins
  std::vector<std::string> diagnostics;
};
// A proper bypass counts as hereditary when neither its arrow nor any arrow of
// its path lies on a cycle of the potential.
EpsilonResult tame_a_epsilon(const Quiver& q, const Potential& w);

struct LowerBoundAudit {
  bool holds = false;            // hh1(B) >= hh1(C) + N_W
  bool equality = false;         // hh1(B) == hh1(C) + N_W
  bool orthogonal_bricks = false;
  bool consistent = false;       // equality <=> (H1(C,E) = 0 and orthogonal bricks)
  bool nonzero_if_not_hereditary = false;
};
LowerBoundAudit lower_bound_check(const TheoremAReport& r);

struct InvarianceAudit {
  bool n_equal = false;
  bool summands_equal = false;
  bool end_equal = false;
  bool passed() const { return n_equal && summands_equal && end_equal; }
};
InvarianceAudit invariance_audit(const TheoremAReport& first, const TheoremAReport& second);

}  // namespace qpc
