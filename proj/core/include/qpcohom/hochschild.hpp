#pragma once

#include "qpcohom/algebra.hpp"

namespace qpc {

// Normalized derivations A -> M, as the nullity of the Leibniz constraints
// imposed on the defining relations of A.
int der0_dim(const FiniteDimAlgebra& a, const Bimodule& m);
// Rank of x |-> (arrow a |-> a x - x a) on the diagonal part of M.
int inn0_dim(const FiniteDimAlgebra& a, const Bimodule& m);
int h1_dim(const FiniteDimAlgebra& a, const Bimodule& m);
int hh1(const FiniteDimAlgebra& a);
int hh1(std::shared_ptr<const FiniteDimAlgebra> a);

// H^1 from the bar complex Hom_k(A, M): ker b2 / im b1. Quadratic in dim A;
// intended as an independent cross-check on small algebras.
int bar_h1_dim(const FiniteDimAlgebra& a, const Bimodule& m);

struct ExtensionCohomology {
  int hh1_b = 0;
  int hh1_c = 0;
  int h1_b_e = 0;  // E as a B-bimodule
  int h1_c_e = 0;  // E as a C-bimodule
  int end_e = 0;
  bool ses_additivity() const { return hh1_b == h1_b_e + hh1_c; }
  bool h1_splitting() const { return h1_b_e == h1_c_e + end_e; }
};
ExtensionCohomology extension_cohomology(std::shared_ptr<const FiniteDimAlgebra> b, const SplitExtension& ext);

bool ses_additivity_check(std::shared_ptr<const FiniteDimAlgebra> b, const SplitExtension& ext);
bool h1_splitting_check(std::shared_ptr<const FiniteDimAlgebra> b, const SplitExtension& ext);

}  // namespace qpc
