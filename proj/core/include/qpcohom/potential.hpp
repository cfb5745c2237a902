#pragma once

#include <string>
#include <vector>

#include "qpcohom/quiver.hpp"
#include "qpcohom/scalar.hpp"

namespace qpc {

struct Term {
  Scalar coef;
  Path path;
};

// Linear combination of parallel paths. Terms are merged and sorted by path.
struct Relation {
  std::string name;
  int source = 0;
  int target = 0;
  std::vector<Term> terms;

  static Relation make(const Quiver& q, std::string name, std::vector<Term> terms);
  bool is_zero() const { return terms.empty(); }
  int min_length() const;
  bool has_short_term() const { return min_length() < 2; }
  std::string str(const Quiver& q) const;
};

struct CycleTerm {
  Scalar coef;
  Cycle cycle;
};

class Potential {
 public:
  Potential() = default;
  // Collapses rotations, merges coefficients, drops zeros.
  static Potential make(std::vector<CycleTerm> terms);
  const std::vector<CycleTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::string str(const Quiver& q) const;
  friend bool operator==(const Potential& a, const Potential& b);

 private:
  std::vector<CycleTerm> terms_;
};

struct QP {
  Quiver quiver;
  Potential potential;
  // Relations the extension was built from (empty for direct QP input). The
  // new arrow created for relations[i] is new_arrows[i].
  std::vector<Relation> relations;
  std::vector<int> new_arrows;
};

QP relation_extension(const Quiver& q, const std::vector<Relation>& rels);
QP make_qp(const Quiver& q, const Potential& w);

// Zero relation (no terms) when the arrow does not occur.
Relation cyclic_derivative(const Quiver& q, const Potential& w, int arrow);

struct JacobianRelation {
  int arrow;
  Relation relation;
  bool short_term;  // some term has length < 2
};
std::vector<JacobianRelation> jacobian_relations(const QP& qp);

// Partition of the potential's term indices; classes ordered by least cycle.
std::vector<std::vector<int>> cycle_equivalence_classes(const Potential& w);
int potential_invariant(const Potential& w);
std::vector<Potential> direct_decomposition(const Potential& w);

// Partition of the new arrows (arrow ids) grouped through the derivatives by
// old arrows. Requires every cycle to contain exactly one new arrow.
std::vector<std::vector<int>> arrow_equivalence_classes(const QP& qp);

Potential chordless_potential(const Quiver& q);

// Walks u^-1 w' v^-1 certifying a C-sequential configuration (see README).
std::vector<Walk> detect_c_sequential_walks(const QP& qp);

// All arrow sets meeting every chordless cycle exactly once.
std::vector<std::vector<int>> admissible_cuts(const Quiver& q);

}  // namespace qpc
