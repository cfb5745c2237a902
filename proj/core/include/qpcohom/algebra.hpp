#pragma once

#include <memory>
#include <vector>

#include "qpcohom/linalg.hpp"
#include "qpcohom/potential.hpp"
#include "qpcohom/quiver.hpp"

namespace qpc {

struct BuildOptions {
  int max_len = -1;  // default: 2 * number of vertices
};

// Basic algebra kQ/I with a basis of normal-form paths. Elements are sparse
// vectors over basis indices.
class FiniteDimAlgebra {
 public:
  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  // Every path of this length lies in the ideal.
  int stabilization_length() const { return stab_len_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const Path& basis_path(int i) const { return basis_[i]; }
  int source(int i) const { return basis_[i].source; }
  int target(int i) const { return basis_[i].target; }
  int idempotent(int v) const { return idempotent_[v]; }
  std::vector<int> block(int i, int j) const;
  // Number of basis elements per path length.
  std::vector<int> graded_dims() const;

  const SparseVec& right_arrow(int i, int a) const { return right_[i][a]; }
  const SparseVec& left_arrow(int a, int i) const { return left_[a][i]; }
  const SparseVec& product(int i, int j) const { return product_[i][j]; }
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  SparseVec path_element(const Path& p) const;
  SparseVec relation_element(const Relation& r) const;

  // Builds from explicit tables; used for quotients and subalgebras.
  static FiniteDimAlgebra from_tables(Quiver q, std::vector<Relation> rels, int stab_len, std::vector<Path> basis,
                                      std::vector<std::vector<SparseVec>> right,
                                      std::vector<std::vector<SparseVec>> left,
                                      std::vector<std::vector<SparseVec>> product);

 private:
  friend FiniteDimAlgebra build_algebra(const Quiver&, const std::vector<Relation>&, BuildOptions);
  void index_idempotents();

  Quiver quiver_;
  std::vector<Relation> relations_;
  int stab_len_ = 0;
  std::vector<Path> basis_;
  std::vector<int> idempotent_;
  std::vector<std::vector<SparseVec>> right_;    // [basis][arrow]
  std::vector<std::vector<SparseVec>> left_;     // [arrow][basis]
  std::vector<std::vector<SparseVec>> product_;  // [basis][basis]
};

FiniteDimAlgebra build_algebra(const Quiver& q, const std::vector<Relation>& rels, BuildOptions opts = {});
FiniteDimAlgebra jacobian_algebra(const QP& qp, BuildOptions opts = {});
// Jacobian algebra modulo the given arrows, presented on the remaining quiver.
FiniteDimAlgebra cut_algebra(const QP& qp, const std::vector<int>& cut, BuildOptions opts = {});
// Checks (xy)z = x(yz) on all triples (dim <= limit) or on `samples` random ones.
bool check_associativity(const FiniteDimAlgebra& a, int limit = 60, int samples = 2000, unsigned seed = 1);

// A-A-bimodule, finite dimensional, graded by the pair of vertices.
class Bimodule {
 public:
  Bimodule() = default;
  Bimodule(std::shared_ptr<const FiniteDimAlgebra> alg, std::vector<int> left_vertex, std::vector<int> right_vertex,
           std::vector<std::vector<SparseVec>> left_act, std::vector<std::vector<SparseVec>> right_act);

  const FiniteDimAlgebra& algebra() const { return *alg_; }
  std::shared_ptr<const FiniteDimAlgebra> algebra_ptr() const { return alg_; }
  int dim() const { return static_cast<int>(left_vertex_.size()); }
  int left_vertex(int m) const { return left_vertex_[m]; }
  int right_vertex(int m) const { return right_vertex_[m]; }
  std::vector<int> block(int i, int j) const;

  // Actions by an arrow or by a path of the acting algebra.
  const SparseVec& arrow_left(int a, int m) const { return left_act_[a][m]; }
  const SparseVec& arrow_right(int m, int a) const { return right_act_[a][m]; }
  SparseVec act_left(const Path& p, const SparseVec& m) const;
  SparseVec act_right(const SparseVec& m, const Path& p) const;
  SparseVec act_left(const SparseVec& x, const SparseVec& m) const;   // x in the algebra
  SparseVec act_right(const SparseVec& m, const SparseVec& x) const;  // x in the algebra

  // Sub-bimodule generated by the given elements, with its own basis.
  Bimodule generated_by(const std::vector<SparseVec>& gens) const;

  // Basis of a generated sub-bimodule in the parent's coordinates.
  const std::vector<SparseVec>& ambient_basis() const { return ambient_; }

  static Bimodule regular(std::shared_ptr<const FiniteDimAlgebra> alg);

 private:
  std::shared_ptr<const FiniteDimAlgebra> alg_;
  std::vector<int> left_vertex_, right_vertex_;
  std::vector<std::vector<SparseVec>> left_act_;   // [arrow][basis]
  std::vector<std::vector<SparseVec>> right_act_;  // [arrow][basis]
  std::vector<SparseVec> ambient_;
};

struct SplitExtension {
  std::shared_ptr<const FiniteDimAlgebra> c;
  Bimodule e_over_c;              // E as a C-C-bimodule
  Bimodule e_over_b;              // E as a B-B-bimodule (ideal of B)
  std::vector<int> e_basis_in_b;  // basis indices of B spanning E
};

// B must have a basis graded by the number of new arrows; E is the degree-1
// part and must square to zero.
SplitExtension split_extension(std::shared_ptr<const FiniteDimAlgebra> b);

// E_i generated by the new arrows of each summand; checked to be a direct sum.
std::vector<Bimodule> bimodule_summands_from_potential(const SplitExtension& ext, const std::vector<Potential>& parts,
                                                       const Quiver& b_quiver);

struct HomSpace {
  int dim = 0;
  std::vector<SparseVec> basis;  // over the unknowns of each graded block
};
HomSpace bimodule_hom(const Bimodule& m, const Bimodule& n);

// Minimal projective resolution of the simple at vertex i (right modules).
struct Resolution {
  std::vector<std::vector<int>> multiplicities;  // [step][vertex]
  std::vector<int> syzygy_dims;                  // dims of Omega^1 .. Omega^{k+1}
};
Resolution projective_resolution_dims(const FiniteDimAlgebra& a, int vertex, int k = 3);
bool gldim_le_two(const FiniteDimAlgebra& a);

int center_dim(const FiniteDimAlgebra& a);

}  // namespace qpc
