#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qpcohom/algebra.hpp"
#include "qpcohom/potential.hpp"

namespace qpc {

// Marked points: boundary points 1..n are stored as 0..n-1, punctures as n, n+1.
struct Arc {
  std::string name;
  int end_a = 0;
  int end_b = 0;
  bool is_loop() const { return end_a == end_b; }
};

// A side is an arc or the boundary segment from boundary point i to i+1.
struct Side {
  bool boundary = false;
  int arc = -1;      // when not boundary
  int segment = -1;  // boundary segment starting at point `segment`
};

struct Triangle {
  std::string name;
  bool self_folded = false;
  // Ordinary: three sides listed counterclockwise. Self-folded: sides[0] is
  // the loop, sides[1] the radius.
  std::array<Side, 3> sides{};
  // Ordinary triangles: corners[i] is the marked point between sides i and i+1.
  std::array<int, 3> corners{};
};

class Triangulation {
 public:
  // Validates incidence data and orients every ordinary triangle.
  static Triangulation make(int boundary_points, std::vector<std::string> punctures, std::vector<Arc> arcs,
                            std::vector<Triangle> triangles);

  int boundary_points() const { return n_; }
  int num_punctures() const { return static_cast<int>(punctures_.size()); }
  const std::vector<std::string>& punctures() const { return punctures_; }
  int puncture_point(int k) const { return n_ + k; }
  bool is_puncture(int point) const { return point >= n_; }
  std::string point_name(int point) const;
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  std::string side_name(const Side& s) const;

  bool is_internal(int t) const;
  // Self-folded triangle whose loop is this arc, if any.
  std::optional<int> folded_by_loop(int arc) const;
  // Self-folded triangle enclosing this puncture, if any.
  std::optional<int> folded_around(int puncture_point) const;
  // Ordinary triangle that has this self-folded triangle's loop as a side.
  int outer_triangle(int self_folded) const;

 private:
  int n_ = 0;
  std::vector<std::string> punctures_;
  std::vector<Arc> arcs_;
  std::vector<Triangle> triangles_;
};

int valency(const Triangulation& t, int puncture_point);

enum class BlockType { I, II, IIIa, IIIb, IV, V, Empty };
std::string to_string(BlockType b);

struct Block {
  BlockType type;
  std::vector<int> triangles;  // the ordinary triangle first, then self-folded ones
  std::vector<int> outlets;    // arcs where the block glues to others
  std::vector<int> enclosed;   // loop and radius arcs of folded triangles
};
std::vector<Block> decompose_blocks(const Triangulation& t);

enum class CycleOrigin { Triangle, Lift, Puncture };

// Adjacency quiver with potential; potential cycles carry their origin.
struct AdjacencyQP {
  QP qp;
  std::vector<int> arc_vertex;                   // arc -> quiver vertex (= arc index)
  std::vector<int> arrow_triangle, arrow_corner;  // per arrow
  // Per potential-term bookkeeping, aligned with qp.potential.terms().
  std::vector<CycleOrigin> origin;
  std::vector<int> origin_triangle;  // -1 for puncture cycles
  std::vector<int> origin_puncture;  // -1 unless a puncture cycle
  // Puncture cycle C_x per puncture (empty when it vanishes).
  std::vector<std::optional<Cycle>> puncture_cycle;
  // Triangle cycle C_t per ordinary internal triangle (all loop lifts).
  std::vector<std::optional<Cycle>> triangle_cycle;
};
AdjacencyQP adjacency_qp(const Triangulation& t);

struct RelatednessReport {
  std::vector<std::string> punctures;
  std::vector<int> valency;
  std::vector<std::vector<int>> rel_bar;  // internal triangles related, incl. self-folded
  std::vector<std::vector<int>> rel;      // non-self-folded ones
  std::vector<int> nrel;                  // internal non-self-folded, related to none
  std::vector<int> m;                     // per puncture
  int m_p = 0, m_q = 0, m_pq = 0;
};
RelatednessReport relatedness(const Triangulation& t);
int theorem_b_dim(const Triangulation& t);
int theorem_b_dim(const RelatednessReport& r);

// Classes of the relation generated by sharing a related puncture, over the
// internal non-self-folded triangles.
std::vector<std::vector<int>> triangle_classes(const Triangulation& t, const RelatednessReport& r);

enum class ValencyTwoConfig { A, B, C };
std::string to_string(ValencyTwoConfig c);

struct ReducedQP {
  QP qp;
  std::vector<bool> puncture_survives;  // C_x survives into the reduced part
  std::vector<std::optional<ValencyTwoConfig>> config;  // per puncture, for valency 2
};
ReducedQP reduce_local(const AdjacencyQP& unreduced, const Triangulation& t);

struct GeometricCut {
  std::vector<int> corners;  // chosen corner per internal ordinary triangle (in triangle order)
  std::vector<int> arrows;   // cut arrows of Q(T)
  bool admissible = false;
  std::shared_ptr<const FiniteDimAlgebra> algebra;
  bool gldim_le_two = false;
};
std::vector<GeometricCut> geometric_cuts(const Triangulation& t, BuildOptions opts = {});

// All ideal triangulations of the once-punctured n-gon.
std::vector<Triangulation> enumerate_once_punctured(int n);

}  // namespace qpc
