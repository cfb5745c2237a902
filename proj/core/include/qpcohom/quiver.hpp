#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qpc {

enum class ArrowKind { Old, New };

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
  ArrowKind kind = ArrowKind::Old;
};

class Quiver {
 public:
  int add_vertex(std::string name);
  int add_arrow(std::string name, int source, int target, ArrowKind kind = ArrowKind::Old);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_name(int v) const { return vertices_.at(v); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<int>& out_arrows(int v) const { return out_.at(v); }
  const std::vector<int>& in_arrows(int v) const { return in_.at(v); }
  std::optional<int> find_vertex(std::string_view name) const;
  std::optional<int> find_arrow(std::string_view name) const;
  bool is_new(int a) const { return arrows_.at(a).kind == ArrowKind::New; }
  bool has_loops() const;
  int count_new() const;

  // Same vertices, only the arrows for which keep(a) holds, renumbered in order.
  template <class Pred>
  Quiver subquiver(Pred keep) const {
    Quiver q;
    for (const auto& v : vertices_) q.add_vertex(v);
    for (int a = 0; a < num_arrows(); ++a)
      if (keep(a)) q.add_arrow(arrows_[a].name, arrows_[a].source, arrows_[a].target, arrows_[a].kind);
    return q;
  }

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_, in_;
};

// A path written a.b traverses a first, then b. Length-0 paths are the
// stationary paths at a vertex.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  static Path stationary(int v) { return Path{v, v, {}}; }
  static Path of(const Quiver& q, std::vector<int> arrows);  // throws if not composable
  int length() const { return static_cast<int>(arrows.size()); }
  Path then(const Path& o) const;  // requires target == o.source
  std::string str(const Quiver& q) const;

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path& a, const Path& b) {
    if (auto c = a.arrows.size() <=> b.arrows.size(); c != 0) return c;
    if (auto c = a.arrows <=> b.arrows; c != 0) return c;
    if (auto c = a.source <=> b.source; c != 0) return c;
    return a.target <=> b.target;
  }
};

// Oriented cycle up to rotation, stored as the lexicographically least
// rotation of its arrow ids.
class Cycle {
 public:
  Cycle() = default;
  static Cycle of(const Quiver& q, std::vector<int> arrows);  // validates, then canonicalizes
  const std::vector<int>& arrows() const { return arrows_; }
  int length() const { return static_cast<int>(arrows_.size()); }
  bool contains(int a) const;
  // Path starting at the k-th occurrence position (rotation).
  Path rotation(const Quiver& q, int start) const;
  std::string str(const Quiver& q) const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle& a, const Cycle& b) { return a.arrows_ <=> b.arrows_; }

 private:
  std::vector<int> arrows_;
};

struct WalkStep {
  int arrow;
  bool forward;
  friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

struct Walk {
  std::vector<WalkStep> steps;
  bool reduced() const;
  std::string str(const Quiver& q) const;
};

struct ChordlessCycle {
  std::vector<int> vertices;  // cyclic order; for oriented cycles, in arrow direction
  std::vector<int> arrows;    // arrows[i] joins vertices[i] and vertices[i+1 mod t]
  bool oriented = false;
  // The oriented cycle, when oriented.
  Cycle as_cycle(const Quiver& q) const;
  std::string str(const Quiver& q) const;
};

std::vector<ChordlessCycle> enumerate_chordless_cycles(const Quiver& q);
bool is_cyclically_oriented(const Quiver& q);
std::vector<std::pair<int, int>> find_double_arrows(const Quiver& q);

struct Bypass {
  int arrow;
  Path path;
  bool proper() const { return path.length() >= 2; }
};
// Paths are searched up to max_len arrows (default: number of vertices).
std::vector<Bypass> find_bypasses(const Quiver& q, int max_len = -1);
std::vector<int> inner_arrows(const Quiver& q);
bool is_triangular(const Quiver& q);

}  // namespace qpc
