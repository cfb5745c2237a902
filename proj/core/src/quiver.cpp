#include "qpcohom/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "qpcohom/error.hpp"

namespace qpc {

int Quiver::add_vertex(std::string name) {
  if (find_vertex(name)) throw Error(ErrorKind::Semantic, "duplicate vertex '" + name + "'");
  vertices_.push_back(std::move(name));
  out_.emplace_back();
  in_.emplace_back();
  return num_vertices() - 1;
}

int Quiver::add_arrow(std::string name, int source, int target, ArrowKind kind) {
  if (source < 0 || source >= num_vertices() || target < 0 || target >= num_vertices())
    throw Error(ErrorKind::Semantic, "arrow '" + name + "' has an undeclared endpoint");
  if (find_arrow(name)) throw Error(ErrorKind::Semantic, "duplicate arrow '" + name + "'");
  arrows_.push_back(Arrow{std::move(name), source, target, kind});
  int id = num_arrows() - 1;
  out_[source].push_back(id);
  in_[target].push_back(id);
  return id;
}

std::optional<int> Quiver::find_vertex(std::string_view name) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (vertices_[v] == name) return v;
  return std::nullopt;
}

std::optional<int> Quiver::find_arrow(std::string_view name) const {
  for (int a = 0; a < num_arrows(); ++a)
    if (arrows_[a].name == name) return a;
  return std::nullopt;
}

bool Quiver::has_loops() const {
  return std::any_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.source == a.target; });
}

int Quiver::count_new() const {
  return static_cast<int>(std::count_if(arrows_.begin(), arrows_.end(),
                                        [](const Arrow& a) { return a.kind == ArrowKind::New; }));
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const auto &x = a.arrows_[i], &y = b.arrows_[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target || x.kind != y.kind) return false;
  }
  return true;
}

Path Path::of(const Quiver& q, std::vector<int> arrows) {
  if (arrows.empty()) throw Error(ErrorKind::Semantic, "empty path without a vertex");
  for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
    if (q.arrow(arrows[k]).target != q.arrow(arrows[k + 1]).source)
      throw Error(ErrorKind::Semantic, "arrows '" + q.arrow(arrows[k]).name + "' and '" +
                                           q.arrow(arrows[k + 1]).name + "' do not compose");
  Path p;
  p.source = q.arrow(arrows.front()).source;
  p.target = q.arrow(arrows.back()).target;
  p.arrows = std::move(arrows);
  return p;
}

Path Path::then(const Path& o) const {
  Path p{source, o.target, arrows};
  p.arrows.insert(p.arrows.end(), o.arrows.begin(), o.arrows.end());
  return p;
}

std::string Path::str(const Quiver& q) const {
  if (arrows.empty()) return "e" + q.vertex_name(source);
  std::string s;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    if (k) s += '.';
    s += q.arrow(arrows[k]).name;
  }
  return s;
}

Cycle Cycle::of(const Quiver& q, std::vector<int> arrows) {
  Path p = Path::of(q, arrows);
  if (p.source != p.target) throw Error(ErrorKind::Semantic, "path " + p.str(q) + " is not a cycle");
  Cycle c;
  c.arrows_ = arrows;
  std::vector<int> rot = arrows;
  for (std::size_t k = 1; k < arrows.size(); ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < c.arrows_) c.arrows_ = rot;
  }
  return c;
}

bool Cycle::contains(int a) const { return std::find(arrows_.begin(), arrows_.end(), a) != arrows_.end(); }

Path Cycle::rotation(const Quiver& q, int start) const {
  std::vector<int> r(arrows_.begin() + start, arrows_.end());
  r.insert(r.end(), arrows_.begin(), arrows_.begin() + start);
  return Path::of(q, r);
}

std::string Cycle::str(const Quiver& q) const { return Path::of(q, arrows_).str(q); }

bool Walk::reduced() const {
  for (std::size_t k = 0; k + 1 < steps.size(); ++k)
    if (steps[k].arrow == steps[k + 1].arrow && steps[k].forward != steps[k + 1].forward) return false;
  return true;
}

std::string Walk::str(const Quiver& q) const {
  std::string s;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (k) s += '.';
    s += q.arrow(steps[k].arrow).name;
    if (!steps[k].forward) s += "^-1";
  }
  return s;
}

Cycle ChordlessCycle::as_cycle(const Quiver& q) const {
  if (!oriented) throw Error(ErrorKind::Semantic, "chordless cycle is not oriented");
  return Cycle::of(q, arrows);
}

std::string ChordlessCycle::str(const Quiver& q) const {
  std::string s = oriented ? "oriented (" : "non-oriented (";
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    if (k) s += ' ';
    s += q.arrow(arrows[k]).name;
  }
  return s + ")";
}

namespace {

// Arrows between distinct vertices u and v, in either direction.
std::vector<std::vector<std::vector<int>>> edge_table(const Quiver& q) {
  int n = q.num_vertices();
  std::vector<std::vector<std::vector<int>>> e(n, std::vector<std::vector<int>>(n));
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(a);
    if (ar.source == ar.target) continue;
    e[ar.source][ar.target].push_back(a);
    e[ar.target][ar.source].push_back(a);
  }
  return e;
}

ChordlessCycle make_cycle(const Quiver& q, std::vector<int> verts, std::vector<int> arrows) {
  ChordlessCycle c;
  std::size_t t = verts.size();
  bool fwd = true, bwd = true;
  for (std::size_t i = 0; i < t; ++i) {
    const auto& a = q.arrow(arrows[i]);
    int u = verts[i], v = verts[(i + 1) % t];
    if (!(a.source == u && a.target == v)) fwd = false;
    if (!(a.source == v && a.target == u)) bwd = false;
  }
  if (bwd && !fwd) {
    // Re-traverse in arrow direction: vertices reversed, arrows re-indexed.
    std::vector<int> rv(t), ra(t);
    for (std::size_t i = 0; i < t; ++i) rv[i] = verts[(t - i) % t];
    for (std::size_t i = 0; i < t; ++i) ra[i] = arrows[(2 * t - 1 - i) % t];
    verts = rv;
    arrows = ra;
    fwd = true;
  }
  c.vertices = std::move(verts);
  c.arrows = std::move(arrows);
  c.oriented = fwd;
  return c;
}

}  // namespace

std::vector<ChordlessCycle> enumerate_chordless_cycles(const Quiver& q) {
  int n = q.num_vertices();
  auto e = edge_table(q);
  std::vector<ChordlessCycle> out;
  // t = 2: exactly two arrows between a pair.
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (e[u][v].size() == 2) out.push_back(make_cycle(q, {u, v}, {e[u][v][0], e[u][v][1]}));
  // t >= 3: extend induced paths from their least vertex s.
  std::vector<int> path;
  std::function<void(int)> extend = [&](int s) {
    int last = path.back();
    for (int u = s + 1; u < n; ++u) {
      if (e[last][u].size() != 1) continue;
      if (std::find(path.begin(), path.end(), u) != path.end()) continue;
      bool chord = false;
      for (std::size_t j = 1; j + 1 < path.size(); ++j)
        if (!e[path[j]][u].empty()) chord = true;
      if (chord) continue;
      std::size_t to_start = e[s][u].size();
      if (path.size() >= 2 && to_start == 1) {
        if (path[1] < u) {
          std::vector<int> verts = path;
          verts.push_back(u);
          std::vector<int> arrows;
          for (std::size_t i = 0; i < verts.size(); ++i)
            arrows.push_back(e[verts[i]][verts[(i + 1) % verts.size()]][0]);
          out.push_back(make_cycle(q, verts, arrows));
        }
        continue;
      }
      if (to_start != 0 && path.size() >= 2) continue;
      if (path.size() == 1 && to_start != 1) continue;
      path.push_back(u);
      extend(s);
      path.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    extend(s);
  }
  return out;
}

bool is_cyclically_oriented(const Quiver& q) {
  for (const auto& c : enumerate_chordless_cycles(q))
    if (!c.oriented) return false;
  return true;
}

std::vector<std::pair<int, int>> find_double_arrows(const Quiver& q) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < q.num_arrows(); ++a)
    for (int b = a + 1; b < q.num_arrows(); ++b)
      if (q.arrow(a).source == q.arrow(b).source && q.arrow(a).target == q.arrow(b).target)
        out.emplace_back(a, b);
  return out;
}

std::vector<Bypass> find_bypasses(const Quiver& q, int max_len) {
  if (max_len < 0) max_len = q.num_vertices();
  bool old_cyclic = !is_triangular(q);
  std::vector<Bypass> out;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& alpha = q.arrow(a);
    std::vector<int> arrows;
    bool hit_cap = false;
    std::function<void(int)> dfs = [&](int v) {
      if (!arrows.empty() && v == alpha.target) out.push_back(Bypass{a, Path::of(q, arrows)});
      if (static_cast<int>(arrows.size()) == max_len) {
        if (!q.out_arrows(v).empty()) hit_cap = true;
        return;
      }
      for (int b : q.out_arrows(v)) {
        if (b == a) continue;
        arrows.push_back(b);
        dfs(q.arrow(b).target);
        arrows.pop_back();
      }
    };
    dfs(alpha.source);
    if (hit_cap && old_cyclic)
      throw Error(ErrorKind::CapExceeded, "bypass search reached the path-length cap " +
                                              std::to_string(max_len) + " on a quiver with oriented cycles");
  }
  return out;
}

std::vector<int> inner_arrows(const Quiver& q) {
  std::vector<int> count(q.num_arrows(), 0);
  for (const auto& c : enumerate_chordless_cycles(q)) {
    std::set<int> seen(c.arrows.begin(), c.arrows.end());
    for (int a : seen) ++count[a];
  }
  std::vector<int> out;
  for (int a = 0; a < q.num_arrows(); ++a)
    if (count[a] >= 2) out.push_back(a);
  return out;
}

bool is_triangular(const Quiver& q) {
  // Kahn's algorithm over old arrows; loops count as cycles.
  int n = q.num_vertices();
  std::vector<int> indeg(n, 0);
  for (const auto& a : q.arrows())
    if (a.kind == ArrowKind::Old) ++indeg[a.target];
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int a : q.out_arrows(v)) {
      if (q.arrow(a).kind != ArrowKind::Old) continue;
      if (--indeg[q.arrow(a).target] == 0) stack.push_back(q.arrow(a).target);
    }
  }
  return seen == n;
}

}  // namespace qpc
