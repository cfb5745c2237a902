#include "qpcohom/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "qpcohom/error.hpp"

namespace qpc {

namespace {

Error geometry_error(const std::string& what) { return Error(ErrorKind::Semantic, what); }

}  // namespace

// ------------------------------------------------------------- triangulation

std::string Triangulation::point_name(int point) const {
  if (point < n_) return std::to_string(point + 1);
  return punctures_.at(point - n_);
}

std::string Triangulation::side_name(const Side& s) const {
  if (s.boundary)
    return "b(" + std::to_string(s.segment + 1) + "," + std::to_string((s.segment + 1) % n_ + 1) + ")";
  return arcs_.at(s.arc).name;
}

bool Triangulation::is_internal(int t) const {
  for (int k = 0; k < (triangles_[t].self_folded ? 2 : 3); ++k)
    if (triangles_[t].sides[k].boundary) return false;
  return true;
}

std::optional<int> Triangulation::folded_by_loop(int arc) const {
  for (int t = 0; t < static_cast<int>(triangles_.size()); ++t)
    if (triangles_[t].self_folded && triangles_[t].sides[0].arc == arc) return t;
  return std::nullopt;
}

std::optional<int> Triangulation::folded_around(int puncture_point) const {
  for (int t = 0; t < static_cast<int>(triangles_.size()); ++t) {
    if (!triangles_[t].self_folded) continue;
    const Arc& r = arcs_[triangles_[t].sides[1].arc];
    const Arc& l = arcs_[triangles_[t].sides[0].arc];
    int inner = r.end_a == l.end_a ? r.end_b : r.end_a;
    if (inner == puncture_point) return t;
  }
  return std::nullopt;
}

int Triangulation::outer_triangle(int self_folded) const {
  int loop = triangles_.at(self_folded).sides[0].arc;
  for (int t = 0; t < static_cast<int>(triangles_.size()); ++t) {
    if (triangles_[t].self_folded) continue;
    for (const auto& s : triangles_[t].sides)
      if (!s.boundary && s.arc == loop) return t;
  }
  throw geometry_error("loop of a self-folded triangle is not a side of an ordinary triangle");
}

Triangulation Triangulation::make(int n, std::vector<std::string> punctures, std::vector<Arc> arcs,
                                  std::vector<Triangle> triangles) {
  if (n < 1) throw geometry_error("need at least one boundary point");
  if (punctures.empty() || punctures.size() > 2) throw geometry_error("one or two punctures are supported");
  if (punctures.size() == 2 && punctures[0] == punctures[1]) throw geometry_error("duplicate puncture name");
  Triangulation t;
  t.n_ = n;
  t.punctures_ = std::move(punctures);
  t.arcs_ = std::move(arcs);
  t.triangles_ = std::move(triangles);
  int npts = n + t.num_punctures();
  int expected = n + 3 * t.num_punctures() - 3;
  if (static_cast<int>(t.arcs_.size()) != expected)
    throw geometry_error("expected " + std::to_string(expected) + " arcs, found " + std::to_string(t.arcs_.size()));
  std::set<std::string> names;
  for (const auto& a : t.arcs_) {
    if (!names.insert(a.name).second) throw geometry_error("duplicate arc '" + a.name + "'");
    if (a.end_a < 0 || a.end_a >= npts || a.end_b < 0 || a.end_b >= npts)
      throw geometry_error("arc '" + a.name + "' has an unknown endpoint");
  }
  std::set<std::string> tnames;
  std::vector<int> arc_slots(t.arcs_.size(), 0), seg_slots(n, 0);
  for (const auto& tri : t.triangles_) {
    if (!tnames.insert(tri.name).second) throw geometry_error("duplicate triangle '" + tri.name + "'");
    if (tri.self_folded) {
      const auto &ls = tri.sides[0], &rs = tri.sides[1];
      if (ls.boundary || rs.boundary) throw geometry_error("self-folded '" + tri.name + "' needs two arcs");
      const Arc& l = t.arcs_[ls.arc];
      const Arc& r = t.arcs_[rs.arc];
      if (!l.is_loop()) throw geometry_error("self-folded '" + tri.name + "': '" + l.name + "' is not a loop");
      int inner;
      if (r.end_a == l.end_a)
        inner = r.end_b;
      else if (r.end_b == l.end_a)
        inner = r.end_a;
      else
        throw geometry_error("self-folded '" + tri.name + "': radius does not start at the loop's base");
      if (inner == l.end_a || !t.is_puncture(inner))
        throw geometry_error("self-folded '" + tri.name + "': radius must end at a puncture");
      arc_slots[ls.arc] += 1;
      arc_slots[rs.arc] += 2;
    } else {
      for (const auto& s : tri.sides) {
        if (s.boundary) {
          if (s.segment < 0 || s.segment >= n) throw geometry_error("bad boundary segment");
          ++seg_slots[s.segment];
        } else {
          ++arc_slots[s.arc];
        }
      }
    }
  }
  for (std::size_t a = 0; a < t.arcs_.size(); ++a)
    if (arc_slots[a] != 2)
      throw geometry_error("arc '" + t.arcs_[a].name + "' fills " + std::to_string(arc_slots[a]) +
                           " triangle sides (expected 2)");
  for (int s = 0; s < n; ++s)
    if (seg_slots[s] != 1)
      throw geometry_error("boundary segment " + t.side_name(Side{true, -1, s}) + " fills " +
                           std::to_string(seg_slots[s]) + " triangle sides (expected 1)");
  // Orient ordinary triangles: boundary segments run from i to i+1; arcs
  // take whichever direction closes the triangle up.
  std::map<int, std::vector<std::pair<int, int>>> traversals;  // arc -> (from, to) per slot
  for (auto& tri : t.triangles_) {
    if (tri.self_folded) continue;
    std::set<std::array<int, 3>> solutions;
    std::array<std::pair<int, int>, 3> chosen{};
    for (int mask = 0; mask < 8; ++mask) {
      std::array<std::pair<int, int>, 3> dir{};
      bool ok = true;
      for (int k = 0; k < 3 && ok; ++k) {
        const Side& s = tri.sides[k];
        bool flip = (mask >> k) & 1;
        if (s.boundary) {
          if (flip) ok = false;
          dir[k] = {s.segment, (s.segment + 1) % n};
        } else {
          const Arc& a = t.arcs_[s.arc];
          dir[k] = flip ? std::make_pair(a.end_b, a.end_a) : std::make_pair(a.end_a, a.end_b);
        }
      }
      if (!ok) continue;
      for (int k = 0; k < 3 && ok; ++k)
        if (dir[k].second != dir[(k + 1) % 3].first) ok = false;
      if (!ok) continue;
      std::array<int, 3> corners{dir[0].second, dir[1].second, dir[2].second};
      if (solutions.insert(corners).second) chosen = dir;
    }
    if (solutions.empty()) throw geometry_error("sides of triangle '" + tri.name + "' do not close up");
    if (solutions.size() > 1) throw geometry_error("corners of triangle '" + tri.name + "' are ambiguous");
    tri.corners = *solutions.begin();
    for (int k = 0; k < 3; ++k)
      if (!tri.sides[k].boundary) traversals[tri.sides[k].arc].push_back(chosen[k]);
  }
  for (const auto& [arc, dirs] : traversals) {
    const Arc& a = t.arcs_[arc];
    if (a.is_loop() || dirs.size() != 2) continue;
    if (dirs[0] == dirs[1])
      throw geometry_error("arc '" + a.name + "' is traversed the same way by both of its triangles");
  }
  return t;
}

int valency(const Triangulation& t, int puncture_point) {
  int v = 0;
  for (const auto& a : t.arcs()) v += (a.end_a == puncture_point) + (a.end_b == puncture_point);
  return v;
}

// ------------------------------------------------------------------- blocks

std::string to_string(BlockType b) {
  switch (b) {
    case BlockType::I: return "I";
    case BlockType::II: return "II";
    case BlockType::IIIa: return "IIIa";
    case BlockType::IIIb: return "IIIb";
    case BlockType::IV: return "IV";
    case BlockType::V: return "V";
    case BlockType::Empty: return "empty";
  }
  return "?";
}

std::vector<Block> decompose_blocks(const Triangulation& t) {
  std::vector<Block> out;
  const auto& tris = t.triangles();
  for (int ti = 0; ti < static_cast<int>(tris.size()); ++ti) {
    const Triangle& tri = tris[ti];
    if (tri.self_folded) continue;
    Block b;
    b.triangles.push_back(ti);
    int kb = 0, kf = 0, fold_side = -1, arc_side = -1;
    for (int k = 0; k < 3; ++k) {
      const Side& s = tri.sides[k];
      if (s.boundary) {
        ++kb;
        continue;
      }
      if (auto f = t.folded_by_loop(s.arc)) {
        ++kf;
        fold_side = k;
        b.triangles.push_back(*f);
        b.enclosed.push_back(s.arc);
        b.enclosed.push_back(tris[*f].sides[1].arc);
      } else {
        arc_side = k;
        b.outlets.push_back(s.arc);
      }
    }
    if (kb >= 2)
      b.type = BlockType::Empty;
    else if (kb == 1 && kf == 0)
      b.type = BlockType::I;
    else if (kb == 1 && kf == 1)
      b.type = (fold_side + 1) % 3 == arc_side ? BlockType::IIIa : BlockType::IIIb;
    else if (kb == 0 && kf == 0)
      b.type = BlockType::II;
    else if (kb == 0 && kf == 1)
      b.type = BlockType::IV;
    else if (kb == 0 && kf == 2)
      b.type = BlockType::V;
    else
      throw Error(ErrorKind::UnclassifiableTriangle, "triangle '" + tri.name + "' matches no block type");
    out.push_back(std::move(b));
  }
  return out;
}

// --------------------------------------------------------------- adjacency

AdjacencyQP adjacency_qp(const Triangulation& t) {
  decompose_blocks(t);  // rejects unclassifiable configurations
  AdjacencyQP out;
  Quiver q;
  for (const auto& a : t.arcs()) q.add_vertex(a.name);
  out.arc_vertex.resize(t.arcs().size());
  std::iota(out.arc_vertex.begin(), out.arc_vertex.end(), 0);
  const auto& tris = t.triangles();
  auto lift = [&](const Side& s) -> std::vector<int> {
    if (s.boundary) return {};
    if (auto f = t.folded_by_loop(s.arc)) return {s.arc, tris[*f].sides[1].arc};
    return {s.arc};
  };
  std::map<std::tuple<int, int, int, int>, int> arrow_at;  // (triangle, corner, from, to)
  for (int ti = 0; ti < static_cast<int>(tris.size()); ++ti) {
    if (tris[ti].self_folded) continue;
    for (int k = 0; k < 3; ++k)
      for (int u : lift(tris[ti].sides[k]))
        for (int v : lift(tris[ti].sides[(k + 1) % 3])) {
          int a = q.add_arrow(tris[ti].name + "_" + t.arcs()[u].name + "_" + t.arcs()[v].name, u, v);
          arrow_at[{ti, k, u, v}] = a;
          out.arrow_triangle.push_back(ti);
          out.arrow_corner.push_back(k);
        }
  }
  struct Origin {
    CycleOrigin kind;
    int triangle;
    int puncture;
  };
  std::vector<std::pair<Cycle, Origin>> cycles;
  out.puncture_cycle.assign(t.num_punctures(), std::nullopt);
  out.triangle_cycle.assign(tris.size(), std::nullopt);
  auto radius_owner = [&](int arc) -> int {  // puncture index enclosed by this radius, or -1
    for (const auto& tri : tris)
      if (tri.self_folded && tri.sides[1].arc == arc) {
        const Arc& r = t.arcs()[arc];
        const Arc& l = t.arcs()[tri.sides[0].arc];
        int inner = r.end_a == l.end_a ? r.end_b : r.end_a;
        return inner - t.boundary_points();
      }
    return -1;
  };
  for (int ti = 0; ti < static_cast<int>(tris.size()); ++ti) {
    if (tris[ti].self_folded || !t.is_internal(ti)) continue;
    auto l0 = lift(tris[ti].sides[0]), l1 = lift(tris[ti].sides[1]), l2 = lift(tris[ti].sides[2]);
    for (std::size_t i0 = 0; i0 < l0.size(); ++i0)
      for (std::size_t i1 = 0; i1 < l1.size(); ++i1)
        for (std::size_t i2 = 0; i2 < l2.size(); ++i2) {
          int u0 = l0[i0], u1 = l1[i1], u2 = l2[i2];
          Cycle c = Cycle::of(q, {arrow_at[{ti, 0, u0, u1}], arrow_at[{ti, 1, u1, u2}], arrow_at[{ti, 2, u2, u0}]});
          std::vector<int> radii;
          if (i0) radii.push_back(u0);
          if (i1) radii.push_back(u1);
          if (i2) radii.push_back(u2);
          if (radii.empty()) {
            out.triangle_cycle[ti] = c;
            cycles.push_back({c, {CycleOrigin::Triangle, ti, -1}});
          } else if (radii.size() == 1) {
            int x = radius_owner(radii[0]);
            out.puncture_cycle[x] = c;
            cycles.push_back({c, {CycleOrigin::Puncture, ti, x}});
          } else {
            cycles.push_back({c, {CycleOrigin::Lift, ti, -1}});
          }
        }
  }
  for (int x = 0; x < t.num_punctures(); ++x) {
    int px = t.puncture_point(x);
    int val = valency(t, px);
    if (val < 2) continue;
    for (const auto& a : t.arcs())
      if (a.is_loop() && a.end_a == px)
        throw Error(ErrorKind::UnsupportedReduction,
                    "loop '" + a.name + "' based at puncture " + t.point_name(px) + " is not supported");
    std::map<int, std::pair<int, int>> angle_from;  // from arc -> (arrow, to arc)
    for (int ti = 0; ti < static_cast<int>(tris.size()); ++ti) {
      if (tris[ti].self_folded) continue;
      for (int k = 0; k < 3; ++k) {
        if (tris[ti].corners[k] != px) continue;
        const Side &s = tris[ti].sides[k], &s2 = tris[ti].sides[(k + 1) % 3];
        if (s.boundary || s2.boundary) throw geometry_error("boundary side at a puncture");
        if (!angle_from.emplace(s.arc, std::make_pair(arrow_at[{ti, k, s.arc, s2.arc}], s2.arc)).second)
          throw Error(ErrorKind::UnsupportedReduction, "angles around puncture " + t.point_name(px) + " are ambiguous");
      }
    }
    if (static_cast<int>(angle_from.size()) != val)
      throw geometry_error("angles around puncture " + t.point_name(px) + " do not match its valency");
    std::vector<int> arrows;
    int start = angle_from.begin()->first, cur = start;
    do {
      auto it = angle_from.find(cur);
      if (it == angle_from.end()) throw geometry_error("angles around a puncture do not close up");
      arrows.push_back(it->second.first);
      cur = it->second.second;
    } while (cur != start && static_cast<int>(arrows.size()) <= val);
    if (static_cast<int>(arrows.size()) != val) throw geometry_error("angles around a puncture form several cycles");
    Cycle c = Cycle::of(q, arrows);
    out.puncture_cycle[x] = c;
    cycles.push_back({c, {CycleOrigin::Puncture, -1, x}});
  }
  std::vector<CycleTerm> terms;
  std::map<Cycle, Origin> origin_of;
  for (auto& [c, o] : cycles) {
    if (!origin_of.emplace(c, o).second) throw geometry_error("a cycle arises twice in the potential");
    terms.push_back(CycleTerm{Scalar(1), c});
  }
  out.qp = make_qp(q, Potential::make(std::move(terms)));
  for (const auto& term : out.qp.potential.terms()) {
    const Origin& o = origin_of.at(term.cycle);
    out.origin.push_back(o.kind);
    out.origin_triangle.push_back(o.triangle);
    out.origin_puncture.push_back(o.puncture);
  }
  return out;
}

// -------------------------------------------------------------- relatedness

RelatednessReport relatedness(const Triangulation& t) {
  RelatednessReport r;
  const auto& tris = t.triangles();
  r.punctures = t.punctures();
  for (int x = 0; x < t.num_punctures(); ++x) {
    int px = t.puncture_point(x);
    r.valency.push_back(valency(t, px));
    std::vector<int> bar, plain;
    auto enclosing = t.folded_around(px);
    for (int ti = 0; ti < static_cast<int>(tris.size()); ++ti) {
      if (!t.is_internal(ti)) continue;
      bool related = false;
      for (int k = 0; k < (tris[ti].self_folded ? 2 : 3); ++k) {
        const Arc& a = t.arcs()[tris[ti].sides[k].arc];
        if (a.end_a == px || a.end_b == px) related = true;
      }
      if (enclosing && !tris[ti].self_folded && t.outer_triangle(*enclosing) == ti) related = true;
      if (!related) continue;
      bar.push_back(ti);
      if (!tris[ti].self_folded) plain.push_back(ti);
    }
    r.m.push_back(r.valency.back() >= 3 || bar.size() >= 2 ? 1 : 0);
    r.rel_bar.push_back(bar);
    r.rel.push_back(plain);
  }
  std::set<int> related_any;
  for (const auto& v : r.rel) related_any.insert(v.begin(), v.end());
  for (int ti = 0; ti < static_cast<int>(tris.size()); ++ti)
    if (!tris[ti].self_folded && t.is_internal(ti) && !related_any.count(ti)) r.nrel.push_back(ti);
  r.m_p = r.m[0];
  if (t.num_punctures() == 2) {
    r.m_q = r.m[1];
    for (int ti : r.rel[0])
      if (std::find(r.rel[1].begin(), r.rel[1].end(), ti) != r.rel[1].end()) r.m_pq = 1;
  }
  return r;
}

int theorem_b_dim(const RelatednessReport& r) {
  return static_cast<int>(r.nrel.size()) + r.m_p + r.m_q - r.m_pq;
}

int theorem_b_dim(const Triangulation& t) { return theorem_b_dim(relatedness(t)); }

std::vector<std::vector<int>> triangle_classes(const Triangulation& t, const RelatednessReport& r) {
  std::vector<int> internal;
  for (int ti = 0; ti < static_cast<int>(t.triangles().size()); ++ti)
    if (!t.triangles()[ti].self_folded && t.is_internal(ti)) internal.push_back(ti);
  std::map<int, int> parent;
  for (int ti : internal) parent[ti] = ti;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& rel : r.rel)
    for (std::size_t k = 1; k < rel.size(); ++k) {
      int a = find(rel[0]), b = find(rel[k]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<int>> classes;
  for (int ti : internal) classes[find(ti)].push_back(ti);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : classes) out.push_back(members);
  return out;
}

// ---------------------------------------------------------------- reduction

std::string to_string(ValencyTwoConfig c) {
  switch (c) {
    case ValencyTwoConfig::A: return "A";
    case ValencyTwoConfig::B: return "B";
    case ValencyTwoConfig::C: return "C";
  }
  return "?";
}

ReducedQP reduce_local(const AdjacencyQP& unreduced, const Triangulation& t) {
  const Quiver& q = unreduced.qp.quiver;
  std::vector<CycleTerm> terms = unreduced.qp.potential.terms();
  std::vector<bool> deleted(q.num_arrows(), false);
  ReducedQP out;
  out.puncture_survives.assign(t.num_punctures(), false);
  out.config.assign(t.num_punctures(), std::nullopt);
  const auto& tris = t.triangles();
  auto has_fold = [&](int ti) {
    for (const auto& s : tris[ti].sides)
      if (!s.boundary && t.folded_by_loop(s.arc)) return true;
    return false;
  };
  for (int x = 0; x < t.num_punctures(); ++x) {
    int px = t.puncture_point(x);
    int val = valency(t, px);
    if (val >= 3) out.puncture_survives[x] = true;
    if (val == 1) out.puncture_survives[x] = unreduced.puncture_cycle[x].has_value();
    if (val != 2) continue;
    const Cycle& cx = *unreduced.puncture_cycle[x];
    int arrow_a = cx.arrows()[0], arrow_b = cx.arrows()[1];
    int t1 = unreduced.arrow_triangle[arrow_a], t2 = unreduced.arrow_triangle[arrow_b];
    bool i1 = t.is_internal(t1), i2 = t.is_internal(t2);
    bool f1 = has_fold(t1), f2 = has_fold(t2);
    ValencyTwoConfig config;
    if (i1 && i2 && !f1 && !f2)
      config = ValencyTwoConfig::A;
    else if (i1 != i2)
      config = ValencyTwoConfig::B;
    else if (i1 && i2 && f1 != f2)
      config = ValencyTwoConfig::C;
    else
      throw Error(ErrorKind::UnsupportedReduction,
                  "puncture " + t.point_name(px) + " of valency 2 is in none of the configurations A, B, C");
    out.config[x] = config;

    // W = c*AB + A*U + B*V + rest  ~>  rest - (1/c) U*V
    Scalar c;
    bool found = false;
    std::vector<Term> u_terms, v_terms;
    std::vector<CycleTerm> rest;
    for (const auto& term : terms) {
      const auto& arr = term.cycle.arrows();
      if (term.cycle == cx) {
        c = term.coef;
        found = true;
        continue;
      }
      int na = static_cast<int>(std::count(arr.begin(), arr.end(), arrow_a));
      int nb = static_cast<int>(std::count(arr.begin(), arr.end(), arrow_b));
      if (na + nb > 1)
        throw Error(ErrorKind::UnsupportedReduction, "cycle " + term.cycle.str(q) + " meets the 2-cycle twice");
      if (na + nb == 0) {
        rest.push_back(term);
        continue;
      }
      int hit = na ? arrow_a : arrow_b;
      int pos = static_cast<int>(std::find(arr.begin(), arr.end(), hit) - arr.begin());
      Path p = term.cycle.rotation(q, pos);
      Path tail{q.arrow(hit).target, q.arrow(hit).source, {p.arrows.begin() + 1, p.arrows.end()}};
      (na ? u_terms : v_terms).push_back(Term{term.coef, tail});
    }
    if (!found) throw Error(ErrorKind::UnsupportedReduction, "2-cycle around " + t.point_name(px) + " is missing");
    out.puncture_survives[x] = !u_terms.empty() && !v_terms.empty();
    for (const auto& u : u_terms)
      for (const auto& v : v_terms) {
        Path uv = u.path.then(v.path);
        rest.push_back(CycleTerm{-(u.coef * v.coef) / c, Cycle::of(q, uv.arrows)});
      }
    terms = Potential::make(std::move(rest)).terms();
    deleted[arrow_a] = deleted[arrow_b] = true;
  }
  std::vector<int> new_id(q.num_arrows(), -1);
  int next = 0;
  for (int a = 0; a < q.num_arrows(); ++a)
    if (!deleted[a]) new_id[a] = next++;
  Quiver rq = q.subquiver([&](int a) { return !deleted[a]; });
  std::vector<CycleTerm> mapped;
  for (const auto& term : terms) {
    std::vector<int> arr;
    for (int a : term.cycle.arrows()) {
      if (deleted[a]) throw Error(ErrorKind::UnsupportedReduction, "reduced potential uses a deleted arrow");
      arr.push_back(new_id[a]);
    }
    if (arr.size() < 3) throw Error(ErrorKind::UnsupportedReduction, "reduction leaves a cycle of length < 3");
    mapped.push_back(CycleTerm{term.coef, Cycle::of(rq, arr)});
  }
  for (int a = 0; a < rq.num_arrows(); ++a)
    for (int b = a + 1; b < rq.num_arrows(); ++b)
      if (rq.arrow(a).source == rq.arrow(b).target && rq.arrow(a).target == rq.arrow(b).source)
        throw Error(ErrorKind::UnsupportedReduction, "reduced quiver still has a 2-cycle");
  out.qp = make_qp(rq, Potential::make(std::move(mapped)));
  return out;
}

// --------------------------------------------------------------------- cuts

std::vector<GeometricCut> geometric_cuts(const Triangulation& t, BuildOptions opts) {
  for (int x = 0; x < t.num_punctures(); ++x)
    if (valency(t, t.puncture_point(x)) != 1)
      throw geometry_error("geometric cuts need every puncture to have valency 1");
  AdjacencyQP aqp = adjacency_qp(t);
  ReducedQP red = reduce_local(aqp, t);  // identity here; checks 2-acyclicity
  const QP& qp = red.qp;
  const Quiver& q = qp.quiver;
  std::vector<int> internal;
  for (int ti = 0; ti < static_cast<int>(t.triangles().size()); ++ti)
    if (!t.triangles()[ti].self_folded && t.is_internal(ti)) internal.push_back(ti);
  auto chordless = enumerate_chordless_cycles(q);
  std::vector<GeometricCut> out;
  std::vector<int> choice(internal.size(), 0);
  while (true) {
    GeometricCut cut;
    cut.corners = choice;
    std::vector<bool> in_cut(q.num_arrows(), false);
    for (int a = 0; a < q.num_arrows(); ++a)
      for (std::size_t k = 0; k < internal.size(); ++k)
        if (aqp.arrow_triangle[a] == internal[k] && aqp.arrow_corner[a] == choice[k]) in_cut[a] = true;
    for (int a = 0; a < q.num_arrows(); ++a)
      if (in_cut[a]) cut.arrows.push_back(a);
    cut.admissible = true;
    for (const auto& c : chordless) {
      if (!c.oriented) continue;
      int hits = 0;
      for (int a : c.arrows) hits += in_cut[a] ? 1 : 0;
      if (hits != 1) cut.admissible = false;
    }
    cut.algebra = std::make_shared<const FiniteDimAlgebra>(cut_algebra(qp, cut.arrows, opts));
    cut.gldim_le_two = gldim_le_two(*cut.algebra);
    out.push_back(std::move(cut));
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == 3) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

// -------------------------------------------------------------- enumeration

namespace {

// Segment from boundary point `start` running counterclockwise over `len`
// boundary segments; len == n is a loop.
struct Seg {
  int start;
  int len;
  friend bool operator==(const Seg&, const Seg&) = default;
};

int mod(int a, int n) { return ((a % n) + n) % n; }

bool seg_contains(const Seg& outer, const Seg& inner, int n) {
  return !(outer == inner) && mod(inner.start - outer.start, n) + inner.len <= outer.len;
}

bool seg_disjoint(const Seg& a, const Seg& b, int n) {
  return mod(b.start - a.start, n) >= a.len && mod(a.start - b.start, n) >= b.len;
}

struct Candidate {
  bool radial;
  int point;  // radial endpoint
  Seg seg;
};

bool compatible(const Candidate& x, const Candidate& y, int n) {
  if (x.radial && y.radial) return true;
  if (x.radial || y.radial) {
    const Candidate& r = x.radial ? x : y;
    const Candidate& s = x.radial ? y : x;
    int off = mod(r.point - s.seg.start, n);
    return !(off > 0 && off < s.seg.len) && !(s.seg.len == n && r.point != s.seg.start);
  }
  return x.seg == y.seg || seg_contains(x.seg, y.seg, n) || seg_contains(y.seg, x.seg, n) ||
         seg_disjoint(x.seg, y.seg, n);
}

std::string seg_name(const Seg& s, int n) {
  if (s.len == n) return "l" + std::to_string(s.start + 1);
  return "c" + std::to_string(s.start + 1) + "_" + std::to_string((s.start + s.len) % n + 1);
}

Triangulation build_once_punctured(int n, const std::vector<Candidate>& chosen) {
  std::vector<Arc> arcs;
  std::map<std::pair<int, int>, int> seg_arc;  // (start, len) -> arc
  std::map<int, int> radial_arc;
  std::vector<Seg> segs;
  for (const auto& c : chosen) {
    if (c.radial) {
      radial_arc[c.point] = static_cast<int>(arcs.size());
      arcs.push_back(Arc{"r" + std::to_string(c.point + 1), c.point, n});
    } else {
      seg_arc[{c.seg.start, c.seg.len}] = static_cast<int>(arcs.size());
      arcs.push_back(Arc{seg_name(c.seg, n), c.seg.start, mod(c.seg.start + c.seg.len, n)});
      segs.push_back(c.seg);
    }
  }
  std::vector<Seg> all = segs;
  for (int i = 0; i < n; ++i) all.push_back(Seg{i, 1});
  auto side_of = [&](const Seg& s) {
    if (s.len == 1) return Side{true, -1, s.start};
    return Side{false, seg_arc.at({s.start, s.len}), -1};
  };
  std::vector<Triangle> tris;
  int counter = 0;
  auto add = [&](std::array<Side, 3> sides) {
    Triangle t;
    t.name = "t" + std::to_string(++counter);
    t.sides = sides;
    tris.push_back(t);
  };
  auto maximal_inside = [&](const Seg& outer) {
    std::vector<Seg> inside;
    for (const auto& s : all)
      if (seg_contains(outer, s, n)) inside.push_back(s);
    std::vector<Seg> maximal;
    for (const auto& s : inside) {
      bool top = true;
      for (const auto& o : inside)
        if (seg_contains(o, s, n)) top = false;
      if (top) maximal.push_back(s);
    }
    return maximal;
  };
  for (const auto& c : segs) {
    auto parts = maximal_inside(c);
    if (parts.size() != 2) throw geometry_error("enumeration produced a non-triangular face");
    Seg first = mod(parts[0].start - c.start, n) == 0 ? parts[0] : parts[1];
    Seg second = first == parts[0] ? parts[1] : parts[0];
    add({side_of(first), side_of(second), side_of(c)});
  }
  // Region around the puncture.
  std::optional<Seg> loop;
  for (const auto& s : segs)
    if (s.len == n) loop = s;
  if (loop) {
    Triangle t;
    t.name = "t" + std::to_string(++counter);
    t.self_folded = true;
    t.sides[0] = side_of(*loop);
    t.sides[1] = Side{false, radial_arc.at(loop->start), -1};
    tris.push_back(t);
  } else {
    std::vector<Seg> outer;
    for (const auto& s : all) {
      bool top = true;
      for (const auto& o : all)
        if (seg_contains(o, s, n)) top = false;
      if (top) outer.push_back(s);
    }
    for (const auto& s : outer) {
      int end = mod(s.start + s.len, n);
      add({side_of(s), Side{false, radial_arc.at(end), -1}, Side{false, radial_arc.at(s.start), -1}});
    }
  }
  return Triangulation::make(n, {"p"}, std::move(arcs), std::move(tris));
}

}  // namespace

std::vector<Triangulation> enumerate_once_punctured(int n) {
  if (n < 3) throw geometry_error("enumeration needs at least three boundary points");
  std::vector<Candidate> universe;
  for (int i = 0; i < n; ++i) universe.push_back(Candidate{true, i, {}});
  for (int i = 0; i < n; ++i) universe.push_back(Candidate{false, -1, Seg{i, n}});
  for (int i = 0; i < n; ++i)
    for (int len = 2; len < n; ++len) universe.push_back(Candidate{false, -1, Seg{i, len}});
  std::vector<Triangulation> out;
  std::vector<Candidate> chosen;
  std::function<void(std::size_t)> search = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == n) {
      out.push_back(build_once_punctured(n, chosen));
      return;
    }
    for (std::size_t k = from; k < universe.size(); ++k) {
      bool ok = true;
      for (const auto& c : chosen)
        if (!compatible(c, universe[k], n)) ok = false;
      if (!ok) continue;
      chosen.push_back(universe[k]);
      search(k + 1);
      chosen.pop_back();
    }
  };
  search(0);
  return out;
}

}  // namespace qpc
