#include "qpcohom/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "qpcohom/error.hpp"

namespace qpc {

namespace {

// All paths of length < bound, indexed by (length, arrow ids, vertex).
struct PathSpace {
  std::vector<Path> paths;
  std::map<std::vector<int>, int> index;  // non-stationary paths
  std::vector<int> stationary;
  std::vector<std::vector<int>> right;  // [path][arrow] -> index or -1
  std::vector<std::vector<int>> left;   // [arrow][path]
  std::vector<int> layer_start;         // first index of each length, plus end

  PathSpace(const Quiver& q, int bound) {
    std::vector<Path> layer;
    for (int v = 0; v < q.num_vertices(); ++v) layer.push_back(Path::stationary(v));
    for (int len = 0; len < bound; ++len) {
      layer_start.push_back(static_cast<int>(paths.size()));
      std::sort(layer.begin(), layer.end());
      for (auto& p : layer) {
        int id = static_cast<int>(paths.size());
        if (len == 0)
          stationary.push_back(id);
        else
          index.emplace(p.arrows, id);
        paths.push_back(p);
      }
      if (len + 1 == bound) break;
      std::vector<Path> next;
      for (const auto& p : layer)
        for (int a : q.out_arrows(p.target)) {
          Path n = p;
          n.arrows.push_back(a);
          n.target = q.arrow(a).target;
          next.push_back(std::move(n));
        }
      layer = std::move(next);
    }
    layer_start.push_back(static_cast<int>(paths.size()));
    int np = static_cast<int>(paths.size());
    right.assign(np, std::vector<int>(q.num_arrows(), -1));
    left.assign(q.num_arrows(), std::vector<int>(np, -1));
    for (int i = 0; i < np; ++i)
      for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        if (paths[i].target == ar.source) right[i][a] = find_concat(paths[i].arrows, {a});
        if (ar.target == paths[i].source) left[a][i] = find_concat({a}, paths[i].arrows);
      }
  }

  int find_concat(std::vector<int> x, const std::vector<int>& y) const {
    x.insert(x.end(), y.begin(), y.end());
    auto it = index.find(x);
    return it == index.end() ? -1 : it->second;
  }

  int find(const Path& p) const { return p.arrows.empty() ? stationary[p.source] : find_concat(p.arrows, {}); }
};

SparseVec map_indices(const SparseVec& v, const std::vector<int>& to, bool strict) {
  SparseVec out;
  std::map<int, Scalar> m;
  for (const auto& [i, c] : v) {
    int j = to[i];
    if (j < 0) {
      if (strict) throw Error(ErrorKind::Semantic, "element leaves the target subspace");
      continue;
    }
    m.emplace(j, c);
  }
  return SparseVec::from_map(m);
}

}  // namespace

std::vector<int> FiniteDimAlgebra::block(int i, int j) const {
  std::vector<int> out;
  for (int b = 0; b < dim(); ++b)
    if (source(b) == i && target(b) == j) out.push_back(b);
  return out;
}

std::vector<int> FiniteDimAlgebra::graded_dims() const {
  std::vector<int> out;
  for (const auto& p : basis_) {
    if (static_cast<int>(out.size()) <= p.length()) out.resize(p.length() + 1, 0);
    ++out[p.length()];
  }
  return out;
}

SparseVec FiniteDimAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [i, c] : x)
    for (const auto& [j, d] : y) {
      if (target(i) != source(j)) continue;
      out.axpy(c * d, product_[i][j]);
    }
  return out;
}

SparseVec FiniteDimAlgebra::path_element(const Path& p) const {
  SparseVec v = SparseVec::unit(idempotent_[p.source]);
  for (int a : p.arrows) {
    SparseVec next;
    for (const auto& [i, c] : v) next.axpy(c, right_[i][a]);
    v = std::move(next);
    if (v.empty()) break;
  }
  return v;
}

SparseVec FiniteDimAlgebra::relation_element(const Relation& r) const {
  SparseVec v;
  for (const auto& t : r.terms) v.axpy(t.coef, path_element(t.path));
  return v;
}

void FiniteDimAlgebra::index_idempotents() {
  idempotent_.assign(quiver_.num_vertices(), -1);
  for (int i = 0; i < dim(); ++i)
    if (basis_[i].arrows.empty()) idempotent_[basis_[i].source] = i;
  for (int v = 0; v < quiver_.num_vertices(); ++v)
    if (idempotent_[v] < 0)
      throw Error(ErrorKind::InvalidRelation, "relations kill the idempotent at vertex " + quiver_.vertex_name(v));
}

FiniteDimAlgebra FiniteDimAlgebra::from_tables(Quiver q, std::vector<Relation> rels, int stab_len,
                                               std::vector<Path> basis, std::vector<std::vector<SparseVec>> right,
                                               std::vector<std::vector<SparseVec>> left,
                                               std::vector<std::vector<SparseVec>> product) {
  FiniteDimAlgebra a;
  a.quiver_ = std::move(q);
  a.relations_ = std::move(rels);
  a.stab_len_ = stab_len;
  a.basis_ = std::move(basis);
  a.right_ = std::move(right);
  a.left_ = std::move(left);
  a.product_ = std::move(product);
  a.index_idempotents();
  return a;
}

FiniteDimAlgebra build_algebra(const Quiver& q, const std::vector<Relation>& rels, BuildOptions opts) {
  for (const auto& r : rels)
    for (const auto& t : r.terms) {
      if (t.path.length() == 0)
        throw Error(ErrorKind::InvalidRelation, "relation '" + r.name + "' has a stationary term");
      for (int a : t.path.arrows)
        if (a < 0 || a >= q.num_arrows())
          throw Error(ErrorKind::InvalidRelation, "relation '" + r.name + "' uses an unknown arrow");
    }
  int max_len = opts.max_len < 0 ? 2 * q.num_vertices() : opts.max_len;
  for (int bound = 2; bound <= max_len + 1; ++bound) {
    PathSpace ps(q, bound);
    Echelon ideal;
    std::deque<SparseVec> work;
    auto add = [&](const SparseVec& v) {
      SparseVec r = ideal.insert(v);
      if (!r.empty()) work.push_back(std::move(r));
    };
    for (const auto& r : rels) {
      std::map<int, Scalar> m;
      for (const auto& t : r.terms) {
        if (t.path.length() >= bound) continue;
        m[ps.find(t.path)] += t.coef;
      }
      add(SparseVec::from_map(m));
    }
    while (!work.empty()) {
      SparseVec v = std::move(work.front());
      work.pop_front();
      for (int a = 0; a < q.num_arrows(); ++a) {
        std::map<int, Scalar> rv, lv;
        for (const auto& [i, c] : v) {
          if (int j = ps.right[i][a]; j >= 0) rv[j] += c;
          if (int j = ps.left[a][i]; j >= 0) lv[j] += c;
        }
        add(SparseVec::from_map(rv));
        add(SparseVec::from_map(lv));
      }
    }
    bool stable = true;
    for (int i = ps.layer_start[bound - 1]; i < ps.layer_start[bound] && stable; ++i)
      if (!ideal.contains(SparseVec::unit(i))) stable = false;
    if (!stable) continue;

    std::vector<int> to_basis(ps.paths.size(), -1);
    std::vector<Path> basis;
    for (int i = 0; i < static_cast<int>(ps.paths.size()); ++i)
      if (!ideal.is_pivot(i)) {
        to_basis[i] = static_cast<int>(basis.size());
        basis.push_back(ps.paths[i]);
      }
    auto nf = [&](int path_index) -> SparseVec {
      if (path_index < 0) return {};
      return map_indices(ideal.reduce(SparseVec::unit(path_index)), to_basis, true);
    };
    int d = static_cast<int>(basis.size());
    std::vector<int> basis_path(d);
    for (int i = 0; i < d; ++i) basis_path[i] = ps.find(basis[i]);
    std::vector<std::vector<SparseVec>> right(d, std::vector<SparseVec>(q.num_arrows()));
    std::vector<std::vector<SparseVec>> left(q.num_arrows(), std::vector<SparseVec>(d));
    std::vector<std::vector<SparseVec>> product(d, std::vector<SparseVec>(d));
    for (int i = 0; i < d; ++i)
      for (int a = 0; a < q.num_arrows(); ++a) {
        right[i][a] = nf(ps.right[basis_path[i]][a]);
        left[a][i] = nf(ps.left[a][basis_path[i]]);
      }
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (basis[i].target != basis[j].source) continue;
        if (basis[i].length() == 0) {
          product[i][j] = SparseVec::unit(j);
        } else if (basis[j].length() == 0) {
          product[i][j] = SparseVec::unit(i);
        } else {
          product[i][j] = nf(ps.find_concat(basis[i].arrows, basis[j].arrows));
        }
      }
    int stab = 0;
    for (const auto& p : basis) stab = std::max(stab, p.length() + 1);
    return FiniteDimAlgebra::from_tables(q, rels, stab, std::move(basis), std::move(right), std::move(left),
                                         std::move(product));
  }
  throw Error(ErrorKind::NonFiniteDimensional,
              "quotient did not stabilize within path length " + std::to_string(max_len));
}

FiniteDimAlgebra jacobian_algebra(const QP& qp, BuildOptions opts) {
  std::vector<Relation> rels;
  for (auto& jr : jacobian_relations(qp)) rels.push_back(std::move(jr.relation));
  return build_algebra(qp.quiver, rels, opts);
}

bool check_associativity(const FiniteDimAlgebra& a, int limit, int samples, unsigned seed) {
  int d = a.dim();
  auto check = [&](int i, int j, int k) {
    SparseVec x = SparseVec::unit(i), y = SparseVec::unit(j), z = SparseVec::unit(k);
    return a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z));
  };
  if (d <= limit) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          if (!check(i, j, k)) return false;
    return true;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, d - 1);
  for (int s = 0; s < samples; ++s)
    if (!check(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

// ---------------------------------------------------------------- bimodules

Bimodule::Bimodule(std::shared_ptr<const FiniteDimAlgebra> alg, std::vector<int> left_vertex,
                   std::vector<int> right_vertex, std::vector<std::vector<SparseVec>> left_act,
                   std::vector<std::vector<SparseVec>> right_act)
    : alg_(std::move(alg)),
      left_vertex_(std::move(left_vertex)),
      right_vertex_(std::move(right_vertex)),
      left_act_(std::move(left_act)),
      right_act_(std::move(right_act)) {}

std::vector<int> Bimodule::block(int i, int j) const {
  std::vector<int> out;
  for (int m = 0; m < dim(); ++m)
    if (left_vertex_[m] == i && right_vertex_[m] == j) out.push_back(m);
  return out;
}

SparseVec Bimodule::act_left(const Path& p, const SparseVec& m) const {
  SparseVec v;
  for (const auto& [i, c] : m)
    if (left_vertex_[i] == p.target) v.push_back(i, c);
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend() && !v.empty(); ++it) {
    SparseVec next;
    for (const auto& [i, c] : v) next.axpy(c, left_act_[*it][i]);
    v = std::move(next);
  }
  return v;
}

SparseVec Bimodule::act_right(const SparseVec& m, const Path& p) const {
  SparseVec v;
  for (const auto& [i, c] : m)
    if (right_vertex_[i] == p.source) v.push_back(i, c);
  for (int a : p.arrows) {
    if (v.empty()) break;
    SparseVec next;
    for (const auto& [i, c] : v) next.axpy(c, right_act_[a][i]);
    v = std::move(next);
  }
  return v;
}

SparseVec Bimodule::act_left(const SparseVec& x, const SparseVec& m) const {
  SparseVec out;
  for (const auto& [i, c] : x) out.axpy(c, act_left(alg_->basis_path(i), m));
  return out;
}

SparseVec Bimodule::act_right(const SparseVec& m, const SparseVec& x) const {
  SparseVec out;
  for (const auto& [i, c] : x) out.axpy(c, act_right(m, alg_->basis_path(i)));
  return out;
}

Bimodule Bimodule::regular(std::shared_ptr<const FiniteDimAlgebra> alg) {
  const auto& a = *alg;
  int d = a.dim(), na = a.quiver().num_arrows();
  std::vector<int> lv(d), rv(d);
  std::vector<std::vector<SparseVec>> la(na, std::vector<SparseVec>(d)), ra(na, std::vector<SparseVec>(d));
  for (int i = 0; i < d; ++i) {
    lv[i] = a.source(i);
    rv[i] = a.target(i);
    for (int x = 0; x < na; ++x) {
      la[x][i] = a.left_arrow(x, i);
      ra[x][i] = a.right_arrow(i, x);
    }
  }
  return Bimodule(std::move(alg), lv, rv, la, ra);
}

Bimodule Bimodule::generated_by(const std::vector<SparseVec>& gens) const {
  int na = alg_->quiver().num_arrows();
  std::map<std::pair<int, int>, Echelon> blocks;
  std::deque<std::pair<std::pair<int, int>, SparseVec>> work;
  auto add = [&](const SparseVec& v) {
    std::map<std::pair<int, int>, SparseVec> parts;
    for (const auto& [i, c] : v) parts[{left_vertex_[i], right_vertex_[i]}].push_back(i, c);
    for (auto& [key, part] : parts) {
      SparseVec r = blocks[key].insert(part);
      if (!r.empty()) work.emplace_back(key, r);
    }
  };
  for (const auto& g : gens) add(g);
  while (!work.empty()) {
    SparseVec v = work.front().second;
    work.pop_front();
    for (int a = 0; a < na; ++a) {
      SparseVec l, r;
      for (const auto& [i, c] : v) {
        l.axpy(c, left_act_[a][i]);
        r.axpy(c, right_act_[a][i]);
      }
      add(l);
      add(r);
    }
  }
  std::vector<SparseVec> basis;
  std::vector<int> lv, rv;
  std::map<std::pair<int, int>, int> offset;
  for (auto& [key, e] : blocks) {
    offset[key] = static_cast<int>(basis.size());
    for (const auto& [p, row] : e.rows()) {
      basis.push_back(row);
      lv.push_back(key.first);
      rv.push_back(key.second);
    }
  }
  auto coords = [&](const SparseVec& w) -> SparseVec {
    if (w.empty()) return {};
    int i = w.lead();
    std::pair<int, int> key{left_vertex_[i], right_vertex_[i]};
    auto it = blocks.find(key);
    if (it == blocks.end()) throw Error(ErrorKind::Semantic, "generated submodule is not closed");
    auto cs = it->second.coordinates(w);
    SparseVec out;
    for (std::size_t k = 0; k < cs.size(); ++k) out.push_back(offset[key] + static_cast<int>(k), cs[k]);
    return out;
  };
  int d = static_cast<int>(basis.size());
  std::vector<std::vector<SparseVec>> la(na, std::vector<SparseVec>(d)), ra(na, std::vector<SparseVec>(d));
  for (int m = 0; m < d; ++m)
    for (int a = 0; a < na; ++a) {
      SparseVec l, r;
      for (const auto& [i, c] : basis[m]) {
        l.axpy(c, left_act_[a][i]);
        r.axpy(c, right_act_[a][i]);
      }
      la[a][m] = coords(l);
      ra[a][m] = coords(r);
    }
  Bimodule sub(alg_, lv, rv, la, ra);
  sub.ambient_ = std::move(basis);
  return sub;
}

SplitExtension split_extension(std::shared_ptr<const FiniteDimAlgebra> bptr) {
  const auto& b = *bptr;
  const Quiver& q = b.quiver();
  auto degree = [&](const Path& p) {
    int d = 0;
    for (int a : p.arrows) d += q.is_new(a) ? 1 : 0;
    return d;
  };
  std::vector<int> to_c(b.dim(), -1), to_e(b.dim(), -1);
  std::vector<int> c_idx, e_idx;
  for (int i = 0; i < b.dim(); ++i) {
    int d = degree(b.basis_path(i));
    if (d == 0) {
      to_c[i] = static_cast<int>(c_idx.size());
      c_idx.push_back(i);
    } else if (d == 1) {
      to_e[i] = static_cast<int>(e_idx.size());
      e_idx.push_back(i);
    } else {
      throw Error(ErrorKind::SquareZeroViolated,
                  "basis path " + b.basis_path(i).str(q) + " contains more than one new arrow");
    }
  }
  for (int i : e_idx)
    for (int j : e_idx)
      if (!b.product(i, j).empty()) throw Error(ErrorKind::SquareZeroViolated, "E*E is nonzero");

  // C: old arrows only, renumbered.
  std::vector<int> arrow_to_c(q.num_arrows(), -1), old_arrows;
  for (int a = 0; a < q.num_arrows(); ++a)
    if (!q.is_new(a)) {
      arrow_to_c[a] = static_cast<int>(old_arrows.size());
      old_arrows.push_back(a);
    }
  Quiver cq = q.subquiver([&](int a) { return !q.is_new(a); });
  auto to_c_path = [&](const Path& p) {
    Path r{p.source, p.target, {}};
    for (int a : p.arrows) r.arrows.push_back(arrow_to_c[a]);
    return r;
  };
  std::vector<Relation> crels;
  for (const auto& r : b.relations()) {
    bool old_only = true;
    for (const auto& t : r.terms)
      for (int a : t.path.arrows)
        if (q.is_new(a)) old_only = false;
    if (!old_only || r.terms.empty()) continue;
    Relation cr = r;
    for (auto& t : cr.terms) t.path = to_c_path(t.path);
    crels.push_back(cr);
  }
  int dc = static_cast<int>(c_idx.size()), nca = static_cast<int>(old_arrows.size());
  std::vector<Path> cbasis;
  for (int i : c_idx) cbasis.push_back(to_c_path(b.basis_path(i)));
  std::vector<std::vector<SparseVec>> cr(dc, std::vector<SparseVec>(nca)), cl(nca, std::vector<SparseVec>(dc)),
      cp(dc, std::vector<SparseVec>(dc));
  for (int i = 0; i < dc; ++i) {
    for (int x = 0; x < nca; ++x) {
      cr[i][x] = map_indices(b.right_arrow(c_idx[i], old_arrows[x]), to_c, true);
      cl[x][i] = map_indices(b.left_arrow(old_arrows[x], c_idx[i]), to_c, true);
    }
    for (int j = 0; j < dc; ++j) cp[i][j] = map_indices(b.product(c_idx[i], c_idx[j]), to_c, true);
  }
  auto c = std::make_shared<FiniteDimAlgebra>(FiniteDimAlgebra::from_tables(
      cq, crels, b.stabilization_length(), cbasis, std::move(cr), std::move(cl), std::move(cp)));

  int de = static_cast<int>(e_idx.size());
  std::vector<int> lv(de), rv(de);
  for (int m = 0; m < de; ++m) {
    lv[m] = b.source(e_idx[m]);
    rv[m] = b.target(e_idx[m]);
  }
  auto act_tables = [&](const std::vector<int>& arrows) {
    std::vector<std::vector<SparseVec>> la(arrows.size(), std::vector<SparseVec>(de));
    std::vector<std::vector<SparseVec>> ra(arrows.size(), std::vector<SparseVec>(de));
    for (std::size_t x = 0; x < arrows.size(); ++x)
      for (int m = 0; m < de; ++m) {
        la[x][m] = map_indices(b.left_arrow(arrows[x], e_idx[m]), to_e, true);
        ra[x][m] = map_indices(b.right_arrow(e_idx[m], arrows[x]), to_e, true);
      }
    return std::make_pair(la, ra);
  };
  auto [lc, rc] = act_tables(old_arrows);
  std::vector<int> all_arrows(q.num_arrows());
  for (int a = 0; a < q.num_arrows(); ++a) all_arrows[a] = a;
  auto [lb, rb] = act_tables(all_arrows);

  SplitExtension ext;
  ext.c = c;
  ext.e_over_c = Bimodule(c, lv, rv, lc, rc);
  ext.e_over_b = Bimodule(bptr, lv, rv, lb, rb);
  ext.e_basis_in_b = e_idx;
  return ext;
}

std::vector<Bimodule> bimodule_summands_from_potential(const SplitExtension& ext, const std::vector<Potential>& parts,
                                                       const Quiver& b_quiver) {
  const auto& b = ext.e_over_b.algebra();
  std::vector<int> to_e(b.dim(), -1);
  for (std::size_t m = 0; m < ext.e_basis_in_b.size(); ++m) to_e[ext.e_basis_in_b[m]] = static_cast<int>(m);
  std::vector<Bimodule> out;
  Echelon total;
  int dims = 0;
  for (const auto& w : parts) {
    std::set<int> news;
    for (const auto& t : w.terms())
      for (int a : t.cycle.arrows())
        if (b_quiver.is_new(a)) news.insert(a);
    std::vector<SparseVec> gens;
    for (int a : news) gens.push_back(map_indices(b.path_element(Path::of(b_quiver, {a})), to_e, true));
    Bimodule sub = ext.e_over_c.generated_by(gens);
    dims += sub.dim();
    for (const auto& v : sub.ambient_basis())
      if (total.insert(v).empty()) throw Error(ErrorKind::Semantic, "potential summands do not give a direct sum");
    out.push_back(std::move(sub));
  }
  if (dims != ext.e_over_c.dim() && !parts.empty())
    throw Error(ErrorKind::Semantic, "summands generated by new arrows do not exhaust E");
  return out;
}

HomSpace bimodule_hom(const Bimodule& m, const Bimodule& n) {
  if (m.algebra().quiver().num_arrows() != n.algebra().quiver().num_arrows() ||
      m.algebra().quiver().num_vertices() != n.algebra().quiver().num_vertices())
    throw Error(ErrorKind::Semantic, "bimodules over different algebras");
  // Unknown X[nb][mb] for basis elements in the same graded block.
  std::map<std::pair<int, int>, int> var;
  for (int mb = 0; mb < m.dim(); ++mb)
    for (int nb = 0; nb < n.dim(); ++nb)
      if (m.left_vertex(mb) == n.left_vertex(nb) && m.right_vertex(mb) == n.right_vertex(nb))
        var.emplace(std::make_pair(nb, mb), static_cast<int>(var.size()));
  int nv = static_cast<int>(var.size());
  std::vector<int> n_in_block_count(1, 0);
  std::vector<SparseVec> eqs;
  const Quiver& q = m.algebra().quiver();
  for (int a = 0; a < q.num_arrows(); ++a) {
    for (int mb = 0; mb < m.dim(); ++mb) {
      for (int side = 0; side < 2; ++side) {
        bool left = side == 0;
        if (left && m.left_vertex(mb) != q.arrow(a).target) continue;
        if (!left && m.right_vertex(mb) != q.arrow(a).source) continue;
        // phi(a.m) - a.phi(m), one equation per coordinate of N.
        std::map<int, std::map<int, Scalar>> rows;
        const SparseVec& am = left ? m.arrow_left(a, mb) : m.arrow_right(mb, a);
        for (const auto& [mp, c] : am)
          for (int nb = 0; nb < n.dim(); ++nb) {
            auto it = var.find({nb, mp});
            if (it != var.end()) rows[nb][it->second] += c;
          }
        for (int np = 0; np < n.dim(); ++np) {
          auto it = var.find({np, mb});
          if (it == var.end()) continue;
          const SparseVec& an = left ? n.arrow_left(a, np) : n.arrow_right(np, a);
          for (const auto& [nb, c] : an) rows[nb][it->second] -= c;
        }
        for (auto& [nb, row] : rows) {
          SparseVec r = SparseVec::from_map(row);
          if (!r.empty()) eqs.push_back(std::move(r));
        }
      }
    }
  }
  HomSpace h;
  h.basis = nullspace(eqs, nv);
  h.dim = static_cast<int>(h.basis.size());
  return h;
}

// ------------------------------------------------------ projective resolutions

namespace {

// Right module given as a subspace of a direct sum of indecomposable
// projectives e_v A, in concatenated coordinates.
struct ProjSum {
  std::vector<int> summands;
  std::vector<int> offset;
  std::vector<std::vector<int>> local;  // basis indices of A per summand
  int dim = 0;

  ProjSum(const FiniteDimAlgebra& a, std::vector<int> vs) : summands(std::move(vs)) {
    for (int v : summands) {
      offset.push_back(dim);
      std::vector<int> l;
      for (int i = 0; i < a.dim(); ++i)
        if (a.source(i) == v) l.push_back(i);
      dim += static_cast<int>(l.size());
      local.push_back(std::move(l));
    }
  }
  int summand_of(int coord) const {
    int s = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), coord) - offset.begin()) - 1;
    return s;
  }
  int basis_of(int coord) const {
    int s = summand_of(coord);
    return local[s][coord - offset[s]];
  }
  int coord(int s, int basis_index) const {
    auto it = std::find(local[s].begin(), local[s].end(), basis_index);
    return offset[s] + static_cast<int>(it - local[s].begin());
  }
};

SparseVec right_act_arrow(const FiniteDimAlgebra& a, const ProjSum& p, const SparseVec& x, int arrow) {
  std::map<int, Scalar> out;
  for (const auto& [k, c] : x) {
    int s = p.summand_of(k);
    for (const auto& [j, d] : a.right_arrow(p.basis_of(k), arrow)) out[p.coord(s, j)] += c * d;
  }
  return SparseVec::from_map(out);
}

SparseVec right_act_path(const FiniteDimAlgebra& a, const ProjSum& p, SparseVec x, const Path& path) {
  SparseVec v;
  for (const auto& [k, c] : x)
    if (a.target(p.basis_of(k)) == path.source) v.push_back(k, c);
  for (int arrow : path.arrows) v = right_act_arrow(a, p, v, arrow);
  return v;
}

}  // namespace

Resolution projective_resolution_dims(const FiniteDimAlgebra& a, int vertex, int k) {
  Resolution res;
  int nvert = a.quiver().num_vertices();
  std::vector<int> m0(nvert, 0);
  m0[vertex] = 1;
  res.multiplicities.push_back(m0);
  ProjSum amb(a, {vertex});
  std::vector<SparseVec> module;  // basis of the current syzygy
  for (int i : amb.local[0])
    if (i != a.idempotent(vertex)) module.push_back(SparseVec::unit(amb.coord(0, i)));
  res.syzygy_dims.push_back(static_cast<int>(module.size()));
  for (int step = 1; step <= k && !module.empty(); ++step) {
    // Radical of the module and a complement of it, vertex by vertex.
    std::map<int, Echelon> rad, full;
    auto split_by_vertex = [&](const SparseVec& v, std::map<int, Echelon>& into) {
      std::map<int, SparseVec> parts;
      for (const auto& [c, x] : v) parts[a.target(amb.basis_of(c))].push_back(c, x);
      for (auto& [w, part] : parts) into[w].insert(part);
    };
    for (const auto& m : module) {
      split_by_vertex(m, full);
      for (int arrow = 0; arrow < a.quiver().num_arrows(); ++arrow)
        split_by_vertex(right_act_arrow(a, amb, m, arrow), rad);
    }
    std::vector<int> gen_vertex;
    std::vector<SparseVec> gens;
    for (auto& [w, e] : full) {
      Echelon top = rad[w];
      for (const auto& [p, row] : e.rows())
        if (!top.insert(row).empty()) {
          gens.push_back(row);
          gen_vertex.push_back(w);
        }
    }
    std::vector<int> mult(nvert, 0);
    for (int w : gen_vertex) ++mult[w];
    res.multiplicities.push_back(mult);
    // Kernel of the cover: columns are images of the cover's basis.
    ProjSum cover(a, gen_vertex);
    std::vector<SparseVec> rows_by_target(amb.dim);
    std::vector<std::map<int, Scalar>> t(amb.dim);
    for (int col = 0; col < cover.dim; ++col) {
      int s = cover.summand_of(col);
      SparseVec img = right_act_path(a, amb, gens[s], a.basis_path(cover.basis_of(col)));
      for (const auto& [r, c] : img) t[r][col] += c;
    }
    std::vector<SparseVec> eqs;
    for (auto& row : t) {
      SparseVec r = SparseVec::from_map(row);
      if (!r.empty()) eqs.push_back(std::move(r));
    }
    module = nullspace(eqs, cover.dim);
    amb = cover;
    res.syzygy_dims.push_back(static_cast<int>(module.size()));
  }
  return res;
}

bool gldim_le_two(const FiniteDimAlgebra& a) {
  for (int v = 0; v < a.quiver().num_vertices(); ++v) {
    auto r = projective_resolution_dims(a, v, 2);
    if (r.syzygy_dims.size() >= 3 && r.syzygy_dims[2] != 0) return false;
  }
  return true;
}

int center_dim(const FiniteDimAlgebra& a) {
  std::vector<int> diag;
  for (int i = 0; i < a.dim(); ++i)
    if (a.source(i) == a.target(i)) diag.push_back(i);
  std::vector<SparseVec> eqs;
  for (int x = 0; x < a.quiver().num_arrows(); ++x) {
    std::map<int, std::map<int, Scalar>> r;
    for (std::size_t u = 0; u < diag.size(); ++u) {
      for (const auto& [j, c] : a.right_arrow(diag[u], x)) r[j][static_cast<int>(u)] += c;
      for (const auto& [j, c] : a.left_arrow(x, diag[u])) r[j][static_cast<int>(u)] -= c;
    }
    for (auto& [j, row] : r) {
      SparseVec v = SparseVec::from_map(row);
      if (!v.empty()) eqs.push_back(std::move(v));
    }
  }
  return static_cast<int>(nullspace(eqs, static_cast<int>(diag.size())).size());
}

FiniteDimAlgebra cut_algebra(const QP& qp, const std::vector<int>& cut, BuildOptions opts) {
  const Quiver& q = qp.quiver;
  std::vector<bool> in_cut(q.num_arrows(), false);
  for (int a : cut) in_cut.at(a) = true;
  std::vector<int> keep(q.num_arrows(), -1);
  int next = 0;
  for (int a = 0; a < q.num_arrows(); ++a)
    if (!in_cut[a]) keep[a] = next++;
  Quiver cq = q.subquiver([&](int a) { return !in_cut[a]; });
  std::vector<Relation> rels;
  for (int b = 0; b < q.num_arrows(); ++b) {
    Relation d = cyclic_derivative(q, qp.potential, b);
    std::vector<Term> kept;
    for (const auto& term : d.terms) {
      bool touches = false;
      for (int a : term.path.arrows) touches = touches || in_cut[a];
      if (touches) continue;
      Path p{term.path.source, term.path.target, {}};
      for (int a : term.path.arrows) p.arrows.push_back(keep[a]);
      kept.push_back(Term{term.coef, p});
    }
    if (!kept.empty()) rels.push_back(Relation::make(cq, d.name, std::move(kept)));
  }
  return build_algebra(cq, rels, opts);
}

}  // namespace qpc
