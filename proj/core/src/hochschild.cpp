#include "qpcohom/hochschild.hpp"

#include <algorithm>
#include <map>

#include "qpcohom/error.hpp"

namespace qpc {

namespace {

void check_compatible(const FiniteDimAlgebra& a, const Bimodule& m) {
  const Quiver& q = a.quiver();
  const Quiver& p = m.algebra().quiver();
  if (q.num_vertices() != p.num_vertices() || q.num_arrows() != p.num_arrows())
    throw Error(ErrorKind::Semantic, "bimodule is graded over a different quiver");
  for (int x = 0; x < q.num_arrows(); ++x)
    if (q.arrow(x).source != p.arrow(x).source || q.arrow(x).target != p.arrow(x).target)
      throw Error(ErrorKind::Semantic, "bimodule is graded over a different quiver");
}

// Unknown coordinates of d(a): basis elements of M in block (s(a), t(a)).
struct DerivationUnknowns {
  std::vector<std::vector<int>> block;  // per arrow: M basis indices
  std::vector<int> offset;
  int count = 0;

  DerivationUnknowns(const FiniteDimAlgebra& a, const Bimodule& m) {
    for (const auto& ar : a.quiver().arrows()) {
      offset.push_back(count);
      block.push_back(m.block(ar.source, ar.target));
      count += static_cast<int>(block.back().size());
    }
  }
};

// Adds, for each M-coordinate, the row of sum_k c * prefix . d(a_k) . suffix.
void add_leibniz(const Bimodule& m, const DerivationUnknowns& u, const Path& p, const Scalar& coef,
                 std::map<int, std::map<int, Scalar>>& rows) {
  const Quiver& q = m.algebra().quiver();
  for (int k = 0; k < p.length(); ++k) {
    int a = p.arrows[k];
    Path prefix{p.source, q.arrow(a).source, {p.arrows.begin(), p.arrows.begin() + k}};
    Path suffix{q.arrow(a).target, p.target, {p.arrows.begin() + k + 1, p.arrows.end()}};
    for (std::size_t j = 0; j < u.block[a].size(); ++j) {
      SparseVec v = SparseVec::unit(u.block[a][j]);
      v = m.act_right(m.act_left(prefix, v), suffix);
      for (const auto& [coord, c] : v) rows[coord][u.offset[a] + static_cast<int>(j)] += coef * c;
    }
  }
}

}  // namespace

int der0_dim(const FiniteDimAlgebra& a, const Bimodule& m) {
  check_compatible(a, m);
  DerivationUnknowns u(a, m);
  std::vector<SparseVec> eqs;
  auto flush = [&](std::map<int, std::map<int, Scalar>>& rows) {
    for (auto& [coord, row] : rows) {
      SparseVec r = SparseVec::from_map(row);
      if (!r.empty()) eqs.push_back(std::move(r));
    }
    rows.clear();
  };
  for (const auto& r : a.relations()) {
    std::map<int, std::map<int, Scalar>> rows;
    for (const auto& t : r.terms) add_leibniz(m, u, t.path, t.coef, rows);
    flush(rows);
  }
  // With loops, d(a) need not lie in the radical, so the truncation that makes
  // long paths vanish must be imposed explicitly.
  const Quiver& q = a.quiver();
  if (q.has_loops()) {
    int len = a.stabilization_length();
    std::vector<Path> layer;
    for (int v = 0; v < q.num_vertices(); ++v) layer.push_back(Path::stationary(v));
    for (int l = 0; l < len; ++l) {
      std::vector<Path> next;
      for (const auto& p : layer)
        for (int x : q.out_arrows(p.target)) {
          Path n = p;
          n.arrows.push_back(x);
          n.target = q.arrow(x).target;
          next.push_back(std::move(n));
        }
      layer = std::move(next);
    }
    for (const auto& p : layer) {
      std::map<int, std::map<int, Scalar>> rows;
      add_leibniz(m, u, p, Scalar(1), rows);
      flush(rows);
    }
  }
  return u.count - rank_of(eqs);
}

int inn0_dim(const FiniteDimAlgebra& a, const Bimodule& m) {
  check_compatible(a, m);
  DerivationUnknowns u(a, m);
  std::vector<int> diag;
  for (int x = 0; x < m.dim(); ++x)
    if (m.left_vertex(x) == m.right_vertex(x)) diag.push_back(x);
  // Columns: image of each diagonal basis vector, in derivation coordinates.
  std::vector<SparseVec> cols;
  for (int x : diag) {
    std::map<int, Scalar> img;
    for (int ar = 0; ar < a.quiver().num_arrows(); ++ar) {
      SparseVec v = m.arrow_left(ar, x);
      if (m.left_vertex(x) != a.quiver().arrow(ar).target) v = {};
      SparseVec w = m.right_vertex(x) == a.quiver().arrow(ar).source ? m.arrow_right(x, ar) : SparseVec{};
      v.axpy(Scalar(-1), w);
      for (const auto& [coord, c] : v) {
        const auto& blk = u.block[ar];
        auto it = std::find(blk.begin(), blk.end(), coord);
        if (it == blk.end()) throw Error(ErrorKind::Semantic, "inner derivation leaves its graded block");
        img[u.offset[ar] + static_cast<int>(it - blk.begin())] += c;
      }
    }
    cols.push_back(SparseVec::from_map(img));
  }
  return rank_of(cols);
}

int h1_dim(const FiniteDimAlgebra& a, const Bimodule& m) { return der0_dim(a, m) - inn0_dim(a, m); }

int hh1(std::shared_ptr<const FiniteDimAlgebra> a) { return h1_dim(*a, Bimodule::regular(a)); }

int hh1(const FiniteDimAlgebra& a) { return hh1(std::make_shared<const FiniteDimAlgebra>(a)); }

int bar_h1_dim(const FiniteDimAlgebra& a, const Bimodule& m) {
  check_compatible(a, m);
  int da = a.dim(), dm = m.dim();
  auto var = [&](int i, int x) { return i * dm + x; };
  std::vector<SparseVec> basis_elems(dm);
  for (int x = 0; x < dm; ++x) basis_elems[x] = SparseVec::unit(x);
  // b2 f (i, j) = b_i f(b_j) - f(b_i b_j) + f(b_i) b_j
  std::vector<SparseVec> eqs;
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      std::map<int, std::map<int, Scalar>> rows;
      for (int x = 0; x < dm; ++x) {
        for (const auto& [y, c] : m.act_left(a.basis_path(i), basis_elems[x])) rows[y][var(j, x)] += c;
        for (const auto& [y, c] : m.act_right(basis_elems[x], a.basis_path(j))) rows[y][var(i, x)] += c;
      }
      if (a.target(i) == a.source(j))
        for (const auto& [k, c] : a.product(i, j))
          for (int x = 0; x < dm; ++x) rows[x][var(k, x)] -= c;
      for (auto& [y, row] : rows) {
        SparseVec r = SparseVec::from_map(row);
        if (!r.empty()) eqs.push_back(std::move(r));
      }
    }
  int cocycles = da * dm - rank_of(eqs);
  // b1 x = (c |-> c x - x c)
  std::vector<SparseVec> cols;
  for (int x = 0; x < dm; ++x) {
    std::map<int, Scalar> img;
    for (int i = 0; i < da; ++i) {
      for (const auto& [y, c] : m.act_left(a.basis_path(i), basis_elems[x])) img[var(i, y)] += c;
      for (const auto& [y, c] : m.act_right(basis_elems[x], a.basis_path(i))) img[var(i, y)] -= c;
    }
    cols.push_back(SparseVec::from_map(img));
  }
  return cocycles - rank_of(cols);
}

ExtensionCohomology extension_cohomology(std::shared_ptr<const FiniteDimAlgebra> b, const SplitExtension& ext) {
  ExtensionCohomology r;
  r.hh1_b = hh1(b);
  r.hh1_c = hh1(ext.c);
  r.h1_b_e = h1_dim(*b, ext.e_over_b);
  r.h1_c_e = h1_dim(*ext.c, ext.e_over_c);
  r.end_e = bimodule_hom(ext.e_over_c, ext.e_over_c).dim;
  return r;
}

bool ses_additivity_check(std::shared_ptr<const FiniteDimAlgebra> b, const SplitExtension& ext) {
  return hh1(b) == h1_dim(*b, ext.e_over_b) + hh1(ext.c);
}

bool h1_splitting_check(std::shared_ptr<const FiniteDimAlgebra> b, const SplitExtension& ext) {
  return h1_dim(*b, ext.e_over_b) == h1_dim(*ext.c, ext.e_over_c) + bimodule_hom(ext.e_over_c, ext.e_over_c).dim;
}

}  // namespace qpc
