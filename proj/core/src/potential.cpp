#include "qpcohom/potential.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "qpcohom/error.hpp"

namespace qpc {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) { return parent_[x] == x ? x : parent_[x] = find(parent_[x]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

std::string coef_prefix(const Scalar& c, bool first) {
  std::string s;
  Scalar a = c;
  bool neg = sgn(c.value()) < 0;
  if (neg) a = -c;
  if (first)
    s = neg ? "-" : "";
  else
    s = neg ? " - " : " + ";
  if (!a.is_one()) s += a.str() + "*";
  return s;
}

}  // namespace

Relation Relation::make(const Quiver& q, std::string name, std::vector<Term> terms) {
  std::map<Path, Scalar> merged;
  for (auto& t : terms) {
    if (!merged.empty()) {
      const Path& p = merged.begin()->first;
      if (p.source != t.path.source || p.target != t.path.target)
        throw Error(ErrorKind::InvalidRelation, "relation '" + name + "' has non-parallel terms " +
                                                    p.str(q) + " and " + t.path.str(q));
    }
    auto [it, ins] = merged.emplace(t.path, Scalar(0));
    it->second += t.coef;
  }
  Relation r;
  r.name = std::move(name);
  if (!merged.empty()) {
    r.source = merged.begin()->first.source;
    r.target = merged.begin()->first.target;
  }
  for (auto& [p, c] : merged)
    if (!c.is_zero()) r.terms.push_back(Term{c, p});
  return r;
}

int Relation::min_length() const {
  int m = 1 << 30;
  for (const auto& t : terms) m = std::min(m, t.path.length());
  return m;
}

std::string Relation::str(const Quiver& q) const {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms.size(); ++k) s += coef_prefix(terms[k].coef, k == 0) + terms[k].path.str(q);
  return s;
}

Potential Potential::make(std::vector<CycleTerm> terms) {
  std::map<Cycle, Scalar> merged;
  for (auto& t : terms) {
    auto [it, ins] = merged.emplace(t.cycle, Scalar(0));
    it->second += t.coef;
  }
  Potential w;
  for (auto& [c, x] : merged)
    if (!x.is_zero()) w.terms_.push_back(CycleTerm{x, c});
  return w;
}

std::string Potential::str(const Quiver& q) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k)
    s += coef_prefix(terms_[k].coef, k == 0) + terms_[k].cycle.str(q);
  return s;
}

bool operator==(const Potential& a, const Potential& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (!(a.terms_[k].cycle == b.terms_[k].cycle) || !(a.terms_[k].coef == b.terms_[k].coef)) return false;
  return true;
}

QP relation_extension(const Quiver& q, const std::vector<Relation>& rels) {
  if (q.count_new() != 0) throw Error(ErrorKind::Semantic, "relation extension needs a quiver of old arrows");
  if (!is_triangular(q)) throw Error(ErrorKind::NotTriangular, "quiver has an oriented cycle");
  QP qp;
  qp.quiver = q;
  std::vector<CycleTerm> terms;
  for (const auto& r : rels) {
    if (r.is_zero()) throw Error(ErrorKind::InvalidRelation, "relation '" + r.name + "' is zero");
    if (r.has_short_term())
      throw Error(ErrorKind::InvalidRelation, "relation '" + r.name + "' has a term of length < 2");
    int a = qp.quiver.add_arrow(r.name, r.target, r.source, ArrowKind::New);
    qp.new_arrows.push_back(a);
    for (const auto& t : r.terms) {
      std::vector<int> cyc{a};
      cyc.insert(cyc.end(), t.path.arrows.begin(), t.path.arrows.end());
      terms.push_back(CycleTerm{t.coef, Cycle::of(qp.quiver, cyc)});
    }
  }
  qp.relations = rels;
  qp.potential = Potential::make(std::move(terms));
  return qp;
}

QP make_qp(const Quiver& q, const Potential& w) {
  QP qp;
  qp.quiver = q;
  qp.potential = w;
  for (int a = 0; a < q.num_arrows(); ++a)
    if (q.is_new(a)) qp.new_arrows.push_back(a);
  return qp;
}

Relation cyclic_derivative(const Quiver& q, const Potential& w, int arrow) {
  std::vector<Term> terms;
  for (const auto& t : w.terms()) {
    const auto& c = t.cycle.arrows();
    int n = t.cycle.length();
    for (int k = 0; k < n; ++k) {
      if (c[k] != arrow) continue;
      std::vector<int> tail;
      for (int j = 1; j < n; ++j) tail.push_back(c[(k + j) % n]);
      Path p = tail.empty() ? Path::stationary(q.arrow(arrow).target) : Path::of(q, tail);
      terms.push_back(Term{t.coef, p});
    }
  }
  Relation r = Relation::make(q, "d_" + q.arrow(arrow).name, std::move(terms));
  if (r.is_zero()) {
    r.source = q.arrow(arrow).target;
    r.target = q.arrow(arrow).source;
  }
  return r;
}

std::vector<JacobianRelation> jacobian_relations(const QP& qp) {
  std::vector<JacobianRelation> out;
  for (int a = 0; a < qp.quiver.num_arrows(); ++a) {
    Relation r = cyclic_derivative(qp.quiver, qp.potential, a);
    if (r.is_zero()) continue;
    bool short_term = r.has_short_term();
    out.push_back(JacobianRelation{a, std::move(r), short_term});
  }
  return out;
}

std::vector<std::vector<int>> cycle_equivalence_classes(const Potential& w) {
  int n = static_cast<int>(w.terms().size());
  UnionFind uf(n);
  std::map<int, int> first_with_arrow;
  for (int i = 0; i < n; ++i)
    for (int a : w.terms()[i].cycle.arrows()) {
      auto [it, ins] = first_with_arrow.emplace(a, i);
      if (!ins) uf.unite(i, it->second);
    }
  // Terms are sorted by cycle, so the root (least index) is the least cycle.
  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < n; ++i) classes[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : classes) out.push_back(members);
  return out;
}

int potential_invariant(const Potential& w) { return static_cast<int>(cycle_equivalence_classes(w).size()); }

std::vector<Potential> direct_decomposition(const Potential& w) {
  std::vector<Potential> out;
  for (const auto& cls : cycle_equivalence_classes(w)) {
    std::vector<CycleTerm> terms;
    for (int i : cls) terms.push_back(w.terms()[i]);
    out.push_back(Potential::make(std::move(terms)));
  }
  return out;
}

std::vector<std::vector<int>> arrow_equivalence_classes(const QP& qp) {
  const Quiver& q = qp.quiver;
  for (const auto& t : qp.potential.terms()) {
    int count = 0;
    for (int a : t.cycle.arrows()) count += q.is_new(a) ? 1 : 0;
    if (count != 1)
      throw Error(ErrorKind::Semantic, "cycle " + t.cycle.str(q) + " does not contain exactly one new arrow");
  }
  std::vector<int> news;
  for (int a = 0; a < q.num_arrows(); ++a)
    if (q.is_new(a)) news.push_back(a);
  std::map<int, int> index;
  for (std::size_t i = 0; i < news.size(); ++i) index[news[i]] = static_cast<int>(i);
  UnionFind uf(static_cast<int>(news.size()));
  for (int eta = 0; eta < q.num_arrows(); ++eta) {
    if (q.is_new(eta)) continue;
    Relation r = cyclic_derivative(q, qp.potential, eta);
    int first = -1;
    for (const auto& t : r.terms)
      for (int a : t.path.arrows)
        if (q.is_new(a)) {
          if (first < 0)
            first = index[a];
          else
            uf.unite(first, index[a]);
        }
  }
  std::map<int, std::vector<int>> classes;
  for (std::size_t i = 0; i < news.size(); ++i) classes[uf.find(static_cast<int>(i))].push_back(news[i]);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : classes) out.push_back(members);
  return out;
}

Potential chordless_potential(const Quiver& q) {
  std::vector<CycleTerm> terms;
  for (const auto& c : enumerate_chordless_cycles(q)) {
    if (!c.oriented) throw Error(ErrorKind::Semantic, "quiver is not cyclically oriented");
    terms.push_back(CycleTerm{Scalar(1), c.as_cycle(q)});
  }
  return Potential::make(std::move(terms));
}

namespace {

// Every forward run of the walk, and every inverse run read backwards, as paths.
bool contains_branch(const Quiver& q, const std::vector<WalkStep>& w, const std::set<std::vector<int>>& branches,
                     std::size_t max_branch) {
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j].forward == w[i].forward) ++j;
    std::vector<int> run;
    for (std::size_t k = i; k < j; ++k) run.push_back(w[k].arrow);
    if (!w[i].forward) std::reverse(run.begin(), run.end());
    for (std::size_t a = 0; a < run.size(); ++a)
      for (std::size_t len = 1; len <= max_branch && a + len <= run.size(); ++len)
        if (branches.count(std::vector<int>(run.begin() + a, run.begin() + a + len))) return true;
    i = j;
  }
  (void)q;
  return false;
}

int step_start(const Quiver& q, const WalkStep& s) { return s.forward ? q.arrow(s.arrow).source : q.arrow(s.arrow).target; }
int step_end(const Quiver& q, const WalkStep& s) { return s.forward ? q.arrow(s.arrow).target : q.arrow(s.arrow).source; }

// Walk corresponding to a path, traversed forward or backwards.
std::vector<WalkStep> path_walk(const Path& p, bool forward) {
  std::vector<WalkStep> w;
  for (int a : p.arrows) w.push_back(WalkStep{a, true});
  if (!forward) {
    std::reverse(w.begin(), w.end());
    for (auto& s : w) s.forward = false;
  }
  return w;
}

bool reduced_concat(std::vector<WalkStep> a, const std::vector<WalkStep>& b, const std::vector<WalkStep>& c) {
  a.insert(a.end(), b.begin(), b.end());
  a.insert(a.end(), c.begin(), c.end());
  return Walk{a}.reduced();
}

}  // namespace

std::vector<Walk> detect_c_sequential_walks(const QP& qp) {
  const Quiver& q = qp.quiver;
  std::vector<Walk> out;
  if (qp.relations.empty()) return out;
  std::set<std::vector<int>> branches;
  std::size_t max_branch = 0;
  for (const auto& r : qp.relations)
    for (const auto& t : r.terms) {
      branches.insert(t.path.arrows);
      max_branch = std::max(max_branch, t.path.arrows.size());
    }
  std::map<int, const Relation*> rel_of;
  for (std::size_t i = 0; i < qp.new_arrows.size(); ++i) rel_of[qp.new_arrows[i]] = &qp.relations[i];
  const int cap = 2 * q.num_arrows();
  long budget = 2'000'000;

  for (const auto& [alpha, rho] : rel_of) {
    for (bool dir : {true, false}) {
      WalkStep first{alpha, dir};
      std::vector<WalkStep> mid;
      std::function<void(int)> grow = [&](int v) {
        if (--budget < 0) throw Error(ErrorKind::CapExceeded, "C-sequential walk search exceeded its budget");
        // Try closing with a new arrow pointing the same way as the first.
        for (const auto& [beta, sigma] : rel_of) {
          WalkStep last{beta, dir};
          if (step_start(q, last) != v) continue;
          bool all = true;
          for (const auto& u : rho->terms) {
            // The new arrow stands in for u^-1 when traversed forward.
            auto uw = path_walk(u.path, !dir);
            for (const auto& s : sigma->terms) {
              auto vw = path_walk(s.path, !dir);
              if (!reduced_concat(uw, mid, vw)) all = false;
            }
          }
          if (all) {
            std::vector<WalkStep> w{first};
            w.insert(w.end(), mid.begin(), mid.end());
            w.push_back(last);
            out.push_back(Walk{w});
          }
        }
        if (static_cast<int>(mid.size()) + 2 >= cap) return;
        auto extend = [&](const WalkStep& s) {
          if (!mid.empty() && mid.back().arrow == s.arrow && mid.back().forward != s.forward) return;
          mid.push_back(s);
          if (!contains_branch(q, mid, branches, max_branch)) grow(step_end(q, s));
          mid.pop_back();
        };
        for (int a : q.out_arrows(v))
          if (!q.is_new(a)) extend(WalkStep{a, true});
        for (int a : q.in_arrows(v))
          if (!q.is_new(a)) extend(WalkStep{a, false});
      };
      grow(step_end(q, first));
    }
  }
  return out;
}

std::vector<std::vector<int>> admissible_cuts(const Quiver& q) {
  auto cycles = enumerate_chordless_cycles(q);
  for (const auto& c : cycles)
    if (!c.oriented) throw Error(ErrorKind::Semantic, "quiver is not cyclically oriented");
  // Exact cover: choose, per uncovered cycle, one of its arrows that hits no
  // already covered cycle.
  std::vector<std::vector<int>> cycles_of(q.num_arrows());
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    std::set<int> seen(cycles[i].arrows.begin(), cycles[i].arrows.end());
    for (int a : seen) cycles_of[a].push_back(static_cast<int>(i));
  }
  std::vector<int> covered(cycles.size(), 0);
  std::vector<int> chosen;
  std::set<std::vector<int>> results;
  std::function<void()> search = [&]() {
    int next = -1;
    for (std::size_t i = 0; i < cycles.size(); ++i)
      if (!covered[i]) {
        next = static_cast<int>(i);
        break;
      }
    if (next < 0) {
      std::vector<int> cut = chosen;
      std::sort(cut.begin(), cut.end());
      results.insert(cut);
      return;
    }
    std::set<int> cands(cycles[next].arrows.begin(), cycles[next].arrows.end());
    for (int a : cands) {
      bool ok = true;
      for (int c : cycles_of[a])
        if (covered[c]) ok = false;
      // A cycle passing twice through a would be hit twice.
      if (!ok) continue;
      for (int c : cycles_of[a]) covered[c] = 1;
      chosen.push_back(a);
      search();
      chosen.pop_back();
      for (int c : cycles_of[a]) covered[c] = 0;
    }
  };
  search();
  return {results.begin(), results.end()};
}

}  // namespace qpc
