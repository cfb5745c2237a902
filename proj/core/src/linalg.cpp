#include "qpcohom/linalg.hpp"

#include <algorithm>

namespace qpc {

SparseVec SparseVec::unit(int i, Scalar c) {
  SparseVec v;
  if (!c.is_zero()) v.entries_.emplace_back(i, std::move(c));
  return v;
}

SparseVec SparseVec::from_map(const std::map<int, Scalar>& m) {
  SparseVec v;
  for (const auto& [i, c] : m)
    if (!c.is_zero()) v.entries_.emplace_back(i, c);
  return v;
}

Scalar SparseVec::at(int i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, int k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) return it->second;
  return Scalar(0);
}

void SparseVec::push_back(int i, Scalar c) {
  if (!c.is_zero()) entries_.emplace_back(i, std::move(c));
}

void SparseVec::axpy(const Scalar& c, const SparseVec& other) {
  if (c.is_zero() || other.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Scalar s = a->second + c * b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

SparseVec SparseVec::scaled(const Scalar& c) const {
  SparseVec r;
  if (c.is_zero()) return r;
  r.entries_.reserve(entries_.size());
  for (const auto& [i, x] : entries_) r.entries_.emplace_back(i, x * c);
  return r;
}

SparseVec Echelon::reduce(SparseVec v) const {
  if (rows_.empty()) return v;
  std::map<int, Scalar> w;
  for (const auto& [i, c] : v) w.emplace(i, c);
  auto it = w.begin();
  while (it != w.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    int col = it->first;
    Scalar c = it->second;
    for (const auto& [j, x] : row->second) {
      auto [pos, inserted] = w.emplace(j, Scalar(0));
      pos->second -= c * x;
    }
    // Remove zeros created at or after the pivot, then continue past it.
    for (auto jt = w.lower_bound(col); jt != w.end();) {
      if (jt->second.is_zero())
        jt = w.erase(jt);
      else
        ++jt;
    }
    it = w.upper_bound(col);
  }
  return SparseVec::from_map(w);
}

SparseVec Echelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return r;
  Scalar inv = Scalar(1) / r.entries().front().second;
  r = r.scaled(inv);
  rows_.emplace(r.lead(), r);
  return r;
}

std::vector<Scalar> Echelon::coordinates(const SparseVec& v) const {
  std::map<int, Scalar> w;
  for (const auto& [i, c] : v) w.emplace(i, c);
  std::vector<Scalar> out;
  out.reserve(rows_.size());
  for (const auto& [pivot, row] : rows_) {
    auto f = w.find(pivot);
    Scalar c = f == w.end() ? Scalar(0) : f->second;
    out.push_back(c);
    if (c.is_zero()) continue;
    for (const auto& [j, x] : row) {
      auto [pos, inserted] = w.emplace(j, Scalar(0));
      pos->second -= c * x;
    }
  }
  return out;
}

int rank_of(const std::vector<SparseVec>& rows) {
  Echelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

std::vector<SparseVec> nullspace(const std::vector<SparseVec>& rows, int ncols) {
  Echelon e;
  for (const auto& r : rows) e.insert(r);
  // Back-substitute to reduced row echelon form.
  std::map<int, SparseVec> rref;
  for (auto it = e.rows().rbegin(); it != e.rows().rend(); ++it) {
    SparseVec row = it->second;
    SparseVec fixed;
    fixed.push_back(row.lead(), row.entries().front().second);
    SparseVec tail;
    for (std::size_t k = 1; k < row.entries().size(); ++k)
      tail.push_back(row.entries()[k].first, row.entries()[k].second);
    for (const auto& [j, x] : row.entries()) {
      if (j == row.lead()) continue;
      auto r = rref.find(j);
      if (r != rref.end()) {
        SparseVec rt;
        for (const auto& [k, y] : r->second)
          if (k != j) rt.push_back(k, y);
        tail.axpy(-x, SparseVec::unit(j, 1));
        tail.axpy(-x, rt);
      }
    }
    fixed.axpy(1, tail);
    rref.emplace(row.lead(), fixed);
  }
  std::vector<SparseVec> basis;
  for (int f = 0; f < ncols; ++f) {
    if (rref.count(f)) continue;
    std::map<int, Scalar> x;
    x.emplace(f, Scalar(1));
    for (const auto& [p, row] : rref) {
      Scalar c = row.at(f);
      if (!c.is_zero()) x.emplace(p, -c);
    }
    basis.push_back(SparseVec::from_map(x));
  }
  return basis;
}

}  // namespace qpc
