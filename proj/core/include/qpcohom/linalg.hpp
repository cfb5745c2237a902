#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qpcohom/scalar.hpp"

namespace qpc {

// Sparse vector: entries sorted by index, no explicit zeros.
class SparseVec {
 public:
  using Entry = std::pair<int, Scalar>;

  SparseVec() = default;
  static SparseVec unit(int i, Scalar c = 1);
  static SparseVec from_map(const std::map<int, Scalar>& m);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  Scalar at(int i) const;
  int lead() const { return entries_.front().first; }

  // this += c * other
  void axpy(const Scalar& c, const SparseVec& other);
  SparseVec scaled(const Scalar& c) const;
  // Appends an entry with index larger than all present ones.
  void push_back(int i, Scalar c);

  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Entry> entries_;
};

// Row echelon form built incrementally. Every stored row has leading
// coefficient 1 at its pivot and zeros in all smaller columns.
class Echelon {
 public:
  // Reduces v until none of its columns is a pivot column. The result is the
  // unique representative of v modulo the row space supported off pivots.
  SparseVec reduce(SparseVec v) const;
  // Inserts v; returns the reduced, normalized row that was added, or an
  // empty vector if v was already in the span.
  SparseVec insert(const SparseVec& v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool is_pivot(int col) const { return rows_.count(col) != 0; }
  const std::map<int, SparseVec>& rows() const { return rows_; }
  // Coordinates of v (which must lie in the span) with respect to the rows in
  // increasing pivot order.
  std::vector<Scalar> coordinates(const SparseVec& v) const;

 private:
  std::map<int, SparseVec> rows_;
};

int rank_of(const std::vector<SparseVec>& rows);

// Basis of {x : row . x = 0 for all rows} in a space of dimension ncols.
std::vector<SparseVec> nullspace(const std::vector<SparseVec>& rows, int ncols);

}  // namespace qpc
