// Exact sparse and dense linear algebra over Q(z16).
#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopf32/cyclotomic.hpp"
#include "hopf32/groups.hpp"

namespace hopf32 {

/// Sorted by key, no explicit zeros.
using SparseVec = std::vector<std::pair<std::uint64_t, Cyc>>;

/// a + s*b.
SparseVec add_scaled(const SparseVec& a, const SparseVec& b, const Cyc& s);
SparseVec scale(const SparseVec& a, const Cyc& s);

class SparseAccumulator {
 public:
  void add(std::uint64_t key, const Cyc& c);
  void add_rotated(std::uint64_t key, const Cyc& c, int zeta_power);
  SparseVec take();
  bool empty() const { return acc_.empty(); }

 private:
  std::unordered_map<std::uint64_t, Cyc> acc_;
};

/// Row echelon basis built incrementally; each row has leading coefficient 1.
class Echelon {
 public:
  /// Reduces v against the current rows.
  SparseVec reduce(SparseVec v) const;
  /// Adds v if it is independent of the current rows.
  bool insert(SparseVec v);
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec>& rows() const { return rows_; }

 private:
  std::vector<SparseVec> rows_;
  std::map<std::uint64_t, std::size_t> pivot_row_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m);
int rank(Matrix m);

}  // namespace hopf32
