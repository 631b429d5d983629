#include "hopf32/linalg.hpp"

#include <algorithm>

namespace hopf32 {

SparseVec add_scaled(const SparseVec& a, const SparseVec& b, const Cyc& s) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, s * b[j].second);
      ++j;
    } else {
      Cyc c = a[i].second + s * b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scale(const SparseVec& a, const Cyc& s) {
  SparseVec out;
  if (s.is_zero()) return out;
  out.reserve(a.size());
  for (const auto& [k, c] : a) out.emplace_back(k, c * s);
  return out;
}

void SparseAccumulator::add(std::uint64_t key, const Cyc& c) {
  auto [it, fresh] = acc_.try_emplace(key, c);
  if (!fresh) it->second += c;
}

void SparseAccumulator::add_rotated(std::uint64_t key, const Cyc& c, int zeta_power) {
  add(key, c.times_zeta(zeta_power));
}

SparseVec SparseAccumulator::take() {
  SparseVec out;
  out.reserve(acc_.size());
  for (auto& [k, c] : acc_) {
    if (!c.is_zero()) out.emplace_back(k, std::move(c));
  }
  acc_.clear();
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

SparseVec Echelon::reduce(SparseVec v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto it = pivot_row_.find(v[pos].first);
    if (it == pivot_row_.end()) {
      ++pos;
      continue;
    }
    const SparseVec& row = rows_[it->second];
    Cyc factor = -v[pos].second;
    std::uint64_t key = v[pos].first;
    v = add_scaled(v, row, factor);
    // Entries before the eliminated key are unchanged since row starts at key.
    pos = static_cast<std::size_t>(
        std::lower_bound(v.begin(), v.end(), key, [](const auto& e, std::uint64_t k) { return e.first < k; }) -
        v.begin());
  }
  return v;
}

bool Echelon::insert(SparseVec v) {
  // Reduce only the leading entry repeatedly; a nonzero remainder has a fresh pivot.
  while (!v.empty()) {
    auto it = pivot_row_.find(v.front().first);
    if (it == pivot_row_.end()) break;
    v = add_scaled(v, rows_[it->second], -v.front().second);
  }
  if (v.empty()) return false;
  Cyc lead_inv = v.front().second.inv();
  v = scale(v, lead_inv);
  pivot_row_[v.front().first] = rows_.size();
  rows_.push_back(std::move(v));
  return true;
}

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Cyc inv = m[r][c].inv();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || m[k][c].is_zero()) continue;
      Cyc f = m[k][c];
      for (std::size_t j = 0; j < cols; ++j) {
        if (!m[r][j].is_zero()) m[k][j] -= f * m[r][j];
      }
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

}  // namespace hopf32
