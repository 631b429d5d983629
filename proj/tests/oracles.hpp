// Reference computations used only by the tests, written without the engine's algorithms.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "hopf32/cyclotomic.hpp"
#include "hopf32/ydmod.hpp"

namespace oracle {

using hopf32::Cyc;
using Complex = std::complex<long double>;

inline Complex to_complex(const Cyc& c) {
  const long double pi = std::acos(-1.0L);
  Complex out = 0;
  for (int k = 0; k < Cyc::kDegree; ++k) {
    long double q = c.coeff(k).get_d();
    out += q * std::polar(1.0L, 2 * pi * k / 16);
  }
  return out;
}

inline bool near(Complex a, Complex b) { return std::abs(a - b) < 1e-9L; }

/// Exact rank by plain Gaussian elimination.
inline int rank(std::vector<std::vector<Cyc>> m) {
  int r = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (!m[i][c].is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    Cyc inv = m[r][c].inv();
    for (auto& x : m[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Cyc f = m[i][c];
      for (int j = c; j < cols; ++j) {
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
      }
    }
    ++r;
  }
  return r;
}

/// Basis of {x : m x = 0}.
inline std::vector<std::vector<Cyc>> nullspace(std::vector<std::vector<Cyc>> m, int cols) {
  const int rows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (!m[i][c].is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    Cyc inv = m[r][c].inv();
    for (auto& x : m[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Cyc f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<Cyc>> basis;
  for (int f = 0; f < cols; ++f) {
    if (std::find(pivot_col.begin(), pivot_col.end(), f) != pivot_col.end()) continue;
    std::vector<Cyc> v(cols);
    v[f] = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -m[k][f];
    basis.push_back(v);
  }
  return basis;
}

/// deg(e_i) acting on e_j = z^exp e_{letter}, read off the module's matrices.
struct Action {
  int dim = 0;
  std::vector<std::vector<std::pair<int, int>>> act;
};

inline Action action_of(const hopf32::YDModule& v) {
  Action a;
  a.dim = v.dim;
  a.act.assign(v.dim, std::vector<std::pair<int, int>>(v.dim));
  for (int i = 0; i < v.dim; ++i) {
    const auto& m = v.action[v.degree[i]];
    for (int j = 0; j < v.dim; ++j) {
      int found = -1;
      for (int k = 0; k < v.dim; ++k) {
        if (!m[k][j].is_zero()) found = k;
      }
      a.act[i][j] = {found, *m[found][j].root_index()};
    }
  }
  return a;
}

inline Action action_of(const std::vector<std::vector<Cyc>>& b) {
  Action a;
  a.dim = static_cast<int>(b.size());
  a.act.assign(a.dim, std::vector<std::pair<int, int>>(a.dim));
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) a.act[i][j] = {j, *b[i][j].root_index()};
  }
  return a;
}

/// Bubble-sort swap positions of every permutation of n points; each list is a reduced word.
inline std::vector<std::vector<int>> reduced_words(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> q = p, word;
    for (int pass = 0; pass < n; ++pass) {
      for (int k = 0; k + 1 < n; ++k) {
        if (q[k] > q[k + 1]) {
          std::swap(q[k], q[k + 1]);
          word.push_back(k);
        }
      }
    }
    out.push_back(word);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Rank of the quantum symmetrizer sum_sigma T_sigma on V^{(x)n}, c(e_a e_b) = (deg e_a . e_b) e_a.
inline long symmetrizer_rank(const Action& a, int n) {
  if (n == 0) return 1;
  auto words = reduced_words(n);
  // The symmetrizer preserves the multiset of letters up to the action, so work per orbit of words
  // under the braid moves.
  std::vector<int> w(n, 0);
  std::map<std::vector<int>, std::map<std::vector<int>, std::array<long, 16>>> columns;
  while (true) {
    auto& col = columns[w];
    for (const auto& rw : words) {
      std::vector<int> u = w;
      int e = 0;
      for (int k : rw) {
        auto [b, x] = a.act[u[k]][u[k + 1]];
        e += x;
        int first = u[k];
        u[k] = b;
        u[k + 1] = first;
      }
      col[u][((e % 16) + 16) % 16] += 1;
    }
    int k = n - 1;
    while (k >= 0 && w[k] == a.dim - 1) --k;
    if (k < 0) break;
    ++w[k];
    for (int j = k + 1; j < n; ++j) w[j] = 0;
  }
  // Connected blocks: words linked through column supports.
  std::map<std::vector<int>, std::vector<int>> parent;
  std::function<std::vector<int>(const std::vector<int>&)> find = [&](const std::vector<int>& x) {
    auto it = parent.find(x);
    if (it == parent.end() || it->second == x) {
      parent[x] = x;
      return x;
    }
    auto root = find(it->second);
    parent[x] = root;
    return root;
  };
  for (const auto& [src, col] : columns) {
    for (const auto& [dst, c] : col) {
      auto r1 = find(src), r2 = find(dst);
      if (r1 != r2) parent[r1] = r2;
    }
  }
  std::map<std::vector<int>, std::vector<std::vector<int>>> blocks;
  for (const auto& [src, col] : columns) blocks[find(src)].push_back(src);
  long total = 0;
  for (const auto& [root, members] : blocks) {
    std::map<std::vector<int>, int> row_index;
    for (const auto& m : members) {
      for (const auto& [dst, c] : columns[m]) row_index.emplace(dst, 0);
    }
    int rows = 0;
    for (auto& [k, v] : row_index) v = rows++;
    std::vector<std::vector<Cyc>> mat(members.size(), std::vector<Cyc>(rows));
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (const auto& [dst, c] : columns[members[i]]) {
        Cyc s;
        for (int e = 0; e < 16; ++e) {
          if (c[e]) s += Cyc::zeta(e).scaled(mpq_class(c[e]));
        }
        mat[i][row_index[dst]] = s;
      }
    }
    total += rank(mat);
  }
  return total;
}

/// Hilbert series of a PBW basis prod_k {x_k^a : a < height_k} with degrees deg_k.
inline std::vector<long> pbw_series(const std::vector<std::pair<int, int>>& degree_height) {
  std::vector<long> s{1};
  for (auto [d, h] : degree_height) {
    std::vector<long> next(s.size() + static_cast<std::size_t>(d) * (h - 1), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (int a = 0; a < h; ++a) next[i + static_cast<std::size_t>(a) * d] += s[i];
    }
    s = next;
  }
  return s;
}

inline Cyc random_cyc(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), exp(0, 15);
  Cyc c;
  for (int t = 0; t < 3; ++t) c += Cyc::zeta(exp(rng)).scaled(mpq_class(coef(rng)));
  return c;
}

/// c_1 c_2 c_1 = c_2 c_1 c_2 on every basis word of length 3.
inline bool braid_ok(const Action& a) {
  auto apply = [&](std::vector<int> w, int e, int k) {
    auto [b, x] = a.act[w[k]][w[k + 1]];
    int first = w[k];
    w[k] = b;
    w[k + 1] = first;
    return std::make_pair(w, e + x);
  };
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k) {
        std::vector<int> w{i, j, k};
        auto l = apply(w, 0, 0);
        l = apply(l.first, l.second, 1);
        l = apply(l.first, l.second, 0);
        auto r = apply(w, 0, 1);
        r = apply(r.first, r.second, 0);
        r = apply(r.first, r.second, 1);
        if (l.first != r.first || (l.second - r.second) % 16 != 0) return false;
      }
  return true;
}

/// The action is a representation and h . V_g lies in V_{hgh^-1}.
inline bool yd_ok(const hopf32::YDModule& v) {
  const auto& g = v.G();
  for (int x = 0; x < g.order(); ++x) {
    for (int y = 0; y < g.order(); ++y) {
      if (v.action[g.mul(x, y)] != hopf32::mat_mul(v.action[x], v.action[y])) return false;
    }
    for (int j = 0; j < v.dim; ++j)
      for (int k = 0; k < v.dim; ++k)
        if (!v.action[x][k][j].is_zero() && v.degree[k] != g.conj(x, v.degree[j])) return false;
  }
  return true;
}

/// Solves T A(h) = B(h) T with T degree preserving, and looks for an invertible solution.
inline bool intertwined(const hopf32::YDModule& a, const hopf32::YDModule& b, std::mt19937& rng) {
  if (a.dim != b.dim) return false;
  const int n = a.dim;
  std::vector<std::vector<Cyc>> eq;
  auto var = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (b.degree[i] != a.degree[j]) {
        std::vector<Cyc> row(n * n);
        row[var(i, j)] = 1;
        eq.push_back(row);
      }
  for (int h = 0; h < a.G().order(); ++h)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<Cyc> row(n * n);
        for (int k = 0; k < n; ++k) {
          row[var(i, k)] += a.action[h][k][j];
          row[var(k, j)] -= b.action[h][i][k];
        }
        eq.push_back(row);
      }
  auto basis = nullspace(eq, n * n);
  if (basis.empty()) return false;
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<Cyc> t(n * n);
    for (const auto& v : basis) {
      Cyc c = random_cyc(rng);
      for (int k = 0; k < n * n; ++k) t[k] += c * v[k];
    }
    std::vector<std::vector<Cyc>> m(n, std::vector<Cyc>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = t[var(i, j)];
    if (rank(m) == n) return true;
  }
  return false;
}

using Tensor = std::map<std::vector<int>, Cyc>;

/// sum_sigma T_sigma applied to z.
inline Tensor symmetrize(const Action& a, const Tensor& z) {
  Tensor out;
  if (z.empty()) return out;
  const int n = static_cast<int>(z.begin()->first.size());
  auto words = reduced_words(n);
  for (const auto& [w, c] : z) {
    for (const auto& rw : words) {
      std::vector<int> u = w;
      int e = 0;
      for (int k : rw) {
        auto [b, x] = a.act[u[k]][u[k + 1]];
        e += x;
        int first = u[k];
        u[k] = b;
        u[k + 1] = first;
      }
      out[u] += c.times_zeta(e);
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

/// Basis of the kernel of the symmetrizer on words of length n with the given letter multiset.
inline std::vector<Tensor> symmetrizer_kernel(const Action& a, const std::vector<int>& letters) {
  std::vector<int> w = letters;
  std::sort(w.begin(), w.end());
  std::vector<std::vector<int>> sources;
  do sources.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  std::map<std::vector<int>, int> row_index;
  std::vector<Tensor> images;
  for (const auto& src : sources) {
    images.push_back(symmetrize(a, Tensor{{src, Cyc(1)}}));
    for (const auto& [dst, c] : images.back()) row_index.emplace(dst, 0);
  }
  int rows = 0;
  for (auto& [k, v] : row_index) v = rows++;
  std::vector<std::vector<Cyc>> m(rows, std::vector<Cyc>(sources.size()));
  for (std::size_t j = 0; j < sources.size(); ++j)
    for (const auto& [dst, c] : images[j]) m[row_index[dst]][j] = c;
  std::vector<Tensor> out;
  for (const auto& v : nullspace(m, static_cast<int>(sources.size()))) {
    Tensor t;
    for (std::size_t j = 0; j < sources.size(); ++j)
      if (!v[j].is_zero()) t[sources[j]] = v[j];
    out.push_back(t);
  }
  return out;
}

/// Least n with (Ad x)^n (y) = 0 for diagonal b: (n)_q (1 - q^{n-1} b12 b21) = 0, q = b11.
inline std::optional<int> adjoint_order(const Cyc& q, const Cyc& b12b21, int cap) {
  for (int n = 1; n <= cap; ++n) {
    if ((hopf32::q_number(n, q) * (Cyc(1) - q.pow(n - 1) * b12b21)).is_zero()) return n;
  }
  return std::nullopt;
}

}  // namespace oracle
