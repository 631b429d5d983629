#include "hopf32/ydmod.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopf32 {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

const Cyc& trace_at(const IrrepLabel& l, int x) {
  auto it = std::lower_bound(l.centralizer.begin(), l.centralizer.end(), x);
  if (it == l.centralizer.end() || *it != x) throw std::logic_error("element outside the centralizer");
  return l.trace[it - l.centralizer.begin()];
}

IrrepLabel label_of(const FinGroup& g, int elem, const Representation& rho) {
  IrrepLabel l;
  l.g = elem;
  l.degree = rho.degree;
  l.centralizer = g.centralizer(elem);
  for (int h : l.centralizer) l.trace.push_back(trace(rho.matrices[h]));
  return l;
}

// Greedy generating set of a subgroup, ascending element index.
std::vector<int> subgroup_generators(const FinGroup& g, const std::vector<int>& sub) {
  if (static_cast<int>(sub.size()) == g.order()) return g.generators();
  std::vector<int> gens, span{0};
  for (int x : sub) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = g.closure(gens);
  }
  return gens;
}

bool block_diagonal(const YDModule& v, int lo, int hi) {
  for (int i = lo; i < hi; ++i) {
    const Matrix& a = v.action[v.degree[i]];
    for (int j = lo; j < hi; ++j) {
      for (int k = 0; k < v.dim; ++k) {
        if (k != j && !a[k][j].is_zero()) return false;
      }
    }
  }
  return true;
}

long bound_product(const YDModule& v, const std::vector<int>& basis, bool& infinite) {
  long p = 1;
  for (int i : basis) {
    auto n = nq(v.action[v.degree[i]][i][i]);
    if (!n) {
      infinite = true;
      return 0;
    }
    p *= *n;
  }
  return p;
}

}  // namespace

BraidingMatrix parse_braiding_matrix(const std::string& text) {
  BraidingMatrix m;
  for (const auto& row : split(text, ';')) {
    std::string r = trim(row);
    if (r.empty()) continue;
    std::vector<Cyc> entries;
    std::string norm = r;
    std::replace(norm.begin(), norm.end(), ',', ' ');
    std::istringstream in(norm);
    std::string tok;
    while (in >> tok) entries.push_back(parse_scalar(tok));
    m.b.push_back(std::move(entries));
  }
  const std::size_t n = m.b.size();
  if (n == 0) throw std::invalid_argument("empty braiding matrix");
  for (const auto& r : m.b) {
    if (r.size() != n) throw std::invalid_argument("braiding matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) m.labels.push_back("x" + std::to_string(i + 1));
  return m;
}

std::string render_braiding_matrix(const BraidingMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.b.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.b[i].size(); ++j) {
      if (j) out += ", ";
      out += short_str(m.b[i][j]);
    }
  }
  return out;
}

YDModule zero_module(GroupPtr g) {
  YDModule v;
  v.action.assign(g->order(), Matrix{});
  v.group = std::move(g);
  return v;
}

YDModule build_induced(GroupPtr gp, int elem, const Representation& rho) {
  const FinGroup& g = *gp;
  std::vector<int> cent = g.centralizer(elem);
  if (rho.domain() != cent) throw std::invalid_argument("representation is not defined on the centralizer");
  const int d = rho.degree;
  // Coset representatives t_k of G / C_g, each the least element of its coset.
  std::vector<int> reps, coset_of(g.order(), -1);
  for (int t = 0; t < g.order(); ++t) {
    if (coset_of[t] >= 0) continue;
    for (int c : cent) coset_of[g.mul(t, c)] = static_cast<int>(reps.size());
    reps.push_back(t);
  }
  const int n = static_cast<int>(reps.size()) * d;
  YDModule v;
  v.group = gp;
  v.dim = n;
  v.degree.resize(n);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    for (int l = 0; l < d; ++l) v.degree[k * d + l] = g.conj(reps[k], elem);
  }
  v.action.assign(g.order(), Matrix(n, std::vector<Cyc>(n)));
  for (int h = 0; h < g.order(); ++h) {
    for (std::size_t k = 0; k < reps.size(); ++k) {
      int ht = g.mul(h, reps[k]);
      int m = coset_of[ht];
      int c = g.mul(g.inv(reps[m]), ht);
      const Matrix& r = rho.matrices[c];
      for (int l = 0; l < d; ++l) {
        for (int lp = 0; lp < d; ++lp) v.action[h][m * d + lp][k * d + l] = r[lp][l];
      }
    }
  }
  v.summands.push_back({label_of(g, elem, rho), 0, n});
  return v;
}

YDModule build_induced(GroupPtr g, int elem, const Character& chi) {
  return build_induced(std::move(g), elem, from_character(chi));
}

YDModule direct_sum(const std::vector<YDModule>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct sum of nothing");
  YDModule v;
  v.group = parts[0].group;
  for (const auto& p : parts) v.dim += p.dim;
  v.action.assign(v.group->order(), Matrix(v.dim, std::vector<Cyc>(v.dim)));
  int off = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.dim; ++i) v.degree.push_back(p.degree[i]);
    for (int h = 0; h < v.group->order(); ++h) {
      for (int i = 0; i < p.dim; ++i) {
        for (int j = 0; j < p.dim; ++j) v.action[h][off + i][off + j] = p.action[h][i][j];
      }
    }
    for (auto s : p.summands) {
      s.offset += off;
      v.summands.push_back(std::move(s));
    }
    off += p.dim;
  }
  return v;
}

Matrix braiding(const YDModule& v) {
  const int n = v.dim;
  Matrix c(n * n, std::vector<Cyc>(n * n));
  for (int i = 0; i < n; ++i) {
    const Matrix& a = v.action[v.degree[i]];
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (!a[k][j].is_zero()) c[k * n + i][i * n + j] = a[k][j];
      }
    }
  }
  return c;
}

bool braid_equation_holds(const YDModule& v) {
  const int n = v.dim;
  using Tensor = std::map<std::vector<int>, Cyc>;
  // Apply c at positions (p, p+1) of every term.
  auto apply = [&](const Tensor& t, int p) {
    Tensor out;
    for (const auto& [w, coef] : t) {
      int i = w[p], j = w[p + 1];
      const Matrix& a = v.action[v.degree[i]];
      for (int k = 0; k < n; ++k) {
        if (a[k][j].is_zero()) continue;
        auto u = w;
        u[p] = k;
        u[p + 1] = i;
        out[u] += coef * a[k][j];
      }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        Tensor t{{{a, b, c}, Cyc(1)}};
        if (apply(apply(apply(t, 0), 1), 0) != apply(apply(apply(t, 1), 0), 1)) return false;
      }
    }
  }
  return true;
}

bool yd_compatible(const YDModule& v) {
  const FinGroup& g = v.G();
  if (v.action[0] != identity_matrix(v.dim)) return false;
  for (int h = 0; h < g.order(); ++h) {
    for (int k = 0; k < g.order(); ++k) {
      if (mat_mul(v.action[h], v.action[k]) != v.action[g.mul(h, k)]) return false;
    }
    for (int j = 0; j < v.dim; ++j) {
      int want = g.conj(h, v.degree[j]);
      for (int i = 0; i < v.dim; ++i) {
        if (!v.action[h][i][j].is_zero() && v.degree[i] != want) return false;
      }
    }
  }
  return true;
}

std::optional<BraidingMatrix> diagonal_matrix(const YDModule& v) {
  if (!block_diagonal(v, 0, v.dim)) return std::nullopt;
  BraidingMatrix m;
  m.b.assign(v.dim, std::vector<Cyc>(v.dim));
  for (int i = 0; i < v.dim; ++i) {
    for (int j = 0; j < v.dim; ++j) m.b[i][j] = v.action[v.degree[i]][j][j];
    m.labels.push_back("x" + std::to_string(i + 1));
  }
  return m;
}

IrrepLabel twist_label(const FinGroup& g, const IrrepLabel& l, const GroupMap& f) {
  GroupMap finv = f.inverse();
  IrrepLabel out;
  out.g = f(l.g);
  out.degree = l.degree;
  out.centralizer = g.centralizer(out.g);
  for (int h : out.centralizer) out.trace.push_back(trace_at(l, finv(h)));
  return out;
}

YDModule twist(const YDModule& v, const GroupMap& f) {
  GroupMap finv = f.inverse();
  YDModule w;
  w.group = v.group;
  w.dim = v.dim;
  for (int d : v.degree) w.degree.push_back(f(d));
  w.action.resize(v.action.size());
  for (std::size_t h = 0; h < v.action.size(); ++h) w.action[h] = v.action[finv(static_cast<int>(h))];
  for (const auto& s : v.summands) w.summands.push_back({twist_label(v.G(), s.label, f), s.offset, s.dim});
  return w;
}

std::vector<std::int64_t> canonical_key(const FinGroup& g, const IrrepLabel& l) {
  int r = g.class_representative(l.g);
  int t = 0;
  while (g.conj(t, l.g) != r) ++t;
  std::vector<std::int64_t> key{r, l.degree};
  for (int h : g.centralizer(r)) {
    const Cyc& c = trace_at(l, g.mul(g.mul(g.inv(t), h), t));
    if (!c.is_integral()) throw std::logic_error("non-integral character value");
    for (int k = 0; k < Cyc::kDegree; ++k) key.push_back(c.coeff(k).get_num().get_si());
  }
  return key;
}

std::vector<std::vector<std::int64_t>> summand_keys(const YDModule& v) {
  std::vector<std::vector<std::int64_t>> keys;
  for (const auto& s : v.summands) keys.push_back(canonical_key(v.G(), s.label));
  std::sort(keys.begin(), keys.end());
  return keys;
}

bool isomorphic(const YDModule& a, const YDModule& b) {
  return a.group->id() == b.group->id() && summand_keys(a) == summand_keys(b);
}

std::optional<long> nichols_lower_bound(const YDModule& v) {
  if (v.dim == 0) return 1;
  // Summands of diagonal type; if together they braid diagonally use all of them,
  // otherwise only the one-dimensional ones.
  std::vector<int> diag, lines;
  for (const auto& s : v.summands) {
    if (!block_diagonal(v, s.offset, s.offset + s.dim)) continue;
    for (int i = s.offset; i < s.offset + s.dim; ++i) {
      diag.push_back(i);
      if (s.dim == 1) lines.push_back(i);
    }
  }
  bool together = true;
  for (int i : diag) {
    const Matrix& a = v.action[v.degree[i]];
    for (int j : diag) {
      for (int k = 0; k < v.dim && together; ++k) {
        if (k != j && !a[k][j].is_zero()) together = false;
      }
    }
  }
  bool infinite = false;
  long p = bound_product(v, together ? diag : lines, infinite);
  if (infinite) return std::nullopt;
  if (v.dim >= 2) p = std::max<long>(p, v.dim + 2);
  return p;
}

std::string describe(const FinGroup& g, const IrrepLabel& l) {
  std::string out = "M(" + g.name(l.g) + ", ";
  if (l.degree > 1) {
    out += "rho0";
  } else if (g.is_abelian()) {
    out += "[";
    for (std::size_t j = 0; j < g.generators().size(); ++j) {
      int gj = g.generators()[j];
      int e = *trace_at(l, gj).root_index() / (Cyc::kRootOrder / g.element_order(gj));
      if (j) out += ",";
      out += std::to_string(e);
    }
    out += "]";
  } else {
    out += "[";
    bool first = true;
    for (int h : subgroup_generators(g, l.centralizer)) {
      if (!first) out += ", ";
      first = false;
      out += g.name(h) + "->" + short_str(trace_at(l, h));
    }
    out += "]";
  }
  return out + ")";
}

std::string describe(const YDModule& v) {
  if (v.summands.empty()) return "0";
  std::string out;
  for (const auto& s : v.summands) {
    if (!out.empty()) out += " + ";
    out += describe(v.G(), s.label);
  }
  return out;
}

std::vector<int> pool_permutation(const FinGroup& g, const std::vector<YDModule>& pool, const GroupMap& f) {
  std::map<std::vector<std::int64_t>, int> index;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    if (pool[k].summands.size() != 1) throw std::invalid_argument("pool members must be irreducible");
    index[canonical_key(g, pool[k].summands[0].label)] = static_cast<int>(k);
  }
  std::vector<int> perm;
  for (const auto& m : pool) {
    auto it = index.find(canonical_key(g, twist_label(g, m.summands[0].label, f)));
    if (it == index.end()) throw std::invalid_argument("pool is not stable under automorphisms");
    perm.push_back(it->second);
  }
  return perm;
}

namespace {

std::vector<std::vector<int>> generator_permutations(const FinGroup& g, const std::vector<YDModule>& pool) {
  std::vector<std::vector<int>> perms;
  for (const auto& f : automorphism_generators(g)) perms.push_back(pool_permutation(g, pool, f));
  return perms;
}

std::vector<int> apply_perm(const std::vector<int>& perm, const std::vector<int>& ms) {
  std::vector<int> out;
  for (int x : ms) out.push_back(perm[x]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<int>> orbit_representatives(const FinGroup& g, const std::vector<YDModule>& pool, int rank,
                                                    long budget) {
  const int p = static_cast<int>(pool.size());
  std::vector<std::vector<int>> kept;
  if (rank <= 0 || p == 0) return kept;
  std::vector<int> ms(rank, 0);
  while (true) {
    std::vector<YDModule> parts;
    for (int x : ms) parts.push_back(pool[x]);
    auto lb = nichols_lower_bound(direct_sum(parts));
    if (lb && *lb <= budget) kept.push_back(ms);
    int k = rank - 1;
    while (k >= 0 && ms[k] == p - 1) --k;
    if (k < 0) break;
    ++ms[k];
    for (int j = k + 1; j < rank; ++j) ms[j] = ms[k];
  }
  std::map<std::vector<int>, int> index;
  for (std::size_t k = 0; k < kept.size(); ++k) index[kept[k]] = static_cast<int>(k);
  std::vector<int> parent(kept.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& perm : generator_permutations(g, pool)) {
    for (std::size_t k = 0; k < kept.size(); ++k) {
      auto it = index.find(apply_perm(perm, kept[k]));
      if (it == index.end()) throw std::logic_error("lower bound is not automorphism invariant");
      int a = find(static_cast<int>(k)), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  // kept is in lexicographic order, so each root is the least member of its class.
  std::vector<std::vector<int>> reps;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    if (find(static_cast<int>(k)) == static_cast<int>(k)) reps.push_back(kept[k]);
  }
  return reps;
}

std::vector<int> orbit_minimum(const FinGroup& g, const std::vector<YDModule>& pool, std::vector<int> multiset) {
  std::sort(multiset.begin(), multiset.end());
  auto perms = generator_permutations(g, pool);
  std::map<std::vector<int>, bool> seen{{multiset, true}};
  std::vector<std::vector<int>> todo{multiset};
  while (!todo.empty()) {
    auto cur = todo.back();
    todo.pop_back();
    for (const auto& perm : perms) {
      auto next = apply_perm(perm, cur);
      if (seen.emplace(next, true).second) todo.push_back(next);
    }
  }
  return seen.begin()->first;
}

}  // namespace hopf32
