#include "hopf32/nichols.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hopf32/linalg.hpp"

namespace hopf32 {

BraidedSpace BraidedSpace::from_matrix(const BraidingMatrix& m) {
  BraidedSpace s;
  s.dim = m.rank();
  s.act.assign(s.dim, std::vector<std::pair<int, int>>(s.dim));
  for (int i = 0; i < s.dim; ++i) {
    for (int j = 0; j < s.dim; ++j) {
      auto k = m.b[i][j].root_index();
      if (!k) throw std::invalid_argument("braiding entries must be roots of unity of order dividing 16");
      s.act[i][j] = {j, *k};
    }
  }
  return s;
}

BraidedSpace BraidedSpace::from_module(const YDModule& v) {
  BraidedSpace s;
  s.dim = v.dim;
  s.act.assign(s.dim, std::vector<std::pair<int, int>>(s.dim));
  for (int i = 0; i < s.dim; ++i) {
    const Matrix& a = v.action[v.degree[i]];
    for (int j = 0; j < s.dim; ++j) {
      int found = -1;
      for (int k = 0; k < s.dim; ++k) {
        if (a[k][j].is_zero()) continue;
        if (found >= 0) throw std::invalid_argument("module braiding is not monomial");
        found = k;
      }
      auto e = a[found][j].root_index();
      if (!e) throw std::invalid_argument("module braiding has a coefficient that is not a root of unity");
      s.act[i][j] = {found, *e};
    }
  }
  return s;
}

std::optional<Cyc> BraidedSpace::scalar(int i, int j) const {
  if (act[i][j].first != j) return std::nullopt;
  return Cyc::zeta(act[i][j].second);
}

bool BraidedSpace::is_diagonal() const {
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (act[i][j].first != j) return false;
    }
  }
  return true;
}

ShuffleElement ShuffleElement::letter(int i) {
  ShuffleElement e;
  e.terms_[{i}] = Cyc(1);
  return e;
}

ShuffleElement ShuffleElement::unit() {
  ShuffleElement e;
  e.terms_[{}] = Cyc(1);
  return e;
}

void ShuffleElement::add(const Word& w, const Cyc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ShuffleElement& ShuffleElement::operator+=(const ShuffleElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

ShuffleElement& ShuffleElement::operator-=(const ShuffleElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

ShuffleElement ShuffleElement::scaled(const Cyc& c) const {
  ShuffleElement e;
  if (c.is_zero()) return e;
  for (const auto& [w, x] : terms_) e.terms_[w] = x * c;
  return e;
}

std::string ShuffleElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    for (int l : w) out += "x" + std::to_string(l + 1);
  }
  return out;
}

namespace {

// All interleavings of a and b; b letters are acted on by the a letters they pass.
void shuffle_words(const BraidedSpace& s, const Word& a, const Word& b, const Cyc& coef, ShuffleElement& out) {
  const int p = static_cast<int>(a.size()), q = static_cast<int>(b.size());
  // moved[r][j]: letter and exponent of b_j after passing a_{r}..a_{p-1}.
  std::vector<std::vector<std::pair<int, int>>> moved(p + 1, std::vector<std::pair<int, int>>(q));
  for (int j = 0; j < q; ++j) {
    moved[p][j] = {b[j], 0};
    for (int r = p - 1; r >= 0; --r) {
      auto [l, e] = moved[r + 1][j];
      const auto& [l2, e2] = s.act[a[r]][l];
      moved[r][j] = {l2, (e + e2) % Cyc::kRootOrder};
    }
  }
  Word w;
  w.reserve(p + q);
  auto rec = [&](auto&& self, int r, int j, int exp) -> void {
    if (r == p && j == q) {
      out.add(w, coef.times_zeta(exp));
      return;
    }
    if (r < p) {
      w.push_back(a[r]);
      self(self, r + 1, j, exp);
      w.pop_back();
    }
    if (j < q) {
      w.push_back(moved[r][j].first);
      self(self, r, j + 1, exp + moved[r][j].second);
      w.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
}

int bits_for(int d) {
  int b = 1;
  while ((1 << b) < d) ++b;
  return b;
}

}  // namespace

ShuffleElement shuffle_product(const BraidedSpace& s, const ShuffleElement& u, const ShuffleElement& v) {
  ShuffleElement out;
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) shuffle_words(s, a, b, ca * cb, out);
  }
  return out;
}

ShuffleElement act_by_word(const BraidedSpace& s, const Word& w, const ShuffleElement& u) {
  ShuffleElement out;
  for (const auto& [word, c] : u.terms()) {
    Word img = word;
    int exp = 0;
    for (auto& l : img) {
      for (int k = static_cast<int>(w.size()) - 1; k >= 0; --k) {
        const auto& [l2, e] = s.act[w[k]][l];
        l = l2;
        exp += e;
      }
    }
    out.add(img, c.times_zeta(exp));
  }
  return out;
}

ShuffleElement derivation(const ShuffleElement& u, int i) {
  ShuffleElement out;
  for (const auto& [w, c] : u.terms()) {
    if (!w.empty() && w.back() == i) out.add(Word(w.begin(), w.end() - 1), c);
  }
  return out;
}

ShuffleElement adjoint(const BraidedSpace& s, int i, const ShuffleElement& y) {
  ShuffleElement x = ShuffleElement::letter(i);
  ShuffleElement out = shuffle_product(s, x, y);
  out -= shuffle_product(s, act_by_word(s, {i}, y), x);
  return out;
}

std::optional<int> nilpotency_order(const BraidedSpace& s, const ShuffleElement& z, int cap) {
  if (z.is_zero()) return 1;
  ShuffleElement p = z;
  for (int m = 2; m <= cap; ++m) {
    p = shuffle_product(s, p, z);
    if (p.is_zero()) return m;
  }
  return std::nullopt;
}

std::optional<long> NicholsReport::dimension() const {
  if (status != Status::Finite) return std::nullopt;
  return total;
}

std::string NicholsReport::status_name() const {
  switch (status) {
    case Status::Finite: return "finite";
    case Status::Infinite: return "infinite";
    case Status::ExceedsBudget: return "exceeds budget";
    case Status::DegreeCap: return "degree cap";
  }
  return "";
}

NicholsReport nichols_dimensions(const BraidedSpace& s, const NicholsLimits& limits) {
  NicholsReport rep;
  const int d = s.dim;
  rep.hilbert.push_back(1);
  rep.total = 1;
  if (d == 0) return rep;
  for (int i = 0; i < d; ++i) {
    if (s.act[i][i] == std::pair<int, int>{i, 0}) {
      rep.status = NicholsReport::Status::Infinite;
      return rep;
    }
  }
  const int bits = bits_for(d);
  const int max_len = std::min(limits.degree_cap, 64 / bits);
  const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;

  std::vector<SparseVec> basis;
  for (int i = 0; i < d; ++i) basis.push_back({{static_cast<std::uint64_t>(i), Cyc(1)}});
  for (int n = 1;; ++n) {
    rep.hilbert.push_back(static_cast<long>(basis.size()));
    rep.total += static_cast<long>(basis.size());
    if (basis.empty()) {
      rep.hilbert.pop_back();
      return rep;
    }
    if (rep.total > limits.dim_budget) {
      rep.status = NicholsReport::Status::ExceedsBudget;
      return rep;
    }
    if (n >= max_len) {
      rep.status = NicholsReport::Status::DegreeCap;
      return rep;
    }
    Echelon next;
    SparseAccumulator acc;
    for (const auto& b : basis) {
      for (int i = 0; i < d; ++i) {
        for (const auto& [key, c] : b) {
          // Insert letter i at positions n..0, moving it left past the letters of the word.
          int cur = i, exp = 0;
          for (int k = n; k >= 0; --k) {
            const int tail = bits * (n - k);
            std::uint64_t prefix = tail >= 64 ? 0 : key >> tail;
            std::uint64_t suffix = tail == 0 ? 0 : key & ((std::uint64_t{1} << tail) - 1);
            std::uint64_t word = (prefix << (tail + bits)) | (static_cast<std::uint64_t>(cur) << tail) | suffix;
            acc.add_rotated(word, c, exp);
            if (k > 0) {
              int left = static_cast<int>((key >> (bits * (n - k))) & mask);
              const auto& [l2, e] = s.act[left][cur];
              cur = l2;
              exp += e;
            }
          }
        }
        next.insert(acc.take());
      }
    }
    basis = next.rows();
  }
}

std::optional<ShuffleElement> z1_element(const BraidedSpace& s) {
  if (s.dim != 2 || !s.is_diagonal()) return std::nullopt;
  for (int k = 0; k < 2; ++k) {
    if (s.act[k][k].second == Cyc::kRootOrder / 2) return adjoint(s, k, ShuffleElement::letter(1 - k));
  }
  return std::nullopt;
}

NicholsReport analyze(const BraidedSpace& s, const NicholsLimits& limits) {
  NicholsReport rep = nichols_dimensions(s, limits);
  for (int i = 0; i < s.dim; ++i) {
    rep.nilpotency["x" + std::to_string(i + 1)] = nilpotency_order(s, ShuffleElement::letter(i), limits.degree_cap);
  }
  if (auto z = z1_element(s)) rep.nilpotency["z1"] = nilpotency_order(s, *z, limits.degree_cap / 2);
  if (is_quantum_linear_space(s)) rep.qls = qls_dimension(s);
  rep.cartan = cartan_type(s);
  return rep;
}

std::vector<long> symmetrizer_dimensions(const BraidedSpace& s, int max_degree) {
  const int d = s.dim;
  std::vector<long> dims{1};
  if (d == 0) return dims;
  for (int n = 1; n <= max_degree; ++n) {
    // Reduced words of all permutations via bubble sort.
    std::vector<std::vector<int>> reduced;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> p = perm, swaps;
      for (int pass = 0; pass < n; ++pass) {
        for (int k = 0; k + 1 < n; ++k) {
          if (p[k] > p[k + 1]) {
            std::swap(p[k], p[k + 1]);
            swaps.push_back(k);
          }
        }
      }
      reduced.push_back(swaps);
    } while (std::next_permutation(perm.begin(), perm.end()));

    Echelon ech;
    std::vector<int> w(n, 0);
    while (true) {
      std::map<std::pair<std::vector<int>, int>, long> counts;
      for (const auto& red : reduced) {
        std::vector<int> x = w;
        int exp = 0;
        for (auto it = red.rbegin(); it != red.rend(); ++it) {
          int k = *it;
          const auto& [l, e] = s.act[x[k]][x[k + 1]];
          x[k + 1] = x[k];
          x[k] = l;
          exp = (exp + e) % Cyc::kRootOrder;
        }
        ++counts[{x, exp}];
      }
      std::map<std::uint64_t, Cyc> vec;
      for (const auto& [key, c] : counts) {
        std::uint64_t code = 0;
        for (int l : key.first) code = code * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(l);
        vec[code] += Cyc::zeta(key.second).scaled(mpq_class(c));
      }
      SparseVec sv;
      for (auto& [k, c] : vec) {
        if (!c.is_zero()) sv.emplace_back(k, c);
      }
      ech.insert(sv);
      int k = n - 1;
      while (k >= 0 && w[k] == d - 1) w[k--] = 0;
      if (k < 0) break;
      ++w[k];
    }
    dims.push_back(static_cast<long>(ech.rank()));
    if (ech.rank() == 0) break;
  }
  return dims;
}

bool is_quantum_linear_space(const BraidedSpace& s) {
  if (!s.is_diagonal()) return false;
  for (int i = 0; i < s.dim; ++i) {
    for (int j = i + 1; j < s.dim; ++j) {
      if ((s.act[i][j].second + s.act[j][i].second) % Cyc::kRootOrder != 0) return false;
    }
  }
  return true;
}

std::optional<long> qls_dimension(const BraidedSpace& s) {
  long p = 1;
  for (int i = 0; i < s.dim; ++i) {
    auto n = nq(*s.scalar(i, i));
    if (!n) return std::nullopt;
    p *= *n;
  }
  return p;
}

std::optional<std::vector<std::vector<int>>> cartan_type(const BraidedSpace& s) {
  if (!s.is_diagonal()) return std::nullopt;
  std::vector<std::vector<int>> a(s.dim, std::vector<int>(s.dim, 0));
  for (int i = 0; i < s.dim; ++i) {
    a[i][i] = 2;
    Cyc q = *s.scalar(i, i);
    auto n = root_order(q);
    if (!n) return std::nullopt;
    for (int j = 0; j < s.dim; ++j) {
      if (i == j) continue;
      Cyc t = *s.scalar(i, j) * *s.scalar(j, i);
      bool found = false;
      for (int m = 0; m > -*n; --m) {
        if (q.pow(m) == t) {
          a[i][j] = m;
          found = true;
          break;
        }
      }
      if (!found) return std::nullopt;
    }
  }
  return a;
}

}  // namespace hopf32
