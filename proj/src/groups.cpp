#include "hopf32/groups.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hopf32 {

Matrix identity_matrix(int n) {
  Matrix m(n, std::vector<Cyc>(n));
  for (int k = 0; k < n; ++k) m[k][k] = 1;
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), l = b.size();
  Matrix r(n, std::vector<Cyc>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < l; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return r;
}

Cyc trace(const Matrix& m) {
  Cyc t;
  for (std::size_t k = 0; k < m.size(); ++k) t += m[k][k];
  return t;
}

Relator parse_relator(const std::string& text, const std::vector<std::string>& gen_names) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s += c;
  }
  auto gen_index = [&](const std::string& n) {
    for (std::size_t k = 0; k < gen_names.size(); ++k) {
      if (gen_names[k] == n) return static_cast<int>(k);
    }
    throw std::invalid_argument("unknown generator '" + n + "' in relator " + text);
  };
  auto invert = [](Relator w) {
    std::reverse(w.begin(), w.end());
    for (int& x : w) x = -x;
    return w;
  };
  std::function<Relator(const std::string&)> factor = [&](const std::string& f) -> Relator {
    if (f.empty()) throw std::invalid_argument("empty factor in relator " + text);
    if (f.front() == '[') {
      std::size_t close = f.find(']');
      std::string inner = f.substr(1, close - 1);
      std::size_t sep = inner.find_first_of(",;");
      Relator a = factor(inner.substr(0, sep));
      Relator b = factor(inner.substr(sep + 1));
      Relator r = a;
      r.insert(r.end(), b.begin(), b.end());
      Relator ai = invert(a), bi = invert(b);
      r.insert(r.end(), ai.begin(), ai.end());
      r.insert(r.end(), bi.begin(), bi.end());
      return r;
    }
    std::size_t caret = f.find('^');
    int g = gen_index(f.substr(0, caret));
    long e = caret == std::string::npos ? 1 : std::stol(f.substr(caret + 1));
    Relator r;
    for (long k = 0; k < std::labs(e); ++k) r.push_back(e > 0 ? g + 1 : -(g + 1));
    return r;
  };
  Relator out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find('*', pos);
    if (end == std::string::npos) end = s.size();
    Relator f = factor(s.substr(pos, end - pos));
    out.insert(out.end(), f.begin(), f.end());
    pos = end + 1;
  }
  return out;
}

namespace {

// Hasse-Lomonaco-Todd coset enumeration over the trivial subgroup.
class CosetTable {
 public:
  CosetTable(int ngens, const std::vector<Relator>& rels) : cols_(2 * ngens), rels_(rels) {
    for (auto& r : rels_) {
      for (int& x : r) x = col(x);
    }
    new_coset();
  }

  std::vector<std::vector<int>> run() {
    for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
      for (const auto& r : rels_) {
        if (!live(c)) break;
        scan_and_fill(c, r);
      }
      if (!live(c)) continue;
      for (int x = 0; x < cols_; ++x) {
        if (table_[c][x] < 0) define(c, x);
      }
    }
    std::vector<int> renum(table_.size(), -1);
    int n = 0;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (live(static_cast<int>(c))) renum[c] = n++;
    }
    std::vector<std::vector<int>> out(n, std::vector<int>(cols_));
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (renum[c] < 0) continue;
      for (int x = 0; x < cols_; ++x) out[renum[c]][x] = renum[rep(table_[c][x])];
    }
    return out;
  }

 private:
  static constexpr int kMaxCosets = 200000;

  static int col(int signed_gen) {
    return signed_gen > 0 ? 2 * (signed_gen - 1) : 2 * (-signed_gen - 1) + 1;
  }
  static int inv_col(int x) { return x ^ 1; }
  bool live(int c) const { return parent_[c] == c; }
  int rep(int c) {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }
  int new_coset() {
    if (static_cast<int>(table_.size()) >= kMaxCosets) {
      throw std::runtime_error("coset enumeration exceeded its limit");
    }
    table_.emplace_back(cols_, -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }
  void define(int c, int x) {
    int d = new_coset();
    table_[c][x] = d;
    table_[d][inv_col(x)] = c;
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && table_[f][w[i]] >= 0) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][inv_col(w[j])] >= 0) b = table_[b][inv_col(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][inv_col(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  void merge(int k, int l, std::deque<int>& q) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    int lo = std::min(k, l), hi = std::max(k, l);
    parent_[hi] = lo;
    q.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::deque<int> q;
    merge(a, b, q);
    while (!q.empty()) {
      int g = q.front();
      q.pop_front();
      for (int x = 0; x < cols_; ++x) {
        int d = table_[g][x];
        if (d < 0) continue;
        table_[d][inv_col(x)] = -1;
        int mu = rep(g), nu = rep(d);
        if (table_[mu][x] >= 0) {
          merge(nu, table_[mu][x], q);
        } else if (table_[nu][inv_col(x)] >= 0) {
          merge(mu, table_[nu][inv_col(x)], q);
        } else {
          table_[mu][x] = nu;
          table_[nu][inv_col(x)] = mu;
        }
      }
    }
  }

  int cols_;
  std::vector<Relator> rels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
};

std::string power_name(const std::string& g, int e) {
  if (e == 0) return "";
  if (e == 1) return g;
  return g + "^" + std::to_string(e);
}

}  // namespace

FinGroup FinGroup::from_presentation(std::string id, std::vector<std::string> gen_names,
                                     std::vector<Relator> relators) {
  FinGroup g;
  g.id_ = std::move(id);
  g.gen_names_ = std::move(gen_names);
  g.relators_ = std::move(relators);
  const int ngens = static_cast<int>(g.gen_names_.size());
  auto cosets = CosetTable(ngens, g.relators_).run();
  const int n = static_cast<int>(cosets.size());

  // Words from coset 0 (breadth first) identify cosets with elements.
  std::vector<std::vector<int>> coset_word(n);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::deque<int> bfs{0};
  while (!bfs.empty()) {
    int c = bfs.front();
    bfs.pop_front();
    for (int x = 0; x < 2 * ngens; ++x) {
      int d = cosets[c][x];
      if (seen[d]) continue;
      seen[d] = true;
      coset_word[d] = coset_word[c];
      coset_word[d].push_back(x % 2 == 0 ? x / 2 + 1 : -(x / 2 + 1));
      bfs.push_back(d);
    }
  }
  auto trace_word = [&](int c, const std::vector<int>& w) {
    for (int s : w) c = cosets[c][s > 0 ? 2 * (s - 1) : 2 * (-s - 1) + 1];
    return c;
  };
  std::vector<std::vector<int>> ctab(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) ctab[a][b] = trace_word(a, coset_word[b]);
  }
  std::vector<int> gen_coset(ngens);
  for (int k = 0; k < ngens; ++k) gen_coset[k] = cosets[0][2 * k];
  std::vector<int> gen_order(ngens);
  for (int k = 0; k < ngens; ++k) {
    int e = 1, x = gen_coset[k];
    while (x != 0) {
      x = ctab[x][gen_coset[k]];
      ++e;
    }
    gen_order[k] = e;
  }

  // Normal forms g1^a1 g2^a2 ... in lexicographic exponent order fix the element indices.
  std::vector<int> index_of(n, -1);
  std::vector<int> order_coset;
  std::vector<std::string> names;
  std::vector<std::vector<int>> nf_words;
  std::vector<int> exps(ngens, 0);
  while (true) {
    int c = 0;
    std::vector<int> w;
    std::string nm;
    for (int k = 0; k < ngens; ++k) {
      for (int e = 0; e < exps[k]; ++e) {
        c = ctab[c][gen_coset[k]];
        w.push_back(k + 1);
      }
      nm += power_name(g.gen_names_[k], exps[k]);
    }
    if (index_of[c] < 0) {
      index_of[c] = static_cast<int>(order_coset.size());
      order_coset.push_back(c);
      names.push_back(nm.empty() ? "1" : nm);
      nf_words.push_back(w);
    }
    int k = ngens - 1;
    while (k >= 0 && ++exps[k] == gen_order[k]) exps[k--] = 0;
    if (k < 0) break;
  }
  for (int c = 0; c < n; ++c) {
    if (index_of[c] >= 0) continue;
    index_of[c] = static_cast<int>(order_coset.size());
    order_coset.push_back(c);
    std::string nm;
    for (int s : coset_word[c]) {
      nm += g.gen_names_[std::abs(s) - 1] + (s < 0 ? "^-1" : "");
    }
    names.push_back(nm);
    nf_words.push_back(coset_word[c]);
  }

  g.table_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.table_[a][b] = index_of[ctab[order_coset[a]][order_coset[b]]];
  }
  g.inverse_.assign(n, 0);
  g.orders_.assign(n, 1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.table_[a][b] == 0) g.inverse_[a] = b;
    }
    int x = a, e = 1;
    while (x != 0) {
      x = g.table_[x][a];
      ++e;
    }
    g.orders_[a] = e;
  }
  for (int k = 0; k < ngens; ++k) g.generators_.push_back(index_of[gen_coset[k]]);
  g.words_ = std::move(nf_words);
  g.names_ = std::move(names);
  return g;
}

int FinGroup::pow(int a, long n) const {
  long o = orders_[a];
  n %= o;
  if (n < 0) n += o;
  int r = 0;
  for (long k = 0; k < n; ++k) r = mul(r, a);
  return r;
}

std::optional<int> FinGroup::find(const std::string& name) const {
  for (int a = 0; a < order(); ++a) {
    if (names_[a] == name) return a;
  }
  return std::nullopt;
}

int FinGroup::element(const std::string& name) const {
  if (auto a = find(name)) return *a;
  // Fall back to parsing a product of generator powers.
  Relator w = parse_relator(name, gen_names_);
  return evaluate(w);
}

int FinGroup::evaluate(const Relator& w) const {
  int r = 0;
  for (int s : w) {
    int gk = generators_[std::abs(s) - 1];
    r = mul(r, s > 0 ? gk : inv(gk));
  }
  return r;
}

bool FinGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a) {
    for (int b = 0; b < order(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> FinGroup::conjugacy_classes() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> done(order(), false);
  for (int g = 0; g < order(); ++g) {
    if (done[g]) continue;
    std::set<int> cls;
    for (int t = 0; t < order(); ++t) cls.insert(conj(t, g));
    for (int x : cls) done[x] = true;
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

int FinGroup::class_representative(int g) const {
  int best = g;
  for (int t = 0; t < order(); ++t) best = std::min(best, conj(t, g));
  return best;
}

std::vector<int> FinGroup::centralizer(int g) const {
  std::vector<int> out;
  for (int h = 0; h < order(); ++h) {
    if (mul(h, g) == mul(g, h)) out.push_back(h);
  }
  return out;
}

std::vector<int> FinGroup::center() const {
  std::vector<int> out;
  for (int g = 0; g < order(); ++g) {
    if (static_cast<int>(centralizer(g).size()) == order()) out.push_back(g);
  }
  return out;
}

std::vector<int> FinGroup::closure(const std::vector<int>& gens) const {
  std::set<int> s{0};
  std::deque<int> q{0};
  while (!q.empty()) {
    int a = q.front();
    q.pop_front();
    for (int x : gens) {
      int b = mul(a, x);
      if (s.insert(b).second) q.push_back(b);
    }
  }
  return {s.begin(), s.end()};
}

std::vector<int> FinGroup::commutator_subgroup() const {
  std::set<int> comms;
  for (int a = 0; a < order(); ++a) {
    for (int b = 0; b < order(); ++b) comms.insert(mul(mul(a, b), mul(inv(a), inv(b))));
  }
  return closure({comms.begin(), comms.end()});
}

Abelianization abelianization(const FinGroup& g) {
  auto k = g.commutator_subgroup();
  Abelianization ab;
  ab.projection.assign(g.order(), -1);
  for (int a = 0; a < g.order(); ++a) {
    if (ab.projection[a] >= 0) continue;
    std::vector<int> coset;
    for (int x : k) coset.push_back(g.mul(a, x));
    std::sort(coset.begin(), coset.end());
    for (int x : coset) ab.projection[x] = static_cast<int>(ab.cosets.size());
    ab.cosets.push_back(coset);
  }
  return ab;
}

std::vector<Character> linear_characters(const FinGroup& g, const std::vector<int>& subgroup) {
  std::vector<int> h = subgroup;
  if (h.empty()) {
    h.resize(g.order());
    std::iota(h.begin(), h.end(), 0);
  }
  // Greedy generating set for H.
  std::vector<int> gens;
  std::vector<int> span{0};
  for (int x : h) {
    if (std::find(span.begin(), span.end(), x) != span.end()) continue;
    gens.push_back(x);
    span = g.closure(gens);
  }
  std::vector<Character> out;
  std::vector<int> choice(gens.size(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t k = 0; k < gens.size() && ok; ++k) {
      ok = (choice[k] * g.element_order(gens[k])) % Cyc::kRootOrder == 0;
    }
    if (ok) {
      std::vector<int> e(g.order(), -1);
      e[0] = 0;
      std::deque<int> q{0};
      while (!q.empty() && ok) {
        int a = q.front();
        q.pop_front();
        for (std::size_t k = 0; k < gens.size(); ++k) {
          int b = g.mul(a, gens[k]);
          int v = (e[a] + choice[k]) % Cyc::kRootOrder;
          if (e[b] < 0) {
            e[b] = v;
            q.push_back(b);
          } else if (e[b] != v) {
            ok = false;
            break;
          }
        }
      }
      for (int a : h) {
        for (int b : h) {
          if (!ok) break;
          if ((e[a] + e[b]) % Cyc::kRootOrder != e[g.mul(a, b)]) ok = false;
        }
      }
      if (ok) out.push_back(Character{e});
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == Cyc::kRootOrder) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

Character abelian_character(const FinGroup& g, const std::vector<int>& gen_exponents) {
  if (gen_exponents.size() != g.generators().size()) {
    throw std::invalid_argument("character exponent vector has wrong length");
  }
  for (const auto& chi : linear_characters(g)) {
    bool match = true;
    for (std::size_t j = 0; j < gen_exponents.size() && match; ++j) {
      int gj = g.generators()[j];
      int step = Cyc::kRootOrder / g.element_order(gj);
      int want = ((gen_exponents[j] * step) % Cyc::kRootOrder + Cyc::kRootOrder) % Cyc::kRootOrder;
      match = chi.exps[gj] == want;
    }
    if (match) return chi;
  }
  throw std::invalid_argument("no character with the requested generator values");
}

std::vector<int> Representation::domain() const {
  std::vector<int> d;
  for (std::size_t g = 0; g < matrices.size(); ++g) {
    if (!matrices[g].empty()) d.push_back(static_cast<int>(g));
  }
  return d;
}

Representation from_character(const Character& chi) {
  Representation r;
  r.degree = 1;
  r.matrices.resize(chi.exps.size());
  for (std::size_t g = 0; g < chi.exps.size(); ++g) {
    if (chi.exps[g] >= 0) r.matrices[g] = Matrix{{chi.value(static_cast<int>(g))}};
  }
  return r;
}

Representation representation_from_generators(const FinGroup& g, const std::vector<Matrix>& gen_mats) {
  Representation r;
  r.degree = static_cast<int>(gen_mats.at(0).size());
  r.matrices.assign(g.order(), Matrix{});
  r.matrices[0] = identity_matrix(r.degree);
  std::deque<int> q{0};
  while (!q.empty()) {
    int a = q.front();
    q.pop_front();
    for (std::size_t k = 0; k < gen_mats.size(); ++k) {
      int b = g.mul(a, g.generators()[k]);
      Matrix m = mat_mul(r.matrices[a], gen_mats[k]);
      if (r.matrices[b].empty()) {
        r.matrices[b] = m;
        q.push_back(b);
      } else if (r.matrices[b] != m) {
        throw std::invalid_argument("generator matrices violate the relators of " + g.id());
      }
    }
  }
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      if (mat_mul(r.matrices[a], r.matrices[b]) != r.matrices[g.mul(a, b)]) {
        throw std::invalid_argument("matrices are not a representation of " + g.id());
      }
    }
  }
  return r;
}

std::vector<Representation> tabulated_irreps(const FinGroup& g) {
  const Cyc one(1), m1(-1), zero, i = Cyc::i();
  if (g.id() == "D4") {
    Matrix r{{zero, m1}, {one, zero}};
    Matrix s{{zero, one}, {one, zero}};
    return {representation_from_generators(g, {r, s})};
  }
  if (g.id() == "H") {
    Matrix gi{{zero, m1}, {one, zero}};
    Matrix gj{{i, zero}, {zero, -i}};
    return {representation_from_generators(g, {gi, gj})};
  }
  throw std::invalid_argument("no tabulated degree-2 representations for " + g.id());
}

GroupMap GroupMap::inverse() const {
  GroupMap r;
  r.images.assign(images.size(), 0);
  for (std::size_t g = 0; g < images.size(); ++g) r.images[images[g]] = static_cast<int>(g);
  return r;
}

GroupMap GroupMap::compose(const GroupMap& inner) const {
  GroupMap r;
  r.images.resize(inner.images.size());
  for (std::size_t g = 0; g < inner.images.size(); ++g) r.images[g] = images[inner.images[g]];
  return r;
}

bool GroupMap::is_identity() const {
  for (std::size_t g = 0; g < images.size(); ++g) {
    if (images[g] != static_cast<int>(g)) return false;
  }
  return true;
}

namespace {

struct AutCache {
  std::vector<GroupMap> all;
  std::vector<GroupMap> gens;
};

std::mutex& aut_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, AutCache>& aut_cache() {
  static std::map<std::string, AutCache> c;
  return c;
}

AutCache compute_automorphisms(const FinGroup& g) {
  const auto& gens = g.generators();
  const int n = g.order();
  std::vector<std::vector<int>> candidates(gens.size());
  auto center = g.center();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    bool central = std::binary_search(center.begin(), center.end(), gens[k]);
    for (int a = 0; a < n; ++a) {
      if (g.element_order(a) != g.element_order(gens[k])) continue;
      if (central && !std::binary_search(center.begin(), center.end(), a)) continue;
      candidates[k].push_back(a);
    }
  }
  AutCache out;
  std::vector<std::size_t> pick(gens.size(), 0);
  auto eval = [&](const std::vector<int>& img, const std::vector<int>& w) {
    int r = 0;
    for (int s : w) {
      int x = img[std::abs(s) - 1];
      r = g.mul(r, s > 0 ? x : g.inv(x));
    }
    return r;
  };
  while (true) {
    std::vector<int> img(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) img[k] = candidates[k][pick[k]];
    bool ok = true;
    for (const auto& rel : g.relators()) {
      if (eval(img, rel) != 0) {
        ok = false;
        break;
      }
    }
    if (ok && static_cast<int>(g.closure(img).size()) == n) {
      GroupMap f;
      f.images.resize(n);
      for (int a = 0; a < n; ++a) f.images[a] = eval(img, g.word(a));
      out.all.push_back(std::move(f));
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == candidates[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  std::sort(out.all.begin(), out.all.end());
  // Identity sorts first since its image vector is 0,1,2,...
  std::set<std::vector<int>> generated;
  auto close = [&]() {
    generated.clear();
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    generated.insert(id);
    std::deque<std::vector<int>> q{id};
    while (!q.empty()) {
      auto cur = q.front();
      q.pop_front();
      for (const auto& f : out.gens) {
        std::vector<int> nx(n);
        for (int a = 0; a < n; ++a) nx[a] = f.images[cur[a]];
        if (generated.insert(nx).second) q.push_back(std::move(nx));
      }
    }
  };
  close();
  for (const auto& f : out.all) {
    if (generated.count(f.images)) continue;
    out.gens.push_back(f);
    close();
  }
  return out;
}

const AutCache& aut_entry(const FinGroup& g) {
  std::lock_guard<std::mutex> lock(aut_mutex());
  auto& cache = aut_cache();
  auto it = cache.find(g.id());
  if (it == cache.end()) it = cache.emplace(g.id(), compute_automorphisms(g)).first;
  return it->second;
}

}  // namespace

const std::vector<GroupMap>& automorphisms(const FinGroup& g) { return aut_entry(g).all; }
const std::vector<GroupMap>& automorphism_generators(const FinGroup& g) { return aut_entry(g).gens; }

namespace {

struct CatalogueEntry {
  std::string id;
  std::vector<std::string> gens;
  std::vector<std::string> relators;
};

const std::vector<CatalogueEntry>& entries() {
  static const std::vector<CatalogueEntry> e = {
      {"C2", {"g"}, {"g^2"}},
      {"C2xC2", {"g1", "g2"}, {"g1^2", "g2^2", "[g1,g2]"}},
      {"C4", {"g"}, {"g^4"}},
      {"C2xC2xC2", {"g1", "g2", "g3"}, {"g1^2", "g2^2", "g3^2", "[g1,g2]", "[g1,g3]", "[g2,g3]"}},
      {"C2xC4", {"g1", "g2"}, {"g1^2", "g2^4", "[g1,g2]"}},
      {"C8", {"g"}, {"g^8"}},
      {"D4", {"r", "s"}, {"r^4", "s^2", "s*r*s^-1*r"}},
      {"H", {"i", "j"}, {"i^4", "i^2*j^-2", "j*i*j^-1*i"}},
      {"C2^4",
       {"g1", "g2", "g3", "g4"},
       {"g1^2", "g2^2", "g3^2", "g4^2", "[g1,g2]", "[g1,g3]", "[g1,g4]", "[g2,g3]", "[g2,g4]",
        "[g3,g4]"}},
      {"C2xC2xC4", {"g1", "g2", "g3"}, {"g1^2", "g2^2", "g3^4", "[g1,g2]", "[g1,g3]", "[g2,g3]"}},
      {"C4xC4", {"g1", "g2"}, {"g1^4", "g2^4", "[g1,g2]"}},
      {"C2xC8", {"g1", "g2"}, {"g1^2", "g2^8", "[g1,g2]"}},
      {"C16", {"g"}, {"g^16"}},
      {"B1", {"g1", "g2"}, {"g1^8", "g2^2", "g2*g1*g2*g1^3"}},
      {"B2", {"g1", "g2", "g3"}, {"g1^4", "g2^2", "g3^2", "[g1,g2]", "[g1,g3]", "[g3,g2]*g1^2"}},
      {"B3", {"g1", "g2"}, {"g1^4", "g2^4", "g2*g1*g2^3*g1"}},
      {"B4", {"r", "s", "t"}, {"r^4", "s^2", "t^2", "s*r*s^-1*r", "[r,t]", "[s,t]"}},
      {"B5", {"g1", "g2", "g3"}, {"g1^4", "g2^2", "g3^2", "[g1,g2]", "[g3,g2]", "[g1,g3]*g2"}},
      {"B6", {"i", "j", "t"}, {"i^4", "i^2*j^-2", "j*i*j^-1*i", "t^2", "[i,t]", "[j,t]"}},
  };
  return e;
}

FinGroup build(const CatalogueEntry& e) {
  std::vector<Relator> rels;
  for (const auto& r : e.relators) rels.push_back(parse_relator(r, e.gens));
  FinGroup g = FinGroup::from_presentation(e.id, e.gens, rels);
  if (e.id == "H" || e.id == "B6") {
    // Quaternion names: i^a j^b -> e, -e, i, -i, j, -j, k, -k, with a trailing t for the C2 factor.
    static const char* base[2][4] = {{"e", "i", "-e", "-i"}, {"j", "k", "-j", "-k"}};
    std::vector<std::string> names(g.order());
    const int tmax = e.id == "B6" ? 2 : 1;
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 2; ++b) {
        for (int t = 0; t < tmax; ++t) {
          Relator w;
          for (int k = 0; k < a; ++k) w.push_back(1);
          for (int k = 0; k < b; ++k) w.push_back(2);
          for (int k = 0; k < t; ++k) w.push_back(3);
          std::string q = base[b][a];
          if (t == 1) q = q == "e" ? "t" : q + "t";
          names[g.evaluate(w)] = q;
        }
      }
    }
    g.set_names(names);
  }
  return g;
}

}  // namespace

const std::vector<std::string>& catalogue_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : entries()) v.push_back(e.id);
    return v;
  }();
  return ids;
}

GroupPtr catalogue(const std::string& id) {
  static std::mutex m;
  static std::map<std::string, GroupPtr> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(id);
  if (it != cache.end()) return it->second;
  for (const auto& e : entries()) {
    if (e.id == id) {
      auto g = std::make_shared<const FinGroup>(build(e));
      cache[id] = g;
      return g;
    }
  }
  throw std::invalid_argument("unknown group identifier: " + id);
}

}  // namespace hopf32
