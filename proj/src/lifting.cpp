#include "hopf32/lifting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "hopf32/linalg.hpp"

namespace hopf32 {

namespace {

int identity_of(const FinGroup& g) {
  for (int a = 0; a < g.order(); ++a) {
    if (g.element_order(a) == 1) return a;
  }
  throw std::logic_error("group without identity");
}

std::pair<int, int> monomial_entry(const Matrix& a, int col) {
  int found = -1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k][col].is_zero()) continue;
    if (found >= 0) throw UnsupportedLifting("group action is not monomial");
    found = static_cast<int>(k);
  }
  if (found < 0) throw std::logic_error("singular action matrix");
  auto e = a[found][col].root_index();
  if (!e) throw UnsupportedLifting("group action has a coefficient that is not a root of unity");
  return {found, *e};
}

// --- polynomial coefficients -------------------------------------------------

void poly_add(Poly& a, const Poly& b, const Cyc& s = Cyc(1)) {
  for (const auto& [m, c] : b) {
    Cyc v = s.is_one() ? c : c * s;
    auto it = a.find(m);
    if (it == a.end()) {
      if (!v.is_zero()) a.emplace(m, std::move(v));
    } else {
      it->second += v;
      if (it->second.is_zero()) a.erase(it);
    }
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      LambdaMonomial m;
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      poly_add(r, Poly{{m, ca * cb}});
    }
  }
  return r;
}

Poly constant(const Cyc& c) {
  if (c.is_zero()) return {};
  return Poly{{{}, c}};
}

std::string poly_str(const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : p) {
    if (!out.empty()) out += " + ";
    out += "(" + short_str(c) + ")";
    for (int k : m) out += "*l" + std::to_string(k + 1);
  }
  return out;
}

void elem_add(AlgElement& a, const Term& t, const Poly& p, const Cyc& s = Cyc(1)) {
  if (p.empty()) return;
  auto it = a.find(t);
  if (it == a.end()) {
    Poly q;
    poly_add(q, p, s);
    if (!q.empty()) a.emplace(t, std::move(q));
  } else {
    poly_add(it->second, p, s);
    if (it->second.empty()) a.erase(it);
  }
}

void elem_add(AlgElement& a, const AlgElement& b, const Cyc& s = Cyc(1)) {
  for (const auto& [t, p] : b) elem_add(a, t, p, s);
}

std::string scalar_factor(const Cyc& c) {
  if (c.is_one()) return "";
  if (c == Cyc(-1)) return "-";
  return "(" + short_str(c) + ")";
}

std::string gen_name(int i) { return "a" + std::to_string(i + 1); }

std::string commutator_text(int i, int j, const Cyc& b) {
  std::string s = gen_name(i) + gen_name(j);
  if (b == Cyc(-1)) return s + " + " + gen_name(j) + gen_name(i);
  if (b.is_one()) return s + " - " + gen_name(j) + gen_name(i);
  return s + " - (" + short_str(b) + ")" + gen_name(j) + gen_name(i);
}

std::vector<int> param_generators(const LiftParam& p) {
  switch (p.kind) {
    case LiftParam::Kind::Power: return {p.i};
    case LiftParam::Kind::Commutator: return {p.i, p.j};
    case LiftParam::Kind::ZPower: return {0, 1};
  }
  return {};
}

Matrix truncated_rref(Matrix m, std::vector<int>* pivots_out = nullptr) {
  auto piv = rref(m);
  m.resize(piv.size());
  if (pivots_out) *pivots_out = piv;
  return m;
}

}  // namespace

// --- templates ---------------------------------------------------------------

LiftingProblem make_lifting_problem(const YDModule& v) {
  LiftingProblem p;
  p.group = v.group;
  p.module = v;
  const FinGroup& g = v.G();
  auto diag = diagonal_matrix(v);
  if (!diag) throw UnsupportedLifting("module is not of diagonal type");
  p.braiding = *diag;
  BraidedSpace s;
  try {
    s = BraidedSpace::from_matrix(*diag);
  } catch (const std::invalid_argument& e) {
    throw UnsupportedLifting(e.what());
  }
  const int n = v.dim;
  const auto& b = diag->b;

  if (is_quantum_linear_space(s)) {
    auto d = qls_dimension(s);
    if (!d) throw UnsupportedLifting("Nichols algebra is infinite");
    p.kind = LiftingProblem::Template::Qls;
    p.nichols_dim = *d;
  } else if (n == 2 && g.is_abelian() && b[0][0] == Cyc(-1) && b[1][1] == Cyc(-1) && nq(b[0][1] * b[1][0])) {
    p.kind = LiftingProblem::Template::Pbw2;
    p.pbw_n = *nq(b[0][1] * b[1][0]);
    p.nichols_dim = 4L * p.pbw_n;
  } else {
    throw UnsupportedLifting("no relation template for this braiding");
  }

  for (int i = 0; i < n; ++i) {
    p.letter_names.push_back(gen_name(i));
    p.letter_degree.push_back(v.degree[i]);
  }
  if (p.kind == LiftingProblem::Template::Pbw2) {
    p.letter_names.push_back("z");
    p.letter_degree.push_back(g.mul(v.degree[0], v.degree[1]));
  }
  p.act.assign(g.order(), {});
  for (int h = 0; h < g.order(); ++h) {
    for (int i = 0; i < n; ++i) p.act[h].push_back(monomial_entry(v.action[h], i));
    if (p.kind == LiftingProblem::Template::Pbw2) {
      const auto& a = p.act[h];
      if (a[0].first != 0 || a[1].first != 1) throw UnsupportedLifting("group action is not diagonal");
      p.act[h].push_back({2, (a[0].second + a[1].second) % Cyc::kRootOrder});
    }
  }

  if (p.kind == LiftingProblem::Template::Qls) {
    for (int i = 0; i < n; ++i) {
      LiftParam q;
      q.kind = LiftParam::Kind::Power;
      q.i = i;
      q.exponent = *nq(b[i][i]);
      q.target = g.pow(v.degree[i], q.exponent);
      q.relation = gen_name(i) + "^" + std::to_string(q.exponent);
      p.params.push_back(q);
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        LiftParam q;
        q.kind = LiftParam::Kind::Commutator;
        q.i = i;
        q.j = j;
        q.target = g.mul(v.degree[i], v.degree[j]);
        q.relation = commutator_text(i, j, b[i][j]);
        p.params.push_back(q);
      }
    }
  } else {
    for (int i = 0; i < 2; ++i) {
      LiftParam q;
      q.kind = LiftParam::Kind::Power;
      q.i = i;
      q.exponent = 2;
      q.target = g.pow(v.degree[i], 2);
      q.relation = gen_name(i) + "^2";
      p.params.push_back(q);
    }
    LiftParam q;
    q.kind = LiftParam::Kind::ZPower;
    q.i = 0;
    q.j = 1;
    q.exponent = p.pbw_n;
    q.target = g.pow(p.letter_degree[2], p.pbw_n);
    q.relation = "(" + commutator_text(0, 1, b[0][1]) + ")^" + std::to_string(p.pbw_n);
    p.params.push_back(q);
  }

  // Isotypic components: equal one-dimensional summands share a component.
  p.component.assign(n, -1);
  std::vector<std::vector<std::int64_t>> comp_keys;
  for (const auto& sm : v.summands) {
    auto key = canonical_key(g, sm.label);
    int c = -1;
    if (sm.dim == 1) {
      for (std::size_t k = 0; k < comp_keys.size(); ++k) {
        if (!p.component_simple[k] && comp_keys[k] == key) c = static_cast<int>(k);
      }
    }
    if (c < 0) {
      c = static_cast<int>(comp_keys.size());
      comp_keys.push_back(key);
      p.component_simple.push_back(sm.dim > 1);
    }
    for (int k = 0; k < sm.dim; ++k) p.component[sm.offset + k] = c;
  }
  return p;
}

std::vector<TargetReport> primitive_targets(const LiftingProblem& p) {
  const FinGroup& g = p.G();
  const int e = identity_of(g);
  std::vector<TargetReport> out;
  for (std::size_t k = 0; k < p.params.size(); ++k) {
    TargetReport r;
    r.param = static_cast<int>(k);
    r.target = p.params[k].target;
    r.forced_zero = r.target == e;
    for (int i = 0; i < p.generators(); ++i) {
      if (p.letter_degree[i] == r.target) r.collision = true;
    }
    out.push_back(r);
  }
  return out;
}

std::vector<int> chi_constraints(const LiftingProblem& p) {
  const FinGroup& g = p.G();
  std::vector<int> out;
  if (!g.is_abelian()) return out;
  const int e = identity_of(g);
  for (std::size_t k = 0; k < p.params.size(); ++k) {
    const auto& q = p.params[k];
    if (q.target == e) continue;
    bool trivial = true;
    for (int h = 0; h < g.order(); ++h) {
      long ex = 0;
      switch (q.kind) {
        case LiftParam::Kind::Power: ex = static_cast<long>(q.exponent) * p.act[h][q.i].second; break;
        case LiftParam::Kind::Commutator: ex = p.act[h][q.i].second + p.act[h][q.j].second; break;
        case LiftParam::Kind::ZPower:
          ex = static_cast<long>(q.exponent) * (p.act[h][0].second + p.act[h][1].second);
          break;
      }
      if (ex % Cyc::kRootOrder != 0) trivial = false;
    }
    if (!trivial) out.push_back(static_cast<int>(k));
  }
  return out;
}

// --- rewriting ---------------------------------------------------------------

RewriteSystem::RewriteSystem(const LiftingProblem& p) { build(p, nullptr); }

RewriteSystem::RewriteSystem(const LiftingProblem& p, const std::vector<Cyc>& lambda) {
  if (lambda.size() != p.params.size()) throw std::invalid_argument("wrong number of parameters");
  build(p, &lambda);
}

void RewriteSystem::build(const LiftingProblem& p, const std::vector<Cyc>* lambda) {
  group_ = p.group;
  act_ = p.act;
  const FinGroup& g = p.G();
  const int e = identity_of(g);
  const auto& b = p.braiding.b;

  auto param = [&](int k, const Cyc& c) -> Poly {
    if (lambda) return constant(c * (*lambda)[k]);
    return Poly{{{k}, c}};
  };
  // l_k (t - 1)
  auto deformation = [&](int k, int t) {
    AlgElement r;
    elem_add(r, Term{t, {}}, param(k, Cyc(1)));
    elem_add(r, Term{e, {}}, param(k, Cyc(-1)));
    return r;
  };

  if (p.kind == LiftingProblem::Template::Qls) {
    for (std::size_t k = 0; k < p.params.size(); ++k) {
      const auto& q = p.params[k];
      if (q.kind == LiftParam::Kind::Power) {
        rules_.push_back({Word(q.exponent, q.i), deformation(static_cast<int>(k), q.target)});
      } else {
        // a_j a_i -> b_ji a_i a_j - b_ji l (h_i h_j - 1)
        const Cyc& bji = b[q.j][q.i];
        AlgElement r;
        elem_add(r, Term{e, {q.i, q.j}}, constant(bji));
        elem_add(r, deformation(static_cast<int>(k), q.target), -bji);
        rules_.push_back({Word{q.j, q.i}, r});
      }
    }
    return;
  }

  // Rank two with z = a1 a2 - b12 a2 a1 as a third letter.
  const Cyc b12 = b[0][1];
  const Cyc inv = b12.inv();
  const int x = 0, y = 1, z = 2;
  AlgElement h1 = deformation(0, p.params[0].target);
  AlgElement h2 = deformation(1, p.params[1].target);
  rules_.push_back({Word{x, x}, h1});
  rules_.push_back({Word{y, y}, h2});
  {
    AlgElement r;
    elem_add(r, Term{e, {x, y}}, constant(inv));
    elem_add(r, Term{e, {z}}, constant(-inv));
    rules_.push_back({Word{y, x}, r});
  }
  {
    AlgElement r;
    elem_add(r, splice({}, h1, {y}), inv);
    elem_add(r, Term{e, {x, z}}, constant(-inv));
    elem_add(r, splice({y}, h1, {}), -b12);
    rules_.push_back({Word{z, x}, r});
  }
  {
    AlgElement r;
    elem_add(r, splice({x}, h2, {}));
    elem_add(r, Term{e, {y, z}}, constant(-b12));
    elem_add(r, splice({}, h2, {x}), -(b12 * b12));
    rules_.push_back({Word{z, y}, r});
  }
  rules_.push_back({Word(p.pbw_n, z), deformation(2, p.params[2].target)});
}

AlgElement RewriteSystem::splice(const Word& u, const AlgElement& r, const Word& v) const {
  const FinGroup& g = *group_;
  AlgElement out;
  for (const auto& [t, c] : r) {
    int hinv = g.inv(t.first);
    Word w;
    w.reserve(u.size() + t.second.size() + v.size());
    long ex = 0;
    for (int l : u) {
      w.push_back(act_[hinv][l].first);
      ex += act_[hinv][l].second;
    }
    w.insert(w.end(), t.second.begin(), t.second.end());
    w.insert(w.end(), v.begin(), v.end());
    elem_add(out, Term{t.first, std::move(w)}, c, Cyc::zeta(ex));
  }
  return out;
}

AlgElement RewriteSystem::conjugate(int h, const AlgElement& e) const {
  const FinGroup& g = *group_;
  AlgElement out;
  for (const auto& [t, c] : e) {
    Word w;
    long ex = 0;
    for (int l : t.second) {
      w.push_back(act_[h][l].first);
      ex += act_[h][l].second;
    }
    elem_add(out, Term{g.conj(h, t.first), std::move(w)}, c, Cyc::zeta(ex));
  }
  return out;
}

std::optional<std::pair<int, std::size_t>> RewriteSystem::find_redex(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      const Word& l = rules_[r].lhs;
      if (pos + l.size() <= w.size() && std::equal(l.begin(), l.end(), w.begin() + pos)) {
        return std::make_pair(static_cast<int>(r), pos);
      }
    }
  }
  return std::nullopt;
}

AlgElement RewriteSystem::normal_form(AlgElement e) const {
  const FinGroup& g = *group_;
  AlgElement done;
  while (!e.empty()) {
    auto it = std::prev(e.end());  // longest, lexicographically largest words first
    Term t = it->first;
    Poly c = std::move(it->second);
    e.erase(it);
    auto redex = find_redex(t.second);
    if (!redex) {
      elem_add(done, t, c);
      continue;
    }
    const Rule& rule = rules_[redex->first];
    Word u(t.second.begin(), t.second.begin() + static_cast<long>(redex->second));
    Word v(t.second.begin() + static_cast<long>(redex->second + rule.lhs.size()), t.second.end());
    for (const auto& [nt, nc] : splice(u, rule.rhs, v)) {
      Term moved{g.mul(t.first, nt.first), nt.second};
      Poly q = poly_mul(c, nc);
      if (find_redex(moved.second)) {
        elem_add(e, moved, q);
      } else {
        elem_add(done, moved, q);
      }
    }
  }
  return done;
}

std::vector<AlgElement> RewriteSystem::ambiguity_residues() const {
  const FinGroup& g = *group_;
  const int e = identity_of(g);
  std::vector<AlgElement> out;
  auto record = [&](const AlgElement& a, const AlgElement& b) {
    AlgElement d = normal_form(a);
    elem_add(d, normal_form(b), Cyc(-1));
    if (!d.empty()) out.push_back(std::move(d));
  };
  for (std::size_t r1 = 0; r1 < rules_.size(); ++r1) {
    const Word& l1 = rules_[r1].lhs;
    for (std::size_t r2 = 0; r2 < rules_.size(); ++r2) {
      const Word& l2 = rules_[r2].lhs;
      for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k) {
        if (!std::equal(l1.end() - static_cast<long>(k), l1.end(), l2.begin())) continue;
        Word tail(l2.begin() + static_cast<long>(k), l2.end());
        Word head(l1.begin(), l1.end() - static_cast<long>(k));
        record(splice({}, rules_[r1].rhs, tail), splice(head, rules_[r2].rhs, {}));
      }
      if (r1 != r2 && l2.size() <= l1.size()) {
        for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
          if (!std::equal(l2.begin(), l2.end(), l1.begin() + static_cast<long>(pos))) continue;
          Word head(l1.begin(), l1.begin() + static_cast<long>(pos));
          Word tail(l1.begin() + static_cast<long>(pos + l2.size()), l1.end());
          record(rules_[r1].rhs, splice(head, rules_[r2].rhs, tail));
        }
      }
    }
  }
  for (int h = 0; h < g.order(); ++h) {
    if (h == e) continue;
    for (const auto& rule : rules_) {
      AlgElement lhs;
      elem_add(lhs, Term{e, rule.lhs}, constant(Cyc(1)));
      record(conjugate(h, lhs), conjugate(h, rule.rhs));
    }
  }
  return out;
}

long RewriteSystem::count_irreducible_words(long cap) const {
  const int letters = act_.empty() ? 0 : static_cast<int>(act_[0].size());
  std::vector<Word> level{Word{}};
  long count = 1;
  while (!level.empty() && count <= cap) {
    std::vector<Word> next;
    for (const auto& w : level) {
      for (int l = 0; l < letters; ++l) {
        Word nw = w;
        nw.push_back(l);
        bool reducible = false;
        for (const auto& rule : rules_) {
          const Word& lhs = rule.lhs;
          if (lhs.size() <= nw.size() && std::equal(lhs.rbegin(), lhs.rend(), nw.rbegin())) {
            reducible = true;
            break;
          }
        }
        if (!reducible) next.push_back(std::move(nw));
      }
    }
    count += static_cast<long>(next.size());
    level.swap(next);
  }
  return count;
}

// --- constraints -------------------------------------------------------------

namespace {

// Substitutes l_k -> sub[k] (polynomials in new variables) into p.
Poly substitute(const Poly& p, const std::vector<Poly>& sub) {
  Poly r;
  for (const auto& [m, c] : p) {
    Poly t = constant(c);
    for (int k : m) t = poly_mul(t, sub[k]);
    poly_add(r, t);
  }
  return r;
}

struct Solution {
  Matrix rows;               // reduced echelon constraints
  std::vector<int> pivots;
  std::vector<int> free;
  std::vector<std::vector<Cyc>> basis;  // one vector per free parameter
};

Solution solve(const std::vector<std::vector<Cyc>>& constraints, int m) {
  Solution s;
  std::vector<int> piv;
  s.rows = constraints.empty() ? Matrix{} : truncated_rref(Matrix(constraints.begin(), constraints.end()), &piv);
  s.pivots = piv;
  for (int k = 0; k < m; ++k) {
    if (std::find(piv.begin(), piv.end(), k) == piv.end()) s.free.push_back(k);
  }
  for (int f : s.free) {
    std::vector<Cyc> v(m);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -s.rows[r][f];
    s.basis.push_back(std::move(v));
  }
  return s;
}

}  // namespace

DiamondReport diamond_symbolic(const LiftingProblem& p) {
  const int m = static_cast<int>(p.params.size());
  RewriteSystem rs(p);
  DiamondReport rep;
  std::vector<std::vector<Cyc>> linear;
  std::vector<Poly> nonlinear;
  for (const auto& res : rs.ambiguity_residues()) {
    for (const auto& [t, poly] : res) {
      std::vector<Cyc> row(m);
      bool lin = true, any = false;
      for (const auto& [mono, c] : poly) {
        if (mono.empty()) {
          rep.consistent = false;
        } else if (mono.size() == 1) {
          row[mono[0]] += c;
          any = true;
        } else {
          lin = false;
        }
      }
      if (!lin) {
        nonlinear.push_back(poly);
      } else if (any) {
        linear.push_back(std::move(row));
      }
    }
  }
  Solution s = solve(linear, m);
  rep.constraints = s.rows;
  // A nonlinear residue is harmless if it vanishes on the linear solution space.
  std::vector<Poly> sub(m);
  for (std::size_t f = 0; f < s.basis.size(); ++f) {
    for (int k = 0; k < m; ++k) {
      if (!s.basis[f][k].is_zero()) poly_add(sub[k], Poly{{{static_cast<int>(f)}, s.basis[f][k]}});
    }
  }
  for (const auto& poly : nonlinear) {
    if (!substitute(poly, sub).empty()) rep.nonlinear.push_back(poly_str(poly));
  }
  return rep;
}

ConcreteCheck diamond_concrete(const LiftingProblem& p, const std::vector<Cyc>& lambda) {
  RewriteSystem rs(p, lambda);
  ConcreteCheck c;
  c.confluent = rs.ambiguity_residues().empty();
  const long order = p.G().order();
  c.expected = order * p.nichols_dim;
  c.words = order * rs.count_irreducible_words(2 * p.nichols_dim + 1);
  return c;
}

bool forces_zero(const std::vector<std::vector<Cyc>>& rows, int k) {
  if (rows.empty()) return false;
  Matrix m(rows.begin(), rows.end());
  int r = rank(m);
  std::vector<Cyc> unit(rows[0].size());
  unit.at(k) = 1;
  m.push_back(unit);
  return rank(m) == r;
}

// --- classification ----------------------------------------------------------

namespace {

std::string lambda_name(int k) { return "l" + std::to_string(k + 1); }

std::string constraint_str(const std::vector<Cyc>& row) {
  std::string out;
  for (std::size_t k = 0; k < row.size(); ++k) {
    const Cyc& c = row[k];
    if (c.is_zero()) continue;
    bool neg = c.is_rational() && c.coeff(0) < 0;
    Cyc a = neg ? -c : c;
    std::string term = (a.is_one() ? "" : "(" + short_str(a) + ")") + lambda_name(static_cast<int>(k));
    if (out.empty()) {
      out = (neg ? "-" : "") + term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out + " = 0";
}

std::string target_text(const LiftingProblem& p, int target) {
  return p.G().name(target) + " - 1";
}

// Permutation pi with W e_i -> c_i V e_{pi(i)} intertwining, if one exists.
std::optional<std::vector<int>> monomial_intertwiner(const YDModule& w, const YDModule& v) {
  const int n = v.dim;
  const FinGroup& g = v.G();
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = w.degree[i] == v.degree[pi[i]];
    if (!ok) continue;
    std::vector<int> c(n, -1);  // scalars as z-exponents
    for (int start = 0; start < n && ok; ++start) {
      if (c[start] >= 0) continue;
      c[start] = 0;
      std::vector<int> stack{start};
      while (!stack.empty() && ok) {
        int i = stack.back();
        stack.pop_back();
        for (int h : g.generators()) {
          auto [si, ew] = monomial_entry(w.action[h], i);
          auto [ti, ev] = monomial_entry(v.action[h], pi[i]);
          if (pi[si] != ti) {
            ok = false;
            break;
          }
          int want = ((c[i] + ev - ew) % Cyc::kRootOrder + Cyc::kRootOrder) % Cyc::kRootOrder;
          if (c[si] < 0) {
            c[si] = want;
            stack.push_back(si);
          } else if (c[si] != want) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) return pi;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return std::nullopt;
}

int param_index(const LiftingProblem& p, LiftParam::Kind kind, std::vector<int> gens) {
  std::sort(gens.begin(), gens.end());
  for (std::size_t k = 0; k < p.params.size(); ++k) {
    if (p.params[k].kind != kind) continue;
    auto pg = param_generators(p.params[k]);
    std::sort(pg.begin(), pg.end());
    if (pg == gens) return static_cast<int>(k);
  }
  return -1;
}

// A free direction of the parameter space and how the normalizations see it.
struct Coordinate {
  std::vector<Cyc> vec;
  std::vector<int> weight;  // torus character
  std::set<int> support;
};

struct GlFactor {
  int block = -1, other = -1;  // other >= 0 for a cross link
  int max_rank = 0;
  std::vector<int> block_gens, other_gens;
};

}  // namespace

LiftingFamily classify_liftings(const LiftingProblem& p) {
  const int m = static_cast<int>(p.params.size());
  const FinGroup& g = p.G();
  LiftingFamily fam;
  const int e = identity_of(g);
  for (int k = 0; k < m; ++k) {
    std::string rhs = p.params[k].target == e ? "0"
                                              : lambda_name(k) + "(" + target_text(p, p.params[k].target) + ")";
    fam.parameters.push_back(lambda_name(k) + ": " + p.params[k].relation + " = " + rhs);
  }

  auto targets = primitive_targets(p);
  auto chi = chi_constraints(p);
  auto diamond = diamond_symbolic(p);
  if (!diamond.consistent) throw std::logic_error("bosonization relations are not confluent");
  if (!diamond.nonlinear.empty()) throw UnsupportedLifting("nonlinear compatibility condition: " + diamond.nonlinear[0]);

  std::vector<std::vector<Cyc>> rows = diamond.constraints;
  auto unit_row = [&](int k) {
    std::vector<Cyc> r(m);
    r[k] = 1;
    return r;
  };
  for (const auto& t : targets) {
    if (t.forced_zero) rows.push_back(unit_row(t.param));
  }
  for (int k : chi) rows.push_back(unit_row(k));
  Solution sol = solve(rows, m);
  for (const auto& t : targets) {
    if (t.collision && !t.forced_zero && !forces_zero(sol.rows, t.param)) {
      throw UnsupportedLifting("relation " + p.params[t.param].relation + " lands in a space with extra primitives");
    }
  }
  for (const auto& r : sol.rows) fam.forced.push_back(constraint_str(r));
  fam.free_dimension = static_cast<int>(sol.free.size());

  auto finish_zero = [&]() {
    fam.count = 1;
    fam.representatives = {std::vector<Cyc>(m)};
  };
  if (fam.free_dimension == 0) {
    finish_zero();
  } else {
    // Components and their sizes.
    const int ncomp = static_cast<int>(p.component_simple.size());
    std::vector<std::vector<int>> comp_gens(ncomp);
    for (int i = 0; i < p.generators(); ++i) comp_gens[p.component[i]].push_back(i);
    auto is_gl = [&](int c) { return !p.component_simple[c] && comp_gens[c].size() > 1; };

    // Units: torus weight classes, and GL self or cross units.
    std::map<std::vector<int>, std::vector<int>> torus_units;
    std::map<std::pair<int, int>, std::vector<int>> gl_units;  // (block, other or -1)
    for (int k = 0; k < m; ++k) {
      auto gens = param_generators(p.params[k]);
      std::vector<int> comps;
      for (int i : gens) comps.push_back(p.component[i]);
      bool gl = std::any_of(comps.begin(), comps.end(), is_gl);
      if (!gl) {
        std::vector<int> w(ncomp);
        int mult = p.params[k].kind == LiftParam::Kind::Commutator ? 1 : p.params[k].exponent;
        for (int c : comps) w[c] += mult;
        torus_units[w].push_back(k);
      } else if (comps.size() == 1 || comps[0] == comps[1]) {
        gl_units[{comps[0], -1}].push_back(k);
      } else {
        int a = comps[0], b = comps[1];
        if (!is_gl(a) || (is_gl(b) && b < a)) std::swap(a, b);
        gl_units[{a, b}].push_back(k);
      }
    }
    auto project = [&](const std::vector<int>& params) {
      Matrix mtx;
      for (const auto& v : sol.basis) {
        std::vector<Cyc> r(m);
        for (int k : params) r[k] = v[k];
        mtx.push_back(r);
      }
      return truncated_rref(mtx);
    };
    int total = 0;
    std::vector<Coordinate> coords;
    for (const auto& [w, params] : torus_units) {
      Matrix b = project(params);
      total += static_cast<int>(b.size());
      for (auto& r : b) {
        Coordinate c;
        c.vec = r;
        c.weight = w;
        for (int k = 0; k < m; ++k) {
          if (!r[k].is_zero()) c.support.insert(k);
        }
        coords.push_back(std::move(c));
      }
    }
    std::vector<GlFactor> gls;
    std::set<int> linked;
    for (const auto& [key, params] : gl_units) {
      Matrix b = project(params);
      total += static_cast<int>(b.size());
      if (b.empty()) continue;
      if (b.size() != params.size()) throw UnsupportedLifting("constraints cut an isotypic block partially");
      GlFactor f;
      f.block = key.first;
      f.other = key.second;
      f.block_gens = comp_gens[f.block];
      if (f.other < 0) {
        f.max_rank = static_cast<int>(f.block_gens.size());
      } else {
        f.other_gens = comp_gens[f.other];
        f.max_rank = static_cast<int>(std::min(f.block_gens.size(), f.other_gens.size()));
      }
      gls.push_back(f);
    }
    if (total != fam.free_dimension) throw UnsupportedLifting("parameter space is not a sum of weight spaces");
    // A cross link must be the only free data on both of its ends.
    for (const auto& f : gls) {
      if (f.other < 0) continue;
      for (int end : {f.block, f.other}) {
        int uses = 0;
        for (const auto& h : gls) uses += (h.block == end || h.other == end) ? 1 : 0;
        for (const auto& c : coords) {
          for (int k : c.support) {
            for (int i : param_generators(p.params[k])) uses += p.component[i] == end ? 1 : 0;
          }
        }
        if (uses != 1) throw UnsupportedLifting("isotypic block linked to more than one free parameter family");
      }
    }

    // Classes: support subsets of the torus coordinates times ranks of the GL factors.
    const int nc = static_cast<int>(coords.size());
    std::vector<int> radix;
    for (const auto& f : gls) radix.push_back(f.max_rank + 1);
    long n_classes = 1L << nc;
    for (int r : radix) n_classes *= r;
    auto decode = [&](long idx) {
      std::vector<int> t(nc + gls.size());
      for (int c = 0; c < nc; ++c) t[c] = (idx >> c) & 1;
      idx >>= nc;
      for (std::size_t f = 0; f < gls.size(); ++f) {
        t[nc + f] = static_cast<int>(idx % radix[f]);
        idx /= radix[f];
      }
      return t;
    };
    auto encode = [&](const std::vector<int>& t) {
      long idx = 0, mul = 1L << nc;
      for (int c = 0; c < nc; ++c) idx |= static_cast<long>(t[c]) << c;
      for (std::size_t f = 0; f < gls.size(); ++f) {
        idx += mul * t[nc + f];
        mul *= radix[f];
      }
      return idx;
    };
    auto finite = [&](const std::vector<int>& t) {
      Matrix w;
      for (int c = 0; c < nc; ++c) {
        if (!t[c]) continue;
        std::vector<Cyc> r;
        for (int x : coords[c].weight) r.push_back(Cyc(static_cast<long>(x)));
        w.push_back(r);
      }
      return w.empty() || rank(w) == static_cast<int>(w.size());
    };

    // Automorphisms of G fixing V act on the classes.
    std::vector<std::vector<int>> class_maps;  // per symmetry: coordinate perm then factor perm
    std::set<std::vector<int>> param_perms;
    bool nonmonomial = false, unmatched = false;
    for (const auto& f : automorphisms(g)) {
      if (f.is_identity()) continue;
      YDModule w = twist(p.module, f);
      if (!isomorphic(w, p.module)) continue;
      auto pi = monomial_intertwiner(w, p.module);
      if (!pi || (p.kind == LiftingProblem::Template::Pbw2 && ((*pi)[0] != 0))) {
        nonmonomial = true;
        continue;
      }
      std::vector<int> sigma(m);
      for (int k = 0; k < m; ++k) {
        std::vector<int> img;
        for (int i : param_generators(p.params[k])) img.push_back((*pi)[i]);
        sigma[k] = param_index(p, p.params[k].kind, img);
      }
      param_perms.insert(sigma);
      std::vector<int> cmap(nc + gls.size(), -1);
      for (int c = 0; c < nc; ++c) {
        std::set<int> img;
        for (int k : coords[c].support) img.insert(sigma[k]);
        for (int d = 0; d < nc; ++d) {
          if (coords[d].support == img) cmap[c] = d;
        }
      }
      for (std::size_t a = 0; a < gls.size(); ++a) {
        int cb = p.component[(*pi)[gls[a].block_gens[0]]];
        int co = gls[a].other < 0 ? -1 : p.component[(*pi)[gls[a].other_gens[0]]];
        for (std::size_t b = 0; b < gls.size(); ++b) {
          if ((gls[b].block == cb && gls[b].other == co) || (gls[b].block == co && gls[b].other == cb)) {
            cmap[nc + a] = static_cast<int>(nc + b);
          }
        }
      }
      if (std::find(cmap.begin(), cmap.end(), -1) != cmap.end()) {
        unmatched = true;
        continue;
      }
      class_maps.push_back(cmap);
    }
    if (nonmonomial && fam.free_dimension > 1) {
      throw UnsupportedLifting("an automorphism fixing the module has no monomial intertwiner");
    }

    std::vector<long> parent(n_classes);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<long(long)> root = [&](long x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    bool any_infinite = false;
    for (long idx = 0; idx < n_classes; ++idx) {
      auto t = decode(idx);
      if (!finite(t)) any_infinite = true;
      for (const auto& cm : class_maps) {
        std::vector<int> u(t.size());
        for (std::size_t a = 0; a < t.size(); ++a) u[cm[a]] = t[a];
        long a = root(idx), b = root(encode(u));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    if (unmatched && !any_infinite) throw UnsupportedLifting("symmetry does not preserve the parameter coordinates");

    auto lambda_of = [&](const std::vector<int>& t) {
      std::vector<Cyc> lam(m);
      for (int c = 0; c < nc; ++c) {
        if (!t[c]) continue;
        for (int k = 0; k < m; ++k) lam[k] += coords[c].vec[k];
      }
      for (std::size_t f = 0; f < gls.size(); ++f) {
        const auto& gf = gls[f];
        for (int r = 0; r < t[nc + f]; ++r) {
          int k = gf.other < 0 ? param_index(p, LiftParam::Kind::Power, {gf.block_gens[r]})
                               : param_index(p, LiftParam::Kind::Commutator, {gf.block_gens[r], gf.other_gens[r]});
          lam[k] = 1;
        }
      }
      return lam;
    };
    long orbits = 0;
    for (long idx = 0; idx < n_classes; ++idx) {
      if (root(idx) != idx) continue;
      ++orbits;
      auto t = decode(idx);
      if (finite(t)) fam.representatives.push_back(lambda_of(t));
    }
    if (any_infinite) {
      fam.count.reset();
      std::string lhs, rhs;
      for (int c = 0; c < nc; ++c) {
        std::string name = lambda_name(*coords[c].support.begin());
        std::string scale;
        for (int x = 0; x < ncomp; ++x) {
          int e = coords[c].weight[x];
          if (e == 0) continue;
          scale += "s" + std::to_string(x + 1) + (e > 1 ? "^" + std::to_string(e) : "") + " ";
        }
        lhs += (lhs.empty() ? "" : ", ") + name;
        rhs += (rhs.empty() ? "" : ", ") + scale + name;
      }
      fam.quotient = "(" + lhs + ") ~ (" + rhs + ")";
    } else {
      fam.count = orbits;
    }
    for (const auto& sigma : param_perms) {
      std::string cyc;
      std::vector<bool> seen(m);
      for (int k = 0; k < m; ++k) {
        if (seen[k] || sigma[k] == k) continue;
        std::string c;
        for (int x = k; !seen[x]; x = sigma[x]) {
          seen[x] = true;
          c += (c.empty() ? "" : " ") + lambda_name(x);
        }
        cyc += "(" + c + ")";
      }
      if (!cyc.empty() && fam.symmetry.find(cyc) == std::string::npos) {
        fam.symmetry += (fam.symmetry.empty() ? "" : ", ") + cyc;
      }
    }
  }

  for (const auto& lam : fam.representatives) {
    if (!diamond_concrete(p, lam).ok()) throw std::logic_error("representative fails the diamond check");
    fam.representative_relations.push_back(render_relations(p, lam));
  }
  return fam;
}

std::string render_relations(const LiftingProblem& p, const std::vector<Cyc>& lambda) {
  std::string out;
  for (std::size_t k = 0; k < p.params.size(); ++k) {
    const auto& q = p.params[k];
    std::string rhs = "0";
    if (!lambda[k].is_zero()) {
      std::string t = target_text(p, q.target);
      rhs = lambda[k].is_one() ? t : scalar_factor(lambda[k]) + "(" + t + ")";
    }
    out += (out.empty() ? "" : "; ") + q.relation + " = " + rhs;
  }
  return out;
}

}  // namespace hopf32
