// Property checks over complete classification runs; each returns its failures.
#pragma once

#include <future>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "hopf32/classify.hpp"
#include "oracles.hpp"

namespace properties {

using namespace hopf32;
using Failures = std::vector<std::string>;

inline std::string where(const ClassificationRun& r, int m) {
  return r.group + " " + r.module_id(m) + " " + r.modules[m].description;
}

/// Runs f over every module of every run on a few threads and collects the messages.
template <typename F>
Failures over_modules(const std::vector<ClassificationRun>& runs, F f) {
  std::vector<std::pair<const ClassificationRun*, int>> items;
  for (const auto& r : runs)
    for (int m = 0; m < static_cast<int>(r.modules.size()); ++m) items.emplace_back(&r, m);
  const int workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::future<Failures>> parts;
  for (int w = 0; w < workers; ++w) {
    parts.push_back(std::async(std::launch::async, [&, w] {
      Failures out;
      for (std::size_t k = w; k < items.size(); k += workers) f(*items[k].first, items[k].second, out);
      return out;
    }));
  }
  Failures all;
  for (auto& p : parts) {
    auto part = p.get();
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

inline Failures braid_and_compatibility(const std::vector<ClassificationRun>& runs) {
  return over_modules(runs, [](const ClassificationRun& r, int m, Failures& out) {
    const auto& v = r.modules[m].module;
    if (!braid_equation_holds(v) || !oracle::braid_ok(oracle::action_of(v))) out.push_back("braid: " + where(r, m));
    if (!yd_compatible(v) || !oracle::yd_ok(v)) out.push_back("compatibility: " + where(r, m));
  });
}

inline Failures palindromic(const std::vector<ClassificationRun>& runs) {
  return over_modules(runs, [](const ClassificationRun& r, int m, Failures& out) {
    const auto& n = r.modules[m].nichols;
    if (!n.finite()) return;
    auto rev = n.hilbert;
    std::reverse(rev.begin(), rev.end());
    if (rev != n.hilbert) out.push_back("palindrome: " + where(r, m));
  });
}

/// hilbert[n] = rank of the symmetrizer for n <= 6, including the first vanishing degree.
inline Failures growth_matches_symmetrizer(const std::vector<ClassificationRun>& runs, int max_degree = 6) {
  return over_modules(runs, [max_degree](const ClassificationRun& r, int m, Failures& out) {
    const auto& e = r.modules[m];
    auto a = oracle::action_of(e.module);
    int top = std::min<int>(max_degree, static_cast<int>(e.nichols.hilbert.size()) - 1);
    if (e.nichols.finite()) top = std::min(max_degree, e.nichols.top_degree() + 1);
    for (int n = 0; n <= top; ++n) {
      long want = n < static_cast<int>(e.nichols.hilbert.size()) ? e.nichols.hilbert[n] : 0;
      long got = oracle::symmetrizer_rank(a, n);
      if (got != want) {
        out.push_back("growth: " + where(r, m) + " degree " + std::to_string(n) + ": " + std::to_string(want) +
                      " vs symmetrizer " + std::to_string(got));
      }
    }
  });
}

/// z = 0 in B(V) iff every derivation of z vanishes, against symmetrizer kernels; returns the sample count.
inline Failures derivation_zero_test(const std::vector<ClassificationRun>& runs, int& samples) {
  Failures out;
  samples = 0;
  std::mt19937 rng(2024);
  std::vector<std::pair<std::string, std::string>> picks{{"C2", "V1"},    {"C2xC2", "V2^4"}, {"D4", "Y7^1"},
                                                         {"D4", "Y7^3"},  {"D4", "Y7^4"},   {"H", "Y8^2"},
                                                         {"C4", "W3^2"}};
  for (const auto& r : runs) {
    for (const auto& [group, label] : picks) {
      if (r.group != group) continue;
      for (const auto& [m, l] : r.labels) {
        if (l != label) continue;
        const auto& v = r.modules[m].module;
        auto s = BraidedSpace::from_module(v);
        auto a = oracle::action_of(v);
        for (int n = 2; n <= 4; ++n) {
          for (int trial = 0; trial < 6; ++trial) {
            std::vector<int> letters;
            for (int k = 0; k < n; ++k) letters.push_back(static_cast<int>(rng() % v.dim));
            auto kernel = oracle::symmetrizer_kernel(a, letters);
            oracle::Tensor z;
            for (const auto& kv : kernel) {
              Cyc c = oracle::random_cyc(rng);
              for (const auto& [w, x] : kv) z[w] += c * x;
            }
            if (kernel.empty() || rng() % 2 == 0) {
              auto w = letters;
              std::shuffle(w.begin(), w.end(), rng);
              z[w] += oracle::random_cyc(rng) + Cyc(1);
            }
            for (auto it = z.begin(); it != z.end();) it = it->second.is_zero() ? z.erase(it) : std::next(it);
            ShuffleElement image;
            for (const auto& [w, c] : z) {
              ShuffleElement p = ShuffleElement::unit();
              for (int l : w) p = shuffle_product(s, p, ShuffleElement::letter(l));
              image += p.scaled(c);
            }
            bool derivations_vanish = true;
            for (int i = 0; i < v.dim; ++i) derivations_vanish = derivations_vanish && derivation(image, i).is_zero();
            bool zero = oracle::symmetrize(a, z).empty();
            ++samples;
            if (derivations_vanish != zero || image.is_zero() != zero) {
              out.push_back("derivation test: " + r.group + " " + label + " degree " + std::to_string(n));
            }
          }
        }
      }
    }
  }
  return out;
}

inline Failures qls_agreement(const std::vector<ClassificationRun>& runs) {
  return over_modules(runs, [](const ClassificationRun& r, int m, Failures& out) {
    auto s = BraidedSpace::from_module(r.modules[m].module);
    auto q = qls_dimension(s);
    if (!q || !is_quantum_linear_space(s)) return;
    auto n = nichols_dimensions(s, {40, *q + 1});
    if (!n.finite() || n.total != *q) out.push_back("qls: " + where(r, m));
  });
}

inline std::optional<LiftingProblem> lifting_problem(const ClassificationRun& r, int m) {
  try {
    return make_lifting_problem(r.modules[m].module);
  } catch (const UnsupportedLifting&) {
    return std::nullopt;
  }
}

/// Modules sent to the lifting stage.
inline Failures zero_lambda(const std::vector<ClassificationRun>& runs) {
  Failures out;
  for (const auto& r : runs) {
    for (const auto& l : r.liftings) {
      auto p = lifting_problem(r, l.module);
      if (!p) continue;
      auto c = diamond_concrete(*p, std::vector<Cyc>(p->params.size()));
      if (!c.ok() || c.expected != r.order * p->nichols_dim) out.push_back("zero lambda: " + where(r, l.module));
    }
  }
  return out;
}

inline Failures diamond_contains_chi(const std::vector<ClassificationRun>& runs) {
  Failures out;
  for (const auto& r : runs) {
    for (const auto& l : r.liftings) {
      auto p = lifting_problem(r, l.module);
      if (!p || !diagonal_matrix(p->module)) continue;
      auto d = diamond_symbolic(*p);
      for (int k : chi_constraints(*p)) {
        if (!forces_zero(d.constraints, k)) out.push_back("chi: " + where(r, l.module) + " l" + std::to_string(k + 1));
      }
    }
  }
  return out;
}

}  // namespace properties
