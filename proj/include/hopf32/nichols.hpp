// Nichols algebras of braided vector spaces of monomial type, realized in the shuffle algebra.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf32/cyclotomic.hpp"
#include "hopf32/ydmod.hpp"

namespace hopf32 {

/// deg(e_i) . e_j = z^{act[i][j].second} e_{act[i][j].first}.
struct BraidedSpace {
  int dim = 0;
  std::vector<std::vector<std::pair<int, int>>> act;

  static BraidedSpace from_matrix(const BraidingMatrix& m);
  static BraidedSpace from_module(const YDModule& v);
  /// b_ij when deg(e_i) acts on e_j by a scalar.
  std::optional<Cyc> scalar(int i, int j) const;
  bool is_diagonal() const;
};

/// Words as vectors of letters.
using Word = std::vector<int>;

/// Element of the shuffle algebra: word -> coefficient, zeros dropped.
class ShuffleElement {
 public:
  ShuffleElement() = default;
  static ShuffleElement letter(int i);
  static ShuffleElement unit();

  const std::map<Word, Cyc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Word& w, const Cyc& c);
  ShuffleElement& operator+=(const ShuffleElement& o);
  ShuffleElement& operator-=(const ShuffleElement& o);
  ShuffleElement scaled(const Cyc& c) const;
  bool operator==(const ShuffleElement& o) const { return terms_ == o.terms_; }
  std::string str() const;

 private:
  std::map<Word, Cyc> terms_;
};

/// Braided shuffle product: letters of v move left past letters of u and are acted on by their degrees.
ShuffleElement shuffle_product(const BraidedSpace& s, const ShuffleElement& u, const ShuffleElement& v);
/// deg(e_{w_1}) ... deg(e_{w_n}) acting on u letterwise, as the action of the degree of word w.
ShuffleElement act_by_word(const BraidedSpace& s, const Word& w, const ShuffleElement& u);
/// Right skew derivation: strips a trailing letter i.
ShuffleElement derivation(const ShuffleElement& u, int i);
/// Ad_{x_i}(y) = x_i y - (g_i . y) x_i.
ShuffleElement adjoint(const BraidedSpace& s, int i, const ShuffleElement& y);
/// Least m <= cap with z^m = 0, if any.
std::optional<int> nilpotency_order(const BraidedSpace& s, const ShuffleElement& z, int cap);

struct NicholsLimits {
  int degree_cap = 20;
  long dim_budget = 33;
};

struct NicholsReport {
  enum class Status { Finite, Infinite, ExceedsBudget, DegreeCap };
  Status status = Status::Finite;
  std::vector<long> hilbert;  // dim B^n for the computed degrees
  long total = 0;             // sum of hilbert
  std::map<std::string, std::optional<int>> nilpotency;  // empty value: not nilpotent within the cap
  std::optional<long> qls;
  std::optional<std::vector<std::vector<int>>> cartan;
  bool finite() const { return status == Status::Finite; }
  int top_degree() const { return static_cast<int>(hilbert.size()) - 1; }
  /// Finite dimension, or empty.
  std::optional<long> dimension() const;
  std::string status_name() const;
};

/// Degree-by-degree growth B^{n+1} = span(B^n shuffle V).
NicholsReport nichols_dimensions(const BraidedSpace& s, const NicholsLimits& limits = {});
/// nichols_dimensions plus nilpotency orders of the x_i (and z1 in rank 2), QLS and Cartan data.
NicholsReport analyze(const BraidedSpace& s, const NicholsLimits& limits = {});
/// Rank 2: Ad_{x_k}(x_l) with k the first index with b_kk = -1.
std::optional<ShuffleElement> z1_element(const BraidedSpace& s);

/// Independent oracle: rank of the quantum symmetrizer on V^{(x)n} for n <= max_degree.
std::vector<long> symmetrizer_dimensions(const BraidedSpace& s, int max_degree);

/// Diagonal type with b_ij b_ji = 1 for i != j.
bool is_quantum_linear_space(const BraidedSpace& s);
/// prod N(b_ii), empty if some N is infinite.
std::optional<long> qls_dimension(const BraidedSpace& s);
/// Generalized Cartan matrix of a diagonal braiding, if every off-diagonal entry is determined.
std::optional<std::vector<std::vector<int>>> cartan_type(const BraidedSpace& s);

}  // namespace hopf32
