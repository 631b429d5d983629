// Liftings of bosonizations B(V)#kG: relation templates, diamond-lemma checks, isomorphism counts.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopf32/cyclotomic.hpp"
#include "hopf32/nichols.hpp"
#include "hopf32/ydmod.hpp"

namespace hopf32 {

class UnsupportedLifting : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One deformation parameter l_k of a relation template.
struct LiftParam {
  enum class Kind { Power, Commutator, ZPower };
  Kind kind = Kind::Power;
  int i = 0, j = 0;   // generators involved (j unused for powers)
  int exponent = 2;   // N for powers
  int target = 0;     // group-like g with relation in P_g
  std::string relation;  // left side, e.g. "a1^2" or "a1a2 + a2a1"
};

struct LiftingProblem {
  enum class Template { Qls, Pbw2 };
  GroupPtr group;
  YDModule module;
  BraidingMatrix braiding;
  Template kind = Template::Qls;
  long nichols_dim = 0;
  int pbw_n = 0;  // nilpotency order of z for Pbw2

  // Letters of the rewrite system: the generators a_i, plus z for Pbw2.
  std::vector<std::string> letter_names;
  std::vector<int> letter_degree;
  std::vector<std::vector<std::pair<int, int>>> act;  // act[g][letter] = (letter', z-exponent)
  std::vector<LiftParam> params;
  std::vector<int> component;  // isotypic component of each generator
  std::vector<bool> component_simple;  // true for components of one irreducible of dimension > 1

  int generators() const { return module.dim; }
  const FinGroup& G() const { return *group; }
};

/// Builds the relation template; throws UnsupportedLifting outside the quantum-linear-space and
/// rank-two PBW shapes.
LiftingProblem make_lifting_problem(const YDModule& v);

struct TargetReport {
  int param = 0;
  int target = 0;
  bool forced_zero = false;  // target is 1
  bool collision = false;    // target equals the degree of a generator
};
std::vector<TargetReport> primitive_targets(const LiftingProblem& p);

/// Parameters forced to 0 by a nontrivial character product (abelian groups; empty otherwise).
std::vector<int> chi_constraints(const LiftingProblem& p);

// Coefficients are polynomials in the parameters: sorted index multiset -> scalar.
using LambdaMonomial = std::vector<int>;
using Poly = std::map<LambdaMonomial, Cyc>;
using Term = std::pair<int, Word>;  // group element, word in the letters
using AlgElement = std::map<Term, Poly>;

struct Rule {
  Word lhs;
  AlgElement rhs;
};

class RewriteSystem {
 public:
  explicit RewriteSystem(const LiftingProblem& p);
  /// Rules with the parameters replaced by the given values.
  RewriteSystem(const LiftingProblem& p, const std::vector<Cyc>& lambda);

  const std::vector<Rule>& rules() const { return rules_; }
  AlgElement normal_form(AlgElement e) const;
  /// u * r * v with group elements moved to the front.
  AlgElement splice(const Word& u, const AlgElement& r, const Word& v) const;
  /// g . e, with g(h, w) = (g h g^-1, g . w).
  AlgElement conjugate(int g, const AlgElement& e) const;
  /// Normal-form differences over all overlap, inclusion and group ambiguities.
  std::vector<AlgElement> ambiguity_residues() const;
  /// Words in the letters avoiding every left side; stops past cap.
  long count_irreducible_words(long cap) const;

 private:
  void build(const LiftingProblem& p, const std::vector<Cyc>* lambda);
  std::optional<std::pair<int, std::size_t>> find_redex(const Word& w) const;

  GroupPtr group_;
  std::vector<std::vector<std::pair<int, int>>> act_;
  std::vector<Rule> rules_;
};

struct DiamondReport {
  std::vector<std::vector<Cyc>> constraints;  // rows r with sum_k r[k] l_k = 0, reduced echelon form
  bool consistent = true;                     // false if a residue has a nonzero constant term
  std::vector<std::string> nonlinear;         // residues of degree > 1 not implied by the linear ones
};
DiamondReport diamond_symbolic(const LiftingProblem& p);

struct ConcreteCheck {
  bool confluent = false;
  long words = 0;
  long expected = 0;
  bool ok() const { return confluent && words == expected; }
};
/// Confluence at the given values, and (irreducible words) x |G| = |G| dim B(V).
ConcreteCheck diamond_concrete(const LiftingProblem& p, const std::vector<Cyc>& lambda);

/// True when the constraints force l_k = 0.
bool forces_zero(const std::vector<std::vector<Cyc>>& rref_rows, int k);

struct LiftingFamily {
  std::vector<std::string> parameters;  // "l1: a1^2 = l1(g^2 - 1)"
  std::vector<std::string> forced;      // "l1 = 0", "l1 - l2 = 0"
  int free_dimension = 0;
  std::optional<long> count;            // empty means infinitely many classes
  std::vector<std::vector<Cyc>> representatives;
  std::vector<std::string> representative_relations;
  std::string symmetry;
  std::string quotient;
  bool infinite() const { return !count.has_value(); }
};

/// Forced constraints, then classes of the free parameters under rescaling, base change on
/// isotypic blocks and automorphisms of G fixing V.
LiftingFamily classify_liftings(const LiftingProblem& p);

/// Relations of the lifting with the given parameter values, e.g. "a1^2 = g^2 - 1".
std::string render_relations(const LiftingProblem& p, const std::vector<Cyc>& lambda);

}  // namespace hopf32
