// Finite groups of order <= 16 as multiplication tables.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopf32/cyclotomic.hpp"

namespace hopf32 {

using Matrix = std::vector<std::vector<Cyc>>;

Matrix identity_matrix(int n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Cyc trace(const Matrix& m);

/// A relator is a word in generator indices; -(k+1) denotes g_k^{-1}, k+1 denotes g_k.
using Relator = std::vector<int>;

/// Parses "g1^8", "g2*g1*g2*g1^3", "[g1,g2]" or "[g3,g2]*g1^2" against generator names.
Relator parse_relator(const std::string& text, const std::vector<std::string>& gen_names);

class FinGroup {
 public:
  /// Builds the group from a presentation by coset enumeration over the trivial subgroup.
  static FinGroup from_presentation(std::string id, std::vector<std::string> gen_names,
                                    std::vector<Relator> relators);

  const std::string& id() const { return id_; }
  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj(int t, int g) const { return mul(mul(t, g), inv(t)); }
  int pow(int a, long n) const;
  int element_order(int a) const { return orders_[a]; }
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(const std::string& name) const;
  int element(const std::string& name) const;

  const std::vector<int>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return gen_names_; }
  const std::vector<Relator>& relators() const { return relators_; }
  /// Shortest word (signed generator indices) reaching each element.
  const std::vector<int>& word(int a) const { return words_[a]; }
  int evaluate(const Relator& w) const;
  bool is_abelian() const;

  std::vector<std::vector<int>> conjugacy_classes() const;
  int class_representative(int g) const;
  std::vector<int> centralizer(int g) const;
  std::vector<int> center() const;
  std::vector<int> commutator_subgroup() const;
  /// Subgroup generated by the given elements, sorted.
  std::vector<int> closure(const std::vector<int>& gens) const;

  void set_names(std::vector<std::string> names) { names_ = std::move(names); }

 private:
  std::string id_;
  std::vector<std::string> gen_names_;
  std::vector<Relator> relators_;
  std::vector<int> generators_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<int> orders_;
  std::vector<std::vector<int>> words_;
  std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const FinGroup>;

/// Catalogue identifiers accepted by catalogue().
const std::vector<std::string>& catalogue_ids();
/// Cached catalogue group; throws std::invalid_argument for unknown names.
GroupPtr catalogue(const std::string& id);

/// Abelianization G/[G,G] with the projection G -> G_ab.
struct Abelianization {
  std::vector<std::vector<int>> cosets;
  std::vector<int> projection;
};
Abelianization abelianization(const FinGroup& g);

/// Linear character with values z^exps[g]; exps[g] = -1 off the domain subgroup.
struct Character {
  std::vector<int> exps;
  Cyc value(int g) const { return Cyc::zeta(exps.at(g)); }
  bool defined(int g) const { return exps.at(g) >= 0; }
  bool operator==(const Character& o) const { return exps == o.exps; }
};

/// All linear characters of the subgroup H of G (all of G when H is empty).
std::vector<Character> linear_characters(const FinGroup& g, const std::vector<int>& subgroup = {});

/// Character of an abelian catalogue group: ghat_j(g_k) = alpha_j^{delta_jk}, raised to exps[j].
Character abelian_character(const FinGroup& g, const std::vector<int>& gen_exponents);

/// Representation of a subgroup; matrices[g] is empty off the domain.
struct Representation {
  int degree = 0;
  std::vector<Matrix> matrices;
  bool defined(int g) const { return !matrices.at(g).empty(); }
  std::vector<int> domain() const;
};

Representation from_character(const Character& chi);
/// Extends generator matrices to the whole group; throws if the relators fail.
Representation representation_from_generators(const FinGroup& g, const std::vector<Matrix>& gen_mats);
/// The degree-2 irreducible representations used for D4 and H.
std::vector<Representation> tabulated_irreps(const FinGroup& g);

struct GroupMap {
  std::vector<int> images;
  int operator()(int g) const { return images[g]; }
  GroupMap inverse() const;
  GroupMap compose(const GroupMap& inner) const;  // this o inner
  bool is_identity() const;
  bool operator==(const GroupMap& o) const { return images == o.images; }
  bool operator<(const GroupMap& o) const { return images < o.images; }
};

/// Full automorphism group by generator-image search, identity first. Cached per group id.
const std::vector<GroupMap>& automorphisms(const FinGroup& g);
/// A small generating set of automorphisms(g).
const std::vector<GroupMap>& automorphism_generators(const FinGroup& g);

}  // namespace hopf32
