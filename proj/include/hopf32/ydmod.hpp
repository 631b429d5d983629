// Yetter-Drinfeld modules over group algebras.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hopf32/cyclotomic.hpp"
#include "hopf32/groups.hpp"

namespace hopf32 {

/// Label of an irreducible M(g, rho): the degree g and the trace of rho on the centralizer of g.
struct IrrepLabel {
  int g = 0;
  int degree = 1;
  std::vector<int> centralizer;
  std::vector<Cyc> trace;  // parallel to centralizer
};

struct Summand {
  IrrepLabel label;
  int offset = 0;
  int dim = 0;
};

struct YDModule {
  GroupPtr group;
  int dim = 0;
  std::vector<int> degree;     // per basis vector
  std::vector<Matrix> action;  // per group element; column j is the image of e_j
  std::vector<Summand> summands;

  const FinGroup& G() const { return *group; }
};

struct BraidingMatrix {
  Matrix b;
  std::vector<std::string> labels;
  int rank() const { return static_cast<int>(b.size()); }
};

/// Parses "-1,1;x,-1" (rows split by ';', entries by ',' or spaces).
BraidingMatrix parse_braiding_matrix(const std::string& text);
std::string render_braiding_matrix(const BraidingMatrix& m);

YDModule build_induced(GroupPtr g, int elem, const Representation& rho);
YDModule build_induced(GroupPtr g, int elem, const Character& chi);
YDModule direct_sum(const std::vector<YDModule>& parts);
YDModule zero_module(GroupPtr g);

/// c(e_i (x) e_j) = (deg(e_i) . e_j) (x) e_i as a dim^2 x dim^2 matrix, index i*dim+j.
Matrix braiding(const YDModule& v);
bool braid_equation_holds(const YDModule& v);
/// h . x is homogeneous of degree h deg(x) h^{-1} and the action is a representation.
bool yd_compatible(const YDModule& v);

std::optional<BraidingMatrix> diagonal_matrix(const YDModule& v);

YDModule twist(const YDModule& v, const GroupMap& f);
IrrepLabel twist_label(const FinGroup& g, const IrrepLabel& l, const GroupMap& f);

/// Isomorphism-class key of an irreducible: conjugacy class representative and transported trace.
std::vector<std::int64_t> canonical_key(const FinGroup& g, const IrrepLabel& l);
bool isomorphic(const YDModule& a, const YDModule& b);
std::vector<std::vector<std::int64_t>> summand_keys(const YDModule& v);

/// Lower bound on dim B(V): prod N(b_ii) on diagonal summands, and dim V + 2 when dim V >= 2.
/// Empty means infinite.
std::optional<long> nichols_lower_bound(const YDModule& v);

/// Text form of a summand, e.g. "M(g1, [1,0])" or "M(r^2, rho0)".
std::string describe(const FinGroup& g, const IrrepLabel& l);
std::string describe(const YDModule& v);

/// Permutation of the pool induced by an automorphism; throws if the pool is not stable.
std::vector<int> pool_permutation(const FinGroup& g, const std::vector<YDModule>& pool, const GroupMap& f);

/// Orbit representatives of rank-sized multisets of pool indices under Aut(G), each the
/// lexicographically least member of its orbit. Multisets whose lower bound exceeds the
/// budget are dropped.
std::vector<std::vector<int>> orbit_representatives(const FinGroup& g, const std::vector<YDModule>& pool, int rank,
                                                    long budget);

/// The orbit-minimal multiset equivalent to the given one.
std::vector<int> orbit_minimum(const FinGroup& g, const std::vector<YDModule>& pool, std::vector<int> multiset);

}  // namespace hopf32
